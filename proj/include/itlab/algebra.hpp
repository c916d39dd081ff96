#pragma once

#include "matrix.hpp"
#include "quiver.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <set>

namespace itlab {

// Multiplication table of a finite-dimensional basic algebra, together with
// enough combinatorial data (paths, generators, words) to build modules over
// it.  Convention throughout: products compose right to left, so b_i * b_j
// means "b_j first, then b_i", and a stored word [g0, g1, ..., gk] in
// traversal order denotes the product g_k * ... * g_1 * g_0.
template <class F>
struct AlgebraTable : std::enable_shared_from_this<AlgebraTable<F>> {
    using Elt = typename F::Elt;
    using SVec = std::vector<std::pair<int, Elt>>; // sorted by basis index

    F field;
    FieldSpec spec;
    std::string name;

    std::vector<std::string> vertex_names;

    struct BasisElem {
        std::string label;
        int src = -1, tgt = -1;
        int len = 0; // generator-word length; 0 exactly for the idempotents
    };
    std::vector<BasisElem> basis;
    std::vector<int> idem; // vertex -> basis index of e_v

    struct Gen {
        std::string label;
        int src = -1, tgt = -1;
        int basis_index = -1;
    };
    std::vector<Gen> gens;
    std::vector<std::vector<int>> word; // basis -> gen indices, traversal order

    std::vector<std::vector<SVec>> prod; // prod[i][j] = b_i * b_j

    std::optional<Presentation> pres; // only kept for quiver-built tables

    mutable std::shared_ptr<const AlgebraTable<F>> op_cache;
    mutable std::weak_ptr<const AlgebraTable<F>> op_back; // set iff this *is* an opposite
    mutable std::mutex op_mx;

    AlgebraTable(const F& f, FieldSpec sp) : field(f), spec(sp) {}

    int dim() const { return (int)basis.size(); }
    int nv() const { return (int)vertex_names.size(); }

    const SVec& mul(int i, int j) const { return prod[i][j]; }

    std::vector<int> radical_indices() const {
        std::vector<int> r;
        for (int i = 0; i < dim(); ++i)
            if (basis[i].len > 0) r.push_back(i);
        return r;
    }

    // Vertex chain visited by a basis path, endpoints included.
    std::vector<int> path_vertices(int b) const {
        std::vector<int> chain{basis[b].src};
        for (int g : word[b]) chain.push_back(gens[g].tgt);
        return chain;
    }

    // Full product of two coordinate vectors.
    std::vector<Elt> mul_vec(const std::vector<Elt>& x, const std::vector<Elt>& y) const {
        std::vector<Elt> out(dim(), field.zero());
        for (int i = 0; i < dim(); ++i) {
            if (field.is_zero(x[i])) continue;
            for (int j = 0; j < dim(); ++j) {
                if (field.is_zero(y[j])) continue;
                Elt c = field.mul(x[i], y[j]);
                for (auto& [k, v] : prod[i][j]) out[k] = field.add(out[k], field.mul(c, v));
            }
        }
        return out;
    }
};

template <class F>
using AlgPtr = std::shared_ptr<const AlgebraTable<F>>;

namespace detail {

template <class F>
std::vector<std::pair<int, typename F::Elt>>
svec_normalize(const F& f, std::map<int, typename F::Elt>& acc) {
    std::vector<std::pair<int, typename F::Elt>> out;
    for (auto& [k, v] : acc)
        if (!f.is_zero(v)) out.emplace_back(k, v);
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Construction from a bound quiver presentation.
//
// Strategy: enumerate paths up to max_path_len, discard any path containing a
// single-term (monomial) relation as a contiguous subpath, then eliminate the
// linear consequences u * r * v of the remaining relations, truncated at the
// length bound.  Leading terms are chosen by descending (length, lex), so
// eliminated paths rewrite into shorter-or-lex-smaller ones.  The result is
// the quotient by I + (all paths longer than the bound); for an admissible
// ideal with nilpotency degree within the bound this is exactly kQ/I, and the
// build fails loudly when the basis presses against the bound.
// ---------------------------------------------------------------------------

template <class F>
AlgPtr<F> build_algebra(const F& field, FieldSpec spec, const Presentation& pres) {
    validate_presentation(pres);
    const Quiver& q = pres.q;
    const int L = pres.max_path_len;

    // Split relations into monomial kills and general rows.
    std::vector<std::vector<int>> kills; // arrow-index paths that are zero
    struct GRel {
        int src, tgt, minlen;
        std::vector<std::pair<typename F::Elt, std::vector<int>>> terms;
    };
    std::vector<GRel> grels;
    for (const Relation& r : pres.relations) {
        std::vector<std::pair<typename F::Elt, std::vector<int>>> terms;
        for (const RelTerm& t : r.terms) {
            typename F::Elt c = parse_scalar(field, t.coeff);
            if (field.is_zero(c)) continue;
            std::vector<int> w;
            w.reserve(t.path.size());
            for (auto& an : t.path) w.push_back(q.arrow(an));
            terms.emplace_back(c, std::move(w));
        }
        if (terms.empty()) continue;
        if (terms.size() == 1) {
            kills.push_back(terms[0].second);
        } else {
            GRel g;
            g.src = q.arrows[terms[0].second.front()].src;
            g.tgt = q.arrows[terms[0].second.back()].tgt;
            g.minlen = L + 1;
            for (auto& [c, w] : terms) g.minlen = std::min<int>(g.minlen, (int)w.size());
            g.terms = std::move(terms);
            grels.push_back(std::move(g));
        }
    }
    // Drop kills that contain another kill as a contiguous subpath.
    {
        auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
            if (small.size() > big.size()) return false;
            for (std::size_t o = 0; o + small.size() <= big.size(); ++o)
                if (std::equal(small.begin(), small.end(), big.begin() + o)) return true;
            return false;
        };
        std::vector<std::vector<int>> kept;
        for (std::size_t i = 0; i < kills.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < kills.size() && !redundant; ++j)
                if (j != i && kills[j].size() < kills[i].size() && contains(kills[i], kills[j]))
                    redundant = true;
            for (auto& k : kept)
                if (!redundant && contains(kills[i], k)) redundant = true;
            if (!redundant) kept.push_back(kills[i]);
        }
        kills = std::move(kept);
    }

    auto killed_suffix = [&](const std::vector<int>& w) {
        for (auto& k : kills) {
            if (k.size() > w.size()) continue;
            if (std::equal(k.begin(), k.end(), w.end() - k.size())) return true;
        }
        return false;
    };
    auto killed_anywhere = [&](const std::vector<int>& w) {
        for (auto& k : kills) {
            if (k.size() > w.size()) continue;
            for (std::size_t o = 0; o + k.size() <= w.size(); ++o)
                if (std::equal(k.begin(), k.end(), w.begin() + o)) return true;
        }
        return false;
    };

    // Survivor paths, breadth-first by length.
    struct Path {
        int src;
        std::vector<int> arrows;
        int tgt;
    };
    std::vector<Path> paths;
    std::map<std::pair<int, std::vector<int>>, int> path_id;
    auto add_path = [&](int src, std::vector<int> w, int tgt) {
        int id = (int)paths.size();
        path_id.emplace(std::make_pair(src, w), id);
        paths.push_back(Path{src, std::move(w), tgt});
        if (paths.size() > pres.max_paths)
            throw DimensionOverflow("path count exceeds cap (" +
                                    std::to_string(pres.max_paths) +
                                    ") while building " + pres.name);
        return id;
    };
    std::vector<int> level, next;
    for (int v = 0; v < q.nv(); ++v) level.push_back(add_path(v, {}, v));
    for (int len = 1; len <= L && !level.empty(); ++len) {
        next.clear();
        for (int pid : level) {
            for (int ai = 0; ai < q.na(); ++ai) {
                if (q.arrows[ai].src != paths[pid].tgt) continue;
                std::vector<int> w = paths[pid].arrows;
                w.push_back(ai);
                if (killed_suffix(w)) continue;
                next.push_back(add_path(paths[pid].src, std::move(w), q.arrows[ai].tgt));
            }
        }
        std::swap(level, next);
    }

    const int npaths = (int)paths.size();

    // Elimination order: longest first, then lexicographically larger word,
    // then larger source.  ord 0 is eliminated first.
    std::vector<int> by_ord(npaths);
    for (int i = 0; i < npaths; ++i) by_ord[i] = i;
    std::sort(by_ord.begin(), by_ord.end(), [&](int a, int b) {
        const Path &pa = paths[a], &pb = paths[b];
        if (pa.arrows.size() != pb.arrows.size()) return pa.arrows.size() > pb.arrows.size();
        if (pa.arrows != pb.arrows) return pa.arrows > pb.arrows;
        return pa.src > pb.src;
    });
    std::vector<int> ord_of(npaths);
    for (int o = 0; o < npaths; ++o) ord_of[by_ord[o]] = o;

    // Consequence rows of the multi-term relations, truncated at L.
    using Row = std::vector<std::pair<int, typename F::Elt>>; // (ord, coeff), ord ascending
    std::vector<Row> rows;
    std::size_t coord_budget = 4'000'000;
    // Group paths by source and by target for the two-sided padding loops.
    std::vector<std::vector<int>> by_src(q.nv()), by_tgt(q.nv());
    for (int i = 0; i < npaths; ++i) {
        by_src[paths[i].src].push_back(i);
        by_tgt[paths[i].tgt].push_back(i);
    }
    for (const auto& g : grels) {
        for (int vpid : by_tgt[g.src]) {
            int vlen = (int)paths[vpid].arrows.size();
            if (vlen + g.minlen > L) continue;
            for (int upid : by_src[g.tgt]) {
                int ulen = (int)paths[upid].arrows.size();
                if (vlen + g.minlen + ulen > L) continue;
                std::map<int, typename F::Elt> acc;
                for (auto& [c, w] : g.terms) {
                    std::vector<int> full = paths[vpid].arrows;
                    full.insert(full.end(), w.begin(), w.end());
                    full.insert(full.end(), paths[upid].arrows.begin(), paths[upid].arrows.end());
                    if ((int)full.size() > L) continue;           // truncated away
                    if (killed_anywhere(full)) continue;          // already zero
                    // every un-killed path within the bound was enumerated
                    auto it = path_id.find(std::make_pair(paths[vpid].src, full));
                    if (it == path_id.end()) throw Error("internal: missing path");
                    int pid = it->second;
                    auto& slot = acc[ord_of[pid]];
                    slot = field.add(slot, c);
                }
                Row row;
                for (auto& [o, c] : acc)
                    if (!field.is_zero(c)) row.emplace_back(o, c);
                if (row.empty()) continue;
                if (coord_budget < row.size())
                    throw DimensionOverflow("relation expansion too large while building " +
                                            pres.name);
                coord_budget -= row.size();
                rows.push_back(std::move(row));
            }
        }
    }

    // Sparse Gaussian elimination over the ord coordinates.
    std::map<int, Row> pivots; // lead ord -> normalized row
    auto row_axpy = [&](Row& r, const typename F::Elt& c, const Row& p) {
        // r -= c * p  (both sorted by ord)
        Row out;
        out.reserve(r.size() + p.size());
        std::size_t i = 0, j = 0;
        while (i < r.size() || j < p.size()) {
            if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
                out.push_back(r[i++]);
            } else if (i == r.size() || p[j].first < r[i].first) {
                out.emplace_back(p[j].first, field.neg(field.mul(c, p[j].second)));
                ++j;
            } else {
                typename F::Elt v = field.sub(r[i].second, field.mul(c, p[j].second));
                if (!field.is_zero(v)) out.emplace_back(r[i].first, v);
                ++i, ++j;
            }
        }
        r = std::move(out);
    };
    for (Row& r : rows) {
        Row cur = std::move(r);
        while (!cur.empty()) {
            auto it = pivots.find(cur.front().first);
            if (it == pivots.end()) break;
            row_axpy(cur, cur.front().second, it->second);
        }
        if (cur.empty()) continue;
        typename F::Elt inv = field.inv(cur.front().second);
        for (auto& [o, c] : cur) c = field.mul(c, inv);
        pivots.emplace(cur.front().first, std::move(cur));
    }
    // Back-substitute, largest lead ord first: tails then only touch
    // non-pivot coordinates.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        Row& r = it->second;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t k = 1; k < r.size(); ++k) {
                auto pj = pivots.find(r[k].first);
                if (pj != pivots.end()) {
                    row_axpy(r, r[k].second, pj->second);
                    changed = true;
                    break;
                }
            }
        }
    }

    // Quotient basis: survivors that are not leads, in (length, word, src) order.
    std::vector<int> basis_paths;
    for (int i = 0; i < npaths; ++i)
        if (!pivots.count(ord_of[i])) basis_paths.push_back(i);
    std::sort(basis_paths.begin(), basis_paths.end(), [&](int a, int b) {
        const Path &pa = paths[a], &pb = paths[b];
        if (pa.arrows.size() != pb.arrows.size()) return pa.arrows.size() < pb.arrows.size();
        if (pa.src != pb.src) return pa.src < pb.src;
        return pa.arrows < pb.arrows;
    });
    std::vector<int> basis_of_path(npaths, -1);
    for (int b = 0; b < (int)basis_paths.size(); ++b) basis_of_path[basis_paths[b]] = b;

    int maxlen = 0;
    for (int pid : basis_paths) maxlen = std::max<int>(maxlen, (int)paths[pid].arrows.size());
    if (maxlen >= L)
        throw DimensionOverflow("basis reaches the length bound " + std::to_string(L) +
                                "; the quotient is not certified finite-dimensional "
                                "(raise max_path_len or strengthen the relations)");

    auto table = std::make_shared<AlgebraTable<F>>(field, spec);
    table->name = pres.name.empty() ? std::string("algebra") : pres.name;
    table->vertex_names = q.vertices;
    table->pres = pres;

    // Reduce an arrow word (traversal order) to a sparse basis vector.
    auto reduce_word = [&](int src, const std::vector<int>& w)
        -> typename AlgebraTable<F>::SVec {
        if (killed_anywhere(w) || (int)w.size() > L) return {};
        auto it = path_id.find(std::make_pair(src, w));
        if (it == path_id.end()) throw Error("internal: missing path");
        int pid = it->second;
        int o = ord_of[pid];
        auto pj = pivots.find(o);
        std::map<int, typename F::Elt> acc;
        if (pj == pivots.end()) {
            acc[basis_of_path[pid]] = field.one();
        } else {
            // lead = -(tail), tail coordinates are basis ords
            for (std::size_t k = 1; k < pj->second.size(); ++k) {
                int bp = basis_of_path[by_ord[pj->second[k].first]];
                acc[bp] = field.neg(pj->second[k].second);
            }
        }
        return detail::svec_normalize(field, acc);
    };

    table->idem.assign(q.nv(), -1);
    for (int b = 0; b < (int)basis_paths.size(); ++b) {
        const Path& p = paths[basis_paths[b]];
        typename AlgebraTable<F>::BasisElem be;
        be.src = p.src;
        be.tgt = p.tgt;
        be.len = (int)p.arrows.size();
        if (p.arrows.empty()) {
            be.label = "e_" + q.vertices[p.src];
            table->idem[p.src] = b;
        } else {
            std::string lab;
            for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
                if (!lab.empty()) lab += "*";
                lab += q.arrows[*it].name;
            }
            be.label = lab;
        }
        table->basis.push_back(std::move(be));
    }
    for (int v = 0; v < q.nv(); ++v)
        if (table->idem[v] < 0) throw Error("internal: lost an idempotent");

    // Arrows survive in any quotient by relations of length >= 2.
    table->gens.reserve(q.na());
    for (int ai = 0; ai < q.na(); ++ai) {
        auto it = path_id.find(std::make_pair(q.arrows[ai].src, std::vector<int>{ai}));
        if (it == path_id.end() || basis_of_path[it->second] < 0)
            throw Error("internal: arrow " + q.arrows[ai].name + " not in basis");
        table->gens.push_back({q.arrows[ai].name, q.arrows[ai].src, q.arrows[ai].tgt,
                               basis_of_path[it->second]});
    }
    table->word.resize(table->dim());
    for (int b = 0; b < table->dim(); ++b)
        table->word[b] = paths[basis_paths[b]].arrows; // arrow index == gen index here

    // Products: left-multiply by one arrow at a time.
    // arrow_act[a][j] = a * b_j as a sparse vector.
    std::vector<std::vector<typename AlgebraTable<F>::SVec>> arrow_act(
        q.na(), std::vector<typename AlgebraTable<F>::SVec>(table->dim()));
    for (int ai = 0; ai < q.na(); ++ai)
        for (int j = 0; j < table->dim(); ++j) {
            if (table->basis[j].tgt != q.arrows[ai].src) continue;
            std::vector<int> w = paths[basis_paths[j]].arrows;
            w.push_back(ai);
            arrow_act[ai][j] = reduce_word(table->basis[j].src, w);
        }

    table->prod.assign(table->dim(),
                       std::vector<typename AlgebraTable<F>::SVec>(table->dim()));
    for (int i = 0; i < table->dim(); ++i) {
        const auto& wi = table->word[i];
        for (int j = 0; j < table->dim(); ++j) {
            if (table->basis[i].src != table->basis[j].tgt) continue; // not composable
            if (wi.empty()) { // idempotent acts as identity on arriving paths
                table->prod[i][j] = {{j, field.one()}};
                continue;
            }
            std::map<int, typename F::Elt> acc{{j, field.one()}};
            for (int a : wi) {
                std::map<int, typename F::Elt> nxt;
                for (auto& [bj, c] : acc) {
                    if (field.is_zero(c)) continue;
                    for (auto& [bk, d] : arrow_act[a][bj]) {
                        auto& slot = nxt[bk];
                        slot = field.add(slot, field.mul(c, d));
                    }
                }
                acc = std::move(nxt);
                if (acc.empty()) break;
            }
            table->prod[i][j] = detail::svec_normalize(field, acc);
        }
    }

    return table;
}

// ---------------------------------------------------------------------------
// Table-level checks.  These re-verify what construction is supposed to
// guarantee: unit decomposition, vertex grading, nilpotent radical, and
// (for small tables) associativity on all basis triples.
// ---------------------------------------------------------------------------

template <class F>
void validate_table(const AlgebraTable<F>& A, bool check_assoc = true) {
    const F& f = A.field;
    const int n = A.dim();
    for (int v = 0; v < A.nv(); ++v) {
        int e = A.idem[v];
        if (e < 0 || e >= n || A.basis[e].len != 0 || A.basis[e].src != v ||
            A.basis[e].tgt != v)
            throw Error("table check: bad idempotent for vertex " + A.vertex_names[v]);
    }
    for (int j = 0; j < n; ++j) {
        // e_tgt * b = b, b * e_src = b, all other idempotent products vanish.
        for (int v = 0; v < A.nv(); ++v) {
            const auto& left = A.mul(A.idem[v], j);
            const auto& right = A.mul(j, A.idem[v]);
            bool lt = (v == A.basis[j].tgt), rt = (v == A.basis[j].src);
            bool lok = lt ? (left.size() == 1 && left[0].first == j &&
                             f.eq(left[0].second, f.one()))
                          : left.empty();
            bool rok = rt ? (right.size() == 1 && right[0].first == j &&
                             f.eq(right[0].second, f.one()))
                          : right.empty();
            if (!lok || !rok)
                throw Error("table check: idempotent grading fails at basis " +
                            A.basis[j].label);
        }
        // products respect the vertex grading
        for (int i = 0; i < n; ++i)
            for (auto& [k, c] : A.mul(i, j)) {
                (void)c;
                if (A.basis[k].src != A.basis[j].src || A.basis[k].tgt != A.basis[i].tgt)
                    throw Error("table check: product breaks vertex grading");
            }
    }
    // radical nilpotency by span iteration
    {
        std::vector<int> rad = A.radical_indices();
        // current spanning set as dense vectors
        std::vector<std::vector<typename F::Elt>> span;
        for (int r : rad) {
            std::vector<typename F::Elt> v(n, f.zero());
            v[r] = f.one();
            span.push_back(std::move(v));
        }
        int guard = n + 2;
        while (!span.empty() && guard-- > 0) {
            std::vector<std::vector<typename F::Elt>> next;
            for (auto& x : span)
                for (int r : rad) {
                    std::vector<typename F::Elt> y(n, f.zero());
                    bool nz = false;
                    for (int j = 0; j < n; ++j) {
                        if (f.is_zero(x[j])) continue;
                        for (auto& [k, c] : A.mul(r, j)) {
                            y[k] = f.add(y[k], f.mul(c, x[j]));
                            nz = nz || !f.is_zero(y[k]);
                        }
                    }
                    if (nz) next.push_back(std::move(y));
                }
            if (next.empty()) { span.clear(); break; }
            Matrix<F> m(f, (int)next.size(), n);
            for (int i = 0; i < (int)next.size(); ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = next[i][j];
            auto rr = rref(m);
            span.clear();
            for (int i = 0; i < rr.rank; ++i) {
                std::vector<typename F::Elt> v(n);
                for (int j = 0; j < n; ++j) v[j] = rr.m.at(i, j);
                span.push_back(std::move(v));
            }
        }
        if (!span.empty())
            throw InvalidRelation("table check: radical is not nilpotent "
                                  "(the ideal is not admissible)");
    }
    if (check_assoc) {
        auto addto = [&](std::map<int, typename F::Elt>& acc, int k,
                         const typename F::Elt& c) {
            auto& slot = acc[k];
            slot = f.add(slot, c);
        };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (A.basis[i].src != A.basis[j].tgt) continue;
                for (int k = 0; k < n; ++k) {
                    if (A.basis[j].src != A.basis[k].tgt) continue;
                    std::map<int, typename F::Elt> lhs, rhs;
                    for (auto& [m, c] : A.mul(i, j))
                        for (auto& [t, d] : A.mul(m, k)) addto(lhs, t, f.mul(c, d));
                    for (auto& [m, c] : A.mul(j, k))
                        for (auto& [t, d] : A.mul(i, m)) addto(rhs, t, f.mul(d, c));
                    for (auto& [t, c] : rhs) addto(lhs, t, f.neg(c));
                    for (auto& [t, c] : lhs)
                        if (!f.is_zero(c))
                            throw Error("table check: associativity fails on (" +
                                        A.basis[i].label + ", " + A.basis[j].label +
                                        ", " + A.basis[k].label + ")");
                }
            }
    }
}

// ---------------------------------------------------------------------------
// Opposite algebra.  Same basis and labels, arrows reversed, words reversed,
// products transposed.  Cached so op(op(A)) is pointer-identical to A.
// ---------------------------------------------------------------------------

template <class F>
AlgPtr<F> opposite(const AlgPtr<F>& A) {
    {
        std::lock_guard<std::mutex> lk(A->op_mx);
        if (auto back = A->op_back.lock()) return back;
        if (A->op_cache) return A->op_cache;
    }
    auto op = std::make_shared<AlgebraTable<F>>(A->field, A->spec);
    op->name = A->name + "^op";
    op->vertex_names = A->vertex_names;
    op->basis.reserve(A->dim());
    for (auto& b : A->basis)
        op->basis.push_back({b.label, b.tgt, b.src, b.len});
    op->idem = A->idem;
    for (auto& g : A->gens)
        op->gens.push_back({g.label, g.tgt, g.src, g.basis_index});
    op->word.resize(A->dim());
    for (int b = 0; b < A->dim(); ++b) {
        op->word[b] = A->word[b];
        std::reverse(op->word[b].begin(), op->word[b].end());
    }
    op->prod.assign(A->dim(), std::vector<typename AlgebraTable<F>::SVec>(A->dim()));
    for (int i = 0; i < A->dim(); ++i)
        for (int j = 0; j < A->dim(); ++j) op->prod[i][j] = A->prod[j][i];
    std::lock_guard<std::mutex> lk(A->op_mx);
    if (!A->op_cache) {
        op->op_back = A;
        A->op_cache = op;
    }
    return A->op_cache;
}

// ---------------------------------------------------------------------------
// Corner algebra e A e for the idempotent e = sum of e_v over a vertex set.
// Basis: the basis paths that start and end inside the set.  Generators: the
// corner paths with no interior visit to the set; every corner path factors
// uniquely through them by cutting at its interior visits.
// ---------------------------------------------------------------------------

template <class F>
struct CornerResult {
    AlgPtr<F> G;
    std::vector<int> basis_to_corner; // A basis index -> corner basis index or -1
    std::vector<int> corner_vertices; // corner vertex -> original vertex
    std::vector<int> gen_source;      // corner gen -> A basis index
};

template <class F>
CornerResult<F> corner_algebra(const AlgPtr<F>& A, const std::vector<int>& S_in) {
    std::set<int> S(S_in.begin(), S_in.end());
    if (S.empty()) throw InputError("corner needs a nonempty vertex set");
    for (int v : S)
        if (v < 0 || v >= A->nv()) throw InputError("corner vertex out of range");

    auto G = std::make_shared<AlgebraTable<F>>(A->field, A->spec);
    std::vector<int> vmap(A->nv(), -1);
    CornerResult<F> res;
    for (int v = 0; v < A->nv(); ++v)
        if (S.count(v)) {
            vmap[v] = (int)res.corner_vertices.size();
            res.corner_vertices.push_back(v);
            G->vertex_names.push_back(A->vertex_names[v]);
        }
    {
        std::string nm = A->name + " corner{";
        bool first = true;
        for (int v : res.corner_vertices) {
            if (!first) nm += ",";
            nm += A->vertex_names[v];
            first = false;
        }
        G->name = nm + "}";
    }

    res.basis_to_corner.assign(A->dim(), -1);
    std::vector<int> keep;
    for (int b = 0; b < A->dim(); ++b)
        if (S.count(A->basis[b].src) && S.count(A->basis[b].tgt)) {
            res.basis_to_corner[b] = (int)keep.size();
            keep.push_back(b);
        }

    // Split each kept path at interior visits to S; the segments are the
    // corner generators.
    std::map<std::vector<int>, int> seg_basis; // A-word of segment -> A basis index
    for (int b = 0; b < A->dim(); ++b)
        if (A->basis[b].len > 0) seg_basis[A->word[b]] = b;
    auto lookup_segment = [&](const std::vector<int>& w) {
        auto it = seg_basis.find(w);
        if (it == seg_basis.end())
            throw Error("internal: corner segment is not a basis path");
        return it->second;
    };

    std::vector<std::vector<int>> segwords(A->dim()); // kept b -> segment A-basis list
    std::map<int, int> gen_of; // A basis index of a segment -> corner gen index
    for (int b : keep) {
        if (A->basis[b].len == 0) continue;
        auto chain = A->path_vertices(b);
        const auto& w = A->word[b];
        std::vector<int> segs;
        std::size_t start = 0;
        for (std::size_t pos = 1; pos < chain.size(); ++pos) {
            if (pos + 1 == chain.size() || S.count(chain[pos])) {
                std::vector<int> seg(w.begin() + start, w.begin() + pos);
                segs.push_back(lookup_segment(seg));
                start = pos;
            }
        }
        segwords[b] = segs;
        if (segs.size() == 1) gen_of.emplace(segs[0], -1);
    }
    // Generators in A-basis order, so the numbering is canonical.
    for (auto& [ab, gi] : gen_of) {
        gi = (int)G->gens.size();
        res.gen_source.push_back(ab);
        G->gens.push_back({A->basis[ab].label, vmap[A->basis[ab].src],
                           vmap[A->basis[ab].tgt], res.basis_to_corner[ab]});
    }

    G->idem.assign((int)res.corner_vertices.size(), -1);
    for (int b : keep) {
        typename AlgebraTable<F>::BasisElem be;
        be.label = A->basis[b].label;
        be.src = vmap[A->basis[b].src];
        be.tgt = vmap[A->basis[b].tgt];
        be.len = (int)segwords[b].size();
        if (A->basis[b].len == 0) G->idem[be.src] = res.basis_to_corner[b];
        G->basis.push_back(std::move(be));
        std::vector<int> gw;
        for (int seg : segwords[b]) gw.push_back(gen_of.at(seg));
        G->word.push_back(std::move(gw));
    }
    for (int v = 0; v < G->nv(); ++v)
        if (G->idem[v] < 0) throw Error("internal: corner lost an idempotent");

    G->prod.assign(G->dim(), std::vector<typename AlgebraTable<F>::SVec>(G->dim()));
    for (int i = 0; i < G->dim(); ++i)
        for (int j = 0; j < G->dim(); ++j) {
            typename AlgebraTable<F>::SVec out;
            for (auto& [k, c] : A->mul(keep[i], keep[j])) {
                int kk = res.basis_to_corner[k];
                if (kk < 0)
                    throw Error("internal: corner not closed under products");
                out.emplace_back(kk, c);
            }
            std::sort(out.begin(), out.end(),
                      [](auto& a, auto& b) { return a.first < b.first; });
            G->prod[i][j] = std::move(out);
        }

    res.G = G;
    return res;
}

// ---------------------------------------------------------------------------
// Quotient by an ideal spanned by a subset of the basis.  Idempotents are
// allowed in the ideal; their vertices disappear from the quotient.
// ---------------------------------------------------------------------------

template <class F>
struct QuotientResult {
    AlgPtr<F> Q;
    std::vector<int> basis_to_quot;  // A basis index -> quotient index or -1
    std::vector<int> vertex_to_quot; // A vertex -> quotient vertex or -1
    std::vector<int> gen_to_quot;    // A gen index -> quotient gen index or -1
};

template <class F>
QuotientResult<F> quotient_algebra(const AlgPtr<F>& A, const std::vector<int>& ideal_in) {
    std::set<int> I(ideal_in.begin(), ideal_in.end());
    for (int b : I)
        if (b < 0 || b >= A->dim()) throw InputError("ideal index out of range");
    // two-sided closure check
    for (int b : I)
        for (int j = 0; j < A->dim(); ++j) {
            for (auto& [k, c] : A->mul(b, j)) {
                (void)c;
                if (!I.count(k))
                    throw NotAnIdeal("span is not a right ideal: " + A->basis[b].label +
                                     " * " + A->basis[j].label + " leaves it");
            }
            for (auto& [k, c] : A->mul(j, b)) {
                (void)c;
                if (!I.count(k))
                    throw NotAnIdeal("span is not a left ideal: " + A->basis[j].label +
                                     " * " + A->basis[b].label + " leaves it");
            }
        }

    QuotientResult<F> res;
    res.vertex_to_quot.assign(A->nv(), -1);
    auto Q = std::make_shared<AlgebraTable<F>>(A->field, A->spec);
    for (int v = 0; v < A->nv(); ++v)
        if (!I.count(A->idem[v])) {
            res.vertex_to_quot[v] = (int)Q->vertex_names.size();
            Q->vertex_names.push_back(A->vertex_names[v]);
        }
    if (Q->vertex_names.empty())
        throw InputError("quotient by the whole algebra is the zero ring; not supported");
    Q->name = A->name + "/ideal";

    res.basis_to_quot.assign(A->dim(), -1);
    std::vector<int> keep;
    for (int b = 0; b < A->dim(); ++b)
        if (!I.count(b)) {
            if (res.vertex_to_quot[A->basis[b].src] < 0 ||
                res.vertex_to_quot[A->basis[b].tgt] < 0)
                throw NotAnIdeal("basis element " + A->basis[b].label +
                                 " survives but its vertex dies");
            res.basis_to_quot[b] = (int)keep.size();
            keep.push_back(b);
        }

    std::vector<int>& gen_map = res.gen_to_quot;
    gen_map.assign(A->gens.size(), -1);
    for (int g = 0; g < (int)A->gens.size(); ++g) {
        int b = A->gens[g].basis_index;
        if (res.basis_to_quot[b] >= 0) {
            gen_map[g] = (int)Q->gens.size();
            Q->gens.push_back({A->gens[g].label, res.vertex_to_quot[A->gens[g].src],
                               res.vertex_to_quot[A->gens[g].tgt], res.basis_to_quot[b]});
        }
    }

    Q->idem.assign((int)Q->vertex_names.size(), -1);
    for (int b : keep) {
        typename AlgebraTable<F>::BasisElem be;
        be.label = A->basis[b].label;
        be.src = res.vertex_to_quot[A->basis[b].src];
        be.tgt = res.vertex_to_quot[A->basis[b].tgt];
        be.len = A->basis[b].len;
        if (A->basis[b].len == 0) Q->idem[be.src] = res.basis_to_quot[b];
        Q->basis.push_back(std::move(be));
        std::vector<int> w;
        for (int g : A->word[b]) {
            if (gen_map[g] < 0)
                throw NotAnIdeal("surviving path " + A->basis[b].label +
                                 " factors through a dead generator");
            w.push_back(gen_map[g]);
        }
        Q->word.push_back(std::move(w));
    }

    Q->prod.assign(Q->dim(), std::vector<typename AlgebraTable<F>::SVec>(Q->dim()));
    for (int i = 0; i < Q->dim(); ++i)
        for (int j = 0; j < Q->dim(); ++j) {
            typename AlgebraTable<F>::SVec out;
            for (auto& [k, c] : A->mul(keep[i], keep[j]))
                if (res.basis_to_quot[k] >= 0) out.emplace_back(res.basis_to_quot[k], c);
            std::sort(out.begin(), out.end(),
                      [](auto& a, auto& b) { return a.first < b.first; });
            Q->prod[i][j] = std::move(out);
        }

    res.Q = Q;
    return res;
}

} // namespace itlab
