#pragma once

#include "algebra.hpp"

#include <numeric>
#include <random>

namespace itlab {

// Left module over an AlgebraTable: one dimension per vertex and one matrix
// per generator.  The underlying space is the concatenation of the vertex
// blocks, in vertex order.
template <class F>
struct Module {
    AlgPtr<F> A;
    std::vector<int> dims;      // per vertex
    std::vector<Matrix<F>> act; // per generator: dims[tgt] x dims[src]

    int total() const { return std::accumulate(dims.begin(), dims.end(), 0); }

    static Module zero(const AlgPtr<F>& A) {
        Module m;
        m.A = A;
        m.dims.assign(A->nv(), 0);
        for (std::size_t g = 0; g < A->gens.size(); ++g)
            m.act.emplace_back(A->field, 0, 0);
        return m;
    }

    bool operator==(const Module& o) const {
        return A == o.A && dims == o.dims && act == o.act;
    }
};

template <class F>
std::vector<int> block_offsets(const Module<F>& M) {
    std::vector<int> off(M.dims.size() + 1, 0);
    for (std::size_t v = 0; v < M.dims.size(); ++v) off[v + 1] = off[v] + M.dims[v];
    return off;
}

// Action matrix of a basis element, dims[tgt(b)] x dims[src(b)].  The word is
// in traversal order, so it is applied left to right.
template <class F>
Matrix<F> act_basis(const Module<F>& M, int b) {
    const auto& A = *M.A;
    Matrix<F> r = Matrix<F>::identity(M.A->field, M.dims[A.basis[b].src]);
    for (int g : A.word[b]) r = M.act[g].mul(r);
    return r;
}

template <class F>
void validate_module(const Module<F>& M, bool deep = false) {
    const auto& A = *M.A;
    if ((int)M.dims.size() != A.nv() || M.act.size() != A.gens.size())
        throw Error("module check: shape mismatch with algebra");
    for (std::size_t g = 0; g < A.gens.size(); ++g)
        if (M.act[g].rows != M.dims[A.gens[g].tgt] || M.act[g].cols != M.dims[A.gens[g].src])
            throw Error("module check: bad action shape for generator " + A.gens[g].label);
    if (!deep) return;
    // the generator matrices must satisfy the table's multiplication rules
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j) {
            if (A.basis[i].src != A.basis[j].tgt) continue;
            Matrix<F> lhs = act_basis(M, i).mul(act_basis(M, j));
            Matrix<F> rhs(A.field, M.dims[A.basis[i].tgt], M.dims[A.basis[j].src]);
            for (auto& [k, c] : A.mul(i, j)) rhs = rhs.add(act_basis(M, k).scale(c));
            if (!(lhs == rhs))
                throw Error("module check: action violates product " + A.basis[i].label +
                            " * " + A.basis[j].label);
        }
}

// ---------------------------------------------------------------------------
// Standard modules.
// ---------------------------------------------------------------------------

template <class F>
Module<F> simple_module(const AlgPtr<F>& A, int v) {
    Module<F> m = Module<F>::zero(A);
    m.dims[v] = 1;
    for (std::size_t g = 0; g < A->gens.size(); ++g)
        m.act[g] = Matrix<F>(A->field, m.dims[A->gens[g].tgt], m.dims[A->gens[g].src]);
    return m;
}

// P_v = A e_v: basis paths with source v, graded by target.
template <class F>
Module<F> projective_module(const AlgPtr<F>& A, int v) {
    Module<F> m;
    m.A = A;
    m.dims.assign(A->nv(), 0);
    std::vector<int> pos(A->dim(), -1); // basis index -> position inside its block
    for (int b = 0; b < A->dim(); ++b)
        if (A->basis[b].src == v) pos[b] = m.dims[A->basis[b].tgt]++;
    for (std::size_t g = 0; g < A->gens.size(); ++g) {
        const auto& gen = A->gens[g];
        Matrix<F> mat(A->field, m.dims[gen.tgt], m.dims[gen.src]);
        for (int b = 0; b < A->dim(); ++b) {
            if (A->basis[b].src != v || A->basis[b].tgt != gen.src) continue;
            for (auto& [k, c] : A->mul(gen.basis_index, b)) mat.at(pos[k], pos[b]) = c;
        }
        m.act.push_back(std::move(mat));
    }
    return m;
}

// Positions of the basis paths with source v inside the blocks of P_v,
// matching the layout used by projective_module: -1 when src != v.
template <class F>
std::vector<int> projective_positions(const AlgPtr<F>& A, int v) {
    std::vector<int> pos(A->dim(), -1);
    std::vector<int> cnt(A->nv(), 0);
    for (int b = 0; b < A->dim(); ++b)
        if (A->basis[b].src == v) pos[b] = cnt[A->basis[b].tgt]++;
    return pos;
}

// The algebra as a left module over itself; coordinates are the basis
// elements, graded by target.  pos_out[b] gives each element's position
// inside its block.
template <class F>
Module<F> regular_module(const AlgPtr<F>& A, std::vector<int>* pos_out = nullptr) {
    Module<F> m;
    m.A = A;
    m.dims.assign(A->nv(), 0);
    std::vector<int> pos(A->dim(), -1);
    for (int b = 0; b < A->dim(); ++b) pos[b] = m.dims[A->basis[b].tgt]++;
    for (std::size_t g = 0; g < A->gens.size(); ++g) {
        const auto& gen = A->gens[g];
        Matrix<F> mat(A->field, m.dims[gen.tgt], m.dims[gen.src]);
        for (int b = 0; b < A->dim(); ++b) {
            if (A->basis[b].tgt != gen.src) continue;
            for (auto& [k, c] : A->mul(gen.basis_index, b)) mat.at(pos[k], pos[b]) = c;
        }
        m.act.push_back(std::move(mat));
    }
    if (pos_out) *pos_out = std::move(pos);
    return m;
}

// Dual module over the opposite algebra: same dimensions, transposed action.
// Generator indices of A and of opposite(A) coincide.
template <class F>
Module<F> dual_module(const Module<F>& M) {
    Module<F> d;
    d.A = opposite(M.A);
    d.dims = M.dims;
    for (auto& m : M.act) d.act.push_back(m.transpose());
    return d;
}

template <class F>
Module<F> injective_module(const AlgPtr<F>& A, int v) {
    return dual_module(projective_module(opposite(A), v));
}

template <class F>
Module<F> direct_sum(const AlgPtr<F>& A, const std::vector<Module<F>>& parts) {
    Module<F> m;
    m.A = A;
    m.dims.assign(A->nv(), 0);
    for (auto& p : parts) {
        if (p.A != A) throw Error("direct sum over mixed algebras");
        for (int v = 0; v < A->nv(); ++v) m.dims[v] += p.dims[v];
    }
    for (std::size_t g = 0; g < A->gens.size(); ++g) {
        const auto& gen = A->gens[g];
        Matrix<F> mat(A->field, m.dims[gen.tgt], m.dims[gen.src]);
        int ro = 0, co = 0;
        for (auto& p : parts) {
            for (int i = 0; i < p.act[g].rows; ++i)
                for (int j = 0; j < p.act[g].cols; ++j)
                    mat.at(ro + i, co + j) = p.act[g].at(i, j);
            ro += p.dims[gen.tgt];
            co += p.dims[gen.src];
        }
        m.act.push_back(std::move(mat));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Maps, submodules, quotients.
// ---------------------------------------------------------------------------

template <class F>
struct ModuleMap {
    Module<F> dom, cod;
    std::vector<Matrix<F>> comp; // per vertex: cod.dims[v] x dom.dims[v]
};

template <class F>
void validate_map(const ModuleMap<F>& f) {
    const auto& A = *f.dom.A;
    if (f.dom.A != f.cod.A) throw Error("map check: modules over different algebras");
    if ((int)f.comp.size() != A.nv()) throw Error("map check: wrong component count");
    for (int v = 0; v < A.nv(); ++v)
        if (f.comp[v].rows != f.cod.dims[v] || f.comp[v].cols != f.dom.dims[v])
            throw Error("map check: bad component shape");
    for (std::size_t g = 0; g < A.gens.size(); ++g) {
        const auto& gen = A.gens[g];
        if (!(f.comp[gen.tgt].mul(f.dom.act[g]) == f.cod.act[g].mul(f.comp[gen.src])))
            throw Error("map check: does not commute with generator " + gen.label);
    }
}

// Contravariant transport of a map under duality.
template <class F>
ModuleMap<F> dual_map(const ModuleMap<F>& f);

template <class F>
ModuleMap<F> compose_map(const ModuleMap<F>& g, const ModuleMap<F>& f) {
    ModuleMap<F> h;
    h.dom = f.dom;
    h.cod = g.cod;
    for (std::size_t v = 0; v < f.comp.size(); ++v) h.comp.push_back(g.comp[v].mul(f.comp[v]));
    return h;
}

template <class F>
bool map_is_zero(const ModuleMap<F>& f) {
    for (auto& m : f.comp)
        if (!m.is_zero()) return false;
    return true;
}

// A subspace assignment: one column-span matrix per vertex.
template <class F>
using Sub = std::vector<Matrix<F>>;

template <class F>
Sub<F> sub_zero(const Module<F>& M) {
    Sub<F> s;
    for (int v = 0; v < (int)M.dims.size(); ++v) s.emplace_back(M.A->field, M.dims[v], 0);
    return s;
}

template <class F>
Sub<F> sub_whole(const Module<F>& M) {
    Sub<F> s;
    for (int v = 0; v < (int)M.dims.size(); ++v)
        s.push_back(Matrix<F>::identity(M.A->field, M.dims[v]));
    return s;
}

template <class F>
Sub<F> sub_canonical(const Sub<F>& s) {
    Sub<F> out;
    for (auto& m : s) out.push_back(span_canonical(m));
    return out;
}

template <class F>
int sub_total_dim(const Sub<F>& s) {
    int d = 0;
    for (auto& m : s) d += rank(m);
    return d;
}

template <class F>
bool sub_equal(const Sub<F>& a, const Sub<F>& b) {
    for (std::size_t v = 0; v < a.size(); ++v)
        if (!(span_canonical(a[v]) == span_canonical(b[v]))) return false;
    return true;
}

template <class F>
bool sub_contains(const Sub<F>& a, const Sub<F>& b) {
    for (std::size_t v = 0; v < a.size(); ++v)
        if (!span_contains(a[v], b[v])) return false;
    return true;
}

// Smallest action-closed subspace containing s.
template <class F>
Sub<F> close_sub(const Module<F>& M, Sub<F> s) {
    const auto& A = *M.A;
    s = sub_canonical(s);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t g = 0; g < A.gens.size(); ++g) {
            const auto& gen = A.gens[g];
            Matrix<F> img = M.act[g].mul(s[gen.src]);
            if (!span_contains(s[gen.tgt], img)) {
                s[gen.tgt] = span_union(s[gen.tgt], img);
                changed = true;
            }
        }
    }
    return s;
}

template <class F>
bool sub_is_closed(const Module<F>& M, const Sub<F>& s) {
    const auto& A = *M.A;
    for (std::size_t g = 0; g < A.gens.size(); ++g)
        if (!span_contains(s[A.gens[g].tgt], M.act[g].mul(s[A.gens[g].src]))) return false;
    return true;
}

template <class F>
struct SubmoduleResult {
    Module<F> mod;
    ModuleMap<F> incl;
};

// The subspace must be action-closed; its matrices become the inclusion.
template <class F>
SubmoduleResult<F> submodule(const Module<F>& M, const Sub<F>& s_in) {
    Sub<F> s = sub_canonical(s_in);
    if (!sub_is_closed(M, s)) throw Error("submodule: subspace is not action-closed");
    const auto& A = *M.A;
    SubmoduleResult<F> r;
    r.mod.A = M.A;
    for (auto& m : s) r.mod.dims.push_back(m.cols);
    for (std::size_t g = 0; g < A.gens.size(); ++g) {
        const auto& gen = A.gens[g];
        auto x = solve(s[gen.tgt], M.act[g].mul(s[gen.src]));
        if (!x) throw Error("internal: closed subspace failed to restrict");
        r.mod.act.push_back(std::move(*x));
    }
    r.incl.dom = r.mod;
    r.incl.cod = M;
    r.incl.comp = s;
    return r;
}

template <class F>
struct QuotientModResult {
    Module<F> mod;
    ModuleMap<F> proj;
    // unit coordinate indices per vertex realizing a complement of the
    // subspace; quotient coordinates correspond to them in order
    std::vector<std::vector<int>> section;
};

template <class F>
QuotientModResult<F> quotient_module(const Module<F>& M, const Sub<F>& s_in) {
    Sub<F> s = sub_canonical(s_in);
    if (!sub_is_closed(M, s)) throw Error("quotient: subspace is not action-closed");
    const auto& A = *M.A;
    const F& f = A.field;
    QuotientModResult<F> r;
    r.mod.A = M.A;
    std::vector<Matrix<F>> pi(A.nv());
    for (int v = 0; v < A.nv(); ++v) {
        Matrix<F> id = Matrix<F>::identity(f, M.dims[v]);
        std::vector<int> picked = extend_basis(s[v], id);
        Matrix<F> u = id.cols_slice(picked);
        Matrix<F> cu = Matrix<F>::hstack(s[v], u);
        auto inv = inverse(cu);
        if (!inv) throw Error("internal: complement construction failed");
        // last rows of the inverse kill s[v] and are the quotient coordinates
        Matrix<F> p(f, (int)picked.size(), M.dims[v]);
        for (int i = 0; i < (int)picked.size(); ++i)
            for (int j = 0; j < M.dims[v]; ++j) p.at(i, j) = inv->at(s[v].cols + i, j);
        pi[v] = std::move(p);
        r.mod.dims.push_back((int)picked.size());
        r.section.push_back(std::move(picked));
    }
    for (std::size_t g = 0; g < A.gens.size(); ++g) {
        const auto& gen = A.gens[g];
        // action on quotient coordinates: project after acting on the section
        Matrix<F> u(f, M.dims[gen.src], r.mod.dims[gen.src]);
        for (int j = 0; j < r.mod.dims[gen.src]; ++j)
            u.at(r.section[gen.src][j], j) = f.one();
        r.mod.act.push_back(pi[gen.tgt].mul(M.act[g].mul(u)));
    }
    r.proj.dom = M;
    r.proj.cod = r.mod;
    r.proj.comp = std::move(pi);
    return r;
}

template <class F>
Sub<F> image_sub(const ModuleMap<F>& f) {
    Sub<F> s;
    for (auto& m : f.comp) s.push_back(span_canonical(m));
    return s;
}

template <class F>
SubmoduleResult<F> kernel_module(const ModuleMap<F>& f) {
    Sub<F> k;
    for (std::size_t v = 0; v < f.comp.size(); ++v) k.push_back(kernel_basis(f.comp[v]));
    return submodule(f.dom, k);
}

template <class F>
QuotientModResult<F> cokernel_module(const ModuleMap<F>& f) {
    return quotient_module(f.cod, image_sub(f));
}

// ---------------------------------------------------------------------------
// Radical, socle, top, generators.
// ---------------------------------------------------------------------------

template <class F>
Sub<F> radical_sub(const Module<F>& M) {
    const auto& A = *M.A;
    Sub<F> s = sub_zero(M);
    for (std::size_t g = 0; g < A.gens.size(); ++g)
        s[A.gens[g].tgt] = span_union(s[A.gens[g].tgt], M.act[g]);
    return s; // rad M = J M is automatically a submodule
}

template <class F>
Sub<F> socle_sub(const Module<F>& M) {
    const auto& A = *M.A;
    const F& f = A.field;
    Sub<F> s;
    for (int v = 0; v < A.nv(); ++v) {
        Matrix<F> stacked(f, 0, M.dims[v]);
        for (std::size_t g = 0; g < A.gens.size(); ++g)
            if (A.gens[g].src == v) stacked = Matrix<F>::vstack(stacked, M.act[g]);
        s.push_back(kernel_basis(stacked));
    }
    return s;
}

template <class F>
QuotientModResult<F> top_module(const Module<F>& M) {
    return quotient_module(M, radical_sub(M));
}

// Minimal generating set: unit coordinate vectors lifting a basis of M/rad M,
// as (vertex, coordinate-in-block) pairs.
template <class F>
std::vector<std::pair<int, int>> top_generators(const Module<F>& M) {
    auto rad = radical_sub(M);
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < (int)M.dims.size(); ++v) {
        Matrix<F> id = Matrix<F>::identity(M.A->field, M.dims[v]);
        for (int j : extend_basis(rad[v], id)) out.emplace_back(v, j);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hom spaces.
// ---------------------------------------------------------------------------

// Basis of Hom_A(M, N): each element is a per-vertex matrix family.
template <class F>
std::vector<std::vector<Matrix<F>>> hom_basis(const Module<F>& M, const Module<F>& N) {
    if (M.A != N.A) throw Error("hom: modules over different algebras");
    const auto& A = *M.A;
    const F& f = A.field;
    std::vector<int> voff(A.nv() + 1, 0);
    for (int v = 0; v < A.nv(); ++v) voff[v + 1] = voff[v] + N.dims[v] * M.dims[v];
    int nvars = voff[A.nv()];
    int nrows = 0;
    for (std::size_t g = 0; g < A.gens.size(); ++g)
        nrows += N.dims[A.gens[g].tgt] * M.dims[A.gens[g].src];
    Matrix<F> sys(f, nrows, nvars);
    int row = 0;
    for (std::size_t g = 0; g < A.gens.size(); ++g) {
        const auto& gen = A.gens[g];
        // f_tgt * M.act[g] - N.act[g] * f_src = 0, entry (i, j)
        for (int i = 0; i < N.dims[gen.tgt]; ++i)
            for (int j = 0; j < M.dims[gen.src]; ++j) {
                for (int k = 0; k < M.dims[gen.tgt]; ++k)
                    sys.at(row, voff[gen.tgt] + i * M.dims[gen.tgt] + k) =
                        f.add(sys.at(row, voff[gen.tgt] + i * M.dims[gen.tgt] + k),
                              M.act[g].at(k, j));
                for (int k = 0; k < N.dims[gen.src]; ++k)
                    sys.at(row, voff[gen.src] + k * M.dims[gen.src] + j) =
                        f.sub(sys.at(row, voff[gen.src] + k * M.dims[gen.src] + j),
                              N.act[g].at(i, k));
                ++row;
            }
    }
    Matrix<F> kb = kernel_basis(sys);
    std::vector<std::vector<Matrix<F>>> out;
    for (int c = 0; c < kb.cols; ++c) {
        std::vector<Matrix<F>> h;
        for (int v = 0; v < A.nv(); ++v) {
            Matrix<F> m(f, N.dims[v], M.dims[v]);
            for (int i = 0; i < N.dims[v]; ++i)
                for (int j = 0; j < M.dims[v]; ++j)
                    m.at(i, j) = kb.at(voff[v] + i * M.dims[v] + j, c);
            h.push_back(std::move(m));
        }
        out.push_back(std::move(h));
    }
    return out;
}

template <class F>
int hom_dim(const Module<F>& M, const Module<F>& N) {
    return (int)hom_basis(M, N).size();
}

template <class F>
ModuleMap<F> make_map(const Module<F>& dom, const Module<F>& cod,
                      std::vector<Matrix<F>> comp) {
    ModuleMap<F> f;
    f.dom = dom;
    f.cod = cod;
    f.comp = std::move(comp);
    return f;
}

// ---------------------------------------------------------------------------
// Transport along corner and quotient constructions.
// ---------------------------------------------------------------------------

// e M for the corner e A e: keep the blocks at the corner vertices; each
// corner generator acts by the action of the basis path it came from.
template <class F>
Module<F> restrict_corner(const CornerResult<F>& C, const Module<F>& M) {
    Module<F> r;
    r.A = C.G;
    for (int v : C.corner_vertices) r.dims.push_back(M.dims[v]);
    for (std::size_t g = 0; g < C.G->gens.size(); ++g)
        r.act.push_back(act_basis(M, C.gen_source[g]));
    return r;
}

// e f for a map f between A-modules: the corner coordinates are literally the
// coordinates at the corner vertices, so restriction keeps those components.
template <class F>
ModuleMap<F> restrict_corner_map(const CornerResult<F>& C, const ModuleMap<F>& f) {
    ModuleMap<F> r;
    r.dom = restrict_corner(C, f.dom);
    r.cod = restrict_corner(C, f.cod);
    for (int v : C.corner_vertices) r.comp.push_back(f.comp[v]);
    return r;
}

// A module over A/I viewed over A: dead vertices get zero blocks, dead
// generators act by zero.
template <class F>
Module<F> inflate_quotient(const QuotientResult<F>& Q, const AlgPtr<F>& A,
                           const Module<F>& N) {
    if (N.A != Q.Q) throw Error("inflate: module is not over the quotient");
    Module<F> r;
    r.A = A;
    r.dims.assign(A->nv(), 0);
    for (int v = 0; v < A->nv(); ++v)
        if (Q.vertex_to_quot[v] >= 0) r.dims[v] = N.dims[Q.vertex_to_quot[v]];
    for (std::size_t g = 0; g < A->gens.size(); ++g) {
        const auto& gen = A->gens[g];
        if (Q.gen_to_quot[g] >= 0)
            r.act.push_back(N.act[Q.gen_to_quot[g]]);
        else
            r.act.push_back(Matrix<F>(A->field, r.dims[gen.tgt], r.dims[gen.src]));
    }
    return r;
}

// The reverse direction: a module over A killed by the ideal, viewed over A/I.
template <class F>
Module<F> deflate_to_quotient(const QuotientResult<F>& Q, const Module<F>& M) {
    const auto& A = *M.A;
    Module<F> r;
    r.A = Q.Q;
    r.dims.assign(Q.Q->nv(), 0);
    for (int v = 0; v < A.nv(); ++v)
        if (Q.vertex_to_quot[v] >= 0)
            r.dims[Q.vertex_to_quot[v]] = M.dims[v];
        else if (M.dims[v] != 0)
            throw Error("deflate: module is supported on a dead vertex");
    r.act.resize(Q.Q->gens.size(), Matrix<F>(A.field, 0, 0));
    for (std::size_t g = 0; g < A.gens.size(); ++g)
        if (Q.gen_to_quot[g] >= 0) r.act[Q.gen_to_quot[g]] = M.act[g];
    return r;
}

template <class F>
ModuleMap<F> dual_map(const ModuleMap<F>& f) {
    ModuleMap<F> d;
    d.dom = dual_module(f.cod);
    d.cod = dual_module(f.dom);
    for (auto& m : f.comp) d.comp.push_back(m.transpose());
    return d;
}

// ---------------------------------------------------------------------------
// Random modules: cokernel of a random map between projectives.
// ---------------------------------------------------------------------------

template <class F>
Module<F> random_module(const AlgPtr<F>& A, std::mt19937_64& rng, int max_mult = 2) {
    std::uniform_int_distribution<int> dm(0, max_mult);
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<Module<F>> qs, ps;
        for (int v = 0; v < A->nv(); ++v) {
            int a = dm(rng), b = dm(rng);
            for (int i = 0; i < a; ++i) qs.push_back(projective_module(A, v));
            for (int i = 0; i < b; ++i) ps.push_back(projective_module(A, v));
        }
        if (qs.empty()) continue;
        Module<F> Q = direct_sum(A, qs);
        Module<F> P = direct_sum(A, ps);
        auto homs = hom_basis(P, Q);
        std::vector<Matrix<F>> comp;
        for (int v = 0; v < A->nv(); ++v) comp.emplace_back(A->field, Q.dims[v], P.dims[v]);
        for (auto& h : homs) {
            typename F::Elt c = A->field.random(rng);
            for (int v = 0; v < A->nv(); ++v) comp[v] = comp[v].add(h[v].scale(c));
        }
        auto M = cokernel_module(make_map(P, Q, std::move(comp))).mod;
        if (M.total() > 0) return M;
    }
    return simple_module(A, 0);
}

} // namespace itlab
