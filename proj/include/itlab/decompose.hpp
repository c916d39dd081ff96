#pragma once

#include "module.hpp"
#include "poly.hpp"

#include <array>
#include <functional>
#include <tuple>

namespace itlab {

namespace detail {

// End(M) in coordinates over the hom basis.
template <class F>
struct EndRing {
    using Elt = typename F::Elt;
    F f;
    std::vector<int> vdims;
    std::vector<std::vector<Matrix<F>>> homs;
    int k = 0;
    int L = 0;
    Matrix<F> H; // flattened hom basis, L x k

    explicit EndRing(const Module<F>& M) : f(M.A->field), vdims(M.dims) {
        homs = hom_basis(M, M);
        k = (int)homs.size();
        for (int d : vdims) L += d * d;
        H = Matrix<F>(f, L, k);
        for (int c = 0; c < k; ++c) {
            int off = 0;
            for (auto& m : homs[c]) {
                for (int i = 0; i < m.rows; ++i)
                    for (int j = 0; j < m.cols; ++j)
                        H.at(off + i * m.cols + j, c) = m.at(i, j);
                off += m.rows * m.cols;
            }
        }
    }

    std::vector<Elt> coords(const std::vector<Matrix<F>>& h) const {
        Matrix<F> b(f, L, 1);
        int off = 0;
        for (auto& m : h) {
            for (int i = 0; i < m.rows; ++i)
                for (int j = 0; j < m.cols; ++j) b.at(off + i * m.cols + j, 0) = m.at(i, j);
            off += m.rows * m.cols;
        }
        auto x = solve(H, b);
        if (!x) throw Error("internal: endomorphism outside the hom span");
        std::vector<Elt> out(k, f.zero());
        for (int i = 0; i < k; ++i) out[i] = x->at(i, 0);
        return out;
    }

    std::vector<Matrix<F>> from_coords(const std::vector<Elt>& x) const {
        std::vector<Matrix<F>> h;
        for (std::size_t v = 0; v < vdims.size(); ++v) h.emplace_back(f, vdims[v], vdims[v]);
        for (int c = 0; c < k; ++c) {
            if (f.is_zero(x[c])) continue;
            for (std::size_t v = 0; v < vdims.size(); ++v)
                h[v] = h[v].add(homs[c][v].scale(x[c]));
        }
        return h;
    }

    std::vector<Elt> mul(const std::vector<Elt>& x, const std::vector<Elt>& y) const {
        auto hx = from_coords(x), hy = from_coords(y);
        std::vector<Matrix<F>> comp;
        for (std::size_t v = 0; v < vdims.size(); ++v) comp.push_back(hx[v].mul(hy[v]));
        return coords(comp);
    }

    std::vector<Elt> id_coords() const {
        std::vector<Matrix<F>> id;
        for (int d : vdims) id.push_back(Matrix<F>::identity(f, d));
        return coords(id);
    }

    Elt trace_pair(int i, int j) const {
        Elt t = f.zero();
        for (std::size_t v = 0; v < vdims.size(); ++v) {
            const Matrix<F>&a = homs[i][v], &b = homs[j][v];
            for (int r = 0; r < a.rows; ++r)
                for (int c = 0; c < a.cols; ++c) t = f.add(t, f.mul(a.at(r, c), b.at(c, r)));
        }
        return t;
    }
};

// A finite-dimensional algebra given by a multiplication table, used for the
// semisimple quotient End(M)/rad.
template <class F>
struct TableRing {
    using Elt = typename F::Elt;
    F f;
    int q = 0;
    std::vector<std::vector<std::vector<Elt>>> mt; // mt[i][j] = coords of b_i b_j
    std::vector<Elt> one;

    std::vector<Elt> zero_v() const { return std::vector<Elt>(q, f.zero()); }

    bool is_zero_v(const std::vector<Elt>& a) const {
        for (auto& x : a)
            if (!f.is_zero(x)) return false;
        return true;
    }

    bool eq_v(const std::vector<Elt>& a, const std::vector<Elt>& b) const {
        for (int i = 0; i < q; ++i)
            if (!f.eq(a[i], b[i])) return false;
        return true;
    }

    std::vector<Elt> mul(const std::vector<Elt>& a, const std::vector<Elt>& b) const {
        std::vector<Elt> out = zero_v();
        for (int i = 0; i < q; ++i) {
            if (f.is_zero(a[i])) continue;
            for (int j = 0; j < q; ++j) {
                if (f.is_zero(b[j])) continue;
                Elt c = f.mul(a[i], b[j]);
                for (int t = 0; t < q; ++t) out[t] = f.add(out[t], f.mul(c, mt[i][j][t]));
            }
        }
        return out;
    }

    std::vector<Elt> pow(std::vector<Elt> a, bigint e) const {
        std::vector<Elt> r = one;
        while (e > 0) {
            if ((e & 1) != 0) r = mul(r, a);
            e >>= 1;
            if (e > 0) a = mul(a, a);
        }
        return r;
    }

    Matrix<F> left_mult(const std::vector<Elt>& a) const {
        Matrix<F> m(f, q, q);
        for (int j = 0; j < q; ++j) {
            std::vector<Elt> ej = zero_v();
            ej[j] = f.one();
            auto col = mul(a, ej);
            for (int i = 0; i < q; ++i) m.at(i, j) = col[i];
        }
        return m;
    }

    std::vector<Elt> eval_poly(const Poly<F>& p, const std::vector<Elt>& a) const {
        std::vector<Elt> r = zero_v();
        for (int i = p.deg(); i >= 0; --i) {
            r = mul(r, a);
            for (int t = 0; t < q; ++t)
                r[t] = f.add(r[t], f.mul(p.c[i], one[t]));
        }
        return r;
    }
};

// From a reducible minimal polynomial m of z, split off the primary part of
// its first irreducible factor and return the corresponding idempotent
// polynomial evaluated at z.
template <class F>
std::vector<typename F::Elt> crt_idempotent(const TableRing<F>& R, const Poly<F>& m,
                                            const Poly<F>& f1,
                                            const std::vector<typename F::Elt>& z) {
    const F& f = R.f;
    Poly<F> g1 = Poly<F>::constant(f, f.one());
    Poly<F> rest = m;
    while (true) {
        auto [quo, rem] = poly_divmod(rest, f1);
        if (!rem.is_zero()) break;
        g1 = poly_mul(g1, f1);
        rest = quo;
    }
    if (g1.deg() <= 0 || rest.deg() <= 0)
        throw Error("internal: degenerate factor split");
    Poly<F> g, s, t;
    poly_ext_gcd(g1, rest, g, s, t);
    if (g.deg() != 0) throw Error("internal: primary parts not coprime");
    typename F::Elt ginv = f.inv(g.c[0]);
    // u*g1 + v*rest = 1 with v = t/g; the idempotent is (v*rest)(z)
    Poly<F> vrest = poly_scale(poly_mul(t, rest), ginv);
    vrest = poly_mod(vrest, m);
    auto e = R.eval_poly(vrest, z);
    if (!R.eq_v(R.mul(e, e), e) || R.is_zero_v(e) || R.eq_v(e, R.one))
        throw Error("internal: bad splitting idempotent");
    return e;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Certified splitting.  try_split either proves M indecomposable (returns
// false) or fills s1, s2 with complementary action-closed images of an
// idempotent endomorphism (returns true).  It never guesses: when neither
// outcome can be certified it throws Inconclusive.
// ---------------------------------------------------------------------------

template <class F>
bool try_split(const Module<F>& M, Sub<F>& s1, Sub<F>& s2, std::mt19937_64& rng) {
    using Elt = typename F::Elt;
    const F& f = M.A->field;
    detail::EndRing<F> E(M);
    if (E.k == 0) throw Error("internal: End of a nonzero module is zero");
    if (E.k == 1) return false; // End = scalars, hence local

    // The trace pairing detects the radical; over a prime field this needs
    // p > dim M (each simple block of End/rad contributes a nonzero integer
    // weight bounded by dim M).
    if constexpr (std::is_same_v<F, PrimeField>) {
        if ((std::uint64_t)M.total() >= M.A->spec.prime)
            throw FieldTooSmall(
                "prime " + std::to_string(M.A->spec.prime) +
                " too small to certify a decomposition of a module of dimension " +
                std::to_string(M.total()));
    }

    Matrix<F> gram(f, E.k, E.k);
    for (int i = 0; i < E.k; ++i)
        for (int j = 0; j <= i; ++j) {
            Elt t = E.trace_pair(i, j);
            gram.at(i, j) = t;
            gram.at(j, i) = t;
        }
    Matrix<F> radE = kernel_basis(gram); // k x r

    // complement of the radical inside End, giving coordinates on End/rad
    Matrix<F> idk = Matrix<F>::identity(f, E.k);
    std::vector<int> upick = extend_basis(radE, idk);
    const int q = (int)upick.size();
    if (q + radE.cols != E.k) throw Error("internal: radical complement mismatch");
    Matrix<F> C = Matrix<F>::hstack(radE, idk.cols_slice(upick));
    auto Cinv = inverse(C);
    if (!Cinv) throw Error("internal: complement not invertible");
    Matrix<F> pi(f, q, E.k); // projection to quotient coordinates
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < E.k; ++j) pi.at(i, j) = Cinv->at(radE.cols + i, j);

    auto project = [&](const std::vector<Elt>& x) {
        std::vector<Elt> out(q, f.zero());
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < E.k; ++j) out[i] = f.add(out[i], f.mul(pi.at(i, j), x[j]));
        return out;
    };
    auto unit_E = [&](int c) {
        std::vector<Elt> x(E.k, f.zero());
        x[c] = f.one();
        return x;
    };

    if (q == 1) return false; // End/rad = scalars, End local

    detail::TableRing<F> R;
    R.f = f;
    R.q = q;
    R.mt.assign(q, std::vector<std::vector<Elt>>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            R.mt[i][j] = project(E.mul(unit_E(upick[i]), unit_E(upick[j])));
    R.one = project(E.id_coords());

    // center of End/rad
    Matrix<F> comm(f, q * q, q);
    for (int t = 0; t < q; ++t)
        for (int c = 0; c < q; ++c)
            for (int i = 0; i < q; ++i)
                comm.at(t * q + c, i) =
                    f.sub(comm.at(t * q + c, i), f.sub(R.mt[t][i][c], R.mt[i][t][c]));
    Matrix<F> Zmat = kernel_basis(comm); // q x dz
    const int dz = Zmat.cols;
    auto zcol = [&](const Matrix<F>& m, int c) {
        std::vector<Elt> v(m.rows, f.zero());
        for (int i = 0; i < m.rows; ++i) v[i] = m.at(i, c);
        return v;
    };

    // Produces the split from a nontrivial idempotent of End/rad: lift it to
    // an idempotent endomorphism and take complementary images.
    auto lift_and_split = [&](std::vector<Elt> ebar) {
        std::vector<Elt> x(E.k, f.zero());
        for (int i = 0; i < q; ++i)
            for (int t = 0; t < E.k; ++t)
                if (upick[i] == t) x[t] = f.add(x[t], ebar[i]);
        for (int iter = 0; iter < 64; ++iter) {
            auto x2 = E.mul(x, x);
            bool fixed = true;
            for (int i = 0; i < E.k; ++i)
                if (!f.eq(x2[i], x[i])) { fixed = false; break; }
            if (fixed) break;
            auto x3 = E.mul(x2, x);
            for (int i = 0; i < E.k; ++i) {
                // x <- 3x^2 - 2x^3
                Elt three2 = f.mul(f.from_int(3), x2[i]);
                Elt two3 = f.mul(f.from_int(2), x3[i]);
                x[i] = f.sub(three2, two3);
            }
        }
        auto x2 = E.mul(x, x);
        for (int i = 0; i < E.k; ++i)
            if (!f.eq(x2[i], x[i])) throw Error("internal: idempotent lifting stalled");
        bool zero = true, ident = true;
        auto idc = E.id_coords();
        for (int i = 0; i < E.k; ++i) {
            if (!f.is_zero(x[i])) zero = false;
            if (!f.eq(x[i], idc[i])) ident = false;
        }
        if (zero || ident) throw Error("internal: idempotent lifted to a trivial one");
        auto h = E.from_coords(x);
        std::vector<Matrix<F>> hc;
        for (std::size_t v = 0; v < h.size(); ++v)
            hc.push_back(Matrix<F>::identity(f, E.vdims[v]).sub(h[v]));
        s1 = image_sub(make_map(M, M, h));
        s2 = image_sub(make_map(M, M, hc));
        for (std::size_t v = 0; v < h.size(); ++v) {
            Matrix<F> both = Matrix<F>::hstack(s1[v], s2[v]);
            if (both.cols != E.vdims[v] || rank(both) != E.vdims[v])
                throw Error("internal: idempotent images are not complementary");
        }
        if (sub_total_dim(s1) == 0 || sub_total_dim(s2) == 0)
            throw Error("internal: trivial split");
    };

    auto random_vec = [&](int n, int amp) {
        std::vector<Elt> v(n, f.zero());
        if (M.A->spec.rationals) {
            std::uniform_int_distribution<int> d(-amp, amp);
            for (int i = 0; i < n; ++i) v[i] = f.from_int(d(rng));
        } else {
            for (int i = 0; i < n; ++i) v[i] = f.random(rng);
        }
        return v;
    };

    if constexpr (std::is_same_v<F, PrimeField>) {
        // --- prime field ---
        const bigint p = bigint(M.A->spec.prime);
        // number of simple components = fixed space of Frobenius on the center
        Matrix<F> ZP(f, q, dz);
        for (int c = 0; c < dz; ++c) {
            auto zp = R.pow(zcol(Zmat, c), p);
            for (int i = 0; i < q; ++i) ZP.at(i, c) = zp[i];
        }
        auto frob = solve(Zmat, ZP);
        if (!frob) throw Error("internal: Frobenius left the center");
        Matrix<F> fr = frob->sub(Matrix<F>::identity(f, dz));
        int comps = kernel_basis(fr).cols;

        if (comps >= 2) {
            // split through a central element with reducible minimal polynomial
            for (int attempt = 0; attempt < 512 + dz; ++attempt) {
                std::vector<Elt> z;
                if (attempt < dz) z = zcol(Zmat, attempt);
                else {
                    auto cf = random_vec(dz, 0);
                    z.assign(q, f.zero());
                    for (int c = 0; c < dz; ++c)
                        for (int i = 0; i < q; ++i)
                            z[i] = f.add(z[i], f.mul(cf[c], Zmat.at(i, c)));
                }
                Poly<F> m = minimal_polynomial(R.left_mult(z));
                auto fac = fp_factor_distinct(m, rng);
                if (fac.size() < 2) continue;
                lift_and_split(detail::crt_idempotent(R, m, fac[0], z));
                return true;
            }
            throw Inconclusive("failed to realize a central splitting idempotent");
        }
        // one simple component
        if (dz == q) return false; // commutative field: End is local
        // matrix ring over a finite field: hunt for a non-primary element
        for (int attempt = 0; attempt < 512; ++attempt) {
            auto z = random_vec(q, 0);
            Poly<F> m = minimal_polynomial(R.left_mult(z));
            auto fac = fp_factor_distinct(m, rng);
            if (fac.size() < 2) continue;
            lift_and_split(detail::crt_idempotent(R, m, fac[0], z));
            return true;
        }
        throw Inconclusive("matrix-ring split search exhausted");
    } else {
    // --- rationals ---
    if (dz == q) {
        // commutative: find a primitive element and factor its minimal polynomial
        for (int attempt = 0; attempt < 64 + q; ++attempt) {
            std::vector<Elt> z;
            if (attempt < q) z = zcol(Matrix<F>::identity(f, q), attempt);
            else z = random_vec(q, 9);
            Poly<F> m = minimal_polynomial(R.left_mult(z));
            if (m.deg() < 1) continue;
            auto fac = factor_squarefree(m, rng); // minimal polynomials here are squarefree
            if (fac.size() >= 2) {
                lift_and_split(detail::crt_idempotent(R, m, fac[0], z));
                return true;
            }
            if (m.deg() == q) return false; // primitive with irreducible minimal polynomial
        }
        throw Inconclusive("no primitive element found in a commutative End/rad");
    }
    // noncommutative over the rationals: look for a zero divisor and cut out
    // the idempotent generating its left ideal
    {
        std::vector<std::vector<Elt>> cands;
        for (int i = 0; i < q; ++i) {
            std::vector<Elt> e(q, f.zero());
            e[i] = f.one();
            cands.push_back(e);
        }
        int nb = q;
        for (int i = 0; i < nb; ++i)
            for (int j = i + 1; j < nb; ++j) {
                std::vector<Elt> s(q, f.zero());
                for (int t = 0; t < q; ++t) s[t] = f.add(cands[i][t], cands[j][t]);
                cands.push_back(s);
            }
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j)
                if (i != j) cands.push_back(R.mul(cands[i], cands[j]));
        for (int attempt = 0; attempt < 500; ++attempt) cands.push_back(random_vec(q, 4));

        for (auto& a : cands) {
            if (R.is_zero_v(a)) continue;
            Matrix<F> La = R.left_mult(a);
            if (rank(La) == q) continue; // invertible, useless
            // e in the left ideal (End/rad)a with a e = a is a nontrivial idempotent
            Matrix<F> Ra(f, q, q);
            for (int j = 0; j < q; ++j) {
                std::vector<Elt> ej(q, f.zero());
                ej[j] = f.one();
                auto col = R.mul(ej, a);
                for (int i = 0; i < q; ++i) Ra.at(i, j) = col[i];
            }
            Matrix<F> Sa = span_canonical(Ra);
            Matrix<F> avec(f, q, 1);
            for (int i = 0; i < q; ++i) avec.at(i, 0) = a[i];
            auto y = solve(La.mul(Sa), avec);
            if (!y) continue;
            Matrix<F> evec = Sa.mul(*y);
            std::vector<Elt> e(q, f.zero());
            for (int i = 0; i < q; ++i) e[i] = evec.at(i, 0);
            if (R.is_zero_v(e) || R.eq_v(e, R.one) || !R.eq_v(R.mul(e, e), e)) continue;
            lift_and_split(e);
            return true;
        }
        throw Inconclusive("End/rad may be a division algebra over the rationals; "
                           "no zero divisor found");
    }
    }
}

// ---------------------------------------------------------------------------
// Full decomposition with an isomorphism certificate.
// ---------------------------------------------------------------------------

template <class F>
std::vector<Sub<F>> connected_component_subs(const Module<F>& M) {
    auto off = block_offsets(M);
    const int n = M.total();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    const auto& A = *M.A;
    for (std::size_t g = 0; g < A.gens.size(); ++g) {
        const auto& gen = A.gens[g];
        for (int i = 0; i < M.act[g].rows; ++i)
            for (int j = 0; j < M.act[g].cols; ++j)
                if (!A.field.is_zero(M.act[g].at(i, j)))
                    unite(off[gen.src] + j, off[gen.tgt] + i);
    }
    std::map<int, std::vector<int>> groups; // root -> coordinates
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<Sub<F>> out;
    for (auto& [root, coords] : groups) {
        (void)root;
        Sub<F> s;
        for (std::size_t v = 0; v < M.dims.size(); ++v) {
            std::vector<int> local;
            for (int c : coords)
                if (c >= off[v] && c < off[v + 1]) local.push_back(c - off[v]);
            Matrix<F> m(A.field, M.dims[v], (int)local.size());
            for (int j = 0; j < (int)local.size(); ++j) m.at(local[j], j) = A.field.one();
            s.push_back(std::move(m));
        }
        out.push_back(std::move(s));
    }
    return out;
}

template <class F>
struct Decomposition {
    std::vector<Module<F>> summands;  // indecomposable
    std::vector<ModuleMap<F>> incl;   // inclusions into the decomposed module
};

template <class F>
Decomposition<F> decompose(const Module<F>& M, std::uint64_t seed = 0x17AB0001u) {
    Decomposition<F> out;
    if (M.total() == 0) return out;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Module<F>, ModuleMap<F>>> work;
    for (auto& s : connected_component_subs(M)) {
        auto sm = submodule(M, s);
        work.emplace_back(std::move(sm.mod), std::move(sm.incl));
    }
    while (!work.empty()) {
        auto [X, inc] = std::move(work.back());
        work.pop_back();
        if (X.total() == 0) continue;
        Sub<F> s1, s2;
        if (!try_split(X, s1, s2, rng)) {
            out.summands.push_back(std::move(X));
            out.incl.push_back(std::move(inc));
            continue;
        }
        for (auto* s : {&s1, &s2}) {
            auto sm = submodule(X, *s);
            work.emplace_back(std::move(sm.mod), compose_map(inc, sm.incl));
        }
    }
    // certificate: the inclusions assemble to an isomorphism from the sum
    for (std::size_t v = 0; v < M.dims.size(); ++v) {
        Matrix<F> all(M.A->field, M.dims[v], 0);
        for (auto& fm : out.incl) all = Matrix<F>::hstack(all, fm.comp[v]);
        if (all.cols != M.dims[v] || rank(all) != M.dims[v])
            throw Error("internal: decomposition certificate failed");
    }
    return out;
}

template <class F>
bool is_indecomposable(const Module<F>& M, std::uint64_t seed = 0x17AB0001u) {
    if (M.total() == 0) return false;
    return decompose(M, seed).summands.size() == 1;
}

// Complete isomorphism test for indecomposables: X and Y are isomorphic
// exactly when some pair from the hom bases composes to an automorphism of X
// (End(X) is local, so if every composite lies in its radical, bilinearity
// puts every composite there, and no isomorphism exists).
template <class F>
bool iso_indecomposable(const Module<F>& X, const Module<F>& Y) {
    if (X.A != Y.A || X.dims != Y.dims) return false;
    if (X.total() == 0) return true;
    auto fs = hom_basis(X, Y);
    auto gs = hom_basis(Y, X);
    for (auto& fh : fs)
        for (auto& gh : gs) {
            bool inv = true;
            for (std::size_t v = 0; v < fh.size() && inv; ++v)
                if (!inverse(gh[v].mul(fh[v]))) inv = false;
            if (inv) return true;
        }
    return false;
}

template <class F>
bool is_isomorphic(const Module<F>& X, const Module<F>& Y,
                   std::uint64_t seed = 0x17AB0001u) {
    if (X.A != Y.A || X.dims != Y.dims) return false;
    if (X.total() == 0) return true;
    auto dx = decompose(X, seed);
    auto dy = decompose(Y, seed);
    if (dx.summands.size() != dy.summands.size()) return false;
    std::vector<char> used(dy.summands.size(), 0);
    for (auto& sx : dx.summands) {
        bool matched = false;
        for (std::size_t j = 0; j < dy.summands.size() && !matched; ++j) {
            if (used[j]) continue;
            if (iso_indecomposable(sx, dy.summands[j])) {
                used[j] = 1;
                matched = true;
            }
        }
        if (!matched) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Registry of indecomposable isomorphism classes over one algebra.
// ---------------------------------------------------------------------------

template <class F>
struct IsoClassRegistry {
    AlgPtr<F> A;
    struct Entry {
        Module<F> rep;
        std::string label;
    };
    std::vector<Entry> entries;
    std::map<std::tuple<std::vector<int>, int, int>, std::vector<int>> buckets;

    explicit IsoClassRegistry(AlgPtr<F> a) : A(std::move(a)) {}

    int classify_indec(const Module<F>& X) {
        if (X.A != A) throw Error("registry: module over a different algebra");
        auto key = std::make_tuple(X.dims, sub_total_dim(radical_sub(X)),
                                   sub_total_dim(socle_sub(X)));
        auto& bucket = buckets[key];
        for (int id : bucket)
            if (iso_indecomposable(entries[id].rep, X)) return id;
        int id = (int)entries.size();
        entries.push_back({X, std::string()});
        entries[id].label = standard_label(X, id);
        bucket.push_back(id);
        return id;
    }

    // class id -> multiplicity
    std::map<int, int> classify(const Module<F>& M, std::uint64_t seed = 0x17AB0001u) {
        std::map<int, int> mult;
        for (auto& s : decompose(M, seed).summands) ++mult[classify_indec(s)];
        return mult;
    }

    const Module<F>& rep(int id) const { return entries[id].rep; }
    const std::string& label(int id) const { return entries[id].label; }

  private:
    std::string standard_label(const Module<F>& X, int id) const {
        for (int v = 0; v < A->nv(); ++v)
            if (iso_indecomposable(X, simple_module(A, v)))
                return "S(" + A->vertex_names[v] + ")";
        for (int v = 0; v < A->nv(); ++v)
            if (iso_indecomposable(X, projective_module(A, v)))
                return "P(" + A->vertex_names[v] + ")";
        for (int v = 0; v < A->nv(); ++v)
            if (iso_indecomposable(X, injective_module(A, v)))
                return "I(" + A->vertex_names[v] + ")";
        std::string s = "M" + std::to_string(id) + "[";
        for (std::size_t v = 0; v < X.dims.size(); ++v) {
            if (v) s += ",";
            s += std::to_string(X.dims[v]);
        }
        return s + "]";
    }
};

} // namespace itlab
