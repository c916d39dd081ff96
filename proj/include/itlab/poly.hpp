#pragma once

// Univariate polynomials over an exact field, plus the two factorization
// routines the decomposition machinery needs:
//   - Cantor-Zassenhaus over F_p (odd p), seeded and deterministic per seed;
//   - Zassenhaus over Q (factor mod p, Hensel lift, subset recombination).
// Coefficients are stored ascending; polys are kept normalized (no zero lead).

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"

namespace itlab {

template <class F>
struct Poly {
    using Elt = typename F::Elt;
    F f{};
    std::vector<Elt> c;  // c[i] multiplies x^i

    Poly() = default;
    explicit Poly(F f_) : f(f_) {}
    Poly(F f_, std::vector<Elt> cs) : f(f_), c(std::move(cs)) { trim(); }

    void trim() {
        while (!c.empty() && f.is_zero(c.back())) c.pop_back();
    }
    int deg() const { return (int)c.size() - 1; }  // -1 for zero poly
    bool is_zero() const { return c.empty(); }
    Elt lead() const { return c.back(); }
    Elt coeff(int i) const { return i < (int)c.size() ? c[i] : f.zero(); }

    static Poly x(F f) { return Poly(f, {f.zero(), f.one()}); }
    static Poly constant(F f, Elt v) { return Poly(f, {v}); }
    static Poly monomial(F f, int d, Elt v) {
        std::vector<Elt> cs(d + 1, f.zero());
        cs[d] = v;
        return Poly(f, std::move(cs));
    }

    bool operator==(const Poly& o) const {
        if (c.size() != o.c.size()) return false;
        for (size_t i = 0; i < c.size(); ++i)
            if (!f.eq(c[i], o.c[i])) return false;
        return true;
    }
};

template <class F>
Poly<F> poly_add(const Poly<F>& a, const Poly<F>& b) {
    const F f = a.f;
    std::vector<typename F::Elt> c(std::max(a.c.size(), b.c.size()), f.zero());
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff((int)i), b.coeff((int)i));
    return Poly<F>(f, std::move(c));
}

template <class F>
Poly<F> poly_sub(const Poly<F>& a, const Poly<F>& b) {
    const F f = a.f;
    std::vector<typename F::Elt> c(std::max(a.c.size(), b.c.size()), f.zero());
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff((int)i), b.coeff((int)i));
    return Poly<F>(f, std::move(c));
}

template <class F>
Poly<F> poly_mul(const Poly<F>& a, const Poly<F>& b) {
    const F f = a.f;
    if (a.is_zero() || b.is_zero()) return Poly<F>(f);
    std::vector<typename F::Elt> c(a.c.size() + b.c.size() - 1, f.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (f.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.c[i], b.c[j]));
    }
    return Poly<F>(f, std::move(c));
}

template <class F>
Poly<F> poly_scale(const Poly<F>& a, const typename F::Elt& s) {
    Poly<F> r = a;
    for (auto& x : r.c) x = a.f.mul(x, s);
    r.trim();
    return r;
}

template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const Poly<F>& a, const Poly<F>& b) {
    const F f = a.f;
    if (b.is_zero()) throw Error("polynomial division by zero");
    Poly<F> q(f), r = a;
    q.c.assign(std::max<int>(0, a.deg() - b.deg() + 1), f.zero());
    typename F::Elt il = f.inv(b.lead());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int d = r.deg() - b.deg();
        typename F::Elt s = f.mul(r.lead(), il);
        q.c[d] = f.add(q.c[d], s);
        for (int i = 0; i <= b.deg(); ++i)
            r.c[i + d] = f.sub(r.c[i + d], f.mul(s, b.c[i]));
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class F>
Poly<F> poly_mod(const Poly<F>& a, const Poly<F>& b) {
    return poly_divmod(a, b).second;
}

template <class F>
Poly<F> poly_monic(const Poly<F>& a) {
    if (a.is_zero()) return a;
    return poly_scale(a, a.f.inv(a.lead()));
}

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

// g = gcd(a,b) = s a + t b
template <class F>
void poly_ext_gcd(const Poly<F>& a, const Poly<F>& b, Poly<F>& g, Poly<F>& s, Poly<F>& t) {
    const F f = a.f;
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = Poly<F>::constant(f, f.one()), s1(f);
    Poly<F> t0(f), t1 = Poly<F>::constant(f, f.one());
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly<F> s2 = poly_sub(s0, poly_mul(q, s1));
        Poly<F> t2 = poly_sub(t0, poly_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        typename F::Elt il = f.inv(r0.lead());
        r0 = poly_scale(r0, il);
        s0 = poly_scale(s0, il);
        t0 = poly_scale(t0, il);
    }
    g = r0;
    s = s0;
    t = t0;
}

template <class F>
Poly<F> poly_derivative(const Poly<F>& a) {
    const F f = a.f;
    if (a.deg() < 1) return Poly<F>(f);
    std::vector<typename F::Elt> c(a.deg(), f.zero());
    for (int i = 1; i <= a.deg(); ++i) c[i - 1] = f.mul(a.c[i], f.from_int(i));
    return Poly<F>(f, std::move(c));
}

template <class F>
typename F::Elt poly_eval(const Poly<F>& a, const typename F::Elt& x) {
    const F f = a.f;
    typename F::Elt v = f.zero();
    for (int i = a.deg(); i >= 0; --i) v = f.add(f.mul(v, x), a.c[i]);
    return v;
}

// base^e mod m
template <class F>
Poly<F> poly_powmod(Poly<F> base, bigint e, const Poly<F>& m) {
    const F f = base.f;
    Poly<F> r = Poly<F>::constant(f, f.one());
    base = poly_mod(base, m);
    while (e > 0) {
        if ((e & 1) != 0) r = poly_mod(poly_mul(r, base), m);
        base = poly_mod(poly_mul(base, base), m);
        e >>= 1;
    }
    return r;
}

// Minimal polynomial of a square matrix: first linear dependence among
// I, A, A^2, ... found by incremental elimination.  Deterministic.
template <class F>
Poly<F> minimal_polynomial(const Matrix<F>& a) {
    const F f = a.f;
    int n = a.rows;
    if (n == 0) return Poly<F>::x(f);  // endomorphism of 0: minimal annihilator is x (by convention t)
    int n2 = n * n;
    // rows of `ech`: echelonized flattened powers; keep transform to recover coeffs
    std::vector<std::vector<typename F::Elt>> ech;       // echelon rows, length n2
    std::vector<std::vector<typename F::Elt>> trans;     // coeff rows, length = power count
    std::vector<int> lead_col;
    Matrix<F> pw = Matrix<F>::identity(f, n);
    for (int d = 0;; ++d) {
        std::vector<typename F::Elt> v(pw.a.begin(), pw.a.end());
        std::vector<typename F::Elt> coef(d + 1, f.zero());
        coef[d] = f.one();
        // reduce v by echelon rows
        for (size_t r = 0; r < ech.size(); ++r) {
            typename F::Elt x = v[lead_col[r]];
            if (f.is_zero(x)) continue;
            for (int j = 0; j < n2; ++j) v[j] = f.sub(v[j], f.mul(x, ech[r][j]));
            for (int j = 0; j <= (int)std::min(coef.size(), trans[r].size()) - 1; ++j)
                coef[j] = f.sub(coef[j], f.mul(x, trans[r][j]));
        }
        int lc = -1;
        for (int j = 0; j < n2; ++j)
            if (!f.is_zero(v[j])) {
                lc = j;
                break;
            }
        if (lc < 0) {
            // dependence found: coef gives the minimal polynomial
            return Poly<F>(f, std::move(coef));
        }
        typename F::Elt il = f.inv(v[lc]);
        for (auto& x : v) x = f.mul(x, il);
        for (auto& x : coef) x = f.mul(x, il);
        ech.push_back(std::move(v));
        trans.push_back(std::move(coef));
        lead_col.push_back(lc);
        pw = pw.mul(a);
        if (d > n2 + 1) throw Error("minimal polynomial did not terminate");
    }
}

// ---------------------------------------------------------------------------
// Factorization over F_p (odd p): squarefree -> distinct degree -> CZ.

inline Poly<PrimeField> fp_squarefree_part(const Poly<PrimeField>& a0) {
    PrimeField f = a0.f;
    Poly<PrimeField> a = poly_monic(a0);
    Poly<PrimeField> res = Poly<PrimeField>::constant(f, f.one());
    while (a.deg() > 0) {
        Poly<PrimeField> d = poly_derivative(a);
        if (d.is_zero()) {
            // a = b(x^p); replace by b (same roots, possibly repeated)
            std::vector<PrimeField::Elt> b;
            for (int i = 0; i <= a.deg(); i += (int)f.p) b.push_back(a.coeff(i));
            a = Poly<PrimeField>(f, std::move(b));
            continue;
        }
        Poly<PrimeField> g = poly_gcd(a, d);
        Poly<PrimeField> sq = poly_divmod(a, g).first;  // squarefree piece
        res = poly_mul(res, poly_divmod(sq, poly_gcd(sq, res)).first);
        a = g;
    }
    return poly_monic(res);
}

// All monic irreducible factors (with multiplicity dropped) of a; p must be odd
// except that inputs splitting without equal-degree steps still work for p=2.
inline std::vector<Poly<PrimeField>> fp_factor_distinct(const Poly<PrimeField>& input,
                                                        std::mt19937_64& rng) {
    PrimeField f = input.f;
    std::vector<Poly<PrimeField>> out;
    Poly<PrimeField> a = fp_squarefree_part(input);
    if (a.deg() <= 0) return out;
    // distinct-degree splitting
    std::vector<std::pair<Poly<PrimeField>, int>> stacks;  // (product of irreducibles of degree d, d)
    Poly<PrimeField> x = Poly<PrimeField>::x(f);
    Poly<PrimeField> h = x;
    Poly<PrimeField> rem = a;
    for (int d = 1; rem.deg() >= 2 * d; ++d) {
        h = poly_powmod(h, bigint(f.p), rem);
        Poly<PrimeField> g = poly_gcd(poly_sub(h, x), rem);
        if (g.deg() > 0) {
            stacks.push_back({g, d});
            rem = poly_divmod(rem, g).first;
            h = poly_mod(h, rem);
        }
    }
    if (rem.deg() > 0) stacks.push_back({rem, rem.deg()});
    // equal-degree splitting (Cantor-Zassenhaus, odd p)
    for (auto& [prod, d] : stacks) {
        std::vector<Poly<PrimeField>> work{prod};
        while (!work.empty()) {
            Poly<PrimeField> g = work.back();
            work.pop_back();
            if (g.deg() == d) {
                out.push_back(poly_monic(g));
                continue;
            }
            if (f.p == 2) throw Inconclusive("equal-degree factoring over F_2 not supported");
            // random split
            for (int tries = 0;; ++tries) {
                if (tries > 512) throw Inconclusive("equal-degree factoring did not split");
                std::vector<PrimeField::Elt> rc(g.deg());
                for (auto& cc : rc) cc = f.random(rng);
                Poly<PrimeField> u(f, std::move(rc));
                if (u.deg() < 1) continue;
                bigint e = (boost::multiprecision::pow(bigint(f.p), d) - 1) / 2;
                Poly<PrimeField> w = poly_powmod(u, e, g);
                w = poly_sub(w, Poly<PrimeField>::constant(f, f.one()));
                Poly<PrimeField> h2 = poly_gcd(w, g);
                if (h2.deg() > 0 && h2.deg() < g.deg()) {
                    work.push_back(h2);
                    work.push_back(poly_divmod(g, h2).first);
                    break;
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [&](const Poly<PrimeField>& l, const Poly<PrimeField>& r) {
        if (l.deg() != r.deg()) return l.deg() < r.deg();
        for (int i = l.deg(); i >= 0; --i)
            if (l.c[i] != r.c[i]) return l.c[i] < r.c[i];
        return false;
    });
    return out;
}

// All roots of a in F_p (each once).
inline std::vector<PrimeField::Elt> fp_roots(const Poly<PrimeField>& a, std::mt19937_64& rng) {
    std::vector<PrimeField::Elt> roots;
    PrimeField f = a.f;
    if (f.p <= 4096) {
        Poly<PrimeField> sq = fp_squarefree_part(a);
        for (PrimeField::Elt c = 0; c < f.p; ++c)
            if (f.is_zero(poly_eval(sq, c))) roots.push_back(c);
        return roots;
    }
    for (auto& g : fp_factor_distinct(a, rng))
        if (g.deg() == 1) roots.push_back(f.neg(g.c[0]));
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------
// Factorization over Q: Zassenhaus.  Input is made monic over Z by the
// substitution x -> x/lc, which keeps every factor monic.

namespace detail {

inline bigint bi_mod(const bigint& a, const bigint& m) {
    bigint r = a % m;
    if (r < 0) r += m;
    return r;
}
inline bigint bi_symm(const bigint& a, const bigint& m) {
    bigint r = bi_mod(a, m);
    if (2 * r > m) r -= m;
    return r;
}

using ZPoly = std::vector<bigint>;  // ascending, not necessarily normalized

inline void z_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int z_deg(const ZPoly& a) { return (int)a.size() - 1; }

inline ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, bigint(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline ZPoly z_mod_coeffs(ZPoly a, const bigint& m) {
    for (auto& x : a) x = bi_mod(x, m);
    z_trim(a);
    return a;
}

inline ZPoly z_mulmod(const ZPoly& a, const ZPoly& b, const bigint& m) {
    return z_mod_coeffs(z_mul(a, b), m);
}

// divmod by a monic divisor, coefficients in Z/m
inline std::pair<ZPoly, ZPoly> z_divmod_monic_mod(ZPoly a, const ZPoly& b, const bigint& m) {
    a = z_mod_coeffs(std::move(a), m);
    ZPoly q;
    if (z_deg(a) >= z_deg(b)) q.assign(z_deg(a) - z_deg(b) + 1, bigint(0));
    while (z_deg(a) >= z_deg(b) && z_deg(b) >= 0) {
        int d = z_deg(a) - z_deg(b);
        bigint s = a.back();
        if (s == 0) {
            a.pop_back();
            continue;
        }
        q[d] = s;
        for (int i = 0; i <= z_deg(b); ++i) a[i + d] = bi_mod(a[i + d] - s * b[i], m);
        z_trim(a);
    }
    z_trim(q);
    return {q, a};
}

inline ZPoly z_sub_mod(const ZPoly& a, const ZPoly& b, const bigint& m) {
    ZPoly c(std::max(a.size(), b.size()), bigint(0));
    for (size_t i = 0; i < c.size(); ++i) {
        bigint x = i < a.size() ? a[i] : bigint(0);
        bigint y = i < b.size() ? b[i] : bigint(0);
        c[i] = bi_mod(x - y, m);
    }
    z_trim(c);
    return c;
}

inline ZPoly z_add_mod(const ZPoly& a, const ZPoly& b, const bigint& m) {
    ZPoly c(std::max(a.size(), b.size()), bigint(0));
    for (size_t i = 0; i < c.size(); ++i) {
        bigint x = i < a.size() ? a[i] : bigint(0);
        bigint y = i < b.size() ? b[i] : bigint(0);
        c[i] = bi_mod(x + y, m);
    }
    z_trim(c);
    return c;
}

// Quadratic two-factor Hensel: f = g h (mod m) with monic g, h and
// s g + t h = 1 (mod m) lifts everything to mod m^2.
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const bigint& m) {
    bigint m2 = m * m;
    ZPoly e = z_sub_mod(z_mod_coeffs(f, m2), z_mulmod(g, h, m2), m2);
    auto [q, r] = z_divmod_monic_mod(z_mulmod(s, e, m2), h, m2);
    ZPoly g1 = z_add_mod(g, z_add_mod(z_mulmod(t, e, m2), z_mulmod(q, g, m2), m2), m2);
    ZPoly h1 = z_add_mod(h, r, m2);
    ZPoly one{bigint(1)};
    ZPoly b = z_sub_mod(z_add_mod(z_mulmod(s, g1, m2), z_mulmod(t, h1, m2), m2), one, m2);
    auto [c, d] = z_divmod_monic_mod(z_mulmod(s, b, m2), h1, m2);
    ZPoly s1 = z_sub_mod(s, d, m2);
    ZPoly t1 = z_sub_mod(t, z_add_mod(z_mulmod(t, b, m2), z_mulmod(c, g1, m2), m2), m2);
    g = g1;
    h = h1;
    s = s1;
    t = t1;
}

// Lifts the monic factorization f = prod(factors) (mod p) to mod target (a
// power of p) by recursive binary splitting.
inline std::vector<ZPoly> hensel_lift_list(const ZPoly& f, std::vector<ZPoly> factors,
                                           std::uint64_t p, const bigint& target) {
    if (factors.size() == 1) return {z_mod_coeffs(f, target)};
    size_t half = factors.size() / 2;
    PrimeField fp(p);
    // assemble both halves mod p
    auto prod_mod_p = [&](size_t lo, size_t hi) {
        ZPoly r{bigint(1)};
        for (size_t i = lo; i < hi; ++i) r = z_mulmod(r, factors[i], bigint(p));
        return r;
    };
    ZPoly g = prod_mod_p(0, half), h = prod_mod_p(half, factors.size());
    // Bezout mod p via field arithmetic
    auto to_fp = [&](const ZPoly& a) {
        std::vector<PrimeField::Elt> c;
        c.reserve(a.size());
        for (auto& x : a) c.push_back(fp.from_bigint(x));
        return Poly<PrimeField>(fp, std::move(c));
    };
    auto to_z = [&](const Poly<PrimeField>& a) {
        ZPoly c;
        c.reserve(a.c.size());
        for (auto& x : a.c) c.push_back(bigint(x));
        return c;
    };
    Poly<PrimeField> gg, ss, tt;
    poly_ext_gcd(to_fp(g), to_fp(h), gg, ss, tt);
    if (gg.deg() != 0) throw Inconclusive("modular factors not coprime in hensel lift");
    ZPoly s = to_z(ss), t = to_z(tt);
    bigint m(p);
    while (m < target) {
        hensel_step(f, g, h, s, t, m);
        m = m * m;
    }
    std::vector<ZPoly> left(factors.begin(), factors.begin() + half);
    std::vector<ZPoly> right(factors.begin() + half, factors.end());
    auto lf = hensel_lift_list(z_mod_coeffs(g, m), std::move(left), p, target);
    auto rf = hensel_lift_list(z_mod_coeffs(h, m), std::move(right), p, target);
    for (auto& x : rf) lf.push_back(std::move(x));
    for (auto& x : lf) x = z_mod_coeffs(std::move(x), target);
    return lf;
}

// exact division test over Z for monic divisor
inline bool z_divides_monic(const ZPoly& f, const ZPoly& g) {
    ZPoly r = f;
    z_trim(r);
    ZPoly d = g;
    z_trim(d);
    if (d.empty()) return false;
    while (z_deg(r) >= z_deg(d)) {
        bigint s = r.back();
        int sh = z_deg(r) - z_deg(d);
        for (int i = 0; i <= z_deg(d); ++i) r[i + sh] -= s * d[i];
        z_trim(r);
    }
    return r.empty();
}

}  // namespace detail

// Irreducible monic factors (each once; input must be squarefree) of a monic
// integer polynomial.  The rng only drives the modular equal-degree splits.
inline std::vector<detail::ZPoly> zassenhaus_monic_squarefree(const detail::ZPoly& f0,
                                                              std::mt19937_64& rng) {
    using namespace detail;
    ZPoly f = f0;
    z_trim(f);
    if (z_deg(f) <= 0) return {};
    if (f.back() != 1) throw Error("zassenhaus expects a monic input");
    if (z_deg(f) == 1) return {f};
    // pick an odd prime where f stays squarefree
    static const std::uint64_t kPrimes[] = {3,    5,    7,    11,   13,   17,   19,   23,  29,
                                            31,   37,   41,   43,   53,   61,   71,   83,  97,
                                            101,  127,  157,  211,  257,  331,  401,  503, 601,
                                            701,  809,  907,  1009, 1213, 1423, 1619, 1823};
    std::uint64_t p = 0;
    Poly<PrimeField> fp_poly;
    for (std::uint64_t cand : kPrimes) {
        PrimeField fp(cand);
        std::vector<PrimeField::Elt> c;
        for (auto& x : f) c.push_back(fp.from_bigint(x));
        Poly<PrimeField> a(fp, std::move(c));
        if (a.deg() != z_deg(f)) continue;  // lead vanished (cannot happen: monic)
        Poly<PrimeField> d = poly_derivative(a);
        if (d.is_zero()) continue;
        if (poly_gcd(a, d).deg() == 0) {
            p = cand;
            fp_poly = a;
            break;
        }
    }
    if (p == 0) throw Inconclusive("no good prime found for rational factorization");
    auto modular = fp_factor_distinct(fp_poly, rng);
    if (modular.size() == 1) return {f};  // irreducible mod p => irreducible over Q
    if (modular.size() > 24) throw Inconclusive("too many modular factors to recombine");
    // coefficient bound for monic factors: generous Mignotte-style bound
    bigint l1(0);
    for (auto& x : f) l1 += abs(x);
    bigint bound = (l1 + 1) << (unsigned)(z_deg(f) + 1);
    bigint target(p);
    while (target <= 2 * bound) target *= target;
    std::vector<ZPoly> zfac;
    for (auto& g : modular) {
        ZPoly zg;
        for (auto& x : g.c) zg.push_back(bigint(x));
        zfac.push_back(std::move(zg));
    }
    auto lifted = hensel_lift_list(z_mod_coeffs(f, target), zfac, p, target);
    // subset recombination
    std::vector<ZPoly> result;
    std::vector<int> alive(lifted.size());
    for (size_t i = 0; i < lifted.size(); ++i) alive[i] = (int)i;
    ZPoly rem = f;
    auto symm_poly = [&](ZPoly a) {
        for (auto& x : a) x = bi_symm(x, target);
        return a;
    };
    size_t k = 1;
    while (2 * k <= alive.size()) {
        bool found = false;
        std::vector<int> comb(k);
        for (size_t i = 0; i < k; ++i) comb[i] = (int)i;
        while (true) {
            ZPoly prod{bigint(1)};
            for (size_t i = 0; i < k; ++i) prod = z_mulmod(prod, lifted[alive[comb[i]]], target);
            ZPoly cand = symm_poly(prod);
            bool ok = true;
            for (auto& x : cand)
                if (abs(x) > bound) {
                    ok = false;
                    break;
                }
            if (ok && z_divides_monic(rem, cand)) {
                result.push_back(cand);
                // remove used indices, divide rem
                std::vector<int> nxt;
                for (size_t i = 0, ci = 0; i < alive.size(); ++i) {
                    if (ci < k && (int)i == comb[ci]) {
                        ++ci;
                        continue;
                    }
                    nxt.push_back(alive[i]);
                }
                alive = std::move(nxt);
                ZPoly q;
                {
                    ZPoly r2 = rem;
                    q.assign(z_deg(r2) - z_deg(cand) + 1, bigint(0));
                    while (z_deg(r2) >= z_deg(cand)) {
                        bigint s = r2.back();
                        int sh = z_deg(r2) - z_deg(cand);
                        q[sh] = s;
                        for (int i = 0; i <= z_deg(cand); ++i) r2[i + sh] -= s * cand[i];
                        z_trim(r2);
                    }
                }
                rem = q;
                found = true;
                break;
            }
            // next combination
            int i = (int)k - 1;
            while (i >= 0 && comb[i] == (int)(alive.size() - k + i)) --i;
            if (i < 0) break;
            ++comb[i];
            for (size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!found) ++k;
    }
    if (detail::z_deg(rem) > 0) result.push_back(rem);
    return result;
}

// Splits a squarefree rational polynomial into irreducible monic factors.
inline std::vector<Poly<RationalField>> rat_factor_squarefree(const Poly<RationalField>& a0,
                                                              std::mt19937_64& rng) {
    using namespace detail;
    RationalField F;
    Poly<RationalField> a = poly_monic(a0);
    if (a.deg() <= 0) return {};
    // clear denominators: substitute x -> x / d with d = lcm of denominators,
    // i.e. factor d^n a(x/d) which is monic with integer coefficients
    bigint den(1);
    for (auto& c : a.c) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
    int n = a.deg();
    ZPoly z(n + 1);
    bigint dp(1);
    for (int i = n; i >= 0; --i) {
        bigrat v = a.c[i] * bigrat(dp);
        z[i] = boost::multiprecision::numerator(v);
        dp *= den;
    }
    auto zfac = zassenhaus_monic_squarefree(z, rng);
    std::vector<Poly<RationalField>> out;
    for (auto& g : zfac) {
        // map back: roots were scaled by den, so substitute x -> den*x and re-monic
        std::vector<bigrat> c(g.size());
        bigint sp(1);
        for (size_t i = 0; i < g.size(); ++i) {
            c[i] = bigrat(g[i]) * bigrat(sp);
            sp *= den;
        }
        out.push_back(poly_monic(Poly<RationalField>(F, std::move(c))));
    }
    std::sort(out.begin(), out.end(), [](const Poly<RationalField>& l, const Poly<RationalField>& r) {
        if (l.deg() != r.deg()) return l.deg() < r.deg();
        for (int i = l.deg(); i >= 0; --i)
            if (l.c[i] != r.c[i]) return l.c[i] < r.c[i];
        return false;
    });
    return out;
}

// Factor a squarefree polynomial into irreducibles over either field.
inline std::vector<Poly<PrimeField>> factor_squarefree(const Poly<PrimeField>& a,
                                                       std::mt19937_64& rng) {
    return fp_factor_distinct(a, rng);
}
inline std::vector<Poly<RationalField>> factor_squarefree(const Poly<RationalField>& a,
                                                          std::mt19937_64& rng) {
    return rat_factor_squarefree(a, rng);
}

}  // namespace itlab
