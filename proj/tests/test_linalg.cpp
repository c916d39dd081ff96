#include <catch2/catch_amalgamated.hpp>

#include "itlab/matrix.hpp"
#include "itlab/poly.hpp"

#include <random>

using namespace itlab;
using Fp = PrimeField;
using QQ = RationalField;

TEST_CASE("prime field arithmetic", "[field]") {
    Fp f(101);
    auto a = f.from_int(45), b = f.from_int(77);
    REQUIRE(f.eq(f.add(a, b), f.from_int(21)));   // 122 mod 101
    REQUIRE(f.eq(f.mul(a, b), f.from_int(31)));   // 3465 mod 101
    REQUIRE(f.eq(f.neg(a), f.from_int(56)));
    REQUIRE(f.eq(f.mul(a, f.inv(a)), f.one()));
    REQUIRE(f.is_zero(f.sub(a, a)));
    REQUIRE(f.str(f.from_int(-1)) == "100");
    // every nonzero element is invertible
    for (int x = 1; x < 101; ++x) {
        auto e = f.from_int(x);
        REQUIRE(f.eq(f.mul(e, f.inv(e)), f.one()));
    }
}

TEST_CASE("rational field arithmetic", "[field]") {
    QQ f;
    auto a = f.div(f.from_int(1), f.from_int(3));
    auto b = f.div(f.from_int(1), f.from_int(6));
    REQUIRE(f.str(f.add(a, b)) == "1/2");
    REQUIRE(f.str(f.sub(a, b)) == "1/6");
    REQUIRE(f.str(f.mul(a, b)) == "1/18");
    REQUIRE(f.str(f.neg(a)) == "-1/3");
    // normalization: 2/4 == 1/2
    REQUIRE(f.eq(f.div(f.from_int(2), f.from_int(4)), f.div(f.from_int(1), f.from_int(2))));
    // big numbers stay exact
    auto big = f.from_int(1);
    for (int i = 0; i < 40; ++i) big = f.mul(big, f.from_int(10));
    auto back = big;
    for (int i = 0; i < 40; ++i) back = f.div(back, f.from_int(10));
    REQUIRE(f.eq(back, f.one()));
}

TEST_CASE("scalar parsing", "[field]") {
    Fp f(101);
    REQUIRE(f.eq(parse_scalar(f, "7"), f.from_int(7)));
    REQUIRE(f.eq(parse_scalar(f, "-1"), f.from_int(100)));
    REQUIRE(f.eq(parse_scalar(f, "1/2"), f.mul(f.from_int(1), f.inv(f.from_int(2)))));
    QQ q;
    REQUIRE(q.str(parse_scalar(q, "-3/9")) == "-1/3");
    REQUIRE_THROWS_AS(parse_scalar(f, "abc"), InputError);
    REQUIRE_THROWS_AS(parse_scalar(f, "1/0"), Error);
}

TEST_CASE("field selection", "[field]") {
    FieldSpec def;
    REQUIRE((!def.rationals && def.prime == 101));
    REQUIRE(def.describe() == "F_101");
    FieldSpec q;
    q.rationals = true;
    REQUIRE(q.describe() == "rationals");
    bool saw_prime = false, saw_rat = false;
    with_field(def, [&](const auto& f) {
        saw_prime = std::is_same_v<std::decay_t<decltype(f)>, Fp>;
    });
    with_field(q, [&](const auto& f) {
        saw_rat = std::is_same_v<std::decay_t<decltype(f)>, QQ>;
    });
    REQUIRE((saw_prime && saw_rat));
}

namespace {

template <class F>
Matrix<F> rand_matrix(const F& f, int r, int c, std::mt19937_64& rng) {
    Matrix<F> m(f, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = f.from_int((long long)(rng() % 19) - 9);
    return m;
}

}  // namespace

TEMPLATE_TEST_CASE("rank + kernel + solve properties", "[matrix]", Fp, QQ) {
    TestType f = []() {
        if constexpr (std::is_same_v<TestType, Fp>) return Fp(101);
        else return QQ{};
    }();
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 25; ++t) {
        int r = 1 + (int)(rng() % 6), c = 1 + (int)(rng() % 6);
        auto m = rand_matrix(f, r, c, rng);
        int rk = rank(m);
        REQUIRE(rk <= std::min(r, c));
        auto k = kernel_basis(m);
        REQUIRE(k.cols == c - rk);             // rank-nullity
        REQUIRE(m.mul(k).is_zero());           // kernel columns die
        REQUIRE(rank(k) == k.cols);            // and are independent
        // A x = A v is always solvable, and the solution reproduces A v
        auto v = rand_matrix(f, c, 1, rng);
        auto b = m.mul(v);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        bool same = true;
        auto mx = m.mul(*x);
        for (int i = 0; i < r; ++i)
            if (!f.eq(mx.at(i, 0), b.at(i, 0))) same = false;
        REQUIRE(same);
    }
}

TEMPLATE_TEST_CASE("inverse round trip", "[matrix]", Fp, QQ) {
    TestType f = []() {
        if constexpr (std::is_same_v<TestType, Fp>) return Fp(101);
        else return QQ{};
    }();
    std::mt19937_64 rng(7);
    int found = 0;
    for (int t = 0; t < 40 && found < 10; ++t) {
        int n = 1 + (int)(rng() % 5);
        auto m = rand_matrix(f, n, n, rng);
        auto inv = inverse(m);
        if (!inv) {
            REQUIRE(rank(m) < n);
            continue;
        }
        ++found;
        auto prod = m.mul(*inv);
        bool ident = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!f.eq(prod.at(i, j), i == j ? f.one() : f.zero())) ident = false;
        REQUIRE(ident);
    }
    REQUIRE(found >= 10);
}

TEST_CASE("solve reports inconsistent systems", "[matrix]") {
    Fp f(101);
    Matrix<Fp> a(f, 2, 1);
    a.at(0, 0) = f.one();     // a = (1,0)^T, b = (0,1)^T is unreachable
    Matrix<Fp> b(f, 2, 1);
    b.at(1, 0) = f.one();
    REQUIRE(!solve(a, b).has_value());
}

TEST_CASE("span operations", "[matrix]") {
    Fp f(101);
    // spans in F^3: U = <e1, e2>, V = <e2, e3>
    Matrix<Fp> u(f, 3, 2), v(f, 3, 2);
    u.at(0, 0) = f.one();
    u.at(1, 1) = f.one();
    v.at(1, 0) = f.one();
    v.at(2, 1) = f.one();
    REQUIRE(rank(span_union(u, v)) == 3);
    auto w = span_intersect(u, v);
    REQUIRE(rank(w) == 1);
    REQUIRE(span_contains(u, w));
    REQUIRE(span_contains(v, w));
    Matrix<Fp> e3(f, 3, 1);
    e3.at(2, 0) = f.one();
    REQUIRE(!span_contains(u, e3));
    // canonical form is idempotent
    auto cu = span_canonical(u);
    REQUIRE(span_canonical(cu).a == cu.a);
    // extend_basis completes U by one column of V
    auto ext = extend_basis(u, v);
    REQUIRE(ext.size() == 1);
    // stacking helpers
    auto h = Matrix<Fp>::hstack(u, v);
    REQUIRE((h.rows == 3 && h.cols == 4));
    auto s = h.cols_slice({0, 3});
    REQUIRE((s.cols == 2 && rank(s) == 2));
    auto vt = Matrix<Fp>::vstack(u, v);
    REQUIRE((vt.rows == 6 && vt.cols == 2));
}

TEST_CASE("polynomial division and gcd", "[poly]") {
    Fp f(101);
    auto x = Poly<Fp>::x(f);
    // (x^2 - 1) = (x - 1)(x + 1)
    auto p = poly_sub(poly_mul(x, x), Poly<Fp>::constant(f, f.one()));
    auto d1 = poly_add(x, Poly<Fp>::constant(f, f.one()));
    auto [q, r] = poly_divmod(p, d1);
    REQUIRE(r.is_zero());
    REQUIRE(q == poly_sub(x, Poly<Fp>::constant(f, f.one())));
    // gcd(x^2-1, x^2+2x+1) = x+1
    auto p2 = poly_add(poly_add(poly_mul(x, x), poly_scale(x, f.from_int(2))),
                       Poly<Fp>::constant(f, f.one()));
    REQUIRE(poly_gcd(p, p2) == poly_monic(d1));
}

TEST_CASE("factorization over F_p", "[poly]") {
    Fp f(101);
    std::mt19937_64 rng(5);
    auto x = Poly<Fp>::x(f);
    // random product of distinct linear factors is recovered
    auto prod = Poly<Fp>::constant(f, f.one());
    std::vector<long long> roots = {3, 17, 50};
    for (long long rt : roots)
        prod = poly_mul(prod, poly_sub(x, Poly<Fp>::constant(f, f.from_int(rt))));
    auto rs = fp_roots(prod, rng);
    REQUIRE(rs.size() == 3);
    for (long long rt : roots) {
        bool seen = false;
        for (auto& e : rs)
            if (f.eq(e, f.from_int(rt))) seen = true;
        REQUIRE(seen);
    }
    // x^2 + 1 has roots over F_101 (101 = 1 mod 4); the factor list splits it
    auto sq = poly_add(poly_mul(x, x), Poly<Fp>::constant(f, f.one()));
    auto fac = fp_factor_distinct(sq, rng);
    REQUIRE(fac.size() == 2);
    for (auto& g : fac) REQUIRE(g.deg() == 1);
    // product of the factors reproduces the monic input
    auto back = Poly<Fp>::constant(f, f.one());
    for (auto& g : fac) back = poly_mul(back, g);
    REQUIRE(back == poly_monic(sq));
}

TEST_CASE("factorization over Q", "[poly]") {
    QQ f;
    std::mt19937_64 rng(11);
    auto x = Poly<QQ>::x(f);
    // (x^2+1)(x-2): x^2+1 is irreducible over Q
    auto p = poly_mul(poly_add(poly_mul(x, x), Poly<QQ>::constant(f, f.one())),
                      poly_sub(x, Poly<QQ>::constant(f, f.from_int(2))));
    auto fac = rat_factor_squarefree(p, rng);
    REQUIRE(fac.size() == 2);
    int degs[2] = {fac[0].deg(), fac[1].deg()};
    REQUIRE(degs[0] + degs[1] == 3);
    REQUIRE(std::min(degs[0], degs[1]) == 1);
    auto back = Poly<QQ>::constant(f, f.one());
    for (auto& g : fac) back = poly_mul(back, g);
    REQUIRE(back == poly_monic(p));
}

TEST_CASE("minimal polynomial", "[poly]") {
    Fp f(101);
    // nilpotent Jordan block: min poly x^3
    Matrix<Fp> n(f, 3, 3);
    n.at(0, 1) = f.one();
    n.at(1, 2) = f.one();
    auto mp = minimal_polynomial(n);
    REQUIRE(mp.deg() == 3);
    REQUIRE(f.is_zero(mp.coeff(0)));
    REQUIRE(f.is_zero(mp.coeff(1)));
    REQUIRE(f.is_zero(mp.coeff(2)));
    REQUIRE(f.eq(mp.coeff(3), f.one()));
    // identity: min poly x - 1
    auto id = Matrix<Fp>::identity(f, 4);
    auto mi = minimal_polynomial(id);
    REQUIRE(mi.deg() == 1);
    REQUIRE(f.eq(mi.coeff(0), f.neg(f.one())));
    // minimal polynomial annihilates the matrix (random check)
    std::mt19937_64 rng(3);
    for (int t = 0; t < 8; ++t) {
        int k = 2 + (int)(rng() % 4);
        auto m = rand_matrix(f, k, k, rng);
        auto mu = minimal_polynomial(m);
        Matrix<Fp> acc(f, k, k);
        Matrix<Fp> pw = Matrix<Fp>::identity(f, k);
        for (int d = 0; d <= mu.deg(); ++d) {
            acc = acc.add(pw.scale(mu.coeff(d)));
            pw = pw.mul(m);
        }
        REQUIRE(acc.is_zero());
    }
}
