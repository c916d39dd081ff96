#pragma once

// Exact scalar arithmetic: prime fields F_p (runtime modulus) and Q.
// Every algorithm in the library is templated on one of these two field types;
// FieldSpec carries the runtime choice made by input files.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace itlab {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// bad user input: malformed files, unknown vertices, unparsable expressions
struct InputError : Error {
    using Error::Error;
};
// algebra did not close under the configured path-length bound
struct DimensionOverflow : Error {
    using Error::Error;
};
// relation term not composable / terms not parallel / length < 2
struct InvalidRelation : InputError {
    using InputError::InputError;
};
// subspace handed to a quotient is not a two-sided ideal
struct NotAnIdeal : Error {
    using Error::Error;
};
// F_p decomposition needs p > dim of the module at hand
struct FieldTooSmall : Error {
    using Error::Error;
};
// combinatorial search (division search) exceeded its configured cap
struct SearchCapExceeded : Error {
    using Error::Error;
};
// a certified answer could not be produced within the algorithm's means;
// never silently downgraded to a guess
struct Inconclusive : Error {
    using Error::Error;
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// F_p with the modulus carried by the field object, not the element.
struct PrimeField {
    using Elt = std::uint64_t;
    std::uint64_t p = 0;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t p_) : p(p_) {
        if (p < 2 || p > (1ull << 31))
            throw InputError("field modulus out of range: " + std::to_string(p));
        if (!is_prime_u64(p))
            throw InputError("field modulus not prime: " + std::to_string(p));
    }

    Elt zero() const { return 0; }
    Elt one() const { return 1 % p; }
    bool is_zero(Elt a) const { return a == 0; }
    bool eq(Elt a, Elt b) const { return a == b; }
    Elt add(Elt a, Elt b) const {
        Elt s = a + b;
        return s >= p ? s - p : s;
    }
    Elt neg(Elt a) const { return a == 0 ? 0 : p - a; }
    Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
    Elt mul(Elt a, Elt b) const { return (a * b) % p; }
    Elt inv(Elt a) const {
        if (a == 0) throw Error("division by zero in F_p");
        // extended euclid
        std::int64_t t = 0, nt = 1;
        std::int64_t r = (std::int64_t)p, nr = (std::int64_t)a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += (std::int64_t)p;
        return (Elt)t;
    }
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
    Elt from_int(long long v) const {
        long long m = v % (long long)p;
        if (m < 0) m += (long long)p;
        return (Elt)m;
    }
    Elt from_bigint(const bigint& v) const {
        bigint m = v % (bigint)p;
        if (m < 0) m += p;
        return (Elt)m.convert_to<std::uint64_t>();
    }
    Elt random(std::mt19937_64& rng) const {
        return (Elt)(rng() % p);
    }
    std::string str(Elt a) const { return std::to_string(a); }
    bool operator==(const PrimeField& o) const { return p == o.p; }
};

// Q with boost exact rationals.
struct RationalField {
    using Elt = bigrat;

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    bool is_zero(const Elt& a) const { return a == 0; }
    bool eq(const Elt& a, const Elt& b) const { return a == b; }
    Elt add(const Elt& a, const Elt& b) const { return a + b; }
    Elt neg(const Elt& a) const { return -a; }
    Elt sub(const Elt& a, const Elt& b) const { return a - b; }
    Elt mul(const Elt& a, const Elt& b) const { return a * b; }
    Elt inv(const Elt& a) const {
        if (a == 0) throw Error("division by zero in Q");
        return 1 / a;
    }
    Elt div(const Elt& a, const Elt& b) const { return mul(a, inv(b)); }
    Elt from_int(long long v) const { return Elt(v); }
    Elt from_bigint(const bigint& v) const { return Elt(v); }
    Elt random(std::mt19937_64& rng) const {
        // small numerators keep downstream matrices readable
        long long n = (long long)(rng() % 9) - 4;
        return Elt(n);
    }
    std::string str(const Elt& a) const { return a.str(); }
    bool operator==(const RationalField&) const { return true; }
};

// Parses "17", "-3", "2/3", "-3/4".  For F_p the quotient is taken in the field.
template <class F>
typename F::Elt parse_scalar(const F& f, const std::string& s) {
    if (s.empty()) throw InputError("empty scalar literal");
    auto slash = s.find('/');
    auto parse_int = [](const std::string& t) -> bigint {
        if (t.empty() || (t == "-") || (t == "+"))
            throw InputError("bad integer literal: '" + t + "'");
        for (size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0; i < t.size(); ++i)
            if (!std::isdigit((unsigned char)t[i]))
                throw InputError("bad integer literal: '" + t + "'");
        return bigint(t);
    };
    if (slash == std::string::npos) return f.from_bigint(parse_int(s));
    bigint num = parse_int(s.substr(0, slash));
    bigint den = parse_int(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in scalar literal");
    return f.div(f.from_bigint(num), f.from_bigint(den));
}

// Runtime field selection as read from input files.
struct FieldSpec {
    bool rationals = false;
    std::uint64_t prime = 101;

    bool operator==(const FieldSpec& o) const {
        return rationals == o.rationals && (rationals || prime == o.prime);
    }
    std::string describe() const {
        return rationals ? std::string("rationals") : "F_" + std::to_string(prime);
    }
};

// Calls fn with the concrete field object chosen by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.rationals) return fn(RationalField{});
    return fn(PrimeField{spec.prime});
}

}  // namespace itlab
