#pragma once

#include "itlab/homology.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace itlab {

// ---------------------------------------------------------------------------
// Module expressions:
//
//   S(v) | P(v) | I(v) | D(e) | Sum(e1,...,ek) | Omega(n,e) | OmegaInv(n,e)
//   | Rad(e) | Top(e) | Soc(e)
//
// Vertices go by name.  D dualizes, so its result lives over the opposite
// algebra; operators applied on top of it act there.  Sum requires all
// summands over one algebra.
// ---------------------------------------------------------------------------

namespace detail {

struct ExprCursor {
    const std::string& s;
    std::size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool at_end() {
        ws();
        return i >= s.size();
    }
    [[noreturn]] void fail(const std::string& what) {
        throw InputError("module expression: " + what + " at position " +
                         std::to_string(i) + " in \"" + s + "\"");
    }
    void expect(char c) {
        ws();
        if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
        ++i;
    }
    bool peek(char c) {
        ws();
        return i < s.size() && s[i] == c;
    }
    std::string ident() {
        ws();
        std::size_t b = i;
        while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
        if (i == b) fail("expected a name");
        return s.substr(b, i - b);
    }
    int integer() {
        ws();
        std::size_t b = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == b) fail("expected a number");
        return std::stoi(s.substr(b, i - b));
    }
};

template <class F>
int vertex_by_name(const AlgPtr<F>& A, const std::string& name, ExprCursor& c) {
    for (int v = 0; v < A->nv(); ++v)
        if (A->vertex_names[v] == name) return v;
    c.fail("no vertex named '" + name + "'");
}

template <class F>
Module<F> parse_expr(const AlgPtr<F>& A, ExprCursor& c) {
    std::string head = c.ident();
    c.expect('(');
    Module<F> out;
    if (head == "S" || head == "P" || head == "I") {
        int v = vertex_by_name(A, c.ident(), c);
        out = head == "S"   ? simple_module(A, v)
              : head == "P" ? projective_module(A, v)
                            : injective_module(A, v);
    } else if (head == "D") {
        out = dual_module(parse_expr(A, c));
    } else if (head == "Sum") {
        std::vector<Module<F>> parts;
        parts.push_back(parse_expr(A, c));
        while (c.peek(',')) {
            c.expect(',');
            parts.push_back(parse_expr(A, c));
        }
        AlgPtr<F> B = parts[0].A;
        for (auto& p : parts)
            if (p.A != B) c.fail("summands live over different algebras");
        out = direct_sum(B, parts);
    } else if (head == "Omega" || head == "OmegaInv") {
        int n = c.integer();
        if (n < 0) c.fail("negative syzygy count");
        c.expect(',');
        out = parse_expr(A, c);
        for (int t = 0; t < n; ++t) out = head == "Omega" ? syzygy(out) : cosyzygy(out);
    } else if (head == "Rad") {
        Module<F> m = parse_expr(A, c);
        out = submodule(m, radical_sub(m)).mod;
    } else if (head == "Top") {
        out = top_module(parse_expr(A, c)).mod;
    } else if (head == "Soc") {
        Module<F> m = parse_expr(A, c);
        out = submodule(m, socle_sub(m)).mod;
    } else {
        c.fail("unknown operator '" + head + "'");
    }
    c.expect(')');
    return out;
}

} // namespace detail

template <class F>
Module<F> eval_module_expr(const AlgPtr<F>& A, const std::string& text) {
    detail::ExprCursor c{text};
    Module<F> m = detail::parse_expr(A, c);
    if (!c.at_end()) c.fail("trailing input");
    return m;
}

} // namespace itlab
