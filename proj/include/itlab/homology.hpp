#pragma once

#include "decompose.hpp"

#include <functional>

namespace itlab {

// ---------------------------------------------------------------------------
// Projective covers and syzygies.
// ---------------------------------------------------------------------------

// Minimal projective cover P(M) -> M, built on unit-vector lifts of a basis
// of M / rad M.
template <class F>
ModuleMap<F> projective_cover(const Module<F>& M) {
    const AlgPtr<F>& A = M.A;
    const F& f = A->field;
    auto gens = top_generators(M); // (vertex, coordinate) pairs
    std::vector<Module<F>> parts;
    parts.reserve(gens.size());
    for (auto& [v, j] : gens) {
        (void)j;
        parts.push_back(projective_module(A, v));
    }
    Module<F> P = direct_sum(A, parts);
    // offsets of each summand's block at every vertex
    std::vector<std::vector<int>> off(parts.size(), std::vector<int>(A->nv(), 0));
    for (std::size_t s = 1; s < parts.size(); ++s)
        for (int v = 0; v < A->nv(); ++v) off[s][v] = off[s - 1][v] + parts[s - 1].dims[v];

    std::vector<Matrix<F>> comp;
    for (int v = 0; v < A->nv(); ++v) comp.emplace_back(f, M.dims[v], P.dims[v]);
    for (std::size_t s = 0; s < gens.size(); ++s) {
        auto [v, j] = gens[s];
        auto pos = projective_positions(A, v);
        for (int b = 0; b < A->dim(); ++b) {
            if (A->basis[b].src != v) continue;
            int w = A->basis[b].tgt;
            Matrix<F> col = act_basis(M, b); // M_v -> M_w
            for (int i = 0; i < M.dims[w]; ++i)
                comp[w].at(i, off[s][w] + pos[b]) = col.at(i, j);
        }
    }
    return make_map(P, M, std::move(comp));
}

// First syzygy with its inclusion into the cover.
template <class F>
SubmoduleResult<F> syzygy_with_incl(const Module<F>& M) {
    ModuleMap<F> cover = projective_cover(M);
    auto ker = kernel_module(cover);
    // minimality: the kernel must avoid the generator coordinates, i.e. sit
    // inside rad P
    const AlgPtr<F>& A = M.A;
    auto gens = top_generators(M);
    std::vector<std::vector<int>> off(gens.size(), std::vector<int>(A->nv(), 0));
    {
        std::vector<int> acc(A->nv(), 0);
        for (std::size_t s = 0; s < gens.size(); ++s) {
            for (int v = 0; v < A->nv(); ++v) off[s][v] = acc[v];
            auto pv = projective_module(A, gens[s].first);
            for (int v = 0; v < A->nv(); ++v) acc[v] += pv.dims[v];
        }
    }
    for (std::size_t s = 0; s < gens.size(); ++s) {
        int v = gens[s].first;
        auto pos = projective_positions(A, v);
        int row = off[s][v] + pos[A->idem[v]];
        const Matrix<F>& inc = ker.incl.comp[v];
        for (int c = 0; c < inc.cols; ++c)
            if (!A->field.is_zero(inc.at(row, c)))
                throw Error("internal: cover is not minimal");
    }
    return ker;
}

template <class F>
Module<F> syzygy(const Module<F>& M) {
    return syzygy_with_incl(M).mod;
}

template <class F>
bool is_projective_module(const Module<F>& M) {
    if (M.total() == 0) return true;
    return syzygy(M).total() == 0;
}

// Cosyzygy through duality: the cokernel of the injective envelope of M.
template <class F>
Module<F> cosyzygy(const Module<F>& M) {
    return dual_module(syzygy(dual_module(M)));
}

// Same object computed without reusing syzygy: embed M into the dual of the
// cover of D(M) and take the cokernel.  Used to cross-check cosyzygy.
template <class F>
Module<F> cosyzygy_direct(const Module<F>& M) {
    auto cover = projective_cover(dual_module(M));
    ModuleMap<F> emb = dual_map(cover); // M = DD(M) -> D(P)
    return cokernel_module(emb).mod;
}

template <class F>
bool is_injective_module(const Module<F>& M) {
    return is_projective_module(dual_module(M));
}

template <class F>
bool is_selfinjective(const AlgPtr<F>& A) {
    for (int v = 0; v < A->nv(); ++v)
        if (!is_projective_module(dual_module(projective_module(A, v)))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Minimal projective resolutions.
// ---------------------------------------------------------------------------

template <class F>
struct Resolution {
    Module<F> M;
    // stage data: P[i] covers omega[i] (with omega[0] = M)
    std::vector<Module<F>> P;
    std::vector<std::vector<std::pair<int, int>>> gens; // cover generators per stage
    std::vector<std::vector<int>> mult;                 // per stage: P_v multiplicities
    std::vector<ModuleMap<F>> d; // d[0]: P0 -> M, d[i]: Pi -> P(i-1)
    std::vector<Module<F>> omega;            // omega[i] = i-th syzygy, unstripped
    std::vector<ModuleMap<F>> omega_incl;    // omega[i] -> P[i-1]

    int stages() const { return (int)P.size(); }
};

// Extends the resolution so that P[0..n] and d[0..n] exist.
template <class F>
void extend_resolution(Resolution<F>& R, int n) {
    const AlgPtr<F>& A = R.M.A;
    while (R.stages() <= n) {
        const Module<F>& tgt = R.P.empty() ? R.M : R.omega.back();
        ModuleMap<F> cover = projective_cover(tgt);
        auto tg = top_generators(tgt);
        std::vector<int> m(A->nv(), 0);
        for (auto& [v, j] : tg) {
            (void)j;
            ++m[v];
        }
        ModuleMap<F> diff = cover;
        if (!R.P.empty()) // land in P[s-1] through the syzygy inclusion
            diff = compose_map(R.omega_incl.back(), cover);
        auto ker = kernel_module(cover);
        R.P.push_back(cover.dom);
        R.gens.push_back(std::move(tg));
        R.mult.push_back(std::move(m));
        R.d.push_back(std::move(diff));
        R.omega.push_back(ker.mod);
        R.omega_incl.push_back(ker.incl);
    }
}

template <class F>
Resolution<F> resolve(const Module<F>& M, int n) {
    Resolution<F> R;
    R.M = M;
    extend_resolution(R, n);
    return R;
}

// ---------------------------------------------------------------------------
// Ext dimensions from a minimal resolution, using Hom(P_v, N) = N_v.
// ---------------------------------------------------------------------------

namespace detail {

// Matrix of Hom(d_s, N): Hom(P[s-1], N) -> Hom(P[s], N) in the coordinates
// where Hom(P_v-summand, N) = N_v.
template <class F>
Matrix<F> induced_hom_matrix(const Resolution<F>& R, int s, const Module<F>& N) {
    const AlgPtr<F>& A = R.M.A;
    const F& f = A->field;
    const auto& gsrc = R.gens[s];     // summands of P[s]
    const auto& gdst = R.gens[s - 1]; // summands of P[s-1]
    auto dim_of = [&](const std::vector<std::pair<int, int>>& gs) {
        int t = 0;
        for (auto& [v, j] : gs) {
            (void)j;
            t += N.dims[v];
        }
        return t;
    };
    int rows = dim_of(gsrc), cols = dim_of(gdst);
    Matrix<F> out(f, rows, cols);
    // layout offsets
    std::vector<int> roff(gsrc.size() + 1, 0), coff(gdst.size() + 1, 0);
    for (std::size_t i = 0; i < gsrc.size(); ++i) roff[i + 1] = roff[i] + N.dims[gsrc[i].first];
    for (std::size_t i = 0; i < gdst.size(); ++i) coff[i + 1] = coff[i] + N.dims[gdst[i].first];
    // offsets of P[s-1] summand blocks per vertex, and their path positions
    std::vector<std::vector<int>> poff(gdst.size(), std::vector<int>(A->nv(), 0));
    {
        std::vector<int> acc(A->nv(), 0);
        for (std::size_t t = 0; t < gdst.size(); ++t) {
            for (int v = 0; v < A->nv(); ++v) poff[t][v] = acc[v];
            auto pv = projective_module(A, gdst[t].first);
            for (int v = 0; v < A->nv(); ++v) acc[v] += pv.dims[v];
        }
    }
    std::vector<std::vector<int>> pos(gdst.size());
    for (std::size_t t = 0; t < gdst.size(); ++t)
        pos[t] = projective_positions(A, gdst[t].first);

    for (std::size_t i = 0; i < gsrc.size(); ++i) {
        int w = gsrc[i].first; // generator of the i-th summand sits at vertex w
        // its image in P[s-1]: the column of d[s] at that generator coordinate
        // (generator position inside P[s] block w)
        // locate that column:
        int gencol = 0;
        {
            std::vector<int> acc(A->nv(), 0);
            for (std::size_t t2 = 0; t2 < gsrc.size(); ++t2) {
                auto pv = projective_module(A, gsrc[t2].first);
                if (t2 == i) {
                    auto p2 = projective_positions(A, gsrc[t2].first);
                    gencol = acc[w] + p2[A->idem[w]];
                    break;
                }
                for (int v = 0; v < A->nv(); ++v) acc[v] += pv.dims[v];
            }
        }
        // walk the coordinates of P[s-1] in block w
        for (std::size_t t = 0; t < gdst.size(); ++t) {
            int v = gdst[t].first;
            for (int b = 0; b < A->dim(); ++b) {
                if (A->basis[b].src != v || A->basis[b].tgt != w) continue;
                typename F::Elt y = R.d[s].comp[w].at(poff[t][w] + pos[t][b], gencol);
                if (f.is_zero(y)) continue;
                Matrix<F> ab = act_basis(N, b); // N_v -> N_w
                for (int r = 0; r < N.dims[w]; ++r)
                    for (int c = 0; c < N.dims[v]; ++c)
                        out.at(roff[i] + r, coff[t] + c) =
                            f.add(out.at(roff[i] + r, coff[t] + c), f.mul(y, ab.at(r, c)));
            }
        }
    }
    return out;
}

} // namespace detail

// dim Ext^i(M, N) computed from a minimal resolution of M.
template <class F>
int ext_dim(const Module<F>& M, const Module<F>& N, int i) {
    if (M.A != N.A) throw Error("ext: modules over different algebras");
    if (i < 0) throw InputError("ext: negative degree");
    if (M.total() == 0 || N.total() == 0) return 0;
    if (i == 0) return hom_dim(M, N);
    Resolution<F> R = resolve(M, i + 1);
    auto hom_dim_at = [&](int s) {
        int t = 0;
        for (auto& [v, j] : R.gens[s]) {
            (void)j;
            t += N.dims[v];
        }
        return t;
    };
    int h = hom_dim_at(i);
    int r_in = rank(detail::induced_hom_matrix(R, i, N));
    int r_out = rank(detail::induced_hom_matrix(R, i + 1, N));
    return h - r_in - r_out;
}

// Convenience overload reusing (and extending) a cached resolution of M.
template <class F>
int ext_dim(Resolution<F>& R, const Module<F>& N, int i) {
    if (i < 0) throw InputError("ext: negative degree");
    if (R.M.total() == 0 || N.total() == 0) return 0;
    if (i == 0) return hom_dim(R.M, N);
    extend_resolution(R, i + 1);
    int h = 0;
    for (auto& [v, j] : R.gens[i]) {
        (void)j;
        h += N.dims[v];
    }
    int r_in = rank(detail::induced_hom_matrix(R, i, N));
    int r_out = rank(detail::induced_hom_matrix(R, i + 1, N));
    return h - r_in - r_out;
}

// ---------------------------------------------------------------------------
// Session: per-algebra caches for syzygy orbits, projective dimensions and
// isomorphism classes.  All the finiteness machinery works on class multisets
// (class id -> multiplicity), memoizing the syzygy of every class once.
// ---------------------------------------------------------------------------

using ClassVec = std::map<int, int>; // class id -> multiplicity > 0

template <class F>
struct Session {
    AlgPtr<F> A;
    IsoClassRegistry<F> reg;
    std::uint64_t seed;
    std::map<int, ClassVec> omega_cls; // syzygy of a class, unstripped
    std::map<int, char> proj_cls;
    std::map<int, Resolution<F>> res_cls;

    explicit Session(AlgPtr<F> a, std::uint64_t s = 0x17AB0001u)
        : A(std::move(a)), reg(A), seed(s) {}

    ClassVec classify(const Module<F>& M) { return reg.classify(M, seed); }
    const Module<F>& rep(int id) const { return reg.rep(id); }
    const std::string& label(int id) const { return reg.label(id); }

    bool class_projective(int id) {
        auto it = proj_cls.find(id);
        if (it != proj_cls.end()) return it->second != 0;
        bool p = omega_class(id).empty();
        proj_cls[id] = p ? 1 : 0;
        return p;
    }

    const ClassVec& omega_class(int id) {
        auto it = omega_cls.find(id);
        if (it != omega_cls.end()) return it->second;
        Module<F> om = syzygy(rep(id));
        ClassVec cv = om.total() == 0 ? ClassVec{} : classify(om);
        return omega_cls.emplace(id, std::move(cv)).first->second;
    }

    Resolution<F>& resolution_of_class(int id, int stages) {
        auto it = res_cls.find(id);
        if (it == res_cls.end()) it = res_cls.emplace(id, resolve(rep(id), stages)).first;
        extend_resolution(it->second, stages);
        return it->second;
    }

    ClassVec omega_state(const ClassVec& state) {
        ClassVec out;
        for (auto& [id, m] : state)
            for (auto& [j, mj] : omega_class(id)) out[j] += m * mj;
        return out;
    }

    bool state_all_projective(const ClassVec& state) {
        for (auto& [id, m] : state) {
            (void)m;
            if (!class_projective(id)) return false;
        }
        return true;
    }
};

// sub_total_dim is for Sub; provide the ClassVec size helper separately
inline int class_total(const ClassVec& cv) {
    int t = 0;
    for (auto& [id, m] : cv) {
        (void)id;
        t += m;
    }
    return t;
}

// ---------------------------------------------------------------------------
// Projective dimension with certificates.
// ---------------------------------------------------------------------------

struct PdResult {
    enum class Kind { Finite, Infinite, Unknown } kind = Kind::Unknown;
    int value = -1;      // Finite
    int cycle_start = -1;
    int cycle_len = 0;   // Infinite: syzygy states repeat from cycle_start
    int bound = 0;       // Unknown: stages explored

    bool finite() const { return kind == Kind::Finite; }
    std::string str() const {
        switch (kind) {
            case Kind::Finite: return std::to_string(value);
            case Kind::Infinite:
                return "infinite (states repeat: stage " + std::to_string(cycle_start) +
                       ", period " + std::to_string(cycle_len) + ")";
            default: return "unknown (explored " + std::to_string(bound) + " stages)";
        }
    }
};

template <class F>
PdResult pd_state(Session<F>& S, ClassVec state, int cap = 64) {
    std::map<std::vector<std::pair<int, int>>, int> seen;
    for (int stage = 0; stage <= cap; ++stage) {
        if (S.state_all_projective(state)) {
            PdResult r;
            r.kind = PdResult::Kind::Finite;
            r.value = stage;
            return r;
        }
        std::vector<std::pair<int, int>> key(state.begin(), state.end());
        auto it = seen.find(key);
        if (it != seen.end()) {
            PdResult r;
            r.kind = PdResult::Kind::Infinite;
            r.cycle_start = it->second;
            r.cycle_len = stage - it->second;
            return r;
        }
        seen.emplace(std::move(key), stage);
        state = S.omega_state(state);
    }
    PdResult r;
    r.kind = PdResult::Kind::Unknown;
    r.bound = cap;
    return r;
}

template <class F>
PdResult pd_module(Session<F>& S, const Module<F>& M, int cap = 64) {
    if (M.total() == 0) {
        PdResult r;
        r.kind = PdResult::Kind::Finite;
        r.value = 0;
        return r;
    }
    return pd_state(S, S.classify(M), cap);
}

// Injective dimension over A = projective dimension of the dual over A^op.
// The caller provides a session over the opposite algebra.
template <class F>
PdResult inj_dim_module(Session<F>& op_session, const Module<F>& M, int cap = 64) {
    return pd_module(op_session, dual_module(M), cap);
}

// Global dimension: the maximum over the simple modules.
template <class F>
PdResult global_dimension(Session<F>& S, int cap = 64) {
    PdResult out;
    out.kind = PdResult::Kind::Finite;
    out.value = 0;
    for (int v = 0; v < S.A->nv(); ++v) {
        PdResult r = pd_module(S, simple_module(S.A, v), cap);
        if (r.kind == PdResult::Kind::Infinite) return r;
        if (r.kind == PdResult::Kind::Unknown) out = r;
        else if (out.kind == PdResult::Kind::Finite)
            out.value = std::max(out.value, r.value);
    }
    return out;
}

} // namespace itlab
