#pragma once

#include "homology.hpp"

namespace itlab {

// ---------------------------------------------------------------------------
// Igusa-Todorov functions.
//
// Work in the free abelian group on the isomorphism classes of nonprojective
// indecomposables.  <M> is the subgroup generated by the classes of the
// summands of M; the syzygy operator acts linearly on it.  phi(M) is the
// first stage from which the rank of the iterated image stays at its limit
// value.  The rank sequence is non-increasing, but a single plateau proves
// nothing (it can drop later), so the iteration runs until the syzygy states
// honestly repeat and only then reads the limit off.
// ---------------------------------------------------------------------------

struct PhiResult {
    enum class Cert { Vanished, Periodic, Exhausted } cert = Cert::Exhausted;
    int value = -1;          // phi, when cert != Exhausted
    std::vector<int> ranks;  // observed rank sequence r_0, r_1, ...
    int limit_rank = -1;
    int vanish_stage = -1;   // Vanished: first stage with zero state
    int cycle_start = -1, cycle_len = 0; // Periodic
    int bound = 0;           // Exhausted: stages explored

    bool known() const { return cert != Cert::Exhausted; }
    std::string str() const {
        if (!known()) return "unknown (explored " + std::to_string(bound) + " stages)";
        return std::to_string(value);
    }
};

struct PsiResult {
    PhiResult phi;
    bool known = false;
    int value = -1;
    int finite_part = -1; // max finite pd among summands of the phi-th syzygy
    std::string str() const {
        return known ? std::to_string(value) : std::string("unknown");
    }
};

// Session extended with the phi/psi caches.  phi depends only on the set of
// nonprojective summand classes, psi on the full class multiset.
template <class F>
struct ItSession : Session<F> {
    using Session<F>::Session;
    std::map<std::vector<int>, PhiResult> phi_cache;
    std::map<std::vector<std::pair<int, int>>, PsiResult> psi_cache;
};

namespace detail {

// strip projective classes: their symbols are zero in the group
template <class F>
ClassVec nonproj_part(Session<F>& S, const ClassVec& cv) {
    ClassVec out;
    for (auto& [id, m] : cv)
        if (!S.class_projective(id)) out[id] = m;
    return out;
}

template <class F>
ClassVec omega_nonproj(Session<F>& S, const ClassVec& cv) {
    return nonproj_part(S, S.omega_state(cv));
}

inline int rank_of_tuple(const std::vector<ClassVec>& cvs) {
    std::map<int, int> col;
    for (auto& cv : cvs)
        for (auto& [id, m] : cv) {
            (void)m;
            col.emplace(id, (int)col.size());
        }
    std::vector<std::vector<long long>> rows;
    for (auto& cv : cvs) {
        std::vector<long long> r(col.size(), 0);
        for (auto& [id, m] : cv) r[col[id]] = m;
        rows.push_back(std::move(r));
    }
    return int_rank(rows);
}

} // namespace detail

// phi of the subgroup generated by the given (distinct, nonprojective)
// classes.  Runs the syzygy operator on the whole generator tuple at once.
template <class F>
PhiResult phi_state(Session<F>& S, const std::vector<int>& gen_classes, int cap = 64) {
    std::vector<ClassVec> cvs;
    for (int id : gen_classes) cvs.push_back(ClassVec{{id, 1}});

    PhiResult out;
    std::map<std::vector<std::vector<std::pair<int, int>>>, int> seen;
    for (int s = 0; s <= cap; ++s) {
        out.ranks.push_back(detail::rank_of_tuple(cvs));
        bool zero = true;
        for (auto& cv : cvs)
            if (!cv.empty()) zero = false;
        if (zero) {
            out.cert = PhiResult::Cert::Vanished;
            out.vanish_stage = s;
            out.limit_rank = 0;
            break;
        }
        std::vector<std::vector<std::pair<int, int>>> key;
        for (auto& cv : cvs) key.emplace_back(cv.begin(), cv.end());
        auto it = seen.find(key);
        if (it != seen.end()) {
            // states repeat from it->second on, so the (non-increasing) rank
            // sequence is constant there: the limit is r_{cycle_start}
            out.cert = PhiResult::Cert::Periodic;
            out.cycle_start = it->second;
            out.cycle_len = s - it->second;
            out.limit_rank = out.ranks[it->second];
            break;
        }
        seen.emplace(std::move(key), s);
        for (auto& cv : cvs) cv = detail::omega_nonproj(S, cv);
    }
    if (out.cert == PhiResult::Cert::Exhausted) {
        out.bound = cap;
        return out;
    }
    for (int s = 0; s < (int)out.ranks.size(); ++s)
        if (out.ranks[s] == out.limit_rank) {
            out.value = s;
            break;
        }
    return out;
}

template <class F>
std::vector<int> nonproj_summand_classes(ItSession<F>& S, const Module<F>& M) {
    std::vector<int> gens;
    if (M.total() == 0) return gens;
    for (auto& [id, m] : S.classify(M)) {
        (void)m;
        if (!S.class_projective(id)) gens.push_back(id);
    }
    return gens;
}

template <class F>
PhiResult phi_module(ItSession<F>& S, const Module<F>& M, int cap = 64) {
    std::vector<int> gens = nonproj_summand_classes(S, M);
    auto it = S.phi_cache.find(gens);
    if (it != S.phi_cache.end()) return it->second;
    PhiResult r = phi_state(S, gens, cap);
    S.phi_cache.emplace(std::move(gens), r);
    return r;
}

template <class F>
PsiResult psi_module(ItSession<F>& S, const Module<F>& M, int cap = 64) {
    ClassVec cls = M.total() == 0 ? ClassVec{} : S.classify(M);
    std::vector<std::pair<int, int>> key(cls.begin(), cls.end());
    auto it = S.psi_cache.find(key);
    if (it != S.psi_cache.end()) return it->second;

    PsiResult out;
    out.phi = phi_module(S, M, cap);
    if (out.phi.known()) {
        // the phi-th syzygy, projective summands and all
        ClassVec state = cls;
        for (int s = 0; s < out.phi.value; ++s) state = S.omega_state(state);
        int fin = 0;
        bool ok = true;
        for (auto& [id, m] : state) {
            (void)m;
            PdResult pd = pd_state(S, ClassVec{{id, 1}}, cap);
            if (pd.kind == PdResult::Kind::Unknown) ok = false;
            else if (pd.finite()) fin = std::max(fin, pd.value);
        }
        if (ok) {
            out.known = true;
            out.finite_part = fin;
            out.value = out.phi.value + fin;
        }
    }
    S.psi_cache.emplace(std::move(key), out);
    return out;
}

// Right-hand versions through duality: the dual is a module over the
// opposite algebra, so these take the opposite session.
template <class F>
PhiResult phi_right(ItSession<F>& op_session, const Module<F>& M, int cap = 64) {
    return phi_module(op_session, dual_module(M), cap);
}

template <class F>
PsiResult psi_right(ItSession<F>& op_session, const Module<F>& M, int cap = 64) {
    return psi_module(op_session, dual_module(M), cap);
}

// ---------------------------------------------------------------------------
// Independent cross-check: hunt for "divisions".  A combination z of the
// generator classes with z . Omega^d <M> != 0 and z . Omega^(d+1) <M> = 0
// proves phi >= d+1 (the combination dies exactly at stage d+1; once dead it
// stays dead, since the operator is linear).  Searching z over {-1,0,1}^k
// gives a lower bound that matches phi whenever small-coefficient relations
// witness every rank drop.
// ---------------------------------------------------------------------------

// A maximizing combination, reported by class label.  plus/minus hold the
// labels taken with coefficient +1 / -1; depth is the certified lower bound.
struct DivisionWitness {
    int depth = 0;
    std::vector<std::string> plus, minus;
};

template <class F>
int phi_via_divisions(ItSession<F>& S, const Module<F>& M, int cap = 64,
                      DivisionWitness* wit = nullptr) {
    std::vector<int> gens = nonproj_summand_classes(S, M);
    int k = (int)gens.size();
    if (wit) *wit = DivisionWitness{};
    if (k == 0) return 0;
    if (k > 12) throw SearchCapExceeded("division search: too many summand classes");
    PhiResult phi = phi_module(S, M, cap);
    if (!phi.known()) throw SearchCapExceeded("division search: phi unknown");
    int depth = phi.value + 1;

    // cv[i][d] = class vector of the d-th syzygy of generator i
    std::vector<std::vector<ClassVec>> cv(k);
    for (int i = 0; i < k; ++i) {
        cv[i].push_back(ClassVec{{gens[i], 1}});
        for (int d = 0; d < depth; ++d)
            cv[i].push_back(detail::omega_nonproj(S, cv[i].back()));
    }

    int best = 0;
    std::vector<int> z(k, -1);
    for (;;) {
        // combo(d) = sum_i z_i cv[i][d]; find where it dies
        bool all_zero_z = true;
        for (int zi : z)
            if (zi) all_zero_z = false;
        if (!all_zero_z) {
            auto combo = [&](int d) {
                std::map<int, long long> acc;
                for (int i = 0; i < k; ++i)
                    if (z[i])
                        for (auto& [id, m] : cv[i][d]) acc[id] += (long long)z[i] * m;
                for (auto& [id, m] : acc)
                    if (m != 0) return false; // nonzero
                return true;                  // zero
            };
            if (!combo(0)) {
                for (int d = 0; d <= depth - 1; ++d)
                    if (!combo(d) && combo(d + 1)) {
                        if (d + 1 > best) {
                            best = d + 1;
                            if (wit) {
                                wit->depth = best;
                                wit->plus.clear();
                                wit->minus.clear();
                                for (int i = 0; i < k; ++i) {
                                    if (z[i] == 1) wit->plus.push_back(S.label(gens[i]));
                                    if (z[i] == -1) wit->minus.push_back(S.label(gens[i]));
                                }
                                // z and -z certify the same drop; report the
                                // positive form
                                if (wit->plus.empty()) std::swap(wit->plus, wit->minus);
                            }
                        }
                        break;
                    }
            }
        }
        // next z in {-1,0,1}^k
        int i = 0;
        while (i < k && z[i] == 1) z[i++] = -1;
        if (i == k) break;
        ++z[i];
    }
    return best;
}

// ---------------------------------------------------------------------------
// phi over a sample of modules.  The true phi-dimension is a supremum over
// all finitely generated modules, so the most a finite sample can certify is
// a lower bound; the table records where each value was attained.
// ---------------------------------------------------------------------------

struct PhiDimEstimate {
    int lower_bound = 0;
    std::vector<std::pair<std::string, int>> table; // label -> phi
    std::vector<std::string> uncertified;           // phi did not certify at the cap
};

template <class F>
PhiDimEstimate phi_dim_lower_bound(ItSession<F>& S,
                                   const std::vector<std::pair<std::string, Module<F>>>& sample,
                                   int cap = 64) {
    PhiDimEstimate est;
    for (auto& [label, M] : sample) {
        PhiResult r = phi_module(S, M, cap);
        if (!r.known()) {
            est.uncertified.push_back(label);
            continue;
        }
        est.table.push_back({label, r.value});
        est.lower_bound = std::max(est.lower_bound, r.value);
    }
    return est;
}

} // namespace itlab
