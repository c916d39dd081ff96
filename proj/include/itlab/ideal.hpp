#pragma once

#include "igusa_todorov.hpp"

#include <optional>
#include <queue>
#include <set>

namespace itlab {

// ---------------------------------------------------------------------------
// Everything attached to a choice of vertex subset S: the two-sided ideal
// generated by the idempotents at S, the quotient by it, the corner algebra,
// and the same construction over the opposite algebra (right-module
// statements are left-module statements over A^op throughout).
// ---------------------------------------------------------------------------

template <class F>
using Corpus = std::vector<std::pair<std::string, Module<F>>>;

template <class F>
struct IdealContext {
    AlgPtr<F> A;
    std::vector<int> S;     // sorted vertex indices
    std::vector<char> in_S; // vertex -> bool
    std::vector<int> ideal; // basis indices: the paths through S
    std::vector<char> in_ideal;

    Module<F> reg;            // the algebra as a left module over itself
    std::vector<int> reg_pos; // basis index -> coordinate in its block
    SubmoduleResult<F> ideal_sub;
    QuotientModResult<F> quot_mod; // reg / ideal, a module killed by the ideal

    bool quot_zero = false; // S = all vertices: the quotient ring is zero
    QuotientResult<F> quot; // quotient algebra (unset when quot_zero)
    CornerResult<F> corner;

    std::shared_ptr<ItSession<F>> sess;        // over A
    std::shared_ptr<ItSession<F>> sess_quot;   // over A/ideal (null when zero)
    std::shared_ptr<ItSession<F>> sess_corner; // over the corner
    std::shared_ptr<ItSession<F>> sess_quot_op;
    std::shared_ptr<ItSession<F>> sess_corner_op;

    std::shared_ptr<IdealContext<F>> mirror; // over A^op; its own mirror is null

    // caches
    std::shared_ptr<Resolution<F>> quot_res; // resolution of quot_mod.mod
    std::optional<PdResult> pd_lq;
    std::map<int, std::map<int, int>> cover_cache; // class id -> cover vertex mult

    bool vertex_in_S(int v) const { return in_S[v] != 0; }
};

template <class F>
using CtxPtr = std::shared_ptr<IdealContext<F>>;

// Minimal projective cover multiplicities per vertex for a registry class.
template <class F>
const std::map<int, int>& class_cover(IdealContext<F>& ctx, int id) {
    auto it = ctx.cover_cache.find(id);
    if (it != ctx.cover_cache.end()) return it->second;
    std::map<int, int> cov;
    for (auto& [v, j] : top_generators(ctx.sess->rep(id))) {
        (void)j;
        ++cov[v];
    }
    return ctx.cover_cache.emplace(id, std::move(cov)).first->second;
}

template <class F>
CtxPtr<F> build_context(const AlgPtr<F>& A, const std::vector<int>& S_in,
                        bool with_mirror = true) {
    auto ctx = std::make_shared<IdealContext<F>>();
    ctx->A = A;
    std::set<int> sset(S_in.begin(), S_in.end());
    if (sset.empty()) throw InputError("vertex set is empty");
    for (int v : sset)
        if (v < 0 || v >= A->nv()) throw InputError("vertex index out of range");
    ctx->S.assign(sset.begin(), sset.end());
    ctx->in_S.assign(A->nv(), 0);
    for (int v : ctx->S) ctx->in_S[v] = 1;

    ctx->in_ideal.assign(A->dim(), 0);
    for (int b = 0; b < A->dim(); ++b)
        for (int v : A->path_vertices(b))
            if (ctx->in_S[v]) {
                ctx->in_ideal[b] = 1;
                ctx->ideal.push_back(b);
                break;
            }

    // The span of the paths through S contains the idempotents at S and each
    // such path factors through one of them, so once the span is closed under
    // multiplication it IS the two-sided ideal they generate.  Non-monomial
    // relations can break the basis alignment; that is refused, not patched.
    for (int b : ctx->ideal)
        for (int j = 0; j < A->dim(); ++j) {
            for (auto& [k, c] : A->mul(b, j)) {
                (void)c;
                if (!ctx->in_ideal[k])
                    throw NotAnIdeal("paths through the vertex set do not span an ideal: " +
                                     A->basis[b].label + " * " + A->basis[j].label);
            }
            for (auto& [k, c] : A->mul(j, b)) {
                (void)c;
                if (!ctx->in_ideal[k])
                    throw NotAnIdeal("paths through the vertex set do not span an ideal: " +
                                     A->basis[j].label + " * " + A->basis[b].label);
            }
        }

    // idempotency: products of ideal elements span the ideal again
    {
        const F& f = A->field;
        Matrix<F> prods(f, 0, A->dim());
        for (int a : ctx->ideal)
            for (int b : ctx->ideal) {
                const auto& p = A->mul(a, b);
                if (p.empty()) continue;
                Matrix<F> row(f, 1, A->dim());
                for (auto& [k, c] : p) row.at(0, k) = c;
                prods = Matrix<F>::vstack(prods, row);
            }
        if (rank(prods) != (int)ctx->ideal.size())
            throw Error("internal: ideal is not idempotent");
    }

    ctx->reg = regular_module(A, &ctx->reg_pos);
    Sub<F> isub;
    {
        std::vector<std::vector<int>> picks(A->nv());
        for (int b : ctx->ideal) picks[A->basis[b].tgt].push_back(ctx->reg_pos[b]);
        for (int v = 0; v < A->nv(); ++v) {
            Matrix<F> m(A->field, ctx->reg.dims[v], (int)picks[v].size());
            for (int j = 0; j < (int)picks[v].size(); ++j)
                m.at(picks[v][j], j) = A->field.one();
            isub.push_back(std::move(m));
        }
    }
    ctx->ideal_sub = submodule(ctx->reg, isub);
    ctx->quot_mod = quotient_module(ctx->reg, isub);
    if (ctx->ideal_sub.mod.total() + ctx->quot_mod.mod.total() != A->dim())
        throw Error("internal: ideal and quotient dimensions do not add up");

    // trace agreement: the ideal equals the sum of all images of maps from
    // the projectives at S into the regular module
    {
        std::vector<Module<F>> parts;
        for (int v : ctx->S) parts.push_back(projective_module(A, v));
        Module<F> P = direct_sum(A, parts);
        Sub<F> tr = sub_zero(ctx->reg);
        for (auto& h : hom_basis(P, ctx->reg))
            for (int v = 0; v < A->nv(); ++v) tr[v] = span_union(tr[v], h[v]);
        if (!sub_equal(tr, ctx->ideal_sub.incl.comp))
            throw Error("internal: trace of the S-projectives differs from the path span");
    }

    ctx->corner = corner_algebra(A, ctx->S);
    {
        int cnt = 0;
        for (int b = 0; b < A->dim(); ++b)
            if (ctx->in_S[A->basis[b].src] && ctx->in_S[A->basis[b].tgt]) ++cnt;
        if (cnt != ctx->corner.G->dim())
            throw Error("internal: corner dimension mismatch");
    }

    ctx->quot_zero = ((int)ctx->S.size() == A->nv());
    if (!ctx->quot_zero) ctx->quot = quotient_algebra(A, ctx->ideal);

    ctx->sess = std::make_shared<ItSession<F>>(A);
    ctx->sess_corner = std::make_shared<ItSession<F>>(ctx->corner.G);
    ctx->sess_corner_op = std::make_shared<ItSession<F>>(opposite(ctx->corner.G));
    if (!ctx->quot_zero) {
        ctx->sess_quot = std::make_shared<ItSession<F>>(ctx->quot.Q);
        ctx->sess_quot_op = std::make_shared<ItSession<F>>(opposite(ctx->quot.Q));
    }

    if (with_mirror) ctx->mirror = build_context(opposite(A), ctx->S, false);
    return ctx;
}

// pd of the left module Lambda/ideal; cached.
template <class F>
PdResult pd_left_quotient(IdealContext<F>& ctx, int cap = 64) {
    if (!ctx.pd_lq) ctx.pd_lq = pd_module(*ctx.sess, ctx.quot_mod.mod, cap);
    return *ctx.pd_lq;
}

template <class F>
PdResult pd_right_quotient(IdealContext<F>& ctx, int cap = 64) {
    if (!ctx.mirror) throw Error("context has no mirror");
    return pd_left_quotient(*ctx.mirror, cap);
}

template <class F>
Resolution<F>& ensure_quot_res(IdealContext<F>& ctx, int stages) {
    if (!ctx.quot_res)
        ctx.quot_res = std::make_shared<Resolution<F>>(resolve(ctx.quot_mod.mod, stages));
    else
        extend_resolution(*ctx.quot_res, stages);
    return *ctx.quot_res;
}

// ---------------------------------------------------------------------------
// Membership in the six categories attached to the context.
//   P_k / I_k:     the first k+1 terms of the minimal (co)resolution lie in
//                  add of the (co)projectives at S.
//   P_inf / I_inf: all terms, certified by termination or state repetition.
//   T:             Ext^i(quotient, M) = 0 for all i >= 1.
//   T_tilde:       Ext^i(M, dual of the right quotient) = 0 for all i >= 1.
// ---------------------------------------------------------------------------

enum class Cat { P_k, I_k, P_inf, I_inf, T, T_tilde };

struct MembershipCert {
    std::vector<std::map<int, int>> stage_cover; // stage -> vertex -> multiplicity
    bool finite = false;                         // resolution terminated
    int cycle_start = -1, cycle_len = 0;         // state repetition
    int checked_to = -1; // Ext-vanishing verified for i = 1..checked_to
    bool exact = false;  // the checked range covers all i
};

struct MembershipWitness {
    int stage = -1, vertex = -1; // cover at this stage contains P(vertex), vertex off S
    int i = -1, dim = 0;         // nonzero Ext dimension
};

struct Membership {
    enum class Status { Yes, No, Unknown } status = Status::Unknown;
    MembershipCert cert;
    MembershipWitness witness;
    int bound = 0; // Unknown: horizon examined
    bool yes() const { return status == Status::Yes; }
    bool no() const { return status == Status::No; }
};

// k >= 0: stages 0..k only.  k < 0: run to a certificate, cap stages.
template <class F>
Membership membership_P(IdealContext<F>& ctx, const Module<F>& M, int k, int cap) {
    Membership r;
    auto& S = *ctx.sess;
    if (M.A != ctx.A) throw Error("membership: module is over a different algebra");
    if (M.total() == 0) {
        r.status = Membership::Status::Yes;
        r.cert.finite = true;
        return r;
    }
    ClassVec state = S.classify(M);
    std::map<std::vector<std::pair<int, int>>, int> seen;
    int last = k >= 0 ? k : cap;
    for (int s = 0; s <= last; ++s) {
        if (class_total(state) == 0) {
            r.status = Membership::Status::Yes;
            r.cert.finite = true;
            return r;
        }
        std::map<int, int> cov;
        for (auto& [id, m] : state)
            for (auto& [v, c] : class_cover(ctx, id)) cov[v] += m * c;
        for (auto& [v, c] : cov) {
            (void)c;
            if (!ctx.in_S[v]) {
                r.status = Membership::Status::No;
                r.witness.stage = s;
                r.witness.vertex = v;
                return r;
            }
        }
        r.cert.stage_cover.push_back(std::move(cov));
        if (k < 0) {
            std::vector<std::pair<int, int>> key(state.begin(), state.end());
            auto it = seen.find(key);
            if (it != seen.end()) {
                r.status = Membership::Status::Yes;
                r.cert.cycle_start = it->second;
                r.cert.cycle_len = s - it->second;
                return r;
            }
            seen.emplace(std::move(key), s);
        }
        if (s == last) break;
        state = S.omega_state(state);
    }
    if (k >= 0) {
        r.status = Membership::Status::Yes;
        return r;
    }
    r.status = Membership::Status::Unknown;
    r.bound = cap;
    return r;
}

// Ext^i(quotient, M) = 0 for all i >= 1.  The horizon comes from the pd
// certificate of the quotient: beyond a finite pd everything vanishes, and
// along a periodic syzygy tail the Ext dimensions repeat with the period
// (Ext^i against a fixed second argument only depends on the isomorphism
// class of the (i-1)-st syzygy of the first argument), so checking one full
// period plus the head decides every degree.
template <class F>
Membership membership_T(IdealContext<F>& ctx, const Module<F>& M, int bound) {
    Membership r;
    if (M.A != ctx.A) throw Error("membership: module is over a different algebra");
    if (ctx.quot_zero || M.total() == 0) {
        r.status = Membership::Status::Yes;
        r.cert.exact = true;
        r.cert.checked_to = 0;
        return r;
    }
    PdResult pdq = pd_left_quotient(ctx);
    int h;
    bool exact;
    if (pdq.kind == PdResult::Kind::Finite) {
        h = pdq.value;
        exact = true;
    } else if (pdq.kind == PdResult::Kind::Infinite) {
        h = pdq.cycle_start + pdq.cycle_len;
        exact = true;
    } else {
        h = bound;
        exact = false;
    }
    auto& R = ensure_quot_res(ctx, h + 1);
    for (int i = 1; i <= h; ++i) {
        int d = ext_dim(R, M, i);
        if (d != 0) {
            r.status = Membership::Status::No;
            r.witness.i = i;
            r.witness.dim = d;
            return r;
        }
    }
    r.cert.checked_to = h;
    r.cert.exact = exact;
    if (exact) {
        r.status = Membership::Status::Yes;
    } else {
        r.status = Membership::Status::Unknown;
        r.bound = bound;
    }
    return r;
}

// param: k for P_k/I_k, the stage/degree cap for the rest.
template <class F>
Membership membership(IdealContext<F>& ctx, const Module<F>& M, Cat cat, int param = 64) {
    switch (cat) {
    case Cat::P_k:
        return membership_P(ctx, M, param, 0);
    case Cat::P_inf:
        return membership_P(ctx, M, -1, param);
    case Cat::I_k:
    case Cat::I_inf:
    case Cat::T_tilde: {
        if (!ctx.mirror) throw Error("context has no mirror");
        Module<F> D = dual_module(M);
        if (cat == Cat::I_k) return membership_P(*ctx.mirror, D, param, 0);
        if (cat == Cat::I_inf) return membership_P(*ctx.mirror, D, -1, param);
        return membership_T(*ctx.mirror, D, param);
    }
    case Cat::T:
        return membership_T(ctx, M, param);
    }
    throw Error("membership: bad category");
}

// ---------------------------------------------------------------------------
// Strong idempotency.  Three sufficient routes, a refuting sweep, and a
// definitional spot-check on top of any positive certificate.
// ---------------------------------------------------------------------------

// No arrow path runs from the complement through S back into the complement.
template <class F>
bool complement_convex(const IdealContext<F>& ctx) {
    const auto& A = *ctx.A;
    int n = A.nv();
    std::vector<std::vector<int>> fwd(n), bwd(n);
    for (auto& g : A.gens) {
        fwd[g.src].push_back(g.tgt);
        bwd[g.tgt].push_back(g.src);
    }
    auto sweep = [&](const std::vector<std::vector<int>>& adj) {
        // vertices reachable by a path of length >= 1 starting off S
        std::vector<char> vis(n, 0);
        std::queue<int> q;
        for (int v = 0; v < n; ++v)
            if (!ctx.in_S[v])
                for (int w : adj[v])
                    if (!vis[w]) {
                        vis[w] = 1;
                        q.push(w);
                    }
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (!vis[w]) {
                    vis[w] = 1;
                    q.push(w);
                }
        }
        return vis;
    };
    auto from_c = sweep(fwd);
    auto to_c = sweep(bwd);
    for (int s : ctx.S)
        if (from_c[s] && to_c[s]) return false;
    return true;
}

struct StrongIdemResult {
    enum class Status { Yes, No, Unknown } status = Status::Unknown;
    enum class Route { ProjectiveIdeal, ResolutionInAddP, ConvexComplement, None } route =
        Route::None;
    Membership cert; // resolution-in-add-P data for the ideal
    // refutation witness: an Ext dimension that differs
    int wi = -1;
    std::string wx, wy;
    int dim_quot = -1, dim_full = -1;
    int bound = 0;
    int spot_pairs = 0; // definitional comparisons performed on a Yes
    bool yes() const { return status == Status::Yes; }
};

// Compare Ext over the quotient algebra with Ext over A between inflated
// simples, degrees 1..bound.  Returns the first mismatch.
template <class F>
bool ext_mismatch_sweep(IdealContext<F>& ctx, int bound, StrongIdemResult& out) {
    if (ctx.quot_zero) return false;
    int nq = ctx.quot.Q->nv();
    std::vector<Module<F>> qs, ls;
    for (int a = 0; a < nq; ++a) {
        qs.push_back(simple_module(ctx.quot.Q, a));
        ls.push_back(inflate_quotient(ctx.quot, ctx.A, qs.back()));
    }
    for (int i = 1; i <= bound; ++i)
        for (int a = 0; a < nq; ++a)
            for (int b = 0; b < nq; ++b) {
                int dq = ext_dim(qs[a], qs[b], i);
                int dl = ext_dim(ls[a], ls[b], i);
                ++out.spot_pairs;
                if (dq != dl) {
                    out.wi = i;
                    out.wx = "S(" + ctx.quot.Q->vertex_names[a] + ")";
                    out.wy = "S(" + ctx.quot.Q->vertex_names[b] + ")";
                    out.dim_quot = dq;
                    out.dim_full = dl;
                    return true;
                }
            }
    return false;
}

template <class F>
StrongIdemResult is_strong_idempotent(IdealContext<F>& ctx, int bound = 6) {
    StrongIdemResult r;
    r.bound = bound;
    r.cert = membership(ctx, ctx.ideal_sub.mod, Cat::P_inf, 64);
    if (is_projective_module(ctx.ideal_sub.mod)) {
        r.status = StrongIdemResult::Status::Yes;
        r.route = StrongIdemResult::Route::ProjectiveIdeal;
    } else if (r.cert.yes()) {
        r.status = StrongIdemResult::Status::Yes;
        r.route = StrongIdemResult::Route::ResolutionInAddP;
    } else if (complement_convex(ctx)) {
        if (r.cert.no())
            throw Error("internal: convex complement but the ideal resolution leaves add P");
        r.status = StrongIdemResult::Status::Yes;
        r.route = StrongIdemResult::Route::ConvexComplement;
    }
    if (r.status == StrongIdemResult::Status::Yes) {
        StrongIdemResult spot;
        if (ext_mismatch_sweep(ctx, bound, spot))
            throw Error("internal: strong idempotency certificate contradicts Ext at degree " +
                        std::to_string(spot.wi));
        r.spot_pairs = spot.spot_pairs;
        return r;
    }
    StrongIdemResult sweep;
    if (ext_mismatch_sweep(ctx, bound, sweep)) {
        r.status = StrongIdemResult::Status::No;
        r.wi = sweep.wi;
        r.wx = sweep.wx;
        r.wy = sweep.wy;
        r.dim_quot = sweep.dim_quot;
        r.dim_full = sweep.dim_full;
        r.spot_pairs = sweep.spot_pairs;
        return r;
    }
    r.status = StrongIdemResult::Status::Unknown;
    return r;
}

// ---------------------------------------------------------------------------
// Glueing: the two canonical short exact sequences attached to M.
//   P0 side: 0 -> (ideal)M -> M -> M/(ideal)M -> 0
//   I0 side: 0 -> ann_M(ideal) -> M -> M/ann -> 0
// ---------------------------------------------------------------------------

enum class GluePair { P0_side, I0_side };

template <class F>
struct GlueingResult {
    SubmoduleResult<F> sub;
    QuotientModResult<F> quot;
    bool trace_agrees = false; // independent Hom-image computation matches
    bool part_checks = false;  // side-specific facts about the two pieces
    bool exact = false;
};

template <class F>
GlueingResult<F> glueing(IdealContext<F>& ctx, const Module<F>& M, GluePair side) {
    const auto& A = *ctx.A;
    if (M.A != ctx.A) throw Error("glueing: module is over a different algebra");
    GlueingResult<F> r;
    Sub<F> t;
    if (side == GluePair::P0_side) {
        t = sub_zero(M);
        for (int b : ctx.ideal)
            t[A.basis[b].tgt] = span_union(t[A.basis[b].tgt], act_basis(M, b));
    } else {
        for (int v = 0; v < A.nv(); ++v) {
            Matrix<F> st(A.field, 0, M.dims[v]);
            for (int b : ctx.ideal)
                if (A.basis[b].src == v) st = Matrix<F>::vstack(st, act_basis(M, b));
            t.push_back(kernel_basis(st));
        }
    }
    if (!sub_is_closed(M, t)) throw Error("internal: torsion subspace is not action-closed");
    r.sub = submodule(M, t);
    r.quot = quotient_module(M, t);

    // independent route: trace of the side's test module
    {
        Sub<F> tr = sub_zero(M);
        if (side == GluePair::P0_side) {
            std::vector<Module<F>> parts;
            for (int v : ctx.S) parts.push_back(projective_module(ctx.A, v));
            Module<F> P = direct_sum(ctx.A, parts);
            for (auto& h : hom_basis(P, M))
                for (int v = 0; v < A.nv(); ++v) tr[v] = span_union(tr[v], h[v]);
        } else {
            for (auto& h : hom_basis(ctx.quot_mod.mod, M))
                for (int v = 0; v < A.nv(); ++v) tr[v] = span_union(tr[v], h[v]);
        }
        r.trace_agrees = sub_equal(tr, r.sub.incl.comp);
    }

    auto killed_by_ideal = [&](const Module<F>& N) {
        for (int b : ctx.ideal)
            if (!act_basis(N, b).is_zero()) return false;
        return true;
    };
    if (side == GluePair::P0_side) {
        bool top_ok = true;
        for (auto& [v, j] : top_generators(r.sub.mod)) {
            (void)j;
            if (!ctx.in_S[v]) top_ok = false;
        }
        r.part_checks = top_ok && killed_by_ideal(r.quot.mod);
    } else {
        auto soc = socle_sub(r.quot.mod);
        bool soc_ok = true;
        for (int v = 0; v < A.nv(); ++v)
            if (!ctx.in_S[v] && soc[v].cols != 0) soc_ok = false;
        r.part_checks = killed_by_ideal(r.sub.mod) && soc_ok;
    }

    r.exact = r.sub.mod.total() + r.quot.mod.total() == M.total() &&
              map_is_zero(compose_map(r.quot.proj, r.sub.incl));
    return r;
}

// ---------------------------------------------------------------------------
// Numeric bound formulas.
// ---------------------------------------------------------------------------

struct ValU {
    enum class Kind { Num, Infinite, Unknown } kind = Kind::Unknown;
    long long v = 0;
    static ValU num(long long x) { return {Kind::Num, x}; }
    static ValU inf() { return {Kind::Infinite, 0}; }
    static ValU unk() { return {Kind::Unknown, 0}; }
    bool is_num() const { return kind == Kind::Num; }
    bool is_inf() const { return kind == Kind::Infinite; }
    bool is_unk() const { return kind == Kind::Unknown; }
    std::string str() const {
        if (is_num()) return std::to_string(v);
        return is_inf() ? "infinite" : "unknown";
    }
};

inline ValU vu_from_pd(const PdResult& p) {
    switch (p.kind) {
    case PdResult::Kind::Finite:
        return ValU::num(p.value);
    case PdResult::Kind::Infinite:
        return ValU::inf();
    default:
        return ValU::unk();
    }
}

inline ValU vu_add(ValU a, ValU b) {
    if (a.is_unk() || b.is_unk()) return ValU::unk();
    if (a.is_inf() || b.is_inf()) return ValU::inf();
    return ValU::num(a.v + b.v);
}

inline ValU vu_add(ValU a, long long c) { return vu_add(a, ValU::num(c)); }

inline ValU vu_max(ValU a, ValU b) {
    if (a.is_inf() || b.is_inf()) return ValU::inf();
    if (a.is_unk() || b.is_unk()) return ValU::unk();
    return ValU::num(std::max(a.v, b.v));
}

// lhs <= rhs over the extended values; Unknown on either side is undecided.
enum class CmpOutcome { True, False, Undecided, TriviallyTrue };
inline CmpOutcome vu_le(ValU lhs, ValU rhs) {
    if (rhs.is_inf()) return CmpOutcome::TriviallyTrue;
    if (lhs.is_unk() || rhs.is_unk()) return CmpOutcome::Undecided;
    if (lhs.is_inf()) return CmpOutcome::False;
    return lhs.v <= rhs.v ? CmpOutcome::True : CmpOutcome::False;
}

struct Ingredients {
    PdResult pd_left_quot;  // pd of the left module Lambda/ideal
    PdResult pd_right_quot; // pd of the right module (over the mirror)
    PdResult gld_corner;
    PdResult gld_quot; // zero algebra counts as gld 0
    bool quot_selfinjective = false;
    bool corner_selfinjective = false;
    ValU phidim_quot;   // phi dim of the quotient algebra, when exact
    ValU phidim_corner; // phi dim of the corner algebra, when exact
    std::string phidim_quot_src, phidim_corner_src;
};

// phi dim of an algebra is exactly 0 when it is selfinjective and equals the
// global dimension when that is finite; otherwise only corpus lower bounds
// exist and the value stays Unknown.  (Left and right phi dims agree in both
// exact cases, so a single value serves either side.)
inline ValU exact_phidim(const PdResult& gld, bool selfinj, std::string& src) {
    if (selfinj) {
        src = "selfinjective";
        return ValU::num(0);
    }
    if (gld.kind == PdResult::Kind::Finite) {
        src = "finite global dimension";
        return ValU::num(gld.value);
    }
    src = "unknown";
    return ValU::unk();
}

template <class F>
Ingredients compute_ingredients(IdealContext<F>& ctx, int cap = 64) {
    Ingredients g;
    g.pd_left_quot = pd_left_quotient(ctx, cap);
    g.pd_right_quot = pd_right_quotient(ctx, cap);
    g.gld_corner = global_dimension(*ctx.sess_corner, cap);
    g.corner_selfinjective = is_selfinjective(ctx.corner.G);
    if (ctx.quot_zero) {
        g.gld_quot = PdResult{};
        g.gld_quot.kind = PdResult::Kind::Finite;
        g.gld_quot.value = 0;
        g.quot_selfinjective = false;
        g.phidim_quot = ValU::num(0);
        g.phidim_quot_src = "zero algebra";
    } else {
        g.gld_quot = global_dimension(*ctx.sess_quot, cap);
        g.quot_selfinjective = is_selfinjective(ctx.quot.Q);
        g.phidim_quot = exact_phidim(g.gld_quot, g.quot_selfinjective, g.phidim_quot_src);
    }
    g.phidim_corner = exact_phidim(g.gld_corner, g.corner_selfinjective, g.phidim_corner_src);
    return g;
}

struct BoundRow {
    std::string id;
    std::string formula;
    enum class Status { Pass, Violated, Unknown, NotApplicable } status = Status::Unknown;
    bool probe = false; // sharpness probe: reported, not gating
    ValU rhs;           // uniform right-hand side, when the formula has one
    int checked = 0;    // modules whose inequality was decided
    int qualifying = 0; // modules meeting the membership hypothesis
    std::vector<std::string> violations;
    std::string note;
};

struct BoundReportOpts {
    int cap = 64;
    int ext_bound = 16; // horizon for membership queries
};

template <class F>
struct BoundReport {
    Ingredients ing;
    bool strong_yes = false;
    std::vector<BoundRow> rows;
    int corpus_size = 0;
    // corpus phi suprema observed (lower bounds for the dim quantities)
    int max_phi_r = 0, max_phi_l = 0;
};

namespace detail {

// evaluate "phi <= rhs" rows over a filtered corpus
template <class F, class Filter, class PhiOf, class RhsOf>
BoundRow per_module_row(const std::string& id, const std::string& formula,
                        const Corpus<F>& corpus, Filter&& qualifies, PhiOf&& phi_of,
                        RhsOf&& rhs_of, bool probe = false) {
    BoundRow row;
    row.id = id;
    row.formula = formula;
    row.probe = probe;
    int undecided = 0, trivial = 0;
    for (auto& [label, M] : corpus) {
        if (!qualifies(M)) continue;
        ++row.qualifying;
        ValU lhs = phi_of(M);
        ValU rhs = rhs_of(M);
        switch (vu_le(lhs, rhs)) {
        case CmpOutcome::TriviallyTrue:
            ++trivial;
            [[fallthrough]];
        case CmpOutcome::True:
            ++row.checked;
            break;
        case CmpOutcome::False:
            ++row.checked;
            row.violations.push_back(label + ": " + lhs.str() + " > " + rhs.str());
            break;
        case CmpOutcome::Undecided:
            ++undecided;
            break;
        }
    }
    if (row.qualifying == 0)
        row.status = BoundRow::Status::NotApplicable;
    else if (!row.violations.empty())
        row.status = BoundRow::Status::Violated;
    else if (undecided > 0 && row.checked == 0)
        row.status = BoundRow::Status::Unknown;
    else
        row.status = BoundRow::Status::Pass;
    if (row.qualifying == 0)
        row.note = "no qualifying modules";
    else if (undecided > 0)
        row.note = std::to_string(undecided) + " of " + std::to_string(row.qualifying) +
                   " undecided";
    else if (trivial == row.checked && trivial > 0)
        row.note = "right side infinite";
    return row;
}

} // namespace detail

template <class F>
BoundReport<F> bound_report(IdealContext<F>& ctx, const StrongIdemResult& strong,
                            const Corpus<F>& corpus, BoundReportOpts opts = {}) {
    BoundReport<F> rep;
    rep.ing = compute_ingredients(ctx, opts.cap);
    rep.strong_yes = strong.yes();
    rep.corpus_size = (int)corpus.size();
    const Ingredients& g = rep.ing;

    ValU pdl = vu_from_pd(g.pd_left_quot);
    ValU pdr = vu_from_pd(g.pd_right_quot);
    ValU gldG = vu_from_pd(g.gld_corner);
    ValU gldQ = vu_from_pd(g.gld_quot);

    if (!rep.strong_yes) {
        BoundRow row;
        row.id = "all";
        row.formula = "(bounds assume the ideal is strong idempotent)";
        row.status = BoundRow::Status::NotApplicable;
        row.note = "strong idempotency not certified";
        rep.rows.push_back(std::move(row));
        return rep;
    }

    // per-module phi values and memberships, computed once
    auto& mir = *ctx.mirror;
    std::map<const Module<F>*, ValU> phir, phil;
    std::map<const Module<F>*, bool> inT, inTt;
    for (auto& [label, M] : corpus) {
        (void)label;
        PhiResult pr = phi_right(*mir.sess, M, opts.cap);
        PhiResult pl = phi_module(*ctx.sess, M, opts.cap);
        phir[&M] = pr.known() ? ValU::num(pr.value) : ValU::unk();
        phil[&M] = pl.known() ? ValU::num(pl.value) : ValU::unk();
        if (pr.known()) rep.max_phi_r = std::max(rep.max_phi_r, pr.value);
        if (pl.known()) rep.max_phi_l = std::max(rep.max_phi_l, pl.value);
        inT[&M] = membership(ctx, M, Cat::T, opts.ext_bound).yes();
        inTt[&M] = membership(ctx, M, Cat::T_tilde, opts.ext_bound).yes();
    }
    auto all = [](const Module<F>&) { return true; };
    auto in_T = [&](const Module<F>& M) { return inT[&M]; };
    auto in_Tt = [&](const Module<F>& M) { return inTt[&M]; };
    auto phi_r_of = [&](const Module<F>& M) { return phir[&M]; };
    auto phi_l_of = [&](const Module<F>& M) { return phil[&M]; };

    // pd of the quotient against the corner global dimension, both sides
    auto direct_row = [&](const std::string& id, const std::string& formula, ValU lhs,
                          ValU rhs) {
        BoundRow row;
        row.id = id;
        row.formula = formula;
        row.rhs = rhs;
        switch (vu_le(lhs, rhs)) {
        case CmpOutcome::True:
            row.status = BoundRow::Status::Pass;
            break;
        case CmpOutcome::TriviallyTrue:
            row.status = BoundRow::Status::Pass;
            row.note = "right side infinite";
            break;
        case CmpOutcome::False:
            row.status = BoundRow::Status::Violated;
            row.violations.push_back(lhs.str() + " > " + rhs.str());
            break;
        case CmpOutcome::Undecided:
            row.status = BoundRow::Status::Unknown;
            break;
        }
        return row;
    };
    rep.rows.push_back(direct_row("pd-left-vs-corner",
                                  "pd_left(L/A) <= gld(corner) + 1 [= " + pdl.str() +
                                      " <= " + vu_add(gldG, 1).str() + "]",
                                  pdl, vu_add(gldG, 1)));
    rep.rows.push_back(direct_row("pd-right-vs-corner",
                                  "pd_right(L/A) <= gld(corner) + 1 [= " + pdr.str() +
                                      " <= " + vu_add(gldG, 1).str() + "]",
                                  pdr, vu_add(gldG, 1)));

    {
        ValU rhs = vu_max(vu_add(gldG, 1), vu_add(g.phidim_quot, pdr));
        auto row = detail::per_module_row<F>(
            "phi_r-T", "phi_r(T) <= max(gld(corner)+1, phidim(L/A) + pd_right(L/A)) for T in T",
            corpus, in_T, phi_r_of, [&](const Module<F>&) { return rhs; });
        row.rhs = rhs;
        rep.rows.push_back(std::move(row));
    }
    {
        ValU rhs = vu_add(pdl, vu_max(vu_add(gldG, 1), vu_add(pdr, g.phidim_quot)));
        auto row = detail::per_module_row<F>(
            "phi_r-global",
            "phi_r(M) <= pd_left(L/A) + max(gld(corner)+1, pd_right(L/A) + phidim(L/A))",
            corpus, all, phi_r_of, [&](const Module<F>&) { return rhs; });
        row.rhs = rhs;
        rep.rows.push_back(std::move(row));
    }

    // rows needing a finite quotient global dimension
    bool gldQ_fin = g.gld_quot.kind == PdResult::Kind::Finite;
    {
        BoundRow row;
        if (gldQ_fin) {
            row = detail::per_module_row<F>(
                "phi_r-glue",
                "phi_r(M) <= max(gld(L/A) + pd_right(L/A) + 1, phi_r(M/ann_M(A)))", corpus, all,
                phi_r_of, [&](const Module<F>& M) {
                    auto gl = glueing(ctx, M, GluePair::I0_side);
                    PhiResult pq = phi_right(*mir.sess, gl.quot.mod, opts.cap);
                    ValU t = pq.known() ? ValU::num(pq.value) : ValU::unk();
                    return vu_max(vu_add(gldQ, vu_add(pdr, 1)), t);
                });
        } else {
            row.id = "phi_r-glue";
            row.formula = "phi_r(M) <= max(gld(L/A) + pd_right(L/A) + 1, phi_r(M/ann_M(A)))";
            row.status = BoundRow::Status::NotApplicable;
            row.note = "gld(L/A) " + vu_from_pd(g.gld_quot).str();
        }
        rep.rows.push_back(std::move(row));
    }
    {
        BoundRow row;
        ValU rhs = vu_max(vu_add(gldQ, vu_add(pdr, 1)), g.phidim_corner);
        if (gldQ_fin) {
            row = detail::per_module_row<F>(
                "phi_r-T-corner",
                "phi_r(T) <= max(gld(L/A) + pd_right(L/A) + 1, phidim(corner)) for T in T",
                corpus, in_T, phi_r_of, [&](const Module<F>&) { return rhs; });
            row.rhs = rhs;
        } else {
            row.id = "phi_r-T-corner";
            row.formula =
                "phi_r(T) <= max(gld(L/A) + pd_right(L/A) + 1, phidim(corner)) for T in T";
            row.status = BoundRow::Status::NotApplicable;
            row.note = "gld(L/A) " + vu_from_pd(g.gld_quot).str();
        }
        rep.rows.push_back(std::move(row));
    }
    {
        BoundRow row;
        ValU rhs = vu_add(pdl, vu_max(vu_add(gldQ, vu_add(pdr, 1)), g.phidim_corner));
        if (gldQ_fin) {
            row = detail::per_module_row<F>(
                "phi_r-global-corner",
                "phi_r(M) <= pd_left(L/A) + max(gld(L/A) + pd_right(L/A) + 1, phidim(corner))",
                corpus, all, phi_r_of, [&](const Module<F>&) { return rhs; });
            row.rhs = rhs;
        } else {
            row.id = "phi_r-global-corner";
            row.formula =
                "phi_r(M) <= pd_left(L/A) + max(gld(L/A) + pd_right(L/A) + 1, phidim(corner))";
            row.status = BoundRow::Status::NotApplicable;
            row.note = "gld(L/A) " + vu_from_pd(g.gld_quot).str();
        }
        rep.rows.push_back(std::move(row));
    }

    // phi_l bounds through the quotient global dimension.  The +1 is needed:
    // the syzygy at stage pd(Z) can still have cover summands off S (a module
    // annihilated by the ideal whose cover lives off S shows this at stage 0),
    // so the corner transfer only starts one stage later.  The unsharpened
    // constant is kept as a probe row and its violations are reported.
    {
        ValU rhs = vu_add(vu_add(gldQ, 1), g.phidim_corner);
        auto row = detail::per_module_row<F>(
            "phi_l-Tt", "phi_l(T) <= gld(L/A) + 1 + phidim(corner) for T in T~", corpus, in_Tt,
            phi_l_of, [&](const Module<F>&) { return rhs; });
        row.rhs = rhs;
        rep.rows.push_back(std::move(row));
        ValU rhsp = vu_add(gldQ, g.phidim_corner);
        auto probe = detail::per_module_row<F>(
            "phi_l-Tt/unsharpened", "phi_l(T) <= gld(L/A) + phidim(corner) for T in T~", corpus,
            in_Tt, phi_l_of, [&](const Module<F>&) { return rhsp; }, true);
        probe.rhs = rhsp;
        if (probe.status == BoundRow::Status::Violated)
            probe.note = "constant without +1 fails; the sharpened row holds";
        rep.rows.push_back(std::move(probe));
    }
    {
        ValU rhs = vu_add(pdr, vu_add(vu_add(gldQ, 1), g.phidim_corner));
        auto row = detail::per_module_row<F>(
            "phi_l-global", "phi_l(M) <= pd_right(L/A) + gld(L/A) + 1 + phidim(corner)", corpus,
            all, phi_l_of, [&](const Module<F>&) { return rhs; });
        row.rhs = rhs;
        rep.rows.push_back(std::move(row));
        ValU rhsp = vu_add(pdr, vu_add(gldQ, g.phidim_corner));
        auto probe = detail::per_module_row<F>(
            "phi_l-global/unsharpened", "phi_l(M) <= pd_right(L/A) + gld(L/A) + phidim(corner)",
            corpus, all, phi_l_of, [&](const Module<F>&) { return rhsp; }, true);
        probe.rhs = rhsp;
        if (probe.status == BoundRow::Status::Violated)
            probe.note = "constant without +1 fails; the sharpened row holds";
        rep.rows.push_back(std::move(probe));
    }

    // dim-level statement with an uncomputable right side: record the corpus
    // lower bounds and leave it undecided (the per-module step inequality is
    // exercised separately by the suite).
    {
        BoundRow row;
        row.id = "phi_r-dim-via-T";
        row.formula = "phidim_r(L) <= pd_left(L/A) + phidim_r(T)";
        row.status = BoundRow::Status::Unknown;
        int maxT = 0;
        bool anyT = false;
        for (auto& [label, M] : corpus) {
            (void)label;
            if (inT[&M] && phir[&M].is_num()) {
                anyT = true;
                maxT = std::max(maxT, (int)phir[&M].v);
            }
        }
        row.note = "corpus lower bounds: phidim_r(L) >= " + std::to_string(rep.max_phi_r) +
                   (anyT ? ", phidim_r(T) >= " + std::to_string(maxT) : "") +
                   "; right side needs a supremum";
        rep.rows.push_back(std::move(row));
    }

    return rep;
}

} // namespace itlab
