#pragma once

#include "itlab/ideal.hpp"
#include "itlab/igusa_todorov.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace itlab {

using nlohmann::json;

inline constexpr const char* kSchema = "itlab/1";

// ---------------------------------------------------------------------------
// Algebra files.
//
//   {"schema": "itlab/1", "name": "f2",
//    "field": {"prime": 101} | "rationals",
//    "quiver": {"vertices": ["1", ...],
//               "arrows": [{"name": "alpha", "from": "1", "to": "2"}, ...]},
//    "relations": [[{"coeff": "1", "path": ["gamma", "delta"]}], ...],
//    "max_path_len": 64}
//
// Relation paths are written in traversal order (first-applied arrow first).
// A relation may be abbreviated to a bare path array for a single monomial.
// ---------------------------------------------------------------------------

struct LoadedPresentation {
    Presentation pres;
    FieldSpec field;
};

namespace detail {

inline std::string json_name(const json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw InputError(where + ": expected a name");
}

inline const json& need(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError(where + ": missing \"" + key + "\"");
    return *it;
}

} // namespace detail

inline LoadedPresentation presentation_from_json(const json& j,
                                                 const std::string& where = "algebra file") {
    if (!j.is_object()) throw InputError(where + ": expected a JSON object");
    if (j.contains("schema") && j["schema"] != kSchema)
        throw InputError(where + ": unsupported schema \"" +
                         j["schema"].get<std::string>() + "\"");
    LoadedPresentation out;
    if (j.contains("field")) {
        const json& f = j["field"];
        if (f.is_string() && f == "rationals")
            out.field.rationals = true;
        else if (f.is_object() && f.contains("prime"))
            out.field.prime = f["prime"].get<std::uint64_t>();
        else if (f.is_object() && f.value("rationals", false))
            out.field.rationals = true;
        else
            throw InputError(where + ": \"field\" must be {\"prime\": p} or \"rationals\"");
    }
    out.pres.name = j.value("name", std::string{});
    if (j.contains("max_path_len")) out.pres.max_path_len = j["max_path_len"].get<int>();

    const json& q = detail::need(j, "quiver", where);
    for (auto& v : detail::need(q, "vertices", where + ": quiver"))
        out.pres.q.vertices.push_back(detail::json_name(v, where + ": vertices"));
    int ai = 0;
    for (auto& a : detail::need(q, "arrows", where + ": quiver")) {
        std::string aw = where + ": arrows[" + std::to_string(ai++) + "]";
        Arrow arr;
        arr.name = detail::json_name(detail::need(a, "name", aw), aw);
        std::string from = detail::json_name(detail::need(a, "from", aw), aw);
        std::string to = detail::json_name(detail::need(a, "to", aw), aw);
        auto vx = [&](const std::string& n) {
            for (int v = 0; v < (int)out.pres.q.vertices.size(); ++v)
                if (out.pres.q.vertices[v] == n) return v;
            throw InputError(aw + ": unknown vertex \"" + n + "\"");
        };
        arr.src = vx(from);
        arr.tgt = vx(to);
        out.pres.q.arrows.push_back(std::move(arr));
    }
    out.pres.q.finalize();

    int ri = 0;
    for (auto& r : j.value("relations", json::array())) {
        std::string rw = where + ": relations[" + std::to_string(ri++) + "]";
        Relation rel;
        if (r.is_array() && !r.empty() && r[0].is_string()) {
            // bare path: one monomial term
            RelTerm t;
            for (auto& an : r) t.path.push_back(detail::json_name(an, rw));
            rel.terms.push_back(std::move(t));
        } else if (r.is_array()) {
            for (auto& trm : r) {
                RelTerm t;
                t.coeff = trm.value("coeff", std::string("1"));
                for (auto& an : detail::need(trm, "path", rw))
                    t.path.push_back(detail::json_name(an, rw));
                rel.terms.push_back(std::move(t));
            }
        } else {
            throw InputError(rw + ": expected an array");
        }
        out.pres.relations.push_back(std::move(rel));
    }
    return out;
}

inline LoadedPresentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open algebra file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("algebra file " + path + ": " + e.what());
    }
    auto lp = presentation_from_json(j, path);
    if (lp.pres.name.empty()) {
        auto slash = path.find_last_of('/');
        auto stem = path.substr(slash == std::string::npos ? 0 : slash + 1);
        auto dot = stem.rfind('.');
        lp.pres.name = dot == std::string::npos ? stem : stem.substr(0, dot);
    }
    return lp;
}

inline json presentation_to_json(const Presentation& p, const FieldSpec& fs) {
    json j;
    j["schema"] = kSchema;
    j["name"] = p.name;
    if (fs.rationals)
        j["field"] = "rationals";
    else
        j["field"] = {{"prime", fs.prime}};
    json verts = json::array(), arrows = json::array();
    for (auto& v : p.q.vertices) verts.push_back(v);
    for (auto& a : p.q.arrows)
        arrows.push_back({{"name", a.name},
                          {"from", p.q.vertices[a.src]},
                          {"to", p.q.vertices[a.tgt]}});
    j["quiver"] = {{"vertices", verts}, {"arrows", arrows}};
    json rels = json::array();
    for (auto& r : p.relations) {
        json terms = json::array();
        for (auto& t : r.terms) terms.push_back({{"coeff", t.coeff}, {"path", t.path}});
        rels.push_back(terms);
    }
    j["relations"] = rels;
    j["max_path_len"] = p.max_path_len;
    return j;
}

// ---------------------------------------------------------------------------
// Result serialization.  Every report goes through JSON; the text renderer
// below prints the same tree, so the two formats cannot drift apart.
// ---------------------------------------------------------------------------

inline json to_json(const PdResult& p) {
    switch (p.kind) {
    case PdResult::Kind::Finite:
        return {{"kind", "finite"}, {"value", p.value}};
    case PdResult::Kind::Infinite:
        return {{"kind", "infinite"},
                {"cycle_start", p.cycle_start},
                {"cycle_len", p.cycle_len}};
    default:
        return {{"kind", "unknown"}, {"bound", p.bound}};
    }
}

inline json to_json(const ValU& v) {
    if (v.is_num()) return v.v;
    return v.str();
}

inline json to_json(const PhiResult& r) {
    json j;
    // the prefix r_0..r_phi; the tail is constant at limit_rank from there on
    std::vector<int> ranks = r.ranks;
    if (r.known() && ranks.size() > (std::size_t)r.value + 1) ranks.resize(r.value + 1);
    j["ranks"] = ranks;
    switch (r.cert) {
    case PhiResult::Cert::Vanished:
        j["certificate"] = {{"kind", "vanished"}, {"stage", r.vanish_stage}};
        break;
    case PhiResult::Cert::Periodic:
        j["certificate"] = {{"kind", "periodic"},
                            {"cycle_start", r.cycle_start},
                            {"cycle_len", r.cycle_len}};
        break;
    default:
        j["certificate"] = {{"kind", "exhausted"}, {"stages", r.bound}};
    }
    if (r.known()) {
        j["value"] = r.value;
        j["limit_rank"] = r.limit_rank;
    } else {
        j["value"] = "unknown";
    }
    return j;
}

inline json to_json(const PsiResult& r) {
    json j;
    if (r.known) {
        j["value"] = r.value;
        j["finite_part"] = r.finite_part;
    } else {
        j["value"] = "unknown";
    }
    return j;
}

inline json to_json(const DivisionWitness& w) {
    return {{"depth", w.depth}, {"plus", w.plus}, {"minus", w.minus}};
}

inline const char* membership_status_name(Membership::Status s) {
    switch (s) {
    case Membership::Status::Yes:
        return "yes";
    case Membership::Status::No:
        return "no";
    default:
        return "unknown";
    }
}

inline json to_json(const Membership& m,
                    const std::vector<std::string>* vertex_names = nullptr) {
    json j;
    j["status"] = membership_status_name(m.status);
    if (m.yes()) {
        j["exact"] = m.cert.exact || m.cert.finite || m.cert.cycle_len > 0;
        if (m.cert.finite) j["certificate"] = "resolution terminates";
        else if (m.cert.cycle_len > 0)
            j["certificate"] = {{"kind", "periodic"},
                                {"cycle_start", m.cert.cycle_start},
                                {"cycle_len", m.cert.cycle_len}};
        if (m.cert.checked_to >= 0) j["checked_to"] = m.cert.checked_to;
    } else if (m.no()) {
        json w;
        if (m.witness.vertex >= 0) {
            w["stage"] = m.witness.stage;
            if (vertex_names)
                w["cover_vertex"] = (*vertex_names)[m.witness.vertex];
            else
                w["cover_vertex_index"] = m.witness.vertex;
        }
        if (m.witness.i >= 0) {
            w["degree"] = m.witness.i;
            w["ext_dim"] = m.witness.dim;
        }
        j["witness"] = w;
    } else {
        j["bound"] = m.bound;
    }
    return j;
}

inline const char* route_name(StrongIdemResult::Route r) {
    switch (r) {
    case StrongIdemResult::Route::ProjectiveIdeal:
        return "projective ideal";
    case StrongIdemResult::Route::ResolutionInAddP:
        return "resolution stays in add P";
    case StrongIdemResult::Route::ConvexComplement:
        return "convex complement";
    default:
        return "none";
    }
}

inline json to_json(const StrongIdemResult& r) {
    json j;
    switch (r.status) {
    case StrongIdemResult::Status::Yes:
        j["status"] = "CertifiedYes";
        j["route"] = route_name(r.route);
        j["definitional_spot_checks"] = r.spot_pairs;
        break;
    case StrongIdemResult::Status::No:
        j["status"] = "CertifiedNo";
        j["witness"] = {{"degree", r.wi},
                        {"X", r.wx},
                        {"Y", r.wy},
                        {"ext_dim_quotient", r.dim_quot},
                        {"ext_dim_full", r.dim_full}};
        break;
    default:
        j["status"] = "Unknown";
        j["bound"] = r.bound;
    }
    return j;
}

inline const char* bound_row_status_name(BoundRow::Status s) {
    switch (s) {
    case BoundRow::Status::Pass:
        return "pass";
    case BoundRow::Status::Violated:
        return "violated";
    case BoundRow::Status::NotApplicable:
        return "not applicable";
    default:
        return "unknown";
    }
}

inline json to_json(const BoundRow& r) {
    json j;
    j["id"] = r.id;
    j["formula"] = r.formula;
    j["status"] = bound_row_status_name(r.status);
    if (r.probe) j["probe"] = true;
    if (!r.rhs.is_unk()) j["rhs"] = to_json(r.rhs);
    j["qualifying"] = r.qualifying;
    j["checked"] = r.checked;
    if (!r.violations.empty()) j["violations"] = r.violations;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline json to_json(const Ingredients& g) {
    json j;
    j["pd_left_quotient"] = to_json(g.pd_left_quot);
    j["pd_right_quotient"] = to_json(g.pd_right_quot);
    j["gld_corner"] = to_json(g.gld_corner);
    j["gld_quotient"] = to_json(g.gld_quot);
    j["quotient_selfinjective"] = g.quot_selfinjective;
    j["corner_selfinjective"] = g.corner_selfinjective;
    j["phidim_quotient"] = {{"value", to_json(g.phidim_quot)}, {"source", g.phidim_quot_src}};
    j["phidim_corner"] = {{"value", to_json(g.phidim_corner)}, {"source", g.phidim_corner_src}};
    return j;
}

template <class F>
json to_json(const BoundReport<F>& r) {
    json j;
    j["ingredients"] = to_json(r.ing);
    j["strong_idempotent"] = r.strong_yes;
    j["corpus_size"] = r.corpus_size;
    j["max_phi_l_observed"] = r.max_phi_l;
    j["max_phi_r_observed"] = r.max_phi_r;
    json rows = json::array();
    for (auto& row : r.rows) rows.push_back(to_json(row));
    j["rows"] = rows;
    return j;
}

// ---------------------------------------------------------------------------
// Text rendering: a stable key/value walk of the JSON tree.
// ---------------------------------------------------------------------------

namespace detail {

inline void render_text(const json& j, std::ostream& os, int depth, const std::string& key) {
    std::string pad(2 * depth, ' ');
    auto scalar = [&](const json& v) {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    if (j.is_object()) {
        if (!key.empty()) os << pad << key << ":\n";
        for (auto it = j.begin(); it != j.end(); ++it)
            render_text(it.value(), os, key.empty() ? depth : depth + 1, it.key());
    } else if (j.is_array()) {
        bool all_scalar = true;
        for (auto& v : j)
            if (v.is_object() || v.is_array()) all_scalar = false;
        if (all_scalar) {
            os << pad << key << ": [";
            for (std::size_t i = 0; i < j.size(); ++i)
                os << (i ? ", " : "") << scalar(j[i]);
            os << "]\n";
        } else {
            os << pad << key << ":\n";
            for (auto& v : j) {
                os << pad << "  -\n";
                render_text(v, os, depth + 2, "");
            }
        }
    } else {
        os << pad << key << ": " << scalar(j) << "\n";
    }
}

} // namespace detail

inline std::string render_text(const json& j) {
    std::ostringstream os;
    detail::render_text(j, os, 0, "");
    return os.str();
}

} // namespace itlab
