#pragma once

#include "field.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace itlab {

struct Arrow {
    std::string name;
    int src = -1;
    int tgt = -1;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::map<std::string, int> vindex;
    std::map<std::string, int> aindex;

    int nv() const { return (int)vertices.size(); }
    int na() const { return (int)arrows.size(); }

    // Build the name maps and sanity-check the raw data.
    void finalize() {
        vindex.clear();
        aindex.clear();
        if (vertices.empty()) throw InputError("quiver needs at least one vertex");
        for (int i = 0; i < (int)vertices.size(); ++i) {
            if (vertices[i].empty()) throw InputError("empty vertex name");
            if (!vindex.emplace(vertices[i], i).second)
                throw InputError("duplicate vertex name: " + vertices[i]);
        }
        for (int i = 0; i < (int)arrows.size(); ++i) {
            auto& a = arrows[i];
            if (a.name.empty()) throw InputError("empty arrow name");
            if (!aindex.emplace(a.name, i).second)
                throw InputError("duplicate arrow name: " + a.name);
            if (a.src < 0 || a.src >= nv() || a.tgt < 0 || a.tgt >= nv())
                throw InputError("arrow " + a.name + " has endpoint outside vertex range");
        }
    }

    int vertex(const std::string& s) const {
        auto it = vindex.find(s);
        if (it == vindex.end()) throw InputError("unknown vertex: " + s);
        return it->second;
    }
    int arrow(const std::string& s) const {
        auto it = aindex.find(s);
        if (it == aindex.end()) throw InputError("unknown arrow: " + s);
        return it->second;
    }
};

// One summand of a relation: coeff * (path written in traversal order,
// i.e. path[0] is applied first).  Coefficients stay as strings until a
// field is chosen.
struct RelTerm {
    std::string coeff = "1";
    std::vector<std::string> path;
};

struct Relation {
    std::vector<RelTerm> terms;
};

struct Presentation {
    Quiver q;
    std::vector<Relation> relations;
    int max_path_len = 64;     // paths are enumerated up to this length
    std::size_t max_paths = 20000;
    std::string name;
};

// Structural checks that do not depend on the field: arrows exist, paths
// compose, all terms of a relation are parallel, and every term has length
// at least two (so the ideal sits inside the square of the arrow ideal).
inline void validate_presentation(const Presentation& p) {
    const Quiver& q = p.q;
    if (p.max_path_len < 2) throw InputError("max_path_len must be at least 2");
    for (std::size_t ri = 0; ri < p.relations.size(); ++ri) {
        const Relation& r = p.relations[ri];
        std::string where = "relation #" + std::to_string(ri + 1);
        if (r.terms.empty()) throw InvalidRelation(where + " has no terms");
        int rsrc = -1, rtgt = -1;
        for (const RelTerm& t : r.terms) {
            if (t.path.size() < 2)
                throw InvalidRelation(where + ": term of length " +
                                      std::to_string(t.path.size()) +
                                      " (relations must lie in paths of length >= 2)");
            if ((int)t.path.size() > p.max_path_len)
                throw InvalidRelation(where + ": term longer than max_path_len");
            int prev_tgt = -1;
            for (std::size_t k = 0; k < t.path.size(); ++k) {
                int ai = q.arrow(t.path[k]);
                const Arrow& a = q.arrows[ai];
                if (k > 0 && a.src != prev_tgt)
                    throw InvalidRelation(where + ": arrows " + t.path[k - 1] + "," +
                                          t.path[k] + " do not compose");
                prev_tgt = a.tgt;
            }
            int tsrc = q.arrows[q.arrow(t.path.front())].src;
            int ttgt = q.arrows[q.arrow(t.path.back())].tgt;
            if (rsrc < 0) { rsrc = tsrc; rtgt = ttgt; }
            else if (tsrc != rsrc || ttgt != rtgt)
                throw InvalidRelation(where + ": terms are not parallel paths");
        }
    }
}

} // namespace itlab
