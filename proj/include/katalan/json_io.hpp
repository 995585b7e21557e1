#pragma once

#include <json.hpp>

#include "katalan/cores.hpp"

namespace katalan {

using json = nlohmann::ordered_json;

inline json to_json(const Vec& v) { return json(v); }

inline json to_json(const IndexMultiset& m) {
    json j = json::object();
    for (auto& [a, n] : m.counts()) j[std::to_string(a)] = n;
    return j;
}

inline json to_json(const RootIdeal& psi) {
    json cols = json::array();
    for (int i = 1; i <= psi.ell(); ++i) {
        if (psi.has_row(i)) cols.push_back(psi.start_col(i));
        else cols.push_back(nullptr);
    }
    return json{{"ell", psi.ell()}, {"start_col", cols}};
}

inline json to_json(const HExpansion& f) {
    json j = json::array();
    for (auto& [p, c] : f.terms()) j.push_back(json{{"partition", p}, {"coeff", c}});
    return j;
}

inline json to_json(const KatalanTerm& t) {
    return json{{"ideal", to_json(t.ideal)}, {"multiset", to_json(t.multiset)}, {"gamma", t.gamma}};
}

inline json to_json(const IdentityRecord& r) {
    json j{{"name", r.name},
           {"instance", r.instance},
           {"lhs", to_json(r.lhs)},
           {"rhs", to_json(r.rhs)},
           {"equal", r.equal},
           {"applicable", r.applicable}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline json omega_to_json(const std::set<Vec>& elems) {
    json j = json::array();
    for (const Vec& v : elems) j.push_back(v);
    return j;
}

inline json to_json(const Core& c) { return json{{"shape", c.shape}, {"r", c.r}}; }

}  // namespace katalan
