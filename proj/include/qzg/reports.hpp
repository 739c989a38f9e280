#pragma once

#include "json.hpp"
#include "qzg/bounds.hpp"
#include "qzg/enumerate.hpp"

// JSON renderings with a stable key order.

namespace qzg {

inline nlohmann::ordered_json to_json(const ExtremalReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["p"] = r.p;
    j["k"] = r.k;
    j["max_m1"] = r.max_m1;
    j["max_m2"] = r.max_m2;
    j["argmax_m1"] = r.argmax_m1;
    j["argmax_m2"] = r.argmax_m2;
    j["class_size"] = r.class_size;
    return j;
}

inline nlohmann::ordered_json to_json(const BoundViolation& v) {
    nlohmann::ordered_json j;
    j["graph6"] = v.graph6;
    j["witness"] = v.witness.to_vector();
    j["index"] = v.index;
    j["bound"] = v.bound;
    j["realized"] = v.realized;
    return j;
}

inline nlohmann::ordered_json to_json(const BoundSweepResult& r) {
    nlohmann::ordered_json j;
    j["checked"] = r.checked;
    j["violations"] = nlohmann::ordered_json::array();
    for (const BoundViolation& v : r.violations) j["violations"].push_back(to_json(v));
    j["tight"] = r.tight;
    return j;
}

}  // namespace qzg
