#pragma once

// JSON forms of the library's reports (nlohmann/json).

#include "superpattern/search.hpp"
#include "superpattern/universal.hpp"

#include <json.hpp>

namespace superpattern {

inline nlohmann::json positions_json(const Embedding& e) {
    return nlohmann::json(e.positions);
}

inline nlohmann::json to_json(const UniversalityReport& r) {
    return {
        {"candidate", format(r.candidate)},
        {"n", r.n},
        {"class_name", to_string(r.class_name)},
        {"ok", r.ok},
        {"missing", r.missing ? nlohmann::json(format(*r.missing)) : nlohmann::json(nullptr)},
        {"patterns_checked", r.patterns_checked},
    };
}

inline nlohmann::json to_json(const SearchReport& r) {
    nlohmann::json exhausted = nlohmann::json::array();
    for (const auto& [length, count] : r.lengths_exhausted) {
        exhausted.push_back(nlohmann::json::array({length, count}));
    }
    return {
        {"n", r.n},
        {"pattern_class", to_string(r.pattern_class)},
        {"candidate_class", to_string(r.candidate_class)},
        {"min_length", r.min_length},
        {"witness", format(r.witness)},
        {"candidates_examined", r.candidates_examined},
        {"lengths_exhausted", exhausted},
        {"elapsed_ms", r.elapsed_ms},
    };
}

inline nlohmann::json to_json(const Claims231Report& r) {
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : r.claims) {
        claims.push_back({
            {"id", c.id},
            {"statement", c.statement},
            {"passed", c.passed},
            {"skipped", c.skipped},
            {"detail", c.detail},
            {"witness", c.witness ? positions_json(*c.witness) : nlohmann::json(nullptr)},
        });
    }
    return {{"claims", claims}, {"all_passed", r.all_passed()}};
}

inline nlohmann::json to_json(const Conjecture321Report& r) {
    return {
        {"n", r.n},
        {"min_length", r.min_length},
        {"witness_any", format(r.witness_any)},
        {"witness_avoiding",
         r.witness_avoiding ? nlohmann::json(format(*r.witness_avoiding)) : nlohmann::json(nullptr)},
        {"avoiding_candidates_examined", r.avoiding_candidates_examined},
        {"holds", r.holds},
        {"search", to_json(r.search)},
    };
}

}  // namespace superpattern
