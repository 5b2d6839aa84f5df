#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace latkit {

enum class Verdict { holds, fails, unverified };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        default: return "unverified";
    }
}

/**
 * One property check against one subject. Failing verdicts always carry
 * a witness. Timing is optional and excluded from canonical output so
 * identical inputs render byte-identical reports.
 */
struct PropertyReport {
    std::string subject;
    std::string property;
    Verdict verdict = Verdict::unverified;
    nlohmann::ordered_json witness; // null when not applicable
    std::optional<double> seconds;

    nlohmann::ordered_json to_json(bool with_timing = false) const {
        nlohmann::ordered_json j;
        j["subject"] = subject;
        j["property"] = property;
        j["verdict"] = to_string(verdict);
        j["witness"] = witness.is_null() ? nlohmann::ordered_json() : witness;
        if (with_timing && seconds) j["seconds"] = *seconds;
        return j;
    }
};

struct RunOptions {
    unsigned seed = 7;
    int threads = 0;      // 0 = pick a default
    bool timings = false; // include wall-clock timing in rendered reports
    bool extended = false; // enable slower sweeps guarded by size flags
};

} // namespace latkit
