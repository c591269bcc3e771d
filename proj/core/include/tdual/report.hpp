#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace tdual {

using Json = nlohmann::ordered_json;

/// Outcome of one numerical or combinatorial check. Serializes to
/// {check, anchor, parameters, max_deviation, witness?, pass, details?}.
struct CheckReport {
    std::string check;
    std::string anchor;  // the statement being checked, by content
    Json parameters = Json::object();
    double max_deviation = 0.0;
    std::optional<Json> witness;
    bool pass = true;
    Json details = Json::object();

    Json to_json() const;
};

}  // namespace tdual
