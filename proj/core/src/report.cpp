#include "tdual/report.hpp"

namespace tdual {

Json CheckReport::to_json() const {
    Json j;
    j["check"] = check;
    j["anchor"] = anchor;
    j["parameters"] = parameters;
    j["max_deviation"] = max_deviation;
    if (witness) j["witness"] = *witness;
    j["pass"] = pass;
    if (!details.empty()) j["details"] = details;
    return j;
}

}  // namespace tdual
