#pragma once

// JSON and Graphviz DOT exports for both quivers.  The two share one schema:
//   {"n", "kind", "objects", "homs": [{"i", "j", "basis": [[...], ...]}],
//    "compositions": [{"i", "j", "k", "f", "g", "result"}]}
// where basis vectors are offsets b for the cell quiver and exponent vectors
// for the sheaf quiver.

#include <string>

#include "tdual/beilinson.hpp"
#include "tdual/combinatorial_homs.hpp"
#include "tdual/report.hpp"

namespace tdual {

Json quiver_to_json(const homs::Quiver& q);
Json quiver_to_json(const beilinson::SheafQuiver& q);

/// Objects as nodes and the generators between consecutive levels as
/// labeled edges.
std::string quiver_to_dot(const homs::Quiver& q);
std::string quiver_to_dot(const beilinson::SheafQuiver& q);

std::string monomial_label(const beilinson::Monomial& m);
std::string offset_label(const homs::MultiIndex& b);

}  // namespace tdual
