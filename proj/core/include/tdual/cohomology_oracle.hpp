#pragma once

// Independent recomputation of hom dimensions as relative cohomology.
//
// hom(U^a(i), U^b(j)) in constructible sheaves is the relative cohomology of
// (closure(U^a(i)) ∩ U^b(j), ∂U^a(i) ∩ U^b(j)).  Both spaces are unions of
// cells of the integer arrangement {g_l = c} ∪ {sum g = c} on the covering
// torus (R/(n+1)Z)^n.  The open inner cell is replaced by its closed
// epsilon-shrink, the resulting compact pair is triangulated compatibly with
// the arrangement, and ranks of the relative coboundary are taken exactly.
//
// Supported for n in {1, 2}.

#include <cstddef>
#include <vector>

#include "tdual/combinatorial_homs.hpp"
#include "tdual/exact_linalg.hpp"
#include "tdual/report.hpp"

namespace tdual::oracle {

using RationalPoint = std::vector<Rational>;

/// Position of a point relative to the integer arrangement: for each of the
/// functionals g_1, ..., g_n, sum g the entry is 2c when the value equals the
/// integer c, and 2c+1 when it lies strictly in (c, c+1).
using CellLabel = std::vector<long>;

CellLabel arrangement_label(const RationalPoint& p);

/// A relatively open cell of the integer arrangement, in the chart of the
/// inner cell's lift.
struct RegionCell {
    int dimension = 0;
    CellLabel label;
    RationalPoint interior;
    std::vector<RationalPoint> vertices;
};

/// Finite union of pairwise disjoint relatively open cells.
struct PolyhedralRegion {
    std::size_t n = 0;
    std::vector<RegionCell> cells;

    bool empty() const { return cells.empty(); }
    bool contains_label(const CellLabel& label) const;
    std::vector<std::size_t> cell_counts() const;  // per dimension 0..n
};

/// X = closure(U^a(i)) ∩ U^b(j) and A = ∂U^a(i) ∩ U^b(j) on the torus.
struct RegionPair {
    std::size_t n = 0;
    homs::CellObject outer;
    homs::CellObject inner;
    PolyhedralRegion x;
    PolyhedralRegion a;
    /// Smallest positive gap between values of any coordinate functional on
    /// the arrangement vertices of the closed inner cell.
    Rational vertex_gap = 1;
};

RegionPair region_pair(const homs::CellObject& outer, const homs::CellObject& inner);

/// Finite simplicial pair (X, A).  Simplices are sorted vertex-index lists
/// oriented by increasing index; simplices[d] lists the d-simplices of X.
struct SimplicialPair {
    std::size_t n = 0;
    std::vector<RationalPoint> vertices;
    std::vector<std::vector<std::vector<std::size_t>>> simplices;
    std::vector<std::vector<bool>> in_a;  // parallel to simplices

    std::vector<std::size_t> counts_x() const;
    std::vector<std::size_t> counts_a() const;
    /// Throws std::logic_error unless X and A are closed under faces.
    void validate() const;
};

/// Closed epsilon-shrink of the inner cell, triangulated compatibly with the
/// arrangement and with the shrink's own facets.  Requires
/// 0 < epsilon < vertex_gap / 4.
SimplicialPair shrink_and_triangulate(const RegionPair& pair, const Rational& epsilon);

struct BettiProfile {
    std::vector<std::size_t> betti;  // degrees 0..n
    long euler_characteristic = 0;   // alternating count of relative cells

    long alternating_sum() const;
    friend bool operator==(const BettiProfile&, const BettiProfile&) = default;
};

/// Rational cohomology of the relative cochain complex C^*(X) / C^*(A).
BettiProfile relative_cohomology(const SimplicialPair& pair);

struct PairAudit {
    int i = 0;
    int j = 0;
    homs::MultiIndex b;
    BettiProfile profile;
    std::vector<std::size_t> cells_x;
    std::vector<std::size_t> cells_a;

    Json to_json() const;
};

struct OracleResult {
    int i = 0;
    int j = 0;
    std::size_t n = 0;
    std::vector<std::size_t> dims;  // graded total, degrees 0..n
    std::vector<PairAudit> pairs;
};

/// Sum over offsets b in {-n, ..., 0}^n of relative_cohomology of
/// region_pair((i, 0), (j, b)).
OracleResult oracle_hom_dim(int i, int j, std::size_t n, const Rational& epsilon);

/// Default shrink parameter used by the CLI and acceptance suite.
Rational default_epsilon();

}  // namespace tdual::oracle
