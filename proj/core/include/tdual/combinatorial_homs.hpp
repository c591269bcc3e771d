#pragma once

// The category of open cells U^a(k) on the covering torus (R/(n+1)Z)^n and
// its quotient by the deck group Gamma = (Z/(n+1))^n.
//
// After quotienting, hom(U(i), U(j)) has one basis element e^b_{i,j} for each
// integer lift b with U^b(j) contained in U^0(i), i.e. b_l <= 0 and
// sum b >= i - j.  Composition adds the offsets: e^c_{j,k} e^b_{i,j} = e^{b+c}_{i,k}.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tdual::homs {

using MultiIndex = std::vector<int>;

/// U^a(k) with k in {-n-1, ..., -1} and a in {-n, ..., 0}^n.
struct CellObject {
    int k = -1;
    MultiIndex a;

    friend bool operator==(const CellObject&, const CellObject&) = default;
};

/// Basis morphism e^b_{i,j}.
struct HomElement {
    int source = 0;
    int target = 0;
    MultiIndex b;
    int degree = 0;

    friend bool operator==(const HomElement&, const HomElement&) = default;
    friend auto operator<=>(const HomElement&, const HomElement&) = default;
};

/// Element alpha of the deck group (Z/(n+1))^n, kept reduced to [0, n].
class DeckElement {
public:
    DeckElement(std::size_t n, MultiIndex alpha);

    std::size_t dimension() const { return alpha_.size(); }
    const MultiIndex& components() const { return alpha_; }
    int modulus() const { return static_cast<int>(alpha_.size()) + 1; }

    DeckElement operator+(const DeckElement& other) const;
    friend bool operator==(const DeckElement&, const DeckElement&) = default;

private:
    MultiIndex alpha_;
};

/// Containment U^a(i) ⊃ U^b(j) in the cover, both offsets given as integer
/// lifts in R^n, so the cells are the concrete open simplices
/// {x_l < a_l, sum x > i + sum a}.
struct CoverMorphism {
    int source = 0;
    MultiIndex source_lift;
    int target = 0;
    MultiIndex target_lift;

    friend bool operator==(const CoverMorphism&, const CoverMorphism&) = default;
};

/// Reduce each component into the representative range {-n, ..., 0}.
MultiIndex normalize_offset(const MultiIndex& a, std::size_t n);

/// Whether the torus image of U^inner.b(inner.k) lies inside that of
/// U^outer.a(outer.k).  Decided by searching integer lifts b' = b mod (n+1)
/// in the window [-(n+1), n+1]^n around a.
bool cell_contains(const CellObject& outer, const CellObject& inner);

/// The unique lift b' of inner.a realizing the containment, if any.
std::optional<MultiIndex> containing_lift(const CellObject& outer, const CellObject& inner);

/// All b with b_l <= 0 and sum b >= i - j, in lexicographic order.
std::vector<HomElement> hom_basis(int i, int j, std::size_t n);

/// Number of such b, C(j - i + n, n) for j >= i.
std::size_t hom_dimension(int i, int j, std::size_t n);

/// e^c_{j,k} . e^b_{i,j} = e^{b+c}_{i,k}.
HomElement compose(const HomElement& g, const HomElement& f);

CellObject gamma_act(const DeckElement& alpha, const CellObject& x);
CoverMorphism gamma_act(const DeckElement& alpha, const CoverMorphism& x);

/// Composite of U^a(i) ⊃ U^b(j) and U^b(j) ⊃ U^c(k).
CoverMorphism compose(const CoverMorphism& g, const CoverMorphism& f);

/// The quotient-category basis element represented by a cover containment.
HomElement to_hom_element(const CoverMorphism& m);

/// One entry of a composition table: g . f = result, with g and f given by
/// their positions in the hom bases of the quiver.
template <class Basis>
struct CompositionEntry {
    int i = 0;
    int j = 0;
    int k = 0;
    std::size_t f_index = 0;  // in hom(i, j)
    std::size_t g_index = 0;  // in hom(j, k)
    Basis result;
};

/// Objects with graded hom bases and a composition table.
template <class Basis>
struct BasicQuiver {
    std::size_t n = 0;
    std::vector<int> objects;
    std::map<std::pair<int, int>, std::vector<Basis>> homs;
    std::vector<CompositionEntry<Basis>> compositions;

    const std::vector<Basis>& hom(int i, int j) const {
        static const std::vector<Basis> empty;
        auto it = homs.find({i, j});
        return it == homs.end() ? empty : it->second;
    }
};

using Quiver = BasicQuiver<HomElement>;

/// The graded piece hom^degree(U(i), U(j)) of a quiver.
std::vector<HomElement> graded_hom(const Quiver& q, int i, int j, int degree);

/// Objects U(-n-1), ..., U(-1) with bases hom_basis and composition from compose.
Quiver quotient_quiver(std::size_t n);

/// One-dimensional endomorphisms spanned by the identity, no backward homs,
/// every basis element in degree 0, and composition closed on bases.
bool is_strong_exceptional(const Quiver& q);

}  // namespace tdual::homs
