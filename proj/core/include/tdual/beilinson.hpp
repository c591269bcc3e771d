#pragma once

// Line-bundle side: hom(O(i), O(j)) on P^n is the space of degree j - i
// monomials in x_0, ..., x_n, and composition is multiplication.  The map nu
// sends e^b_{i,j} to x_0^{j-i+sum b} x_1^{-b_1} ... x_n^{-b_n}.

#include <cstddef>
#include <optional>
#include <vector>

#include "tdual/combinatorial_homs.hpp"
#include "tdual/report.hpp"

namespace tdual::beilinson {

using homs::HomElement;
using homs::Quiver;

/// x_0^{e_0} ... x_n^{e_n} viewed as a morphism O(source) -> O(target).
struct Monomial {
    int source = 0;
    int target = 0;
    std::vector<int> exponents;

    int degree() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

using SheafQuiver = homs::BasicQuiver<Monomial>;

/// All degree-(j - i) monomials in n+1 variables, lexicographically
/// decreasing in the exponent vector (x_0^d first).
std::vector<Monomial> monomial_hom_basis(int i, int j, std::size_t n);

/// g . f as exponent-wise sum.
Monomial monomial_compose(const Monomial& g, const Monomial& f);

Monomial nu(const HomElement& e);

/// chi(O(i), O(j)) = C(j - i + n, n) for j >= i.
long long euler_pairing(int i, int j, std::size_t n);

/// The exceptional collection O(-n-1), ..., O(-1) with its monomial quiver.
SheafQuiver sheaf_quiver(std::size_t n);

/// Counts and outcome of comparing the cell quiver with the sheaf quiver.
struct EquivalenceReport {
    std::size_t n = 0;
    std::size_t hom_pairs = 0;
    std::size_t basis_elements = 0;
    std::size_t composable_pairs = 0;
    bool bijective = true;
    bool homomorphism = true;
    bool pass = true;
    std::optional<Json> witness;

    CheckReport to_check_report() const;
};

/// Exhaustive comparison through nu: bijection on every hom space and
/// nu(g . f) = nu(g) nu(f) on every composable basis pair, using the
/// composition table stored in `cells`.
EquivalenceReport verify_equivalence(const Quiver& cells, const SheafQuiver& sheaves);

/// verify_equivalence(quotient_quiver(n), sheaf_quiver(n)).
EquivalenceReport verify_equivalence(std::size_t n);

}  // namespace tdual::beilinson
