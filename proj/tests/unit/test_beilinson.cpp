#include <doctest.h>

#include <set>

#include "support/oracles.hpp"
#include "tdual/beilinson.hpp"

using namespace tdual::beilinson;
using tdual::homs::HomElement;

TEST_CASE("monomial bases have the expected size and degree") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int d = 0; d <= static_cast<int>(n); ++d) {
            const auto basis = monomial_hom_basis(-1 - d, -1, n);
            CHECK(basis.size() == tdual::testing::pascal_binomial(d + static_cast<int>(n), static_cast<int>(n)));
            std::set<std::vector<int>> distinct;
            for (const auto& m : basis) {
                CHECK(m.degree() == d);
                distinct.insert(m.exponents);
            }
            CHECK(distinct.size() == basis.size());
            CHECK(euler_pairing(-1 - d, -1, n) == static_cast<long long>(basis.size()));
        }
    }
    CHECK(monomial_hom_basis(-1, -2, 2).empty());
    CHECK(monomial_hom_basis(-3, -1, 1).front().exponents == std::vector<int>{2, 0});
    CHECK_THROWS_AS(euler_pairing(-1, -2, 2), std::invalid_argument);
}

TEST_CASE("nu on small examples") {
    // e^{(-1,0)}_{-2,-1} -> x_0^0 x_1 x_2^0
    CHECK(nu(HomElement{-2, -1, {-1, 0}, 0}).exponents == std::vector<int>{0, 1, 0});
    CHECK(nu(HomElement{-2, -1, {0, 0}, 0}).exponents == std::vector<int>{1, 0, 0});
    CHECK(nu(HomElement{-3, -1, {-1, -1}, 0}).exponents == std::vector<int>{0, 1, 1});
    CHECK(nu(HomElement{-2, -2, {0}, 0}).exponents == std::vector<int>{0, 0});
    CHECK_THROWS_AS(nu(HomElement{-2, -1, {1, 0}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(nu(HomElement{-2, -1, {-1, -1}, 0}), std::invalid_argument);
}

TEST_CASE("monomial composition multiplies") {
    const Monomial f{-3, -2, {1, 0}};
    const Monomial g{-2, -1, {0, 1}};
    const auto h = monomial_compose(g, f);
    CHECK(h.source == -3);
    CHECK(h.target == -1);
    CHECK(h.exponents == std::vector<int>{1, 1});
    CHECK_THROWS_AS(monomial_compose(f, g), std::invalid_argument);
}

TEST_CASE("the two quivers agree for n up to 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto r = verify_equivalence(n);
        CAPTURE(n);
        CHECK(r.pass);
        CHECK(r.bijective);
        CHECK(r.homomorphism);
        CHECK_FALSE(r.witness.has_value());
        // All ordered pairs, backward ones included.
        CHECK(r.hom_pairs == (n + 1) * (n + 1));
    }
}

TEST_CASE("equivalence detects corrupted composition tables") {
    const auto cells = tdual::homs::quotient_quiver(2);
    const auto sheaves = sheaf_quiver(2);

    auto swapped = cells;
    // Replace a composite by a different basis element of the same hom space.
    for (auto& c : swapped.compositions) {
        if (c.i != c.j && c.j != c.k) {
            const auto& options = swapped.hom(c.i, c.k);
            for (const auto& o : options) {
                if (!(o == c.result)) {
                    c.result = o;
                    break;
                }
            }
            break;
        }
    }
    const auto r1 = verify_equivalence(swapped, sheaves);
    CHECK_FALSE(r1.pass);
    CHECK_FALSE(r1.homomorphism);
    CHECK(r1.witness.has_value());

    auto missing = cells;
    missing.homs[{-3, -1}].pop_back();
    const auto r2 = verify_equivalence(missing, sheaves);
    CHECK_FALSE(r2.pass);
    CHECK_FALSE(r2.bijective);

    auto truncated = cells;
    truncated.compositions.pop_back();
    CHECK_FALSE(verify_equivalence(truncated, sheaves).pass);

    const auto report = r1.to_check_report();
    CHECK_FALSE(report.pass);
    CHECK(report.to_json().contains("witness"));
}
