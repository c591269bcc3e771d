#include <doctest.h>

#include <set>

#include "support/oracles.hpp"
#include "tdual/combinatorial_homs.hpp"

using namespace tdual::homs;
using tdual::testing::brute_force_offsets;
using tdual::testing::pascal_binomial;

namespace {

std::vector<MultiIndex> all_offsets(std::size_t n) {
    std::vector<MultiIndex> out;
    MultiIndex a(n, -static_cast<int>(n));
    while (true) {
        out.push_back(a);
        std::size_t d = 0;
        for (; d < n; ++d) {
            if (++a[d] <= 0) break;
            a[d] = -static_cast<int>(n);
        }
        if (d == n) break;
    }
    return out;
}

}  // namespace

TEST_CASE("hom dimensions match brute force and Pascal") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const int top = static_cast<int>(n);
        for (int i = -top - 1; i <= -1; ++i) {
            for (int j = -top - 1; j <= -1; ++j) {
                CAPTURE(n);
                CAPTURE(i);
                CAPTURE(j);
                const auto basis = hom_basis(i, j, n);
                const auto expected = j >= i ? pascal_binomial(j - i + top, top) : 0;
                CHECK(basis.size() == expected);
                CHECK(hom_dimension(i, j, n) == expected);
                CHECK(brute_force_offsets(top, i - j) == (j >= i ? expected : 0));
            }
        }
    }
}

TEST_CASE("counting function at anchored values") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(brute_force_offsets(n, 0) == 1);  // only b = 0
        CHECK(hom_dimension(-1, -1, n) == 1);
        CHECK(hom_basis(-1, -2, n).empty());
    }
    const auto basis = hom_basis(-2, -1, 2);
    REQUIRE(basis.size() == 3);
    const std::set<MultiIndex> got{basis[0].b, basis[1].b, basis[2].b};
    CHECK(got == std::set<MultiIndex>{{-1, 0}, {0, -1}, {0, 0}});
}

TEST_CASE("hom basis is sorted, in degree zero and within bounds") {
    const auto basis = hom_basis(-4, -1, 3);
    for (std::size_t t = 1; t < basis.size(); ++t) CHECK(basis[t - 1].b < basis[t].b);
    for (const auto& e : basis) {
        CHECK(e.degree == 0);
        CHECK(e.source == -4);
        CHECK(e.target == -1);
        int sum = 0;
        for (int v : e.b) {
            CHECK(v <= 0);
            sum += v;
        }
        CHECK(sum >= -3);
    }
    CHECK_THROWS_AS(hom_basis(-1, -1, 0), std::invalid_argument);
}

TEST_CASE("composition adds offsets and respects endpoints") {
    const HomElement f{-3, -2, {-1, 0}, 0};
    const HomElement g{-2, -1, {0, -1}, 0};
    const auto h = compose(g, f);
    CHECK(h.source == -3);
    CHECK(h.target == -1);
    CHECK(h.b == MultiIndex{-1, -1});
    CHECK_THROWS_AS(compose(f, g), std::invalid_argument);
    CHECK_THROWS_AS(compose(HomElement{-2, -1, {0}, 0}, f), std::invalid_argument);
}

TEST_CASE("composition is associative with identities") {
    const auto q = quotient_quiver(2);
    for (int i : q.objects) {
        for (int j : q.objects) {
            for (const auto& f : q.hom(i, j)) {
                const auto& id_i = q.hom(i, i).at(0);
                const auto& id_j = q.hom(j, j).at(0);
                CHECK(compose(f, id_i) == f);
                CHECK(compose(id_j, f) == f);
                for (int k : q.objects) {
                    for (const auto& g : q.hom(j, k)) {
                        for (int l : q.objects) {
                            for (const auto& h : q.hom(k, l)) {
                                CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("every hom factors through consecutive generators") {
    // Path-algebra check: the quiver is generated by arrows between
    // neighbouring objects.
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto q = quotient_quiver(n);
        for (std::size_t s = 0; s < q.objects.size(); ++s) {
            for (std::size_t t = s + 2; t < q.objects.size(); ++t) {
                const int i = q.objects[s];
                const int j = q.objects[s + 1];
                const int k = q.objects[t];
                std::set<MultiIndex> reached;
                for (const auto& f : q.hom(i, j)) {
                    for (const auto& g : q.hom(j, k)) reached.insert(compose(g, f).b);
                }
                std::set<MultiIndex> all;
                for (const auto& e : q.hom(i, k)) all.insert(e.b);
                CHECK(reached == all);
            }
        }
    }
}

TEST_CASE("cell containment matches sampled geometry") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const int top = static_cast<int>(n);
        const auto offsets = all_offsets(n);
        for (int i = -top - 1; i <= -1; ++i) {
            for (int j = -top - 1; j <= -1; ++j) {
                for (const auto& b : offsets) {
                    const CellObject outer{i, MultiIndex(n, 0)};
                    const CellObject inner{j, b};
                    CAPTURE(n);
                    CAPTURE(i);
                    CAPTURE(j);
                    CAPTURE(b);
                    CHECK(cell_contains(outer, inner) ==
                          tdual::testing::sampled_cell_contains(i, outer.a, j, b));
                }
            }
        }
    }
}

TEST_CASE("containment count equals the hom dimension") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const int top = static_cast<int>(n);
        const auto offsets = all_offsets(n);
        for (int i = -top - 1; i <= -1; ++i) {
            for (int j = -top - 1; j <= -1; ++j) {
                std::size_t count = 0;
                for (const auto& b : offsets) {
                    if (cell_contains({i, MultiIndex(n, 0)}, {j, b})) ++count;
                }
                CHECK(count == hom_dimension(i, j, n));
            }
        }
    }
}

TEST_CASE("containment is invariant under the deck group") {
    const std::size_t n = 2;
    const auto offsets = all_offsets(n);
    for (const auto& alpha : offsets) {
        const DeckElement g(n, alpha);
        for (int i = -3; i <= -1; ++i) {
            for (int j = -3; j <= -1; ++j) {
                for (const auto& a : offsets) {
                    for (const auto& b : offsets) {
                        const CellObject x{i, a};
                        const CellObject y{j, b};
                        CHECK(cell_contains(x, y) == cell_contains(gamma_act(g, x), gamma_act(g, y)));
                    }
                }
            }
        }
    }
}

TEST_CASE("deck group arithmetic") {
    const DeckElement a(2, {2, 1});
    const DeckElement b(2, {2, 2});
    CHECK((a + b).components() == MultiIndex{1, 0});
    CHECK(DeckElement(2, {-1, 4}).components() == MultiIndex{2, 1});
    CHECK(a.modulus() == 3);
    CHECK_THROWS_AS(DeckElement(2, {1}), std::invalid_argument);
    CHECK_THROWS_AS(a + DeckElement(3, {0, 0, 0}), std::invalid_argument);

    const CellObject x{-2, {0, -1}};
    const auto moved = gamma_act(DeckElement(2, {1, 1}), x);
    CHECK(moved.k == -2);
    CHECK(moved.a == normalize_offset({1, 0}, 2));
    CHECK(normalize_offset({1, 0}, 2) == MultiIndex{-2, 0});
}

TEST_CASE("cover morphisms descend to the quotient equivariantly") {
    const CoverMorphism f{-3, {0, 0}, -2, {-1, 0}};
    const CoverMorphism g{-2, {-1, 0}, -1, {-1, -1}};
    const auto h = compose(g, f);
    CHECK(h.source_lift == MultiIndex{0, 0});
    CHECK(h.target_lift == MultiIndex{-1, -1});
    CHECK(to_hom_element(h) == compose(to_hom_element(g), to_hom_element(f)));
    CHECK(to_hom_element(f).b == MultiIndex{-1, 0});

    for (const auto& alpha : all_offsets(2)) {
        const DeckElement d(2, alpha);
        CHECK(to_hom_element(gamma_act(d, f)) == to_hom_element(f));
        CHECK(compose(gamma_act(d, g), gamma_act(d, f)) == gamma_act(d, h));
    }
    CHECK_THROWS_AS(compose(f, g), std::invalid_argument);
}

TEST_CASE("containing lift") {
    const auto lift = containing_lift({-3, {0, 0}}, {-1, {-2, 0}});
    REQUIRE(lift.has_value());
    CHECK(*lift == MultiIndex{-2, 0});
    CHECK_FALSE(containing_lift({-1, {0, 0}}, {-3, {0, 0}}).has_value());
    // Full-diameter outer cell contains every smaller cell after some lift.
    for (const auto& b : all_offsets(2)) CHECK(cell_contains({-3, {0, 0}}, {-3, b}) == (b == MultiIndex{0, 0}));
    CHECK_THROWS_AS(cell_contains({-1, {0, 0}}, {-1, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(cell_contains({-5, {0, 0}}, {-1, {0, 0}}), std::invalid_argument);
}

TEST_CASE("quotient quiver is strong exceptional") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto q = quotient_quiver(n);
        CHECK(q.objects.size() == n + 1);
        CHECK(is_strong_exceptional(q));
        CHECK(graded_hom(q, q.objects.front(), q.objects.back(), 1).empty());
        CHECK(graded_hom(q, q.objects.front(), q.objects.back(), 0).size() == q.hom(q.objects.front(), q.objects.back()).size());
    }
}

TEST_CASE("corrupted quivers are rejected") {
    const auto good = quotient_quiver(2);

    auto backward = good;
    backward.homs[{-1, -3}] = {HomElement{-1, -3, {0, 0}, 0}};
    CHECK_FALSE(is_strong_exceptional(backward));

    auto graded = good;
    graded.homs[{-3, -2}][0].degree = 1;
    CHECK_FALSE(is_strong_exceptional(graded));

    auto fat_end = good;
    fat_end.homs[{-2, -2}].push_back(HomElement{-2, -2, {-1, 0}, 0});
    CHECK_FALSE(is_strong_exceptional(fat_end));

    auto not_closed = good;
    not_closed.compositions.front().result.b = {5, 5};
    CHECK_FALSE(is_strong_exceptional(not_closed));

    auto stray = good;
    stray.homs[{-7, -1}] = {};
    CHECK_FALSE(is_strong_exceptional(stray));

    auto mislabeled = good;
    mislabeled.homs[{-3, -1}][0].source = -2;
    CHECK_FALSE(is_strong_exceptional(mislabeled));
}
