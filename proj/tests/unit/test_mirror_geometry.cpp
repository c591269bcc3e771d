#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "tdual/mirror_geometry.hpp"

using namespace tdual::geometry;

TEST_CASE("moment map of simple points") {
    const auto x = moment_map(ProjectivePoint({1.0, 1.0}));
    CHECK(x[0] == doctest::Approx(0.5).epsilon(1e-15));

    // (1 : 1 : 1) sits at the barycenter.
    const auto y = moment_map(ProjectivePoint({1.0, 1.0, 1.0}));
    CHECK(y[0] == doctest::Approx(1.0 / 3.0));
    CHECK(y[1] == doctest::Approx(1.0 / 3.0));

    // Coordinate vertices go to vertices of the simplex.
    const auto v = moment_map(ProjectivePoint({0.0, 0.0, 2.0}));
    CHECK(v[0] == 0.0);
    CHECK(v[1] == 1.0);
    CHECK_FALSE(v.strictly_interior());
}

TEST_CASE("moment map is invariant under rescaling and phases") {
    const ProjectivePoint p({Complex(1.0, 2.0), Complex(-0.5, 0.25), Complex(3.0, 0.0)});
    const ProjectivePoint q({Complex(1.0, 2.0) * Complex(0.0, -7.0), Complex(-0.5, 0.25) * Complex(0.0, -7.0),
                             Complex(3.0, 0.0) * Complex(0.0, -7.0)});
    CHECK(p.same_point(q));
    const auto a = moment_map(p);
    const auto b = moment_map(q);
    for (std::size_t l = 0; l < 2; ++l) CHECK(a[l] == doctest::Approx(b[l]).epsilon(1e-14));

    const ProjectivePoint r({Complex(1.0, 0.0), Complex(0.0, 0.5), Complex(-3.0, 0.0)});
    CHECK_FALSE(p.same_point(r));
    const auto c = moment_map(r);
    const auto d = moment_map(ProjectivePoint({1.0, 0.5, 3.0}));
    for (std::size_t l = 0; l < 2; ++l) CHECK(c[l] == doctest::Approx(d[l]).epsilon(1e-14));
}

TEST_CASE("fiber radii invert the moment map") {
    // r = sqrt(x / (1 - sum x)) by hand.
    const auto r1 = fiber_radii_from_moment(MomentImage({0.5}));
    CHECK(r1[0] == doctest::Approx(1.0).epsilon(1e-15));
    const auto r2 = fiber_radii_from_moment(MomentImage({1.0 / 3.0, 1.0 / 3.0}));
    CHECK(r2[0] == doctest::Approx(1.0));
    CHECK(r2[1] == doctest::Approx(1.0));
    const auto r3 = fiber_radii_from_moment(MomentImage({0.2, 0.4}));
    CHECK(r3[0] == doctest::Approx(std::sqrt(0.2 / 0.4)));
    CHECK(r3[1] == doctest::Approx(std::sqrt(0.4 / 0.4)));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.05, 4.0);
    for (int t = 0; t < 200; ++t) {
        const TorusFiber r({u(rng), u(rng), u(rng)});
        const auto back = fiber_radii_from_moment(moment_of_fiber(r));
        for (std::size_t l = 0; l < 3; ++l) CHECK(back[l] == doctest::Approx(r[l]).epsilon(1e-12));
    }
}

TEST_CASE("geometry input validation") {
    CHECK_THROWS_AS(ProjectivePoint({0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(ProjectivePoint({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(MomentImage({0.7, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(MomentImage({-0.1}), std::invalid_argument);
    CHECK_THROWS_AS(TorusFiber({1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(fiber_radii_from_moment(MomentImage({0.0, 0.5})), std::invalid_argument);
    CHECK_THROWS_AS(fiber_radii_from_moment(MomentImage({0.5, 0.5})), std::invalid_argument);
    CHECK_THROWS_AS(MirrorPoint(TorusFiber({1.0}), {0.1, 0.2}), std::invalid_argument);
    const std::vector<Complex> zero{Complex{}, Complex(1.0, 0.0)};
    CHECK_THROWS_AS(superpotential(zero), std::invalid_argument);
    CHECK_THROWS_AS(superpotential_critical_points(0), std::invalid_argument);
}

TEST_CASE("mirror coordinates of the unit fiber") {
    const MirrorPoint m(TorusFiber({1.0}), {0.0});
    const auto z = mirror_coordinates(m);
    // exp(-2 pi * 1/2)
    CHECK(z[0].real() == doctest::Approx(0.04321391826377226).epsilon(1e-14));
    CHECK(std::abs(z[0].imag()) < 1e-17);

    const MirrorPoint w(TorusFiber({1.0}), {1.25});
    CHECK(w.gamma()[0] == doctest::Approx(0.25));
    const auto zw = mirror_coordinates(w);
    CHECK(std::arg(zw[0]) == doctest::Approx(M_PI / 2.0));
    CHECK(std::abs(zw[0]) == doctest::Approx(0.04321391826377226));
    CHECK(w.y()[0] == 0.0);
}

TEST_CASE("superpotential at the unit fiber") {
    const std::vector<Complex> z{std::exp(Complex(-M_PI, 0.0))};
    // e^{-pi} + e^{-2 pi} / e^{-pi} = 2 e^{-pi}
    CHECK(superpotential(z).real() == doctest::Approx(0.0864278365275445).epsilon(1e-14));
    // This is the real critical point for n = 1.
    CHECK(std::abs(superpotential_gradient(z)[0]) < 1e-15);
}

TEST_CASE("critical points agree with an independent Newton search") {
    for (std::size_t n = 1; n <= 4; ++n) {
        CAPTURE(n);
        const auto found = tdual::testing::newton_critical_points(n, 400, 1000 + n);
        const auto pts = superpotential_critical_points(n);
        REQUIRE(pts.size() == n + 1);
        CHECK(found.size() == n + 1);
        for (const auto& f : found) {
            bool matched = false;
            for (const auto& p : pts) {
                double d = 0.0;
                for (std::size_t j = 0; j < n; ++j) d = std::max(d, std::abs(f[j] - p.point[j]));
                matched = matched || d < 1e-10;
            }
            CHECK(matched);
        }
        for (const auto& p : pts) {
            CHECK(p.residual < 1e-10);
            CHECK(std::abs(superpotential(p.point) - p.value) < 1e-12);
        }
        // Values are (n+1) times an (n+1)-th root of unity times e^{-2pi/(n+1)}.
        const double m = static_cast<double>(n + 1);
        for (const auto& p : pts) {
            const auto scaled = p.value / (m * std::exp(-kTwoPi / m));
            CHECK(std::abs(std::pow(scaled, static_cast<int>(n + 1)) - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("gradient matches finite differences of W") {
    const std::vector<Complex> z{Complex(0.3, 0.1), Complex(-0.2, 0.4)};
    const auto g = superpotential_gradient(z);
    const double h = 1e-6;
    for (std::size_t j = 0; j < z.size(); ++j) {
        auto plus = z;
        auto minus = z;
        plus[j] += h;
        minus[j] -= h;
        const auto fd = (superpotential(plus) - superpotential(minus)) / (2.0 * h);
        CHECK(std::abs(fd - g[j]) < 1e-7);
    }
}

TEST_CASE("symplectic form is the standard pairing scaled by (2 pi)^n") {
    const MirrorPoint base(TorusFiber({1.0, 2.0}), {0.1, 0.2});
    const TangentVector u{{1.0, 0.0}, {0.0, 0.0}};
    const TangentVector v{{0.0, 0.0}, {1.0, 0.0}};
    const double scale = kTwoPi * kTwoPi;
    CHECK(symplectic_form_eval(base, u, v) == doctest::Approx(scale));
    CHECK(symplectic_form_eval(base, v, u) == doctest::Approx(-scale));
    CHECK(symplectic_form_eval(base, u, u) == 0.0);
    const TangentVector w{{0.0, 1.0}, {0.0, 0.0}};
    CHECK(symplectic_form_eval(base, w, v) == 0.0);
    const TangentVector bad{{1.0}, {0.0}};
    CHECK_THROWS_AS(symplectic_form_eval(base, bad, v), std::invalid_argument);
}
