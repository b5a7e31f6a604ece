#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "multicorn/maps.hpp"

using namespace multicorn;
using Catch::Approx;

TEST_CASE("anti evaluation examples") {
    // real fixed point of conj(z)^2 + 1/4
    REQUIRE(std::abs(eval_anti(AntiPolyMap{2, 0.25}, cplx(0.5)) - cplx(0.5)) < 1e-15);
    REQUIRE(std::abs(eval_anti(AntiPolyMap{3, 0.0}, cplx(0.0))) == 0.0);
    REQUIRE(std::abs(eval_anti(AntiPolyMap{2, cplx(0, 1)}, cplx(1, 1)) - cplx(0, -1)) < 1e-15);
}

TEST_CASE("cubic evaluation examples") {
    double a = 1.0 / std::sqrt(2.0);
    REQUIRE(std::abs(eval_cubic(RealCubicMap{a, 0.0}, cplx(0, a)) - cplx(0, -a)) < 1e-15);
    REQUIRE(std::abs(eval_cubic(RealCubicMap{0.0, 0.0}, cplx(1.0)) - cplx(-1.0)) < 1e-15);
    double a2 = std::pow(8.0 / 9.0, 0.25);
    REQUIRE(std::abs(eval_cubic(RealCubicMap{a2, 0.0}, cplx(0.0))) == 0.0);
}

TEST_CASE("escape test examples") {
    REQUIRE_FALSE(escape_test(AntiPolyMap{2, 0.0}, 0.0, 1000).escaped);
    auto v = escape_test(AntiPolyMap{2, 3.0}, 0.0, 1000);
    REQUIRE(v.escaped);
    REQUIRE(v.final_modulus > escape_radius(AntiPolyMap{2, 3.0}));
    REQUIRE_FALSE(escape_test(AntiPolyMap{2, -1.75}, 0.0, 10000).escaped);
}

TEST_CASE("rotation equivariance over random samples") {
    std::mt19937_64 rng(20240917);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int d : {2, 3}) {
        cplx omega = std::polar(1.0, 2.0 * M_PI / (d + 1));
        for (int i = 0; i < 5000; ++i) {
            cplx c(u(rng), u(rng)), z(u(rng), u(rng));
            cplx lhs = eval_anti(AntiPolyMap{d, omega * c}, omega * z);
            cplx rhs = omega * eval_anti(AntiPolyMap{d, c}, z);
            REQUIRE(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
        }
    }
}

TEST_CASE("conjugation equivariance") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 1000; ++i) {
        cplx c(u(rng), u(rng)), z(u(rng), u(rng));
        cplx lhs = eval_anti(AntiPolyMap{2, std::conj(c)}, std::conj(z));
        cplx rhs = std::conj(eval_anti(AntiPolyMap{2, c}, z));
        REQUIRE(lhs == rhs);  // structurally exact

        RealCubicMap g{std::abs(u(rng)), u(rng)};
        REQUIRE(eval_cubic(g, std::conj(z)) == std::conj(eval_cubic(g, z)));
    }
}

TEST_CASE("escape radius is monotone past the threshold") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1.8, 1.8);
    int checked = 0;
    for (int i = 0; i < 400 && checked < 100; ++i) {
        MapDescriptor m = AntiPolyMap{2, cplx(u(rng), u(rng))};
        cplx z(u(rng), u(rng));
        double r = escape_radius(m);
        int guard = 0;
        while (std::abs(z) <= r && guard++ < 200) z = eval_map(m, z);
        if (std::abs(z) <= r || !std::isfinite(std::abs(z))) continue;
        ++checked;
        double prev = std::abs(z);
        for (int n = 0; n < 12 && prev < 1e100; ++n) {
            z = eval_map(m, z);
            REQUIRE(std::abs(z) > prev);
            prev = std::abs(z);
        }
    }
    REQUIRE(checked >= 50);
}
