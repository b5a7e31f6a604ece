#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "multicorn/boettcher.hpp"

using namespace multicorn;
using Catch::Approx;

TEST_CASE("green and angle on the basilica-free map z -> conj(z)^2") {
    MapDescriptor m = AntiPolyMap{2, 0.0};
    auto ga = green_and_boettcher(m, cplx(4.0, 0.0));
    REQUIRE(ga.green == Approx(std::log(4.0)).epsilon(1e-10));
    REQUIRE(angle_dist(ga.angle, 0.0) < 1e-10);

    auto gb = green_and_boettcher(m, cplx(-4.0, 0.0));
    REQUIRE(angle_dist(gb.angle, 0.5) < 1e-10);
}

TEST_CASE("green transport g(f(z)) = d g(z)") {
    std::mt19937_64 rng(31415);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    int done = 0;
    for (int i = 0; i < 500 && done < 60; ++i) {
        MapDescriptor m = AntiPolyMap{2, cplx(u(rng) * 0.5, u(rng) * 0.5)};
        cplx z(u(rng), u(rng));
        if (!escape_test(m, z, 2000).escaped) continue;
        double g0, g1;
        try {
            g0 = green_and_boettcher(m, z).green;
            g1 = green_and_boettcher(m, eval_map(m, z)).green;
        } catch (const InsideOrUndecided&) {
            continue;
        }
        REQUIRE(g1 == Approx(2.0 * g0).margin(1e-9 * (1.0 + g1)));
        ++done;
    }
    REQUIRE(done >= 40);
}

TEST_CASE("angle transport along a traced ray") {
    MapDescriptor m = AntiPolyMap{2, cplx(0.25, 0.0)};
    auto line = trace_dynamical_ray(m, 0.0, 1e-3);
    REQUIRE(line.size() > 4);
    // mid-ray points must report angle 0 when fed back through the estimator
    for (size_t i = 1; i + 1 < line.size(); i += 3) {
        auto ga = green_and_boettcher(m, line[i]);
        REQUIRE(angle_dist(ga.angle, 0.0) < 1e-6);
    }
}

TEST_CASE("zero ray of conj(z)^2 lands at the beta fixed point 1") {
    MapDescriptor m = AntiPolyMap{2, 0.0};
    cplx land = ray_landing_point(m, 0.0);
    REQUIRE(std::abs(land - cplx(1.0)) < 1e-9);
}

TEST_CASE("zero ray of the parabolic map c=1/4 lands at 1/2") {
    MapDescriptor m = AntiPolyMap{2, cplx(0.25, 0.0)};
    cplx land = ray_landing_point(m, 0.0);
    REQUIRE(std::abs(land - cplx(0.5)) < 1e-6);
}

TEST_CASE("quarter ray pair of the real parameter -7/4 lands conj-symmetrically") {
    MapDescriptor m = AntiPolyMap{2, cplx(-1.75, 0.0)};
    // real-symmetry pairs the 1/4 and 3/4 rays; their landing points are
    // complex conjugates and map onto the real ray chain (angles 1/2, 0)
    cplx up = ray_landing_point(m, 0.25);
    cplx down = ray_landing_point(m, 0.75);
    REQUIRE(std::abs(up - std::conj(down)) < 1e-8);
    cplx image = eval_map(m, up);  // lands on the 1/2-ray endpoint
    REQUIRE(std::abs(image.imag()) < 1e-8);
    REQUIRE(image.real() < 0.0);

    // the traced polylines are conj-symmetric images of each other
    auto line_up = trace_dynamical_ray(m, 0.25, 1e-4);
    auto line_down = trace_dynamical_ray(m, 0.75, 1e-4);
    REQUIRE(line_up.size() == line_down.size());
    for (size_t i = 0; i < line_up.size(); ++i)
        REQUIRE(std::abs(line_up[i] - std::conj(line_down[i])) < 1e-7 * (1.0 + std::abs(line_up[i])));
}

TEST_CASE("cubic invariant rays run along the imaginary axis") {
    MapDescriptor m = RealCubicMap{0.3, 0.0};
    auto up = trace_dynamical_ray(m, 0.0, 0.05);
    for (auto& z : up) REQUIRE(std::abs(z.real()) < 1e-7 * (1.0 + std::abs(z)));
    REQUIRE(up.back().imag() > 0.0);
    auto down = trace_dynamical_ray(m, 0.5, 0.05);
    REQUIRE(down.back().imag() < 0.0);
}
