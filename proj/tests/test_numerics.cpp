#include <catch2/catch_amalgamated.hpp>

#include "multicorn/chain.hpp"
#include "multicorn/dd.hpp"
#include "multicorn/jet.hpp"
#include "multicorn/poly.hpp"

using namespace multicorn;
using Catch::Approx;

TEST_CASE("double-double keeps digits past double precision") {
    dd a(1.0);
    dd tiny(1e-25);
    dd s = a + tiny - a;
    REQUIRE(to_double(s) == Approx(1e-25).epsilon(1e-10));

    // (1 + eps)*(1 - eps) = 1 - eps^2 exactly representable in dd
    dd eps(1e-12);
    dd p = (dd(1.0) + eps) * (dd(1.0) - eps);
    REQUIRE(to_double(p - dd(1.0)) == Approx(-1e-24).epsilon(1e-8));
}

TEST_CASE("ddc complex division round trips") {
    ddc a(1.3, -2.7), b(0.4, 1.9);
    ddc q = a / b;
    ddc back = q * b;
    REQUIRE(to_double(back.re) == Approx(1.3).margin(1e-28));
    REQUIRE(to_double(back.im) == Approx(-2.7).margin(1e-28));
}

TEST_CASE("jets differentiate a chain exactly") {
    // F(z) = (z^2 + c)^2 + c at z0; compare against hand expansion
    cplx c(0.25, 0.0);
    HoloChain f;
    f.steps = {HoloStep::power(2, c), HoloStep::power(2, c)};

    cplx z0(0.5, 0.0);
    auto j = f.jet_at<4>(z0);
    // P(z)=z+2(z-1/2)^2+2(z-1/2)^3+... at the parabolic point of c=1/4
    REQUIRE(std::abs(j.value() - z0) < 1e-15);
    REQUIRE(std::abs(j.deriv(1) - cplx(1.0)) < 1e-15);
    REQUIRE(std::abs(j.deriv(2) - cplx(4.0)) < 1e-14);   // P'' = 4
    REQUIRE(std::abs(j.deriv(3) - cplx(12.0)) < 1e-13);  // P''' = 12

    auto [v, dv] = f.eval_d(cplx(0.3, 0.1));
    auto jd = f.jet_at<2>(cplx(0.3, 0.1));
    REQUIRE(std::abs(v - jd.value()) < 1e-15);
    REQUIRE(std::abs(dv - jd.deriv(1)) < 1e-14);
}

TEST_CASE("chain evaluation agrees between double and double-double") {
    HoloChain f;
    f.steps = {HoloStep::power(2, cplx(-1.75, 0.0)), HoloStep::power(2, cplx(-1.75, 0.0))};
    f.repeat = 3;
    cplx z(0.31, -0.42);
    cplx vd = f.eval(z);
    ddc vq = f.eval(ddc(z));
    REQUIRE(std::abs(vd - vq.to_std()) < 1e-12 * (1.0 + std::abs(vd)));
}

TEST_CASE("aberth finds all roots of z^5 - 1") {
    Poly p;
    p.c = {cplx(-1.0), 0.0, 0.0, 0.0, 0.0, cplx(1.0)};
    auto roots = aberth_roots(p);
    REQUIRE(roots.size() == 5);
    for (auto r : roots) {
        REQUIRE(std::abs(std::abs(r) - 1.0) < 1e-10);
        REQUIRE(std::abs(p.eval(r)) < 1e-10);
    }
}

TEST_CASE("aberth handles clustered (double) roots well enough to polish") {
    // (z-1)^2 (z+2): double root at 1
    Poly p;
    p.c = {cplx(2.0), cplx(-3.0), cplx(0.0), cplx(1.0)};
    auto roots = aberth_roots(p);
    int near_one = 0;
    for (auto r : roots)
        if (std::abs(r - cplx(1.0)) < 1e-5) ++near_one;
    REQUIRE(near_one == 2);
}

TEST_CASE("poly compose matches chain expansion") {
    HoloChain f;
    f.steps = {HoloStep::power(2, cplx(0.1, 0.2)), HoloStep::power(2, cplx(0.1, -0.2))};
    Poly p = f.to_poly();
    REQUIRE(p.degree() == 4);
    for (cplx z : {cplx(0.3, 0.4), cplx(-1.1, 0.2), cplx(0.0, 0.9)})
        REQUIRE(std::abs(p.eval(z) - f.eval(z)) < 1e-12);
}

TEST_CASE("anti return matches direct anti iteration") {
    AntiPolyMap m{2, cplx(-0.3, 0.55)};
    auto a3 = anti_return(m, 3);
    cplx z(0.2, -0.7);
    cplx direct = z;
    for (int i = 0; i < 3; ++i) direct = eval_anti(m, direct);
    REQUIRE(std::abs(a3.eval(z) - direct) < 1e-13);

    // second iterate of the anti return is the holomorphic chain
    auto f6 = a3.second_iterate();
    cplx direct6 = direct;
    for (int i = 0; i < 3; ++i) direct6 = eval_anti(m, direct6);
    REQUIRE(std::abs(f6.eval(z) - direct6) < 1e-12);
    REQUIRE(std::abs(f6.eval(z) - second_iterate_chain(m, 3).eval(z)) < 1e-12);
}

TEST_CASE("cubic anti return squares to the even iterate") {
    RealCubicMap g{0.7, 0.12};
    auto eta = anti_return(g, 2);  // conj o g^2
    cplx z(0.15, 0.6);
    cplx w = eta.eval(eta.eval(z));
    cplx direct = z;
    for (int i = 0; i < 4; ++i) direct = eval_cubic(g, direct);
    REQUIRE(std::abs(w - direct) < 1e-12);
}

TEST_CASE("anti_deriv is the conjugate-variable derivative") {
    AntiPolyMap m{2, cplx(0.1, 0.4)};
    auto a1 = anti_return(m, 1);
    cplx z(0.3, -0.2);
    // finite difference in conj(z): A(z + h) ~ A(z) + (dA/dzbar) conj(h)
    cplx h(1e-7, 3e-8);
    cplx fd = a1.eval(z + h) - a1.eval(z);
    cplx lin = a1.anti_deriv(z) * std::conj(h);
    REQUIRE(std::abs(fd - lin) < 1e-12);
}
