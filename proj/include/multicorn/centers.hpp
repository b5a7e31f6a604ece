#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "multicorn/linsolve.hpp"
#include "multicorn/maps.hpp"

// Hyperbolic-component centers: critical-orbit periodicity solved by damped
// Newton over the (real-analytic) parameter. The anti family is treated as a
// smooth R^2 -> R^2 system since c -> f_c^{ok}(0) is only real-analytic.

namespace multicorn {

struct CenterHit {
    cplx parameter;      // c for the anti family, a + i b packing for the cubic
    int period = 1;
    double residual = 0.0;
};

namespace detail {

template <class G>
std::optional<CenterHit> newton_param2(G&& goal, cplx seed, int period, int max_iter = 80) {
    cplx x = seed;
    cplx g = goal(x);
    for (int it = 0; it < max_iter; ++it) {
        if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) return std::nullopt;
        double h = 1e-7 * std::max(1.0, std::abs(x));
        cplx gpr = goal(x + cplx(h, 0)), gmr = goal(x - cplx(h, 0));
        cplx gpi = goal(x + cplx(0, h)), gmi = goal(x - cplx(0, h));
        std::vector<double> J = {
            (gpr.real() - gmr.real()) / (2 * h), (gpi.real() - gmi.real()) / (2 * h),
            (gpr.imag() - gmr.imag()) / (2 * h), (gpi.imag() - gmi.imag()) / (2 * h)};
        std::vector<double> rhs = {-g.real(), -g.imag()}, step;
        if (!solve_dense(J, rhs, step)) return std::nullopt;
        cplx dx(step[0], step[1]);
        double damp = 1.0;
        for (int t = 0; t < 25; ++t) {
            cplx xn = x + damp * dx;
            cplx gn = goal(xn);
            if (std::abs(gn) < std::abs(g) || std::abs(gn) < 1e-14) {
                x = xn;
                g = gn;
                break;
            }
            damp *= 0.5;
            if (t == 24) return std::nullopt;
        }
        if (std::abs(g) < 1e-14 * std::max(1.0, std::abs(x)) && std::abs(dx) * damp < 1e-10)
            break;
    }
    if (std::abs(g) > 1e-12) return std::nullopt;
    return CenterHit{x, period, std::abs(g)};
}

}  // namespace detail

// critical orbit value f_c^{ok}(0) as a function of the parameter
inline cplx anti_critical_orbit(int d, cplx c, int k) {
    cplx z = 0.0;
    for (int j = 0; j < k; ++j) z = eval_anti(AntiPolyMap{d, c}, z);
    return z;
}

inline std::optional<CenterHit> newton_center_anti(int d, int period, cplx seed) {
    return detail::newton_param2(
        [&](cplx c) { return anti_critical_orbit(d, c, period); }, seed, period);
}

// bitransitive cubic center of critical-orbit period 2n: g^{on}(ia) = -ia
inline std::optional<CenterHit> newton_center_cubic_bitransitive(int n, double a_seed,
                                                                 double b_seed) {
    auto goal = [&](cplx p) {
        RealCubicMap g{p.real(), p.imag()};
        cplx z(0.0, g.a);
        for (int j = 0; j < n; ++j) z = eval_cubic(g, z);
        return z + cplx(0.0, g.a);
    };
    auto hit = detail::newton_param2(goal, cplx(a_seed, b_seed), 2 * n);
    if (hit && hit->parameter.real() < 0.0)  // a >= 0 representative
        hit->parameter = cplx(-hit->parameter.real(), hit->parameter.imag());
    return hit;
}

// All centers of the given exact period inside |c| < radius (grid-seeded).
inline std::vector<CenterHit> enumerate_centers_anti(int d, int period, double radius = 2.0,
                                                     int grid = 64) {
    std::vector<CenterHit> hits;
    for (int iy = 0; iy < grid; ++iy) {
        for (int ix = 0; ix < grid; ++ix) {
            cplx seed(-radius + 2.0 * radius * (ix + 0.5) / grid,
                      -radius + 2.0 * radius * (iy + 0.5) / grid);
            auto hit = newton_center_anti(d, period, seed);
            if (!hit || std::abs(hit->parameter) >= radius) continue;

            // exact period: no earlier critical-orbit return
            bool lower = false;
            for (int j = 1; j < period; ++j)
                if (std::abs(anti_critical_orbit(d, hit->parameter, j)) < 1e-6) lower = true;
            if (lower) continue;

            bool dup = false;
            for (const auto& h : hits)
                if (std::abs(h.parameter - hit->parameter) < 1e-6) dup = true;
            if (!dup) hits.push_back(*hit);
        }
    }
    return hits;
}

}  // namespace multicorn
