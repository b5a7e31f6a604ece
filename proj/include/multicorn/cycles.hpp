#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "multicorn/chain.hpp"
#include "multicorn/errors.hpp"
#include "multicorn/maps.hpp"
#include "multicorn/poly.hpp"

// Periodic cycles of the full dynamics, their multipliers and classification.
// Roots come from Aberth-Ehrlich on the fixed-point polynomial of the
// holomorphic iterate, then get polished against the functional form.

namespace multicorn {

enum class CycleClass { superattracting, attracting, indifferent, repelling };

struct Cycle {
    int period_under_f = 1;
    std::vector<cplx> points;               // f-orbit of the representative
    std::optional<cplx> anti_multiplier;    // d f^{ok} / d conj(z), odd anti periods
    cplx sq_multiplier;                     // multiplier of the holomorphic return
    CycleClass cls = CycleClass::repelling;

    cplx representative() const { return points.front(); }
};

namespace detail {

// holomorphic chain whose fixed points contain all f-period-k points
inline HoloChain period_chain(const MapDescriptor& m, int k) {
    if (auto* p = std::get_if<AntiPolyMap>(&m)) {
        if (k % 2 == 0) return second_iterate_chain(*p, k / 2);  // f^{ok}
        return second_iterate_chain(*p, k);                      // f^{o2k}
    }
    return cubic_chain(std::get<RealCubicMap>(m), k);
}

// Newton polish of a fixed point of H; falls back to the critical equation
// H' = 1 near parabolic (double) fixed points.
inline std::optional<cplx> polish_fixed_point(const HoloChain& H, cplx z, double tol = 1e-13) {
    for (int it = 0; it < 60; ++it) {
        auto [v, dv] = H.eval_d(z);
        cplx res = v - z;
        cplx denom = dv - 1.0;
        if (std::abs(res) < tol * (1.0 + std::abs(z)) &&
            (std::abs(denom) > 0.05 || std::abs(res) < 1e-14 * (1.0 + std::abs(z))))
            break;
        if (std::abs(denom) < 0.05) {
            // near-parabolic: aim for the double root via H' - 1 = 0
            auto j = H.jet_at<2>(z);
            cplx d2 = j.deriv(2);
            if (std::abs(d2) < 1e-12) break;
            cplx step = (j.deriv(1) - 1.0) / d2;
            z -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
            continue;
        }
        cplx step = res / denom;
        z -= step;
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::nullopt;
        if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
    }
    auto [v, dv] = H.eval_d(z);
    (void)dv;
    if (std::abs(v - z) > 1e-8 * (1.0 + std::abs(z))) return std::nullopt;
    return z;
}

inline int exact_period(const MapDescriptor& m, cplx z, int bound, double tol = 1e-7) {
    cplx w = z;
    for (int j = 1; j <= bound; ++j) {
        w = eval_map(m, w);
        if (std::abs(w - z) < tol * (1.0 + std::abs(z))) return j;
    }
    return 0;
}

}  // namespace detail

inline CycleClass classify_from_modulus(double s) {
    if (s < 1e-10) return CycleClass::superattracting;
    if (std::fabs(s - 1.0) <= 1e-8) return CycleClass::indifferent;
    return s < 1.0 ? CycleClass::attracting : CycleClass::repelling;
}

inline std::vector<Cycle> find_cycles(const MapDescriptor& m, int period, int period_bound = 8) {
    if (period > period_bound) throw SolverDiverged("period exceeds the configured solve bound");
    HoloChain H = detail::period_chain(m, period);
    Poly p = H.to_poly();
    p.c[1] -= 1.0;  // fixed-point polynomial H(z) - z
    auto raw = aberth_roots(p);

    // polish on the functional iterate, deduplicate
    std::vector<cplx> pts;
    for (cplx r : raw) {
        if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) continue;
        auto z = detail::polish_fixed_point(H, r);
        if (!z) continue;
        bool dup = false;
        for (cplx q : pts)
            if (std::abs(q - *z) < 1e-6 * (1.0 + std::abs(q))) dup = true;
        if (!dup) pts.push_back(*z);
    }

    // keep exact f-period == period, group into orbits
    const int orbit_bound = 2 * period + 1;
    std::vector<Cycle> cycles;
    std::vector<cplx> used;
    for (cplx z : pts) {
        if (detail::exact_period(m, z, orbit_bound) != period) continue;
        bool seen = false;
        for (cplx u : used)
            if (std::abs(u - z) < 1e-6 * (1.0 + std::abs(u))) seen = true;
        if (seen) continue;

        Cycle cyc;
        cyc.period_under_f = period;
        cplx w = z;
        for (int j = 0; j < period; ++j) {
            cyc.points.push_back(w);
            used.push_back(w);
            w = eval_map(m, w);
        }

        if (auto* am = std::get_if<AntiPolyMap>(&m); am && period % 2 == 1) {
            auto A = anti_return(*am, period);
            cyc.anti_multiplier = A.anti_deriv(z);
        }
        cyc.sq_multiplier = first_holo_return(m, period).eval_d(z).second;
        if (std::holds_alternative<AntiPolyMap>(m) && period % 2 == 0)
            cyc.sq_multiplier = detail::period_chain(m, period).eval_d(z).second;

        double s = cyc.anti_multiplier ? std::abs(*cyc.anti_multiplier)
                                       : std::sqrt(std::abs(cyc.sq_multiplier));
        cyc.cls = classify_from_modulus(s);
        cycles.push_back(std::move(cyc));
    }
    std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
        auto ka = a.representative(), kb = b.representative();
        return std::make_pair(ka.real(), ka.imag()) < std::make_pair(kb.real(), kb.imag());
    });
    return cycles;
}

}  // namespace multicorn
