#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "multicorn/errors.hpp"
#include "multicorn/maps.hpp"

// Green's function, external angles and dynamical ray tracing.
// The anti family transports angles by t -> -d t (mod 1); the cubic family
// is holomorphic of degree 3 with the Boettcher normalization phi(z)/z -> -i,
// so the invariant rays 0 and 1/2 run to +i inf and -i inf.

namespace multicorn {

inline double frac(double x) {
    double f = x - std::floor(x);
    return (f >= 1.0) ? 0.0 : f;
}

inline double angle_dist(double a, double b) {
    double d = frac(a - b);
    return std::min(d, 1.0 - d);
}

inline double transport_angle(const MapDescriptor& m, double theta) {
    if (auto* p = std::get_if<AntiPolyMap>(&m)) return frac(-p->degree * theta);
    return frac(3.0 * theta);
}

// leading Boettcher normalization: phi(z) ~ lead * z near infinity
inline cplx boettcher_lead(const MapDescriptor& m) {
    if (std::holds_alternative<AntiPolyMap>(m)) return 1.0;
    return cplx(0.0, -1.0);
}

struct GreenAngle {
    double green = 0.0;
    double angle = 0.0;  // in R/Z
};

namespace detail {

// one-factor Boettcher refinement of arg(phi(z)) at a large-|z| point
inline double arg_phi_estimate(const MapDescriptor& m, cplx z) {
    cplx w = boettcher_lead(m) * z;
    if (auto* p = std::get_if<AntiPolyMap>(&m)) {
        // phi(z) = conj(phi(f z))^{1/d}; first factor of the product form
        cplx t = p->c / pow_i(std::conj(z), p->degree);
        return std::arg(w) - std::arg(1.0 + t) / p->degree;
    }
    const auto& g = std::get<RealCubicMap>(m);
    // g(z) = -z^3 (1 + 3a^2/z^2 - b/z^3)
    cplx t = 3.0 * g.a * g.a / (z * z) - g.b / (z * z * z);
    return std::arg(w) + std::arg(1.0 + t) / 3.0;
}

}  // namespace detail

inline GreenAngle green_and_boettcher(const MapDescriptor& m, cplx z, int max_iter = 4096) {
    const int d = family_degree(m);
    const double big = 1e8;
    std::vector<cplx> orbit{z};
    cplx w = z;
    int n = 0;
    while (std::abs(w) < big) {
        if (++n > max_iter) throw InsideOrUndecided("point did not escape within budget");
        w = eval_map(m, w);
        orbit.push_back(w);
    }

    // log-escape estimate with one refinement term
    double green = std::log(std::abs(w));
    if (auto* p = std::get_if<AntiPolyMap>(&m))
        green += std::log(std::abs(1.0 + p->c / pow_i(std::conj(w), d))) / d;
    green /= std::pow(double(d), double(orbit.size() - 1));

    // backward angle transport with branch disambiguation
    double theta = frac(detail::arg_phi_estimate(m, w) / (2.0 * M_PI));
    for (int j = static_cast<int>(orbit.size()) - 2; j >= 0; --j) {
        double est = frac(detail::arg_phi_estimate(m, orbit[j]) / (2.0 * M_PI));
        double best = 0.0, best_dist = 2.0;
        for (int k = 0; k < d; ++k) {
            double cand;
            if (std::holds_alternative<AntiPolyMap>(m))
                cand = frac((double(k) - theta) / d);  // theta = -d*cand (mod 1)
            else
                cand = frac((theta + double(k)) / d);
            double dist = angle_dist(cand, est);
            if (dist < best_dist) {
                best_dist = dist;
                best = cand;
            }
        }
        theta = best;
    }
    return {green, theta};
}

// value of f^{o m} together with the composite derivative, which alternates
// between holomorphic and antiholomorphic for the anti family
struct CompositeDeriv {
    cplx value;
    cplx coeff;
    bool anti = false;  // d value = coeff * d conj(z) when true
};

inline CompositeDeriv iterate_with_deriv(const MapDescriptor& m, cplx z, int iters) {
    CompositeDeriv r{z, 1.0, false};
    for (int i = 0; i < iters; ++i) {
        if (auto* p = std::get_if<AntiPolyMap>(&m)) {
            cplx a = anti_step_deriv(*p, r.value);
            r.coeff = a * std::conj(r.coeff);
            r.anti = !r.anti;
            r.value = eval_anti(*p, r.value);
        } else {
            const auto& g = std::get<RealCubicMap>(m);
            r.coeff = cubic_deriv(g, r.value) * r.coeff;
            r.value = eval_cubic(g, r.value);
        }
    }
    return r;
}

// Newton on f^{o m}(x) = target. The residual of a deep composition
// bottoms out around d^iters * eps * |target|, so stagnation of the
// x-space step also counts as convergence.
inline std::optional<cplx> newton_pullback(const MapDescriptor& m, int iters, cplx target,
                                           cplx seed, double tol, int max_newton = 40) {
    cplx x = seed;
    for (int it = 0; it < max_newton; ++it) {
        CompositeDeriv fd = iterate_with_deriv(m, x, iters);
        cplx res = fd.value - target;
        if (std::abs(res) <= tol) return x;
        if (std::abs(fd.coeff) < 1e-300) return std::nullopt;
        cplx step = res / fd.coeff;
        if (fd.anti) step = std::conj(step);
        x -= step;
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return std::nullopt;
        if (it > 0 && std::abs(step) <= 1e-15 * (1.0 + std::abs(x))) return x;
    }
    return std::nullopt;
}

// Equipotential-stepping ray tracer with Newton correction.
inline std::vector<cplx> trace_dynamical_ray(const MapDescriptor& m, double theta,
                                             double target_green, double green_factor = 0.5) {
    const int d = family_degree(m);
    const double g_hi = 16.0;
    if (target_green <= 0.0) target_green = 1e-9;

    // angle ladder
    std::vector<double> angles{frac(theta)};
    cplx lead_inv = 1.0 / boettcher_lead(m);
    auto ref_point = [&](int level, double green) {
        return lead_inv * std::exp(cplx(green, 2.0 * M_PI * angles[level]));
    };

    std::vector<cplx> line;
    double g = g_hi;
    cplx x = ref_point(0, g_hi);
    // polish the seed so the starting point actually sits on the ray
    if (auto p = newton_pullback(m, 0, ref_point(0, g_hi), x, 1e-9 * std::abs(x))) x = *p;
    line.push_back(x);

    while (g > target_green) {
        double step = green_factor;
        bool advanced = false;
        int halvings = 0;
        while (!advanced) {
            double g_next = std::max(g * step, target_green * 0.999);
            int level = std::max(0, (int)std::ceil(std::log(g_hi / g_next) / std::log(double(d)) - 1e-12));
            while ((int)angles.size() <= level)
                angles.push_back(transport_angle(m, angles.back()));
            double g_ref = g_next * std::pow(double(d), double(level));
            cplx target = ref_point(level, g_ref);
            double tol = 1e-10 * (1.0 + std::abs(target));
            // the stiff linear phase of this Newton shrinks the log-residual
            // by about 1 per iteration, so allow ~g_ref plus quadratic tail
            auto next = newton_pullback(m, level, target, x, tol, 140);
            if (next && std::abs(*next - x) < 4.0 * std::abs(x) + 1.0) {
                x = *next;
                g = g_next;
                line.push_back(x);
                advanced = true;
            } else {
                step = 0.5 * (1.0 + step);  // halve the log-step
                if (++halvings > 40) throw RayBlocked("ray Newton correction failed");
            }
        }
    }
    return line;
}

// Accelerated landing point of a ray with (pre)periodic angle: trace to a
// moderate potential, then pull back with the local inverse of the return
// map and Richardson-extrapolate the 1/n parabolic approach.
inline cplx ray_landing_point(const MapDescriptor& m, double theta, int max_pullbacks = 16384) {
    // find the periodic tail of the angle orbit
    std::vector<double> orbit{frac(theta)};
    int pre = -1, per = 0;
    for (int i = 0; i < 128 && pre < 0; ++i) {
        double next = transport_angle(m, orbit.back());
        for (size_t j = 0; j < orbit.size(); ++j)
            if (angle_dist(orbit[j], next) < 1e-12) {
                pre = static_cast<int>(j);
                per = static_cast<int>(orbit.size()) - pre;
                break;
            }
        orbit.push_back(next);
    }
    if (pre < 0) throw RayBlocked("angle is not numerically (pre)periodic");

    // landing point of the periodic angle orbit[pre]
    auto ray = trace_dynamical_ray(m, orbit[pre], 1e-8);
    cplx w = ray.back();
    std::vector<cplx> rec;
    cplx prev = w;
    int quarter = max_pullbacks / 4;
    for (int n = 1; n <= max_pullbacks; ++n) {
        auto nx = newton_pullback(m, per, w, w, 1e-13 * (1.0 + std::abs(w)));
        if (!nx) throw RayBlocked("local pullback lost the ray tail");
        w = *nx;
        if (n == quarter || n == 2 * quarter || n == 4 * quarter) rec.push_back(w);
        if (std::abs(w - prev) < 1e-14) break;  // repelling landing converged
        prev = w;
    }
    cplx land = w;
    if (rec.size() == 3) land = (8.0 * rec[2] - 6.0 * rec[1] + rec[0]) / 3.0;

    // walk back along the pre-periodic part, picking the preimage on the ray
    for (int j = pre - 1; j >= 0; --j) {
        auto tail = trace_dynamical_ray(m, orbit[j], 1e-6);
        auto nx = newton_pullback(m, 1, land, tail.back(), 1e-12 * (1.0 + std::abs(land)));
        if (!nx) throw RayBlocked("preimage step failed");
        land = *nx;
    }
    return land;
}

}  // namespace multicorn
