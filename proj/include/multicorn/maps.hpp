#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <variant>

#include "multicorn/dd.hpp"

// The two map families under study: unicritical anti-polynomials
// f_c(z) = conj(z)^d + c and real cubics g_{a,b}(z) = -z^3 - 3a^2 z + b.
// Everything downstream consumes these evaluators.

namespace multicorn {

using cplx = std::complex<double>;

struct AntiPolyMap {
    int degree = 2;
    cplx c;
};

struct RealCubicMap {
    double a = 0.0;  // a >= 0; critical points are +-ia
    double b = 0.0;
};

using MapDescriptor = std::variant<AntiPolyMap, RealCubicMap>;

template <class C>
C pow_i(C z, int d) {
    C r(1.0);
    for (int i = 0; i < d; ++i) r = r * z;
    return r;
}

template <class C>
C eval_anti(const AntiPolyMap& m, C z) {
    return pow_i(conj(z), m.degree) + C(m.c);
}

template <class C>
C eval_cubic(const RealCubicMap& m, C z) {
    return -(z * z * z) - C(3.0 * m.a * m.a, 0.0) * z + C(m.b, 0.0);
}

inline cplx eval_map(const MapDescriptor& m, cplx z) {
    if (auto* p = std::get_if<AntiPolyMap>(&m)) return eval_anti(*p, z);
    return eval_cubic(std::get<RealCubicMap>(m), z);
}

// antiholomorphic derivative d f / d conj(z) of one anti step
inline cplx anti_step_deriv(const AntiPolyMap& m, cplx z) {
    return double(m.degree) * pow_i(std::conj(z), m.degree - 1);
}

inline cplx cubic_deriv(const RealCubicMap& m, cplx z) {
    return -3.0 * z * z - 3.0 * m.a * m.a;
}

inline int family_degree(const MapDescriptor& m) {
    if (auto* p = std::get_if<AntiPolyMap>(&m)) return p->degree;
    return 3;
}

inline cplx critical_point(const MapDescriptor& m) {
    if (std::holds_alternative<AntiPolyMap>(m)) return 0.0;
    return cplx(0.0, std::get<RealCubicMap>(m).a);
}

inline cplx critical_value(const MapDescriptor& m) {
    return eval_map(m, critical_point(m));
}

// Radius beyond which the orbit modulus is strictly increasing.
inline double escape_radius(const MapDescriptor& m) {
    if (auto* p = std::get_if<AntiPolyMap>(&m)) {
        double r = std::pow(std::abs(p->c), 1.0 / (p->degree - 1)) + 1.0;
        return std::max(2.0, r);
    }
    const auto& g = std::get<RealCubicMap>(m);
    return std::max(2.0, std::sqrt(3.0 * g.a * g.a + std::abs(g.b) + 2.0));
}

struct EscapeVerdict {
    bool escaped = false;
    int iterations_used = 0;
    double final_modulus = 0.0;
};

inline EscapeVerdict escape_test(const MapDescriptor& m, cplx z0, int max_iter) {
    const double radius = escape_radius(m);
    cplx z = z0;
    for (int n = 0; n < max_iter; ++n) {
        if (std::abs(z) > radius) return {true, n, std::abs(z)};
        z = eval_map(m, z);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            return {true, n + 1, std::numeric_limits<double>::infinity()};
    }
    return {false, max_iter, std::abs(z)};
}

// connectedness-locus membership: bounded critical orbit
inline bool member_of_locus(const MapDescriptor& m, int max_iter = 512) {
    return !escape_test(m, critical_point(m), max_iter).escaped;
}

inline MapDescriptor parameter_map_anti(int d, cplx c) { return AntiPolyMap{d, c}; }
inline MapDescriptor parameter_map_cubic(double a, double b) { return RealCubicMap{a, b}; }

}  // namespace multicorn
