#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "multicorn/errors.hpp"

// Dense complex polynomials (coefficient order: p[m] multiplies z^m) and the
// Aberth-Ehrlich simultaneous root iteration used by the cycle solver.

namespace multicorn {

using cplx = std::complex<double>;

struct Poly {
    std::vector<cplx> c;  // c[m] * z^m

    int degree() const { return static_cast<int>(c.size()) - 1; }

    cplx eval(cplx z) const {
        cplx r = 0.0;
        for (int m = degree(); m >= 0; --m) r = r * z + c[m];
        return r;
    }

    // value and derivative in one Horner pass
    std::pair<cplx, cplx> eval_d(cplx z) const {
        cplx p = 0.0, dp = 0.0;
        for (int m = degree(); m >= 0; --m) {
            dp = dp * z + p;
            p = p * z + c[m];
        }
        return {p, dp};
    }

    void trim() {
        while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
    }
};

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0.0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

// p(q(z)) by Horner over polynomial arguments
inline Poly poly_compose(const Poly& p, const Poly& q) {
    Poly r;
    r.c = {0.0};
    for (int m = p.degree(); m >= 0; --m) {
        r = poly_mul(r, q);
        r.c[0] += p.c[m];
    }
    return r;
}

inline Poly poly_derivative(const Poly& p) {
    Poly r;
    if (p.degree() == 0) {
        r.c = {0.0};
        return r;
    }
    r.c.resize(p.c.size() - 1);
    for (int m = 1; m <= p.degree(); ++m) r.c[m - 1] = p.c[m] * double(m);
    return r;
}

// All complex roots by Aberth-Ehrlich iteration. Multiple roots emerge as
// clusters; callers polish and deduplicate against the functional form.
inline std::vector<cplx> aberth_roots(Poly p, int max_sweeps = 300, double tol = 1e-13) {
    p.trim();
    int n = p.degree();
    if (n <= 0) return {};
    for (auto& cm : p.c) cm /= p.c.back();  // monic

    // Fujiwara root bound keeps the initial circle small enough that Horner
    // cannot overflow at high degree
    double radius = 0.0;
    for (int k = 1; k <= n; ++k)
        radius = std::max(radius, std::pow(std::abs(p.c[n - k]), 1.0 / k));
    radius = 2.0 * radius + 1e-6;

    std::vector<cplx> z(n);
    for (int i = 0; i < n; ++i) {
        double t = 2.0 * M_PI * (i + 0.5) / n + 0.4;  // fixed phase offset avoids symmetry locking
        z[i] = radius * cplx(std::cos(t), std::sin(t));
    }

    std::vector<cplx> w(n);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            auto [pv, dv] = p.eval_d(z[i]);
            if (!std::isfinite(std::abs(pv))) {  // evaluation overflow: pull inward
                z[i] *= 0.5;
                w[i] = 0.0;
                worst = std::max(worst, 1.0);
                continue;
            }
            if (std::abs(pv) < tol * (1.0 + std::abs(z[i]))) {
                w[i] = 0.0;
                continue;
            }
            cplx ratio = (dv == cplx(0.0)) ? cplx(1e-30) : pv / dv;
            cplx s = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            cplx denom = 1.0 - ratio * s;
            w[i] = (std::abs(denom) < 1e-30) ? ratio : ratio / denom;
            worst = std::max(worst, std::abs(w[i]));
        }
        for (int i = 0; i < n; ++i) z[i] -= w[i];
        if (worst < 1e-14 * radius) break;
    }
    return z;
}

}  // namespace multicorn
