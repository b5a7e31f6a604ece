#pragma once

#include <array>
#include <cmath>
#include <vector>

// Tiny dense linear algebra for the Newton and continuation kernels
// (systems never exceed 6 unknowns here).

namespace multicorn {

// Solve A x = b in place with partial pivoting; returns false when singular.
inline bool solve_dense(std::vector<double> A, std::vector<double> b, std::vector<double>& x) {
    const int n = static_cast<int>(b.size());
    x.assign(n, 0.0);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(A[r * n + col]) > std::fabs(A[piv * n + col])) piv = r;
        if (std::fabs(A[piv * n + col]) < 1e-300) return false;
        if (piv != col) {
            for (int k = 0; k < n; ++k) std::swap(A[col * n + k], A[piv * n + k]);
            std::swap(b[col], b[piv]);
        }
        for (int r = col + 1; r < n; ++r) {
            double f = A[r * n + col] / A[col * n + col];
            for (int k = col; k < n; ++k) A[r * n + k] -= f * A[col * n + k];
            b[r] -= f * b[col];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int k = r + 1; k < n; ++k) s -= A[r * n + k] * x[k];
        x[r] = s / A[r * n + r];
    }
    return true;
}

// Least-squares solve of an m x n system (m >= n) via normal equations;
// adequate for the well-conditioned corrector steps used here.
inline bool solve_least_squares(const std::vector<double>& A, const std::vector<double>& b,
                                int m, int n, std::vector<double>& x) {
    std::vector<double> AtA(n * n, 0.0), Atb(n, 0.0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            Atb[j] += A[i * n + j] * b[i];
            for (int k = 0; k < n; ++k) AtA[j * n + k] += A[i * n + j] * A[i * n + k];
        }
    }
    return solve_dense(AtA, Atb, x);
}

// One unit vector spanning the null space of an (n-1) x n matrix.
inline bool null_direction(const std::vector<double>& A, int n, std::vector<double>& t) {
    // append a random-ish row, solve A_aug t = e_n repeatedly with fallback rows
    for (int attempt = 0; attempt < n; ++attempt) {
        std::vector<double> aug((n) * n, 0.0);
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n; ++j) aug[i * n + j] = A[i * n + j];
        aug[(n - 1) * n + attempt] = 1.0;
        std::vector<double> rhs(n, 0.0);
        rhs[n - 1] = 1.0;
        if (!solve_dense(aug, rhs, t)) continue;
        double norm = 0.0;
        for (double v : t) norm += v * v;
        if (norm < 1e-300) continue;
        norm = std::sqrt(norm);
        for (double& v : t) v /= norm;
        return true;
    }
    return false;
}

}  // namespace multicorn
