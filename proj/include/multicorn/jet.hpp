#pragma once

#include <array>
#include <complex>
#include <cstddef>

// Truncated Taylor series ("jets") over complex doubles. Running a map
// evaluation on jet(center) yields the local Taylor expansion of the map
// at the center, which is how multipliers, quadratic coefficients and the
// residu iteratif are extracted without finite differencing.

namespace multicorn {

template <int Order>
struct Jet {
    static_assert(Order >= 1);
    using C = std::complex<double>;
    std::array<C, Order + 1> a{};  // a[m] = m-th Taylor coefficient

    Jet() = default;

    static Jet variable(C center) {
        Jet j;
        j.a[0] = center;
        j.a[1] = 1.0;
        return j;
    }

    static Jet constant(C value) {
        Jet j;
        j.a[0] = value;
        return j;
    }

    C value() const { return a[0]; }
    C deriv(int m = 1) const {  // m-th derivative (not the raw coefficient)
        double f = 1.0;
        for (int i = 2; i <= m; ++i) f *= i;
        return a[m] * f;
    }
};

template <int N>
Jet<N> operator+(const Jet<N>& x, const Jet<N>& y) {
    Jet<N> r;
    for (int m = 0; m <= N; ++m) r.a[m] = x.a[m] + y.a[m];
    return r;
}

template <int N>
Jet<N> operator-(const Jet<N>& x, const Jet<N>& y) {
    Jet<N> r;
    for (int m = 0; m <= N; ++m) r.a[m] = x.a[m] - y.a[m];
    return r;
}

template <int N>
Jet<N> operator-(const Jet<N>& x) {
    Jet<N> r;
    for (int m = 0; m <= N; ++m) r.a[m] = -x.a[m];
    return r;
}

template <int N>
Jet<N> operator*(const Jet<N>& x, const Jet<N>& y) {
    Jet<N> r;
    for (int m = 0; m <= N; ++m) {
        std::complex<double> s = 0.0;
        for (int i = 0; i <= m; ++i) s += x.a[i] * y.a[m - i];
        r.a[m] = s;
    }
    return r;
}

template <int N>
Jet<N> operator+(const Jet<N>& x, std::complex<double> c) {
    Jet<N> r = x;
    r.a[0] += c;
    return r;
}

template <int N>
Jet<N> operator*(std::complex<double> c, const Jet<N>& x) {
    Jet<N> r;
    for (int m = 0; m <= N; ++m) r.a[m] = c * x.a[m];
    return r;
}

template <int N>
Jet<N> pow_int(const Jet<N>& x, int d) {
    Jet<N> r = Jet<N>::constant(1.0);
    for (int i = 0; i < d; ++i) r = r * x;
    return r;
}

}  // namespace multicorn
