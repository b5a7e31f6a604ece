#pragma once

#include <cmath>
#include <complex>

// Software double-double arithmetic (~31 significant decimal digits).
// Used as the opt-in extended precision mode for contour quadrature,
// where z - F(z) is evaluated close to a parabolic point and loses
// digits to cancellation.

namespace multicorn {

struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    dd(double h) : hi(h), lo(0.0) {}
    dd(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

namespace detail {

inline dd two_sum(double a, double b) {
    double s = a + b;
    double v = s - a;
    double e = (a - (s - v)) + (b - v);
    return {s, e};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

}  // namespace detail

inline dd operator+(dd a, dd b) {
    dd s = detail::two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
    dd p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - b * dd(q1);
    double q2 = r.hi / b.hi;
    r = r - b * dd(q2);
    double q3 = r.hi / b.hi;
    dd q = detail::quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline dd& operator+=(dd& a, dd b) { return a = a + b; }
inline dd& operator-=(dd& a, dd b) { return a = a - b; }
inline dd& operator*=(dd& a, dd b) { return a = a * b; }

inline bool operator<(dd a, dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline double to_double(dd a) { return a.hi + a.lo; }
inline dd fabs(dd a) { return a.hi < 0 || (a.hi == 0 && a.lo < 0) ? -a : a; }

// Minimal complex type over dd; only the operations the quadrature needs.
struct ddc {
    dd re, im;

    ddc() = default;
    ddc(dd r, dd i) : re(r), im(i) {}
    ddc(double r, double i = 0.0) : re(r), im(i) {}
    ddc(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_std() const { return {to_double(re), to_double(im)}; }
};

inline ddc operator+(ddc a, ddc b) { return {a.re + b.re, a.im + b.im}; }
inline ddc operator-(ddc a, ddc b) { return {a.re - b.re, a.im - b.im}; }
inline ddc operator-(ddc a) { return {-a.re, -a.im}; }
inline ddc operator*(ddc a, ddc b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline ddc operator/(ddc a, ddc b) {
    dd den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
inline ddc& operator+=(ddc& a, ddc b) { return a = a + b; }
inline ddc& operator*=(ddc& a, ddc b) { return a = a * b; }
inline ddc conj(ddc a) { return {a.re, -a.im}; }
inline dd norm_sq(ddc a) { return a.re * a.re + a.im * a.im; }

}  // namespace multicorn
