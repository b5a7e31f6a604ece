#pragma once

#include <utility>
#include <vector>

#include "multicorn/jet.hpp"
#include "multicorn/maps.hpp"
#include "multicorn/poly.hpp"

// Holomorphic return maps as chains of elementary steps. An anti-polynomial
// f_c = g o conj with g(w) = w^d + c, so every even iterate of f_c is a chain
// of unicritical steps with alternating conjugated parameters, and the odd
// iterates are a chain pre- or post-composed with conj. The cubic family and
// ad-hoc maps (z^2 - 7/4, -g^2, ...) fit the same mold. Chains evaluate on
// plain complex, double-double complex, and jets.

namespace multicorn {

struct HoloStep {
    enum class Kind { unicritical, cubic, negate };
    Kind kind = Kind::unicritical;
    int d = 2;        // unicritical
    cplx alpha;       // unicritical: w^d + alpha
    double a2 = 0.0;  // cubic: -w^3 - 3 a2 w + b  (a2 = a^2)
    double b = 0.0;

    static HoloStep power(int d, cplx alpha) { return {Kind::unicritical, d, alpha, 0.0, 0.0}; }
    static HoloStep cubic(double a, double b) { return {Kind::cubic, 0, 0.0, a * a, b}; }
    static HoloStep negate() { return {Kind::negate, 0, 0.0, 0.0, 0.0}; }
};

class HoloChain {
  public:
    std::vector<HoloStep> steps;  // application order
    int repeat = 1;

    template <class C>
    C eval(C z) const {
        for (int r = 0; r < repeat; ++r)
            for (const auto& s : steps) z = apply(s, z);
        return z;
    }

    // value and holomorphic derivative along the chain
    template <class C>
    std::pair<C, C> eval_d(C z) const {
        C dz(1.0);
        for (int r = 0; r < repeat; ++r)
            for (const auto& s : steps) {
                dz = apply_deriv(s, z) * dz;
                z = apply(s, z);
            }
        return {z, dz};
    }

    template <int N>
    Jet<N> jet_at(cplx center) const {
        auto j = Jet<N>::variable(center);
        for (int r = 0; r < repeat; ++r)
            for (const auto& s : steps) j = apply_jet<N>(s, j);
        return j;
    }

    long long degree() const {
        long long d = 1;
        for (int r = 0; r < repeat; ++r)
            for (const auto& s : steps) {
                if (s.kind == HoloStep::Kind::unicritical) d *= s.d;
                if (s.kind == HoloStep::Kind::cubic) d *= 3;
            }
        return d;
    }

    Poly to_poly() const {
        Poly id;
        id.c = {0.0, 1.0};
        Poly cur = id;
        for (int r = 0; r < repeat; ++r)
            for (const auto& s : steps) cur = poly_compose(step_poly(s), cur);
        cur.trim();
        return cur;
    }

    HoloChain conjugated() const {
        HoloChain r = *this;
        for (auto& s : r.steps)
            if (s.kind == HoloStep::Kind::unicritical) s.alpha = std::conj(s.alpha);
        return r;
    }

    HoloChain iterate(int k) const {
        HoloChain r = *this;
        r.repeat *= k;
        return r;
    }

    // this applied first, then g
    friend HoloChain concat(const HoloChain& first, const HoloChain& then) {
        HoloChain r;
        for (int i = 0; i < first.repeat; ++i)
            r.steps.insert(r.steps.end(), first.steps.begin(), first.steps.end());
        for (int i = 0; i < then.repeat; ++i)
            r.steps.insert(r.steps.end(), then.steps.begin(), then.steps.end());
        return r;
    }

  private:
    template <class C>
    static C apply(const HoloStep& s, C z) {
        switch (s.kind) {
            case HoloStep::Kind::unicritical: return pow_i(z, s.d) + C(s.alpha);
            case HoloStep::Kind::cubic:
                return -(z * z * z) - C(3.0 * s.a2, 0.0) * z + C(s.b, 0.0);
            default: return -z;
        }
    }

    template <class C>
    static C apply_deriv(const HoloStep& s, C z) {
        switch (s.kind) {
            case HoloStep::Kind::unicritical: return C(double(s.d), 0.0) * pow_i(z, s.d - 1);
            case HoloStep::Kind::cubic: return C(-3.0, 0.0) * z * z - C(3.0 * s.a2, 0.0);
            default: return C(-1.0, 0.0);
        }
    }

    template <int N>
    static Jet<N> apply_jet(const HoloStep& s, const Jet<N>& j) {
        switch (s.kind) {
            case HoloStep::Kind::unicritical: return pow_int(j, s.d) + s.alpha;
            case HoloStep::Kind::cubic:
                return -(j * j * j) + cplx(-3.0 * s.a2, 0.0) * j + cplx(s.b, 0.0);
            default: return -j;
        }
    }

    static Poly step_poly(const HoloStep& s) {
        Poly p;
        switch (s.kind) {
            case HoloStep::Kind::unicritical:
                p.c.assign(s.d + 1, 0.0);
                p.c[0] = s.alpha;
                p.c[s.d] = 1.0;
                break;
            case HoloStep::Kind::cubic:
                p.c = {cplx(s.b), cplx(-3.0 * s.a2), 0.0, -1.0};
                break;
            default: p.c = {0.0, -1.0};
        }
        return p;
    }
};

// Antiholomorphic return map: either Q(conj z) (odd iterates of the anti
// family) or conj(G(z)) (conj o g^n in the cubic family).
struct AntiReturn {
    HoloChain holo;
    bool conj_first = true;

    cplx eval(cplx z) const {
        return conj_first ? holo.eval(std::conj(z)) : std::conj(holo.eval(z));
    }

    // d/d conj(z)
    cplx anti_deriv(cplx z) const {
        if (conj_first) return holo.eval_d(std::conj(z)).second;
        return std::conj(holo.eval_d(z).second);
    }

    std::pair<cplx, cplx> eval_anti_d(cplx z) const {
        if (conj_first) {
            auto [v, dv] = holo.eval_d(std::conj(z));
            return {v, dv};
        }
        auto [v, dv] = holo.eval_d(z);
        return {std::conj(v), std::conj(dv)};
    }

    HoloChain second_iterate() const {
        // conj_first: Q(conj(Q(conj z))) = Q(conj_Q(z)); conj last: conj_G(G(z))
        if (conj_first) return concat(holo.conjugated(), holo);
        return concat(holo, holo.conjugated());
    }
};

// --- family-specific constructors -----------------------------------------

// f_c^{o 2k} = P^{o k} with P(z) = (z^d + conj c)^d + c
inline HoloChain second_iterate_chain(const AntiPolyMap& m, int k = 1) {
    HoloChain r;
    r.steps = {HoloStep::power(m.degree, std::conj(m.c)), HoloStep::power(m.degree, m.c)};
    r.repeat = k;
    return r;
}

inline HoloChain cubic_chain(const RealCubicMap& m, int iterates = 1) {
    HoloChain r;
    r.steps = {HoloStep::cubic(m.a, m.b)};
    r.repeat = iterates;
    return r;
}

// f_c^{o k} for odd k: [g, conj_g, g, ...] (k steps) applied to conj(z)
inline AntiReturn anti_return(const AntiPolyMap& m, int k) {
    AntiReturn r;
    r.conj_first = true;
    for (int i = 0; i < k; ++i)
        r.holo.steps.push_back(HoloStep::power(m.degree, (i % 2 == 0) ? m.c : std::conj(m.c)));
    return r;
}

// conj o g^{o n} in the cubic family (the degree-2 anti-like return)
inline AntiReturn anti_return(const RealCubicMap& m, int n) {
    AntiReturn r;
    r.conj_first = false;
    r.holo = cubic_chain(m, n);
    return r;
}

// holomorphic first return of a period-k cycle of the full dynamics:
// anti family uses the squared return f^{o 2k}, the cubic uses g^{o k}
inline HoloChain first_holo_return(const MapDescriptor& m, int period) {
    if (auto* p = std::get_if<AntiPolyMap>(&m)) return second_iterate_chain(*p, period);
    return cubic_chain(std::get<RealCubicMap>(m), period);
}

// the antiholomorphic half return (cubic: period must be even)
inline AntiReturn half_return(const MapDescriptor& m, int period) {
    if (auto* p = std::get_if<AntiPolyMap>(&m)) return anti_return(*p, period);
    return anti_return(std::get<RealCubicMap>(m), period / 2);
}

}  // namespace multicorn
