#pragma once

#include "lsl/classify.hpp"
#include "lsl/forms.hpp"
#include "lsl/jet.hpp"
#include "lsl/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace lsl::test {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Vec4 random_vec4(Rng& rng, double lo = -1.0, double hi = 1.0) {
    return Vec4(uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi),
                uniform(rng, lo, hi));
}

/// 4x4 determinant with the given rows — the independent oracle for the
/// wedge3 defining identity.
inline double det4_rows(const Vec4& r0, const Vec4& r1, const Vec4& r2, const Vec4& r3) {
    Mat4 m;
    m.row(0) = r0.transpose();
    m.row(1) = r1.transpose();
    m.row(2) = r2.transpose();
    m.row(3) = r3.transpose();
    return m.determinant();
}

inline Mat4 plane_rotation(int i, int j, double angle) {
    Mat4 m = Mat4::Identity();
    m(i, i) = std::cos(angle);
    m(j, j) = std::cos(angle);
    m(i, j) = -std::sin(angle);
    m(j, i) = std::sin(angle);
    return m;
}

inline Mat4 plane_boost(int i, double eta) {
    Mat4 m = Mat4::Identity();
    m(i, i) = std::cosh(eta);
    m(3, 3) = std::cosh(eta);
    m(i, 3) = std::sinh(eta);
    m(3, i) = std::sinh(eta);
    return m;
}

/// Random isometry of R^4_1: rotations in the spacelike planes composed
/// with boosts toward the time axis.
inline Mat4 random_lorentz(Rng& rng, double max_boost = 1.0) {
    Mat4 m = plane_rotation(0, 1, uniform(rng, 0, 2 * M_PI)) *
             plane_rotation(1, 2, uniform(rng, 0, 2 * M_PI)) *
             plane_rotation(0, 2, uniform(rng, 0, 2 * M_PI)) *
             plane_boost(0, uniform(rng, -max_boost, max_boost)) *
             plane_boost(2, uniform(rng, -max_boost, max_boost));
    return m;
}

/// Synthetic jet whose tangent plane is a random spacelike plane; second
/// derivatives are unconstrained random vectors.
inline Jet2 random_spacelike_jet(Rng& rng) {
    const Mat4 map = random_lorentz(rng);
    Jet2 j;
    j.u = uniform(rng, -1, 1);
    j.v = uniform(rng, -1, 1);
    j.x = map * random_vec4(rng);
    j.xu = map * Vec4(uniform(rng, 0.5, 2.0), 0, 0, 0);
    j.xv = map * Vec4(uniform(rng, -1, 1), uniform(rng, 0.5, 2.0), 0, 0);
    j.xuu = map * random_vec4(rng);
    j.xuv = map * random_vec4(rng);
    j.xvv = map * random_vec4(rng);
    return j;
}

inline FirstForm random_first_form(Rng& rng) {
    Mat2 l = Mat2::Identity();
    l(0, 0) += uniform(rng, -0.3, 0.8);
    l(1, 1) += uniform(rng, -0.3, 0.8);
    l(1, 0) = uniform(rng, -0.5, 0.5);
    const Mat2 g = l * l.transpose();
    return {g(0, 0), g(0, 1), g(1, 1)};
}

inline SecondForm random_second_form(Rng& rng, double scale = 1.0) {
    return {scale * uniform(rng, -1, 1), scale * uniform(rng, -1, 1), scale * uniform(rng, -1, 1),
            Vec4::Zero()};
}

/// Brute-force census of Q(l, m) = A l^2 + B l m + C m^2: samples the unit
/// circle, refines the two extrema with a parabolic fit (Q is an exact
/// sinusoid in 2 theta, so the fit is accurate to ~1e-14) and applies the
/// same thresholds through the identity disc = -4 * min * max.
inline CensusKind census_scan(double A, double B, double C, double tau_root,
                              double tau_disc = 1e-9, int n = 10000) {
    std::vector<double> q(n);
    double qmax_abs = 0;
    int imin = 0, imax = 0;
    for (int i = 0; i < n; ++i) {
        const double th = M_PI * i / n;
        const double c = std::cos(th), s = std::sin(th);
        q[i] = A * c * c + B * c * s + C * s * s;
        qmax_abs = std::max(qmax_abs, std::abs(q[i]));
        if (q[i] < q[imin]) imin = i;
        if (q[i] > q[imax]) imax = i;
    }
    const double s_coeff = std::max({std::abs(A), std::abs(B), std::abs(C)});
    if (s_coeff <= tau_root) return CensusKind::All;

    auto refine = [&](int i) {
        const double qm = q[(i + n - 1) % n], q0 = q[i], qp = q[(i + 1) % n];
        const double den = qm - 2 * q0 + qp;
        if (std::abs(den) < 1e-30 * qmax_abs) return q0;
        return q0 - (qm - qp) * (qm - qp) / (8 * den);
    };
    const double mn = refine(imin);
    const double mx = refine(imax);
    const double disc_est = -4.0 * mn * mx;
    const double band = tau_disc * s_coeff * s_coeff;
    if (disc_est > band) return CensusKind::Two;
    if (disc_est >= -band) return CensusKind::One;
    return CensusKind::Zero;
}

}  // namespace lsl::test
