#pragma once

#include "lsl/types.hpp"

#include <cmath>
#include <utility>

namespace lsl {

/// Metric tensor of R^4_1 with the timelike axis in slot 4.
inline Mat4 minkowski_metric() {
    Mat4 g = Mat4::Identity();
    g(3, 3) = -1.0;
    return g;
}

/// Indefinite inner product x1*y1 + x2*y2 + x3*y3 - x4*y4.
template <typename A, typename B>
auto mink_dot(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(A, 4);
    EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(B, 4);
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] - a[3] * b[3];
}

template <typename A>
auto mink_norm2(const Eigen::MatrixBase<A>& a) {
    return mink_dot(a, a);
}

enum class Causal { Spacelike, Timelike, Lightlike };

struct CausalCharacter {
    Causal kind;
    double self_product;
};

/// Classifies a vector by the sign of its self-product. The dead band is
/// tau relative to the largest componentwise product, so scaling the input
/// does not change the verdict.
template <typename A>
CausalCharacter causal_character(const Eigen::MatrixBase<A>& a, double tau = 1e-9) {
    const double s = mink_norm2(a);
    const double ref = a.cwiseAbs().maxCoeff();
    const double band = tau * ref * ref;
    if (s > band) return {Causal::Spacelike, s};
    if (s < -band) return {Causal::Timelike, s};
    return {Causal::Lightlike, s};
}

/// Triple product: the unique w with mink_dot(x, w) = det[x; a; b; c] for
/// all x (rows of a 4x4 determinant). w is Minkowski-orthogonal to a, b, c
/// and vanishes exactly when {a, b, c} is linearly dependent.
template <typename A, typename B, typename C>
Eigen::Matrix<typename A::Scalar, 4, 1> wedge3(const Eigen::MatrixBase<A>& a,
                                               const Eigen::MatrixBase<B>& b,
                                               const Eigen::MatrixBase<C>& c) {
    EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(A, 4);
    using S = typename A::Scalar;
    auto minor3 = [&](int i, int j, int k) {
        return a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) +
               a[k] * (b[i] * c[j] - b[j] * c[i]);
    };
    // Cofactor expansion of det[x; a; b; c] along the first row, with the
    // metric signs folded in so that <x, w> reproduces the determinant.
    Eigen::Matrix<S, 4, 1> w;
    w[0] = minor3(1, 2, 3);
    w[1] = -minor3(0, 2, 3);
    w[2] = minor3(0, 1, 3);
    w[3] = minor3(0, 1, 2);
    return w;
}

/// Gram-Schmidt in the Minkowski metric. The first input must be spacelike
/// and the plane span{a, b} non-degenerate. The second output is normalized
/// by sqrt(|<r,r>|) and may be spacelike or timelike.
inline std::pair<Vec4, Vec4> orthonormalize_pair(const Vec4& a, const Vec4& b,
                                                 double tau_causal = 1e-9) {
    const double aa = mink_norm2(a);
    if (causal_character(a, tau_causal).kind != Causal::Spacelike)
        throw NotSpacelike("orthonormalize_pair: first vector is not spacelike");
    const Vec4 u = a / std::sqrt(aa);
    const Vec4 r = b - mink_dot(b, u) * u;
    const auto cc = causal_character(r, tau_causal);
    if (cc.kind == Causal::Lightlike)
        throw DegeneratePlane("orthonormalize_pair: projected residue is lightlike");
    const Vec4 v = r / std::sqrt(std::abs(cc.self_product));
    return {u, v};
}

}  // namespace lsl
