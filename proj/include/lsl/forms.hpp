#pragma once

#include "lsl/jet.hpp"
#include "lsl/types.hpp"

#include <utility>

namespace lsl {

/// Coefficients of the induced metric in the chart basis {X_u, X_v}.
/// Positive definite on a spacelike surface.
struct FirstForm {
    double g11, g12, g22;

    double det() const { return g11 * g22 - g12 * g12; }
    Mat2 matrix() const {
        Mat2 m;
        m << g11, g12, g12, g22;
        return m;
    }
};

/// Coefficients <X_ij, nu> of the second form against a fixed normal field.
struct SecondForm {
    double b11, b12, b22;
    Vec4 normal;

    double det() const { return b11 * b22 - b12 * b12; }
    Mat2 matrix() const {
        Mat2 m;
        m << b11, b12, b12, b22;
        return m;
    }
};

/// Orthonormal Lorentzian basis of the normal plane: n_s spacelike
/// (<n_s,n_s> = +1) first, n_t timelike (<n_t,n_t> = -1) second.
struct NormalFrame {
    Vec4 n_s;
    Vec4 n_t;
};

FirstForm first_form(const Jet2& jet, double tau_metric = 1e-10);

/// Canonical frame of the normal plane. n_t is the normalized normal
/// projection of the time axis e4 (always timelike, future pointing) and
/// n_s completes it through the triple product, so the frame varies
/// continuously wherever the chart does.
NormalFrame normal_frame(const Jet2& jet, double tau_metric = 1e-10);

/// Requires nu to be Minkowski-orthogonal to X_u and X_v within
/// tau_normal * scale; throws NotNormal otherwise.
SecondForm second_form(const Jet2& jet, const Vec4& nu, double tau_normal = 1e-8);

/// S = g^{-1} b in the chart basis. Self-adjoint with respect to g.
Mat2 shape_operator(const FirstForm& g, const SecondForm& b);

double nu_gauss(const FirstForm& g, const SecondForm& b);
double nu_mean(const FirstForm& g, const SecondForm& b);

/// Roots of det(b - k g) = 0 in ascending order. Always real for positive
/// definite g.
std::pair<double, double> principal_curvatures(const FirstForm& g, const SecondForm& b);

/// Component of w orthogonal to the tangent plane of the jet.
Vec4 normal_projection(const Jet2& jet, const Vec4& w);

/// Gaussian curvature through the ambient Gauss equation,
/// K = <II(e1,e1), II(e2,e2)> - <II(e1,e2), II(e1,e2)> over an orthonormal
/// tangent frame. Frame-free; serves as the independent route against
/// nu_gauss combinations.
double gauss_curvature(const Jet2& jet);

}  // namespace lsl
