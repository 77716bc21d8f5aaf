#include "lsl/forms.hpp"

#include "lsl/minkowski.hpp"

#include <cmath>

namespace lsl {

FirstForm first_form(const Jet2& jet, double tau_metric) {
    if (!check_spacelike(jet, tau_metric))
        throw NotSpacelike("first_form: tangent plane is not positive definite");
    return {mink_dot(jet.xu, jet.xu), mink_dot(jet.xu, jet.xv), mink_dot(jet.xv, jet.xv)};
}

NormalFrame normal_frame(const Jet2& jet, double tau_metric) {
    if (!check_spacelike(jet, tau_metric))
        throw NotSpacelike("normal_frame: tangent plane is not positive definite");
    auto [e1, e2] = orthonormalize_pair(jet.xu, jet.xv);

    // e4 minus its tangential part is timelike for any spacelike tangent
    // plane: <w,w> = -1 - <e4,e1>^2 - <e4,e2>^2.
    const Vec4 e4 = Vec4::Unit(3);
    const Vec4 w = e4 - mink_dot(e4, e1) * e1 - mink_dot(e4, e2) * e2;
    const double ww = mink_norm2(w);
    if (!(ww < 0))
        throw DegeneratePlane("normal_frame: time-axis projection is not timelike");
    NormalFrame frame;
    frame.n_t = w / std::sqrt(-ww);

    const Vec4 s = wedge3(e1, e2, frame.n_t);
    const double ss = mink_norm2(s);
    if (!(ss > 0))
        throw DegeneratePlane("normal_frame: spacelike complement is degenerate");
    frame.n_s = s / std::sqrt(ss);
    return frame;
}

SecondForm second_form(const Jet2& jet, const Vec4& nu, double tau_normal) {
    const double scale = nu.norm() * std::max(jet.xu.norm(), jet.xv.norm());
    if (std::abs(mink_dot(nu, jet.xu)) > tau_normal * scale ||
        std::abs(mink_dot(nu, jet.xv)) > tau_normal * scale)
        throw NotNormal("second_form: field is not orthogonal to the tangent plane");
    return {mink_dot(jet.xuu, nu), mink_dot(jet.xuv, nu), mink_dot(jet.xvv, nu), nu};
}

Mat2 shape_operator(const FirstForm& g, const SecondForm& b) {
    return g.matrix().inverse() * b.matrix();
}

double nu_gauss(const FirstForm& g, const SecondForm& b) { return b.det() / g.det(); }

double nu_mean(const FirstForm& g, const SecondForm& b) {
    return 0.5 * (g.g22 * b.b11 - 2.0 * g.g12 * b.b12 + g.g11 * b.b22) / g.det();
}

std::pair<double, double> principal_curvatures(const FirstForm& g, const SecondForm& b) {
    // det(b - k g) = det(g) k^2 - (g22 b11 - 2 g12 b12 + g11 b22) k + det(b)
    const double a = g.det();
    const double m = g.g22 * b.b11 - 2.0 * g.g12 * b.b12 + g.g11 * b.b22;
    const double c = b.det();
    double disc = m * m - 4.0 * a * c;
    if (disc < 0) disc = 0;  // self-adjoint: negative only through rounding
    const double q = -0.5 * (-m + std::copysign(std::sqrt(disc), -m));
    double k1, k2;
    if (q != 0) {
        k1 = q / a;
        k2 = c / q;
    } else {
        k1 = k2 = 0.0;
    }
    if (k1 > k2) std::swap(k1, k2);
    return {k1, k2};
}

Vec4 normal_projection(const Jet2& jet, const Vec4& w) {
    const FirstForm g{mink_dot(jet.xu, jet.xu), mink_dot(jet.xu, jet.xv),
                      mink_dot(jet.xv, jet.xv)};
    const Vec2 rhs(mink_dot(w, jet.xu), mink_dot(w, jet.xv));
    const Vec2 coeff = g.matrix().inverse() * rhs;
    return w - coeff[0] * jet.xu - coeff[1] * jet.xv;
}

double gauss_curvature(const Jet2& jet) {
    auto [e1, e2] = orthonormalize_pair(jet.xu, jet.xv);
    // Coefficients of e1, e2 in the chart basis, recovered from the metric.
    const FirstForm g{mink_dot(jet.xu, jet.xu), mink_dot(jet.xu, jet.xv),
                      mink_dot(jet.xv, jet.xv)};
    const Mat2 ginv = g.matrix().inverse();
    const Vec2 a = ginv * Vec2(mink_dot(e1, jet.xu), mink_dot(e1, jet.xv));
    const Vec2 b = ginv * Vec2(mink_dot(e2, jet.xu), mink_dot(e2, jet.xv));

    auto second_vec = [&](const Vec2& p, const Vec2& q) {
        const Vec4 d2 = p[0] * q[0] * jet.xuu + (p[0] * q[1] + p[1] * q[0]) * jet.xuv +
                        p[1] * q[1] * jet.xvv;
        return normal_projection(jet, d2);
    };
    const Vec4 ii11 = second_vec(a, a);
    const Vec4 ii22 = second_vec(b, b);
    const Vec4 ii12 = second_vec(a, b);
    return mink_dot(ii11, ii22) - mink_dot(ii12, ii12);
}

}  // namespace lsl
