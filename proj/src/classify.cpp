#include "lsl/classify.hpp"

#include "lsl/minkowski.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace lsl {

NormalDirection NormalDirection::canonical(double l, double m) {
    const double n = std::hypot(l, m);
    NormalDirection d;
    d.lambda = l;
    d.mu = m;
    if (std::abs(n - 1.0) > 1e-15) {
        d.lambda /= n;
        d.mu /= n;
    }
    if (d.lambda < 0 || (d.lambda == 0 && d.mu < 0)) {
        d.lambda = -d.lambda;
        d.mu = -d.mu;
    }
    if (d.lambda == 0) d.lambda = 0;  // normalize -0
    return d;
}

const char* to_string(CensusKind k) {
    switch (k) {
        case CensusKind::Zero: return "zero";
        case CensusKind::One: return "one";
        case CensusKind::Two: return "two";
        case CensusKind::All: return "all";
    }
    return "?";
}

std::array<double, 3> binormal_quadratic(const SecondForm& b1, const SecondForm& b2,
                                         const FirstForm&) {
    const double A = b1.det();
    const double C = b2.det();
    const double B = b1.b11 * b2.b22 + b2.b11 * b1.b22 - 2.0 * b1.b12 * b2.b12;
    return {A, B, C};
}

BinormalCensus solve_binormals(double A, double B, double C, double tau_root, double tau_disc,
                               double near_disc) {
    BinormalCensus out;
    out.a = A;
    out.b = B;
    out.c = C;
    const double s = std::max({std::abs(A), std::abs(B), std::abs(C)});
    out.discriminant = B * B - 4.0 * A * C;
    if (s <= tau_root) {
        out.kind = CensusKind::All;
        return out;
    }
    const double band = tau_disc * s * s;
    out.near_double = std::abs(out.discriminant) < near_disc * s * s;
    if (out.discriminant > band) {
        out.kind = CensusKind::Two;
        // Roots of A t^2 + B t + C as projective pairs (t : 1), via the
        // stable companion form; covers A ~ 0 where (1 : 0) is a root.
        const double r = std::sqrt(out.discriminant);
        const double q = -0.5 * (B + std::copysign(r, B));
        out.roots.push_back(NormalDirection::canonical(q, A));
        out.roots.push_back(NormalDirection::canonical(C, q));
    } else if (out.discriminant >= -band) {
        out.kind = CensusKind::One;
        if (std::abs(A) >= std::abs(C))
            out.roots.push_back(NormalDirection::canonical(-B, 2.0 * A));
        else
            out.roots.push_back(NormalDirection::canonical(2.0 * C, -B));
    } else {
        out.kind = CensusKind::Zero;
    }
    return out;
}

AsymptoticDirection asymptotic_direction(const FirstForm& g, const SecondForm& b, double tau) {
    const double scale = std::max({std::abs(b.b11), std::abs(b.b12), std::abs(b.b22)});
    if (std::abs(nu_gauss(g, b)) > tau)
        throw NotBinormal("asymptotic_direction: field is not bi-normal at this point");
    AsymptoticDirection out;
    if (scale == 0) {
        out.whole_plane = true;
        return out;
    }
    // Kernel of b: rotate the dominant row by 90 degrees.
    const double r1 = std::hypot(b.b11, b.b12);
    const double r2 = std::hypot(b.b12, b.b22);
    Vec2 dir;
    if (r1 >= r2)
        dir = Vec2(-b.b12, b.b11);
    else
        dir = Vec2(-b.b22, b.b12);
    if (dir.norm() <= 1e-14 * scale) {
        out.whole_plane = true;
        return out;
    }
    const double norm2 = dir[0] * dir[0] * g.g11 + 2 * dir[0] * dir[1] * g.g12 +
                         dir[1] * dir[1] * g.g22;
    dir /= std::sqrt(norm2);
    if (dir[0] < 0 || (dir[0] == 0 && dir[1] < 0)) dir = -dir;
    out.coeffs = dir;
    return out;
}

namespace {

struct Traceless {
    Eigen::Vector3d c;  // (b11, b12, b22) of b - H g
    double h;           // trace_g(b) / 2
    double ref;         // residual scale for "umbilic" decisions
};

Traceless traceless_part(const FirstForm& g, const SecondForm& b) {
    Traceless t;
    t.h = nu_mean(g, b);
    t.c = Eigen::Vector3d(b.b11 - t.h * g.g11, b.b12 - t.h * g.g12, b.b22 - t.h * g.g22);
    const double bmax = std::max({std::abs(b.b11), std::abs(b.b12), std::abs(b.b22)});
    const double gmax = std::max({std::abs(g.g11), std::abs(g.g12), std::abs(g.g22)});
    t.ref = bmax + std::abs(t.h) * gmax;
    return t;
}

}  // namespace

bool umbilic_point_test(const FirstForm& g, const SecondForm& b_s, const SecondForm& b_t,
                        double tau) {
    const Traceless ts = traceless_part(g, b_s);
    const Traceless tt = traceless_part(g, b_t);
    return ts.c.lpNorm<Eigen::Infinity>() <= tau * ts.ref &&
           tt.c.lpNorm<Eigen::Infinity>() <= tau * tt.ref;
}

std::optional<PseudoUmbilicWitness> pseudo_umbilic_solve(const FirstForm& g,
                                                         const SecondForm& b_s,
                                                         const SecondForm& b_t, double tau) {
    const Traceless ts = traceless_part(g, b_s);
    const Traceless tt = traceless_part(g, b_t);
    const bool s_umb = ts.c.lpNorm<Eigen::Infinity>() <= tau * ts.ref;
    const bool t_umb = tt.c.lpNorm<Eigen::Infinity>() <= tau * tt.ref;

    PseudoUmbilicWitness w;
    if (s_umb) {
        w.direction = NormalDirection::canonical(1, 0);
        w.k = ts.h;
        return w;
    }
    if (t_umb) {
        w.direction = NormalDirection::canonical(0, 1);
        w.k = tt.h;
        return w;
    }
    // Both traceless parts are nonzero; a witness exists iff they are
    // linearly dependent as 3-vectors.
    const Eigen::Vector3d cross = ts.c.cross(tt.c);
    if (cross.norm() > tau * ts.c.norm() * tt.c.norm()) return std::nullopt;
    const double rho = tt.c.dot(ts.c) / ts.c.squaredNorm();  // c_t = rho c_s
    w.direction = NormalDirection::canonical(-rho, 1.0);
    w.k = w.direction.lambda * ts.h + w.direction.mu * tt.h;
    return w;
}

namespace {

// A far-boosted frame inflates both second forms while det(lambda b_s +
// mu b_t) keeps its (frame-invariant) discriminant, so the relative band
// tests lose conditioning. Balancing equalizes the null combinations
// b_s + b_t and b_s - b_t; decisions run on the balanced pair and
// directions convert back through the boost.
struct BalancedPair {
    SecondForm bs, bt;
    double eta;
};

SecondForm boost_mix(const SecondForm& a, const SecondForm& b, double ca, double cb) {
    return {ca * a.b11 + cb * b.b11, ca * a.b12 + cb * b.b12, ca * a.b22 + cb * b.b22,
            Vec4::Zero()};
}

BalancedPair balance_forms(const SecondForm& bs, const SecondForm& bt) {
    const Eigen::Vector3d p(bs.b11 + bt.b11, bs.b12 + bt.b12, bs.b22 + bt.b22);
    const Eigen::Vector3d q(bs.b11 - bt.b11, bs.b12 - bt.b12, bs.b22 - bt.b22);
    const double np = p.norm(), nq = q.norm();
    double eta = 0.0;
    // A rank-one pencil (p parallel to q) makes the boost angle pure noise;
    // beyond |eta| ~ 6 the mixing itself loses more digits than it saves.
    if (np > 0 && nq > 0 && p.cross(q).norm() > 1e-9 * np * nq)
        eta = std::clamp(0.5 * std::log(nq / np), -6.0, 6.0);
    const double ch = std::cosh(eta), sh = std::sinh(eta);
    return {boost_mix(bs, bt, ch, sh), boost_mix(bs, bt, sh, ch), eta};
}

NormalDirection unboost_direction(const NormalDirection& d, double eta) {
    const double ch = std::cosh(eta), sh = std::sinh(eta);
    return NormalDirection::canonical(d.lambda * ch + d.mu * sh, d.lambda * sh + d.mu * ch);
}

}  // namespace

CurvatureEllipse curvature_ellipse(const Jet2& jet, const NormalFrame& frame) {
    const FirstForm g = first_form(jet);
    const SecondForm bs = second_form(jet, frame.n_s);
    const SecondForm bt = second_form(jet, frame.n_t);
    auto [e1, e2] = orthonormalize_pair(jet.xu, jet.xv);
    const Mat2 ginv = g.matrix().inverse();
    const Vec2 p = ginv * Vec2(mink_dot(e1, jet.xu), mink_dot(e1, jet.xv));
    const Vec2 q = ginv * Vec2(mink_dot(e2, jet.xu), mink_dot(e2, jet.xv));

    auto coords = [&](const Vec2& x, const Vec2& y) {
        auto eval = [&](const SecondForm& b) {
            return x[0] * y[0] * b.b11 + (x[0] * y[1] + x[1] * y[0]) * b.b12 +
                   x[1] * y[1] * b.b22;
        };
        // A normal vector w decomposes as <w,n_s> n_s - <w,n_t> n_t.
        return Vec2(eval(bs), -eval(bt));
    };
    const Vec2 ii11 = coords(p, p);
    const Vec2 ii22 = coords(q, q);
    const Vec2 ii12 = coords(p, q);

    CurvatureEllipse e;
    e.center = 0.5 * (ii11 + ii22);
    e.axis_p = 0.5 * (ii11 - ii22);
    e.axis_q = ii12;
    return e;
}

double normal_curvature(const Vec2& axis_p, const Vec2& axis_q) {
    return 2.0 * (axis_p[0] * axis_q[1] - axis_p[1] * axis_q[0]);
}

bool semi_umbilic_test(const Vec2& axis_p, const Vec2& axis_q, double tau) {
    const double scale = axis_p.squaredNorm() + axis_q.squaredNorm();
    return std::abs(normal_curvature(axis_p, axis_q)) <= tau * scale;
}

bool maximal_test(const FirstForm& g, const SecondForm& b_s, const SecondForm& b_t, double tau) {
    const double gmin = std::min(g.g11, g.g22);
    auto small = [&](const SecondForm& b) {
        const double bmax = std::max({std::abs(b.b11), std::abs(b.b12), std::abs(b.b22)});
        return std::abs(nu_mean(g, b)) <= tau * (bmax / gmin + 1e-300);
    };
    return small(b_s) && small(b_t);
}

PointClassification classify_point(const Jet2& jet, const Tolerances& tol) {
    PointClassification out;
    out.u = jet.u;
    out.v = jet.v;
    out.g = first_form(jet, tol.metric);
    out.frame = normal_frame(jet, tol.metric);
    out.b_s = second_form(jet, out.frame.n_s, tol.normal);
    out.b_t = second_form(jet, out.frame.n_t, tol.normal);

    // Flat points are decided against the jet scale, not the (vanishing)
    // form scale.
    const double form_scale =
        std::max({std::abs(out.b_s.b11), std::abs(out.b_s.b12), std::abs(out.b_s.b22),
                  std::abs(out.b_t.b11), std::abs(out.b_t.b12), std::abs(out.b_t.b22)});
    const double jet_scale = std::max({jet.xuu.norm(), jet.xuv.norm(), jet.xvv.norm()}) *
                             std::max(out.frame.n_s.norm(), out.frame.n_t.norm());
    out.is_flat_point = form_scale <= tol.flat * jet_scale;

    const auto [A, B, C] = binormal_quadratic(out.b_s, out.b_t, out.g);
    const BalancedPair bal = balance_forms(out.b_s, out.b_t);
    if (out.is_flat_point) {
        out.census.kind = CensusKind::All;
        out.census.a = A;
        out.census.b = B;
        out.census.c = C;
        out.census.discriminant = B * B - 4 * A * C;
    } else {
        const auto [Ab, Bb, Cb] = binormal_quadratic(bal.bs, bal.bt, out.g);
        const double bal_scale =
            std::max({std::abs(bal.bs.b11), std::abs(bal.bs.b12), std::abs(bal.bs.b22),
                      std::abs(bal.bt.b11), std::abs(bal.bt.b12), std::abs(bal.bt.b22)});
        const BinormalCensus decided = solve_binormals(Ab, Bb, Cb, tol.root * bal_scale * bal_scale,
                                                       tol.disc, tol.near_disc);
        out.census.kind = decided.kind;
        out.census.near_double = decided.near_double;
        out.census.a = A;
        out.census.b = B;
        out.census.c = C;
        out.census.discriminant = B * B - 4 * A * C;
        for (const NormalDirection& root : decided.roots)
            out.census.roots.push_back(unboost_direction(root, bal.eta));
    }

    for (const NormalDirection& root : out.census.roots) {
        SecondForm br{root.lambda * out.b_s.b11 + root.mu * out.b_t.b11,
                      root.lambda * out.b_s.b12 + root.mu * out.b_t.b12,
                      root.lambda * out.b_s.b22 + root.mu * out.b_t.b22, root.ambient(out.frame)};
        out.root_curvatures.push_back(nu_gauss(out.g, br));
        // The root already certifies near-zero curvature; pass a matching
        // admission threshold.
        const double admit =
            10.0 * (1 + std::abs(A) + std::abs(B) + std::abs(C)) / out.g.det() * 1e-7 +
            std::abs(out.root_curvatures.back());
        out.asymptotics.push_back(asymptotic_direction(out.g, br, admit));
    }

    out.is_umbilic_point = umbilic_point_test(out.g, bal.bs, bal.bt, tol.umbilic);
    if (const auto witness = pseudo_umbilic_solve(out.g, bal.bs, bal.bt, tol.umbilic)) {
        PseudoUmbilicWitness w;
        w.direction = unboost_direction(witness->direction, bal.eta);
        w.k = w.direction.lambda * nu_mean(out.g, out.b_s) +
              w.direction.mu * nu_mean(out.g, out.b_t);
        out.pseudo_umbilic = w;
    }
    if (out.is_flat_point && !out.pseudo_umbilic)
        out.pseudo_umbilic = PseudoUmbilicWitness{NormalDirection::canonical(1, 0), 0.0};

    const CurvatureEllipse ell = curvature_ellipse(jet, out.frame);
    out.normal_curvature = normal_curvature(ell.axis_p, ell.axis_q);
    out.is_semi_umbilic = semi_umbilic_test(ell.axis_p, ell.axis_q, tol.semi);
    out.mean_curvature = ell.center[0] * out.frame.n_s + ell.center[1] * out.frame.n_t;
    out.is_maximal = maximal_test(out.g, out.b_s, out.b_t, tol.mean);

    if (out.pseudo_umbilic) {
        const double gmax = std::max({out.g.g11, std::abs(out.g.g12), out.g.g22});
        out.is_flat_witnessed =
            std::abs(out.pseudo_umbilic->k) * gmax <= tol.flat * (form_scale + 1e-300) ||
            out.is_flat_point;
        if (!out.is_flat_witnessed) {
            // Non-flat pseudo-umbilic point: one or two roots, and a single
            // root happens exactly at umbilic points.
            const bool kind_ok =
                out.census.kind == CensusKind::One || out.census.kind == CensusKind::Two;
            const bool one_iff_umbilic =
                (out.census.kind == CensusKind::One) == out.is_umbilic_point;
            out.theorem_consistent = kind_ok && one_iff_umbilic;
        }
    }
    return out;
}

}  // namespace lsl
