#include "lsl/families.hpp"

#include "lsl/minkowski.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <string>

namespace lsl {

namespace {

constexpr int kProfileSamples = 17;

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidProfile(what);
}

double lerp(double a, double b, double t) { return a + (b - a) * t; }

}  // namespace

SurfaceChart make_example_1_1(Domain domain) {
    SurfaceChart chart;
    chart.name = "example-1.1";
    chart.family = "example-1.1";
    chart.domain = domain;
    chart.jet = [](double u, double v) {
        const double cu = std::cos(u), su = std::sin(u);
        const double ch = std::cosh(u), sh = std::sinh(u);
        const double r = 1.0 + v;
        Jet2 j;
        j.u = u;
        j.v = v;
        j.x = Vec4(cu * r, su * r, sh, ch);
        j.xu = Vec4(-su * r, cu * r, ch, sh);
        j.xv = Vec4(cu, su, 0, 0);
        j.xuu = Vec4(-cu * r, -su * r, sh, ch);
        j.xuv = Vec4(-su, cu, 0, 0);
        j.xvv = Vec4::Zero();
        return j;
    };
    return chart;
}

SurfaceChart make_example_1_2(Domain domain) {
    SurfaceChart chart;
    chart.name = "example-1.2";
    chart.family = "example-1.2";
    chart.domain = domain;
    chart.jet = [](double u, double v) {
        const double a = std::exp(2.0 * u), b = std::exp(-u);
        const double cv = std::cos(v), sv = std::sin(v);
        const double ch = std::cosh(v), sh = std::sinh(v);
        Jet2 j;
        j.u = u;
        j.v = v;
        j.x = Vec4(a * cv, a * sv, b * ch, b * sh);
        j.xu = Vec4(2 * a * cv, 2 * a * sv, -b * ch, -b * sh);
        j.xv = Vec4(-a * sv, a * cv, b * sh, b * ch);
        j.xuu = Vec4(4 * a * cv, 4 * a * sv, b * ch, b * sh);
        j.xuv = Vec4(-2 * a * sv, 2 * a * cv, -b * sh, -b * ch);
        j.xvv = Vec4(-a * cv, -a * sv, b * ch, b * sh);
        return j;
    };
    return chart;
}

NormalFrame example12_frame_closed_form(double u, double v) {
    const double a = std::exp(2.0 * u), b = std::exp(-u);
    const double cv = std::cos(v), sv = std::sin(v);
    const double ch = std::cosh(v), sh = std::sinh(v);
    const Vec4 dir_s = -Vec4(b * cv, b * sv, 2 * a * ch, 2 * a * sh);
    const Vec4 dir_t(-b * sv, b * cv, a * sh, a * ch);
    NormalFrame frame;
    frame.n_s = dir_s / std::sqrt(mink_norm2(dir_s));
    frame.n_t = dir_t / std::sqrt(-mink_norm2(dir_t));
    return frame;
}

// ---------------------------------------------------------------------------
// Ruled surfaces
// ---------------------------------------------------------------------------

SurfaceChart make_ruled(CurveFn alpha, CurveFn director, Domain domain, std::string name) {
    for (int i = 0; i < kProfileSamples; ++i) {
        const double t = lerp(domain.u0, domain.u1, i / double(kProfileSamples - 1));
        const CurveJet2 a = alpha(t);
        const CurveJet2 w = director(t);
        require(std::abs(mink_norm2(a.d1) - 1.0) <= 1e-6, "ruled: base curve is not unit speed");
        require(std::abs(mink_norm2(w.p) - 1.0) <= 1e-6, "ruled: director is not unit");
        require(std::abs(mink_dot(a.d1, w.p)) <= 1e-6,
                "ruled: director is not orthogonal to the base curve");
        require(mink_norm2(w.d1) > 0, "ruled: <W',W'> must be positive");
    }
    SurfaceChart chart;
    chart.name = std::move(name);
    chart.family = "ruled";
    chart.domain = domain;
    chart.jet = [alpha = std::move(alpha), director = std::move(director)](double u, double v) {
        const CurveJet2 a = alpha(u);
        const CurveJet2 w = director(u);
        Jet2 j;
        j.u = u;
        j.v = v;
        j.x = a.p + v * w.p;
        j.xu = a.d1 + v * w.d1;
        j.xv = w.p;
        j.xuu = a.d2 + v * w.d2;
        j.xuv = w.d1;
        j.xvv = Vec4::Zero();
        return j;
    };
    return chart;
}

bool ruled_dependency_test(const CurveFn& alpha, const CurveFn& director, double t, double tau) {
    const CurveJet2 a = alpha(t);
    const CurveJet2 w = director(t);
    Eigen::Matrix<double, 4, 3> m;
    m.col(0) = a.d1;
    m.col(1) = w.p;
    m.col(2) = w.d1;
    // Rank-revealing QR: the decreasing |R_ii| track the singular values
    // closely enough for a ratio test at full precision.
    const Eigen::ColPivHouseholderQR<Eigen::Matrix<double, 4, 3>> qr(m);
    const auto& r = qr.matrixQR();
    return std::abs(r(2, 2)) <= tau * std::abs(r(0, 0));
}

Vec4 ruled_binormal_closed_form(const CurveFn& alpha, const CurveFn& director, double t) {
    const CurveJet2 a = alpha(t);
    const CurveJet2 w = director(t);
    const Vec4 n = wedge3(a.d1, w.p, w.d1);
    const double scale = a.d1.norm() * w.p.norm() * w.d1.norm();
    if (n.norm() <= 1e-12 * scale)
        throw DegeneratePlane("ruled_binormal_closed_form: ruling data is linearly dependent");
    return n / std::sqrt(std::abs(mink_norm2(n)));
}

std::pair<CurveFn, CurveFn> ruled_helical_curves(const RuledHelicalParams& p) {
    CurveFn alpha = [p](double t) {
        const double xi = p.xi0 + p.xi1 * t;
        CurveJet2 c;
        if (p.xi1 != 0) {
            c.p = Vec4(0, 0, std::sinh(xi) / p.xi1, std::cosh(xi) / p.xi1);
            c.d1 = Vec4(0, 0, std::cosh(xi), std::sinh(xi));
            c.d2 = p.xi1 * Vec4(0, 0, std::sinh(xi), std::cosh(xi));
        } else {
            c.p = t * Vec4(0, 0, std::cosh(p.xi0), std::sinh(p.xi0));
            c.d1 = Vec4(0, 0, std::cosh(p.xi0), std::sinh(p.xi0));
            c.d2 = Vec4::Zero();
        }
        return c;
    };
    CurveFn director = [p](double t) {
        const double phi = p.phi0 + p.phi1 * t;
        CurveJet2 c;
        c.p = Vec4(std::cos(phi), std::sin(phi), 0, 0);
        c.d1 = p.phi1 * Vec4(-std::sin(phi), std::cos(phi), 0, 0);
        c.d2 = -p.phi1 * p.phi1 * Vec4(std::cos(phi), std::sin(phi), 0, 0);
        return c;
    };
    return {std::move(alpha), std::move(director)};
}

SurfaceChart make_ruled_helical(const RuledHelicalParams& p, Domain domain) {
    if (p.phi1 == 0) throw InvalidProfile("ruled helical: phi1 must be nonzero");
    auto [alpha, director] = ruled_helical_curves(p);
    return make_ruled(std::move(alpha), std::move(director), domain, "ruled-helical");
}

std::pair<CurveFn, CurveFn> ruled_developable_curves(const RuledDevelopableParams& p) {
    CurveFn alpha = [p](double t) {
        const double a = p.omega * t;
        CurveJet2 c;
        c.p = Vec4(std::sin(a), -std::cos(a), 0, 0) / p.omega;
        c.d1 = Vec4(std::cos(a), std::sin(a), 0, 0);
        c.d2 = p.omega * Vec4(-std::sin(a), std::cos(a), 0, 0);
        return c;
    };
    CurveFn director = [p](double t) {
        const double a = p.omega * t;
        const double cb = std::cos(p.tilt), sb = std::sin(p.tilt);
        const Vec4 boost(0, 0, std::cosh(p.xi0), std::sinh(p.xi0));
        CurveJet2 c;
        c.p = cb * Vec4(-std::sin(a), std::cos(a), 0, 0) + sb * boost;
        c.d1 = p.omega * cb * Vec4(-std::cos(a), -std::sin(a), 0, 0);
        c.d2 = p.omega * p.omega * cb * Vec4(std::sin(a), -std::cos(a), 0, 0);
        return c;
    };
    return {std::move(alpha), std::move(director)};
}

SurfaceChart make_ruled_developable(const RuledDevelopableParams& p) {
    if (std::cos(p.tilt) == 0 || p.omega == 0)
        throw InvalidProfile("ruled developable: omega and cos(tilt) must be nonzero");
    auto [alpha, director] = ruled_developable_curves(p);
    // The chart degenerates at v = 1/(omega cos tilt); stay well inside.
    const double vmax = 0.5 / std::abs(p.omega * std::cos(p.tilt));
    return make_ruled(std::move(alpha), std::move(director), Domain{0, 1, -vmax, vmax},
                      "ruled-developable");
}

// ---------------------------------------------------------------------------
// Revolution surfaces of hyperbolic type
// ---------------------------------------------------------------------------

SurfaceChart make_rh(ProfileFn f, ProfileFn g, ProfileFn rho, Domain domain, std::string name) {
    for (int i = 0; i < kProfileSamples; ++i) {
        const double u = lerp(domain.u0, domain.u1, i / double(kProfileSamples - 1));
        const ScalarJet2 fu = f(u), gu = g(u), ru = rho(u);
        require(ru.f > 0, "rh: rho must be positive");
        const double speed = fu.df * fu.df + gu.df * gu.df - ru.df * ru.df;
        require(std::abs(speed - 1.0) <= 1e-6, "rh: profile is not unit speed");
        const double scale = std::max({std::abs(fu.df), std::abs(gu.df), std::abs(ru.df)});
        require(std::abs(fu.df) > 1e-9 * scale, "rh: f' vanishes at a sample");
        require(std::abs(gu.df) > 1e-9 * scale, "rh: g' vanishes at a sample");
        require(std::abs(ru.df) > 1e-9 * scale, "rh: rho' vanishes at a sample");
    }
    SurfaceChart chart;
    chart.name = std::move(name);
    chart.family = "rh";
    chart.domain = domain;
    chart.jet = [f = std::move(f), g = std::move(g), rho = std::move(rho)](double u, double v) {
        const ScalarJet2 fu = f(u), gu = g(u), ru = rho(u);
        const double ch = std::cosh(v), sh = std::sinh(v);
        Jet2 j;
        j.u = u;
        j.v = v;
        j.x = Vec4(fu.f, gu.f, ru.f * sh, ru.f * ch);
        j.xu = Vec4(fu.df, gu.df, ru.df * sh, ru.df * ch);
        j.xv = Vec4(0, 0, ru.f * ch, ru.f * sh);
        j.xuu = Vec4(fu.ddf, gu.ddf, ru.ddf * sh, ru.ddf * ch);
        j.xuv = Vec4(0, 0, ru.df * ch, ru.df * sh);
        j.xvv = Vec4(0, 0, ru.f * sh, ru.f * ch);
        return j;
    };
    return chart;
}

RhFields rh_closed_form_fields(const ProfileFn& f, const ProfileFn& g, const ProfileFn& rho,
                               double u, double v) {
    const ScalarJet2 fu = f(u), gu = g(u), ru = rho(u);
    const double ch = std::cosh(v), sh = std::sinh(v);
    const Vec4 xu(fu.df, gu.df, ru.df * sh, ru.df * ch);
    const Vec4 xv(0, 0, ru.f * ch, ru.f * sh);
    const Vec4 xuu(fu.ddf, gu.ddf, ru.ddf * sh, ru.ddf * ch);
    RhFields out;
    // Negating the triple product orients b1 so that the shape operators
    // along (b1, b2) are diag(0, f''g' - f'g'') and diag(f'g'' - f''g', 0);
    // the umbilic combination is then b1 - b2.
    out.b1 = -wedge3(xu, xv, xuu);
    out.b2 = Vec4(-gu.df, fu.df, 0, 0);
    out.nu_umbilic = out.b1 - out.b2;
    return out;
}

std::array<ProfileFn, 3> rh_trig_profiles(const RhTrigParams& p) {
    const double m = p.m, k = p.k;
    const double den = m * m + k * k;
    ProfileFn f = [m, k, den](double u) {
        const double shm = std::sinh(m * u), chm = std::cosh(m * u);
        const double ck = std::cos(k * u), sk = std::sin(k * u);
        ScalarJet2 r;
        r.f = (m * shm * ck + k * chm * sk) / den;
        r.df = chm * ck;
        r.ddf = m * shm * ck - k * chm * sk;
        return r;
    };
    ProfileFn g = [m, k, den, g0 = p.g0](double u) {
        const double shm = std::sinh(m * u), chm = std::cosh(m * u);
        const double ck = std::cos(k * u), sk = std::sin(k * u);
        ScalarJet2 r;
        r.f = (m * shm * sk - k * chm * ck) / den + g0;
        r.df = chm * sk;
        r.ddf = m * shm * sk + k * chm * ck;
        return r;
    };
    ProfileFn rho = [m, r0 = p.r0](double u) {
        ScalarJet2 r;
        r.f = std::cosh(m * u) / m + r0;
        r.df = std::sinh(m * u);
        r.ddf = m * std::cosh(m * u);
        return r;
    };
    return {std::move(f), std::move(g), std::move(rho)};
}

SurfaceChart make_rh_trig(const RhTrigParams& p, Domain domain) {
    auto [f, g, rho] = rh_trig_profiles(p);
    return make_rh(std::move(f), std::move(g), std::move(rho), domain, "rh-trig");
}

// ---------------------------------------------------------------------------
// Rotational surfaces of type I
// ---------------------------------------------------------------------------

SurfaceChart make_rs(ProfileFn f, ProfileFn g, double alpha, double beta, Domain domain,
                     std::string name) {
    require(alpha > 0 && beta > 0, "rs: alpha and beta must be positive");
    for (int i = 0; i < kProfileSamples; ++i) {
        const double u = lerp(domain.u0, domain.u1, i / double(kProfileSamples - 1));
        const ScalarJet2 fu = f(u), gu = g(u);
        require(alpha * alpha * fu.f * fu.f - beta * beta * gu.f * gu.f > 0,
                "rs: alpha^2 f^2 - beta^2 g^2 must be positive");
        require(fu.df * fu.df + gu.df * gu.df > 0, "rs: profile derivative vanishes");
    }
    SurfaceChart chart;
    chart.name = std::move(name);
    chart.family = "rs";
    chart.domain = domain;
    chart.jet = [f = std::move(f), g = std::move(g), alpha, beta](double u, double v) {
        const ScalarJet2 fu = f(u), gu = g(u);
        const double ca = std::cos(alpha * v), sa = std::sin(alpha * v);
        const double ch = std::cosh(beta * v), sh = std::sinh(beta * v);
        Jet2 j;
        j.u = u;
        j.v = v;
        j.x = Vec4(fu.f * ca, fu.f * sa, gu.f * ch, gu.f * sh);
        j.xu = Vec4(fu.df * ca, fu.df * sa, gu.df * ch, gu.df * sh);
        j.xv = Vec4(-alpha * fu.f * sa, alpha * fu.f * ca, beta * gu.f * sh, beta * gu.f * ch);
        j.xuu = Vec4(fu.ddf * ca, fu.ddf * sa, gu.ddf * ch, gu.ddf * sh);
        j.xuv =
            Vec4(-alpha * fu.df * sa, alpha * fu.df * ca, beta * gu.df * sh, beta * gu.df * ch);
        j.xvv = Vec4(-alpha * alpha * fu.f * ca, -alpha * alpha * fu.f * sa,
                     beta * beta * gu.f * ch, beta * beta * gu.f * sh);
        return j;
    };
    return chart;
}

NormalFrame rs_frame_closed_form(const ProfileFn& f, const ProfileFn& g, double alpha,
                                 double beta, double u, double v) {
    const ScalarJet2 fu = f(u), gu = g(u);
    const double ca = std::cos(alpha * v), sa = std::sin(alpha * v);
    const double ch = std::cosh(beta * v), sh = std::sinh(beta * v);
    const double w1 = std::sqrt(fu.df * fu.df + gu.df * gu.df);
    const double g22 = alpha * alpha * fu.f * fu.f - beta * beta * gu.f * gu.f;
    if (g22 <= 0) throw InvalidProfile("rs frame: alpha^2 f^2 - beta^2 g^2 must be positive");
    const double w2 = std::sqrt(g22);
    NormalFrame frame;
    frame.n_s = Vec4(gu.df * ca, gu.df * sa, -fu.df * ch, -fu.df * sh) / w1;
    frame.n_t = Vec4(-beta * gu.f * sa, beta * gu.f * ca, alpha * fu.f * sh, alpha * fu.f * ch) / w2;
    return frame;
}

std::pair<SecondForm, SecondForm> rs_second_forms_closed_form(const ProfileFn& f,
                                                              const ProfileFn& g, double alpha,
                                                              double beta, double u, double v) {
    const ScalarJet2 fu = f(u), gu = g(u);
    const NormalFrame frame = rs_frame_closed_form(f, g, alpha, beta, u, v);
    const double w1 = std::sqrt(fu.df * fu.df + gu.df * gu.df);
    const double w2 =
        std::sqrt(alpha * alpha * fu.f * fu.f - beta * beta * gu.f * gu.f);
    SecondForm b1{(fu.ddf * gu.df - fu.df * gu.ddf) / w1, 0.0,
                  -(beta * beta * fu.df * gu.f + alpha * alpha * fu.f * gu.df) / w1, frame.n_s};
    SecondForm b2{0.0, alpha * beta * (fu.df * gu.f - fu.f * gu.df) / w2, 0.0, frame.n_t};
    return {b1, b2};
}

CensusKind rs_census_predicate(const ProfileFn& f, const ProfileFn& g, double alpha, double beta,
                               double u, double tau) {
    const ScalarJet2 fu = f(u), gu = g(u);
    const double curl = fu.ddf * gu.df - fu.df * gu.ddf;
    const double mix = beta * beta * fu.df * gu.f + alpha * alpha * fu.f * gu.df;
    const double e1 = -curl * mix;
    const double e2 = alpha * beta * (fu.df * gu.f - gu.df * fu.f);
    const double ref1 = (std::abs(fu.ddf * gu.df) + std::abs(fu.df * gu.ddf)) *
                        (beta * beta * std::abs(fu.df * gu.f) +
                         alpha * alpha * std::abs(fu.f * gu.df));
    const double ref2 = alpha * beta * (std::abs(fu.df * gu.f) + std::abs(gu.df * fu.f));
    const bool e1_zero = std::abs(e1) <= tau * ref1;
    const bool e2_zero = std::abs(e2) <= tau * ref2;
    if (e1_zero && e2_zero) return CensusKind::All;
    if (e1_zero || e2_zero) return CensusKind::One;
    return e1 < 0 ? CensusKind::Zero : CensusKind::Two;
}

}  // namespace lsl
