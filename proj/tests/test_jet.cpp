#include "lsl/jet.hpp"

#include "helpers.hpp"
#include "lsl/expr.hpp"
#include "lsl/families.hpp"
#include "lsl/minkowski.hpp"

#include <doctest.h>

using namespace lsl;
using test::Rng;

namespace {

ProfileFn expr_f() { return expr::compile("u^2"); }
ProfileFn expr_g() { return expr::compile("u"); }

SurfaceChart linear_chart(const Vec4& p, const Vec4& a, const Vec4& b) {
    SurfaceChart chart;
    chart.name = "linear";
    chart.family = "test";
    chart.domain = {-1, 1, -1, 1};
    chart.jet = [p, a, b](double u, double v) {
        Jet2 j;
        j.u = u;
        j.v = v;
        j.x = p + u * a + v * b;
        j.xu = a;
        j.xv = b;
        j.xuu = j.xuv = j.xvv = Vec4::Zero();
        return j;
    };
    return chart;
}

double jet_gap(const Jet2& a, const Jet2& b) {
    double m = 0;
    m = std::max(m, (a.x - b.x).cwiseAbs().maxCoeff());
    m = std::max(m, (a.xu - b.xu).cwiseAbs().maxCoeff());
    m = std::max(m, (a.xv - b.xv).cwiseAbs().maxCoeff());
    m = std::max(m, (a.xuu - b.xuu).cwiseAbs().maxCoeff());
    m = std::max(m, (a.xuv - b.xuv).cwiseAbs().maxCoeff());
    m = std::max(m, (a.xvv - b.xvv).cwiseAbs().maxCoeff());
    return m;
}

double jet_scale(const Jet2& a) {
    double m = 0;
    for (const Vec4* s : {&a.x, &a.xu, &a.xv, &a.xuu, &a.xuv, &a.xvv})
        m = std::max(m, s->cwiseAbs().maxCoeff());
    return m;
}

}  // namespace

TEST_CASE("example-1.1 jet at the origin") {
    const SurfaceChart chart = make_example_1_1();
    const Jet2 j = eval_jet2(chart, 0, 0);
    CHECK((j.x - Vec4(1, 0, 0, 1)).norm() == 0.0);
    CHECK((j.xv - Vec4(1, 0, 0, 0)).norm() == 0.0);
}

TEST_CASE("rh chart has first form (1, 0, rho^2)") {
    const RhTrigParams params;
    const SurfaceChart chart = make_rh_trig(params);
    auto [f, g, rho] = rh_trig_profiles(params);
    Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        const double u = test::uniform(rng, 0.2, 1.2);
        const double v = test::uniform(rng, -1, 1);
        const Jet2 j = eval_jet2(chart, u, v);
        CHECK(mink_dot(j.xu, j.xu) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(mink_dot(j.xu, j.xv)) < 1e-12 * jet_scale(j));
        const double r = rho(u).f;
        CHECK(mink_dot(j.xv, j.xv) == doctest::Approx(r * r).epsilon(1e-12));
    }
}

TEST_CASE("eval_jet2 rejects points outside the domain") {
    const SurfaceChart chart = make_example_1_1();
    CHECK_THROWS_AS(eval_jet2(chart, 1.5, 0), OutOfDomain);
    CHECK_THROWS_AS(eval_jet2(chart, 0, -2), OutOfDomain);
    CHECK_NOTHROW(eval_jet2(chart, 1.0, -1.0));  // closed rectangle is inclusive
    CHECK_THROWS_AS(fd_jet2(chart, 1.0, 0, 1e-4), OutOfDomain);
    CHECK_NOTHROW(fd_jet2(chart, 0.99, 0, 1e-4));
}

TEST_CASE("finite differences reproduce the analytic jets of example-1.2") {
    const SurfaceChart chart = make_example_1_2();
    Rng rng(37);
    for (int i = 0; i < 25; ++i) {
        const double u = test::uniform(rng, 1.2, 1.9);
        const double v = test::uniform(rng, 0.3, 6.0);
        const Jet2 a = eval_jet2(chart, u, v);
        const Jet2 fd = fd_jet2(chart, u, v, 1e-4);
        CHECK(jet_gap(a, fd) < 1e-6 * (1 + jet_scale(a)));
    }
}

TEST_CASE("finite differences on a linear chart vanish at second order") {
    const SurfaceChart chart = linear_chart(Vec4(0, 0, 0, 1), Vec4(1, 0, 0, 0), Vec4(0, 1, 0, 0));
    const Jet2 fd = fd_jet2(chart, 0.1, -0.2, 1e-4);
    CHECK(fd.xuu.norm() < 1e-7);
    CHECK(fd.xuv.norm() < 1e-7);
    CHECK(fd.xvv.norm() < 1e-7);
    CHECK((fd.xu - Vec4(1, 0, 0, 0)).norm() < 1e-10);
}

TEST_CASE("fd and analytic metric agree on the exponential rs chart") {
    const SurfaceChart chart = make_rs(expr::compile("exp(2*u)"), expr::compile("exp(-u)"), 1.0,
                                       1.0, Domain{1.1, 2.0, 0.1, 6.2}, "rs-4d");
    const Jet2 a = eval_jet2(chart, 1.5, 1.0);
    const Jet2 fd = fd_jet2(chart, 1.5, 1.0, 1e-4);
    for (auto pair : {std::pair{&Jet2::xu, &Jet2::xu}, std::pair{&Jet2::xu, &Jet2::xv},
                      std::pair{&Jet2::xv, &Jet2::xv}}) {
        const double ga = mink_dot(a.*(pair.first), a.*(pair.second));
        const double gf = mink_dot(fd.*(pair.first), fd.*(pair.second));
        CHECK(std::abs(ga - gf) < 1e-6 * (1 + std::abs(ga)));
    }
}

TEST_CASE("analytic vs finite-difference jets across all built-in families") {
    std::vector<SurfaceChart> charts;
    charts.push_back(make_example_1_1());
    charts.push_back(make_example_1_2());
    charts.push_back(make_ruled_helical());
    charts.push_back(make_ruled_developable());
    charts.push_back(make_rh_trig());
    charts.push_back(make_rs(expr_f(), expr_g(), 1.0, 1.0, Domain{1.1, 3.0, 0.1, 6.2}));
    Rng rng(41);
    for (const SurfaceChart& chart : charts) {
        for (int i = 0; i < 100; ++i) {
            const Domain& d = chart.domain;
            const double u = test::uniform(rng, d.u0 + 0.05 * d.uspan(), d.u1 - 0.05 * d.uspan());
            const double v = test::uniform(rng, d.v0 + 0.05 * d.vspan(), d.v1 - 0.05 * d.vspan());
            const Jet2 a = eval_jet2(chart, u, v);
            const Jet2 fd = fd_jet2(chart, u, v, 1e-4);
            CHECK(jet_gap(a, fd) < 1e-6 * (1 + jet_scale(a)));
        }
    }
}

TEST_CASE("reparametrized charts scale their jets by the chain rule") {
    const SurfaceChart base = make_example_1_2();
    const double cu = 0.5, cv = 2.0;
    const SurfaceChart scaled = reparametrize_chart(base, cu, cv);
    Rng rng(43);
    for (int i = 0; i < 20; ++i) {
        const double u = test::uniform(rng, scaled.domain.u0 + 0.1, scaled.domain.u1 - 0.1);
        const double v = test::uniform(rng, scaled.domain.v0 + 0.1, scaled.domain.v1 - 0.1);
        const Jet2 s = eval_jet2(scaled, u, v);
        const Jet2 b = eval_jet2(base, cu * u, cv * v);
        CHECK((s.xu - cu * b.xu).norm() < 1e-12 * jet_scale(b));
        CHECK((s.xuu - cu * cu * b.xuu).norm() < 1e-12 * jet_scale(b));
        CHECK((s.xuv - cu * cv * b.xuv).norm() < 1e-12 * jet_scale(b));
        // Independent check of the chain-rule jets.
        const Jet2 fd = fd_jet2(scaled, u, v, 1e-4);
        CHECK(jet_gap(s, fd) < 1e-6 * (1 + jet_scale(s)));
    }
}

TEST_CASE("check_spacelike accepts the worked charts and rejects null planes") {
    const SurfaceChart ex11 = make_example_1_1();
    Rng rng(47);
    for (int i = 0; i < 30; ++i)
        CHECK(check_spacelike(
            eval_jet2(ex11, test::uniform(rng, -1, 1), test::uniform(rng, -1, 1))));

    const SurfaceChart rs4c =
        make_rs(expr_f(), expr_g(), 1.0, 1.0, Domain{1.1, 3.0, 0.1, 6.2});
    CHECK(check_spacelike(eval_jet2(rs4c, 2.0, 1.0)));

    const SurfaceChart null_chart =
        linear_chart(Vec4::Zero(), Vec4(1, 0, 0, 0), Vec4(0, 0, 1, 1));
    CHECK_FALSE(check_spacelike(eval_jet2(null_chart, 0, 0)));
}

TEST_CASE("transform_chart preserves the induced metric") {
    Rng rng(53);
    const SurfaceChart base = make_example_1_1();
    const SurfaceChart moved = transform_chart(test::random_lorentz(rng), base);
    for (int i = 0; i < 20; ++i) {
        const double u = test::uniform(rng, -1, 1), v = test::uniform(rng, -1, 1);
        const Jet2 a = eval_jet2(base, u, v);
        const Jet2 m = eval_jet2(moved, u, v);
        CHECK(mink_dot(m.xu, m.xu) == doctest::Approx(mink_dot(a.xu, a.xu)).epsilon(1e-10));
        CHECK(mink_dot(m.xv, m.xv) == doctest::Approx(mink_dot(a.xv, a.xv)).epsilon(1e-10));
        CHECK(std::abs(mink_dot(m.xu, m.xv) - mink_dot(a.xu, a.xv)) < 1e-10 * jet_scale(m));
    }
}
