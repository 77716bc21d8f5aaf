#include "lsl/forms.hpp"

#include "helpers.hpp"
#include "lsl/expr.hpp"
#include "lsl/families.hpp"
#include "lsl/minkowski.hpp"

#include <doctest.h>

using namespace lsl;
using test::Rng;

TEST_CASE("first form of example-1.1: g11 = (1+v)^2 + 1, g12 = 0, g22 = 1") {
    const SurfaceChart chart = make_example_1_1();
    Rng rng(71);
    for (int i = 0; i < 40; ++i) {
        const double u = test::uniform(rng, -1, 1), v = test::uniform(rng, -1, 1);
        const FirstForm g = first_form(eval_jet2(chart, u, v));
        CHECK(g.g11 == doctest::Approx((1 + v) * (1 + v) + 1).epsilon(1e-12));
        CHECK(std::abs(g.g12) < 1e-12 * g.g11);
        CHECK(g.g22 == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("first form of rs charts: g22 = alpha^2 f^2 - beta^2 g^2") {
    const ProfileFn f = expr::compile("u^2"), g = expr::compile("u");
    const double alpha = 1.3, beta = 0.7;
    const SurfaceChart chart = make_rs(f, g, alpha, beta, {1.1, 3, 0.1, 6.2});
    Rng rng(73);
    for (int i = 0; i < 40; ++i) {
        const double u = test::uniform(rng, 1.1, 3), v = test::uniform(rng, 0.1, 6.2);
        const FirstForm gf = first_form(eval_jet2(chart, u, v));
        const double fu = f(u).f, gu = g(u).f;
        CHECK(gf.g22 ==
              doctest::Approx(alpha * alpha * fu * fu - beta * beta * gu * gu).epsilon(1e-12));
        CHECK(std::abs(gf.g12) < 1e-12 * (gf.g11 + gf.g22));
    }
}

TEST_CASE("first_form rejects non-spacelike jets") {
    Jet2 j;
    j.xu = Vec4(1, 0, 0, 0);
    j.xv = Vec4(0, 0, 1, 1);  // null
    CHECK_THROWS_AS(first_form(j), NotSpacelike);
}

TEST_CASE("normal_frame invariants on random spacelike jets") {
    Rng rng(79);
    for (int i = 0; i < 200; ++i) {
        const Jet2 j = test::random_spacelike_jet(rng);
        const NormalFrame fr = normal_frame(j);
        const double scale = std::max(j.xu.norm(), j.xv.norm());
        CHECK(std::abs(mink_norm2(fr.n_s) - 1.0) < 1e-10);
        CHECK(std::abs(mink_norm2(fr.n_t) + 1.0) < 1e-10);
        CHECK(std::abs(mink_dot(fr.n_s, fr.n_t)) < 1e-10);
        for (const Vec4* n : {&fr.n_s, &fr.n_t}) {
            CHECK(std::abs(mink_dot(*n, j.xu)) < 1e-10 * scale * n->norm());
            CHECK(std::abs(mink_dot(*n, j.xv)) < 1e-10 * scale * n->norm());
        }
        CHECK(fr.n_t[3] > 0);  // future pointing
    }
}

TEST_CASE("normal_frame spans the closed-form rs frame") {
    const ProfileFn f = expr::compile("exp(2*u)"), g = expr::compile("exp(-u)");
    const SurfaceChart chart = make_rs(f, g, 1.0, 1.0, {1.1, 2, 0.1, 6.2});
    Rng rng(83);
    for (int i = 0; i < 100; ++i) {
        const double u = test::uniform(rng, 1.1, 2), v = test::uniform(rng, 0.1, 6.2);
        const NormalFrame computed = normal_frame(eval_jet2(chart, u, v));
        const NormalFrame reference = rs_frame_closed_form(f, g, 1.0, 1.0, u, v);
        for (const Vec4* n : {&reference.n_s, &reference.n_t}) {
            const Vec4 back = mink_dot(*n, computed.n_s) * computed.n_s -
                              mink_dot(*n, computed.n_t) * computed.n_t;
            CHECK((back - *n).norm() < 1e-9 * n->norm());
        }
    }
}

TEST_CASE("example-1.1 time-axis alignment: n_t is the bi-normal at u = 0") {
    const SurfaceChart chart = make_example_1_1();
    for (double v : {-0.5, 0.0, 0.7}) {
        const NormalFrame fr = normal_frame(eval_jet2(chart, 0.0, v));
        CHECK((fr.n_t - Vec4(0, 0, 0, 1)).norm() < 1e-12);
    }
    // At every point the field (0,0,sinh u,cosh u) lies in the normal plane.
    Rng rng(89);
    for (int i = 0; i < 40; ++i) {
        const double u = test::uniform(rng, -1, 1), v = test::uniform(rng, -1, 1);
        const Jet2 j = eval_jet2(chart, u, v);
        const NormalFrame fr = normal_frame(j);
        const Vec4 b(0, 0, std::sinh(u), std::cosh(u));
        const Vec4 back = mink_dot(b, fr.n_s) * fr.n_s - mink_dot(b, fr.n_t) * fr.n_t;
        CHECK((back - b).norm() < 1e-10 * b.norm());
    }
}

TEST_CASE("second forms match the rs tables") {
    const ProfileFn f = expr::compile("exp(2*u)"), g = expr::compile("exp(-u)");
    const double alpha = 1.0, beta = 1.0;
    const SurfaceChart chart = make_rs(f, g, alpha, beta, {1.1, 2, 0.1, 6.2});
    Rng rng(97);
    for (int i = 0; i < 100; ++i) {
        const double u = test::uniform(rng, 1.1, 2), v = test::uniform(rng, 0.1, 6.2);
        const Jet2 j = eval_jet2(chart, u, v);
        const NormalFrame fr = rs_frame_closed_form(f, g, alpha, beta, u, v);
        const auto [t1, t2] = rs_second_forms_closed_form(f, g, alpha, beta, u, v);
        const SecondForm b1 = second_form(j, fr.n_s);
        const SecondForm b2 = second_form(j, fr.n_t);
        const double scale = 1 + std::abs(t1.b11) + std::abs(t1.b22) + std::abs(t2.b12);
        CHECK(std::abs(b1.b11 - t1.b11) < 1e-9 * scale);
        CHECK(std::abs(b1.b12) < 1e-9 * scale);
        CHECK(std::abs(b1.b22 - t1.b22) < 1e-9 * scale);
        CHECK(std::abs(b2.b11) < 1e-9 * scale);
        CHECK(std::abs(b2.b12 - t2.b12) < 1e-9 * scale);
        CHECK(std::abs(b2.b22) < 1e-9 * scale);
    }
}

TEST_CASE("ruled charts have b22 = 0 against every normal") {
    const SurfaceChart chart = make_ruled_helical();
    Rng rng(101);
    for (int i = 0; i < 30; ++i) {
        const double u = test::uniform(rng, 0, 1), v = test::uniform(rng, -1, 1);
        const Jet2 j = eval_jet2(chart, u, v);
        const NormalFrame fr = normal_frame(j);
        CHECK(std::abs(second_form(j, fr.n_s).b22) < 1e-12);
        CHECK(std::abs(second_form(j, fr.n_t).b22) < 1e-12);
        const FirstForm g = first_form(j);
        CHECK(g.g22 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(g.g12) < 1e-12 * g.g11);
    }
}

TEST_CASE("second_form rejects fields that are not normal") {
    const SurfaceChart chart = make_example_1_1();
    const Jet2 j = eval_jet2(chart, 0.3, 0.2);
    CHECK_THROWS_AS(second_form(j, j.xu), NotNormal);
}

TEST_CASE("second_form is linear in the normal field") {
    Rng rng(103);
    for (int i = 0; i < 100; ++i) {
        const Jet2 j = test::random_spacelike_jet(rng);
        const NormalFrame fr = normal_frame(j);
        const double a = test::uniform(rng, -2, 2), b = test::uniform(rng, -2, 2);
        const SecondForm bs = second_form(j, fr.n_s);
        const SecondForm bt = second_form(j, fr.n_t);
        const SecondForm mixed = second_form(j, a * fr.n_s + b * fr.n_t);
        const double scale =
            (std::abs(a) + std::abs(b)) *
                std::max({std::abs(bs.b11), std::abs(bs.b12), std::abs(bs.b22), std::abs(bt.b11),
                          std::abs(bt.b12), std::abs(bt.b22)}) +
            1e-30;
        CHECK(std::abs(mixed.b11 - a * bs.b11 - b * bt.b11) < 1e-12 * scale);
        CHECK(std::abs(mixed.b12 - a * bs.b12 - b * bt.b12) < 1e-12 * scale);
        CHECK(std::abs(mixed.b22 - a * bs.b22 - b * bt.b22) < 1e-12 * scale);
    }
}

TEST_CASE("shape operator of example-1.1 along the unit bi-normal") {
    const SurfaceChart chart = make_example_1_1();
    Rng rng(107);
    for (int i = 0; i < 25; ++i) {
        const double u = test::uniform(rng, -1, 1), v = test::uniform(rng, -1, 1);
        const Jet2 j = eval_jet2(chart, u, v);
        const FirstForm g = first_form(j);
        const SecondForm b = second_form(j, Vec4(0, 0, std::sinh(u), std::cosh(u)));
        // The second-form matrix is exactly diag(-1, 0); the shape operator
        // divides by g11.
        CHECK(b.b11 == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(std::abs(b.b12) < 1e-12);
        CHECK(b.b22 == 0.0);
        const Mat2 s = shape_operator(g, b);
        CHECK(s(0, 0) == doctest::Approx(-1.0 / g.g11).epsilon(1e-12));
        CHECK(std::abs(s(0, 1)) + std::abs(s(1, 0)) + std::abs(s(1, 1)) < 1e-12);
    }
}

TEST_CASE("shape operator identities") {
    Rng rng(109);
    const FirstForm g = test::random_first_form(rng);
    const SecondForm as_g{g.g11, g.g12, g.g22, Vec4::Zero()};
    CHECK((shape_operator(g, as_g) - Mat2::Identity()).norm() < 1e-12);
    const SecondForm zero{0, 0, 0, Vec4::Zero()};
    CHECK(shape_operator(g, zero).norm() == 0.0);
    CHECK(nu_gauss(g, zero) == 0.0);
    CHECK(nu_mean(g, zero) == 0.0);
    CHECK(nu_mean(g, as_g) == doctest::Approx(1.0).epsilon(1e-12));
    // Half trace of diag(-1, 0) against the unit metric.
    CHECK(nu_mean(FirstForm{1, 0, 1}, SecondForm{-1, 0, 0, Vec4::Zero()}) == -0.5);
}

TEST_CASE("g S is symmetric for random data") {
    Rng rng(113);
    for (int i = 0; i < 200; ++i) {
        const FirstForm g = test::random_first_form(rng);
        const SecondForm b = test::random_second_form(rng);
        const Mat2 gs = g.matrix() * shape_operator(g, b);
        CHECK(std::abs(gs(0, 1) - gs(1, 0)) < 1e-10 * (1 + gs.norm()));
    }
}

TEST_CASE("ruled curvature: K = -(b12)^2 / g11 along any normal") {
    const SurfaceChart chart = make_ruled_helical();
    Rng rng(127);
    for (int i = 0; i < 30; ++i) {
        const double u = test::uniform(rng, 0, 1), v = test::uniform(rng, -1, 1);
        const Jet2 j = eval_jet2(chart, u, v);
        const FirstForm g = first_form(j);
        const NormalFrame fr = normal_frame(j);
        const double a = test::uniform(rng, -2, 2), b = test::uniform(rng, -2, 2);
        const SecondForm bn = second_form(j, a * fr.n_s + b * fr.n_t);
        CHECK(nu_gauss(g, bn) ==
              doctest::Approx(-bn.b12 * bn.b12 / g.g11).epsilon(1e-10));
    }
}

TEST_CASE("mixed rs field matches the closed-form curvature") {
    const ProfileFn f = expr::compile("exp(2*u)"), g = expr::compile("exp(-u)");
    const SurfaceChart chart = make_rs(f, g, 1.0, 1.0, {1.1, 2, 0.1, 6.2});
    Rng rng(131);
    for (int i = 0; i < 30; ++i) {
        const double u = test::uniform(rng, 1.1, 2), v = test::uniform(rng, 0.1, 6.2);
        const Jet2 j = eval_jet2(chart, u, v);
        const FirstForm gf = first_form(j);
        const NormalFrame fr = rs_frame_closed_form(f, g, 1.0, 1.0, u, v);
        const auto [t1, t2] = rs_second_forms_closed_form(f, g, 1.0, 1.0, u, v);
        const double lam = test::uniform(rng, -2, 2), mu = test::uniform(rng, -2, 2);
        const SecondForm bn = second_form(j, lam * fr.n_s + mu * fr.n_t);
        const double expected =
            (lam * lam * t1.b11 * t1.b22 - mu * mu * t2.b12 * t2.b12) / gf.det();
        CHECK(nu_gauss(gf, bn) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("principal curvatures") {
    Rng rng(137);
    const FirstForm g = test::random_first_form(rng);
    const SecondForm three_g{3 * g.g11, 3 * g.g12, 3 * g.g22, Vec4::Zero()};
    // Double roots lose half the digits to the discriminant cancellation.
    const auto [ka, kb] = principal_curvatures(g, three_g);
    CHECK(ka == doctest::Approx(3.0).epsilon(1e-7));
    CHECK(kb == doctest::Approx(3.0).epsilon(1e-7));

    const SurfaceChart chart = make_example_1_1();
    const Jet2 j = eval_jet2(chart, 0.4, -0.3);
    const FirstForm g11 = first_form(j);
    const SecondForm b = second_form(j, Vec4(0, 0, std::sinh(0.4), std::cosh(0.4)));
    const auto [k1, k2] = principal_curvatures(g11, b);
    CHECK(k1 == doctest::Approx(-1.0 / g11.g11).epsilon(1e-12));
    CHECK(k2 == doctest::Approx(0.0).epsilon(1e-12));

    for (int i = 0; i < 200; ++i) {
        const FirstForm gg = test::random_first_form(rng);
        const SecondForm bb = test::random_second_form(rng);
        const auto [p, q] = principal_curvatures(gg, bb);
        CHECK(p <= q);
        CHECK(std::abs(p * q - nu_gauss(gg, bb)) < 1e-10 * (1 + p * p + q * q));
        CHECK(std::abs(p + q - 2 * nu_mean(gg, bb)) < 1e-10 * (1 + std::abs(p) + std::abs(q)));
    }
}

TEST_CASE("Gauss equation: ambient route equals the frame route") {
    Rng rng(139);
    for (int i = 0; i < 100; ++i) {
        const Jet2 j = test::random_spacelike_jet(rng);
        const FirstForm g = first_form(j);
        const NormalFrame fr = normal_frame(j);
        const double k_frame =
            nu_gauss(g, second_form(j, fr.n_s)) - nu_gauss(g, second_form(j, fr.n_t));
        const double k_ambient = gauss_curvature(j);
        CHECK(std::abs(k_frame - k_ambient) < 1e-8 * (1 + std::abs(k_frame)));
    }
}

TEST_CASE("normal_projection is orthogonal to the tangent plane") {
    Rng rng(149);
    for (int i = 0; i < 100; ++i) {
        const Jet2 j = test::random_spacelike_jet(rng);
        const Vec4 w = test::random_vec4(rng, -3, 3);
        const Vec4 p = normal_projection(j, w);
        const double scale = (1 + w.norm()) * std::max(j.xu.norm(), j.xv.norm());
        CHECK(std::abs(mink_dot(p, j.xu)) < 1e-11 * scale);
        CHECK(std::abs(mink_dot(p, j.xv)) < 1e-11 * scale);
    }
}
