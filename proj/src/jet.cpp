#include "lsl/jet.hpp"

#include "lsl/minkowski.hpp"

#include <cmath>
#include <utility>

namespace lsl {

namespace {
// Slack keeps grid endpoints computed in floating point inside the closed
// rectangle.
double slack(double span) { return 1e-12 * (1.0 + std::abs(span)); }
}  // namespace

bool Domain::contains(double u, double v) const {
    return u >= u0 - slack(uspan()) && u <= u1 + slack(uspan()) && v >= v0 - slack(vspan()) &&
           v <= v1 + slack(vspan());
}

Jet2 eval_jet2(const SurfaceChart& chart, double u, double v) {
    if (!chart.domain.contains(u, v))
        throw OutOfDomain("eval_jet2: (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") outside domain of " + chart.name);
    return chart.jet(u, v);
}

Jet2 fd_jet2(const SurfaceChart& chart, double u, double v, double h) {
    const double hu = h * (1.0 + std::abs(u));
    const double hv = h * (1.0 + std::abs(v));
    const Domain& d = chart.domain;
    if (u - 2 * hu < d.u0 - slack(d.uspan()) || u + 2 * hu > d.u1 + slack(d.uspan()) ||
        v - 2 * hv < d.v0 - slack(d.vspan()) || v + 2 * hv > d.v1 + slack(d.vspan()))
        throw OutOfDomain("fd_jet2: stencil leaves the domain of " + chart.name);

    auto pos = [&](double uu, double vv) { return chart.jet(uu, vv).x; };

    Jet2 out;
    out.u = u;
    out.v = v;
    out.x = pos(u, v);
    out.xu = (pos(u + hu, v) - pos(u - hu, v)) / (2 * hu);
    out.xv = (pos(u, v + hv) - pos(u, v - hv)) / (2 * hv);
    out.xuu = (pos(u + hu, v) - 2 * out.x + pos(u - hu, v)) / (hu * hu);
    out.xvv = (pos(u, v + hv) - 2 * out.x + pos(u, v - hv)) / (hv * hv);
    out.xuv = (pos(u + hu, v + hv) - pos(u + hu, v - hv) - pos(u - hu, v + hv) +
               pos(u - hu, v - hv)) /
              (4 * hu * hv);
    return out;
}

bool check_spacelike(const Jet2& jet, double tau) {
    const double g11 = mink_dot(jet.xu, jet.xu);
    const double g12 = mink_dot(jet.xu, jet.xv);
    const double g22 = mink_dot(jet.xv, jet.xv);
    const double s = std::max({std::abs(g11), std::abs(g12), std::abs(g22)});
    return g11 > tau * s && g22 > tau * s && g11 * g22 - g12 * g12 > tau * s * s;
}

SurfaceChart transform_chart(const Mat4& map, const SurfaceChart& chart, std::string name) {
    SurfaceChart out;
    out.name = name.empty() ? chart.name + " (transformed)" : std::move(name);
    out.family = chart.family;
    out.domain = chart.domain;
    out.jet = [map, base = chart.jet](double u, double v) {
        Jet2 j = base(u, v);
        j.x = map * j.x;
        j.xu = map * j.xu;
        j.xv = map * j.xv;
        j.xuu = map * j.xuu;
        j.xuv = map * j.xuv;
        j.xvv = map * j.xvv;
        return j;
    };
    return out;
}

SurfaceChart reparametrize_chart(const SurfaceChart& chart, double cu, double cv) {
    SurfaceChart out;
    out.name = chart.name + " (reparametrized)";
    out.family = chart.family;
    out.domain = {chart.domain.u0 / cu, chart.domain.u1 / cu, chart.domain.v0 / cv,
                  chart.domain.v1 / cv};
    if (out.domain.u0 > out.domain.u1) std::swap(out.domain.u0, out.domain.u1);
    if (out.domain.v0 > out.domain.v1) std::swap(out.domain.v0, out.domain.v1);
    out.jet = [cu, cv, base = chart.jet](double u, double v) {
        Jet2 j = base(cu * u, cv * v);
        j.u = u;
        j.v = v;
        j.xu *= cu;
        j.xv *= cv;
        j.xuu *= cu * cu;
        j.xuv *= cu * cv;
        j.xvv *= cv * cv;
        return j;
    };
    return out;
}

}  // namespace lsl
