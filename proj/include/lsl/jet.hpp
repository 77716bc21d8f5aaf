#pragma once

#include "lsl/types.hpp"

#include <functional>
#include <string>

namespace lsl {

/// Position and all first/second partials of a chart at a parameter point.
struct Jet2 {
    Vec4 x, xu, xv, xuu, xuv, xvv;
    double u = 0.0, v = 0.0;
};

struct Domain {
    double u0, u1, v0, v1;

    bool contains(double u, double v) const;
    double uspan() const { return u1 - u0; }
    double vspan() const { return v1 - v0; }
};

/// An immutable parametric surface with analytic jets. Evaluation is pure.
struct SurfaceChart {
    std::string name;
    std::string family;
    Domain domain;
    std::function<Jet2(double, double)> jet;
};

/// Evaluates the analytic jet; throws OutOfDomain outside the closed
/// parameter rectangle.
Jet2 eval_jet2(const SurfaceChart& chart, double u, double v);

/// Second-order central differences of all derivative slots from position
/// evaluations only. The step is scaled per axis as h*(1+|u|), h*(1+|v|);
/// with h = 1e-4 the agreement with analytic jets is ~1e-6 relative.
/// Requires the stencil (distance 2h) to stay inside the domain.
Jet2 fd_jet2(const SurfaceChart& chart, double u, double v, double h = 1e-4);

/// True iff the tangent plane is positive definite: g11, g22 and
/// g11*g22 - g12^2 all exceed tau relative to the metric scale.
bool check_spacelike(const Jet2& jet, double tau = 1e-10);

/// Chart with every jet slot mapped through a constant linear map. Used to
/// move template surfaces by isometries of R^4_1.
SurfaceChart transform_chart(const Mat4& map, const SurfaceChart& chart, std::string name = "");

/// Chart precomposed with (u,v) -> (cu*u, cv*v); jets pick up the chain-rule
/// factors. The domain is rescaled accordingly.
SurfaceChart reparametrize_chart(const SurfaceChart& chart, double cu, double cv);

}  // namespace lsl
