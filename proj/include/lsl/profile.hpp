#pragma once

#include "lsl/types.hpp"

#include <functional>

namespace lsl {

/// Value and first two derivatives of a scalar function at a point.
struct ScalarJet2 {
    double f = 0, df = 0, ddf = 0;
};

/// A C^2 scalar profile function of one variable.
using ProfileFn = std::function<ScalarJet2(double)>;

/// Value and first two derivatives of a curve in R^4_1.
struct CurveJet2 {
    Vec4 p = Vec4::Zero(), d1 = Vec4::Zero(), d2 = Vec4::Zero();
};

using CurveFn = std::function<CurveJet2(double)>;

inline ProfileFn constant_profile(double c) {
    return [c](double) { return ScalarJet2{c, 0.0, 0.0}; };
}

}  // namespace lsl
