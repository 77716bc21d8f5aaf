#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lsl {

using Vec4 = Eigen::Vector4d;
using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;

inline constexpr const char* kToolVersion = "0.1.0";

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfDomain : Error {
    using Error::Error;
};
struct NotSpacelike : Error {
    using Error::Error;
};
struct NotNormal : Error {
    using Error::Error;
};
struct DegeneratePlane : Error {
    using Error::Error;
};
struct NotBinormal : Error {
    using Error::Error;
};
struct InvalidProfile : Error {
    using Error::Error;
};
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};
struct ValidationError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

/// Tolerances used across the classification pipeline. All values are
/// relative to a locally computed scale unless noted otherwise.
struct Tolerances {
    double causal = 1e-9;      // causal-character dead band
    double metric = 1e-10;     // positive-definiteness of the first form
    double normal = 1e-8;      // normality precondition of second forms
    double root = 1e-10;       // coefficientwise "quadratic vanishes" threshold
    double disc = 1e-9;        // discriminant band for the double-root verdict
    double near_disc = 1e-6;   // reporting band for "near double root"
    double umbilic = 1e-8;     // proportionality residual b ~ k g
    double flat = 1e-9;        // second forms / witness curvature treated as zero
    double semi = 1e-8;        // normal-curvature vanishing
    double mean = 1e-9;        // maximality test on mean curvatures
    double align_min_dot = 0.8;  // field continuity between neighbouring samples
};

}  // namespace lsl
