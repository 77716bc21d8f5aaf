#pragma once

#include "lsl/forms.hpp"
#include "lsl/jet.hpp"
#include "lsl/types.hpp"

#include <optional>
#include <vector>

namespace lsl {

/// Projective coordinates of a normal line in the frame {n_s, n_t},
/// normalized to the unit circle with the first nonzero coordinate
/// positive. Re-canonicalizing is idempotent.
struct NormalDirection {
    double lambda = 1.0;
    double mu = 0.0;

    static NormalDirection canonical(double l, double m);
    Vec4 ambient(const NormalFrame& frame) const { return lambda * frame.n_s + mu * frame.n_t; }
};

enum class CensusKind { Zero, One, Two, All };

const char* to_string(CensusKind k);

/// Root structure of Q(lambda, mu) = det(lambda b_s + mu b_t): the normal
/// directions along which the associated Gauss curvature vanishes.
struct BinormalCensus {
    CensusKind kind = CensusKind::Zero;
    std::vector<NormalDirection> roots;  // 0, 1 or 2 entries
    double a = 0, b = 0, c = 0;          // Q coefficients
    double discriminant = 0;             // b^2 - 4ac
    bool near_double = false;            // |disc| < near_disc * s^2
};

/// A tangent direction in the kernel of a shape operator, in chart
/// coordinates. whole_plane marks a vanishing second form.
struct AsymptoticDirection {
    bool whole_plane = false;
    Vec2 coeffs = Vec2::Zero();  // unit g-norm when not whole_plane
};

struct PseudoUmbilicWitness {
    NormalDirection direction;
    double k = 0;  // common principal curvature along the witness
};

/// Curvature ellipse in frame coordinates (n_s first, n_t second):
/// theta -> center + cos(2 theta) * axis_p + sin(2 theta) * axis_q.
struct CurvatureEllipse {
    Vec2 center, axis_p, axis_q;
};

struct PointClassification {
    double u = 0, v = 0;
    FirstForm g{1, 0, 1};
    NormalFrame frame;
    SecondForm b_s{0, 0, 0, Vec4::Zero()};
    SecondForm b_t{0, 0, 0, Vec4::Zero()};
    BinormalCensus census;
    std::vector<AsymptoticDirection> asymptotics;  // parallel to census.roots
    std::vector<double> root_curvatures;           // K along each root
    bool is_umbilic_point = false;
    std::optional<PseudoUmbilicWitness> pseudo_umbilic;
    bool is_semi_umbilic = false;
    bool is_flat_witnessed = false;  // witness exists with k ~ 0
    bool is_flat_point = false;      // both second forms ~ 0
    bool is_maximal = false;
    double normal_curvature = 0;
    Vec4 mean_curvature = Vec4::Zero();
    bool theorem_consistent = true;  // One <=> umbilic under a non-flat witness
};

/// Coefficients (A, B, C) of Q(lambda, mu) = det(lambda b1 + mu b2).
/// The curvature along lambda n_s + mu n_t is Q(lambda, mu) / det g.
std::array<double, 3> binormal_quadratic(const SecondForm& b1, const SecondForm& b2,
                                         const FirstForm& g);

/// Projective root census of A l^2 + B l m + C m^2. tau_root is compared
/// against max(|A|,|B|,|C|) directly (callers scale it); tau_disc is
/// relative to that maximum squared.
BinormalCensus solve_binormals(double A, double B, double C, double tau_root,
                               double tau_disc = 1e-9, double near_disc = 1e-6);

/// Kernel direction of g^{-1} b; requires |det(g^{-1} b)| < tau (the field
/// is bi-normal there), else throws NotBinormal.
AsymptoticDirection asymptotic_direction(const FirstForm& g, const SecondForm& b, double tau);

/// True iff both frame second forms are proportional to g (every normal
/// direction is umbilic, by linearity).
bool umbilic_point_test(const FirstForm& g, const SecondForm& b_s, const SecondForm& b_t,
                        double tau = 1e-8);

/// Seeks (lambda, mu) != 0 with lambda b_s + mu b_t = k g by testing linear
/// dependence of the g-traceless parts. Absent when none exists.
std::optional<PseudoUmbilicWitness> pseudo_umbilic_solve(const FirstForm& g,
                                                         const SecondForm& b_s,
                                                         const SecondForm& b_t,
                                                         double tau = 1e-8);

CurvatureEllipse curvature_ellipse(const Jet2& jet, const NormalFrame& frame);

/// Signed parallelogram measure 2 (P1 Q2 - P2 Q1) of the ellipse axes; its
/// vanishing is exactly ellipse degeneracy and is frame-invariant.
double normal_curvature(const Vec2& axis_p, const Vec2& axis_q);

bool semi_umbilic_test(const Vec2& axis_p, const Vec2& axis_q, double tau = 1e-8);

/// True iff the mean curvature vanishes along both frame fields (hence all).
bool maximal_test(const FirstForm& g, const SecondForm& b_s, const SecondForm& b_t,
                  double tau = 1e-9);

/// Full pointwise decision: frame, both second forms, root census,
/// asymptotics and all umbilicity/flatness flags.
PointClassification classify_point(const Jet2& jet, const Tolerances& tol = {});

}  // namespace lsl
