#pragma once

#include "lsl/classify.hpp"
#include "lsl/forms.hpp"
#include "lsl/jet.hpp"
#include "lsl/profile.hpp"

#include <utility>

namespace lsl {

// ---------------------------------------------------------------------------
// Reference surfaces with hand-coded analytic jets.
// ---------------------------------------------------------------------------

/// X(u,v) = (cos u (1+v), sin u (1+v), sinh u, cosh u). Spacelike
/// everywhere; carries exactly one bi-normal field, along (0,0,sinh u,cosh u).
SurfaceChart make_example_1_1(Domain domain = {-1, 1, -1, 1});

/// X(u,v) = (e^{2u} cos v, e^{2u} sin v, e^{-u} cosh v, e^{-u} sinh v),
/// u > 1, v in (0, 2 pi). Carries exactly two bi-normal fields and is not
/// pseudo-umbilic.
SurfaceChart make_example_1_2(Domain domain = {1.1, 2.0, 0.1, 6.2});

/// Orthonormal frame of the normal bundle of make_example_1_2 in closed
/// form (spacelike member first, Minkowski-normalized).
NormalFrame example12_frame_closed_form(double u, double v);

// ---------------------------------------------------------------------------
// Ruled surfaces X(u,v) = alpha(u) + v W(u), u the curve parameter.
// Profile invariants: |alpha'| = |W| = 1 (spacelike), <alpha',W> = 0 and
// <W',W'> > 0; checked at samples, InvalidProfile on failure.
// ---------------------------------------------------------------------------

SurfaceChart make_ruled(CurveFn alpha, CurveFn director, Domain domain,
                        std::string name = "ruled");

/// Numerical rank of [alpha'(t); W(t); W'(t)] is < 3 under tau (smallest to
/// largest singular value ratio).
bool ruled_dependency_test(const CurveFn& alpha, const CurveFn& director, double t,
                           double tau = 1e-10);

/// Unit timelike normalization of wedge3(alpha', W, W') — the unique
/// bi-normal direction at an independent ruling. Throws DegeneratePlane on
/// dependent data.
Vec4 ruled_binormal_closed_form(const CurveFn& alpha, const CurveFn& director, double t);

/// Ruled template with independent ruling data everywhere:
/// alpha in the 3-4 plane with boost angle xi0 + xi1 t (unit speed), the
/// director rotating in the 1-2 plane with angle phi0 + phi1 t (phi1 != 0).
struct RuledHelicalParams {
    double phi0 = 0.3, phi1 = 1.7, xi0 = 0.2, xi1 = 0.9;
};
std::pair<CurveFn, CurveFn> ruled_helical_curves(const RuledHelicalParams& p);
SurfaceChart make_ruled_helical(const RuledHelicalParams& p = {}, Domain domain = {0, 1, -1, 1});

/// Ruled template with W' parallel to alpha' everywhere (dependent ruling
/// data): a circle of angular rate omega with the director tilted by a
/// fixed angle toward a spacelike boost direction. The surface lies in a
/// spacelike hyperplane and is developable.
struct RuledDevelopableParams {
    double omega = 1.0, tilt = 0.6, xi0 = 0.4;
};
std::pair<CurveFn, CurveFn> ruled_developable_curves(const RuledDevelopableParams& p);
SurfaceChart make_ruled_developable(const RuledDevelopableParams& p = {});

// ---------------------------------------------------------------------------
// Revolution surfaces of hyperbolic type:
// X(u,v) = (f(u), g(u), rho(u) sinh v, rho(u) cosh v).
// Invariants: rho > 0, f'^2 + g'^2 - rho'^2 = 1 and f', g', rho' != 0 at
// samples.
// ---------------------------------------------------------------------------

SurfaceChart make_rh(ProfileFn f, ProfileFn g, ProfileFn rho, Domain domain = {0.2, 1.2, -1, 1},
                     std::string name = "rh");

/// The two bi-normal fields and the umbilic combination in closed form.
/// b1 is oriented so that the shape operators along (b1, b2) are
/// diag(0, f''g' - f'g'') and diag(f'g'' - f''g', 0); nu_umbilic = b1 - b2.
struct RhFields {
    Vec4 b1, b2, nu_umbilic;
};
RhFields rh_closed_form_fields(const ProfileFn& f, const ProfileFn& g, const ProfileFn& rho,
                               double u, double v);

/// Unit-speed profile family f' = cosh(m u) cos(k u), g' = cosh(m u) sin(k u),
/// rho' = sinh(m u), integrated in closed form. Generic for m, k != 0.
struct RhTrigParams {
    double m = 1.0, k = 1.0, g0 = 2.0, r0 = 0.5;
};
std::array<ProfileFn, 3> rh_trig_profiles(const RhTrigParams& p);
SurfaceChart make_rh_trig(const RhTrigParams& p = {}, Domain domain = {0.2, 1.2, -1, 1});

// ---------------------------------------------------------------------------
// Rotational surfaces of type I:
// X(u,v) = (f cos(alpha v), f sin(alpha v), g cosh(beta v), g sinh(beta v)),
// alpha, beta > 0 constants, alpha^2 f^2 - beta^2 g^2 > 0.
// ---------------------------------------------------------------------------

SurfaceChart make_rs(ProfileFn f, ProfileFn g, double alpha, double beta,
                     Domain domain = {1.1, 2.0, 0.1, 6.2}, std::string name = "rs");

/// The orthonormal frame {n1 (spacelike), n2 (timelike)} in closed form.
NormalFrame rs_frame_closed_form(const ProfileFn& f, const ProfileFn& g, double alpha,
                                 double beta, double u, double v);

/// Second-form coefficient tables along (n1, n2):
/// b^{n1} = diag-free ((f''g' - f'g'')/w1, 0, -(beta^2 f'g + alpha^2 fg')/w1),
/// b^{n2} = (0, alpha beta (f'g - fg')/w2, 0).
std::pair<SecondForm, SecondForm> rs_second_forms_closed_form(const ProfileFn& f,
                                                              const ProfileFn& g, double alpha,
                                                              double beta, double u, double v);

/// Expected census kind from the sign conditions on
/// E1 = -(f''g' - f'g'')(beta^2 f'g + alpha^2 fg') and
/// E2 = alpha beta (f'g - g'f): both ~ 0 -> All; E2 ~ 0 or E1 ~ 0 -> One;
/// E1 < 0 -> Zero; E1 > 0 -> Two.
CensusKind rs_census_predicate(const ProfileFn& f, const ProfileFn& g, double alpha, double beta,
                               double u, double tau = 1e-9);

}  // namespace lsl
