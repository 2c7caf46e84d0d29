#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "bohrlab/weights.hpp"

namespace bohrlab {

/// Raised when the scanned residual never changes sign on (0, hi].
class NoSignChangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RootResult {
    double value = 0.0;
    double residual = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
};

/// First sign change of g scanning upward from lo + scan_step in steps of
/// scan_step (default range (0, 0.999]), then bisection to tol. A plateau of
/// exact zeros followed by a strict sign counts as a change at its right edge.
RootResult find_minimal_root(const std::function<double(double)>& g, double tol = 1e-12,
                             double scan_step = 1e-3, double lo = 0.0, double hi = 0.999);

/// The catalog of radius equations. Parameters live in RadiusQuery; each id
/// documents its residual g(r) = lhs(r) - rhs(r) in radii.cpp.
enum class RadiusId {
    classical_third,
    theorem1_R1,
    theorem1_Rp,
    lacunary_kp,
    corollary1_r1,
    theorem2_Rpmq,
    theorem3_Rlambda2,
    theorem4_rho,
    theoremD_rstar,
    theoremD_r0,
    lemma2_rpm,
    theorem5_rstar,
    theorem5_Rstar,
    corollary5_rtilde,
    corollary7_Rpm,
    theoremE_radius,
    corollary2_radius,
};

RadiusId radius_id_from_string(const std::string& name);
std::string to_string(RadiusId id);
/// every catalog id, in declaration order
const std::vector<RadiusId>& radius_catalog();

struct RadiusQuery {
    RadiusId id = RadiusId::classical_third;
    double p = 1.0;
    double q = 1.0;
    double lambda = 0.0;
    double a0 = 0.0;
    int m = 0;
    int k = 1;
    std::optional<WeightSequence> weights;
};

/// Minimal positive root of the id's equation. Ids with a closed form return
/// it and cross-check the generic solver against it to 1e-10.
RootResult radius(const RadiusQuery& query, double tol = 1e-12);

/// closed form for the ids that have one, when the parameters allow it
std::optional<double> radius_closed_form(const RadiusQuery& query);

/// quintic used by the area-refined sharpness analysis:
/// -4x^5 + 32x^4 - 82x^3 + 58x^2 + 38x - 42
///   + mu (-4x^4 + 20x^3 - 21x^2 - 20x + 25)
double theorem4_L(double mu, double x);

/// 4 r^3 L^2 - (7r^3 + 3r^2 - 3r + 1) L + 6r^3 - 2r^2 - 6r + 2 at L = lambda
double theoremD_Phi(double lambda, double r);

}  // namespace bohrlab
