#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "bohrlab/series.hpp"

namespace bohrlab {

// The generator families. phi(a) = (a-z)/(1-az) is the bounded Moebius
// extremal, psi(a) = a - 2(1-a) z/(1-z) its Re f < 1 counterpart; the
// lacunary family is z^m (a +/- z^p)/(1 +/- a z^p).
struct PhiSpec { double a = 0.0; };
struct PsiSpec { double a = 0.0; };
struct LacunaryMobiusSpec {
    double a = 0.0;
    int p = 1;
    int m = 0;
    int sign = +1;  // +1 or -1
};
struct MonomialSpec { int k = 0; };
struct BlaschkeSpec {
    std::vector<Complex> zeros;       // all strictly inside the unit disk
    Complex rotation{1.0, 0.0};       // unimodular
    double scale = 1.0;               // extra contraction, e.g. 0.99
};
struct HerglotzSpec {
    double a0 = 0.0;
    std::vector<double> weights;      // nonnegative, summing to 1
    std::vector<double> angles;
};

struct FunctionSpec {
    std::variant<PhiSpec, PsiSpec, LacunaryMobiusSpec, MonomialSpec, BlaschkeSpec, HerglotzSpec> kind;
    std::size_t target_order = 256;
    std::string display;  // label override; sampled specs carry their seed here
};

enum class SampleClass { B, P };

/// Expand the spec into coefficients with a valid tail bound.
TruncatedSeries realize(const FunctionSpec& spec);

/// Canonical mini-language string: phi:a=0.5, lac:a=0.5,p=2,m=1,sign=+, ...
std::string label(const FunctionSpec& spec);

/// Parse the mini-language accepted by the CLI. Throws std::invalid_argument.
FunctionSpec parse_function_spec(const std::string& text);

/// Deterministic random member of class B (Blaschke product, contracted by
/// `scale`) or class P (Herglotz combination). complexity in [1, 8].
FunctionSpec sample_spec(SampleClass cls, std::uint64_t seed, int complexity,
                         double scale = 0.99);
TruncatedSeries sample_class(SampleClass cls, std::uint64_t seed, int complexity,
                             double scale = 0.99);

/// Smallest order whose geometric tail C (rho r)^(N+1) / (1 - rho r) is below
/// tol at radius r_max (capped at `cap`).
std::size_t order_for_tail(double magnitude, double ratio, double r_max, double tol,
                           std::size_t cap = 8192);

/// target_order adjusted so the family's tail at r_max is below 1e-12 where
/// the family allows it.
FunctionSpec with_order_for(FunctionSpec spec, double r_max);

namespace detail {
/// (1 - x^p) / (1 - x) with the limit value p at x = 1.
double pow_diff_ratio(double x, double p);
}  // namespace detail

}  // namespace bohrlab
