#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bohrlab/extremal.hpp"
#include "bohrlab/functionals.hpp"
#include "bohrlab/radii.hpp"

namespace bohrlab {

struct Witness {
    std::string function;
    double r = 0.0;
    double theta = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Outcome of sweeping one theorem's inequality over a corpus. max_violation
/// is the max over the grid of lhs - rhs - tail_budget, so truncation can
/// never fake a counterexample; passed means max_violation <= tol.
struct VerificationReport {
    std::string theorem_id;
    std::string function_label;
    std::string r_grid;
    int theta_samples = 0;
    double max_violation = 0.0;
    std::optional<Witness> witness;
    bool passed = false;
    double elapsed_ms = 0.0;
    std::vector<std::string> notes;
};

struct CheckOptions {
    int samples = 200;          // seeded class samples on top of the extremal grid
    std::uint64_t seed = 7;
    int r_points = 50;
    int theta_samples = 256;
    double tol = 1e-9;
    double margin = 1e-6;       // grids stop at radius - margin
};

/// every theorem id the harness knows, in suite order
const std::vector<std::string>& theorem_ids();
bool theorem_known(const std::string& id);

/// extremal parameter grid plus `samples` seeded class members, matched to the
/// theorem's class and lacunarity preconditions
std::vector<FunctionSpec> standard_corpus(const std::string& theorem_id, int samples,
                                          std::uint64_t seed);

VerificationReport check_theorem(const std::string& theorem_id,
                                 const std::vector<FunctionSpec>& corpus,
                                 const CheckOptions& opts = {});
VerificationReport check_theorem(const std::string& theorem_id, const CheckOptions& opts = {});

enum class SharpnessKind {
    none,           // no sharpness clause
    exceed,         // extremal family beats the bound just past the radius
    equality,       // bound attained (no radius to cross)
    informational,  // recorded but never asserted (open optimality)
};

struct SharpnessResult {
    SharpnessKind kind = SharpnessKind::none;
    bool found = false;
    Witness witness;
    std::string note;
};

SharpnessKind sharpness_kind(const std::string& theorem_id);

/// Evaluate the theorem's extremal schedule at radius + delta (exceed kind) or
/// its designated equality (equality kind). Informational kinds always report
/// without asserting. not-found is an outcome, not an error.
SharpnessResult sharpness_probe(const std::string& theorem_id, double delta = 0.01,
                                int theta_samples = 256);

enum class EqualityCase {
    lemmaG_phi,
    lemma1_psi,
    lemma2_A_closed_form,
    corollary4_mobius,
    remark2i_phi_zk,
    eq35_psi,
};

struct EqualityParams {
    double a = 0.5;
    double r = 0.3;
    int k = 1;
    int p = 1;
    int m = 0;
    double power = 1.0;  // exponent on |a_0| where the identity carries one
    std::optional<WeightSequence> weights;
};

/// |lhs - rhs| of the designated equality; must sit within tail budget + 1e-9
double equality_check(EqualityCase c, const EqualityParams& params);

/// informational scan: largest grid r at which the alternating refined bound
/// still holds across the corpus (open problem; never asserted)
struct Problem2Probe {
    double largest_r = 0.0;
    std::string note;
};
Problem2Probe problem2_probe(int samples = 200, std::uint64_t seed = 7, int r_points = 50,
                             int theta_samples = 256);

/// flat JSON of the report fields; elapsed can be zeroed for bit-stable output
std::string to_json(const VerificationReport& report, bool include_elapsed = true);

}  // namespace bohrlab
