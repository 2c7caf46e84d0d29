#pragma once

#include <cstddef>
#include <stdexcept>

#include "bohrlab/series.hpp"
#include "bohrlab/weights.hpp"

namespace bohrlab {

/// Raised when a lacunary operation meets a coefficient off the n*p+m grid.
class SupportViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when monomial weight parities match neither alternating-series case.
class ParityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The basic coefficient statistics of f at radius r:
///   M_f  = |a_0| + sum |a_n| r^n          (majorant series)
///   A_f  = |a_0| + sum (-1)^n |a_n| r^n   (alternating series)
///   norm_sq = |a_0|^2 + sum |a_n|^2 r^2n
///   area_ratio = sum n |a_n|^2 r^2n       (image area over pi)
/// All partial sums; tail_budget bounds the truncated remainders additively.
struct SeriesStats {
    double M_f = 0.0;
    double M_f0 = 0.0;
    double A_f = 0.0;
    double A_f0 = 0.0;
    double norm_sq = 0.0;
    double norm0_sq = 0.0;
    double area_ratio = 0.0;
    double tail_budget = 0.0;
};

SeriesStats series_stats(const TruncatedSeries& f, double r);

/// sum_{n >= n_start} |a_n| zeta_n(r) over the stored coefficients
double weighted_sum(const TruncatedSeries& f, const WeightSequence& w,
                    std::size_t n_start, double r);

/// crude truncation cover for weighted_sum: tail of sum |a_n| against the
/// family's envelope (zeta_n(r) <= r^n for the built-in kinds; decreasing
/// monomial families use the sup weight 1)
double weighted_sum_budget(const TruncatedSeries& f, const WeightSequence& w, double r);

/// G(f_0, zeta, r) = sum |a_n|^2 (zeta_2n(r)/(1+|a_0|) + Phi_{2n+1}(r))
double refinement_G(const TruncatedSeries& f, const WeightSequence& w, double r);

struct LemmaGSides {
    double lhs = 0.0;  // |a_0|^p zeta_0 + B_1 + G
    double rhs = 0.0;  // |a_0|^p zeta_0 + (1 - |a_0|^2) Phi_1
};
LemmaGSides lemmaG_sides(const TruncatedSeries& f, const WeightSequence& w, double p, double r);

/// a_0^p zeta_0(r) + sum_{n>=1} |a_n| zeta_n(r); requires real a_0 in [0, 1)
double bohr_power(const TruncatedSeries& f, const WeightSequence& w, double p, double r);

/// bohr_power plus max over the theta grid of |f((r e^{i theta})^m) - a_0|^q
double rogosinski_E(const TruncatedSeries& f, const WeightSequence& w, double p, double q,
                    int m, double r, int theta_samples);

/// a_0 + sum |a_n| r^n + (1/(1+a_0) + r/(1-r)) sum |a_n|^2 r^2n + lambda * area_ratio
double d_lambda(const TruncatedSeries& f, double lambda, double r);

/// moduli of the lacunary subsequence: |a_{n p + m}| for n = 0, 1, ...;
/// throws SupportViolation when an off-grid coefficient exceeds 1e-14
std::vector<double> lacunary_moduli(const TruncatedSeries& f, int p, int m);

/// A(r) = sum_{n>=1} |a_{2np+m}| r^2np
///        + (1/(1+|a_m|) + r^2p/(1-r^2p)) sum_{n>=1} |a_{np+m}|^2 r^2np
double lemma2_A(const TruncatedSeries& f, int p, int m, double r);

/// max_theta |f(r e^{i theta})| + r^m A(r)
double lemma2_lhs(const TruncatedSeries& f, int p, int m, double r, int theta_samples);

/// The two one-parity estimates and their sum form, with the weights taken at
/// argument r^p:
///   (4.1)  even steps plus the squared refinement  vs  |a_m| zeta_0 + (1-|a_m|^2) sum zeta_2n
///   (4.2)  odd steps plus the squared tail         vs  sum zeta_{2n-1}
///   (4.4)  all steps plus the squared refinement   vs  (1-|a_m|^2) sum_{n>=1} zeta_n
struct Lemma4Sides {
    double lhs41 = 0.0, rhs41 = 0.0;
    double lhs42 = 0.0, rhs42 = 0.0;
    double lhs44 = 0.0, rhs44 = 0.0;
};
Lemma4Sides lemma4_sides(const TruncatedSeries& f, const WeightSequence& w, int p, int m, double r);

/// Alternating-series functionals over a monomial family. The sign factors
/// are the constant parity of each case; mixed parities throw ParityError.
struct AltRefined {
    double A_star = 0.0;
    double B_star = 0.0;
    double C_star = 0.0;
    double D_star = 0.0;
    bool case_I = false;  // true: split parities (C* applies); false: equal parities (D*)
};
AltRefined alt_refined(const TruncatedSeries& f, const WeightSequence& w, int p, int m, double r);

/// |A*_f + (-1)^(tau) zeta*_m(r) sum |a_{np+m}|^2 (...)|, the first-coefficient
/// extension of the equal-parity case
double corollary5_lhs(const TruncatedSeries& f, const WeightSequence& w, int p, int m, double r);

enum class Theorem6Variant { abs_f, fixed_term };

/// E_{f_m}(r) = r^m [ sum (-1)^(np+m) |a_{np+m}| r^np
///                    + (-1)^m (1/(1+|a_m|) + r^2p/(1-r^2p)) sum |a_{np+m}|^2 r^2np ]
double theorem6_E(const TruncatedSeries& f, int p, int m, double r);

/// abs_f: max_theta | |f(r e^{i theta})| + E_{f_m}(r) |
/// fixed_term: | r^(m+p)/(1+r^p) + A_{f_m}(r) + r^m (...) sum |a_{np+m}|^2 r^2np |
double theorem6_lhs(const TruncatedSeries& f, int p, int m, double r, int theta_samples,
                    Theorem6Variant variant);

/// min and max of |f| over theta_samples equispaced points of |z| = r
/// (grid maxima are lower bounds of the circle sup; theta = 0 is included)
struct CircleRange {
    double min_abs = 0.0;
    double max_abs = 0.0;
    double theta_at_min = 0.0;
    double theta_at_max = 0.0;
};
CircleRange circle_abs_range(const TruncatedSeries& f, double r, int theta_samples);

/// max over the theta grid of |f(z) - a_0|, with its angle
struct DevMax {
    double value = 0.0;
    double theta = 0.0;
};
DevMax circle_max_dev(const TruncatedSeries& f, double r, int theta_samples);

/// tail covers used to budget the quadratic pieces
double tail_error_sq(const TruncatedSeries& f, double r);    // sum_{n>N} |a_n|^2 r^2n
double tail_error_area(const TruncatedSeries& f, double r);  // sum_{n>N} n |a_n|^2 r^2n

}  // namespace bohrlab
