#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace bohrlab {

using Complex = std::complex<double>;

/// Geometric envelope for the coefficients beyond the stored truncation:
/// every true coefficient with index n > order satisfies
///     |a_n| <= magnitude * ratio^n.
/// ratio == 1 is admitted for families with non-decaying coefficients
/// (constant-modulus tails); the evaluated tail stays finite for r < 1.
struct TailBound {
    double magnitude = 0.0;
    double ratio = 0.0;
};

/// A power series sum a_n z^n held as its first order+1 coefficients plus
/// a TailBound certifying everything that was dropped. Values are immutable
/// after construction and safe to share across threads.
class TruncatedSeries {
public:
    TruncatedSeries(std::vector<Complex> coeffs, TailBound tail);

    /// all-zero series of the given order with a zero tail
    static TruncatedSeries zero(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    /// coefficient a_n; indices past the truncation read as zero
    Complex coeff(std::size_t n) const {
        return n < coeffs_.size() ? coeffs_[n] : Complex{0.0, 0.0};
    }
    const TailBound& tail() const { return tail_; }

    /// same coefficients with the constant term zeroed (the f_0 of f)
    TruncatedSeries drop_constant() const;

private:
    std::vector<Complex> coeffs_;
    TailBound tail_;
};

/// Partial sum at z, |z| < 1. The omitted remainder is bounded by
/// tail_error(s, |z|).
Complex eval(const TruncatedSeries& s, Complex z);

/// Upper bound magnitude*(ratio*r)^(order+1) / (1 - ratio*r) for both
/// |sum_{n>order} a_n z^n| on |z| = r and sum_{n>order} |a_n| r^n.
double tail_error(const TruncatedSeries& s, double r);

/// Coefficientwise sum truncated at n_out. Output tail: magnitudes add,
/// ratios take the max; coefficients dropped by a shorter n_out are folded
/// into the bound.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n_out);

/// Scalar multiple truncated at n_out.
TruncatedSeries scale(const TruncatedSeries& a, Complex factor, std::size_t n_out);

/// Cauchy product truncated at n_out. Output tail uses the crude bound
/// C = C1*C2*(n_out+2), ratio = max(r1, r2).
TruncatedSeries cauchy_product(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n_out);

/// z^m g(z^p): coefficient at n*p+m is g's n-th coefficient, all others
/// zero. The tail bound transforms exactly: C' = C*rho^(-m/p), rho' = rho^(1/p).
TruncatedSeries compose_lacunary(const TruncatedSeries& g, int p, int m);

}  // namespace bohrlab
