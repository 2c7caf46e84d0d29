#include "bohrlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bohrlab {

namespace {

void validate_tail(const TailBound& t) {
    if (!(t.magnitude >= 0.0) || !std::isfinite(t.magnitude))
        throw std::invalid_argument("TailBound magnitude must be finite and >= 0");
    if (!(t.ratio >= 0.0 && t.ratio <= 1.0))
        throw std::invalid_argument("TailBound ratio must lie in [0, 1]");
}

// Fold coefficients dropped by truncation into the geometric envelope so the
// producer contract |a_n| <= C rho^n keeps holding for every n > n_out.
TailBound cover_dropped(const std::vector<Complex>& full, std::size_t n_out, TailBound t) {
    bool any = false;
    for (std::size_t n = n_out + 1; n < full.size(); ++n)
        if (std::abs(full[n]) != 0.0) any = true;
    if (!any) return t;
    if (t.ratio == 0.0) t.ratio = 0.5;
    for (std::size_t n = n_out + 1; n < full.size(); ++n) {
        const double c = std::abs(full[n]);
        if (c == 0.0) continue;
        t.magnitude = std::max(t.magnitude, c / std::pow(t.ratio, static_cast<double>(n)));
    }
    return t;
}

std::vector<Complex> truncated(const std::vector<Complex>& full, std::size_t n_out) {
    std::vector<Complex> out(n_out + 1, Complex{0.0, 0.0});
    const std::size_t upto = std::min(full.size(), n_out + 1);
    std::copy(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(upto), out.begin());
    return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs, TailBound tail)
    : coeffs_(std::move(coeffs)), tail_(tail) {
    if (coeffs_.empty())
        throw std::invalid_argument("TruncatedSeries needs at least the constant term");
    for (const Complex& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("TruncatedSeries coefficients must be finite");
    validate_tail(tail_);
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
    return TruncatedSeries(std::vector<Complex>(order + 1, Complex{0.0, 0.0}), TailBound{});
}

TruncatedSeries TruncatedSeries::drop_constant() const {
    std::vector<Complex> c = coeffs_;
    c[0] = Complex{0.0, 0.0};
    return TruncatedSeries(std::move(c), tail_);
}

Complex eval(const TruncatedSeries& s, Complex z) {
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("eval: |z| must be < 1");
    const auto& a = s.coeffs();
    Complex acc = a.back();
    for (std::size_t i = a.size() - 1; i-- > 0;) acc = acc * z + a[i];
    return acc;
}

double tail_error(const TruncatedSeries& s, double r) {
    if (!(r >= 0.0 && r < 1.0))
        throw std::domain_error("tail_error: r must lie in [0, 1)");
    const TailBound& t = s.tail();
    const double x = t.ratio * r;
    if (!(x < 1.0))
        throw std::domain_error("tail_error: ratio*r must be < 1");
    if (t.magnitude == 0.0) return 0.0;
    return t.magnitude * std::pow(x, static_cast<double>(s.order() + 1)) / (1.0 - x);
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n_out) {
    std::vector<Complex> full(std::max(a.order(), b.order()) + 1, Complex{0.0, 0.0});
    for (std::size_t n = 0; n < full.size(); ++n) full[n] = a.coeff(n) + b.coeff(n);
    TailBound t{a.tail().magnitude + b.tail().magnitude,
                std::max(a.tail().ratio, b.tail().ratio)};
    return TruncatedSeries(truncated(full, n_out), cover_dropped(full, n_out, t));
}

TruncatedSeries scale(const TruncatedSeries& a, Complex factor, std::size_t n_out) {
    std::vector<Complex> full(a.coeffs());
    for (Complex& c : full) c *= factor;
    TailBound t{a.tail().magnitude * std::abs(factor), a.tail().ratio};
    return TruncatedSeries(truncated(full, n_out), cover_dropped(full, n_out, t));
}

TruncatedSeries cauchy_product(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n_out) {
    std::vector<Complex> full(a.order() + b.order() + 1, Complex{0.0, 0.0});
    for (std::size_t i = 0; i <= a.order(); ++i) {
        const Complex ai = a.coeff(i);
        if (ai == Complex{0.0, 0.0}) continue;
        for (std::size_t j = 0; j <= b.order(); ++j) full[i + j] += ai * b.coeff(j);
    }
    TailBound t{a.tail().magnitude * b.tail().magnitude * static_cast<double>(n_out + 2),
                std::max(a.tail().ratio, b.tail().ratio)};
    return TruncatedSeries(truncated(full, n_out), cover_dropped(full, n_out, t));
}

TruncatedSeries compose_lacunary(const TruncatedSeries& g, int p, int m) {
    if (p < 1) throw std::invalid_argument("compose_lacunary: p must be >= 1");
    if (m < 0) throw std::invalid_argument("compose_lacunary: m must be >= 0");
    const std::size_t order = static_cast<std::size_t>(m) + static_cast<std::size_t>(p) * g.order();
    std::vector<Complex> out(order + 1, Complex{0.0, 0.0});
    for (std::size_t n = 0; n <= g.order(); ++n)
        out[static_cast<std::size_t>(m) + static_cast<std::size_t>(p) * n] = g.coeff(n);

    const TailBound& gt = g.tail();
    TailBound t{};
    if (gt.magnitude > 0.0 && gt.ratio > 0.0) {
        t.ratio = std::pow(gt.ratio, 1.0 / p);
        t.magnitude = gt.magnitude * std::pow(gt.ratio, -static_cast<double>(m) / p);
    } else {
        t = gt;  // zero tail or ratio 0: nothing survives beyond the stored part
    }
    return TruncatedSeries(std::move(out), t);
}

}  // namespace bohrlab
