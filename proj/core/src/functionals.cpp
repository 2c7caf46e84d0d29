#include "bohrlab/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace bohrlab {

namespace {

constexpr double kSupportTol = 1e-14;

void check_radius(double r) {
    if (!(r >= 0.0 && r < 1.0))
        throw std::domain_error("functionals: r must lie in [0, 1)");
}

void check_theta(int samples) {
    if (samples < 1) throw std::domain_error("functionals: theta_samples must be >= 1");
}

// real a_0 in [0, 1); the power-weighted sums are only defined there
double real_a0(const TruncatedSeries& f) {
    const Complex a0 = f.coeff(0);
    if (std::abs(a0.imag()) > 1e-12 || a0.real() < 0.0 || a0.real() >= 1.0)
        throw std::domain_error("functionals: a_0 must be real in [0, 1)");
    return a0.real();
}

// finite monomial families read as zero past the table inside functional sums
double zeta_z(const WeightSequence& w, std::size_t n, double r) {
    if (w.is_monomial() && n >= w.monomial_size()) return 0.0;
    return zeta(w, n, r);
}

double phi_parity_z(const WeightSequence& w, std::size_t N, Parity parity, double r) {
    if (w.is_monomial() && N >= w.monomial_size()) return 0.0;
    return phi_parity(w, N, parity, r);
}

double phi_z(const WeightSequence& w, std::size_t N, double r) {
    if (w.is_monomial() && N >= w.monomial_size()) return 0.0;
    return phi(w, N, r);
}

}  // namespace

SeriesStats series_stats(const TruncatedSeries& f, double r) {
    check_radius(r);
    SeriesStats st;
    const double a0 = std::abs(f.coeff(0));
    double pw = 1.0;
    for (std::size_t n = 1; n <= f.order(); ++n) {
        pw *= r;
        const double an = std::abs(f.coeff(n));
        if (an == 0.0) continue;
        const double t = an * pw;
        st.M_f0 += t;
        st.A_f0 += (n % 2 == 0 ? t : -t);
        const double t2 = an * an * pw * pw;
        st.norm0_sq += t2;
        st.area_ratio += static_cast<double>(n) * t2;
    }
    st.M_f = a0 + st.M_f0;
    st.A_f = a0 + st.A_f0;
    st.norm_sq = a0 * a0 + st.norm0_sq;
    st.tail_budget = tail_error(f, r) + tail_error_sq(f, r) + tail_error_area(f, r);
    return st;
}

double tail_error_sq(const TruncatedSeries& f, double r) {
    check_radius(r);
    const TailBound& t = f.tail();
    const double y = t.ratio * r * t.ratio * r;
    if (t.magnitude == 0.0) return 0.0;
    if (!(y < 1.0)) throw std::domain_error("tail_error_sq: (ratio*r)^2 must be < 1");
    return t.magnitude * t.magnitude * std::pow(y, static_cast<double>(f.order() + 1)) / (1.0 - y);
}

double tail_error_area(const TruncatedSeries& f, double r) {
    check_radius(r);
    const TailBound& t = f.tail();
    if (t.magnitude == 0.0) return 0.0;
    const double y = t.ratio * r * t.ratio * r;
    if (!(y < 1.0)) throw std::domain_error("tail_error_area: (ratio*r)^2 must be < 1");
    const double N = static_cast<double>(f.order());
    // sum_{n>N} n y^n = y^(N+1) ((N+1) - N y) / (1-y)^2
    return t.magnitude * t.magnitude * std::pow(y, N + 1.0) * ((N + 1.0) - N * y) /
           ((1.0 - y) * (1.0 - y));
}

double weighted_sum(const TruncatedSeries& f, const WeightSequence& w,
                    std::size_t n_start, double r) {
    check_radius(r);
    double acc = 0.0;
    for (std::size_t n = n_start; n <= f.order(); ++n) {
        const double an = std::abs(f.coeff(n));
        if (an == 0.0) continue;
        acc += an * zeta_z(w, n, r);
    }
    return acc;
}

double weighted_sum_budget(const TruncatedSeries& f, const WeightSequence& w, double r) {
    check_radius(r);
    if (!w.is_monomial()) return tail_error(f, r);  // zeta_n(r) <= r^n for these kinds
    const TailBound& t = f.tail();
    if (t.magnitude == 0.0) return 0.0;
    if (!(t.ratio < 1.0))
        throw std::domain_error("weighted_sum_budget: monomial weights need ratio < 1");
    // sup zeta*_n <= zeta*_0 = 1 for the decreasing families used here
    return t.magnitude * std::pow(t.ratio, static_cast<double>(f.order() + 1)) / (1.0 - t.ratio);
}

double refinement_G(const TruncatedSeries& f, const WeightSequence& w, double r) {
    check_radius(r);
    const double a0 = std::abs(f.coeff(0));
    double acc = 0.0;
    // Phi_{2n+1} peeled down incrementally: Phi_{2n+3} = Phi_{2n+1} - zeta_{2n+1} - zeta_{2n+2}
    double tail = phi_z(w, 3, r);
    for (std::size_t n = 1; n <= f.order(); ++n) {
        const double an = std::abs(f.coeff(n));
        if (an != 0.0)
            acc += an * an * (zeta_z(w, 2 * n, r) / (1.0 + a0) + tail);
        tail -= zeta_z(w, 2 * n + 1, r) + zeta_z(w, 2 * n + 2, r);
        if (tail < 0.0) tail = 0.0;
    }
    return acc;
}

LemmaGSides lemmaG_sides(const TruncatedSeries& f, const WeightSequence& w, double p, double r) {
    check_radius(r);
    if (!(p > 0.0 && p <= 2.0)) throw std::domain_error("lemmaG_sides: p must lie in (0, 2]");
    const double a0 = std::abs(f.coeff(0));
    const double head = std::pow(a0, p) * zeta_z(w, 0, r);
    LemmaGSides out;
    out.lhs = head + weighted_sum(f, w, 1, r) + refinement_G(f, w, r);
    out.rhs = head + (1.0 - a0 * a0) * phi_z(w, 1, r);
    return out;
}

double bohr_power(const TruncatedSeries& f, const WeightSequence& w, double p, double r) {
    check_radius(r);
    if (!(p > 0.0)) throw std::domain_error("bohr_power: p must be > 0");
    const double a0 = real_a0(f);
    return std::pow(a0, p) * zeta_z(w, 0, r) + weighted_sum(f, w, 1, r);
}

double rogosinski_E(const TruncatedSeries& f, const WeightSequence& w, double p, double q,
                    int m, double r, int theta_samples) {
    if (!(q >= 1.0)) throw std::domain_error("rogosinski_E: q must be >= 1");
    if (m < 1) throw std::domain_error("rogosinski_E: m must be >= 1");
    const DevMax dev = circle_max_dev(f, std::pow(r, m), theta_samples);
    return bohr_power(f, w, p, r) + std::pow(dev.value, q);
}

double d_lambda(const TruncatedSeries& f, double lambda, double r) {
    check_radius(r);
    if (!(lambda >= 0.0)) throw std::domain_error("d_lambda: lambda must be >= 0");
    const double a0 = real_a0(f);
    const SeriesStats st = series_stats(f, r);
    return a0 + st.M_f0 + (1.0 / (1.0 + a0) + r / (1.0 - r)) * st.norm0_sq +
           lambda * st.area_ratio;
}

std::vector<double> lacunary_moduli(const TruncatedSeries& f, int p, int m) {
    if (p < 1 || m < 0) throw std::domain_error("lacunary_moduli: need p >= 1, m >= 0");
    std::vector<double> b;
    b.reserve(f.order() / static_cast<std::size_t>(p) + 2);
    for (std::size_t j = 0; j <= f.order(); ++j) {
        const double aj = std::abs(f.coeff(j));
        const bool on_grid = j >= static_cast<std::size_t>(m) &&
                             (j - static_cast<std::size_t>(m)) % static_cast<std::size_t>(p) == 0;
        if (!on_grid) {
            if (aj > kSupportTol)
                throw SupportViolation("coefficient off the n*p+m lattice at index " +
                                       std::to_string(j));
            continue;
        }
        const std::size_t n = (j - static_cast<std::size_t>(m)) / static_cast<std::size_t>(p);
        if (b.size() <= n) b.resize(n + 1, 0.0);
        b[n] = aj;
    }
    if (b.empty()) b.push_back(0.0);
    return b;
}

double lemma2_A(const TruncatedSeries& f, int p, int m, double r) {
    check_radius(r);
    const std::vector<double> b = lacunary_moduli(f, p, m);
    const double x = std::pow(r, 2 * p);
    double even_sum = 0.0, sq_sum = 0.0;
    double xn = 1.0;
    for (std::size_t n = 1; n < b.size(); ++n) {
        xn *= x;
        if (2 * n < b.size()) even_sum += b[2 * n] * xn;
        sq_sum += b[n] * b[n] * xn;
    }
    return even_sum + (1.0 / (1.0 + b[0]) + x / (1.0 - x)) * sq_sum;
}

double lemma2_lhs(const TruncatedSeries& f, int p, int m, double r, int theta_samples) {
    const CircleRange c = circle_abs_range(f, r, theta_samples);
    return c.max_abs + std::pow(r, m) * lemma2_A(f, p, m, r);
}

Lemma4Sides lemma4_sides(const TruncatedSeries& f, const WeightSequence& w, int p, int m,
                         double r) {
    check_radius(r);
    if (m > p) throw std::domain_error("lemma4_sides: need 0 <= m <= p");
    const std::vector<double> b = lacunary_moduli(f, p, m);
    const double s = std::pow(r, p);
    Lemma4Sides out;

    for (std::size_t n = 0; n < b.size(); n += 2)
        if (b[n] != 0.0) out.lhs41 += b[n] * zeta_z(w, n, s);
    for (std::size_t n = 1; n < b.size(); n += 2)
        if (b[n] != 0.0) out.lhs42 += b[n] * zeta_z(w, n, s);
    out.lhs44 = out.lhs41 + out.lhs42 - b[0] * zeta_z(w, 0, s);

    // tails peeled down incrementally as n advances
    const double head = 1.0 + b[0];
    double even_tail = phi_parity_z(w, 4, Parity::even, s);  // sum zeta_{2k+2}, k >= 1
    double odd_tail = phi_parity_z(w, 1, Parity::odd, s);    // sum zeta_{2k+1}, k >= 0
    double all_tail = phi_z(w, 3, s);                        // sum zeta_k, k >= 2n+1 at n = 1
    if (b[0] != 0.0) out.lhs42 += b[0] * b[0] * odd_tail;
    for (std::size_t n = 1; n < b.size(); ++n) {
        odd_tail -= zeta_z(w, 2 * n - 1, s);
        if (odd_tail < 0.0) odd_tail = 0.0;
        if (b[n] != 0.0) {
            const double sq = b[n] * b[n];
            out.lhs41 += sq * (zeta_z(w, 2 * n, s) / head + even_tail);
            out.lhs42 += sq * odd_tail;
            out.lhs44 += sq * (zeta_z(w, 2 * n, s) / head + all_tail);
        }
        even_tail -= zeta_z(w, 2 * n + 2, s);
        if (even_tail < 0.0) even_tail = 0.0;
        all_tail -= zeta_z(w, 2 * n + 1, s) + zeta_z(w, 2 * n + 2, s);
        if (all_tail < 0.0) all_tail = 0.0;
    }

    out.rhs41 = b[0] * zeta_z(w, 0, s) + (1.0 - b[0] * b[0]) * phi_parity_z(w, 2, Parity::even, s);
    out.rhs42 = phi_parity_z(w, 1, Parity::odd, s);
    out.rhs44 = (1.0 - b[0] * b[0]) * phi_z(w, 1, s);
    return out;
}

namespace {

// parity of tau_m + p * tau_n over the subsequence n = start, start+2, ...;
// nullopt when mixed
std::optional<Parity> shared_parity(const WeightSequence& w, int p, int m, std::size_t start) {
    std::optional<Parity> got;
    for (std::size_t n = start; n < w.monomial_size(); n += 2) {
        if (n == 0) continue;
        const Parity par = degree_parity(w, p, m, static_cast<int>(n));
        if (!got) got = par;
        else if (*got != par) return std::nullopt;
    }
    return got;
}

}  // namespace

AltRefined alt_refined(const TruncatedSeries& f, const WeightSequence& w, int p, int m, double r) {
    check_radius(r);
    if (!w.is_monomial()) throw std::invalid_argument("alt_refined needs monomial weights");
    if (static_cast<std::size_t>(m) >= w.monomial_size())
        throw std::out_of_range("alt_refined: m past the weight table");
    const std::vector<double> b = lacunary_moduli(f, p, m);
    const double s = std::pow(r, p);
    const double zm = zeta(w, static_cast<std::size_t>(m), r);
    const auto& t = w.table();
    const std::size_t L = t.size();
    const long tau_m = t[static_cast<std::size_t>(m)].tau;

    const std::optional<Parity> even_par = shared_parity(w, p, m, 2);
    const std::optional<Parity> odd_par = shared_parity(w, p, m, 1);
    if (!even_par || !odd_par)
        throw ParityError("alt_refined: mixed degree parities within a step class");

    // table values zeta*_j(s) via incremental powers along the tau ladder
    std::vector<double> zv(L);
    {
        double pw = 1.0;
        long cur = 0;
        for (std::size_t j = 0; j < L; ++j) {
            const long gap = t[j].tau - cur;
            if (gap > 32) pw *= std::pow(s, static_cast<double>(gap));
            else
                for (long g = 0; g < gap; ++g) pw *= s;
            cur = t[j].tau;
            zv[j] = t[j].c * pw;
        }
    }
    // suffix sums over odd indices and over all indices
    std::vector<double> suff_odd(L + 1, 0.0), suff_all(L + 1, 0.0);
    for (std::size_t j = L; j-- > 0;) {
        suff_all[j] = suff_all[j + 1] + zv[j];
        suff_odd[j] = suff_odd[j + 1] + (j % 2 == 1 ? zv[j] : 0.0);
    }
    auto at = [&](const std::vector<double>& suff, std::size_t idx) {
        return idx < L ? suff[idx] : 0.0;
    };

    AltRefined out;
    out.case_I = *even_par != *odd_par;

    for (std::size_t n = 1; n < b.size() && n < L; ++n) {
        if (b[n] == 0.0) continue;
        const double sign = (tau_m + static_cast<long>(p) * t[n].tau) % 2 == 0 ? 1.0 : -1.0;
        out.B_star += sign * b[n] * zv[n];
    }
    out.A_star = zm * out.B_star;

    if (out.case_I) {
        const double sigma = *odd_par == Parity::even ? 1.0 : -1.0;
        double sq = 0.0;
        for (std::size_t n = 0; n < b.size(); ++n) {
            if (b[n] == 0.0) continue;
            sq += b[n] * b[n] * at(suff_odd, 2 * n + 1);
        }
        out.C_star = zm * (out.B_star + sigma * sq);
        out.D_star = std::numeric_limits<double>::quiet_NaN();
    } else {
        const double sigma = *even_par == Parity::even ? 1.0 : -1.0;
        double sq = 0.0;
        const double head = 1.0 + b[0];
        for (std::size_t n = 1; n < b.size(); ++n) {
            if (b[n] == 0.0) continue;
            const double z2n = 2 * n < L ? zv[2 * n] : 0.0;
            sq += b[n] * b[n] * (z2n / head + at(suff_all, 2 * n + 1));
        }
        out.D_star = zm * (out.B_star + sigma * sq);
        out.C_star = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

double corollary5_lhs(const TruncatedSeries& f, const WeightSequence& w, int p, int m, double r) {
    const AltRefined alt = alt_refined(f, w, p, m, r);
    if (alt.case_I)
        throw ParityError("corollary5_lhs: the equal-parity case is required");
    const std::vector<double> b = lacunary_moduli(f, p, m);
    const auto& table = w.table();
    const double sign_m = table[static_cast<std::size_t>(m)].tau % 2 == 0 ? 1.0 : -1.0;
    const double zm = zeta(w, static_cast<std::size_t>(m), r);
    return std::abs(sign_m * zm * b[0] + alt.D_star);
}

double theorem6_E(const TruncatedSeries& f, int p, int m, double r) {
    check_radius(r);
    if (m % 2 != 0) throw std::domain_error("theorem6: m must be even");
    if (p % 2 != 1) throw std::domain_error("theorem6: p must be odd");
    const std::vector<double> b = lacunary_moduli(f, p, m);
    const double rp = std::pow(r, p);
    const double x = rp * rp;  // r^(2p)
    double alt = 0.0, sq = 0.0;
    double pw = 1.0;
    for (std::size_t n = 1; n < b.size(); ++n) {
        pw *= rp;
        if (b[n] == 0.0) continue;
        // (-1)^(np+m) = (-1)^n for even m, odd p
        alt += (n % 2 == 0 ? 1.0 : -1.0) * b[n] * pw;
        sq += b[n] * b[n] * pw * pw;
    }
    return std::pow(r, m) * (alt + (1.0 / (1.0 + b[0]) + x / (1.0 - x)) * sq);
}

double theorem6_lhs(const TruncatedSeries& f, int p, int m, double r, int theta_samples,
                    Theorem6Variant variant) {
    const double E = theorem6_E(f, p, m, r);
    if (variant == Theorem6Variant::fixed_term) {
        const double rp = std::pow(r, p);
        return std::abs(std::pow(r, m + p) / (1.0 + rp) + E);
    }
    const CircleRange c = circle_abs_range(f, r, theta_samples);
    return std::max(std::abs(c.max_abs + E), std::abs(c.min_abs + E));
}

namespace {

std::vector<Complex> scaled_coeffs(const TruncatedSeries& f, double r) {
    const auto& a = f.coeffs();
    std::vector<Complex> scaled(a.size());
    double pw = 1.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
        scaled[n] = a[n] * pw;
        pw *= r;
    }
    return scaled;
}

double horner_on_circle(const std::vector<Complex>& scaled, Complex wz) {
    Complex acc = scaled.back();
    for (std::size_t i = scaled.size() - 1; i-- > 0;) acc = acc * wz + scaled[i];
    return std::abs(acc);
}

}  // namespace

CircleRange circle_abs_range(const TruncatedSeries& f, double r, int theta_samples) {
    check_radius(r);
    check_theta(theta_samples);
    const std::vector<Complex> scaled = scaled_coeffs(f, r);
    CircleRange out{std::numeric_limits<double>::infinity(), 0.0, 0.0, 0.0};
    for (int j = 0; j < theta_samples; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / theta_samples;
        const double v = horner_on_circle(scaled, std::polar(1.0, theta));
        if (v < out.min_abs) {
            out.min_abs = v;
            out.theta_at_min = theta;
        }
        if (v > out.max_abs) {
            out.max_abs = v;
            out.theta_at_max = theta;
        }
    }
    return out;
}

DevMax circle_max_dev(const TruncatedSeries& f, double r, int theta_samples) {
    check_radius(r);
    check_theta(theta_samples);
    std::vector<Complex> scaled = scaled_coeffs(f, r);
    scaled[0] = Complex{0.0, 0.0};  // deviation from a_0
    DevMax out;
    for (int j = 0; j < theta_samples; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / theta_samples;
        const double v = horner_on_circle(scaled, std::polar(1.0, theta));
        if (v > out.value) {
            out.value = v;
            out.theta = theta;
        }
    }
    return out;
}

}  // namespace bohrlab
