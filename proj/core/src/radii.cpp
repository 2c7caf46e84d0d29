#include "bohrlab/radii.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

namespace bohrlab {

namespace {

int sgn(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

constexpr double kGoldenConj = 0.61803398874989484820;  // (sqrt(5)-1)/2

void check_a0(double a0) {
    if (!(a0 >= 0.0 && a0 < 1.0)) throw std::invalid_argument("radius: a0 must lie in [0, 1)");
}

WeightSequence default_weights(RadiusId id, const RadiusQuery& q) {
    if (q.weights) return *q.weights;
    switch (id) {
        case RadiusId::theorem5_rstar:
        case RadiusId::theorem5_Rstar:
        case RadiusId::corollary5_rtilde:
            return WeightSequence::plain_monomial(512);
        default:
            return WeightSequence::geometric();
    }
}

// sup over x in [0,1] of x + (1-x^2) S; the interior maximum S + 1/(4S)
// applies once S >= 1/2, otherwise the edge x = 1 gives 1
double mobius_envelope(double S) {
    return S >= 0.5 ? S + 1.0 / (4.0 * S) : 1.0;
}

bool is_plain_monomial(const WeightSequence& w) {
    if (!w.is_monomial()) return false;
    const auto& t = w.table();
    for (std::size_t n = 0; n < t.size(); ++n)
        if (t[n].c != 1.0 || t[n].tau != static_cast<long>(n)) return false;
    return true;
}

}  // namespace

RootResult find_minimal_root(const std::function<double(double)>& g, double tol,
                             double scan_step, double lo, double hi) {
    if (!(tol >= 1e-14)) throw std::invalid_argument("find_minimal_root: tol must be >= 1e-14");
    if (!(scan_step > 0.0)) throw std::invalid_argument("find_minimal_root: scan_step must be > 0");
    if (!(lo >= 0.0 && lo < hi && hi <= 0.9990000001))
        throw std::invalid_argument("find_minimal_root: need 0 <= lo < hi <= 0.999");

    double a = lo + scan_step;
    if (a > hi) a = hi;
    double ga = g(a);
    int evals = 1;

    double b = a, gb = ga;
    bool bracketed = false;
    while (b < hi) {
        b = std::min(b + scan_step, hi);
        gb = g(b);
        ++evals;
        const int sa = sgn(ga), sb = sgn(gb);
        if (sa == 0 && sb == 0) {
            a = b;
            ga = gb;
            continue;  // plateau of exact zeros
        }
        if (sb == 0) return {b, 0.0, a, b, evals};  // landed on a root
        if (sa == 0 || sa != sb) {
            bracketed = true;
            break;
        }
        a = b;
        ga = gb;
    }
    if (!bracketed)
        throw NoSignChangeError("find_minimal_root: residual keeps one sign on the scan range");

    // invariant: sgn(g(b)) = sb strict; a holds the opposite (or zero) side
    const int side = sgn(gb);
    int iters = 0;
    while (b - a > tol && iters < 200) {
        const double mid = 0.5 * (a + b);
        const double gm = g(mid);
        ++evals;
        ++iters;
        if (sgn(gm) == side) b = mid;
        else a = mid;
    }
    const double value = 0.5 * (a + b);
    return {value, g(value), a, b, iters};
}

double theorem4_L(double mu, double x) {
    const double base = ((((-4.0 * x + 32.0) * x - 82.0) * x + 58.0) * x + 38.0) * x - 42.0;
    const double with_mu = (((-4.0 * x + 20.0) * x - 21.0) * x - 20.0) * x + 25.0;
    return base + mu * with_mu;
}

double theoremD_Phi(double lambda, double r) {
    const double r2 = r * r, r3 = r2 * r;
    return 4.0 * r3 * lambda * lambda - (7.0 * r3 + 3.0 * r2 - 3.0 * r + 1.0) * lambda +
           6.0 * r3 - 2.0 * r2 - 6.0 * r + 2.0;
}

namespace {

const std::map<std::string, RadiusId> kIdNames = {
    {"classical_third", RadiusId::classical_third},
    {"theorem1_R1", RadiusId::theorem1_R1},
    {"theorem1_Rp", RadiusId::theorem1_Rp},
    {"lacunary_kp", RadiusId::lacunary_kp},
    {"corollary1_r1", RadiusId::corollary1_r1},
    {"theorem2_Rpmq", RadiusId::theorem2_Rpmq},
    {"theorem3_Rlambda2", RadiusId::theorem3_Rlambda2},
    {"theorem4_rho", RadiusId::theorem4_rho},
    {"theoremD_rstar", RadiusId::theoremD_rstar},
    {"theoremD_r0", RadiusId::theoremD_r0},
    {"lemma2_rpm", RadiusId::lemma2_rpm},
    {"theorem5_rstar", RadiusId::theorem5_rstar},
    {"theorem5_Rstar", RadiusId::theorem5_Rstar},
    {"corollary5_rtilde", RadiusId::corollary5_rtilde},
    {"corollary7_Rpm", RadiusId::corollary7_Rpm},
    {"theoremE_radius", RadiusId::theoremE_radius},
    {"corollary2_radius", RadiusId::corollary2_radius},
};

}  // namespace

RadiusId radius_id_from_string(const std::string& name) {
    const auto it = kIdNames.find(name);
    if (it == kIdNames.end()) throw std::invalid_argument("unknown radius id '" + name + "'");
    return it->second;
}

std::string to_string(RadiusId id) {
    for (const auto& [name, val] : kIdNames)
        if (val == id) return name;
    return "?";
}

const std::vector<RadiusId>& radius_catalog() {
    static const std::vector<RadiusId> ids = [] {
        std::vector<RadiusId> v;
        for (const auto& [name, val] : kIdNames) v.push_back(val);
        return v;
    }();
    return ids;
}

std::optional<double> radius_closed_form(const RadiusQuery& q) {
    switch (q.id) {
        case RadiusId::classical_third:
            return 1.0 / 3.0;
        case RadiusId::lacunary_kp:
            return std::pow(q.p / (2.0 + q.p), 1.0 / q.k);
        case RadiusId::theorem1_Rp:
            if ((!q.weights || q.weights->kind() == WeightSequence::Kind::geometric) &&
                q.p == 2.0)
                return (1.0 + q.a0) / (3.0 + q.a0);
            return std::nullopt;
        case RadiusId::theorem4_rho:
            return 1.0 / (5.0 - 2.0 * q.a0);
        case RadiusId::theoremE_radius:
            return std::numbers::sqrt2 - 1.0;
        case RadiusId::corollary2_radius:
            return std::sqrt(5.0) - 2.0;
        case RadiusId::theorem5_rstar:
            if ((!q.weights || is_plain_monomial(*q.weights)) && q.m == 0)
                return std::pow(kGoldenConj, 1.0 / q.p);
            return std::nullopt;
        case RadiusId::theorem5_Rstar:
            if ((!q.weights || is_plain_monomial(*q.weights)) && q.m == 0)
                return std::pow(0.5, 1.0 / q.p);
            return std::nullopt;
        case RadiusId::corollary5_rtilde:
            if ((!q.weights || is_plain_monomial(*q.weights)) && q.p == 2.0 && q.m == 0)
                return 1.0 / std::sqrt(3.0);
            return std::nullopt;
        case RadiusId::corollary7_Rpm:
            if (q.m == 0) return std::pow(kGoldenConj, 1.0 / q.p);
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

RootResult radius(const RadiusQuery& q, double tol) {
    std::function<double(double)> g;
    double scan_lo = 0.0, scan_hi = 0.999;
    const WeightSequence w = default_weights(q.id, q);

    switch (q.id) {
        case RadiusId::classical_third: {
            const WeightSequence geo = WeightSequence::geometric();
            g = [geo](double r) { return zeta(geo, 0, r) - 2.0 * phi(geo, 1, r); };
            break;
        }
        case RadiusId::theorem1_R1: {
            // domain widened to (0, 2] so the bounded-class generalization can
            // reuse the same equation
            if (!(q.p > 0.0 && q.p <= 2.0))
                throw std::invalid_argument("theorem1_R1: p must lie in (0, 2]");
            const double p = q.p;
            g = [w, p](double r) { return zeta(w, 0, r) - (2.0 / p) * phi(w, 1, r); };
            break;
        }
        case RadiusId::theorem1_Rp: {
            check_a0(q.a0);
            if (!(q.p >= 2.0 && q.p == std::floor(q.p)))
                throw std::invalid_argument("theorem1_Rp: p must be an integer >= 2");
            double geom = 0.0, ak = 1.0;
            for (int j = 0; j < static_cast<int>(q.p); ++j) {
                geom += ak;
                ak *= q.a0;
            }
            const double factor = 2.0 / geom;
            g = [w, factor](double r) { return zeta(w, 0, r) - factor * phi(w, 1, r); };
            break;
        }
        case RadiusId::lacunary_kp: {
            if (q.k < 1) throw std::invalid_argument("lacunary_kp: k must be >= 1");
            if (!(q.p > 0.0)) throw std::invalid_argument("lacunary_kp: p must be > 0");
            const WeightSequence lw = WeightSequence::lacunary(q.k);
            const double p = q.p;
            g = [lw, p](double r) { return zeta(lw, 0, r) - (2.0 / p) * phi(lw, 1, r); };
            break;
        }
        case RadiusId::corollary1_r1: {
            g = [w](double r) {
                return zeta(w, 0, r) - 2.0 * phi(w, 1, r) - 4.0 * phi_even_sum(w, r);
            };
            break;
        }
        case RadiusId::theorem2_Rpmq: {
            if (q.m < 1) throw std::invalid_argument("theorem2_Rpmq: m must be >= 1");
            if (!(q.q >= 1.0)) throw std::invalid_argument("theorem2_Rpmq: q must be >= 1");
            const double p = q.p, qq = q.q, m = q.m;
            if (q.p > 0.0 && q.p <= 1.0) {
                g = [w, p, qq, m](double r) {
                    const double rm = std::pow(r, m);
                    const double extra = std::pow(2.0, qq - 1.0) * std::pow(rm, qq) /
                                         std::pow(1.0 - rm, qq);
                    return zeta(w, 0, r) - (2.0 / p) * (phi(w, 1, r) + extra);
                };
            } else if (q.p == 2.0) {
                check_a0(q.a0);
                const double a0 = q.a0;
                g = [w, qq, m, a0](double r) {
                    const double rm = std::pow(r, m);
                    const double extra = std::pow(2.0, qq) * std::pow(1.0 - a0, qq - 1.0) *
                                         std::pow(rm, qq) / std::pow(1.0 - rm, qq);
                    return zeta(w, 0, r) - (2.0 * phi(w, 1, r) + extra) / (1.0 + a0);
                };
            } else {
                throw std::invalid_argument("theorem2_Rpmq: p must lie in (0, 1] or equal 2");
            }
            break;
        }
        case RadiusId::theorem3_Rlambda2: {
            check_a0(q.a0);
            if (!(q.lambda >= 0.0))
                throw std::invalid_argument("theorem3_Rlambda2: lambda must be >= 0");
            const double a0 = q.a0, lam = q.lambda;
            g = [w, a0, lam](double r) {
                const double s = 1.0 - r * r;
                return zeta(w, 0, r) -
                       (2.0 / (1.0 + a0)) *
                           (phi(w, 1, r) + 2.0 * lam * (1.0 - a0) * r * r / (s * s));
            };
            break;
        }
        case RadiusId::theorem4_rho: {
            check_a0(q.a0);
            const double a0 = q.a0;
            g = [a0](double r) { return 1.0 - (5.0 - 2.0 * a0) * r; };
            break;
        }
        case RadiusId::theoremD_rstar: {
            g = [](double r) { return theoremD_Phi(1.0, r); };
            break;
        }
        case RadiusId::theoremD_r0: {
            check_a0(q.a0);
            const double lambda = 1.0 - q.a0;
            const double rstar = radius({RadiusId::theoremD_rstar}, tol).value;
            scan_lo = rstar - 0.01;
            scan_hi = 1.0 / 3.0 + 0.01;
            g = [lambda](double r) { return theoremD_Phi(lambda, r); };
            break;
        }
        case RadiusId::lemma2_rpm: {
            const int p = static_cast<int>(q.p), m = q.m;
            if (p < 1 || m < 0 || m >= p)
                throw std::invalid_argument("lemma2_rpm: need p >= 1 and 0 <= m < p");
            g = [p, m](double r) {
                return std::pow(r, 3 * p - m) - 2.0 * std::pow(r, 3 * p) -
                       3.0 * std::pow(r, 2 * p) - std::pow(r, p - m) + 1.0;
            };
            break;
        }
        case RadiusId::theorem5_rstar: {
            if (!w.is_monomial())
                throw std::invalid_argument("theorem5_rstar needs monomial weights");
            const int p = static_cast<int>(q.p), m = q.m;
            g = [w, p, m](double r) {
                const double s = std::pow(r, p);
                return zeta(w, static_cast<std::size_t>(m), r) *
                           phi_parity(w, 1, Parity::odd, s) -
                       1.0;
            };
            break;
        }
        case RadiusId::theorem5_Rstar: {
            if (!w.is_monomial())
                throw std::invalid_argument("theorem5_Rstar needs monomial weights");
            const int p = static_cast<int>(q.p), m = q.m;
            g = [w, p, m](double r) {
                const double s = std::pow(r, p);
                return zeta(w, static_cast<std::size_t>(m), r) * phi(w, 1, s) - 1.0;
            };
            break;
        }
        case RadiusId::corollary5_rtilde: {
            if (!w.is_monomial())
                throw std::invalid_argument("corollary5_rtilde needs monomial weights");
            const int p = static_cast<int>(q.p), m = q.m;
            // zeta*_m + 4S(S zeta*_m - 1) = 0 on the branch where the interior
            // maximum x = 1/(2S) binds. At m = 0 that equation is (2S-1)^2 = 0,
            // a double root; the strict-crossing form S = 1/2 pins the same
            // radius. For m >= 1 the envelope form crosses transversally.
            if (m == 0) {
                g = [w, p](double r) { return phi(w, 1, std::pow(r, p)) - 0.5; };
            } else {
                g = [w, p, m](double r) {
                    const double s = std::pow(r, p);
                    const double S = phi(w, 1, s);
                    return zeta(w, static_cast<std::size_t>(m), r) * mobius_envelope(S) - 1.0;
                };
            }
            break;
        }
        case RadiusId::corollary7_Rpm: {
            const int p = static_cast<int>(q.p), m = q.m;
            if (p < 1 || m < 0) throw std::invalid_argument("corollary7_Rpm: need p >= 1, m >= 0");
            g = [p, m](double r) {
                return std::pow(r, 2 * p) + std::pow(r, p + m) - 1.0;
            };
            break;
        }
        case RadiusId::theoremE_radius: {
            g = [](double r) {
                return std::pow(r, 3) + 3.0 * r * r + r - 1.0;  // lemma2_rpm at p=1, m=0, negated
            };
            break;
        }
        case RadiusId::corollary2_radius: {
            const WeightSequence geo = WeightSequence::geometric();
            g = [geo](double r) {
                const double extra = 2.0 * r * r / ((1.0 - r) * (1.0 - r));
                return zeta(geo, 0, r) - 2.0 * (phi(geo, 1, r) + extra);
            };
            break;
        }
    }

    const RootResult solved = find_minimal_root(g, tol, 1e-3, scan_lo, scan_hi);
    const std::optional<double> cf = radius_closed_form(q);
    if (!cf) return solved;
    if (std::abs(*cf - solved.value) > 1e-10)
        throw std::logic_error("radius: generic solver drifted from the closed form for " +
                               to_string(q.id));
    return {*cf, g(*cf), solved.bracket_lo, solved.bracket_hi, solved.iterations};
}

}  // namespace bohrlab
