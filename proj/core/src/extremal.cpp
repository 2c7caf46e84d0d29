#include "bohrlab/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bohrlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

double u01(std::mt19937_64& g) {
    // 53-bit mantissa draw; keeps streams identical across standard libraries
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

TruncatedSeries realize_phi(double a, std::size_t order) {
    require(a >= 0.0 && a < 1.0, "phi: a must lie in [0, 1)");
    std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
    c[0] = a;
    const double lead = 1.0 - a * a;
    double pw = 1.0;
    for (std::size_t n = 1; n <= order; ++n) {
        c[n] = -lead * pw;
        pw *= a;
    }
    // |a_n| = (1-a^2) a^(n-1) = ((1-a^2)/a) a^n for a > 0; zero beyond n = 1 at a = 0
    TailBound t = a > 0.0 ? TailBound{lead / a, a} : TailBound{0.0, 0.0};
    return TruncatedSeries(std::move(c), t);
}

TruncatedSeries realize_psi(double a, std::size_t order) {
    require(a >= 0.0 && a < 1.0, "psi: a must lie in [0, 1)");
    std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
    c[0] = a;
    for (std::size_t n = 1; n <= order; ++n) c[n] = -2.0 * (1.0 - a);
    return TruncatedSeries(std::move(c), TailBound{2.0 * (1.0 - a), 1.0});
}

TruncatedSeries realize_lacunary(const LacunaryMobiusSpec& s, std::size_t order) {
    require(s.a >= 0.0 && s.a < 1.0, "lac: a must lie in [0, 1)");
    require(s.p >= 1, "lac: p must be >= 1");
    require(s.m >= 0, "lac: m must be >= 0");
    require(s.sign == 1 || s.sign == -1, "lac: sign must be +1 or -1");
    // g(s) = (a + sign*s)/(1 + sign*a s) = phi_a(-sign*s); f = z^m g(z^p)
    const std::size_t steps = std::max<std::size_t>(1, order / static_cast<std::size_t>(s.p));
    std::vector<Complex> g(steps + 1, Complex{0.0, 0.0});
    g[0] = s.a;
    const double lead = 1.0 - s.a * s.a;
    double pw = 1.0;
    for (std::size_t n = 1; n <= steps; ++n) {
        const double sgn = s.sign > 0 ? (n % 2 == 1 ? 1.0 : -1.0) : -1.0;
        g[n] = sgn * lead * pw;
        pw *= s.a;
    }
    TailBound t = s.a > 0.0 ? TailBound{lead / s.a, s.a} : TailBound{0.0, 0.0};
    return compose_lacunary(TruncatedSeries(std::move(g), t), s.p, s.m);
}

TruncatedSeries realize_monomial(int k) {
    require(k >= 0, "mono: k must be >= 0");
    std::vector<Complex> c(static_cast<std::size_t>(k) + 1, Complex{0.0, 0.0});
    c.back() = 1.0;
    return TruncatedSeries(std::move(c), TailBound{0.0, 0.0});
}

TruncatedSeries realize_blaschke(const BlaschkeSpec& s, std::size_t order) {
    require(std::abs(std::abs(s.rotation) - 1.0) < 1e-12, "blaschke: rotation must be unimodular");
    require(s.scale > 0.0 && s.scale <= 1.0, "blaschke: scale must lie in (0, 1]");
    std::vector<Complex> unit{Complex{1.0, 0.0}};
    TruncatedSeries prod(std::move(unit), TailBound{0.0, 0.0});
    for (const Complex& alpha : s.zeros) {
        const double mod = std::abs(alpha);
        require(mod < 1.0, "blaschke: zeros must lie strictly inside the unit disk");
        // (alpha - z)/(1 - conj(alpha) z) = alpha - (1-|alpha|^2) sum conj(alpha)^(n-1) z^n
        std::vector<Complex> f(order + 1, Complex{0.0, 0.0});
        f[0] = alpha;
        const Complex ac = std::conj(alpha);
        const double lead = 1.0 - mod * mod;
        Complex pw{1.0, 0.0};
        for (std::size_t n = 1; n <= order; ++n) {
            f[n] = -lead * pw;
            pw *= ac;
        }
        TailBound t = mod > 0.0 ? TailBound{lead / mod, mod} : TailBound{0.0, 0.0};
        prod = cauchy_product(prod, TruncatedSeries(std::move(f), t), order);
    }
    prod = scale(prod, s.rotation * s.scale, order);
    // the true function lies in the unit-modulus class, so |a_n| <= scale
    // holds for every coefficient; that envelope beats the compounded
    // product bound by many orders of magnitude
    return TruncatedSeries(prod.coeffs(), TailBound{s.scale, 1.0});
}

TruncatedSeries realize_herglotz(const HerglotzSpec& s, std::size_t order) {
    require(s.a0 >= 0.0 && s.a0 < 1.0, "herglotz: a0 must lie in [0, 1)");
    require(s.weights.size() == s.angles.size(), "herglotz: weights/angles size mismatch");
    require(!s.weights.empty(), "herglotz: needs at least one kernel");
    double total = 0.0;
    for (double w : s.weights) {
        require(w >= 0.0, "herglotz: weights must be nonnegative");
        total += w;
    }
    require(std::abs(total - 1.0) <= 1e-12, "herglotz: weights must sum to 1");

    // f = 1 - (1-a0) sum_j w_j (1 + e^{i t_j} z)/(1 - e^{i t_j} z)
    //   = a0 - 2(1-a0) sum_{n>=1} (sum_j w_j e^{i n t_j}) z^n
    std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
    c[0] = s.a0;
    std::vector<Complex> rot(s.angles.size()), cur(s.angles.size(), Complex{1.0, 0.0});
    for (std::size_t j = 0; j < s.angles.size(); ++j)
        rot[j] = std::polar(1.0, s.angles[j]);
    const double lead = -2.0 * (1.0 - s.a0);
    for (std::size_t n = 1; n <= order; ++n) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < rot.size(); ++j) {
            cur[j] *= rot[j];
            acc += s.weights[j] * cur[j];
        }
        c[n] = lead * acc;
    }
    return TruncatedSeries(std::move(c), TailBound{2.0 * (1.0 - s.a0), 1.0});
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

TruncatedSeries realize(const FunctionSpec& spec) {
    const std::size_t n = spec.target_order;
    return std::visit(
        [n](const auto& s) -> TruncatedSeries {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PhiSpec>) return realize_phi(s.a, n);
            else if constexpr (std::is_same_v<T, PsiSpec>) return realize_psi(s.a, n);
            else if constexpr (std::is_same_v<T, LacunaryMobiusSpec>) return realize_lacunary(s, n);
            else if constexpr (std::is_same_v<T, MonomialSpec>) return realize_monomial(s.k);
            else if constexpr (std::is_same_v<T, BlaschkeSpec>) return realize_blaschke(s, n);
            else return realize_herglotz(s, n);
        },
        spec.kind);
}

std::string label(const FunctionSpec& spec) {
    if (!spec.display.empty()) return spec.display;
    std::ostringstream out;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PhiSpec>) {
                out << "phi:a=" << fmt(s.a);
            } else if constexpr (std::is_same_v<T, PsiSpec>) {
                out << "psi:a=" << fmt(s.a);
            } else if constexpr (std::is_same_v<T, LacunaryMobiusSpec>) {
                out << "lac:a=" << fmt(s.a) << ",p=" << s.p << ",m=" << s.m
                    << ",sign=" << (s.sign > 0 ? '+' : '-');
            } else if constexpr (std::is_same_v<T, MonomialSpec>) {
                out << "mono:k=" << s.k;
            } else if constexpr (std::is_same_v<T, BlaschkeSpec>) {
                out << "blaschke:deg=" << s.zeros.size();
            } else {
                out << "herglotz:a0=" << fmt(s.a0) << ",terms=" << s.weights.size();
            }
        },
        spec.kind);
    return out.str();
}

FunctionSpec parse_function_spec(const std::string& text) {
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    std::vector<std::pair<std::string, std::string>> kv;
    if (colon != std::string::npos) {
        std::istringstream rest(text.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("function spec: expected key=value in '" + item + "'");
            kv.emplace_back(item.substr(0, eq), item.substr(eq + 1));
        }
    }
    auto get = [&](const std::string& key, const std::string& fallback) {
        for (const auto& [k, v] : kv)
            if (k == key) return v;
        if (fallback.empty())
            throw std::invalid_argument("function spec: missing key '" + key + "' in '" + text + "'");
        return fallback;
    };

    if (head == "phi") return {PhiSpec{std::stod(get("a", ""))}};
    if (head == "psi") return {PsiSpec{std::stod(get("a", ""))}};
    if (head == "lac") {
        LacunaryMobiusSpec s;
        s.a = std::stod(get("a", ""));
        s.p = std::stoi(get("p", ""));
        s.m = std::stoi(get("m", ""));
        const std::string sg = get("sign", "+");
        if (sg != "+" && sg != "-") throw std::invalid_argument("lac: sign must be + or -");
        s.sign = sg == "+" ? 1 : -1;
        return {s};
    }
    if (head == "mono") return {MonomialSpec{std::stoi(get("k", ""))}};
    if (head == "blaschke") {
        const auto seed = static_cast<std::uint64_t>(std::stoull(get("seed", "")));
        const int deg = std::stoi(get("deg", ""));
        return sample_spec(SampleClass::B, seed, deg);
    }
    if (head == "herglotz") {
        const auto seed = static_cast<std::uint64_t>(std::stoull(get("seed", "")));
        const int terms = std::stoi(get("terms", ""));
        FunctionSpec spec = sample_spec(SampleClass::P, seed, terms);
        auto& h = std::get<HerglotzSpec>(spec.kind);
        h.a0 = std::stod(get("a0", fmt(h.a0)));
        if (!(h.a0 >= 0.0 && h.a0 < 1.0))
            throw std::invalid_argument("herglotz: a0 must lie in [0, 1)");
        spec.display = "herglotz:a0=" + fmt(h.a0) + ",seed=" + std::to_string(seed) +
                       ",terms=" + std::to_string(terms);
        return spec;
    }
    throw std::invalid_argument("unknown function spec kind '" + head + "'");
}

FunctionSpec sample_spec(SampleClass cls, std::uint64_t seed, int complexity, double scale) {
    require(complexity >= 1 && complexity <= 8, "sample: complexity must lie in [1, 8]");
    std::mt19937_64 gen(seed ^ (cls == SampleClass::B ? 0x42ULL : 0x50ULL));
    if (cls == SampleClass::B) {
        BlaschkeSpec s;
        s.scale = scale;
        for (int j = 0; j < complexity; ++j) {
            const double rad = 0.85 * std::sqrt(u01(gen));
            const double ang = kTwoPi * u01(gen);
            s.zeros.push_back(std::polar(rad, ang));
        }
        s.rotation = std::polar(1.0, kTwoPi * u01(gen));
        FunctionSpec spec{s};
        spec.display =
            "blaschke:seed=" + std::to_string(seed) + ",deg=" + std::to_string(complexity);
        return spec;
    }
    HerglotzSpec s;
    s.a0 = 0.95 * u01(gen);
    double total = 0.0;
    for (int j = 0; j < complexity; ++j) {
        const double w = 0.05 + u01(gen);
        s.weights.push_back(w);
        s.angles.push_back(kTwoPi * u01(gen));
        total += w;
    }
    for (double& w : s.weights) w /= total;
    FunctionSpec spec{s};
    spec.display = "herglotz:a0=" + fmt(s.a0) + ",seed=" + std::to_string(seed) +
                   ",terms=" + std::to_string(complexity);
    return spec;
}

TruncatedSeries sample_class(SampleClass cls, std::uint64_t seed, int complexity, double scale) {
    return realize(sample_spec(cls, seed, complexity, scale));
}

std::size_t order_for_tail(double magnitude, double ratio, double r_max, double tol,
                           std::size_t cap) {
    if (magnitude <= 0.0 || ratio * r_max <= 0.0) return 1;
    const double x = ratio * r_max;
    if (!(x < 1.0)) return cap;
    // magnitude x^(N+1) / (1-x) <= tol
    const double need = std::log(tol * (1.0 - x) / magnitude) / std::log(x);
    if (!std::isfinite(need) || need <= 1.0) return 1;
    if (need >= static_cast<double>(cap)) return cap;
    return static_cast<std::size_t>(need) + 1;
}

FunctionSpec with_order_for(FunctionSpec spec, double r_max) {
    constexpr double kTol = 1e-12;
    std::size_t order = 256;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PhiSpec>) {
                if (s.a > 0.0) order = order_for_tail((1.0 - s.a * s.a) / s.a, s.a, r_max, kTol);
            } else if constexpr (std::is_same_v<T, PsiSpec>) {
                order = order_for_tail(2.0 * (1.0 - s.a), 1.0, r_max, kTol);
            } else if constexpr (std::is_same_v<T, LacunaryMobiusSpec>) {
                if (s.a > 0.0)
                    order = static_cast<std::size_t>(s.p) *
                                order_for_tail((1.0 - s.a * s.a) / s.a, s.a,
                                               std::pow(r_max, s.p), kTol) +
                            static_cast<std::size_t>(s.m);
            } else if constexpr (std::is_same_v<T, BlaschkeSpec>) {
                order = order_for_tail(s.scale, 1.0, r_max, kTol);
            } else if constexpr (std::is_same_v<T, HerglotzSpec>) {
                order = order_for_tail(2.0 * (1.0 - s.a0), 1.0, r_max, kTol);
            }
        },
        spec.kind);
    spec.target_order = std::max<std::size_t>(std::max<std::size_t>(order, 32), spec.target_order);
    return spec;
}

namespace detail {

double pow_diff_ratio(double x, double p) {
    if (x == 1.0) return p;
    return (1.0 - std::pow(x, p)) / (1.0 - x);
}

}  // namespace detail

}  // namespace bohrlab
