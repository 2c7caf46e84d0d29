#include "bohrlab/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

namespace bohrlab {

namespace {

constexpr double kAllR = 0.95;        // grid cap for the radius-free estimates
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSharpMargin = 1e-6;

int harness_threads() {
    if (const char* env = std::getenv("BOHRLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v <= 0) return 1;
        return static_cast<int>(std::min(v, 64L));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

// ---------------------------------------------------------------------------
// corpus machinery

struct CorpusFn {
    std::string name;
    TruncatedSeries series;
    double a0_abs = 0.0;
    std::optional<double> a0_real;  // set when the constant term is real in [0, 1)
};

enum class CorpusKind { B, P };

struct PointEval {
    double lhs = 0.0;
    double rhs = 0.0;
    double budget = 0.0;
    double theta = 0.0;
};

struct Instance {
    std::string cfg;
    CorpusKind kind = CorpusKind::B;
    bool lacunary = false;
    int p = 1;
    int m = 0;
    double realize_r = kAllR;  // sizing radius for truncation orders
    std::function<double(const CorpusFn&)> radius_of;
    std::function<PointEval(const CorpusFn&, double, int)> point;
    std::function<std::optional<std::string>(const CorpusFn&)> skip;
    std::optional<std::string> boundary_extremal;  // corpus label expected to touch the bound
};

bool spec_in_B(const FunctionSpec& spec) {
    return std::holds_alternative<PhiSpec>(spec.kind) ||
           std::holds_alternative<LacunaryMobiusSpec>(spec.kind) ||
           std::holds_alternative<MonomialSpec>(spec.kind) ||
           std::holds_alternative<BlaschkeSpec>(spec.kind);
}

std::size_t order_bucket(std::size_t need) {
    for (std::size_t b : {64u, 96u, 128u, 192u, 256u, 384u, 512u, 768u, 1024u, 1536u, 2048u,
                          4096u})
        if (need <= b) return b;
    return 8192;
}

// realizations are cached by (label, order); corpus specs repeat across instances
const TruncatedSeries& cached_realize(const FunctionSpec& spec, double r_max) {
    static std::map<std::string, TruncatedSeries> cache;
    static std::mutex mu;
    FunctionSpec sized = with_order_for(spec, std::min(r_max, 0.999));
    sized.target_order = order_bucket(sized.target_order);
    std::ostringstream key;
    key << label(spec) << '#' << sized.target_order;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key.str());
    if (it == cache.end()) it = cache.emplace(key.str(), realize(sized)).first;
    return it->second;
}

CorpusFn make_corpus_fn(const FunctionSpec& spec, const Instance& inst) {
    TruncatedSeries s = cached_realize(spec, inst.realize_r);
    std::string name = label(spec);
    if (inst.lacunary) {
        bool conforms = true;
        try {
            lacunary_moduli(s, inst.p, inst.m);
        } catch (const SupportViolation&) {
            conforms = false;
        }
        if (!conforms) {
            s = compose_lacunary(s, inst.p, inst.m);
            name = "lac[" + std::to_string(inst.p) + "," + std::to_string(inst.m) + "]o" + name;
        }
    }
    CorpusFn fn{std::move(name), std::move(s), 0.0, std::nullopt};
    const Complex a0 = fn.series.coeff(0);
    fn.a0_abs = std::abs(a0);
    if (std::abs(a0.imag()) <= 1e-12 && a0.real() >= 0.0 && a0.real() < 1.0)
        fn.a0_real = a0.real();
    return fn;
}

// ---------------------------------------------------------------------------
// budget helpers (crude but valid covers for the truncated remainders)

double tm(const CorpusFn& f, double r) { return tail_error(f.series, r); }
double tsq(const CorpusFn& f, double r) { return tail_error_sq(f.series, r); }
double tarea(const CorpusFn& f, double r) { return tail_error_area(f.series, r); }

// sum_{n > K} C rho^(np+m) s^n over the lacunary steps beyond storage
double lac_linear_tail(const TruncatedSeries& f, int p, int m, double s) {
    const TailBound& t = f.tail();
    if (t.magnitude == 0.0) return 0.0;
    const double y = std::pow(t.ratio, p) * s;
    if (!(y < 1.0)) throw std::domain_error("lac_linear_tail: ratio^p * s must be < 1");
    const std::size_t K =
        f.order() >= static_cast<std::size_t>(m)
            ? (f.order() - static_cast<std::size_t>(m)) / static_cast<std::size_t>(p)
            : 0;
    return t.magnitude * std::pow(t.ratio, m) * std::pow(y, static_cast<double>(K + 1)) /
           (1.0 - y);
}

// sum_{n > K} C^2 rho^(2(np+m)) x^n
double lac_square_tail(const TruncatedSeries& f, int p, int m, double x) {
    const TailBound& t = f.tail();
    if (t.magnitude == 0.0) return 0.0;
    const double y = std::pow(t.ratio, 2 * p) * x;
    if (!(y < 1.0)) throw std::domain_error("lac_square_tail: ratio^2p * x must be < 1");
    const std::size_t K =
        f.order() >= static_cast<std::size_t>(m)
            ? (f.order() - static_cast<std::size_t>(m)) / static_cast<std::size_t>(p)
            : 0;
    return t.magnitude * t.magnitude * std::pow(t.ratio, 2 * m) *
           std::pow(y, static_cast<double>(K + 1)) / (1.0 - y);
}

// ---------------------------------------------------------------------------
// shared lhs pieces

// the refined majorant bound of the Re f < 1 family: M_f + (1/(1+|a0|) + r/(1-r)) ||f_0||^2
PointEval refined_majorant_point(const CorpusFn& f, double r) {
    const SeriesStats st = series_stats(f.series, r);
    const double fac = 1.0 / (1.0 + f.a0_abs) + r / (1.0 - r);
    return {st.M_f + fac * st.norm0_sq, 1.0, tm(f, r) + fac * tsq(f, r), 0.0};
}

double radius_value(RadiusId id, double p = 1, double q = 1, int m = 0, int k = 1,
                    double a0 = 0, double lambda = 0,
                    std::optional<WeightSequence> w = std::nullopt) {
    RadiusQuery query;
    query.id = id;
    query.p = p;
    query.q = q;
    query.m = m;
    query.k = k;
    query.a0 = a0;
    query.lambda = lambda;
    query.weights = std::move(w);
    return radius(query).value;
}

const std::vector<std::string> kTheoremIds = {
    "theoremA",    "theoremB_area", "theoremB_sq", "theoremC",     "theoremD",
    "theoremE",    "lemmaG",        "lemma1",      "lemma2",       "lemma4",
    "remark2_i",   "remark2_ii",    "remark2_iii", "theorem1_i",   "theorem1_ii",
    "corollary1",  "theorem2_i",    "theorem2_ii", "corollary2",   "corollary2b",
    "theorem3",    "corollary3",    "theorem4",    "corollary4",   "theorem5_I",
    "theorem5_II", "corollary5",    "example1_1",  "example1_2",   "example1_3",
    "example2_i",  "example2_ii",   "theorem6",    "corollary6",   "corollary7",
};

CorpusKind corpus_kind_of(const std::string& id) {
    static const std::map<std::string, CorpusKind> kinds = {
        {"theoremA", CorpusKind::B},    {"theoremB_area", CorpusKind::B},
        {"theoremB_sq", CorpusKind::B}, {"theoremC", CorpusKind::B},
        {"theoremD", CorpusKind::P},    {"theoremE", CorpusKind::B},
        {"lemmaG", CorpusKind::B},      {"lemma1", CorpusKind::P},
        {"lemma2", CorpusKind::B},      {"lemma4", CorpusKind::B},
        {"remark2_i", CorpusKind::B},   {"remark2_ii", CorpusKind::B},
        {"remark2_iii", CorpusKind::B}, {"theorem1_i", CorpusKind::P},
        {"theorem1_ii", CorpusKind::P}, {"corollary1", CorpusKind::P},
        {"theorem2_i", CorpusKind::P},  {"theorem2_ii", CorpusKind::P},
        {"corollary2", CorpusKind::P},  {"corollary2b", CorpusKind::P},
        {"theorem3", CorpusKind::P},    {"corollary3", CorpusKind::P},
        {"theorem4", CorpusKind::P},    {"corollary4", CorpusKind::B},
        {"theorem5_I", CorpusKind::B},  {"theorem5_II", CorpusKind::B},
        {"corollary5", CorpusKind::B},  {"example1_1", CorpusKind::B},
        {"example1_2", CorpusKind::B},  {"example1_3", CorpusKind::B},
        {"example2_i", CorpusKind::B},  {"example2_ii", CorpusKind::B},
        {"theorem6", CorpusKind::B},    {"corollary6", CorpusKind::B},
        {"corollary7", CorpusKind::B},
    };
    const auto it = kinds.find(id);
    if (it == kinds.end()) throw std::invalid_argument("unknown theorem id '" + id + "'");
    return it->second;
}

bool needs_lacunary_corpus(const std::string& id) {
    return id == "lemma2" || id == "lemma4" || id == "corollary4" || id == "theorem5_I" ||
           id == "theorem5_II" || id == "corollary5" || id == "example1_2" ||
           id == "example2_i" || id == "example2_ii" || id == "theorem6" || id == "corollary7";
}

// representative lacunary lattice per id, used when building the spec corpus
std::pair<int, int> corpus_lattice(const std::string& id) {
    if (id == "example1_2") return {2, 0};
    if (id == "example2_i") return {2, 0};
    if (id == "example2_ii") return {2, 1};
    if (id == "theorem5_II" || id == "corollary5") return {2, 0};
    if (id == "theorem6" || id == "corollary7" || id == "lemma2") return {1, 0};
    return {1, 0};
}

// ---------------------------------------------------------------------------
// instances per theorem id

WeightSequence geo() { return WeightSequence::geometric(); }
WeightSequence plain_mono() { return WeightSequence::plain_monomial(512); }
WeightSequence harm_mono() { return WeightSequence::harmonic_monomial(512); }

Instance base_instance(const std::string& id) {
    Instance inst;
    inst.kind = corpus_kind_of(id);
    return inst;
}

// the alternating refined functionals share one budget shape
double alt_budget(const CorpusFn& f, int p, int m, double r) {
    const double s = std::pow(r, p);
    return lac_linear_tail(f.series, p, m, s) +
           lac_square_tail(f.series, p, m, s * s) / (1.0 - s);
}

std::vector<Instance> instances_for(const std::string& id) {
    std::vector<Instance> out;
    auto add = [&](Instance inst) { out.push_back(std::move(inst)); };

    if (id == "theoremA") {
        Instance i = base_instance(id);
        i.cfg = "majorant<=1";
        i.realize_r = 0.35;
        i.radius_of = [](const CorpusFn&) { return 1.0 / 3.0; };
        i.point = [](const CorpusFn& f, double r, int) -> PointEval {
            return {series_stats(f.series, r).M_f, 1.0, tm(f, r), 0.0};
        };
        add(std::move(i));
    } else if (id == "theoremB_area") {
        Instance i = base_instance(id);
        i.cfg = "majorant+16/9*area";
        i.realize_r = 0.35;
        i.radius_of = [](const CorpusFn&) { return 1.0 / 3.0; };
        i.point = [](const CorpusFn& f, double r, int) -> PointEval {
            const SeriesStats st = series_stats(f.series, r);
            return {st.M_f + (16.0 / 9.0) * st.area_ratio, 1.0,
                    tm(f, r) + (16.0 / 9.0) * tarea(f, r), 0.0};
        };
        add(std::move(i));
    } else if (id == "theoremB_sq") {
        Instance i = base_instance(id);
        i.cfg = "majorant+|f-a0|^2";
        i.realize_r = 0.35;
        i.radius_of = [](const CorpusFn&) { return 1.0 / 3.0; };
        i.point = [](const CorpusFn& f, double r, int th) -> PointEval {
            const SeriesStats st = series_stats(f.series, r);
            const DevMax dev = circle_max_dev(f.series, r, th);
            const double te = tm(f, r);
            return {st.M_f + dev.value * dev.value, 1.0,
                    te + (2.0 * dev.value + te) * te, dev.theta};
        };
        add(std::move(i));
    } else if (id == "theoremC") {
        struct Cfg { WeightSequence w; double p; };
        for (const Cfg& c : {Cfg{geo(), 0.5}, Cfg{geo(), 1.0}, Cfg{geo(), 2.0},
                             Cfg{WeightSequence::lacunary(2), 1.0}}) {
            Instance i = base_instance(id);
            i.cfg = "w=" + c.w.label() + ",p=" + std::to_string(c.p);
            const double R = radius_value(RadiusId::theorem1_R1, c.p, 1, 0, 1, 0, 0, c.w);
            i.realize_r = R;
            i.radius_of = [R](const CorpusFn&) { return R; };
            const WeightSequence w = c.w;
            const double p = c.p;
            i.point = [w, p](const CorpusFn& f, double r, int) -> PointEval {
                const double z0 = zeta(w, 0, r);
                const double lhs = std::pow(f.a0_abs, p) * z0 + weighted_sum(f.series, w, 1, r);
                return {lhs, z0, tm(f, r), 0.0};
            };
            add(std::move(i));
        }
    } else if (id == "theoremD") {
        const double rstar = radius_value(RadiusId::theoremD_rstar);
        Instance i = base_instance(id);
        i.cfg = "uniform r*";
        i.realize_r = rstar;
        i.radius_of = [rstar](const CorpusFn&) { return rstar; };
        i.point = [](const CorpusFn& f, double r, int) { return refined_majorant_point(f, r); };
        add(std::move(i));

        Instance j = base_instance(id);
        j.cfg = "per-a0 r0(a0)";
        j.realize_r = 0.35;
        j.radius_of = [](const CorpusFn& f) {
            return radius_value(RadiusId::theoremD_r0, 1, 1, 0, 1, f.a0_real.value_or(0.0));
        };
        j.skip = [](const CorpusFn& f) -> std::optional<std::string> {
            if (!f.a0_real) return "a0 not real in [0,1)";
            return std::nullopt;
        };
        j.point = [](const CorpusFn& f, double r, int) { return refined_majorant_point(f, r); };
        add(std::move(j));
    } else if (id == "theoremE") {
        Instance i = base_instance(id);
        i.cfg = "||f|+A_f0|<=1";
        const double R = std::numbers::sqrt2 - 1.0;
        i.realize_r = R;
        i.radius_of = [R](const CorpusFn&) { return R; };
        i.point = [](const CorpusFn& f, double r, int th) -> PointEval {
            const SeriesStats st = series_stats(f.series, r);
            const CircleRange c = circle_abs_range(f.series, r, th);
            const double hi = std::abs(c.max_abs + st.A_f0);
            const double lo = std::abs(c.min_abs + st.A_f0);
            const double theta = hi >= lo ? c.theta_at_max : c.theta_at_min;
            return {std::max(hi, lo), 1.0, 2.0 * tm(f, r), theta};
        };
        add(std::move(i));
    } else if (id == "lemmaG") {
        struct Cfg { WeightSequence w; double p; };
        for (const Cfg& c : {Cfg{geo(), 1.0}, Cfg{geo(), 0.5},
                             Cfg{WeightSequence::lacunary(2), 2.0},
                             Cfg{WeightSequence::harmonic(), 1.0}}) {
            Instance i = base_instance(id);
            i.cfg = "w=" + c.w.label() + ",p=" + std::to_string(c.p);
            i.radius_of = [](const CorpusFn&) { return kAllR; };
            const WeightSequence w = c.w;
            const double p = c.p;
            i.point = [w, p](const CorpusFn& f, double r, int) -> PointEval {
                const LemmaGSides sides = lemmaG_sides(f.series, w, p, r);
                const double fac = 1.0 / (1.0 + f.a0_abs) + r / (1.0 - r);
                return {sides.lhs, sides.rhs, tm(f, r) + fac * tsq(f, r), 0.0};
            };
            add(std::move(i));
        }
    } else if (id == "lemma1") {
        Instance i = base_instance(id);
        i.cfg = "area<=4(1-a0)^2 r^2/(1-r^2)^2";
        i.radius_of = [](const CorpusFn&) { return kAllR; };
        i.skip = [](const CorpusFn& f) -> std::optional<std::string> {
            if (!f.a0_real) return "a0 not real in [0,1)";
            return std::nullopt;
        };
        i.point = [](const CorpusFn& f, double r, int) -> PointEval {
            const SeriesStats st = series_stats(f.series, r);
            const double d = 1.0 - f.a0_real.value_or(0.0);
            const double s = 1.0 - r * r;
            return {st.area_ratio, 4.0 * d * d * r * r / (s * s), tarea(f, r), 0.0};
        };
        add(std::move(i));
    } else if (id == "lemma2") {
        for (const auto& [p, m] : std::vector<std::pair<int, int>>{{1, 0}, {2, 1}, {3, 2}}) {
            Instance i = base_instance(id);
            i.cfg = "p=" + std::to_string(p) + ",m=" + std::to_string(m);
            i.lacunary = true;
            i.p = p;
            i.m = m;
            const double R = radius_value(RadiusId::lemma2_rpm, p, 1, m);
            i.realize_r = R;
            i.radius_of = [R](const CorpusFn&) { return R; };
            const int pp = p, mm = m;
            i.point = [pp, mm](const CorpusFn& f, double r, int th) -> PointEval {
                const CircleRange c = circle_abs_range(f.series, r, th);
                const double rm = std::pow(r, mm);
                const double x = std::pow(r, 2 * pp);
                const double lhs = c.max_abs + rm * lemma2_A(f.series, pp, mm, r);
                const double budget =
                    tm(f, r) + rm * (lac_linear_tail(f.series, 2 * pp, mm, x) +
                                     lac_square_tail(f.series, pp, mm, x) / (1.0 - x));
                return {lhs, 1.0, budget, c.theta_at_max};
            };
            add(std::move(i));
        }
    } else if (id == "lemma4" || id == "corollary4") {
        struct Cfg { int p; int m; WeightSequence w; };
        std::vector<Cfg> cfgs;
        if (id == "lemma4")
            cfgs = {{1, 0, geo()}, {2, 1, geo()}, {2, 2, geo()}, {1, 0, WeightSequence::harmonic()}};
        else
            cfgs = {{1, 0, geo()}, {2, 1, geo()}, {3, 1, WeightSequence::harmonic()}};
        const std::vector<int> parts = id == "lemma4" ? std::vector<int>{41, 42, 44}
                                                      : std::vector<int>{44};
        for (const Cfg& c : cfgs) {
            for (int part : parts) {
                Instance i = base_instance(id);
                i.cfg = "p=" + std::to_string(c.p) + ",m=" + std::to_string(c.m) +
                        ",w=" + c.w.label() + ",ineq=" + std::to_string(part);
                i.lacunary = true;
                i.p = c.p;
                i.m = c.m;
                i.radius_of = [](const CorpusFn&) { return kAllR; };
                const WeightSequence w = c.w;
                const int pp = c.p, mm = c.m, pt = part;
                i.point = [w, pp, mm, pt](const CorpusFn& f, double r, int) -> PointEval {
                    const Lemma4Sides sides = lemma4_sides(f.series, w, pp, mm, r);
                    const double s = std::pow(r, pp);
                    const double budget = lac_linear_tail(f.series, pp, mm, s) +
                                          lac_square_tail(f.series, pp, mm, s * s) / (1.0 - s);
                    if (pt == 41) return {sides.lhs41, sides.rhs41, budget, 0.0};
                    if (pt == 42) return {sides.lhs42, sides.rhs42, budget, 0.0};
                    return {sides.lhs44, sides.rhs44, budget, 0.0};
                };
                add(std::move(i));
            }
        }
    } else if (id == "remark2_i") {
        for (int k : {1, 2, 3}) {
            Instance i = base_instance(id);
            i.cfg = "k=" + std::to_string(k);
            i.radius_of = [](const CorpusFn&) { return kAllR; };
            const WeightSequence w = WeightSequence::lacunary(k);
            const int kk = k;
            i.point = [w, kk](const CorpusFn& f, double r, int) -> PointEval {
                const SeriesStats st = series_stats(f.series, r);
                const double rk = std::pow(r, kk);
                const double fac = 1.0 / (1.0 + f.a0_abs) + rk / (1.0 - rk);
                const double lhs = weighted_sum(f.series, w, 0, r) + fac * st.norm0_sq;
                const double rhs = f.a0_abs + (1.0 - f.a0_abs * f.a0_abs) * rk / (1.0 - rk);
                return {lhs, rhs, tm(f, r) + fac * tsq(f, r), 0.0};
            };
            add(std::move(i));
        }
    } else if (id == "remark2_ii") {
        Instance i = base_instance(id);
        i.cfg = "odd part vs 1-||f||^2";
        i.radius_of = [](const CorpusFn&) { return kAllR; };
        i.point = [](const CorpusFn& f, double r, int) -> PointEval {
            const SeriesStats st = series_stats(f.series, r);
            const double lhs = weighted_sum(f.series, WeightSequence::odd_only(), 1, r);
            const double fac = r / (1.0 - r * r);
            return {lhs, fac * (1.0 - st.norm_sq), tm(f, r) + fac * tsq(f, r), 0.0};
        };
        add(std::move(i));
    } else if (id == "remark2_iii") {
        Instance i = base_instance(id);
        i.cfg = "refined M_f0 bound";
        i.radius_of = [](const CorpusFn&) { return kAllR; };
        i.point = [](const CorpusFn& f, double r, int) -> PointEval {
            const SeriesStats st = series_stats(f.series, r);
            const double fac = 1.0 / (1.0 + f.a0_abs) + r / (1.0 - r);
            const double lhs = st.M_f0 + fac * st.norm0_sq;
            const double rhs = (1.0 - f.a0_abs * f.a0_abs) * r / (1.0 - r);
            return {lhs, rhs, tm(f, r) + fac * tsq(f, r), 0.0};
        };
        add(std::move(i));
    } else if (id == "theorem1_i" || id == "theorem1_ii") {
        struct Cfg { WeightSequence w; double p; };
        std::vector<Cfg> cfgs;
        if (id == "theorem1_i")
            cfgs = {{geo(), 1.0}, {geo(), 0.5}, {geo(), 0.3},
                    {WeightSequence::lacunary(2), 1.0}, {WeightSequence::harmonic(), 0.7}};
        else
            cfgs = {{geo(), 2.0}, {geo(), 3.0}, {WeightSequence::lacunary(2), 2.0}};
        const bool integer_p = id == "theorem1_ii";
        for (const Cfg& c : cfgs) {
            Instance i = base_instance(id);
            i.cfg = "w=" + c.w.label() + ",p=" + std::to_string(c.p);
            i.realize_r = 0.6;
            const WeightSequence w = c.w;
            const double p = c.p;
            if (integer_p) {
                i.radius_of = [w, p](const CorpusFn& f) {
                    return radius_value(RadiusId::theorem1_Rp, p, 1, 0, 1,
                                        f.a0_real.value_or(0.0), 0, w);
                };
            } else {
                const double R = radius_value(RadiusId::theorem1_R1, p, 1, 0, 1, 0, 0, w);
                i.radius_of = [R](const CorpusFn&) { return R; };
            }
            i.skip = [](const CorpusFn& f) -> std::optional<std::string> {
                if (!f.a0_real) return "a0 not real in [0,1)";
                return std::nullopt;
            };
            i.point = [w, p](const CorpusFn& f, double r, int) -> PointEval {
                return {bohr_power(f.series, w, p, r), zeta(w, 0, r), tm(f, r), 0.0};
            };
            add(std::move(i));
        }
    } else if (id == "corollary1") {
        for (const WeightSequence& wcfg :
             {geo(), WeightSequence::lacunary(2), WeightSequence::harmonic()}) {
            Instance i = base_instance(id);
            i.cfg = "w=" + wcfg.label();
            const double R = radius_value(RadiusId::corollary1_r1, 1, 1, 0, 1, 0, 0, wcfg);
            i.realize_r = R;
            i.radius_of = [R](const CorpusFn&) { return R; };
            i.skip = [](const CorpusFn& f) -> std::optional<std::string> {
                if (!f.a0_real) return "a0 not real in [0,1)";
                return std::nullopt;
            };
            const WeightSequence w = wcfg;
            i.point = [w](const CorpusFn& f, double r, int) -> PointEval {
                const double lhs =
                    bohr_power(f.series, w, 1.0, r) + refinement_G(f.series, w, r);
                return {lhs, zeta(w, 0, r), tm(f, r) + tsq(f, r) / (1.0 - r), 0.0};
            };
            add(std::move(i));
        }
    } else if (id == "theorem2_i" || id == "theorem2_ii") {
        struct Cfg { double p; double q; int m; };
        std::vector<Cfg> cfgs;
        if (id == "theorem2_i")
            cfgs = {{1.0, 1.0, 1}, {1.0, 2.0, 1}, {0.5, 1.0, 1}, {1.0, 2.0, 2}};
        else
            cfgs = {{2.0, 1.0, 1}, {2.0, 2.0, 1}};
        for (const Cfg& c : cfgs) {
            Instance i = base_instance(id);
            i.cfg = "p=" + std::to_string(c.p) + ",q=" + std::to_string(c.q) +
                    ",m=" + std::to_string(c.m);
            i.realize_r = 0.45;
            const WeightSequence w = geo();
            const double p = c.p, q = c.q;
            const int m = c.m;
            if (id == "theorem2_i") {
                const double R = radius_value(RadiusId::theorem2_Rpmq, p, q, m, 1, 0, 0, w);
                i.radius_of = [R](const CorpusFn&) { return R; };
            } else {
                i.radius_of = [w, p, q, m](const CorpusFn& f) {
                    return radius_value(RadiusId::theorem2_Rpmq, p, q, m, 1,
                                        f.a0_real.value_or(0.0), 0, w);
                };
            }
            i.skip = [](const CorpusFn& f) -> std::optional<std::string> {
                if (!f.a0_real) return "a0 not real in [0,1)";
                return std::nullopt;
            };
            i.point = [w, p, q, m](const CorpusFn& f, double r, int th) -> PointEval {
                const double rm = std::pow(r, m);
                const DevMax dev = circle_max_dev(f.series, rm, th);
                const double lhs = bohr_power(f.series, w, p, r) + std::pow(dev.value, q);
                const double te = tail_error(f.series, rm);
                const double budget =
                    tm(f, r) + q * std::pow(dev.value + te, q - 1.0) * te;
                return {lhs, zeta(w, 0, r), budget, dev.theta};
            };
            add(std::move(i));
        }
    } else if (id == "corollary2" || id == "corollary2b") {
        Instance i = base_instance(id);
        const bool squared_head = id == "corollary2b";
        i.cfg = squared_head ? "a0^2 head at r<=1/3" : "a0 head at r<=sqrt5-2";
        const double R = squared_head ? 1.0 / 3.0 : std::sqrt(5.0) - 2.0;
        i.realize_r = R;
        i.radius_of = [R](const CorpusFn&) { return R; };
        i.skip = [squared_head](const CorpusFn& f) -> std::optional<std::string> {
            if (!f.a0_real) return "a0 not real in [0,1)";
            if (squared_head && *f.a0_real < 0.5) return "a0 < 1/2";
            return std::nullopt;
        };
        i.point = [squared_head](const CorpusFn& f, double r, int th) -> PointEval {
            const SeriesStats st = series_stats(f.series, r);
            const DevMax dev = circle_max_dev(f.series, r, th);
            const double a0 = *f.a0_real;
            const double head = squared_head ? a0 * a0 : a0;
            const double te = tm(f, r);
            return {head + st.M_f0 + dev.value * dev.value, 1.0,
                    te + (2.0 * dev.value + te) * te, dev.theta};
        };
        add(std::move(i));
    } else if (id == "theorem3") {
        for (double lam : {0.5, 8.0 / 9.0, 2.0}) {
            Instance i = base_instance(id);
            i.cfg = "lambda=" + std::to_string(lam);
            i.realize_r = 0.6;
            const WeightSequence w = geo();
            i.radius_of = [w, lam](const CorpusFn& f) {
                return radius_value(RadiusId::theorem3_Rlambda2, 2, 1, 0, 1,
                                    f.a0_real.value_or(0.0), lam, w);
            };
            i.skip = [](const CorpusFn& f) -> std::optional<std::string> {
                if (!f.a0_real) return "a0 not real in [0,1)";
                return std::nullopt;
            };
            const double lambda = lam;
            i.point = [w, lambda](const CorpusFn& f, double r, int) -> PointEval {
                const SeriesStats st = series_stats(f.series, r);
                const double a0 = *f.a0_real;
                const double lhs = a0 * a0 * zeta(w, 0, r) + weighted_sum(f.series, w, 1, r) +
                                   lambda * st.area_ratio;
                return {lhs, zeta(w, 0, r), tm(f, r) + lambda * tarea(f, r), 0.0};
            };
            add(std::move(i));
        }
    } else if (id == "corollary3") {
        Instance i = base_instance(id);
        i.cfg = "lambda=16a0/(9(1-a0))";
        i.realize_r = 0.35;
        i.radius_of = [](const CorpusFn&) { return 1.0 / 3.0; };
        i.skip = [](const CorpusFn& f) -> std::optional<std::string> {
            if (!f.a0_real) return "a0 not real in [0,1)";
            if (*f.a0_real == 0.0) return "a0 = 0 outside (0,1)";
            return std::nullopt;
        };
        i.point = [](const CorpusFn& f, double r, int) -> PointEval {
            const SeriesStats st = series_stats(f.series, r);
            const double a0 = *f.a0_real;
            const double lam = 16.0 * a0 / (9.0 * (1.0 - a0));
            return {a0 * a0 + st.M_f0 + lam * st.area_ratio, 1.0,
                    tm(f, r) + lam * tarea(f, r), 0.0};
        };
        add(std::move(i));
    } else if (id == "theorem4") {
        Instance i = base_instance(id);
        i.cfg = "lambda=8/9, r<=1/(5-2a0)";
        i.realize_r = 0.35;
        i.radius_of = [](const CorpusFn& f) {
            return 1.0 / (5.0 - 2.0 * f.a0_real.value_or(0.0));
        };
        i.skip = [](const CorpusFn& f) -> std::optional<std::string> {
            if (!f.a0_real) return "a0 not real in [0,1)";
            return std::nullopt;
        };
        i.point = [](const CorpusFn& f, double r, int) -> PointEval {
            const SeriesStats st = series_stats(f.series, r);
            const double a0 = *f.a0_real;
            const double fac = 1.0 / (1.0 + a0) + r / (1.0 - r);
            const double lhs =
                a0 + st.M_f0 + fac * st.norm0_sq + (8.0 / 9.0) * st.area_ratio;
            return {lhs, 1.0, tm(f, r) + fac * tsq(f, r) + (8.0 / 9.0) * tarea(f, r), 0.0};
        };
        add(std::move(i));
    } else if (id == "theorem5_I" || id == "example1_1" || id == "example1_3") {
        struct Cfg { WeightSequence w; int p; int m; };
        std::vector<Cfg> cfgs;
        if (id == "theorem5_I")
            cfgs = {{plain_mono(), 1, 0}, {plain_mono(), 1, 1}, {plain_mono(), 3, 2},
                    {harm_mono(), 1, 0}};
        else if (id == "example1_1")
            cfgs = {{plain_mono(), 1, 0}};
        else
            cfgs = {{harm_mono(), 1, 0}};
        for (const Cfg& c : cfgs) {
            Instance i = base_instance(id);
            i.cfg = "w=" + c.w.label() + ",p=" + std::to_string(c.p) + ",m=" + std::to_string(c.m);
            i.lacunary = true;
            i.p = c.p;
            i.m = c.m;
            const double R = radius_value(RadiusId::theorem5_rstar, c.p, 1, c.m, 1, 0, 0, c.w);
            i.realize_r = R;
            i.radius_of = [R](const CorpusFn&) { return R; };
            i.boundary_extremal = label(FunctionSpec{MonomialSpec{c.p + c.m}});
            const WeightSequence w = c.w;
            const int pp = c.p, mm = c.m;
            i.point = [w, pp, mm](const CorpusFn& f, double r, int) -> PointEval {
                const AltRefined alt = alt_refined(f.series, w, pp, mm, r);
                return {std::abs(alt.C_star), 1.0, alt_budget(f, pp, mm, r), 0.0};
            };
            add(std::move(i));
        }
    } else if (id == "theorem5_II" || id == "example1_2") {
        struct Cfg { int p; int m; };
        std::vector<Cfg> cfgs;
        if (id == "theorem5_II") cfgs = {{2, 0}, {2, 1}, {2, 2}, {4, 0}};
        else cfgs = {{2, 0}, {4, 0}};
        for (const Cfg& c : cfgs) {
            Instance i = base_instance(id);
            i.cfg = "w=plain,p=" + std::to_string(c.p) + ",m=" + std::to_string(c.m);
            i.lacunary = true;
            i.p = c.p;
            i.m = c.m;
            const WeightSequence w = plain_mono();
            const double R = radius_value(RadiusId::theorem5_Rstar, c.p, 1, c.m, 1, 0, 0, w);
            i.realize_r = R;
            i.radius_of = [R](const CorpusFn&) { return R; };
            i.boundary_extremal = label(FunctionSpec{MonomialSpec{c.p + c.m}});
            const int pp = c.p, mm = c.m;
            i.point = [w, pp, mm](const CorpusFn& f, double r, int) -> PointEval {
                const AltRefined alt = alt_refined(f.series, w, pp, mm, r);
                return {std::abs(alt.D_star), 1.0, alt_budget(f, pp, mm, r), 0.0};
            };
            add(std::move(i));
        }
    } else if (id == "corollary5" || id == "example2_i" || id == "example2_ii") {
        struct Cfg { int p; int m; };
        std::vector<Cfg> cfgs;
        if (id == "corollary5") cfgs = {{2, 0}, {2, 1}};
        else if (id == "example2_i") cfgs = {{2, 0}};
        else cfgs = {{2, 1}};
        for (const Cfg& c : cfgs) {
            Instance i = base_instance(id);
            i.cfg = "w=plain,p=" + std::to_string(c.p) + ",m=" + std::to_string(c.m);
            i.lacunary = true;
            i.p = c.p;
            i.m = c.m;
            const WeightSequence w = plain_mono();
            const double R = radius_value(RadiusId::corollary5_rtilde, c.p, 1, c.m, 1, 0, 0, w);
            i.realize_r = R;
            i.radius_of = [R](const CorpusFn&) { return R; };
            const int pp = c.p, mm = c.m;
            i.point = [w, pp, mm](const CorpusFn& f, double r, int) -> PointEval {
                const double lhs = corollary5_lhs(f.series, w, pp, mm, r);
                return {lhs, 1.0, alt_budget(f, pp, mm, r), 0.0};
            };
            add(std::move(i));
        }
    } else if (id == "theorem6" || id == "corollary6") {
        struct Cfg { int p; int m; };
        std::vector<Cfg> cfgs;
        if (id == "theorem6") cfgs = {{1, 0}, {3, 0}, {3, 2}};
        else cfgs = {{1, 0}};
        for (const Cfg& c : cfgs) {
            Instance i = base_instance(id);
            i.cfg = "p=" + std::to_string(c.p) + ",m=" + std::to_string(c.m);
            i.lacunary = true;
            i.p = c.p;
            i.m = c.m;
            const double R = radius_value(RadiusId::lemma2_rpm, c.p, 1, c.m);
            i.realize_r = R;
            i.radius_of = [R](const CorpusFn&) { return R; };
            const int pp = c.p, mm = c.m;
            i.point = [pp, mm](const CorpusFn& f, double r, int th) -> PointEval {
                const double E = theorem6_E(f.series, pp, mm, r);
                const CircleRange c2 = circle_abs_range(f.series, r, th);
                const double hi = std::abs(c2.max_abs + E);
                const double lo = std::abs(c2.min_abs + E);
                const double x = std::pow(r, 2 * pp);
                const double budget =
                    tm(f, r) + std::pow(r, mm) *
                                   (lac_linear_tail(f.series, pp, mm, std::pow(r, pp)) +
                                    lac_square_tail(f.series, pp, mm, x) / (1.0 - x));
                return {std::max(hi, lo), 1.0, budget,
                        hi >= lo ? c2.theta_at_max : c2.theta_at_min};
            };
            add(std::move(i));
        }
    } else if (id == "corollary7") {
        struct Cfg { int p; int m; };
        for (const Cfg& c : std::vector<Cfg>{{1, 0}, {3, 0}, {3, 2}}) {
            Instance i = base_instance(id);
            i.cfg = "p=" + std::to_string(c.p) + ",m=" + std::to_string(c.m);
            i.lacunary = true;
            i.p = c.p;
            i.m = c.m;
            const double R = radius_value(RadiusId::corollary7_Rpm, c.p, 1, c.m);
            i.realize_r = R;
            i.radius_of = [R](const CorpusFn&) { return R; };
            i.boundary_extremal = label(FunctionSpec{MonomialSpec{2 * c.p + c.m}});
            const int pp = c.p, mm = c.m;
            i.point = [pp, mm](const CorpusFn& f, double r, int) -> PointEval {
                const double lhs =
                    theorem6_lhs(f.series, pp, mm, r, 1, Theorem6Variant::fixed_term);
                const double x = std::pow(r, 2 * pp);
                const double budget =
                    std::pow(r, mm) * (lac_linear_tail(f.series, pp, mm, std::pow(r, pp)) +
                                       lac_square_tail(f.series, pp, mm, x) / (1.0 - x));
                return {lhs, 1.0, budget, 0.0};
            };
            add(std::move(i));
        }
    } else {
        throw std::invalid_argument("unknown theorem id '" + id + "'");
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// public surface

const std::vector<std::string>& theorem_ids() { return kTheoremIds; }

bool theorem_known(const std::string& id) {
    return std::find(kTheoremIds.begin(), kTheoremIds.end(), id) != kTheoremIds.end();
}

std::vector<FunctionSpec> standard_corpus(const std::string& theorem_id, int samples,
                                          std::uint64_t seed) {
    if (!theorem_known(theorem_id))
        throw std::invalid_argument("unknown theorem id '" + theorem_id + "'");
    std::vector<FunctionSpec> out;
    const CorpusKind kind = corpus_kind_of(theorem_id);
    if (needs_lacunary_corpus(theorem_id)) {
        const auto [p, m] = corpus_lattice(theorem_id);
        for (int j = 0; j < 20; ++j) {
            const double a = 0.05 * j;
            out.push_back({LacunaryMobiusSpec{a, p, m, j % 2 == 0 ? +1 : -1}});
        }
        out.push_back({MonomialSpec{p + m}});
        out.push_back({MonomialSpec{2 * p + m}});
        out.push_back({MonomialSpec{3 * p + m}});
        for (int j = 0; j < samples; ++j)
            out.push_back(sample_spec(SampleClass::B, seed + static_cast<std::uint64_t>(j),
                                      1 + j % 8));
        return out;
    }
    if (kind == CorpusKind::B) {
        for (int j = 0; j < 20; ++j) out.push_back({PhiSpec{0.05 * j}});
        out.push_back({MonomialSpec{1}});
        out.push_back({MonomialSpec{2}});
        out.push_back({MonomialSpec{3}});
        for (int j = 0; j < samples; ++j)
            out.push_back(sample_spec(SampleClass::B, seed + static_cast<std::uint64_t>(j),
                                      1 + j % 8));
    } else {
        for (int j = 0; j < 20; ++j) out.push_back({PsiSpec{0.05 * j}});
        for (int j = 0; j < samples; ++j)
            out.push_back(sample_spec(SampleClass::P, seed + static_cast<std::uint64_t>(j),
                                      1 + j % 8));
    }
    return out;
}

VerificationReport check_theorem(const std::string& theorem_id,
                                 const std::vector<FunctionSpec>& corpus,
                                 const CheckOptions& opts) {
    if (corpus.empty()) throw std::invalid_argument("check_theorem: empty corpus");
    const auto t0 = std::chrono::steady_clock::now();

    VerificationReport rep;
    rep.theorem_id = theorem_id;
    rep.function_label =
        "corpus of " + std::to_string(corpus.size()) + " functions";
    rep.theta_samples = opts.theta_samples;
    rep.max_violation = -kInf;
    std::ostringstream grid;
    grid << opts.r_points << " radii per function up to radius - " << opts.margin;
    rep.r_grid = grid.str();

    const std::vector<Instance> instances = instances_for(theorem_id);
    const int nthreads = harness_threads();

    for (const Instance& inst : instances) {
        // realize and filter the corpus for this instance
        std::vector<CorpusFn> fns;
        std::map<std::string, int> skip_counts;
        const CorpusKind want = inst.kind;
        for (const FunctionSpec& spec : corpus) {
            const bool in_b = spec_in_B(spec);
            if (want == CorpusKind::B && !in_b) {
                ++skip_counts["not in the bounded class"];
                continue;
            }
            if (want == CorpusKind::P && in_b) {
                ++skip_counts["not in the Re f < 1 class"];
                continue;
            }
            CorpusFn fn = make_corpus_fn(spec, inst);
            if (inst.skip) {
                if (auto why = inst.skip(fn)) {
                    ++skip_counts[*why];
                    continue;
                }
            }
            fns.push_back(std::move(fn));
        }
        for (const auto& [why, count] : skip_counts)
            rep.notes.push_back("[" + inst.cfg + "] skipped " + std::to_string(count) +
                                " members: " + why);
        if (fns.empty()) {
            rep.notes.push_back("[" + inst.cfg + "] no usable corpus members");
            continue;
        }

        struct Best {
            double violation = -kInf;
            double r = 0.0, theta = 0.0, lhs = 0.0, rhs = 0.0;
        };
        std::vector<Best> best(fns.size());

        auto worker = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t fi = lo; fi < hi; ++fi) {
                const CorpusFn& fn = fns[fi];
                const double top = std::min(inst.radius_of(fn), 0.999) - opts.margin;
                if (top <= 0.0) continue;
                Best b;
                for (int j = 1; j <= opts.r_points; ++j) {
                    const double r = top * j / opts.r_points;
                    const PointEval pe = inst.point(fn, r, opts.theta_samples);
                    const double v = pe.lhs - pe.rhs - pe.budget;
                    if (v > b.violation) b = {v, r, pe.theta, pe.lhs, pe.rhs};
                }
                best[fi] = b;
            }
        };
        if (nthreads <= 1 || fns.size() < 2) {
            worker(0, fns.size());
        } else {
            std::vector<std::thread> pool;
            const std::size_t chunk = (fns.size() + nthreads - 1) / nthreads;
            for (int t = 0; t < nthreads; ++t) {
                const std::size_t lo = t * chunk;
                if (lo >= fns.size()) break;
                pool.emplace_back(worker, lo, std::min(lo + chunk, fns.size()));
            }
            for (auto& th : pool) th.join();
        }

        for (std::size_t fi = 0; fi < fns.size(); ++fi) {
            if (best[fi].violation > rep.max_violation) {
                rep.max_violation = best[fi].violation;
                rep.witness = Witness{fns[fi].name + " [" + inst.cfg + "]", best[fi].r,
                                      best[fi].theta, best[fi].lhs, best[fi].rhs};
            }
        }

        if (inst.boundary_extremal) {
            for (const CorpusFn& fn : fns) {
                if (fn.name != *inst.boundary_extremal) continue;
                const double R = std::min(inst.radius_of(fn), 0.999);
                const PointEval pe = inst.point(fn, R, opts.theta_samples);
                if (std::abs(pe.lhs - pe.rhs) <= 1e-6)
                    rep.notes.push_back("[" + inst.cfg + "] boundary equality: " + fn.name +
                                        " attains the bound at r = " + std::to_string(R));
                break;
            }
        }
    }

    if (!std::isfinite(rep.max_violation)) {
        rep.passed = false;
        rep.notes.push_back("no usable evaluations for this theorem");
    } else {
        rep.passed = rep.max_violation <= opts.tol;
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

VerificationReport check_theorem(const std::string& theorem_id, const CheckOptions& opts) {
    return check_theorem(theorem_id, standard_corpus(theorem_id, opts.samples, opts.seed),
                         opts);
}

// ---------------------------------------------------------------------------
// sharpness

SharpnessKind sharpness_kind(const std::string& id) {
    static const std::map<std::string, SharpnessKind> kinds = {
        {"theoremA", SharpnessKind::exceed},
        {"theoremB_area", SharpnessKind::none},
        {"theoremB_sq", SharpnessKind::none},
        {"theoremC", SharpnessKind::exceed},
        {"theoremD", SharpnessKind::exceed},
        {"theoremE", SharpnessKind::none},
        {"lemmaG", SharpnessKind::equality},
        {"lemma1", SharpnessKind::equality},
        {"lemma2", SharpnessKind::exceed},
        {"lemma4", SharpnessKind::equality},
        {"remark2_i", SharpnessKind::equality},
        {"remark2_ii", SharpnessKind::equality},
        {"remark2_iii", SharpnessKind::equality},
        {"theorem1_i", SharpnessKind::exceed},
        {"theorem1_ii", SharpnessKind::exceed},
        {"corollary1", SharpnessKind::exceed},
        {"theorem2_i", SharpnessKind::exceed},
        {"theorem2_ii", SharpnessKind::exceed},
        {"corollary2", SharpnessKind::exceed},
        {"corollary2b", SharpnessKind::exceed},
        {"theorem3", SharpnessKind::exceed},
        {"corollary3", SharpnessKind::exceed},
        {"theorem4", SharpnessKind::exceed},
        {"corollary4", SharpnessKind::equality},
        {"theorem5_I", SharpnessKind::exceed},
        {"theorem5_II", SharpnessKind::exceed},
        {"corollary5", SharpnessKind::exceed},
        {"example1_1", SharpnessKind::exceed},
        {"example1_2", SharpnessKind::exceed},
        {"example1_3", SharpnessKind::exceed},
        {"example2_i", SharpnessKind::exceed},
        {"example2_ii", SharpnessKind::exceed},
        {"theorem6", SharpnessKind::informational},
        {"corollary6", SharpnessKind::informational},
        {"corollary7", SharpnessKind::exceed},
    };
    const auto it = kinds.find(id);
    if (it == kinds.end()) throw std::invalid_argument("unknown theorem id '" + id + "'");
    return it->second;
}

namespace {

// evaluate one instance's lhs/rhs on the schedule at radius + delta; a witness
// must clear the bound by kSharpMargin net of the tail budget
SharpnessResult probe_exceed(const std::string& id, std::size_t inst_idx,
                             const std::vector<FunctionSpec>& schedule, double delta,
                             int theta, bool informational) {
    const Instance inst = instances_for(id).at(inst_idx);
    SharpnessResult res;
    res.kind = informational ? SharpnessKind::informational : SharpnessKind::exceed;
    for (const FunctionSpec& spec : schedule) {
        Instance sizing = inst;
        sizing.realize_r = 0.45;  // cheap pass to read a0 for the radius
        const CorpusFn probe_fn = make_corpus_fn(spec, sizing);
        const double R = std::min(inst.radius_of(probe_fn), 0.999);
        const double r = std::min(R + delta, 0.9989);
        sizing.realize_r = r;
        const CorpusFn fn = make_corpus_fn(spec, sizing);
        const PointEval pe = inst.point(fn, r, theta);
        if (pe.lhs - pe.budget > pe.rhs + kSharpMargin) {
            res.found = true;
            res.witness = Witness{fn.name + " [" + inst.cfg + "]", r, pe.theta, pe.lhs, pe.rhs};
            res.note = "bound exceeded by " + std::to_string(pe.lhs - pe.rhs) + " at r = " +
                       std::to_string(r);
            return res;
        }
    }
    res.note = informational ? "no witness at this delta; optimality stays open"
                             : "no witness on the schedule at this delta";
    return res;
}

// bound attained within kSharpMargin at an interior point (no radius to cross)
SharpnessResult probe_equality(const std::string& id, std::size_t inst_idx,
                               const FunctionSpec& extremal, double r, int theta,
                               std::optional<std::pair<int, int>> compose_km = std::nullopt) {
    const Instance inst = instances_for(id).at(inst_idx);
    SharpnessResult res;
    res.kind = SharpnessKind::equality;
    Instance sizing = inst;
    sizing.realize_r = std::max(r, 0.3);
    CorpusFn fn = make_corpus_fn(extremal, sizing);
    if (compose_km) {
        fn.series = compose_lacunary(cached_realize(extremal, sizing.realize_r),
                                     compose_km->first, compose_km->second);
        fn.name = "lac[" + std::to_string(compose_km->first) + "," +
                  std::to_string(compose_km->second) + "]o" + label(extremal);
    }
    const PointEval pe = inst.point(fn, r, theta);
    res.witness = Witness{fn.name + " [" + inst.cfg + "]", r, pe.theta, pe.lhs, pe.rhs};
    if (std::abs(pe.lhs - pe.rhs) <= kSharpMargin + pe.budget) {
        res.found = true;
        res.note = "bound attained: |lhs - rhs| = " + std::to_string(std::abs(pe.lhs - pe.rhs));
    } else {
        res.note = "equality not exhibited: |lhs - rhs| = " +
                   std::to_string(std::abs(pe.lhs - pe.rhs));
    }
    return res;
}

std::vector<FunctionSpec> psi_schedule(std::initializer_list<double> as) {
    std::vector<FunctionSpec> out;
    for (double a : as) out.push_back({PsiSpec{a}});
    return out;
}

std::vector<FunctionSpec> phi_schedule(std::initializer_list<double> as) {
    std::vector<FunctionSpec> out;
    for (double a : as) out.push_back({PhiSpec{a}});
    return out;
}

std::vector<FunctionSpec> lac_schedule(std::initializer_list<double> as, int p, int m, int sign) {
    std::vector<FunctionSpec> out;
    for (double a : as) out.push_back({LacunaryMobiusSpec{a, p, m, sign}});
    return out;
}

std::vector<FunctionSpec> lac_grid(int p, int m, int sign) {
    std::vector<FunctionSpec> out;
    for (int j = 1; j <= 19; ++j) out.push_back({LacunaryMobiusSpec{0.05 * j, p, m, sign}});
    return out;
}

}  // namespace

SharpnessResult sharpness_probe(const std::string& id, double delta, int theta) {
    const SharpnessKind kind = sharpness_kind(id);
    if (kind == SharpnessKind::none)
        return {SharpnessKind::none, false, {}, "no sharpness clause"};

    if (id == "theoremA") return probe_exceed(id, 0, phi_schedule({0.9, 0.95, 0.99, 0.999}), delta, theta, false);
    if (id == "theoremC") return probe_exceed(id, 1, phi_schedule({0.9, 0.99, 0.999}), delta, theta, false);
    if (id == "theoremD") {
        SharpnessResult uniform =
            probe_exceed(id, 0, psi_schedule({0.2, 0.1, 0.05, 0.01}), delta, theta, false);
        if (!uniform.found) return uniform;
        SharpnessResult per_a0 =
            probe_exceed(id, 1, psi_schedule({0.3, 0.5, 0.7}), delta, theta, false);
        per_a0.note = "uniform: " + uniform.note + "; per-a0: " + per_a0.note;
        return per_a0;
    }
    if (id == "lemmaG")
        return probe_equality(id, 0, FunctionSpec{PhiSpec{0.5}}, 0.3, theta);
    if (id == "lemma1")
        return probe_equality(id, 0, FunctionSpec{PsiSpec{0.5}}, 0.4, theta);
    if (id == "lemma2")
        return probe_exceed(id, 0, lac_schedule({0.9, 0.99, 0.999}, 1, 0, +1), delta, theta, false);
    if (id == "lemma4")
        return probe_equality(id, 0, FunctionSpec{LacunaryMobiusSpec{0.5, 1, 0, -1}}, 0.3, theta);
    if (id == "corollary4")
        return probe_equality(id, 0, FunctionSpec{LacunaryMobiusSpec{0.5, 1, 0, -1}}, 0.3, theta);
    if (id == "remark2_i")
        return probe_equality(id, 1, FunctionSpec{PhiSpec{0.5}}, 0.3, theta,
                              std::make_pair(2, 0));
    if (id == "remark2_ii")
        return probe_equality(id, 0, FunctionSpec{PhiSpec{0.5}}, 0.3, theta);
    if (id == "remark2_iii")
        return probe_equality(id, 0, FunctionSpec{PhiSpec{0.5}}, 0.3, theta);
    if (id == "theorem1_i")
        return probe_exceed(id, 0, psi_schedule({0.9, 0.99, 0.999}), delta, theta, false);
    if (id == "theorem1_ii")
        return probe_exceed(id, 0, psi_schedule({0.3, 0.5, 0.7}), delta, theta, false);
    if (id == "corollary1")
        return probe_exceed(id, 0, psi_schedule({0.2, 0.1, 0.05, 0.01}), delta, theta, false);
    if (id == "theorem2_i") {
        SharpnessResult p1 =
            probe_exceed(id, 1, psi_schedule({0.2, 0.1, 0.05, 0.01}), delta, theta, false);
        if (!p1.found) {
            p1.note = "p=1 case: " + p1.note;
            return p1;
        }
        SharpnessResult q1 =
            probe_exceed(id, 2, psi_schedule({0.9, 0.99, 0.999}), delta, theta, false);
        q1.note = "p=1 case: " + p1.note + "; q=1 case: " + q1.note;
        return q1;
    }
    if (id == "theorem2_ii")
        return probe_exceed(id, 0, psi_schedule({0.3, 0.5, 0.7}), delta, theta, false);
    if (id == "corollary2")
        return probe_exceed(id, 0, psi_schedule({0.2, 0.1, 0.05, 0.01}), delta, theta, false);
    if (id == "corollary2b") {
        // the "only if" direction: a0 = 0.4 breaks the a0^2 variant at r = 1/3
        const Instance inst = instances_for(id).at(0);
        Instance sizing = inst;
        sizing.realize_r = 0.34;
        const CorpusFn fn = make_corpus_fn(FunctionSpec{PsiSpec{0.4}}, sizing);
        const PointEval pe = inst.point(fn, 1.0 / 3.0, theta);
        SharpnessResult res;
        res.kind = SharpnessKind::exceed;
        res.witness = Witness{fn.name + " [a0=0.4 at r=1/3]", 1.0 / 3.0, pe.theta, pe.lhs, pe.rhs};
        res.found = pe.lhs - pe.budget > pe.rhs + kSharpMargin;
        res.note = res.found ? "violation for a0 < 1/2 as required" : "no violation found";
        return res;
    }
    if (id == "theorem3")
        return probe_exceed(id, 1, psi_schedule({0.3, 0.5, 0.7}), delta, theta, false);
    if (id == "corollary3")
        return probe_exceed(id, 0, psi_schedule({0.3, 0.5, 0.7}), delta, theta, false);
    if (id == "theorem4") {
        // lambda' = 0.9 > 8/9 breaks the bound already at r = 1/(5-2a) for a near 1
        const double a = 0.999999;
        const double rho = 1.0 / (5.0 - 2.0 * a);
        FunctionSpec spec{PsiSpec{a}};
        const TruncatedSeries f = cached_realize(spec, 0.4);
        const SeriesStats st = series_stats(f, rho);
        const double fac = 1.0 / (1.0 + a) + rho / (1.0 - rho);
        const double lhs = a + st.M_f0 + fac * st.norm0_sq + 0.9 * st.area_ratio;
        const bool over_unit = lhs - st.tail_budget > 1.0;
        SharpnessResult part2 =
            probe_exceed(id, 0, psi_schedule({0.5, 0.7, 0.9}), delta, theta, false);
        SharpnessResult res;
        res.kind = SharpnessKind::exceed;
        res.found = over_unit && part2.found;
        res.witness = over_unit ? Witness{label(spec) + " [lambda=0.9]", rho, 0.0, lhs, 1.0}
                                : part2.witness;
        res.note = std::string("lambda'=0.9 at a=0.999999: D = 1 + ") +
                   std::to_string(lhs - 1.0) + (over_unit ? " > 1" : " (not above 1)") +
                   "; radius probe: " + part2.note;
        return res;
    }
    if (id == "theorem5_I")
        return probe_exceed(id, 0, {FunctionSpec{MonomialSpec{1}}}, delta, theta, false);
    if (id == "theorem5_II")
        return probe_exceed(id, 0, {FunctionSpec{MonomialSpec{2}}}, delta, theta, false);
    if (id == "corollary5")
        return probe_exceed(id, 0, lac_grid(2, 0, -1), delta, theta, false);
    if (id == "example1_1")
        return probe_exceed(id, 0, {FunctionSpec{MonomialSpec{1}}}, delta, theta, false);
    if (id == "example1_2")
        return probe_exceed(id, 0, {FunctionSpec{MonomialSpec{2}}}, delta, theta, false);
    if (id == "example1_3")
        return probe_exceed(id, 0, {FunctionSpec{MonomialSpec{1}}}, delta, theta, false);
    if (id == "example2_i")
        return probe_exceed(id, 0, lac_grid(2, 0, -1), delta, theta, false);
    if (id == "example2_ii")
        return probe_exceed(id, 0, lac_grid(2, 1, -1), delta, theta, false);
    if (id == "corollary7")
        return probe_exceed(id, 0, {FunctionSpec{MonomialSpec{2}}}, delta, theta, false);
    if (id == "theorem6")
        return probe_exceed(id, 0, lac_schedule({0.9, 0.99}, 1, 0, +1), delta, theta, true);
    if (id == "corollary6")
        return probe_exceed(id, 0, lac_schedule({0.9, 0.99}, 1, 0, +1), delta, theta, true);
    throw std::invalid_argument("no sharpness schedule for '" + id + "'");
}

// ---------------------------------------------------------------------------
// designated equality cases

double equality_check(EqualityCase c, const EqualityParams& prm) {
    const WeightSequence w = prm.weights.value_or(WeightSequence::geometric());
    switch (c) {
        case EqualityCase::lemmaG_phi: {
            const TruncatedSeries f = cached_realize(FunctionSpec{PhiSpec{prm.a}}, prm.r);
            const LemmaGSides sides = lemmaG_sides(f, w, prm.power, prm.r);
            return std::abs(sides.lhs - sides.rhs);
        }
        case EqualityCase::lemma1_psi: {
            const TruncatedSeries f = cached_realize(FunctionSpec{PsiSpec{prm.a}}, prm.r);
            const SeriesStats st = series_stats(f, prm.r);
            const double s = 1.0 - prm.r * prm.r;
            const double closed =
                4.0 * (1.0 - prm.a) * (1.0 - prm.a) * prm.r * prm.r / (s * s);
            return std::abs(st.area_ratio - closed);
        }
        case EqualityCase::lemma2_A_closed_form: {
            const TruncatedSeries f = cached_realize(
                FunctionSpec{LacunaryMobiusSpec{prm.a, prm.p, prm.m, +1}}, prm.r);
            const double x = std::pow(prm.r, 2 * prm.p);
            const double closed = (1.0 - prm.a * prm.a) * x / (1.0 - x);
            return std::abs(lemma2_A(f, prm.p, prm.m, prm.r) - closed);
        }
        case EqualityCase::corollary4_mobius: {
            const TruncatedSeries f = cached_realize(
                FunctionSpec{LacunaryMobiusSpec{prm.a, prm.p, prm.m, -1}}, prm.r);
            const Lemma4Sides sides = lemma4_sides(f, w, prm.p, prm.m, prm.r);
            return std::max({std::abs(sides.lhs41 - sides.rhs41),
                             std::abs(sides.lhs42 - sides.rhs42),
                             std::abs(sides.lhs44 - sides.rhs44)});
        }
        case EqualityCase::remark2i_phi_zk: {
            const TruncatedSeries g =
                cached_realize(FunctionSpec{PhiSpec{prm.a}}, std::pow(prm.r, prm.k));
            const TruncatedSeries f = compose_lacunary(g, prm.k, 0);
            const SeriesStats st = series_stats(f, prm.r);
            const double rk = std::pow(prm.r, prm.k);
            const double a0 = std::abs(f.coeff(0));
            const double fac = 1.0 / (1.0 + a0) + rk / (1.0 - rk);
            const double lhs =
                weighted_sum(f, WeightSequence::lacunary(prm.k), 0, prm.r) + fac * st.norm0_sq;
            const double rhs = a0 + (1.0 - a0 * a0) * rk / (1.0 - rk);
            return std::abs(lhs - rhs);
        }
        case EqualityCase::eq35_psi: {
            const TruncatedSeries f = cached_realize(FunctionSpec{PsiSpec{prm.a}}, prm.r);
            const double z0 = zeta(w, 0, prm.r);
            const double head = (1.0 - std::pow(prm.a, prm.power)) / (2.0 * (1.0 - prm.a));
            const double closed =
                z0 + 2.0 * (1.0 - prm.a) * (phi(w, 1, prm.r) - head * z0);
            return std::abs(bohr_power(f, w, prm.power, prm.r) - closed);
        }
    }
    throw std::logic_error("unreachable equality case");
}

Problem2Probe problem2_probe(int samples, std::uint64_t seed, int r_points, int theta) {
    Instance inst = instances_for("corollary6").at(0);
    inst.realize_r = 0.9;
    const std::vector<FunctionSpec> corpus = standard_corpus("corollary6", samples, seed);
    std::vector<CorpusFn> fns;
    for (const FunctionSpec& spec : corpus)
        if (spec_in_B(spec)) fns.push_back(make_corpus_fn(spec, inst));

    Problem2Probe out;
    for (int j = 1; j <= r_points; ++j) {
        const double r = 0.9 * j / r_points;
        bool holds = true;
        for (const CorpusFn& fn : fns) {
            const PointEval pe = inst.point(fn, r, theta);
            if (pe.lhs - pe.budget > pe.rhs + 1e-9) {
                holds = false;
                break;
            }
        }
        if (!holds) break;
        out.largest_r = r;
    }
    out.note =
        "non-normative: largest grid radius at which the refined alternating bound held "
        "across the corpus; no optimality is claimed";
    return out;
}

std::string to_json(const VerificationReport& rep, bool include_elapsed) {
    nlohmann::json j;
    j["theorem_id"] = rep.theorem_id;
    j["function_label"] = rep.function_label;
    j["r_grid"] = rep.r_grid;
    j["theta_samples"] = rep.theta_samples;
    j["max_violation"] =
        std::isfinite(rep.max_violation) ? rep.max_violation : -1e308;
    j["passed"] = rep.passed;
    j["elapsed_ms"] = include_elapsed ? rep.elapsed_ms : 0.0;
    j["notes"] = rep.notes;
    if (rep.witness) {
        j["witness_function"] = rep.witness->function;
        j["witness_r"] = rep.witness->r;
        j["witness_theta"] = rep.witness->theta;
        j["witness_lhs"] = rep.witness->lhs;
        j["witness_rhs"] = rep.witness->rhs;
    }
    return j.dump(2);
}

}  // namespace bohrlab
