#include "bohrlab/weights.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bohrlab {

namespace {

constexpr double kRelStop = 1e-15;

void check_radius(double r) {
    if (!(r >= 0.0 && r < 1.0))
        throw std::domain_error("weights: r must lie in [0, 1)");
}

bool parity_matches(std::size_t n, Parity p) {
    return (n % 2 == 0) == (p == Parity::even);
}

// first index >= N that is a multiple of k
std::size_t next_multiple(std::size_t N, std::size_t k) {
    return ((N + k - 1) / k) * k;
}

}  // namespace

WeightSequence::WeightSequence(Kind kind, int k, std::vector<MonomialEntry> table)
    : kind_(kind), k_(k), table_(std::move(table)) {}

WeightSequence WeightSequence::geometric() { return {Kind::geometric, 1, {}}; }

WeightSequence WeightSequence::lacunary(int k) {
    if (k < 1) throw std::invalid_argument("lacunary weights need k >= 1");
    return {Kind::lacunary, k, {}};
}

WeightSequence WeightSequence::harmonic() { return {Kind::harmonic, 1, {}}; }
WeightSequence WeightSequence::even_only() { return {Kind::even_only, 1, {}}; }
WeightSequence WeightSequence::odd_only() { return {Kind::odd_only, 1, {}}; }

WeightSequence WeightSequence::monomial(std::vector<MonomialEntry> table) {
    if (table.empty())
        throw std::invalid_argument("monomial weights need at least the n = 0 entry");
    if (table[0].c != 1.0 || table[0].tau != 0)
        throw std::invalid_argument("monomial weights require zeta*_0(r) = 1 (c_0 = 1, tau_0 = 0)");
    for (std::size_t n = 0; n < table.size(); ++n) {
        if (!(table[n].c >= 0.0) || !std::isfinite(table[n].c))
            throw std::invalid_argument("monomial weights need finite c_n >= 0");
        if (n > 0 && table[n].tau <= table[n - 1].tau)
            throw std::invalid_argument("monomial weights need strictly increasing tau_n");
    }
    return {Kind::monomial, 1, std::move(table)};
}

WeightSequence WeightSequence::plain_monomial(std::size_t count) {
    std::vector<MonomialEntry> t(count);
    for (std::size_t n = 0; n < count; ++n) t[n] = {1.0, static_cast<long>(n)};
    return monomial(std::move(t));
}

WeightSequence WeightSequence::harmonic_monomial(std::size_t count) {
    std::vector<MonomialEntry> t(count);
    for (std::size_t n = 0; n < count; ++n)
        t[n] = {1.0 / static_cast<double>(n + 1), static_cast<long>(n)};
    return monomial(std::move(t));
}

WeightSequence WeightSequence::monomial_from_stream(std::istream& in) {
    std::vector<MonomialEntry> t;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        MonomialEntry e;
        if (!(row >> e.c >> e.tau))
            throw std::invalid_argument("monomial table: expected 'c tau' on line \"" + line + "\"");
        t.push_back(e);
    }
    return monomial(std::move(t));
}

WeightSequence WeightSequence::monomial_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("monomial table: cannot open " + path);
    return monomial_from_stream(in);
}

std::string WeightSequence::label() const {
    switch (kind_) {
        case Kind::geometric: return "geometric";
        case Kind::lacunary: return "lacunary:" + std::to_string(k_);
        case Kind::harmonic: return "harmonic";
        case Kind::even_only: return "even_only";
        case Kind::odd_only: return "odd_only";
        case Kind::monomial: return "monomial[" + std::to_string(table_.size()) + "]";
    }
    return "?";
}

double zeta(const WeightSequence& w, std::size_t n, double r) {
    check_radius(r);
    switch (w.kind()) {
        case WeightSequence::Kind::geometric:
            return std::pow(r, static_cast<double>(n));
        case WeightSequence::Kind::lacunary:
            return n % static_cast<std::size_t>(w.lacunary_k()) == 0
                       ? std::pow(r, static_cast<double>(n))
                       : 0.0;
        case WeightSequence::Kind::harmonic:
            return std::pow(r, static_cast<double>(n)) / static_cast<double>(n + 1);
        case WeightSequence::Kind::even_only:
            return n % 2 == 0 ? std::pow(r, static_cast<double>(n)) : 0.0;
        case WeightSequence::Kind::odd_only:
            return n % 2 == 1 ? std::pow(r, static_cast<double>(n)) : 0.0;
        case WeightSequence::Kind::monomial: {
            const auto& t = w.table();
            if (n >= t.size())
                throw std::out_of_range("monomial weights: index past the table");
            return t[n].c * std::pow(r, static_cast<double>(t[n].tau));
        }
    }
    throw std::logic_error("unreachable weight kind");
}

double phi(const WeightSequence& w, std::size_t N, double r) {
    check_radius(r);
    if (N < 1) throw std::domain_error("phi: N must be >= 1");
    switch (w.kind()) {
        case WeightSequence::Kind::geometric:
            return std::pow(r, static_cast<double>(N)) / (1.0 - r);
        case WeightSequence::Kind::lacunary: {
            const auto k = static_cast<std::size_t>(w.lacunary_k());
            const std::size_t n0 = next_multiple(N, k);
            const double rk = std::pow(r, static_cast<double>(k));
            return std::pow(r, static_cast<double>(n0)) / (1.0 - rk);
        }
        case WeightSequence::Kind::harmonic: {
            if (r == 0.0) return 0.0;
            // sum_{n>=N} r^n/(n+1) = (-log(1-r) - sum_{n<N} r^{n+1}/(n+1)) / r
            double head = 0.0, pw = r;
            for (std::size_t n = 0; n < N; ++n) {
                head += pw / static_cast<double>(n + 1);
                pw *= r;
            }
            return (-std::log1p(-r) - head) / r;
        }
        case WeightSequence::Kind::even_only: {
            const std::size_t n0 = N % 2 == 0 ? N : N + 1;
            return std::pow(r, static_cast<double>(n0)) / (1.0 - r * r);
        }
        case WeightSequence::Kind::odd_only: {
            const std::size_t n0 = N % 2 == 1 ? N : N + 1;
            return std::pow(r, static_cast<double>(n0)) / (1.0 - r * r);
        }
        case WeightSequence::Kind::monomial: {
            double acc = 0.0;
            const auto& t = w.table();
            for (std::size_t n = t.size(); n-- > N;)
                acc += t[n].c * std::pow(r, static_cast<double>(t[n].tau));
            return acc;
        }
    }
    throw std::logic_error("unreachable weight kind");
}

double phi_parity(const WeightSequence& w, std::size_t N, Parity parity, double r) {
    check_radius(r);
    switch (w.kind()) {
        case WeightSequence::Kind::geometric: {
            const std::size_t n0 = parity_matches(N, parity) ? N : N + 1;
            return std::pow(r, static_cast<double>(n0)) / (1.0 - r * r);
        }
        case WeightSequence::Kind::lacunary: {
            const auto k = static_cast<std::size_t>(w.lacunary_k());
            std::size_t n0 = next_multiple(N, k);
            if (k % 2 == 0) {
                // every multiple of an even k is even
                if (parity == Parity::odd) return 0.0;
                return std::pow(r, static_cast<double>(n0)) /
                       (1.0 - std::pow(r, static_cast<double>(k)));
            }
            // odd k: multiples alternate parity, step 2k within one parity class
            if (!parity_matches(n0, parity)) n0 += k;
            return std::pow(r, static_cast<double>(n0)) /
                   (1.0 - std::pow(r, static_cast<double>(2 * k)));
        }
        case WeightSequence::Kind::even_only: {
            if (parity == Parity::odd) return 0.0;
            const std::size_t n0 = N % 2 == 0 ? N : N + 1;
            return std::pow(r, static_cast<double>(n0)) / (1.0 - r * r);
        }
        case WeightSequence::Kind::odd_only: {
            if (parity == Parity::even) return 0.0;
            const std::size_t n0 = N % 2 == 1 ? N : N + 1;
            return std::pow(r, static_cast<double>(n0)) / (1.0 - r * r);
        }
        case WeightSequence::Kind::harmonic: {
            if (r == 0.0) return N == 0 && parity == Parity::even ? 1.0 : 0.0;
            std::size_t n = parity_matches(N, parity) ? N : N + 1;
            double acc = 0.0;
            const double r2 = r * r;
            double pw = std::pow(r, static_cast<double>(n));
            for (;; n += 2, pw *= r2) {
                const double term = pw / static_cast<double>(n + 1);
                acc += term;
                if (term < kRelStop * (1.0 + acc)) break;
            }
            return acc;
        }
        case WeightSequence::Kind::monomial: {
            double acc = 0.0;
            const auto& t = w.table();
            for (std::size_t n = N; n < t.size(); ++n)
                if (parity_matches(n, parity))
                    acc += t[n].c * std::pow(r, static_cast<double>(t[n].tau));
            return acc;
        }
    }
    throw std::logic_error("unreachable weight kind");
}

double phi_even_sum(const WeightSequence& w, double r) {
    check_radius(r);
    if (w.kind() == WeightSequence::Kind::geometric)
        return r * r / ((1.0 - r) * (1.0 - r * r));
    if (w.kind() == WeightSequence::Kind::monomial) {
        // each zeta_j enters Phi_{2n} for every n with 2n <= j: floor(j/2) times
        double acc = 0.0;
        const auto& t = w.table();
        for (std::size_t j = 2; j < t.size(); ++j)
            acc += static_cast<double>(j / 2) * t[j].c * std::pow(r, static_cast<double>(t[j].tau));
        return acc;
    }
    double acc = 0.0;
    for (std::size_t n = 1;; ++n) {
        const double term = phi(w, 2 * n, r);
        acc += term;
        if (term < kRelStop * (1.0 + acc)) break;
        if (n > 2000000) throw std::runtime_error("phi_even_sum failed to converge");
    }
    return acc;
}

Parity degree_parity(const WeightSequence& w, int p, int m, int n) {
    if (!w.is_monomial())
        throw std::invalid_argument("degree_parity needs monomial weights");
    if (p < 1 || m < 0 || n < 0)
        throw std::invalid_argument("degree_parity: need p >= 1, m >= 0, n >= 0");
    const auto& t = w.table();
    if (static_cast<std::size_t>(m) >= t.size() || static_cast<std::size_t>(n) >= t.size())
        throw std::out_of_range("degree_parity: index past the table");
    const long deg = t[static_cast<std::size_t>(m)].tau +
                     static_cast<long>(p) * t[static_cast<std::size_t>(n)].tau;
    return deg % 2 == 0 ? Parity::even : Parity::odd;
}

bool is_pointwise_decreasing(const WeightSequence& w, double r, std::size_t n_check) {
    check_radius(r);
    for (std::size_t n = 0; n <= n_check; ++n) {
        if (w.is_monomial() && n + 1 >= w.monomial_size()) break;
        if (zeta(w, n + 1, r) > zeta(w, n, r)) return false;
    }
    return true;
}

}  // namespace bohrlab
