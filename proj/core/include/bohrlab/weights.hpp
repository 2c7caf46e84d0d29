#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace bohrlab {

enum class Parity { even, odd };

/// One row of a monomial weight table: zeta*_n(r) = c * r^tau.
struct MonomialEntry {
    double c = 0.0;
    long tau = 0;
};

/// A weight family zeta = {zeta_n(r)} of nonnegative continuous functions on
/// [0,1) whose sum converges there. The built-in kinds are
///   geometric  : r^n
///   lacunary(k): r^n when k | n, else 0
///   harmonic   : r^n / (n+1)
///   even_only  : r^n for even n, else 0
///   odd_only   : r^n for odd n, else 0
///   monomial   : a finite user table c_n r^(tau_n) with c_0 = 1, tau_0 = 0
///                and tau strictly increasing; queries past the table throw.
class WeightSequence {
public:
    enum class Kind { geometric, lacunary, harmonic, even_only, odd_only, monomial };

    static WeightSequence geometric();
    static WeightSequence lacunary(int k);
    static WeightSequence harmonic();
    static WeightSequence even_only();
    static WeightSequence odd_only();
    static WeightSequence monomial(std::vector<MonomialEntry> table);
    /// c_n = 1, tau_n = n for n < count
    static WeightSequence plain_monomial(std::size_t count);
    /// c_n = 1/(n+1), tau_n = n for n < count
    static WeightSequence harmonic_monomial(std::size_t count);
    /// two whitespace-separated columns "c tau" per line, index = line number
    static WeightSequence monomial_from_stream(std::istream& in);
    static WeightSequence monomial_from_file(const std::string& path);

    Kind kind() const { return kind_; }
    int lacunary_k() const { return k_; }
    const std::vector<MonomialEntry>& table() const { return table_; }
    bool is_monomial() const { return kind_ == Kind::monomial; }
    /// number of defined indices for the monomial kind; unbounded otherwise
    std::size_t monomial_size() const { return table_.size(); }

    std::string label() const;

private:
    WeightSequence(Kind kind, int k, std::vector<MonomialEntry> table);

    Kind kind_;
    int k_;
    std::vector<MonomialEntry> table_;
};

/// zeta_n(r)
double zeta(const WeightSequence& w, std::size_t n, double r);

/// Phi_N(r) = sum_{n >= N} zeta_n(r), N >= 1; closed form where the kind has
/// one, otherwise numeric with relative stopping at 1e-15.
double phi(const WeightSequence& w, std::size_t N, double r);

/// sum_{n >= N, n = parity (mod 2)} zeta_n(r)
double phi_parity(const WeightSequence& w, std::size_t N, Parity parity, double r);

/// sum_{n >= 1} Phi_{2n}(r); geometric closed form r^2 / ((1-r)(1-r^2))
double phi_even_sum(const WeightSequence& w, double r);

/// Parity of the degree of zeta*_m(r) * zeta*_n(r^p) = C r^(tau_m + p tau_n).
/// Monomial kind only; throws std::out_of_range past the table.
Parity degree_parity(const WeightSequence& w, int p, int m, int n);

/// true iff zeta_{n+1}(r) <= zeta_n(r) for all n <= n_check
bool is_pointwise_decreasing(const WeightSequence& w, double r, std::size_t n_check);

}  // namespace bohrlab
