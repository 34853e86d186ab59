#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "bclab/series.hpp"
#include "bclab/twist_combinatorics.hpp"

namespace bclab {

struct TwistedPair {
    std::size_t left;   ///< index into bc_fiber(pi)
    std::size_t right;  ///< index into bc_fiber(pi')
};

/// T = {(sigma, sigma') : sigma = sigma' (x) |det|^{i tau0}} with its common twist.
struct TwistedPairSet {
    std::vector<TwistedPair> pairs;
    std::optional<double> tau0;  ///< set iff pairs is nonempty
    std::size_t size() const { return pairs.size(); }
    bool empty() const { return pairs.empty(); }
};

struct PoleData {
    std::size_t multiplicity;    ///< order of the pole at s = 1 + i tau0
    std::optional<double> tau0;
};

struct TheoremFlags {
    bool thm1_1 = false;  ///< both prime degree, equal degrees, E != F
    bool thm1_2 = false;  ///< coprime degrees
    bool self_contragredient_left = false;   ///< some element of BC^{-1}(pi) is self-contragredient
    bool self_contragredient_right = false;
};

bool thm1_1_applies(const AbelianField& e, const AbelianField& f);
bool thm1_2_applies(const AbelianField& e, const AbelianField& f);

/// L(s, pi x_BC pi'~) = prod_{i,j} L(s, chi_i x conj(psi_j)), both fibers
/// realized modulo L = lcm of the two field moduli. Primes dividing L are
/// excluded from every coefficient.
class RsConvolution final : public CoefficientSource {
public:
    RsConvolution(const GalHeckeChar& pi, const GalHeckeChar& pi_prime);

    const GalHeckeChar& left() const { return pi_; }
    const GalHeckeChar& right() const { return pi_prime_; }
    const std::vector<TwistedChar>& left_fiber() const { return left_; }
    const std::vector<TwistedChar>& right_fiber() const { return right_; }
    const TwistedPairSet& pairs() const { return pairs_; }
    std::size_t multiplicity() const { return pairs_.size(); }
    /// tau_pi - tau_pi', the shift carried by every coefficient.
    double tau_shift() const { return tau_shift_; }
    u64 modulus() const { return modulus_; }
    TheoremFlags flags() const;

    std::complex<double> coefficient(u64 p, unsigned k) const override;
    bool excluded(u64 p) const override { return modulus_ % p == 0; }
    /// Root-of-unity part of a(p^k), exactly.
    CycloInt exact_coefficient(u64 p, unsigned k) const;

private:
    CycloInt exact_residue(u64 r) const;

    GalHeckeChar pi_, pi_prime_;
    std::vector<TwistedChar> left_, right_;
    TwistedPairSet pairs_;
    double tau_shift_;
    u64 modulus_;
    std::vector<std::complex<double>> residue_table_;  // (sum_i chi_i(r)) * conj(sum_j psi_j(r))
};

/// Structural comparison of the two fibers.
TwistedPairSet twisted_pairs(const GalHeckeChar& pi, const GalHeckeChar& pi_prime);

PoleData pole_multiplicity(const GalHeckeChar& pi, const GalHeckeChar& pi_prime);

/// a(n) for n <= N with metadata; zero off the prime powers coprime to the modulus.
struct RsSeries {
    std::vector<std::complex<double>> coefficients;  ///< index n, 0..N
    TwistedPairSet pairs;
    std::size_t multiplicity;
    u64 modulus;
};

RsSeries rs_coefficients(const GalHeckeChar& pi, const GalHeckeChar& pi_prime, u64 n_max);

/// Table-backed source over an RsSeries (n beyond the table throws).
class TableSeries final : public CoefficientSource {
public:
    explicit TableSeries(const RsSeries& series) : series_(series) {}
    std::complex<double> coefficient(u64 p, unsigned k) const override;
    bool excluded(u64 p) const override { return series_.modulus % p == 0; }

private:
    const RsSeries& series_;
};

/// Checks, for prime powers n <= N coprime to every modulus involved, that
/// (pi_Q chi) x conj(pi'_Q xi) and pi_Q x conj(pi'_Q chi^{-1} xi) agree exactly.
bool twist_absorption_check(const DirichletChar& chi, const DirichletChar& xi, const DirichletChar& pi_q,
                            const DirichletChar& pi_q_prime, u64 n_max);

/// Coordinates of bc_fiber(pi) in a cyclic decomposition of the characters
/// of Gal(E/Q): labels[i] is the twist taking fiber[0] to fiber[i].
struct FiberLabels {
    FiberGroup group;
    std::vector<GroupElement> labels;
};

FiberLabels fiber_labels(const GalHeckeChar& pi);

/// pair_subgroup applied to the structural T on both sides; returns the two
/// subgroup orders (left, right).
std::pair<std::size_t, std::size_t> structural_pair_subgroups(const RsConvolution& rs);

} // namespace bclab
