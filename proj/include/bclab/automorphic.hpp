#pragma once

#include <complex>
#include <vector>

#include "bclab/fields.hpp"

namespace bclab {

/// Twists are compared with this absolute tolerance.
inline constexpr double kTauTolerance = 1e-12;

/// A finite-order character over Q times |det|^{i tau}.
struct TwistedChar {
    DirichletChar chi;
    double tau = 0.0;
};

bool twisted_equal(const TwistedChar& a, const TwistedChar& b);

/// A Galois-type Hecke character of E: omega on H_E = Gal(Q(zeta_M)/E),
/// times |det|^{i tau}. Only GL(1) data is constructible.
class GalHeckeChar {
public:
    GalHeckeChar(AbelianField field, SubgroupChar omega, double tau = 0.0);

    /// Entry point taking the GL rank; ranks other than 1 are rejected
    /// with std::domain_error since no effective Satake data exists for them.
    static GalHeckeChar cuspidal(AbelianField field, SubgroupChar omega, double tau, unsigned gl_rank);

    const AbelianField& field() const { return field_; }
    const SubgroupChar& omega() const { return omega_; }
    double tau() const { return tau_; }

    /// Same object with the field realized modulo a multiple L of its modulus.
    GalHeckeChar lift(u64 modulus) const;

    friend bool operator==(const GalHeckeChar& a, const GalHeckeChar& b);

private:
    AbelianField field_;
    SubgroupChar omega_;
    double tau_;
};

/// Isobaric sum of twisted characters over Q.
class IsobaricSum {
public:
    /// Throws std::invalid_argument if two components coincide.
    explicit IsobaricSum(std::vector<TwistedChar> components);

    const std::vector<TwistedChar>& components() const { return components_; }
    std::size_t degree() const { return components_.size(); }

private:
    std::vector<TwistedChar> components_;
};

struct LocalCoeff {
    u64 n;       ///< p^k
    u64 p;
    unsigned k;
    std::complex<double> value;
};

/// BC_{E/Q}: restriction to H_E. The character is lifted to the field's
/// modulus, or the field is lifted to the lcm of the two moduli.
GalHeckeChar base_change(const TwistedChar& chi, const AbelianField& field);

/// BC_{E/E1} for E1 a subfield of E: restriction of omega to H_E.
GalHeckeChar base_change(const GalHeckeChar& pi, const AbelianField& field);

/// BC^{-1}_{E/Q}(pi): the [E:Q] characters over Q restricting to omega.
std::vector<TwistedChar> bc_fiber(const GalHeckeChar& pi);

IsobaricSum automorphic_induction(const GalHeckeChar& pi);

/// a_pi(p^j) for j = 1..k_max, with a(p^{f k}) = f g omega(p^f)^k p^{i f k tau}
/// and zero off multiples of f. Empty when p divides the field's modulus.
std::vector<LocalCoeff> local_coeffs_over_E(const GalHeckeChar& pi, u64 p, unsigned k_max);

/// a(p^j) = sum over components of chi(p)^j p^{i j tau}, j = 1..k_max.
std::vector<LocalCoeff> local_coeffs_over_Q(const IsobaricSum& sum, u64 p, unsigned k_max);

/// Root-of-unity part of a_pi(p^j) over E, exactly, in Z[zeta_N] with N the
/// exponent of the field's unit group. p must not divide the modulus.
CycloInt exact_coeff_over_E(const GalHeckeChar& pi, u64 p, unsigned j);

/// Root-of-unity part of the isobaric coefficient at p^j, exactly.
CycloInt exact_coeff_over_Q(const IsobaricSum& sum, u64 p, unsigned j);

/// chi^2 trivial and tau = 0.
bool is_self_contragredient(const DirichletChar& chi, double tau);

/// p^k, throwing std::overflow_error past 2^64.
u64 checked_power(u64 p, unsigned k);

} // namespace bclab
