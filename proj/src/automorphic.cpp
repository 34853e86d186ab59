#include "bclab/automorphic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bclab {

bool twisted_equal(const TwistedChar& a, const TwistedChar& b) {
    return std::abs(a.tau - b.tau) <= kTauTolerance && a.chi == b.chi;
}

GalHeckeChar::GalHeckeChar(AbelianField field, SubgroupChar omega, double tau)
    : field_(std::move(field)), omega_(std::move(omega)), tau_(tau) {
    if (!(omega_.subgroup() == field_.subgroup()))
        throw std::invalid_argument("GalHeckeChar: omega is not defined on the subgroup fixing the field");
    if (!std::isfinite(tau_)) throw std::invalid_argument("GalHeckeChar: twist must be finite");
}

GalHeckeChar GalHeckeChar::cuspidal(AbelianField field, SubgroupChar omega, double tau, unsigned gl_rank) {
    if (gl_rank != 1)
        throw std::domain_error("cuspidal data on GL(" + std::to_string(gl_rank) + ") is not constructible; only GL(1) characters are supported");
    return GalHeckeChar(std::move(field), std::move(omega), tau);
}

GalHeckeChar GalHeckeChar::lift(u64 modulus) const {
    if (modulus == field_.modulus()) return *this;
    AbelianField big = field_.lift(modulus);
    const u64 m = field_.modulus();
    const i64 scale = static_cast<i64>(big.ambient()->exponent() / field_.ambient()->exponent());
    std::vector<i64> values;
    values.reserve(big.subgroup().size());
    for (u64 u : big.subgroup().elements()) values.push_back(omega_.at(u % m)->exponent * scale);
    SubgroupChar w = SubgroupChar::make(big.subgroup(), std::move(values));
    return GalHeckeChar(std::move(big), std::move(w), tau_);
}

bool operator==(const GalHeckeChar& a, const GalHeckeChar& b) {
    if (std::abs(a.tau_ - b.tau_) > kTauTolerance) return false;
    const u64 l = lcm(a.field_.modulus(), b.field_.modulus());
    return a.lift(l).omega_ == b.lift(l).omega_;
}

IsobaricSum::IsobaricSum(std::vector<TwistedChar> components) : components_(std::move(components)) {
    for (std::size_t i = 0; i < components_.size(); ++i)
        for (std::size_t j = i + 1; j < components_.size(); ++j)
            if (twisted_equal(components_[i], components_[j]))
                throw std::invalid_argument("IsobaricSum: components " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
}

GalHeckeChar base_change(const TwistedChar& chi, const AbelianField& field) {
    const u64 l = lcm(chi.chi.modulus(), field.modulus());
    AbelianField e = field.lift(l);
    return GalHeckeChar(e, restrict_char(chi.chi.lift(l), e.subgroup()), chi.tau);
}

GalHeckeChar base_change(const GalHeckeChar& pi, const AbelianField& field) {
    const u64 l = lcm(pi.field().modulus(), field.modulus());
    const GalHeckeChar low = pi.lift(l);
    AbelianField e = field.lift(l);
    if (!e.contains(low.field())) throw std::invalid_argument("base_change: target field does not contain the source field");
    std::vector<i64> values;
    values.reserve(e.subgroup().size());
    for (u64 u : e.subgroup().elements()) values.push_back(low.omega().at(u)->exponent);
    SubgroupChar w = SubgroupChar::make(e.subgroup(), std::move(values));
    return GalHeckeChar(std::move(e), std::move(w), pi.tau());
}

std::vector<TwistedChar> bc_fiber(const GalHeckeChar& pi) {
    std::vector<TwistedChar> out;
    for (auto& chi : extensions(pi.omega(), pi.field().ambient())) out.push_back({std::move(chi), pi.tau()});
    return out;
}

IsobaricSum automorphic_induction(const GalHeckeChar& pi) { return IsobaricSum(bc_fiber(pi)); }

u64 checked_power(u64 p, unsigned k) {
    u64 n = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (n > UINT64_MAX / p) throw std::overflow_error("prime power p^k exceeds 64 bits");
        n *= p;
    }
    return n;
}

namespace {

// Frobenius data at p over E: residue degree and the mu_N exponent of omega(p^f).
struct Frobenius {
    u64 f;
    i64 value;
};

Frobenius frobenius(const GalHeckeChar& pi, u64 p) {
    const Subgroup& h = pi.field().subgroup();
    const u64 m = h.modulus();
    if (m % p == 0) throw std::invalid_argument("frobenius: p divides the modulus");
    // Gal is abelian, so every place above p has the same Frobenius p^f in H.
    const u64 f = h.coset_order(p % m);
    return {f, pi.omega().at(powmod(p, f, m))->exponent};
}

} // namespace

std::vector<LocalCoeff> local_coeffs_over_E(const GalHeckeChar& pi, u64 p, unsigned k_max) {
    std::vector<LocalCoeff> out;
    if (!is_prime(p)) throw std::invalid_argument("local_coeffs_over_E: " + std::to_string(p) + " is not prime");
    if (pi.field().modulus() % p == 0) return out;
    const auto [f, value] = frobenius(pi, p);
    const double l = static_cast<double>(pi.field().degree());
    const Zeta alpha{pi.omega().root_order(), value};
    const double log_p = std::log(static_cast<double>(p));
    for (unsigned j = 1; j <= k_max; ++j) {
        std::complex<double> a = 0.0;
        if (j % f == 0) {
            const unsigned k = static_cast<unsigned>(j / f);
            a = l * alpha.pow(k).to_complex() * std::polar(1.0, pi.tau() * static_cast<double>(j) * log_p);
        }
        out.push_back({checked_power(p, j), p, j, a});
    }
    return out;
}

std::vector<LocalCoeff> local_coeffs_over_Q(const IsobaricSum& sum, u64 p, unsigned k_max) {
    std::vector<LocalCoeff> out;
    const double log_p = std::log(static_cast<double>(p));
    for (unsigned j = 1; j <= k_max; ++j) {
        std::complex<double> a = 0.0;
        for (const auto& c : sum.components()) {
            const auto v = c.chi(static_cast<i64>(p));
            if (v) a += v->pow(j).to_complex() * std::polar(1.0, c.tau * static_cast<double>(j) * log_p);
        }
        out.push_back({checked_power(p, j), p, j, a});
    }
    return out;
}

CycloInt exact_coeff_over_E(const GalHeckeChar& pi, u64 p, unsigned j) {
    const auto ring = CyclotomicRing::get(pi.omega().root_order());
    CycloInt out(ring);
    const auto [f, value] = frobenius(pi, p);
    if (j % f == 0) out.add_root(value * static_cast<i64>(j / f), static_cast<i64>(pi.field().degree()));
    return out;
}

CycloInt exact_coeff_over_Q(const IsobaricSum& sum, u64 p, unsigned j) {
    u64 n = 1;
    for (const auto& c : sum.components()) n = lcm(n, c.chi.group()->exponent());
    CycloInt out(CyclotomicRing::get(n));
    for (const auto& c : sum.components()) {
        const auto v = c.chi(static_cast<i64>(p));
        if (!v) continue;
        const Zeta z = v->pow(j);
        out.add_root(z.exponent * static_cast<i64>(n / z.order));
    }
    return out;
}

bool is_self_contragredient(const DirichletChar& chi, double tau) {
    return chi.pow(2).is_trivial() && std::abs(tau) <= kTauTolerance;
}

} // namespace bclab
