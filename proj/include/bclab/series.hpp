#pragma once

#include <complex>

#include "bclab/automorphic.hpp"

namespace bclab {

/// Coefficients a(p^k) of an Euler product, supplied on demand.
class CoefficientSource {
public:
    virtual ~CoefficientSource() = default;
    virtual std::complex<double> coefficient(u64 p, unsigned k) const = 0;
    /// Primes left out of every sum (ramified or dividing the modulus).
    virtual bool excluded(u64 p) const = 0;
};

/// One twisted character over Q: a(p^k) = chi(p)^k p^{i k tau}.
class TwistedCharSeries final : public CoefficientSource {
public:
    /// Primes dividing excluded_modulus are skipped.
    TwistedCharSeries(TwistedChar chi, u64 excluded_modulus);

    std::complex<double> coefficient(u64 p, unsigned k) const override;
    bool excluded(u64 p) const override { return excluded_modulus_ % p == 0; }

private:
    TwistedChar chi_;
    u64 excluded_modulus_;
};

} // namespace bclab
