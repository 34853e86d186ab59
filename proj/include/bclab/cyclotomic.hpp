#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "bclab/arith.hpp"

namespace bclab {

/// Z[zeta_N] in the power basis 1, zeta, ..., zeta^(phi(N)-1).
///
/// Elements are reduced modulo the N-th cyclotomic polynomial, so two
/// elements are equal iff their coefficient vectors are equal. Rings are
/// shared and immutable; get() caches one instance per N.
class CyclotomicRing {
public:
    static std::shared_ptr<const CyclotomicRing> get(u64 order);

    u64 order() const { return order_; }
    std::size_t dimension() const { return phi_.size() - 1; }

    /// Coefficients of the cyclotomic polynomial, constant term first.
    const std::vector<i64>& polynomial() const { return phi_; }

    /// Reduced coordinates of zeta^a.
    const std::vector<i64>& power(i64 a) const { return powers_[static_cast<std::size_t>(mod_floor(a, static_cast<i64>(order_)))]; }

private:
    explicit CyclotomicRing(u64 order);

    u64 order_;
    std::vector<i64> phi_;
    std::vector<std::vector<i64>> powers_;
};

/// Cyclotomic polynomial Phi_n with integer coefficients, constant term first.
std::vector<i64> cyclotomic_polynomial(u64 n);

class CycloInt {
public:
    explicit CycloInt(std::shared_ptr<const CyclotomicRing> ring);

    static CycloInt root(std::shared_ptr<const CyclotomicRing> ring, i64 exponent, i64 multiplicity = 1);

    CycloInt& add_root(i64 exponent, i64 multiplicity = 1);
    CycloInt& operator+=(const CycloInt& other);
    CycloInt operator*(const CycloInt& other) const;
    CycloInt conj() const;

    bool is_zero() const;
    std::complex<double> to_complex() const;
    const std::vector<i64>& coefficients() const { return coeffs_; }
    const CyclotomicRing& ring() const { return *ring_; }

    friend bool operator==(const CycloInt& a, const CycloInt& b) {
        return a.ring_->order() == b.ring_->order() && a.coeffs_ == b.coeffs_;
    }

private:
    std::shared_ptr<const CyclotomicRing> ring_;
    std::vector<i64> coeffs_;
};

} // namespace bclab
