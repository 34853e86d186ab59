#include "bclab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace bclab {

namespace {

// Exact division of a by the monic polynomial b (both constant term first).
std::vector<i64> divide_exact(const std::vector<i64>& a, const std::vector<i64>& b) {
    std::vector<i64> rem = a;
    const std::size_t db = b.size() - 1;
    std::vector<i64> q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const i64 c = rem[i];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (rem[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
    return q;
}

} // namespace

std::vector<i64> cyclotomic_polynomial(u64 n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    // x^n - 1 = prod_{d | n} Phi_d
    std::vector<i64> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (u64 d : divisors(n))
        if (d != n) poly = divide_exact(poly, cyclotomic_polynomial(d));
    return poly;
}

CyclotomicRing::CyclotomicRing(u64 order) : order_(order), phi_(cyclotomic_polynomial(order)) {
    const std::size_t dim = dimension();
    powers_.reserve(order_);
    std::vector<i64> cur(dim, 0);
    cur[0] = 1;
    for (u64 a = 0; a < order_; ++a) {
        powers_.push_back(cur);
        // multiply by x and reduce the x^dim term
        std::vector<i64> next(dim, 0);
        for (std::size_t i = 0; i + 1 < dim; ++i) next[i + 1] = cur[i];
        const i64 top = cur[dim - 1];
        for (std::size_t i = 0; i < dim; ++i) next[i] -= top * phi_[i];
        cur = std::move(next);
    }
}

std::shared_ptr<const CyclotomicRing> CyclotomicRing::get(u64 order) {
    if (order == 0) throw std::invalid_argument("CyclotomicRing: order must be positive");
    static std::mutex mutex;
    static std::map<u64, std::shared_ptr<const CyclotomicRing>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[order];
    if (!slot) slot = std::shared_ptr<const CyclotomicRing>(new CyclotomicRing(order));
    return slot;
}

CycloInt::CycloInt(std::shared_ptr<const CyclotomicRing> ring)
    : ring_(std::move(ring)), coeffs_(ring_->dimension(), 0) {}

CycloInt CycloInt::root(std::shared_ptr<const CyclotomicRing> ring, i64 exponent, i64 multiplicity) {
    CycloInt z(std::move(ring));
    z.add_root(exponent, multiplicity);
    return z;
}

CycloInt& CycloInt::add_root(i64 exponent, i64 multiplicity) {
    const auto& p = ring_->power(exponent);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += multiplicity * p[i];
    return *this;
}

CycloInt& CycloInt::operator+=(const CycloInt& other) {
    if (other.ring_->order() != ring_->order()) throw std::invalid_argument("CycloInt: ring mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

CycloInt CycloInt::operator*(const CycloInt& other) const {
    if (other.ring_->order() != ring_->order()) throw std::invalid_argument("CycloInt: ring mismatch");
    CycloInt out(ring_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i]) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            if (other.coeffs_[j]) out.add_root(static_cast<i64>(i + j), coeffs_[i] * other.coeffs_[j]);
    }
    return out;
}

CycloInt CycloInt::conj() const {
    CycloInt out(ring_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i]) out.add_root(-static_cast<i64>(i), coeffs_[i]);
    return out;
}

bool CycloInt::is_zero() const {
    for (i64 c : coeffs_)
        if (c) return false;
    return true;
}

std::complex<double> CycloInt::to_complex() const {
    std::complex<double> z = 0.0;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(ring_->order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i]) z += static_cast<double>(coeffs_[i]) * std::polar(1.0, step * static_cast<double>(i));
    return z;
}

} // namespace bclab
