#include "bclab/sieve.hpp"

#include <stdexcept>

namespace bclab {

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<char> composite(limit + 1, 0);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return out;
}

PrimePowerStream::PrimePowerStream(u64 limit, u64 chunk, std::vector<u64> breakpoints) : limit_(limit) {
    if (chunk == 0) throw std::invalid_argument("PrimePowerStream: chunk must be positive");
    u64 root = static_cast<u64>(std::sqrt(static_cast<double>(limit)));
    while (root * root > limit) --root;
    while ((root + 1) * (root + 1) <= limit) ++root;
    base_primes_ = primes_up_to(root);

    for (u64 p : base_primes_) {
        const double lp = std::log(static_cast<double>(p));
        u64 n = p * p;
        for (unsigned k = 2;; ++k) {
            higher_.push_back({n, p, k, lp});
            if (n > limit / p) break;
            n *= p;
        }
    }
    std::sort(higher_.begin(), higher_.end(), [](const PrimePower& a, const PrimePower& b) { return a.n < b.n; });
    while (!higher_.empty() && higher_.back().n > limit) higher_.pop_back();

    std::sort(breakpoints.begin(), breakpoints.end());
    auto bp = breakpoints.begin();
    u64 lo = 2;
    while (lo <= limit) {
        while (bp != breakpoints.end() && *bp < lo) ++bp;
        u64 hi = std::min(limit, lo + chunk - 1);
        if (bp != breakpoints.end() && *bp < hi) hi = *bp;
        segments_.push_back({lo, hi});
        lo = hi + 1;
    }
}

void PrimePowerStream::sieve_segment(const Segment& seg, std::vector<char>& composite) const {
    composite.assign(seg.hi - seg.lo + 1, 0);
    for (u64 p : base_primes_) {
        if (p * p > seg.hi) break;
        u64 start = std::max(p * p, (seg.lo + p - 1) / p * p);
        for (u64 j = start; j <= seg.hi; j += p) composite[j - seg.lo] = 1;
    }
}

} // namespace bclab
