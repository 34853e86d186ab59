#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "bclab/arith.hpp"

namespace bclab {

struct PrimePower {
    u64 n;
    u64 p;
    unsigned k;
    double log_p;  ///< Lambda(n)
};

/// Every prime power n <= limit exactly once, in ascending order, produced
/// segment by segment with a segmented sieve of Eratosthenes.
///
/// Segments are closed intervals [lo, hi] of at most `chunk` integers, and
/// every breakpoint ends a segment, so partial sums up to a breakpoint are
/// sums over whole segments.
class PrimePowerStream {
public:
    struct Segment {
        u64 lo;
        u64 hi;
    };

    explicit PrimePowerStream(u64 limit, u64 chunk = 1'000'000, std::vector<u64> breakpoints = {});

    u64 limit() const { return limit_; }
    const std::vector<Segment>& segments() const { return segments_; }

    template <class F>
    void visit(const Segment& seg, F&& f) const {
        std::vector<char> composite;
        sieve_segment(seg, composite);
        auto it = std::lower_bound(higher_.begin(), higher_.end(), seg.lo, [](const PrimePower& a, u64 n) { return a.n < n; });
        for (u64 n = seg.lo; n <= seg.hi; ++n) {
            if (!composite[n - seg.lo]) {
                f(PrimePower{n, n, 1, std::log(static_cast<double>(n))});
            } else if (it != higher_.end() && it->n == n) {
                f(*it);
                ++it;
            }
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (const auto& s : segments_) visit(s, f);
    }

private:
    void sieve_segment(const Segment& seg, std::vector<char>& composite) const;

    u64 limit_;
    std::vector<u64> base_primes_;
    std::vector<PrimePower> higher_;  // p^k with k >= 2, ascending
    std::vector<Segment> segments_;
};

/// Plain sieve of Eratosthenes; primes <= limit.
std::vector<u64> primes_up_to(u64 limit);

} // namespace bclab
