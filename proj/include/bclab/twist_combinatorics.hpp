#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bclab/arith.hpp"

namespace bclab {

using GroupElement = std::vector<u64>;

/// A finite abelian group Z/o_1 x ... x Z/o_k with componentwise addition,
/// indexing the twists of a base representation.
class FiberGroup {
public:
    explicit FiberGroup(std::vector<u64> orders);

    const std::vector<u64>& orders() const { return orders_; }
    u64 order() const;
    GroupElement identity() const { return GroupElement(orders_.size(), 0); }
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement subtract(const GroupElement& a, const GroupElement& b) const { return add(a, negate(b)); }
    bool is_element(const GroupElement& a) const;
    /// All elements, first coordinate slowest.
    std::vector<GroupElement> elements() const;

private:
    std::vector<u64> orders_;
};

/// The twist group for a tower with the given prime relative degrees.
FiberGroup fiber_group(std::span<const u64> prime_degrees);

/// Raised when a pair set breaks the one-partner rule or fails to project to a subgroup.
class TwistConsistencyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by coprime_count when the orders are not coprime.
class NotApplicable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct PairSubgroup {
    std::vector<GroupElement> elements;  ///< sorted
    std::size_t size() const { return elements.size(); }
};

using ElementPair = std::pair<GroupElement, GroupElement>;

/// Projection of the twisted pairs to the first group, rebased at the first
/// pair's element and checked to be a subgroup. An empty pair set gives an
/// empty result. Throws TwistConsistencyError when an element occurs in two
/// pairs or the projection is not closed.
PairSubgroup pair_subgroup(const FiberGroup& group, const std::vector<ElementPair>& pairs);

/// |T| for coprime fiber orders: 1 if T is nonempty, else 0.
u64 coprime_count(u64 l, u64 l_prime, bool t_nonempty);

/// Common divisors of a and b, ascending.
std::vector<u64> common_divisors(u64 a, u64 b);

/// {(i0 + t s, j0 - t r) mod l : t = 0..l-1}: the pairs forced by
/// pi_Q = pi_Q (x) eta^s (x) psi^r starting from (i0, j0).
std::vector<std::pair<u64, u64>> noncuspidal_orbit(u64 l, u64 s, u64 r, u64 i0, u64 j0);

struct CountPrediction {
    u64 l;
    u64 l_prime;
    u64 gcd;
    bool thm1_1_applies;              ///< l = l' prime
    u64 thm1_1_cuspidal;              ///< |T| when T nonempty and the lift stays cuspidal
    std::optional<u64> thm1_1_noncuspidal;  ///< orbit size, when thm1_1 applies
    bool thm1_2_applies;              ///< gcd(l, l') = 1
    std::optional<u64> coprime;       ///< coprime_count(l, l', true)
};

CountPrediction predict_counts(u64 l, u64 l_prime, u64 s = 0, u64 r = 1);

} // namespace bclab
