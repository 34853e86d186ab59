#include "bclab/twist_combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace bclab {

namespace {

std::string show(const GroupElement& g) {
    std::string s = "(";
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
    return s + ")";
}

} // namespace

FiberGroup::FiberGroup(std::vector<u64> orders) : orders_(std::move(orders)) {
    for (u64 o : orders_)
        if (o == 0) throw std::invalid_argument("FiberGroup: cyclic orders must be positive");
}

u64 FiberGroup::order() const {
    u64 n = 1;
    for (u64 o : orders_) n *= o;
    return n;
}

GroupElement FiberGroup::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement c(orders_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) % orders_[i];
    return c;
}

GroupElement FiberGroup::negate(const GroupElement& a) const {
    GroupElement c(orders_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (orders_[i] - a[i] % orders_[i]) % orders_[i];
    return c;
}

bool FiberGroup::is_element(const GroupElement& a) const {
    if (a.size() != orders_.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] >= orders_[i]) return false;
    return true;
}

std::vector<GroupElement> FiberGroup::elements() const {
    std::vector<GroupElement> out;
    GroupElement g = identity();
    for (u64 idx = 0; idx < order(); ++idx) {
        out.push_back(g);
        for (std::size_t i = g.size(); i-- > 0;) {
            if (++g[i] < orders_[i]) break;
            g[i] = 0;
        }
    }
    return out;
}

FiberGroup fiber_group(std::span<const u64> prime_degrees) {
    if (prime_degrees.empty()) throw std::invalid_argument("fiber_group: empty degree list");
    for (u64 d : prime_degrees)
        if (!is_prime(d)) throw std::invalid_argument("fiber_group: degree " + std::to_string(d) + " is not prime");
    return FiberGroup(std::vector<u64>(prime_degrees.begin(), prime_degrees.end()));
}

PairSubgroup pair_subgroup(const FiberGroup& group, const std::vector<ElementPair>& pairs) {
    PairSubgroup out;
    if (pairs.empty()) return out;

    std::set<GroupElement> firsts, seconds;
    for (const auto& [g, h] : pairs) {
        if (!group.is_element(g)) throw TwistConsistencyError("pair_subgroup: " + show(g) + " is not an element of the fiber group");
        if (!firsts.insert(g).second)
            throw TwistConsistencyError("pair_subgroup: " + show(g) + " is twisted equivalent to two partners (one-partner rule violated)");
        if (!seconds.insert(h).second)
            throw TwistConsistencyError("pair_subgroup: partner " + show(h) + " occurs in two pairs (one-partner rule violated)");
    }

    // relabel so that the first pair sits at the identity
    const GroupElement base = pairs.front().first;
    std::set<GroupElement> shifted;
    for (const auto& g : firsts) shifted.insert(group.subtract(g, base));
    for (const auto& a : shifted)
        for (const auto& b : shifted)
            if (!shifted.count(group.subtract(a, b)))
                throw TwistConsistencyError("pair_subgroup: projection of " + std::to_string(pairs.size()) +
                                            " pairs is not a subgroup coset (difference " + show(group.subtract(a, b)) + " missing); " +
                                            (group.order() % pairs.size() ? "its size does not divide the group order" : "closure fails"));
    out.elements.assign(shifted.begin(), shifted.end());
    if (group.order() % out.size() != 0) throw std::logic_error("pair_subgroup: subgroup order does not divide group order");
    return out;
}

std::vector<u64> common_divisors(u64 a, u64 b) {
    std::vector<u64> out;
    for (u64 d : divisors(std::gcd(a, b))) out.push_back(d);
    return out;
}

u64 coprime_count(u64 l, u64 l_prime, bool t_nonempty) {
    if (l == 0 || l_prime == 0) throw std::invalid_argument("coprime_count: orders must be positive");
    if (std::gcd(l, l_prime) != 1)
        throw NotApplicable("coprime_count: gcd(" + std::to_string(l) + ", " + std::to_string(l_prime) + ") != 1");
    if (!t_nonempty) return 0;
    // |T| divides both orders
    const auto common = common_divisors(l, l_prime);
    return common.back();
}

std::vector<std::pair<u64, u64>> noncuspidal_orbit(u64 l, u64 s, u64 r, u64 i0, u64 j0) {
    if (!is_prime(l)) throw std::invalid_argument("noncuspidal_orbit: l = " + std::to_string(l) + " is not prime");
    if (s >= l) throw std::invalid_argument("noncuspidal_orbit: s must lie in [0, l)");
    if (r % l == 0) throw std::invalid_argument("noncuspidal_orbit: r = 0 mod l makes the relation trivial on the psi side");
    if (r >= l) throw std::invalid_argument("noncuspidal_orbit: r must lie in [1, l)");
    std::set<std::pair<u64, u64>> orbit;
    std::vector<std::pair<u64, u64>> out;
    for (u64 t = 0; t < l; ++t) {
        std::pair<u64, u64> pt{(i0 + t * s) % l, (j0 % l + l * l - (t * r) % l) % l};
        if (orbit.insert(pt).second) out.push_back(pt);
    }
    return out;
}

CountPrediction predict_counts(u64 l, u64 l_prime, u64 s, u64 r) {
    if (l == 0 || l_prime == 0) throw std::invalid_argument("predict_counts: degrees must be positive");
    CountPrediction c{};
    c.l = l;
    c.l_prime = l_prime;
    c.gcd = std::gcd(l, l_prime);
    c.thm1_1_applies = l == l_prime && is_prime(l);
    c.thm1_1_cuspidal = 1;
    if (c.thm1_1_applies) c.thm1_1_noncuspidal = noncuspidal_orbit(l, s % l, r, 0, 0).size();
    c.thm1_2_applies = c.gcd == 1;
    if (c.thm1_2_applies) c.coprime = coprime_count(l, l_prime, true);
    return c;
}

} // namespace bclab
