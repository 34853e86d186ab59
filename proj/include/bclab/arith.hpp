#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace bclab {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

std::vector<u64> divisors(u64 n);
u64 euler_phi(u64 n);
u64 powmod(u64 base, u64 exp, u64 mod);
u64 lcm(u64 a, u64 b);

/// Non-negative residue of a mod m.
inline i64 mod_floor(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
i64 inverse_mod(i64 a, i64 m);

/// The unique x mod m1*m2 with x = a1 (mod m1), x = a2 (mod m2); moduli coprime.
u64 crt(u64 a1, u64 m1, u64 a2, u64 m2);

} // namespace bclab
