#include "bclab/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bclab {

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t sz = out.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 euler_phi(u64 n) {
    u64 phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

u64 powmod(u64 base, u64 exp, u64 mod) {
    if (mod == 1) return 0;
    unsigned __int128 result = 1, b = base % mod;
    while (exp) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<u64>(result);
}

u64 lcm(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

i64 inverse_mod(i64 a, i64 m) {
    i64 old_r = mod_floor(a, m), r = m, old_s = 1, s = 0;
    while (r) {
        const i64 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1 && m != 1) throw std::invalid_argument("inverse_mod: not invertible");
    return mod_floor(old_s, m);
}

u64 crt(u64 a1, u64 m1, u64 a2, u64 m2) {
    // x = a1 + m1 * t with t = (a2 - a1) / m1 mod m2
    const i64 inv = inverse_mod(static_cast<i64>(m1 % m2), static_cast<i64>(m2));
    const i64 diff = mod_floor(static_cast<i64>(a2 % m2) - static_cast<i64>(a1 % m2), static_cast<i64>(m2));
    const u64 t = static_cast<u64>(static_cast<unsigned __int128>(diff) * inv % m2);
    return a1 % m1 + m1 * t;
}

} // namespace bclab
