#include "bclab/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bclab/smith.hpp"

namespace bclab {

// ---------------------------------------------------------------- Zeta

Zeta Zeta::reduced() const {
    const i64 n = static_cast<i64>(order);
    const i64 a = mod_floor(exponent, n);
    const i64 g = std::gcd(a, n);
    return Zeta{static_cast<u64>(n / g), a / g};
}

std::complex<double> Zeta::to_complex() const {
    const Zeta z = reduced();
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(z.exponent) / static_cast<double>(z.order));
}

Zeta Zeta::operator*(const Zeta& other) const {
    const u64 n = lcm(order, other.order);
    const i64 a = exponent * static_cast<i64>(n / order) + other.exponent * static_cast<i64>(n / other.order);
    return Zeta{n, mod_floor(a, static_cast<i64>(n))};
}

bool operator==(const Zeta& a, const Zeta& b) {
    const Zeta x = a.reduced(), y = b.reduced();
    return x.order == y.order && x.exponent == y.exponent;
}

// ---------------------------------------------------------------- UnitGroup

namespace {

u64 primitive_root_mod_prime_power(u64 p, unsigned e) {
    const auto factors = factorize(p - 1);
    u64 g = 2;
    for (;; ++g) {
        bool ok = true;
        for (auto [q, k] : factors)
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) break;
    }
    if (e >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
    return g;
}

} // namespace

UnitGroup::UnitGroup(u64 modulus) : modulus_(modulus) {
    const auto factors = factorize(modulus);
    auto lift = [&](u64 local, u64 pe) { return crt(local % pe, pe, 1 % (modulus / pe), modulus / pe); };

    for (auto [p, e] : factors) {
        u64 pe = 1;
        for (unsigned k = 0; k < e; ++k) pe *= p;
        if (p == 2) {
            if (e == 2) {
                gens_.push_back({lift(3, pe), 2, 2, e});
            } else if (e >= 3) {
                gens_.push_back({lift(pe - 1, pe), 2, 2, e});
                gens_.push_back({lift(5, pe), pe / 4, 2, e});
            }
        } else {
            gens_.push_back({lift(primitive_root_mod_prime_power(p, e), pe), pe / p * (p - 1), p, e});
        }
    }
    for (const auto& g : gens_) exponent_ = lcm(exponent_, g.order);

    const std::size_t r = gens_.size();
    dlog_.assign(modulus_ * r, -1);
    std::vector<std::int32_t> counter(r, 0);
    u64 phi = 1;
    for (const auto& g : gens_) phi *= g.order;
    units_.reserve(phi);
    for (u64 idx = 0; idx < phi; ++idx) {
        u64 value = 1 % modulus_;
        for (std::size_t i = 0; i < r; ++i)
            value = static_cast<u64>(static_cast<unsigned __int128>(value) * powmod(gens_[i].unit, static_cast<u64>(counter[i]), modulus_) % modulus_);
        if (r > 0) {
            if (dlog_[value * r] != -1) throw std::logic_error("UnitGroup: generators are not independent");
            std::copy(counter.begin(), counter.end(), dlog_.begin() + static_cast<std::ptrdiff_t>(value * r));
        }
        units_.push_back(value);
        for (std::size_t i = 0; i < r; ++i) {
            if (static_cast<u64>(++counter[i]) < gens_[i].order) break;
            counter[i] = 0;
        }
    }
    std::sort(units_.begin(), units_.end());
    if (units_.size() != euler_phi(modulus_)) throw std::logic_error("UnitGroup: generators do not span");
}

std::shared_ptr<const UnitGroup> UnitGroup::get(u64 modulus) {
    if (modulus == 0) throw std::invalid_argument("unit_group: modulus must be positive");
    static std::mutex mutex;
    static std::map<u64, std::shared_ptr<const UnitGroup>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[modulus];
    if (!slot) slot = std::shared_ptr<const UnitGroup>(new UnitGroup(modulus));
    return slot;
}

bool UnitGroup::is_unit(i64 n) const {
    return std::gcd(static_cast<u64>(mod_floor(n, static_cast<i64>(modulus_))), modulus_) == 1;
}

std::span<const std::int32_t> UnitGroup::dlog(u64 unit) const {
    const std::size_t r = gens_.size();
    const u64 u = unit % modulus_;
    if (r > 0 && dlog_[u * r] < 0) throw std::invalid_argument("dlog: " + std::to_string(unit) + " is not a unit mod " + std::to_string(modulus_));
    return {dlog_.data() + u * r, r};
}

u64 UnitGroup::element(std::span<const i64> exps) const {
    u64 value = 1 % modulus_;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const u64 e = static_cast<u64>(mod_floor(exps[i], static_cast<i64>(gens_[i].order)));
        value = static_cast<u64>(static_cast<unsigned __int128>(value) * powmod(gens_[i].unit, e, modulus_) % modulus_);
    }
    return value;
}

// ---------------------------------------------------------------- DirichletChar

DirichletChar::DirichletChar(std::shared_ptr<const UnitGroup> group, std::vector<i64> exponents)
    : group_(std::move(group)), exps_(std::move(exponents)) {
    const auto& gens = group_->generators();
    if (exps_.size() != gens.size())
        throw std::invalid_argument("DirichletChar: exponent vector has " + std::to_string(exps_.size()) +
                                    " entries, the group mod " + std::to_string(group_->modulus()) + " has " +
                                    std::to_string(gens.size()) + " generators");
    const i64 n = static_cast<i64>(group_->exponent());
    i64 g = n;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        exps_[i] = mod_floor(exps_[i], static_cast<i64>(gens[i].order));
        g = std::gcd(g, exps_[i] * group_->weight(i));
    }
    order_ = static_cast<u64>(n / g);

    // Conductor, one prime at a time.
    conductor_ = 1;
    for (std::size_t i = 0; i < gens.size();) {
        const u64 p = gens[i].prime;
        std::size_t j = i;
        while (j < gens.size() && gens[j].prime == p) ++j;
        auto local_order = [&](std::size_t k) {
            const i64 o = static_cast<i64>(gens[k].order);
            return static_cast<u64>(o / std::gcd(o, exps_[k]));
        };
        unsigned c = 0;
        if (p == 2) {
            if (j - i == 2 && local_order(i + 1) > 1) {
                u64 o = local_order(i + 1);
                c = 2;
                while (o > 1) {
                    o /= 2;
                    ++c;
                }
            } else if (local_order(i) > 1) {
                c = 2;
            }
        } else {
            const u64 o = local_order(i);
            if (o > 1) {
                u64 phi = p - 1;
                c = 1;
                while (phi % o != 0) {
                    phi *= p;
                    ++c;
                }
            }
        }
        for (unsigned k = 0; k < c; ++k) conductor_ *= p;
        i = j;
    }
}

DirichletChar DirichletChar::trivial(u64 modulus) {
    auto g = UnitGroup::get(modulus);
    return DirichletChar(g, std::vector<i64>(g->rank(), 0));
}

i64 DirichletChar::unit_exponent(u64 unit) const {
    const auto d = group_->dlog(unit);
    const i64 n = static_cast<i64>(group_->exponent());
    i64 a = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) a = (a + exps_[i] * group_->weight(i) % n * d[i]) % n;
    return a;
}

std::optional<Zeta> DirichletChar::operator()(i64 n) const {
    const u64 m = group_->modulus();
    if (std::gcd(static_cast<u64>(mod_floor(n, static_cast<i64>(conductor_))), conductor_) != 1) return std::nullopt;
    u64 u = static_cast<u64>(mod_floor(n, static_cast<i64>(m)));
    if (std::gcd(u, m) != 1) {
        // u = n modulo the conductor's primes, 1 modulo the rest of M.
        u64 m1 = 1;
        for (auto [p, e] : factorize(m))
            if (conductor_ % p == 0)
                for (unsigned k = 0; k < e; ++k) m1 *= p;
        u = crt(u % m1, m1, 1 % (m / m1), m / m1);
    }
    return Zeta{group_->exponent(), unit_exponent(u)};
}

DirichletChar DirichletChar::lift(u64 modulus) const {
    const u64 m = group_->modulus();
    if (modulus == m) return *this;
    if (modulus % m != 0)
        throw std::invalid_argument("lift: modulus " + std::to_string(modulus) + " is not a multiple of " + std::to_string(m));
    auto big = UnitGroup::get(modulus);
    const u64 n = group_->exponent();
    std::vector<i64> exps;
    exps.reserve(big->rank());
    for (const auto& g : big->generators()) {
        const i64 a = unit_exponent(g.unit % m);
        const i64 scaled = a * static_cast<i64>(g.order);
        if (scaled % static_cast<i64>(n) != 0) throw std::logic_error("lift: value order does not divide generator order");
        exps.push_back(scaled / static_cast<i64>(n));
    }
    return DirichletChar(big, std::move(exps));
}

DirichletChar DirichletChar::primitive() const {
    if (conductor_ == modulus()) return *this;
    auto small = UnitGroup::get(conductor_);
    const i64 n = static_cast<i64>(group_->exponent());
    std::vector<i64> exps;
    exps.reserve(small->rank());
    for (const auto& g : small->generators()) {
        const i64 scaled = (*this)(static_cast<i64>(g.unit))->exponent * static_cast<i64>(g.order);
        if (scaled % n != 0) throw std::logic_error("primitive: value order does not divide generator order");
        exps.push_back(scaled / n);
    }
    return DirichletChar(small, std::move(exps));
}

DirichletChar DirichletChar::conj() const { return pow(-1); }

DirichletChar DirichletChar::pow(i64 k) const {
    std::vector<i64> e = exps_;
    for (auto& x : e) x *= k;
    return DirichletChar(group_, std::move(e));
}

DirichletChar operator*(const DirichletChar& a, const DirichletChar& b) {
    if (a.modulus() != b.modulus()) {
        const u64 l = lcm(a.modulus(), b.modulus());
        return a.lift(l) * b.lift(l);
    }
    std::vector<i64> e = a.exps_;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exps_[i];
    return DirichletChar(a.group_, std::move(e));
}

bool operator==(const DirichletChar& a, const DirichletChar& b) {
    if (a.modulus() == b.modulus()) return a.exps_ == b.exps_;
    if (a.conductor_ != b.conductor_ || a.order_ != b.order_) return false;
    const u64 f = a.conductor_;
    for (u64 r = 1; r < f; ++r) {
        if (std::gcd(r, f) != 1) continue;
        if (!(*a(static_cast<i64>(r)) == *b(static_cast<i64>(r)))) return false;
    }
    return true;
}

bool exponent_less(const DirichletChar& a, const DirichletChar& b) {
    if (a.modulus() != b.modulus()) return a.modulus() < b.modulus();
    return a.exponents() < b.exponents();
}

std::vector<DirichletChar> all_characters(const std::shared_ptr<const UnitGroup>& group) {
    std::vector<DirichletChar> out;
    const auto& gens = group->generators();
    std::vector<i64> e(gens.size(), 0);
    out.reserve(group->order());
    for (u64 idx = 0; idx < group->order(); ++idx) {
        out.emplace_back(group, e);
        // last coordinate fastest so the listing is lexicographic
        for (std::size_t i = gens.size(); i-- > 0;) {
            if (static_cast<u64>(++e[i]) < gens[i].order) break;
            e[i] = 0;
        }
    }
    return out;
}

// ---------------------------------------------------------------- Subgroup

namespace {

// Span of a set of units, by repeated multiplication.
std::vector<u64> closure(const UnitGroup& g, const std::vector<u64>& gens) {
    const u64 m = g.modulus();
    std::vector<char> seen(m, 0);
    std::vector<u64> elems{1 % m};
    seen[1 % m] = 1;
    for (u64 gen : gens) {
        std::vector<u64> layer = elems;
        for (;;) {
            std::vector<u64> next;
            for (u64 x : layer) {
                const u64 y = x * gen % m;
                if (!seen[y]) {
                    seen[y] = 1;
                    next.push_back(y);
                }
            }
            if (next.empty()) break;
            elems.insert(elems.end(), next.begin(), next.end());
            layer = std::move(next);
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

} // namespace

Subgroup Subgroup::build(std::shared_ptr<const UnitGroup> group, std::vector<u64> elements) {
    auto data = std::make_shared<Data>();
    const u64 m = group->modulus();
    data->position.assign(m, -1);
    std::sort(elements.begin(), elements.end());
    for (std::size_t i = 0; i < elements.size(); ++i) data->position[elements[i]] = static_cast<std::int32_t>(i);

    // greedy generators: add any element not yet spanned
    std::vector<char> spanned(m, 0);
    spanned[1 % m] = 1;
    std::vector<u64> span_elems{1 % m};
    for (u64 x : elements) {
        if (spanned[x]) continue;
        data->gens.push_back(x);
        span_elems = closure(*group, data->gens);
        for (u64 y : span_elems) spanned[y] = 1;
    }
    if (span_elems.size() != elements.size()) throw std::invalid_argument("subgroup: element set is not closed under multiplication");
    data->group = std::move(group);
    data->elements = std::move(elements);
    return Subgroup(std::move(data));
}

Subgroup Subgroup::generated(std::shared_ptr<const UnitGroup> group, std::span<const i64> gens) {
    std::vector<u64> units;
    for (i64 g : gens) {
        if (!group->is_unit(g))
            throw std::invalid_argument("subgroup generator " + std::to_string(g) + " is not coprime to " + std::to_string(group->modulus()));
        units.push_back(static_cast<u64>(mod_floor(g, static_cast<i64>(group->modulus()))));
    }
    auto elems = closure(*group, units);
    return build(std::move(group), std::move(elems));
}

Subgroup Subgroup::from_elements(std::shared_ptr<const UnitGroup> group, std::vector<u64> elements) {
    const u64 m = group->modulus();
    for (auto& x : elements) {
        x %= m;
        if (!group->is_unit(static_cast<i64>(x))) throw std::invalid_argument("subgroup: " + std::to_string(x) + " is not a unit mod " + std::to_string(m));
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return build(std::move(group), std::move(elements));
}

Subgroup Subgroup::whole(std::shared_ptr<const UnitGroup> group) {
    auto units = group->units();
    return build(std::move(group), std::move(units));
}

bool Subgroup::contains(i64 n) const {
    return data_->position[static_cast<u64>(mod_floor(n, static_cast<i64>(modulus())))] >= 0;
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
    if (other.modulus() != modulus()) throw std::invalid_argument("intersect: subgroups of different moduli");
    std::vector<u64> out;
    std::set_intersection(elements().begin(), elements().end(), other.elements().begin(), other.elements().end(), std::back_inserter(out));
    return build(group(), std::move(out));
}

Subgroup Subgroup::preimage(u64 modulus) const {
    const u64 m = this->modulus();
    if (modulus == m) return *this;
    if (modulus % m != 0) throw std::invalid_argument("preimage: " + std::to_string(modulus) + " is not a multiple of " + std::to_string(m));
    auto big = UnitGroup::get(modulus);
    std::vector<u64> out;
    for (u64 u : big->units())
        if (contains(static_cast<i64>(u % m))) out.push_back(u);
    return build(std::move(big), std::move(out));
}

u64 Subgroup::coset_order(u64 unit) const {
    const u64 m = modulus();
    u64 x = unit % m;
    u64 f = 1;
    while (!contains(static_cast<i64>(x))) {
        x = x * (unit % m) % m;
        ++f;
    }
    return f;
}

// ---------------------------------------------------------------- SubgroupChar

SubgroupChar SubgroupChar::make(Subgroup subgroup, std::vector<i64> values) {
    if (values.size() != subgroup.size()) throw std::invalid_argument("subgroup character: one value per subgroup element required");
    const i64 n = static_cast<i64>(subgroup.group()->exponent());
    for (auto& v : values) v = mod_floor(v, n);
    const u64 m = subgroup.modulus();
    if (values[static_cast<std::size_t>(subgroup.position(1 % m))] != 0) throw std::invalid_argument("subgroup character: not a homomorphism (value at 1 is not 1)");
    const auto& elems = subgroup.elements();
    for (u64 g : subgroup.generators()) {
        const i64 vg = values[static_cast<std::size_t>(subgroup.position(g))];
        for (std::size_t i = 0; i < elems.size(); ++i) {
            const u64 hg = elems[i] * g % m;
            if (values[static_cast<std::size_t>(subgroup.position(hg))] != (values[i] + vg) % n)
                throw std::invalid_argument("subgroup character: not a homomorphism at " + std::to_string(elems[i]) + "*" + std::to_string(g));
        }
    }
    return SubgroupChar(std::move(subgroup), std::move(values));
}

std::optional<Zeta> SubgroupChar::at(u64 unit) const {
    const auto pos = h_.position(unit % h_.modulus());
    if (pos < 0) return std::nullopt;
    return Zeta{root_order(), values_[static_cast<std::size_t>(pos)]};
}

bool SubgroupChar::is_trivial() const {
    return std::all_of(values_.begin(), values_.end(), [](i64 v) { return v == 0; });
}

u64 SubgroupChar::order() const {
    i64 g = static_cast<i64>(root_order());
    for (i64 v : values_) g = std::gcd(g, v);
    return root_order() / static_cast<u64>(g);
}

SubgroupChar restrict_char(const DirichletChar& chi, const Subgroup& h) {
    const DirichletChar c = chi.modulus() == h.modulus() ? chi : chi.lift(h.modulus());
    std::vector<i64> values;
    values.reserve(h.size());
    for (u64 x : h.elements()) values.push_back(c.unit_exponent(x));
    return SubgroupChar::make(h, std::move(values));
}

std::vector<DirichletChar> extensions(const SubgroupChar& omega, const std::shared_ptr<const UnitGroup>& group) {
    const Subgroup& h = omega.subgroup();
    if (h.modulus() != group->modulus())
        throw std::invalid_argument("extensions: subgroup modulus " + std::to_string(h.modulus()) + " differs from group modulus " +
                                    std::to_string(group->modulus()));
    const auto& gens = group->generators();
    const std::size_t r = gens.size();
    const auto& hgens = h.generators();
    const std::size_t s = hgens.size();
    const i64 n = static_cast<i64>(group->exponent());

    // sum_i weight_i * dlog_i(h_k) * e_i = omega(h_k)  (mod N)
    IntMatrix b(s, std::vector<i64>(r, 0));
    std::vector<i64> w(s);
    for (std::size_t k = 0; k < s; ++k) {
        const auto d = group->dlog(hgens[k]);
        for (std::size_t i = 0; i < r; ++i) b[k][i] = group->weight(i) * d[i] % n;
        w[k] = omega.at(hgens[k])->exponent;
    }
    const Diagonalization dz = diagonalize(b, r);
    const std::size_t rank = dz.diagonal.size();

    std::vector<i64> rhs(s, 0);
    for (std::size_t k = 0; k < s; ++k)
        for (std::size_t j = 0; j < s; ++j) rhs[k] = mod_floor(rhs[k] + mod_floor(dz.left[k][j], n) * w[j], n);

    std::vector<i64> y(r, 0);
    for (std::size_t j = 0; j < s; ++j) {
        if (j >= rank) {
            if (rhs[j] != 0) throw std::invalid_argument("extensions: omega is not a homomorphism");
            continue;
        }
        const i64 g = std::gcd(dz.diagonal[j], n);
        if (rhs[j] % g != 0) throw std::invalid_argument("extensions: omega is not a homomorphism");
        const i64 m = n / g;
        y[j] = m == 1 ? 0 : mod_floor((rhs[j] / g) % m * inverse_mod(mod_floor(dz.diagonal[j] / g, m), m), m);
    }

    auto apply_q = [&](const std::vector<i64>& v) {
        std::vector<i64> out(r, 0);
        for (std::size_t i = 0; i < r; ++i) {
            const i64 o = static_cast<i64>(gens[i].order);
            for (std::size_t j = 0; j < r; ++j) out[i] = mod_floor(out[i] + mod_floor(dz.right[i][j], o) * mod_floor(v[j], o), o);
        }
        return out;
    };
    const std::vector<i64> base = apply_q(y);

    // Characters trivial on H: image under Q of the lattice {y : D y = 0 mod N}.
    std::vector<std::vector<i64>> kernel_gens;
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<i64> unit(r, 0);
        unit[j] = j < rank ? n / std::gcd(dz.diagonal[j], n) : 1;
        kernel_gens.push_back(apply_q(unit));
    }
    auto encode = [&](const std::vector<i64>& v) {
        u64 code = 0;
        for (std::size_t i = 0; i < r; ++i) code = code * gens[i].order + static_cast<u64>(v[i]);
        return code;
    };
    std::vector<char> seen(group->order(), 0);
    std::vector<std::vector<i64>> kernel{std::vector<i64>(r, 0)};
    seen[0] = 1;
    for (std::size_t at = 0; at < kernel.size(); ++at) {
        for (const auto& g : kernel_gens) {
            std::vector<i64> v = kernel[at];
            for (std::size_t i = 0; i < r; ++i) v[i] = (v[i] + g[i]) % static_cast<i64>(gens[i].order);
            const u64 code = encode(v);
            if (!seen[code]) {
                seen[code] = 1;
                kernel.push_back(std::move(v));
            }
        }
    }
    if (kernel.size() != h.index()) throw std::logic_error("extensions: annihilator size differs from the index of H");

    std::vector<DirichletChar> out;
    out.reserve(kernel.size());
    for (const auto& k : kernel) {
        std::vector<i64> e(r);
        for (std::size_t i = 0; i < r; ++i) e[i] = base[i] + k[i];
        out.emplace_back(group, std::move(e));
    }
    for (u64 g : hgens)
        if (out.front().unit_exponent(g) != omega.at(g)->exponent) throw std::logic_error("extensions: particular solution does not restrict to omega");
    std::sort(out.begin(), out.end(), exponent_less);
    return out;
}

} // namespace bclab
