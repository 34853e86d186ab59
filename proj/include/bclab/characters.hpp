#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "bclab/arith.hpp"
#include "bclab/cyclotomic.hpp"

namespace bclab {

/// An exact root of unity exp(2 pi i * exponent / order).
struct Zeta {
    u64 order = 1;
    i64 exponent = 0;

    Zeta reduced() const;
    std::complex<double> to_complex() const;
    Zeta operator*(const Zeta& other) const;
    Zeta pow(i64 k) const { return Zeta{order, mod_floor(exponent * k, static_cast<i64>(order))}; }
    Zeta conj() const { return pow(-1); }
    bool is_one() const { return mod_floor(exponent, static_cast<i64>(order)) == 0; }

    friend bool operator==(const Zeta& a, const Zeta& b);
};

/// (Z/MZ)^x as an explicit product of cyclic groups.
///
/// Odd prime powers contribute one primitive root each; the 2-part uses
/// -1 for 2^2 and the pair (-1, 5) for 2^k, k >= 3. Every generator is the
/// CRT lift that is 1 modulo the other prime-power parts. Instances are
/// immutable and cached per modulus.
class UnitGroup {
public:
    struct Generator {
        u64 unit;
        u64 order;
        u64 prime;         ///< prime whose local part this generator lives in
        unsigned prime_exp; ///< exponent of that prime in the modulus
    };

    static std::shared_ptr<const UnitGroup> get(u64 modulus);

    u64 modulus() const { return modulus_; }
    u64 order() const { return units_.size(); }
    /// lcm of the generator orders; character values live in mu_N for this N.
    u64 exponent() const { return exponent_; }
    std::size_t rank() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<u64>& units() const { return units_; }

    bool is_unit(i64 n) const;
    /// Exponent vector of a unit with respect to the generators.
    std::span<const std::int32_t> dlog(u64 unit) const;
    /// Product of generators raised to the given exponents.
    u64 element(std::span<const i64> exps) const;
    /// N / order of generator i; turns a character exponent into a mu_N exponent.
    i64 weight(std::size_t i) const { return static_cast<i64>(exponent_ / gens_[i].order); }

private:
    explicit UnitGroup(u64 modulus);

    u64 modulus_;
    u64 exponent_ = 1;
    std::vector<Generator> gens_;
    std::vector<u64> units_;
    std::vector<std::int32_t> dlog_;  // modulus_ * rank entries, -1 rows for non-units
};

/// A Dirichlet character on (Z/MZ)^x, stored by its exponent vector.
///
/// chi(g_i) = exp(2 pi i e_i / ord(g_i)). Evaluation on integers uses the
/// induced primitive character, and equality is equality of the primitive
/// characters, so characters of different moduli compare correctly.
class DirichletChar {
public:
    DirichletChar(std::shared_ptr<const UnitGroup> group, std::vector<i64> exponents);

    static DirichletChar trivial(u64 modulus);

    const std::shared_ptr<const UnitGroup>& group() const { return group_; }
    u64 modulus() const { return group_->modulus(); }
    const std::vector<i64>& exponents() const { return exps_; }
    u64 conductor() const { return conductor_; }
    u64 order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    /// Value at a unit mod M, as an exponent of zeta_N (N = group exponent).
    i64 unit_exponent(u64 unit) const;
    /// Primitive evaluation; nullopt (zero) iff gcd(n, conductor) > 1.
    std::optional<Zeta> operator()(i64 n) const;

    /// The same character viewed modulo a multiple of its modulus.
    DirichletChar lift(u64 modulus) const;
    /// The induced primitive character, realized modulo the conductor.
    DirichletChar primitive() const;
    DirichletChar conj() const;
    DirichletChar pow(i64 k) const;

    friend DirichletChar operator*(const DirichletChar& a, const DirichletChar& b);
    friend bool operator==(const DirichletChar& a, const DirichletChar& b);

private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<i64> exps_;
    u64 conductor_ = 1;
    u64 order_ = 1;
};

/// Lexicographic order on (modulus, exponents); used for deterministic listings.
bool exponent_less(const DirichletChar& a, const DirichletChar& b);

inline std::optional<Zeta> char_eval(const DirichletChar& chi, i64 n) { return chi(n); }
inline DirichletChar char_mul(const DirichletChar& a, const DirichletChar& b) { return a * b; }
inline DirichletChar char_conj(const DirichletChar& chi) { return chi.conj(); }
inline u64 char_order(const DirichletChar& chi) { return chi.order(); }

/// Every character of the group, in lexicographic exponent order.
std::vector<DirichletChar> all_characters(const std::shared_ptr<const UnitGroup>& group);

/// A subgroup of (Z/MZ)^x as an explicit element set plus generators.
class Subgroup {
public:
    /// Subgroup generated by the given residues; throws if one is not a unit.
    static Subgroup generated(std::shared_ptr<const UnitGroup> group, std::span<const i64> gens);
    /// Validates that the set is a subgroup; throws std::invalid_argument otherwise.
    static Subgroup from_elements(std::shared_ptr<const UnitGroup> group, std::vector<u64> elements);
    static Subgroup whole(std::shared_ptr<const UnitGroup> group);

    const std::shared_ptr<const UnitGroup>& group() const { return data_->group; }
    u64 modulus() const { return data_->group->modulus(); }
    const std::vector<u64>& elements() const { return data_->elements; }
    const std::vector<u64>& generators() const { return data_->gens; }
    std::size_t size() const { return data_->elements.size(); }
    u64 index() const { return data_->group->order() / size(); }
    bool contains(i64 n) const;
    /// Position of an element in elements(), or -1.
    std::int32_t position(u64 unit) const { return data_->position[unit % modulus()]; }

    Subgroup intersect(const Subgroup& other) const;
    /// Full preimage under (Z/LZ)^x -> (Z/MZ)^x for a multiple L of M.
    Subgroup preimage(u64 modulus) const;
    /// Order of the coset of u in G/H.
    u64 coset_order(u64 unit) const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.modulus() == b.modulus() && a.elements() == b.elements();
    }

private:
    struct Data {
        std::shared_ptr<const UnitGroup> group;
        std::vector<u64> elements;
        std::vector<u64> gens;
        std::vector<std::int32_t> position;
    };
    explicit Subgroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    static Subgroup build(std::shared_ptr<const UnitGroup> group, std::vector<u64> elements);

    std::shared_ptr<const Data> data_;
};

/// A homomorphism H -> mu_N with N the exponent of the ambient unit group.
class SubgroupChar {
public:
    /// values[i] is the mu_N exponent at subgroup().elements()[i].
    /// Throws std::invalid_argument if the map is not a homomorphism.
    static SubgroupChar make(Subgroup subgroup, std::vector<i64> values);

    const Subgroup& subgroup() const { return h_; }
    u64 root_order() const { return h_.group()->exponent(); }
    const std::vector<i64>& values() const { return values_; }
    std::optional<Zeta> at(u64 unit) const;
    bool is_trivial() const;
    u64 order() const;

    friend bool operator==(const SubgroupChar& a, const SubgroupChar& b) {
        return a.h_ == b.h_ && a.values_ == b.values_;
    }

private:
    SubgroupChar(Subgroup h, std::vector<i64> values) : h_(std::move(h)), values_(std::move(values)) {}
    Subgroup h_;
    std::vector<i64> values_;
};

/// chi restricted to H. chi is lifted to H's modulus when its modulus divides it.
SubgroupChar restrict_char(const DirichletChar& chi, const Subgroup& h);

/// All characters of G restricting to omega: exactly [G:H] of them, as
/// chi_0 * eta with eta running over the characters trivial on H. Solved as
/// a linear congruence system over the cyclic factors of G.
std::vector<DirichletChar> extensions(const SubgroupChar& omega, const std::shared_ptr<const UnitGroup>& group);

} // namespace bclab
