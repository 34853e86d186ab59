#pragma once

#include <span>
#include <vector>

#include "bclab/characters.hpp"

namespace bclab {

/// An abelian number field E inside Q(zeta_M), given by H = Gal(Q(zeta_M)/E).
class AbelianField {
public:
    explicit AbelianField(Subgroup h);

    /// Field fixed by the subgroup generated by gens; throws on non-units.
    static AbelianField make(u64 modulus, std::span<const i64> gens);
    static AbelianField rationals(u64 modulus = 1);

    const Subgroup& subgroup() const { return h_; }
    const std::shared_ptr<const UnitGroup>& ambient() const { return h_.group(); }
    u64 modulus() const { return h_.modulus(); }
    u64 degree() const { return h_.index(); }
    u64 conductor() const { return conductor_; }
    bool is_cyclic() const;

    /// The same field realized inside Q(zeta_L), L a multiple of the modulus.
    AbelianField lift(u64 modulus) const;
    /// The same field realized at its conductor.
    AbelianField primitive() const;
    /// True if other is a subfield of this field.
    bool contains(const AbelianField& other) const;

    friend bool operator==(const AbelianField& a, const AbelianField& b);

private:
    Subgroup h_;
    u64 conductor_ = 1;
};

inline AbelianField make_field(u64 modulus, std::span<const i64> gens) { return AbelianField::make(modulus, gens); }

struct SplittingData {
    u64 p = 0;
    u64 f = 0;  ///< residue degree (0 when ramified)
    u64 g = 0;  ///< number of primes above p (0 when ramified)
    bool ramified = false;
};

SplittingData splitting_data(const AbelianField& field, u64 p);

AbelianField compositum(const AbelianField& e, const AbelianField& f);

/// [EF:Q] = [E:Q][F:Q], i.e. Gal(EF/Q) is the product by restriction.
bool galois_product_check(const AbelianField& e, const AbelianField& f);

struct TowerStep {
    AbelianField upper;
    AbelianField lower;
    u64 degree;
};

/// E = E_0 > E_1 > ... > Q with prime relative degrees, largest prime first.
/// Empty for E = Q.
std::vector<TowerStep> tower(const AbelianField& field);

/// Relative degrees of tower(field), in order.
std::vector<u64> tower_degrees(const AbelianField& field);

std::vector<Subgroup> all_subgroups(const std::shared_ptr<const UnitGroup>& group);

/// Every abelian field whose conductor is exactly f, realized modulo f.
std::vector<AbelianField> fields_of_conductor(u64 f);

} // namespace bclab
