#include "bclab/fields.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace bclab {

AbelianField::AbelianField(Subgroup h) : h_(std::move(h)) {
    const auto& units = h_.group()->units();
    for (u64 d : divisors(h_.modulus())) {
        // smallest d such that every unit = 1 (mod d) lies in H
        const bool ok = std::all_of(units.begin(), units.end(),
                                    [&](u64 u) { return u % d != 1 % d || h_.contains(static_cast<i64>(u)); });
        if (ok) {
            conductor_ = d;
            break;
        }
    }
}

AbelianField AbelianField::make(u64 modulus, std::span<const i64> gens) {
    return AbelianField(Subgroup::generated(UnitGroup::get(modulus), gens));
}

AbelianField AbelianField::rationals(u64 modulus) { return AbelianField(Subgroup::whole(UnitGroup::get(modulus))); }

bool AbelianField::is_cyclic() const {
    const u64 l = degree();
    for (u64 u : ambient()->units())
        if (h_.coset_order(u) == l) return true;
    return false;
}

AbelianField AbelianField::lift(u64 modulus) const { return AbelianField(h_.preimage(modulus)); }

AbelianField AbelianField::primitive() const {
    const u64 f = conductor_;
    std::vector<u64> image;
    for (u64 x : h_.elements()) image.push_back(x % f);
    return AbelianField(Subgroup::from_elements(UnitGroup::get(f), std::move(image)));
}

bool AbelianField::contains(const AbelianField& other) const {
    const u64 l = bclab::lcm(modulus(), other.modulus());
    const auto a = h_.preimage(l), b = other.h_.preimage(l);
    return std::all_of(a.elements().begin(), a.elements().end(), [&](u64 x) { return b.contains(static_cast<i64>(x)); });
}

bool operator==(const AbelianField& a, const AbelianField& b) {
    if (a.conductor_ != b.conductor_ || a.degree() != b.degree()) return false;
    const u64 l = lcm(a.modulus(), b.modulus());
    return a.h_.preimage(l) == b.h_.preimage(l);
}

SplittingData splitting_data(const AbelianField& field, u64 p) {
    if (!is_prime(p)) throw std::invalid_argument("splitting_data: " + std::to_string(p) + " is not prime");
    SplittingData s;
    s.p = p;
    if (field.conductor() % p == 0) {
        s.ramified = true;
        return s;
    }
    const AbelianField prim = field.primitive();
    s.f = prim.subgroup().coset_order(p % prim.modulus());
    s.g = field.degree() / s.f;
    return s;
}

AbelianField compositum(const AbelianField& e, const AbelianField& f) {
    const u64 l = lcm(e.modulus(), f.modulus());
    return AbelianField(e.subgroup().preimage(l).intersect(f.subgroup().preimage(l)));
}

bool galois_product_check(const AbelianField& e, const AbelianField& f) {
    return compositum(e, f).degree() == e.degree() * f.degree();
}

std::vector<TowerStep> tower(const AbelianField& field) {
    std::vector<TowerStep> steps;
    Subgroup h = field.subgroup();
    const auto group = field.ambient();
    while (h.index() > 1) {
        const u64 p = factorize(h.index()).back().first;
        u64 pick = 0;
        for (u64 u : group->units())
            if (h.coset_order(u) == p) {
                pick = u;
                break;
            }
        std::vector<i64> gens(h.generators().begin(), h.generators().end());
        gens.push_back(static_cast<i64>(pick));
        Subgroup next = Subgroup::generated(group, gens);
        steps.push_back({AbelianField(h), AbelianField(next), p});
        h = std::move(next);
    }
    return steps;
}

std::vector<u64> tower_degrees(const AbelianField& field) {
    std::vector<u64> out;
    for (const auto& s : tower(field)) out.push_back(s.degree);
    return out;
}

std::vector<Subgroup> all_subgroups(const std::shared_ptr<const UnitGroup>& group) {
    std::set<std::vector<u64>> seen;
    std::vector<Subgroup> out{Subgroup::generated(group, {})};
    seen.insert(out[0].elements());
    for (std::size_t at = 0; at < out.size(); ++at) {
        for (u64 u : group->units()) {
            if (out[at].contains(static_cast<i64>(u))) continue;
            std::vector<i64> gens(out[at].generators().begin(), out[at].generators().end());
            gens.push_back(static_cast<i64>(u));
            Subgroup s = Subgroup::generated(group, gens);
            if (seen.insert(s.elements()).second) out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.elements() < b.elements();
    });
    return out;
}

std::vector<AbelianField> fields_of_conductor(u64 f) {
    std::vector<AbelianField> out;
    for (auto& h : all_subgroups(UnitGroup::get(f))) {
        AbelianField e(std::move(h));
        if (e.conductor() == f) out.push_back(std::move(e));
    }
    return out;
}

} // namespace bclab
