#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "bclab/characters.hpp"
#include "bclab/fields.hpp"

using namespace bclab;

namespace {

u64 brute_order(u64 u, u64 m) {
    u64 x = u % m, k = 1;
    while (x != 1 % m) {
        x = x * u % m;
        ++k;
    }
    return k;
}

DirichletChar mod5(i64 e) { return DirichletChar(UnitGroup::get(5), {e}); }

std::vector<Zeta> value_table(const DirichletChar& chi) {
    std::vector<Zeta> out;
    for (u64 u : chi.group()->units()) out.push_back(Zeta{chi.group()->exponent(), chi.unit_exponent(u)}.reduced());
    return out;
}

} // namespace

TEST_CASE("unit group examples") {
    auto g5 = UnitGroup::get(5);
    REQUIRE(g5->rank() == 1);
    CHECK(g5->generators()[0].unit == 2);
    CHECK(g5->generators()[0].order == 4);
    CHECK(brute_order(2, 5) == 4);

    auto g1 = UnitGroup::get(1);
    CHECK(g1->order() == 1);
    CHECK(g1->rank() == 0);

    auto g16 = UnitGroup::get(16);
    REQUIRE(g16->rank() == 2);
    CHECK(g16->generators()[0].unit == 15);
    CHECK(g16->generators()[0].order == 2);
    CHECK(g16->generators()[1].unit == 5);
    CHECK(g16->generators()[1].order == 4);
    // The alternative basis <15> x <3> also covers all 8 units.
    std::set<u64> covered;
    for (u64 a = 0; a < 2; ++a)
        for (u64 b = 0; b < 4; ++b) covered.insert(powmod(15, a, 16) * powmod(3, b, 16) % 16);
    CHECK(covered.size() == 8);

    CHECK_THROWS_AS(UnitGroup::get(0), std::invalid_argument);
}

TEST_CASE("unit group structure for M <= 300") {
    for (u64 m = 1; m <= 300; ++m) {
        auto g = UnitGroup::get(m);
        u64 prod = 1;
        for (const auto& gen : g->generators()) {
            CHECK(brute_order(gen.unit, m) == gen.order);
            prod *= gen.order;
        }
        CHECK(prod == euler_phi(m));
        CHECK(g->order() == euler_phi(m));
        for (u64 u : g->units()) {
            const auto d = g->dlog(u);
            std::vector<i64> e(d.begin(), d.end());
            CHECK(g->element(e) == u);
        }
        u64 two = 0;
        for (u64 k = m; k % 2 == 0; k /= 2) ++two;
        std::size_t two_gens = 0;
        for (const auto& gen : g->generators()) two_gens += gen.prime == 2;
        CHECK(two_gens == (two >= 3 ? 2u : two == 2 ? 1u : 0u));
    }
}

TEST_CASE("character evaluation examples") {
    const auto chi5 = mod5(2);
    const auto theta = mod5(1);
    CHECK(*chi5(2) == Zeta{4, 2});
    CHECK(*chi5(2) == Zeta{2, 1});
    const auto one = DirichletChar::trivial(1);
    for (i64 n : {-7, 0, 1, 2, 1000}) CHECK(one(n)->is_one());
    CHECK(*theta(2) == Zeta{4, 1});
    CHECK(*theta(4) == Zeta{2, 1});
    CHECK_FALSE(theta(10).has_value());
    CHECK(theta(-1).has_value());
}

TEST_CASE("group law examples") {
    const auto theta = mod5(1);
    CHECK((theta * theta.conj()).is_trivial());
    CHECK(theta * theta == mod5(2));
    CHECK(theta.order() == 4);
    CHECK(theta.pow(2).order() == 2);
    CHECK(char_order(char_mul(theta, theta)) == 2);
    CHECK(char_conj(theta) == mod5(3));
}

TEST_CASE("restriction examples") {
    auto g = UnitGroup::get(5);
    const std::vector<i64> four{4};
    const auto h = Subgroup::generated(g, four);
    CHECK(h.elements() == std::vector<u64>{1, 4});
    CHECK(restrict_char(DirichletChar::trivial(5), h).is_trivial());
    const auto r_theta = restrict_char(mod5(1), h);
    CHECK(r_theta.order() == 2);
    CHECK(*r_theta.at(4) == Zeta{2, 1});
    CHECK(restrict_char(mod5(2), h).is_trivial());
    CHECK_THROWS_AS(Subgroup::from_elements(g, {1, 2}), std::invalid_argument);
}

TEST_CASE("extension examples") {
    auto g = UnitGroup::get(5);
    const std::vector<i64> four{4};
    const auto h = Subgroup::generated(g, four);
    const auto triv = extensions(restrict_char(DirichletChar::trivial(5), h), g);
    REQUIRE(triv.size() == 2);
    CHECK(triv[0] == mod5(0));
    CHECK(triv[1] == mod5(2));
    const auto th = extensions(restrict_char(mod5(1), h), g);
    REQUIRE(th.size() == 2);
    CHECK(th[0] == mod5(1));
    CHECK(th[1] == mod5(3));
    const auto whole = Subgroup::whole(g);
    const auto self = extensions(restrict_char(mod5(3), whole), g);
    REQUIRE(self.size() == 1);
    CHECK(self[0] == mod5(3));
    CHECK_THROWS_AS(SubgroupChar::make(h, {1, 0}), std::invalid_argument);
}

TEST_CASE("dual group size for M <= 200") {
    for (u64 m = 1; m <= 200; ++m) {
        const auto chars = all_characters(UnitGroup::get(m));
        CHECK(chars.size() == euler_phi(m));
        std::set<std::vector<Zeta>, decltype([](const auto& a, const auto& b) {
                     return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const Zeta& x, const Zeta& y) {
                         return std::pair(x.order, x.exponent) < std::pair(y.order, y.exponent);
                     });
                 })>
            tables;
        for (const auto& c : chars) tables.insert(value_table(c));
        CHECK(tables.size() == chars.size());
    }
}

TEST_CASE("evaluation is completely multiplicative and vanishes off the conductor") {
    for (u64 m : {1, 3, 8, 12, 15, 16, 20, 24, 35, 48, 60}) {
        for (const auto& chi : all_characters(UnitGroup::get(m))) {
            const u64 f = chi.conductor();
            CHECK(m % f == 0);
            for (i64 a = -5; a < 40; ++a) {
                const bool zero = std::gcd(static_cast<u64>(mod_floor(a, static_cast<i64>(f))), f) != 1;
                CHECK(chi(a).has_value() == !zero);
                for (i64 b = 1; b < 20 && !zero; ++b) {
                    if (!chi(b)) continue;
                    CHECK(*chi(a * b) == *chi(a) * *chi(b));
                }
            }
            // Conductor is minimal: the character is not induced from any proper divisor.
            for (u64 d : divisors(m)) {
                if (d >= f || f % d != 0) continue;
                bool periodic = true;
                for (u64 u : chi.group()->units())
                    if (u % d == 1 % d && !Zeta{chi.group()->exponent(), chi.unit_exponent(u)}.is_one()) periodic = false;
                CHECK_FALSE(periodic);
            }
        }
    }
}

TEST_CASE("equality across moduli and primitive form") {
    const auto theta = mod5(1);
    const auto lifted = theta.lift(20);
    CHECK(lifted.modulus() == 20);
    CHECK(lifted == theta);
    CHECK(lifted.conductor() == 5);
    CHECK(lifted.primitive().modulus() == 5);
    CHECK(lifted.primitive().exponents() == theta.exponents());
    CHECK_FALSE(mod5(2).lift(20) == DirichletChar(UnitGroup::get(4), {1}));
    for (const auto& chi : all_characters(UnitGroup::get(48))) {
        const auto p = chi.primitive();
        CHECK(p.modulus() == chi.conductor());
        CHECK(p.conductor() == chi.conductor());
        CHECK(p == chi);
        CHECK(p.lift(48).exponents() == chi.exponents());
    }
}

TEST_CASE("extension count and restrict after extend for M <= 60") {
    for (u64 m = 1; m <= 60; ++m) {
        auto g = UnitGroup::get(m);
        const auto chars = all_characters(g);
        for (const auto& h : all_subgroups(g)) {
            std::vector<SubgroupChar> omegas;
            for (const auto& chi : chars) {
                auto w = restrict_char(chi, h);
                if (std::find(omegas.begin(), omegas.end(), w) == omegas.end()) omegas.push_back(std::move(w));
            }
            CHECK(omegas.size() == h.size());
            for (const auto& w : omegas) {
                const auto ext = extensions(w, g);
                REQUIRE(ext.size() == h.index());
                std::size_t brute = 0;
                for (const auto& chi : chars) brute += restrict_char(chi, h) == w;
                CHECK(brute == ext.size());
                for (std::size_t i = 0; i < ext.size(); ++i) {
                    CHECK(restrict_char(ext[i], h) == w);
                    CHECK(restrict_char(ext[i] * ext[0].conj(), h).is_trivial());
                    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(ext[i] == ext[j]);
                }
            }
        }
    }
}
