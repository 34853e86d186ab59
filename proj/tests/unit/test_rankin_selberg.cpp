#include <doctest.h>

#include <cmath>
#include <random>

#include "bclab/rankin_selberg.hpp"
#include "bclab/sieve.hpp"

using namespace bclab;

namespace {

AbelianField field(u64 m, std::vector<i64> gens) { return AbelianField::make(m, gens); }
AbelianField sqrt5() { return field(5, {4}); }
AbelianField gauss() { return field(4, {}); }
DirichletChar mod5(i64 e) { return DirichletChar(UnitGroup::get(5), {e}); }
GalHeckeChar over(const AbelianField& e, const DirichletChar& chi, double tau = 0.0) { return base_change(TwistedChar{chi, tau}, e); }
GalHeckeChar one(const AbelianField& e, double tau = 0.0) { return over(e, DirichletChar::trivial(e.modulus()), tau); }

std::vector<GalHeckeChar> characters_over(const AbelianField& e, double tau = 0.0) {
    std::vector<GalHeckeChar> out;
    for (const auto& chi : all_characters(e.ambient())) {
        GalHeckeChar pi = over(e, chi, tau);
        bool seen = false;
        for (const auto& q : out) seen = seen || q == pi;
        if (!seen) out.push_back(std::move(pi));
    }
    return out;
}

std::vector<AbelianField> fields_up_to(u64 max_conductor) {
    std::vector<AbelianField> out;
    for (u64 f = 1; f <= max_conductor; ++f) {
        auto more = fields_of_conductor(f);
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

std::complex<double> value(const DirichletChar& chi, i64 n) {
    const auto v = chi(n);
    return v ? v->to_complex() : 0.0;
}

} // namespace

TEST_CASE("twisted pair examples") {
    auto t = twisted_pairs(one(sqrt5()), one(gauss()));
    REQUIRE(t.size() == 1);
    CHECK(t.pairs[0].left == 0);
    CHECK(t.pairs[0].right == 0);
    CHECK(*t.tau0 == 0.0);

    const auto pi = over(sqrt5(), mod5(1));
    t = twisted_pairs(pi, pi);
    REQUIRE(t.size() == 2);
    CHECK(t.pairs[0].left == 0);
    CHECK(t.pairs[0].right == 0);
    CHECK(t.pairs[1].left == 1);
    CHECK(t.pairs[1].right == 1);

    t = twisted_pairs(one(sqrt5(), 0.5), one(gauss()));
    CHECK(t.size() == 1);
    CHECK(*t.tau0 == 0.5);

    t = twisted_pairs(one(sqrt5()), pi);
    CHECK(t.empty());
    CHECK_FALSE(t.tau0.has_value());
}

TEST_CASE("pole multiplicity examples") {
    CHECK(pole_multiplicity(one(sqrt5()), one(gauss())).multiplicity == 1);
    const auto pi = over(sqrt5(), mod5(1));
    CHECK(pole_multiplicity(pi, pi).multiplicity == 2);
    CHECK(pole_multiplicity(one(sqrt5()), pi).multiplicity == 0);
}

TEST_CASE("convolution coefficient examples") {
    const auto s = rs_coefficients(one(sqrt5()), one(gauss()), 100);
    CHECK(s.coefficients[3] == std::complex<double>(0.0, 0.0));
    CHECK(s.coefficients[41] == std::complex<double>(4.0, 0.0));
    CHECK(s.coefficients[9] == std::complex<double>(4.0, 0.0));
    CHECK(s.coefficients[7] == std::complex<double>(0.0, 0.0));  // inert in Q(sqrt5), split in neither
    CHECK(s.coefficients[6] == std::complex<double>(0.0, 0.0));
    CHECK(s.coefficients[5] == std::complex<double>(0.0, 0.0));  // excluded prime
    CHECK(s.multiplicity == 1);
    CHECK(s.modulus == 20);
    // (1 + chi5(p)^k)(1 + chi4(p)^k) directly.
    const DirichletChar chi5 = mod5(2), chi4(UnitGroup::get(4), {1});
    PrimePowerStream(100).for_each([&](const PrimePower& pp) {
        if (pp.p == 2 || pp.p == 5) return;
        const auto expect = (1.0 + value(chi5, pp.n)) * (1.0 + value(chi4, pp.n));
        CHECK(std::abs(s.coefficients[pp.n] - expect) < 1e-14);
    });

    const auto q = AbelianField::rationals();
    const auto z = rs_coefficients(one(q), one(q), 50);
    PrimePowerStream(50).for_each([&](const PrimePower& pp) { CHECK(z.coefficients[pp.n] == std::complex<double>(1.0, 0.0)); });
    CHECK_THROWS_AS(rs_coefficients(one(q), one(q), 1), std::invalid_argument);
}

TEST_CASE("theorem flags") {
    const RsConvolution rs(one(sqrt5()), one(gauss()));
    const auto f = rs.flags();
    CHECK(f.thm1_1);
    CHECK_FALSE(f.thm1_2);
    CHECK(f.self_contragredient_left);
    CHECK(thm1_2_applies(field(5, {}), field(7, {6})));
    CHECK_FALSE(thm1_1_applies(sqrt5(), sqrt5()));
    CHECK_FALSE(thm1_1_applies(field(5, {}), field(20, {11})));
    const auto pi = over(sqrt5(), mod5(1));
    CHECK_FALSE(RsConvolution(pi, pi).flags().self_contragredient_left);
}

TEST_CASE("twist absorption examples") {
    const auto triv = DirichletChar::trivial(1);
    CHECK(twist_absorption_check(mod5(1), mod5(1), triv, triv, 2000));
    CHECK(twist_absorption_check(mod5(2), triv, triv, triv, 10'000));
    CHECK(twist_absorption_check(mod5(1), mod5(3), triv, triv, 2000));
    CHECK(mod5(1).conj() * mod5(3) == mod5(2));
}

TEST_CASE("twist absorption holds for random quadruples against a float oracle") {
    std::mt19937_64 rng(20261016);
    auto random_char = [&] {
        const u64 m = std::uniform_int_distribution<u64>(1, 60)(rng);
        const auto chars = all_characters(UnitGroup::get(m));
        return chars[std::uniform_int_distribution<std::size_t>(0, chars.size() - 1)(rng)];
    };
    for (int trial = 0; trial < 25; ++trial) {
        const auto chi = random_char(), xi = random_char(), a = random_char(), b = random_char();
        CHECK(twist_absorption_check(chi, xi, a, b, 3000));
        for (i64 n = 1; n < 300; ++n) {
            if (std::gcd(static_cast<u64>(n), chi.modulus() * xi.modulus() * a.modulus() * b.modulus()) != 1) continue;
            const auto lhs = value(a, n) * value(chi, n) * std::conj(value(b, n) * value(xi, n));
            const auto rhs = value(a, n) * std::conj(value(b, n) * std::conj(value(chi, n)) * value(xi, n));
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
    }
}

TEST_CASE("hermitian positivity, bounds and conjugation symmetry") {
    const auto fields = fields_up_to(24);
    for (const auto& e : fields) {
        for (const auto& pi : characters_over(e, 0.2)) {
            const RsConvolution self(pi, pi);
            CHECK(self.multiplicity() == e.degree());
            for (u64 p : primes_up_to(300)) {
                if (self.excluded(p)) continue;
                for (unsigned k = 1; k <= 3; ++k) {
                    const auto a = self.coefficient(p, k);
                    CHECK(a.imag() == 0.0);
                    CHECK(a.real() >= -1e-12);
                }
            }
        }
    }
    for (std::size_t i = 0; i < fields.size(); i += 3)
        for (std::size_t j = 1; j < fields.size(); j += 4)
            for (const auto& pi : characters_over(fields[i], 0.3))
                for (const auto& pj : characters_over(fields[j], -0.1)) {
                    const RsConvolution fwd(pi, pj), bwd(pj, pi);
                    CHECK(std::abs(fwd.tau_shift() + bwd.tau_shift()) < 1e-15);
                    const double bound = static_cast<double>(fields[i].degree() * fields[j].degree());
                    for (u64 p : primes_up_to(120)) {
                        if (fwd.excluded(p)) continue;
                        for (unsigned k = 1; k <= 3; ++k) {
                            const auto a = fwd.coefficient(p, k);
                            CHECK(std::abs(a) <= bound + 1e-12);
                            CHECK(std::abs(a - std::conj(bwd.coefficient(p, k))) < 1e-12);
                            CHECK(fwd.exact_coefficient(p, k) == bwd.exact_coefficient(p, k).conj());
                        }
                    }
                }
}

TEST_CASE("structural T agrees with the group-theoretic count") {
    const auto fields = fields_up_to(21);
    std::size_t nonempty = 0;
    for (const auto& e : fields)
        for (const auto& f : fields)
            for (const auto& pi : characters_over(e))
                for (const auto& pj : characters_over(f)) {
                    const RsConvolution rs(pi, pj);
                    const std::size_t t = rs.multiplicity();
                    CHECK(e.degree() % std::max<std::size_t>(t, 1) == 0);
                    CHECK(f.degree() % std::max<std::size_t>(t, 1) == 0);
                    const auto [l, r] = structural_pair_subgroups(rs);
                    CHECK(l == t);
                    CHECK(r == t);
                    if (std::gcd(e.degree(), f.degree()) == 1) CHECK(t <= 1);
                    nonempty += t > 0;
                }
    CHECK(nonempty > 0);
}

TEST_CASE("table-backed series matches the convolution bit for bit") {
    const auto pi = over(field(5, {}), mod5(1), 0.25);
    const auto pj = over(field(7, {6}), DirichletChar(UnitGroup::get(7), {2}));
    const RsConvolution rs(pi, pj);
    const auto series = rs_coefficients(pi, pj, 5000);
    const TableSeries table(series);
    PrimePowerStream(5000).for_each([&](const PrimePower& pp) {
        CHECK(table.excluded(pp.p) == rs.excluded(pp.p));
        if (rs.excluded(pp.p)) return;
        const auto a = table.coefficient(pp.p, pp.k), b = rs.coefficient(pp.p, pp.k);
        CHECK(a.real() == b.real());
        CHECK(a.imag() == b.imag());
    });
    CHECK_THROWS_AS(table.coefficient(5003, 1), std::out_of_range);
}
