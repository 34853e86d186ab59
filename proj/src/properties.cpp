#include "bclab/properties.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "bclab/config.hpp"
#include "bclab/pnt.hpp"
#include "bclab/rankin_selberg.hpp"

namespace bclab {

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

std::vector<AbelianField> fields_up_to(u64 max_conductor) {
    std::vector<AbelianField> out;
    for (u64 f = 1; f <= max_conductor; ++f) {
        auto more = fields_of_conductor(f);
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

std::vector<GalHeckeChar> characters_over(const AbelianField& e, double tau = 0.0) {
    std::vector<GalHeckeChar> out;
    for (const auto& chi : all_characters(e.ambient())) {
        GalHeckeChar pi = base_change(TwistedChar{chi, tau}, e);
        if (std::none_of(out.begin(), out.end(), [&](const GalHeckeChar& q) { return q == pi; })) out.push_back(std::move(pi));
    }
    return out;
}

Outcome dual_group_size() {
    for (u64 m = 1; m <= 200; ++m) {
        const auto chars = all_characters(UnitGroup::get(m));
        if (chars.size() != euler_phi(m)) return {false, "M = " + std::to_string(m)};
        for (std::size_t i = 1; i < chars.size(); ++i)
            if (chars[i] == chars[i - 1]) return {false, "duplicate character mod " + std::to_string(m)};
    }
    return {true, "M <= 200"};
}

Outcome extension_count() {
    std::size_t checked = 0;
    for (u64 m = 1; m <= 60; ++m) {
        const auto g = UnitGroup::get(m);
        const auto chars = all_characters(g);
        for (const auto& h : all_subgroups(g)) {
            std::vector<SubgroupChar> omegas;
            for (const auto& chi : chars) {
                auto w = restrict_char(chi, h);
                if (std::find(omegas.begin(), omegas.end(), w) == omegas.end()) omegas.push_back(std::move(w));
            }
            for (const auto& w : omegas) {
                const auto ext = extensions(w, g);
                if (ext.size() != h.index()) return {false, "wrong count mod " + std::to_string(m)};
                for (std::size_t i = 0; i < ext.size(); ++i) {
                    if (!(restrict_char(ext[i], h) == w)) return {false, "restriction mismatch mod " + std::to_string(m)};
                    for (std::size_t j = 0; j < i; ++j)
                        if (ext[i] == ext[j]) return {false, "repeated extension mod " + std::to_string(m)};
                }
                ++checked;
            }
        }
    }
    return {true, std::to_string(checked) + " characters of subgroups, M <= 60"};
}

Outcome splitting_degrees() {
    const auto primes = primes_up_to(10'000);
    std::size_t fields = 0;
    for (const auto& e : fields_up_to(60)) {
        ++fields;
        for (u64 p : primes) {
            const auto s = splitting_data(e, p);
            if (s.ramified != (e.conductor() % p == 0)) return {false, "ramification flag at p = " + std::to_string(p)};
            if (!s.ramified && s.f * s.g != e.degree()) return {false, "f g != degree at p = " + std::to_string(p)};
        }
    }
    return {true, std::to_string(fields) + " fields, p <= 10^4"};
}

Outcome tower_steps() {
    for (const auto& e : fields_up_to(60)) {
        u64 prod = 1, count = 0;
        for (auto [p, k] : factorize(e.degree())) count += k;
        const auto t = tower(e);
        if (t.size() != count) return {false, "tower length for degree " + std::to_string(e.degree())};
        for (const auto& s : t) {
            if (!is_prime(s.degree)) return {false, "composite step"};
            prod *= s.degree;
        }
        if (prod != e.degree()) return {false, "step product"};
    }
    return {true, "conductor <= 60"};
}

Outcome factorization() {
    const auto primes = primes_up_to(1000);
    std::size_t coeffs = 0;
    for (const auto& e : fields_up_to(30))
        for (const auto& pi : characters_over(e)) {
            const auto ai = automorphic_induction(pi);
            for (u64 p : primes) {
                if (e.modulus() % p == 0) continue;
                for (unsigned j = 1; j <= 3; ++j, ++coeffs)
                    if (!(exact_coeff_over_E(pi, p, j) == exact_coeff_over_Q(ai, p, j)))
                        return {false, "mismatch at p = " + std::to_string(p)};
            }
        }
    return {true, std::to_string(coeffs) + " exact coefficients"};
}

Outcome fiber_distinctness() {
    std::size_t fibers = 0;
    for (const auto& e : fields_up_to(60))
        for (const auto& pi : characters_over(e)) {
            const auto fiber = bc_fiber(pi);
            if (fiber.size() != e.degree()) return {false, "fiber size"};
            for (std::size_t i = 0; i < fiber.size(); ++i) {
                if (!(base_change(fiber[i], e) == pi)) return {false, "fiber element does not lift"};
                for (std::size_t j = 0; j < i; ++j)
                    if (twisted_equal(fiber[i], fiber[j])) return {false, "repeated fiber element"};
            }
            ++fibers;
        }
    return {true, std::to_string(fibers) + " fibers"};
}

Outcome compositum_lifts() {
    std::vector<AbelianField> prime_degree;
    for (const auto& e : fields_up_to(60))
        if (is_prime(e.degree())) prime_degree.push_back(e);
    std::size_t pairs = 0;
    for (const auto& e : prime_degree)
        for (const auto& f : prime_degree) {
            if (e == f) continue;
            const u64 l = lcm(e.modulus(), f.modulus());
            const auto triv = TwistedChar{DirichletChar::trivial(l), 0.0};
            const auto eta = bc_fiber(base_change(triv, e));
            const auto psi = bc_fiber(base_change(triv, f));
            std::vector<DirichletChar> products;
            for (const auto& a : eta)
                for (const auto& b : psi) products.push_back(a.chi * b.chi);
            std::sort(products.begin(), products.end(), exponent_less);
            for (std::size_t i = 1; i < products.size(); ++i)
                if (products[i] == products[i - 1]) return {false, "repeated twist in a compositum"};
            ++pairs;
        }
    return {true, std::to_string(pairs) + " field pairs"};
}

Outcome transitivity() {
    for (const auto& e : fields_up_to(40))
        for (const auto& chi : all_characters(e.ambient())) {
            const TwistedChar c{chi, 0.25};
            const auto direct = base_change(c, e);
            for (const auto& step : tower(e))
                if (!(base_change(base_change(c, step.lower), e) == direct)) return {false, "tower base change differs"};
        }
    return {true, "conductor <= 40"};
}

Outcome pair_uniqueness_and_mutual_oracle() {
    const auto fields = fields_up_to(24);
    std::vector<GalHeckeChar> chars;
    for (const auto& e : fields)
        for (auto& pi : characters_over(e)) chars.push_back(std::move(pi));
    std::size_t nonempty = 0;
    for (std::size_t i = 0; i < chars.size(); ++i)
        for (std::size_t j = 0; j < chars.size(); j += 1 + i % 3) {
            const GalHeckeChar right(chars[j].field(), chars[j].omega(), 0.5 * static_cast<double>(i % 2));
            const RsConvolution rs(chars[i], right);
            const auto& t = rs.pairs();
            std::set<std::size_t> l, r;
            for (const auto& p : t.pairs) {
                if (!l.insert(p.left).second || !r.insert(p.right).second) return {false, "fiber element in two pairs"};
                if (!twisted_equal(rs.left_fiber()[p.left], TwistedChar{rs.right_fiber()[p.right].chi, rs.right_fiber()[p.right].tau + *t.tau0}))
                    return {false, "pair with a different twist"};
            }
            const u64 li = chars[i].field().degree(), lj = chars[j].field().degree();
            if (!t.empty() && (li % t.size() || lj % t.size())) return {false, "|T| does not divide the degrees"};
            const auto [a, b] = structural_pair_subgroups(rs);
            if (a != t.size() || b != t.size()) return {false, "pair subgroup order differs from |T|"};
            nonempty += !t.empty();
        }
    return {true, std::to_string(nonempty) + " nonempty T, conductor <= 24"};
}

Outcome orbit_sizes() {
    for (u64 l : {2, 3, 5, 7, 11, 13})
        for (u64 s = 0; s < l; ++s)
            for (u64 r = 1; r < l; ++r)
                for (u64 i0 = 0; i0 < l; ++i0)
                    for (u64 j0 = 0; j0 < l; ++j0)
                        if (noncuspidal_orbit(l, s, r, i0, j0).size() != l) return {false, "orbit size at l = " + std::to_string(l)};
    return {true, "l <= 13"};
}

Outcome twist_absorption() {
    std::mt19937_64 rng(0x6c616221);
    auto pick = [&] {
        const auto chars = all_characters(UnitGroup::get(std::uniform_int_distribution<u64>(1, 60)(rng)));
        return chars[std::uniform_int_distribution<std::size_t>(0, chars.size() - 1)(rng)];
    };
    for (int i = 0; i < 40; ++i)
        if (!twist_absorption_check(pick(), pick(), pick(), pick(), 5000)) return {false, "quadruple " + std::to_string(i)};
    return {true, "40 random quadruples, n <= 5000"};
}

Outcome classical_psi(const PropertyOptions& options) {
    const auto q = AbelianField::rationals();
    const auto one = base_change(TwistedChar{DirichletChar::trivial(1), 0.0}, q);
    const RsConvolution zeta(one, one);
    const auto a = psi_sum(zeta, 1'000'000, {}, 1, 0.0, {options.threads, 100'000});
    const auto b = psi_sum(zeta, 1'000'000, {}, 1, 0.0, {1, 100'000});
    const double ratio = a.checkpoints.back().psi.real() / 1e6;
    if (a.checkpoints.back().psi != b.checkpoints.back().psi) return {false, "thread count changed psi"};
    if (std::abs(ratio - 1.0) > 0.001) return {false, "psi(10^6)/10^6 = " + format_double(ratio)};
    return {true, "psi(10^6)/10^6 = " + format_double(ratio)};
}

} // namespace

std::vector<PropertyResult> run_property_suite(const PropertyOptions& options) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> checks{
        {"dual group size", dual_group_size},
        {"extension count and restriction", extension_count},
        {"splitting f g = degree", splitting_degrees},
        {"tower steps prime", tower_steps},
        {"factorization over E vs fiber product", factorization},
        {"fiber distinctness", fiber_distinctness},
        {"compositum lifts distinct", compositum_lifts},
        {"base change transitivity", transitivity},
        {"twisted pair uniqueness and mutual oracle", pair_uniqueness_and_mutual_oracle},
        {"non-cuspidal orbit size", orbit_sizes},
        {"twist absorption", twist_absorption},
        {"classical psi and determinism", [&] { return classical_psi(options); }},
    };
    std::vector<PropertyResult> out;
    for (const auto& [name, check] : checks) {
        try {
            const auto r = check();
            out.push_back({name, r.ok, r.detail});
        } catch (const std::exception& e) {
            out.push_back({name, false, std::string("exception: ") + e.what()});
        }
    }
    return out;
}

} // namespace bclab
