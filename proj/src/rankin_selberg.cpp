#include "bclab/rankin_selberg.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bclab/sieve.hpp"
#include "bclab/smith.hpp"

namespace bclab {

namespace {

std::vector<TwistedChar> lifted_fiber(const GalHeckeChar& pi, u64 modulus) {
    auto fiber = bc_fiber(pi);
    for (auto& c : fiber) c.chi = c.chi.lift(modulus);
    return fiber;
}

TwistedPairSet match_fibers(const std::vector<TwistedChar>& left, const std::vector<TwistedChar>& right, double tau_shift) {
    TwistedPairSet t;
    std::vector<int> right_used(right.size(), 0);
    for (std::size_t i = 0; i < left.size(); ++i) {
        bool paired = false;
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (!(left[i].chi == right[j].chi)) continue;
            if (paired || right_used[j])
                throw std::logic_error("twisted_pairs: fiber element paired twice (fibers are not pairwise distinct)");
            paired = true;
            right_used[j] = 1;
            t.pairs.push_back({i, j});
        }
    }
    if (!t.pairs.empty()) t.tau0 = tau_shift;
    return t;
}

} // namespace

bool thm1_1_applies(const AbelianField& e, const AbelianField& f) {
    return is_prime(e.degree()) && e.degree() == f.degree() && !(e == f);
}

bool thm1_2_applies(const AbelianField& e, const AbelianField& f) { return std::gcd(e.degree(), f.degree()) == 1; }

RsConvolution::RsConvolution(const GalHeckeChar& pi, const GalHeckeChar& pi_prime)
    : pi_(pi),
      pi_prime_(pi_prime),
      tau_shift_(pi.tau() - pi_prime.tau()),
      modulus_(lcm(pi.field().modulus(), pi_prime.field().modulus())) {
    left_ = lifted_fiber(pi_, modulus_);
    right_ = lifted_fiber(pi_prime_, modulus_);
    pairs_ = match_fibers(left_, right_, tau_shift_);

    residue_table_.assign(modulus_, 0.0);
    for (u64 r : UnitGroup::get(modulus_)->units()) residue_table_[r] = exact_residue(r).to_complex();
}

TheoremFlags RsConvolution::flags() const {
    TheoremFlags f;
    f.thm1_1 = thm1_1_applies(pi_.field(), pi_prime_.field());
    f.thm1_2 = thm1_2_applies(pi_.field(), pi_prime_.field());
    for (const auto& c : left_) f.self_contragredient_left |= is_self_contragredient(c.chi, c.tau);
    for (const auto& c : right_) f.self_contragredient_right |= is_self_contragredient(c.chi, c.tau);
    return f;
}

std::complex<double> RsConvolution::coefficient(u64 p, unsigned k) const {
    if (excluded(p)) return 0.0;
    const std::complex<double> a = residue_table_[powmod(p, k, modulus_)];
    if (tau_shift_ == 0.0) return a;
    return a * std::polar(1.0, tau_shift_ * static_cast<double>(k) * std::log(static_cast<double>(p)));
}

CycloInt RsConvolution::exact_residue(u64 r) const {
    const auto ring = CyclotomicRing::get(UnitGroup::get(modulus_)->exponent());
    CycloInt a(ring), b(ring);
    for (const auto& c : left_) a.add_root(c.chi.unit_exponent(r));
    for (const auto& c : right_) b.add_root(c.chi.unit_exponent(r));
    return a * b.conj();
}

CycloInt RsConvolution::exact_coefficient(u64 p, unsigned k) const {
    if (excluded(p)) return CycloInt(CyclotomicRing::get(UnitGroup::get(modulus_)->exponent()));
    return exact_residue(powmod(p, k, modulus_));
}

TwistedPairSet twisted_pairs(const GalHeckeChar& pi, const GalHeckeChar& pi_prime) {
    const u64 l = lcm(pi.field().modulus(), pi_prime.field().modulus());
    return match_fibers(lifted_fiber(pi, l), lifted_fiber(pi_prime, l), pi.tau() - pi_prime.tau());
}

PoleData pole_multiplicity(const GalHeckeChar& pi, const GalHeckeChar& pi_prime) {
    const auto t = twisted_pairs(pi, pi_prime);
    return {t.size(), t.tau0};
}

RsSeries rs_coefficients(const GalHeckeChar& pi, const GalHeckeChar& pi_prime, u64 n_max) {
    if (n_max < 2) throw std::invalid_argument("rs_coefficients: N must be at least 2");
    const RsConvolution rs(pi, pi_prime);
    RsSeries out{std::vector<std::complex<double>>(n_max + 1, 0.0), rs.pairs(), rs.multiplicity(), rs.modulus()};
    PrimePowerStream(n_max).for_each([&](const PrimePower& pp) {
        if (!rs.excluded(pp.p)) out.coefficients[pp.n] = rs.coefficient(pp.p, pp.k);
    });
    return out;
}

std::complex<double> TableSeries::coefficient(u64 p, unsigned k) const {
    const u64 n = checked_power(p, k);
    if (n >= series_.coefficients.size()) throw std::out_of_range("TableSeries: n = " + std::to_string(n) + " beyond the table");
    return series_.coefficients[n];
}

bool twist_absorption_check(const DirichletChar& chi, const DirichletChar& xi, const DirichletChar& pi_q,
                            const DirichletChar& pi_q_prime, u64 n_max) {
    const u64 l = lcm(lcm(chi.modulus(), xi.modulus()), lcm(pi_q.modulus(), pi_q_prime.modulus()));
    const DirichletChar left_a = pi_q * chi;
    const DirichletChar left_b = pi_q_prime * xi;
    const DirichletChar right_b = pi_q_prime * (chi.conj() * xi);
    bool ok = true;
    PrimePowerStream(std::max<u64>(n_max, 2)).for_each([&](const PrimePower& pp) {
        if (!ok || l % pp.p == 0) return;
        const i64 n = static_cast<i64>(pp.n);
        const Zeta lhs = *left_a(n) * left_b(n)->conj();
        const Zeta rhs = *pi_q(n) * right_b(n)->conj();
        ok = lhs == rhs;
    });
    return ok;
}

FiberLabels fiber_labels(const GalHeckeChar& pi) {
    const auto& group = pi.field().ambient();
    const auto& gens = group->generators();
    const std::size_t r = gens.size();
    const auto& hgens = pi.field().subgroup().generators();
    const i64 n = static_cast<i64>(group->exponent());

    // G/H = Z^r / <ord_i e_i, dlog(h_k)>
    IntMatrix rel;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<i64> row(r, 0);
        row[i] = static_cast<i64>(gens[i].order);
        rel.push_back(std::move(row));
    }
    for (u64 h : hgens) {
        const auto d = group->dlog(h);
        rel.emplace_back(d.begin(), d.end());
    }
    const Diagonalization dz = diagonalize(rel, r);

    std::vector<u64> orders;
    std::vector<u64> coset_reps;
    for (std::size_t j = 0; j < dz.diagonal.size(); ++j) {
        if (dz.diagonal[j] <= 1) continue;
        orders.push_back(static_cast<u64>(dz.diagonal[j]));
        coset_reps.push_back(group->element(dz.right_inverse[j]));
    }

    const auto fiber = bc_fiber(pi);
    FiberLabels out{FiberGroup(orders), {}};
    for (const auto& c : fiber) {
        const DirichletChar eta = c.chi * fiber.front().chi.conj();
        GroupElement label;
        for (std::size_t j = 0; j < orders.size(); ++j) {
            const i64 a = eta.unit_exponent(coset_reps[j]) * static_cast<i64>(orders[j]);
            if (a % n != 0) throw std::logic_error("fiber_labels: twist value is not a root of the cyclic order");
            label.push_back(static_cast<u64>(a / n));
        }
        out.labels.push_back(std::move(label));
    }
    return out;
}

std::pair<std::size_t, std::size_t> structural_pair_subgroups(const RsConvolution& rs) {
    const auto left = fiber_labels(rs.left());
    const auto right = fiber_labels(rs.right());
    std::vector<ElementPair> forward, backward;
    for (const auto& p : rs.pairs().pairs) {
        forward.emplace_back(left.labels[p.left], right.labels[p.right]);
        backward.emplace_back(right.labels[p.right], left.labels[p.left]);
    }
    return {pair_subgroup(left.group, forward).size(), pair_subgroup(right.group, backward).size()};
}

} // namespace bclab
