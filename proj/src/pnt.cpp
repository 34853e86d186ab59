#include "bclab/pnt.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace bclab {

void CompensatedSum::add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        compensation_ += (sum_ - t) + x;
    else
        compensation_ += (x - t) + sum_;
    sum_ = t;
}

std::complex<double> predicted_main_term(std::size_t m, double tau0, double x) {
    if (m == 0) return 0.0;
    const std::complex<double> s(1.0, tau0);
    return static_cast<double>(m) * x * std::polar(1.0, tau0 * std::log(x)) / s;
}

std::vector<u64> default_checkpoints(u64 limit) {
    std::vector<u64> out;
    for (u64 x = 10'000; x <= limit; x *= 10) {
        out.push_back(x);
        if (x > limit / 10) break;
    }
    if (out.empty() || out.back() != limit) out.push_back(limit);
    return out;
}

PntReport psi_sum(const CoefficientSource& source, u64 limit, std::vector<u64> checkpoints, std::size_t multiplicity,
                  double tau0, PsiOptions options) {
    if (limit < 100) throw std::invalid_argument("psi_sum: limit must be at least 100");
    if (checkpoints.empty()) checkpoints = default_checkpoints(limit);
    std::sort(checkpoints.begin(), checkpoints.end());
    checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
    if (checkpoints.front() < 2) throw std::invalid_argument("psi_sum: checkpoints must be at least 2");
    if (checkpoints.back() > limit)
        throw std::invalid_argument("psi_sum: checkpoint " + std::to_string(checkpoints.back()) + " exceeds the limit " + std::to_string(limit));

    const PrimePowerStream stream(limit, options.chunk, checkpoints);
    const auto& segments = stream.segments();
    std::vector<std::complex<double>> partial(segments.size());

    auto work = [&](std::size_t idx) {
        ComplexSum acc;
        stream.visit(segments[idx], [&](const PrimePower& pp) {
            if (!source.excluded(pp.p)) acc.add(pp.log_p * source.coefficient(pp.p, pp.k));
        });
        partial[idx] = acc.value();
    };

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, segments.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < segments.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < segments.size();) work(i);
            });
    }

    PntReport report;
    report.multiplicity = multiplicity;
    report.tau0 = tau0;
    ComplexSum total;
    auto cp = checkpoints.begin();
    for (std::size_t i = 0; i < segments.size() && cp != checkpoints.end(); ++i) {
        total.add(partial[i]);
        if (segments[i].hi == *cp) {
            const std::complex<double> psi = total.value();
            const double x = static_cast<double>(*cp);
            const std::complex<double> pred = predicted_main_term(multiplicity, tau0, x);
            report.checkpoints.push_back({*cp, psi, pred, std::abs(psi - pred) / x});
            ++cp;
        }
    }
    return report;
}

bool decay_check(const PntReport& report) {
    const auto& c = report.checkpoints;
    if (c.size() < 4) throw std::invalid_argument("decay_check: need at least 4 checkpoints");
    if (static_cast<double>(c.back().x) < 100.0 * static_cast<double>(c.front().x))
        throw std::invalid_argument("decay_check: checkpoints must span at least two decades");
    return c.back().rel_error <= 0.5 * c.front().rel_error;
}

} // namespace bclab
