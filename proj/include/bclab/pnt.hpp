#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "bclab/series.hpp"
#include "bclab/sieve.hpp"

namespace bclab {

/// Neumaier-compensated summation.
class CompensatedSum {
public:
    void add(double x);
    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

struct ComplexSum {
    CompensatedSum re, im;
    void add(std::complex<double> z) {
        re.add(z.real());
        im.add(z.imag());
    }
    std::complex<double> value() const { return {re.value(), im.value()}; }
};

struct PntCheckpoint {
    u64 x;
    std::complex<double> psi;
    std::complex<double> predicted;
    double rel_error;  ///< |psi - predicted| / x
};

struct PntReport {
    std::vector<PntCheckpoint> checkpoints;
    std::size_t multiplicity = 0;
    double tau0 = 0.0;
};

/// m x^{1 + i tau0} / (1 + i tau0); zero when m = 0.
std::complex<double> predicted_main_term(std::size_t m, double tau0, double x);

/// Powers of ten from 10^4 up to the limit, plus the limit itself.
std::vector<u64> default_checkpoints(u64 limit);

struct PsiOptions {
    unsigned threads = 0;       ///< 0: hardware concurrency
    u64 chunk = 1'000'000;
};

/// psi(x) = sum over prime powers n = p^k <= x, p not excluded, of log(p) a(p^k),
/// evaluated at each checkpoint. Segments are summed independently and
/// reduced in a fixed order, so the result does not depend on the thread count.
PntReport psi_sum(const CoefficientSource& source, u64 limit, std::vector<u64> checkpoints, std::size_t multiplicity,
                  double tau0, PsiOptions options = {});

/// Final relative error at most half the first one. Needs at least four
/// checkpoints spanning two decades.
bool decay_check(const PntReport& report);

} // namespace bclab
