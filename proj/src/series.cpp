#include "bclab/series.hpp"

#include <cmath>

namespace bclab {

TwistedCharSeries::TwistedCharSeries(TwistedChar chi, u64 excluded_modulus)
    : chi_(std::move(chi)), excluded_modulus_(excluded_modulus) {}

std::complex<double> TwistedCharSeries::coefficient(u64 p, unsigned k) const {
    const auto v = chi_.chi(static_cast<i64>(p));
    if (!v) return 0.0;
    return v->pow(k).to_complex() * std::polar(1.0, chi_.tau * static_cast<double>(k) * std::log(static_cast<double>(p)));
}

} // namespace bclab
