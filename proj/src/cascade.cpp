#include "bivseq/cascade.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bivseq/errors.hpp"

namespace bivseq {

namespace {
void validate(const CascadeSpec& spec) {
    if (!(spec.k_base > 0))
        throw InvalidWavenumber("k_base must be positive, got " +
                                std::to_string(spec.k_base));
    if (spec.levels == 0)
        throw std::invalid_argument("cascade needs at least one level");
}
}  // namespace

double turnover_time(double k, double spectral_slope) {
    if (!(k > 0))
        throw InvalidWavenumber("wavenumber must be positive, got " +
                                std::to_string(k));
    return std::pow(k, -(3.0 + spectral_slope) / 2.0);
}

double omega_sum(const CascadeSpec& spec) {
    validate(spec);
    double total = 0.0;
    for (unsigned n = 0; n < spec.levels; ++n)
        total += turnover_time(std::ldexp(spec.k_base, static_cast<int>(n)),
                               spec.spectral_slope);
    return total;
}

std::optional<double> omega_limit(const CascadeSpec& spec) {
    validate(spec);
    const double gamma = (3.0 + spec.spectral_slope) / 2.0;
    if (gamma <= 0) return std::nullopt;
    return turnover_time(spec.k_base, spec.spectral_slope) /
           (1.0 - std::exp2(-gamma));
}

std::vector<CascadeRow> cascade_table(const CascadeSpec& spec) {
    validate(spec);
    std::vector<CascadeRow> rows;
    rows.reserve(spec.levels);
    double total = 0.0;
    for (unsigned n = 0; n < spec.levels; ++n) {
        const double k = std::ldexp(spec.k_base, static_cast<int>(n));
        const double tau = turnover_time(k, spec.spectral_slope);
        total += tau;
        rows.push_back(CascadeRow{n, k, tau, total});
    }
    return rows;
}

}  // namespace bivseq
