#include "leachate/analytical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "leachate/error.hpp"

namespace leachate {

namespace {

constexpr double kSeriesLimit = 2.5;

// erf(x) = 2/sqrt(pi) exp(-x^2) sum_n 2^n x^(2n+1) / (1*3*...*(2n+1)).
// Every term is positive, so there is no cancellation.
double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 200; ++n) {
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return 2.0 / std::sqrt(std::numbers::pi) * std::exp(-x2) * sum;
}

// Continued fraction for sqrt(pi) exp(x^2) erfc(x), x > 0:
//   1 / (x + (1/2) / (x + 1 / (x + (3/2) / (x + 2 / (x + ...)))))
// evaluated with modified Lentz.
double erfc_scaled_cf(double x) {
    constexpr double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int k = 1; k < 5000; ++k) {
        const double a = 0.5 * k;
        d = x + a * d;
        if (d == 0.0) d = tiny;
        c = x + a / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return 1.0 / f;
}

double erfc_nonneg(double x) {
    if (x < kSeriesLimit) return 1.0 - erf_series(x);
    return std::exp(-x * x) * erfc_scaled_cf(x) / std::sqrt(std::numbers::pi);
}

}  // namespace

double erfc(double x) {
    if (!std::isfinite(x)) throw ParameterError("erfc argument must be finite");
    if (x < 0.0) return 2.0 - erfc_nonneg(-x);
    return erfc_nonneg(x);
}

double log_erfc(double x) {
    if (!std::isfinite(x)) throw ParameterError("log_erfc argument must be finite");
    if (x < kSeriesLimit) return std::log(erfc(x));
    return -x * x + std::log(erfc_scaled_cf(x)) - 0.5 * std::log(std::numbers::pi);
}

AnalyticalSample evaluate_profile_1d(double z, double t, const TransportParams& params, double R) {
    if (!std::isfinite(z) || z < 0.0) throw ParameterError("z must be finite and >= 0");
    if (!std::isfinite(t) || t < 0.0) throw ParameterError("t must be finite and >= 0");
    if (!std::isfinite(R) || R < 1.0) throw ParameterError("R must be >= 1");
    params.validate();

    const double bg = params.background;
    if (t == 0.0) return {bg, false};

    const double D = params.D;
    const double v = params.v;
    const double spread = 2.0 * std::sqrt(R * D * t);
    const double a = (R * z - v * t) / spread;
    const double b = (R * z + v * t) / spread;

    // exp(v z / D) * erfc(b) in log space; v z / D <= b^2 keeps it bounded.
    const double tail = std::exp(v * z / D + log_erfc(b));
    const double bracket = erfc(a) + tail;
    const double c = bg + 0.5 * (params.C0 - bg) * bracket;
    if (!std::isfinite(c)) return {bg, true};
    return {std::clamp(c, bg, params.C0), false};
}

double ogata_profile_1d(double z, double t, const TransportParams& params, double R) {
    return evaluate_profile_1d(z, t, params, R).concentration;
}

PaperLiteralValue ogata_paper_2d(double x, double z, double t, const TransportParams& params, double R) {
    if (!std::isfinite(x) || x < 0.0) throw ParameterError("x must be finite and >= 0");
    const double bg = params.background;
    const double along_z = evaluate_profile_1d(z, t, params, R).concentration - bg;
    const double along_x = evaluate_profile_1d(x, t, params, R).concentration - bg;
    if (t == 0.0) return {bg, true};
    return {bg + along_z + along_x, true};
}

}  // namespace leachate
