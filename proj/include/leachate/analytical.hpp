#pragma once

#include "leachate/transport.hpp"

namespace leachate {

/// Complementary error function, absolute error below 1e-12 on the real line.
/// Series for |x| < 2.5, continued fraction beyond; negative arguments use
/// erfc(-x) = 2 - erfc(x).
double erfc(double x);

/// log(erfc(x)) that stays finite where erfc itself underflows.
double log_erfc(double x);

struct AnalyticalSample {
    double concentration = 0.0;
    /// Set when the guarded exp * erfc product was still non-finite; the
    /// concentration then falls back to background.
    bool numerical_limit = false;
};

/// Semi-infinite 1-D retarded advection-diffusion solution with constant
/// surface concentration. `z` in cm, `t` in days. t = 0 returns
/// background.
AnalyticalSample evaluate_profile_1d(double z, double t, const TransportParams& params, double R);

double ogata_profile_1d(double z, double t, const TransportParams& params, double R);
inline double ogata_profile_1d(double z, double t, const TransportParams& params) {
    return ogata_profile_1d(z, t, params, params.retardation());
}

/// Literal two-bracket superposition for the x-z plane. Reaches
/// 2 C0 at the origin, so it is not a solution of the boundary value problem
/// and is never used as the verification oracle.
struct PaperLiteralValue {
    double concentration = 0.0;
    bool paper_literal = true;
};

PaperLiteralValue ogata_paper_2d(double x, double z, double t, const TransportParams& params, double R);

}  // namespace leachate
