#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "pi_monomial.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "report.hpp"

namespace l2torsion {

// Integer coefficients K[0..n] of nu^2 * prod_{i=1..n, i!=a} (nu^2 + i^2)
// expanded in powers of nu^2, for the shift a = n - j >= 1. By construction
// K[0] = 0, K[n] = 1 (monic), and every K[k] is a nonnegative integer.
struct DensityCoefficients {
    int n;
    int j;
    int a;
    std::vector<Int> K;
};

inline DensityCoefficients density_polynomial(int n, int j) {
    if (n < 1) throw InvalidDegree("density_polynomial: requires n >= 1");
    if (j < 0 || j > n) throw InvalidDegree("density_polynomial: requires 0 <= j <= n");
    const int a = n - j;
    if (a < 1) throw InvalidShift("density_polynomial: requires shift a = n - j >= 1");
    std::vector<Int> K{Int(0), Int(1)}; // the nu^2 prefactor, in y = nu^2
    for (int i = 1; i <= n; ++i) {
        if (i == a) continue;
        intpoly::mul_linear(K, Int(i) * Int(i)); // *= (y + i^2)
    }
    return DensityCoefficients{n, j, a, std::move(K)};
}

// One closed-form term of the integrated heat trace at degree j:
// coefficient * exp(-t * decay) * t^-(k + 1/2). The coefficient is
// K[k] * n! * binom(2n, j) * (2k)! / (2 (2n)! 4^k k!) * pi^-(2n+1)/2,
// a genuinely half-integer pi power (the Gaussian moment contributes
// Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!)).
struct HeatTraceTerm {
    int k;
    PiMonomial coefficient; // half_power is -(2n+1)
    Int decay;              // a^2
};

inline std::vector<HeatTraceTerm> heat_trace_terms(int n, int j) {
    const DensityCoefficients d = density_polynomial(n, j);
    const Rational prefactor(factorial_int(static_cast<unsigned long>(n)) *
                                 binomial_int(2 * static_cast<unsigned long>(n),
                                              static_cast<unsigned long>(j)),
                             2 * factorial_int(2 * static_cast<unsigned long>(n)));
    const Int a2 = Int(d.a) * Int(d.a);
    std::vector<HeatTraceTerm> terms;
    terms.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const auto ku = static_cast<unsigned long>(k);
        const Rational gamma_rat(factorial_int(2 * ku),
                                 pow_int(Int(4), ku) * factorial_int(ku));
        const Rational q = prefactor * Rational(d.K[static_cast<std::size_t>(k)]) * gamma_rat;
        terms.push_back({k, PiMonomial(q, -(2 * n + 1)), a2});
    }
    return terms;
}

// Closed-form numeric value of the integrated heat trace at time t > 0.
inline long double heat_trace_numeric(int n, int j, const Rational& t) {
    if (t.sign() <= 0) throw NonPositiveTime("heat_trace_numeric: requires t > 0");
    const auto terms = heat_trace_terms(n, j);
    const long double tl = t.to_long_double();
    long double sum = 0.0L;
    for (const auto& term : terms) {
        sum += term.coefficient.to_long_double() *
               std::exp(-tl * static_cast<long double>(term.decay.get_d())) *
               std::pow(tl, -(static_cast<long double>(term.k) + 0.5L));
    }
    return sum;
}

namespace detail {

// Gauss-Legendre nodes/weights on [-1, 1], Newton on the recurrence.
inline std::pair<std::vector<long double>, std::vector<long double>>
gauss_legendre(int m) {
    constexpr long double kPi = 3.14159265358979323846264338327950288L;
    std::vector<long double> x(static_cast<std::size_t>(m)), w(static_cast<std::size_t>(m));
    for (int i = 0; i < (m + 1) / 2; ++i) {
        long double xi = std::cos(kPi * (static_cast<long double>(i) + 0.75L) /
                                  (static_cast<long double>(m) + 0.5L));
        long double dp = 0.0L;
        for (int iter = 0; iter < 100; ++iter) {
            long double p = 1.0L, pm1 = 0.0L;
            for (int k = 1; k <= m; ++k) {
                const long double pk =
                    ((2.0L * k - 1.0L) * xi * p - (k - 1.0L) * pm1) / static_cast<long double>(k);
                pm1 = p;
                p = pk;
            }
            dp = static_cast<long double>(m) * (xi * p - pm1) / (xi * xi - 1.0L);
            const long double dx = p / dp;
            xi -= dx;
            if (std::fabs(dx) < 1e-19L) break;
        }
        const long double wi = 2.0L / ((1.0L - xi * xi) * dp * dp);
        x[static_cast<std::size_t>(i)] = -xi;
        w[static_cast<std::size_t>(i)] = wi;
        x[static_cast<std::size_t>(m - 1 - i)] = xi;
        w[static_cast<std::size_t>(m - 1 - i)] = wi;
    }
    return {std::move(x), std::move(w)};
}

} // namespace detail

// Independent numeric oracle: evaluates the trace as a truncated integral
// of exp(-t(nu^2 + a^2)) against the expanded density polynomial, never
// invoking the Gaussian-moment identity the closed form rests on. The
// truncation radius comes from a certified tail bound stated relative to the
// all-positive closed sum, so the comparison tolerance is meaningful.
inline long double heat_trace_quadrature(int n, int j, const Rational& t) {
    if (t.sign() <= 0) throw NonPositiveTime("heat_trace_quadrature: requires t > 0");
    const DensityCoefficients d = density_polynomial(n, j);
    const long double tl = t.to_long_double();
    const long double al = static_cast<long double>(d.a);

    // For R >= 1 the integrand beyond R is dominated by
    // (sum_k K[k]) * nu^(2n) * exp(-t nu^2), and
    // int_R^inf nu^(2n) e^(-t nu^2) <= e^(-t R^2 / 2) * Gamma(n+1/2) (t/2)^-(n+1/2).
    // Relative to the closed sum (>= sum_k K[k] * g_min), the K-sum cancels,
    // leaving a radius small enough for the 400-point rule to resolve.
    long double g_min = 0.0L;
    for (int k = 1; k <= n; ++k) {
        const long double g = std::tgamma(static_cast<long double>(k) + 0.5L) *
                              std::pow(tl, -(static_cast<long double>(k) + 0.5L));
        if (k == 1 || g < g_min) g_min = g;
    }
    const long double log_head =
        std::lgamma(static_cast<long double>(n) + 0.5L) -
        (static_cast<long double>(n) + 0.5L) * std::log(tl / 2.0L);
    const long double log_target = std::log(1e-13L) + std::log(g_min);
    long double R2 = 2.0L * (log_head - log_target) / tl;
    if (R2 < 1.0L) R2 = 1.0L;
    const long double R = std::sqrt(R2);

    static const auto rule = detail::gauss_legendre(400);
    const auto& nodes = rule.first;
    const auto& weights = rule.second;

    std::vector<long double> kl(d.K.size());
    for (std::size_t i = 0; i < kl.size(); ++i) kl[i] = static_cast<long double>(d.K[i].get_d());

    long double integral = 0.0L;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const long double nu = R * nodes[i];
        const long double y = nu * nu;
        long double p = 0.0L;
        for (std::size_t k = kl.size(); k-- > 0;) p = p * y + kl[k];
        integral += weights[i] * std::exp(-tl * y) * p;
    }
    integral *= R;

    const Rational prefactor(factorial_int(static_cast<unsigned long>(n)) *
                                 binomial_int(2 * static_cast<unsigned long>(n),
                                              static_cast<unsigned long>(j)),
                             2 * factorial_int(2 * static_cast<unsigned long>(n)));
    const long double pre = PiMonomial(prefactor, -2 * (n + 1)).to_long_double();
    return pre * std::exp(-tl * al * al) * integral;
}

// Cross-checks closed form against quadrature for every degree j < n and
// t in {1/4, 1, 4}, for all odd dimensions 3 <= d <= d_max.
inline VerificationReport verify_heat_trace(int d_max, long double rel_tol = 1e-9L) {
    if (d_max < 3 || d_max % 2 == 0)
        throw InvalidDimension("verify_heat_trace: d_max must be odd and >= 3");
    VerificationReport report;
    const Rational times[] = {Rational(1, 4), Rational(1), Rational(4)};
    for (int dd = 3; dd <= d_max; dd += 2) {
        const int n = (dd - 1) / 2;
        for (int j = 0; j < n; ++j) {
            for (const Rational& t : times) {
                const long double closed = heat_trace_numeric(n, j, t);
                const long double quad = heat_trace_quadrature(n, j, t);
                const long double rel = std::fabs(closed - quad) / std::fabs(closed);
                report.add("heat-trace-oracle",
                           "d=" + std::to_string(dd) + " j=" + std::to_string(j) +
                               " t=" + t.str(),
                           rel <= rel_tol,
                           "closed=" + std::to_string(static_cast<double>(closed)) +
                               " quadrature=" + std::to_string(static_cast<double>(quad)) +
                               " rel=" + std::to_string(static_cast<double>(rel)));
            }
        }
    }
    return report;
}

} // namespace l2torsion
