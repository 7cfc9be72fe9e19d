#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "decimal.hpp"
#include "errors.hpp"
#include "interval.hpp"
#include "logdet.hpp"
#include "pi_monomial.hpp"
#include "rational.hpp"
#include "report.hpp"

namespace l2torsion {

// alpha_d for one odd dimension d = 2n+1: the positive constant with
// torsion = (-1)^n * alpha_d * volume. exact is q_d * pi^-n with q_d > 0.
struct AlphaRecord {
    int d;
    int n;
    PiMonomial exact;
    std::string decimal; // empty unless rendered
    std::vector<LogDetDensity> densities; // j = 0 .. n
};

inline void validate_dimension(const char* where, int d) {
    if (d < 3 || d % 2 == 0)
        throw InvalidDimension(std::string(where) + ": dimension must be odd and >= 3, got " +
                               std::to_string(d));
}

inline AlphaRecord alpha_exact(int d) {
    validate_dimension("alpha", d);
    const int n = (d - 1) / 2;
    AlphaRecord rec{d, n, PiMonomial::zero(), "", {}};
    rec.densities.reserve(static_cast<std::size_t>(n) + 1);
    PiMonomial abs_sum = PiMonomial::pi_power(Rational(0), -n);
    PiMonomial alt_sum = abs_sum;
    for (int j = 0; j <= n; ++j) {
        rec.densities.push_back(logdet_closed(n, j));
        const PiMonomial& L = rec.densities.back().value;
        abs_sum += L.abs();
        alt_sum += (j % 2 == 0) ? -L : L; // (-1)^(j+1) * L_j
    }
    PiMonomial doubled_abs = Rational(2) * abs_sum;
    PiMonomial doubled_alt = Rational(2) * alt_sum;
    if (n % 2 != 0) doubled_alt = -doubled_alt; // (-1)^n
    // The two assemblies must coincide and be positive; anything else is an
    // arithmetic bug, not a data-dependent condition.
    if (doubled_abs != doubled_alt || doubled_abs.sign() <= 0)
        throw std::logic_error("alpha: absolute and alternating assemblies disagree");
    rec.exact = doubled_abs;
    return rec;
}

inline AlphaRecord alpha(int d, int digits = 6) {
    AlphaRecord rec = alpha_exact(d);
    rec.decimal = render_sigfigs(rec.exact, digits);
    return rec;
}

inline std::vector<AlphaRecord> alpha_table(int d_max, int digits = 6) {
    validate_dimension("alpha_table", d_max);
    std::vector<AlphaRecord> rows;
    rows.reserve(static_cast<std::size_t>((d_max - 1) / 2));
    for (int d = 3; d <= d_max; d += 2) rows.push_back(alpha(d, digits));
    return rows;
}

// torsion = (-1)^n * alpha_d * volume, with the volume argument taken at its
// exact binary value so the monomial stays exact.
struct TorsionValue {
    int d;
    double volume;
    PiMonomial exact;
    std::string decimal;
    double value;
};

inline TorsionValue torsion(int d, double volume, int digits = 6) {
    validate_dimension("torsion", d);
    if (!std::isfinite(volume) || volume < 0)
        throw InvalidVolume("torsion: volume must be finite and >= 0");
    const AlphaRecord rec = alpha_exact(d);
    PiMonomial t = Rational::from_double(volume) * rec.exact;
    if (rec.n % 2 != 0) t = -t;
    TorsionValue out{d, volume, t, render_sigfigs(t, digits),
                     static_cast<double>(t.to_long_double())};
    return out;
}

// Growth facts about the rational parts q_d of alpha_d = q_d * pi^-n:
//   growth-recurrence  q_(2n+1) >= (n/2) * q_(2n-1)          (n >= 2)
//   growth-factorial   q_(2n+1) >= (2/3) * n! / 2^n          (n >= 1)
//   growth-strict      q_(2n+1) >  pi * q_(2n-1)             (n >= 2)
// The first two are pure rational comparisons. The strict one is decided
// against a certified pi enclosure: the ratio q_(2n+1)/q_(2n-1) lying above
// the enclosure is a proof, below it a refutation, and inside it the check
// reports INDETERMINATE, which a caller can retire by refining pi_bits.
inline VerificationReport verify_growth(int d_max, unsigned long pi_bits = 128) {
    validate_dimension("verify_growth", d_max);
    VerificationReport rep;
    const RatInterval pi = pi_enclosure(pi_bits);
    Rational prev_q;
    for (int n = 1; 2 * n + 1 <= d_max; ++n) {
        const int dd = 2 * n + 1;
        const std::string params = "d=" + std::to_string(dd);
        const Rational q = alpha_exact(dd).exact.coeff();

        const Rational factorial_bound(
            2 * factorial_int(static_cast<unsigned long>(n)),
            3 * pow_int(Int(2), static_cast<unsigned long>(n)));
        const bool fact_ok = q >= factorial_bound;
        rep.add("growth-factorial", params, fact_ok,
                fact_ok ? "" : "q=" + format_sigfigs(q, 12) +
                               " bound=" + format_sigfigs(factorial_bound, 12));

        if (n >= 2) {
            const Rational recurrence_bound = Rational(n, 2) * prev_q;
            const bool rec_ok = q >= recurrence_bound;
            rep.add("growth-recurrence", params, rec_ok,
                    rec_ok ? "" : "q=" + format_sigfigs(q, 12) +
                                  " bound=" + format_sigfigs(recurrence_bound, 12));

            const Rational ratio = q / prev_q;
            const int side = pi.side_of(ratio);
            const CheckStatus status = side > 0   ? CheckStatus::pass
                                       : side < 0 ? CheckStatus::fail
                                                  : CheckStatus::indeterminate;
            rep.add_status("growth-strict", params, status,
                           status == CheckStatus::pass
                               ? ""
                               : "ratio=" + format_sigfigs(ratio, 12) + " pi in [" +
                                     format_sigfigs(pi.lo, 12) + ", " +
                                     format_sigfigs(pi.hi, 12) + "]");
        }
        prev_q = q;
    }
    return rep;
}

} // namespace l2torsion
