#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "pi_monomial.hpp"
#include "plancherel.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "report.hpp"

namespace l2torsion {

// The degree-j log-determinant density contribution L_j = value, an exact
// rational multiple of pi^-n. L_n is exactly zero; for j < n the sign
// strictly alternates with the shift a = n - j.
struct LogDetDensity {
    int n;
    int j;
    int a;
    PiMonomial value;
    int sign; // sign of value: (-1)^(a+1) for j < n, 0 for j = n
};

namespace detail {

// n! * binom(2n, j) / (2n)!, the rational prefactor shared by both routes.
inline Rational logdet_prefactor(int n, int j) {
    const auto nu = static_cast<unsigned long>(n);
    const auto ju = static_cast<unsigned long>(j);
    return Rational(factorial_int(nu) * binomial_int(2 * nu, ju),
                    factorial_int(2 * nu));
}

inline void validate_degrees(const char* where, int n, int j) {
    if (n < 1) throw InvalidDegree(std::string(where) + ": requires n >= 1");
    if (j < 0 || j > n)
        throw InvalidDegree(std::string(where) + ": requires 0 <= j <= n");
}

} // namespace detail

// Closed route: alternating odd-moment sum over the density coefficients,
// L_j = prefactor * sum_k K[k] * (-1)^(k+1) * a^(2k+1) / (2k+1) * pi^-n.
inline LogDetDensity logdet_closed(int n, int j) {
    detail::validate_degrees("logdet_closed", n, j);
    if (j == n) return {n, j, 0, PiMonomial::zero(), 0};
    const DensityCoefficients d = density_polynomial(n, j);
    const Int a(d.a);
    const Int a2 = a * a;
    Rational s;
    Int apow = a; // a^(2k+1)
    for (int k = 0; k <= n; ++k) {
        const Int& kk = d.K[static_cast<std::size_t>(k)];
        if (kk != 0) {
            const Rational term(kk * apow, Int(2 * k + 1));
            if (k % 2 == 0)
                s -= term;
            else
                s += term;
        }
        apow *= a2;
    }
    const PiMonomial value = PiMonomial::pi_power(detail::logdet_prefactor(n, j) * s, -n);
    return {n, j, d.a, value, value.sign()};
}

// The integrand of the direct route: prod_{k=0..n} (k^2 - x^2) / (a^2 - x^2),
// obtained by exact polynomial division (the quotient is polynomial because
// the k = a factor of the numerator is the divisor). Equals
// -x^2 * prod_{k=1..n, k!=a} (k^2 - x^2); degree 2n.
inline Polynomial logdet_integrand(int n, int j) {
    detail::validate_degrees("logdet_integrand", n, j);
    const int a = n - j;
    Polynomial numerator{Rational(1)};
    for (int k = 0; k <= n; ++k)
        numerator = numerator * Polynomial{Rational(static_cast<long>(k) * k), Rational(0), Rational(-1)};
    const Polynomial divisor{Rational(static_cast<long>(a) * a), Rational(0), Rational(-1)};
    return numerator.divexact(divisor);
}

// Direct route: L_j = -prefactor * int_0^a integrand dx * pi^-n. Shares only
// the rational prefactor with logdet_closed; the polynomial, its expansion,
// and the integration mechanism are all distinct.
inline LogDetDensity logdet_integral(int n, int j) {
    detail::validate_degrees("logdet_integral", n, j);
    const int a = n - j;
    const Polynomial p = logdet_integrand(n, j);
    const Rational integral = p.integrate(Rational(0), Rational(a));
    const PiMonomial value =
        PiMonomial::pi_power(-(detail::logdet_prefactor(n, j) * integral), -n);
    return {n, j, a, value, value.sign()};
}

// Segment decomposition behind the sign lemma: on [r, r+1] the integrand
// transforms (x = t + r) into (-1)^(n+1) * (-f_r(t)) with
//   f_r(t) = -(t + r) * prod_{k = r-n .. r+n, k != r-a, k != r+a} (t + k),
// an integer-coefficient polynomial of degree 2n. The pieces carry the
// whole lemma: fixed sign per segment, strictly growing magnitude.
struct FrDecomposition {
    int n;
    int a;
    std::vector<Polynomial> pieces;  // f_0 .. f_(a-1)
    std::vector<Rational> integrals; // int_0^1 f_r dt
    Rational total;                  // int_0^a integrand dx, via the direct route
};

inline FrDecomposition fr_decomposition(int n, int a) {
    if (n < 1) throw InvalidDegree("fr_decomposition: requires n >= 1");
    if (a < 1 || a > n) throw InvalidShift("fr_decomposition: requires 1 <= a <= n");
    FrDecomposition f{n, a, {}, {}, Rational()};
    f.pieces.reserve(static_cast<std::size_t>(a));
    f.integrals.reserve(static_cast<std::size_t>(a));
    for (int r = 0; r < a; ++r) {
        intpoly::IntVec p{Int(-r), Int(-1)}; // -(t + r)
        for (int k = r - n; k <= r + n; ++k) {
            if (k == r - a || k == r + a) continue;
            intpoly::mul_linear(p, Int(k));
        }
        f.integrals.push_back(intpoly::integral_unit(p));
        f.pieces.push_back(intpoly::to_polynomial(p));
    }
    f.total = logdet_integrand(n, n - a).integrate(Rational(0), Rational(a));
    return f;
}

// Mechanical verification of the sign lemma for one n, all degrees j < n:
//   dual-path    closed and direct routes agree exactly,
//   sign-law     sign(L_j) = (-1)^(a+1) and sign(int f_r) = (-1)^(n-r),
//   fr-identity  (-1)^(n+1) * sum_r int_0^1 f_r = int_0^a integrand,
//   fr-monotone  |int f_(r+1)| > |int f_r| strictly,
//   fr-pointwise |f_(r+1)(t)| > |f_r(t)| at t = 1/10 .. 9/10.
inline VerificationReport verify_sign_lemma(int n) {
    if (n < 1) throw InvalidDegree("verify_sign_lemma: requires n >= 1");
    VerificationReport rep;
    for (int j = 0; j < n; ++j) {
        const int a = n - j;
        const std::string params = "n=" + std::to_string(n) + " j=" + std::to_string(j);

        const LogDetDensity closed = logdet_closed(n, j);
        const LogDetDensity direct = logdet_integral(n, j);
        const bool dual_ok = closed.value == direct.value;
        rep.add("dual-path", params, dual_ok,
                dual_ok ? "" : closed.value.str() + " != " + direct.value.str());

        const FrDecomposition f = fr_decomposition(n, a);

        std::string sign_witness;
        const int expected_l = (a % 2 == 1) ? 1 : -1;
        bool signs_ok = closed.sign != 0 && closed.sign == expected_l;
        if (!signs_ok) sign_witness = "sign(L)=" + std::to_string(closed.sign);
        for (int r = 0; r < a && signs_ok; ++r) {
            const int expected_r = ((n - r) % 2 == 0) ? 1 : -1;
            if (f.integrals[static_cast<std::size_t>(r)].sign() != expected_r) {
                signs_ok = false;
                sign_witness = "sign(int f_" + std::to_string(r) + ")=" +
                               std::to_string(f.integrals[static_cast<std::size_t>(r)].sign());
            }
        }
        rep.add("sign-law", params, signs_ok, sign_witness);

        Rational alternating;
        for (const Rational& v : f.integrals) alternating += v;
        if (n % 2 == 0) alternating = -alternating; // (-1)^(n+1)
        const bool ident_ok = alternating == f.total;
        rep.add("fr-identity", params, ident_ok,
                ident_ok ? "" : alternating.str() + " != " + f.total.str());

        bool mono_ok = true;
        std::string mono_witness;
        for (int r = 0; r + 1 < a; ++r) {
            const Rational lo = f.integrals[static_cast<std::size_t>(r)].abs();
            const Rational hi = f.integrals[static_cast<std::size_t>(r) + 1].abs();
            if (!(hi > lo)) {
                mono_ok = false;
                mono_witness = "r=" + std::to_string(r) + ": |" + hi.str() +
                               "| <= |" + lo.str() + "|";
                break;
            }
        }
        rep.add("fr-monotone", params, mono_ok, mono_witness);

        bool pw_ok = true;
        std::string pw_witness;
        for (int i = 1; i <= 9 && pw_ok; ++i) {
            const Rational t(i, 10);
            Rational prev;
            for (int r = 0; r < a; ++r) {
                const Rational v = f.pieces[static_cast<std::size_t>(r)].eval(t).abs();
                if (r > 0 && !(v > prev)) {
                    pw_ok = false;
                    pw_witness = "t=" + t.str() + " r=" + std::to_string(r - 1);
                    break;
                }
                prev = v;
            }
        }
        rep.add("fr-pointwise", params, pw_ok, pw_witness);
    }
    return rep;
}

} // namespace l2torsion
