#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace l2torsion {

// Dense univariate polynomial over Rational, coefficient of x^k at index k.
// Normal form: no stored trailing zeros, so degree() == coeffs().size() - 1
// and the zero polynomial has an empty coefficient vector (degree -1).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Polynomial monomial(const Rational& c, std::size_t k) {
        if (c.is_zero()) return {};
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& coeff(std::size_t k) const {
        static const Rational kZero;
        return k < c_.size() ? c_[k] : kZero;
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const {
        Rational acc;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    // Definite integral over [lo, hi], exact.
    Rational integrate(const Rational& lo, const Rational& hi) const {
        Rational at_hi, at_lo;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const Rational a = c_[k] / Rational(static_cast<long>(k) + 1);
            at_hi = at_hi * hi + a;
            at_lo = at_lo * lo + a;
        }
        return at_hi * hi - at_lo * lo;
    }

    // Exact quotient; throws NonZeroRemainder unless divisor | *this.
    Polynomial divexact(const Polynomial& divisor) const {
        if (divisor.is_zero())
            throw std::invalid_argument("Polynomial::divexact: zero divisor");
        if (is_zero()) return {};
        const int dd = divisor.degree();
        if (degree() < dd)
            throw NonZeroRemainder("Polynomial::divexact: degree(dividend) < degree(divisor)");
        std::vector<Rational> rem = c_;
        std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1);
        const Rational& lead = divisor.c_[static_cast<std::size_t>(dd)];
        for (std::size_t k = quot.size(); k-- > 0;) {
            Rational q = rem[k + static_cast<std::size_t>(dd)] / lead;
            quot[k] = q;
            if (!q.is_zero())
                for (std::size_t i = 0; i <= static_cast<std::size_t>(dd); ++i)
                    rem[k + i] -= q * divisor.c_[i];
        }
        for (std::size_t i = 0; i < static_cast<std::size_t>(dd); ++i)
            if (!rem[i].is_zero())
                throw NonZeroRemainder("Polynomial::divexact: nonzero remainder");
        return Polynomial(std::move(quot));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(r));
    }
    Polynomial operator-() const {
        std::vector<Rational> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = -c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        if (s.is_zero()) return {};
        std::vector<Rational> r(p.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * p.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& p, const Rational& s) { return s * p; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str(std::string_view var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const Rational& c = c_[k];
            if (c.is_zero()) continue;
            if (!out.empty()) out += c.sign() > 0 ? " + " : " - ";
            else if (c.sign() < 0) out += "-";
            const std::string mag = c.abs().str();
            if (k == 0) {
                out += mag;
            } else {
                if (mag != "1") out += mag + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Integer-coefficient polynomial helpers on bare vectors. The inner loops of
// the density/log-det builders stay in Int space and only leave it when a
// rational integral or a Polynomial view is needed.
namespace intpoly {

using IntVec = std::vector<Int>;

// p *= (x + c), in place.
inline void mul_linear(IntVec& p, const Int& c) {
    p.push_back(Int(0));
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        p[i + 1] += p[i];
        p[i] *= c;
    }
}

// Exact integral of p over [0, upper].
inline Rational integral_to(const IntVec& p, const Int& upper) {
    Rational acc;
    for (std::size_t k = p.size(); k-- > 0;) {
        acc = acc * Rational(upper) + Rational(p[k], Int(static_cast<long>(k) + 1));
    }
    return acc * Rational(upper);
}

inline Rational integral_unit(const IntVec& p) { return integral_to(p, Int(1)); }

inline Polynomial to_polynomial(const IntVec& p) {
    std::vector<Rational> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = Rational(p[i]);
    return Polynomial(std::move(c));
}

} // namespace intpoly

} // namespace l2torsion
