#pragma once

#include "gltrace/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gltrace {

/// Dense univariate polynomial in a formal parameter t; coeffs()[k] is the
/// coefficient of t^k. The leading coefficient is nonzero unless the
/// polynomial is zero, in which case the coefficient list is empty.
template <class Coeff>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Coeff constant) { // NOLINT(google-explicit-constructor)
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial monomial(std::size_t degree, Coeff c = Coeff(1)) {
        std::vector<Coeff> v(degree + 1, Coeff(0));
        v[degree] = std::move(c);
        return Polynomial(std::move(v));
    }

    const std::vector<Coeff>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Coeff coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }

    /// Horner evaluation at a rational point.
    Rational evaluate(const Rational& t) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + Rational(*it);
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Exact division; throws std::domain_error if a remainder is left or
    /// the division would leave the coefficient ring.
    Polynomial divide_exact(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Coeff> rem = coeffs_;
        if (rem.size() < d.coeffs_.size()) {
            if (is_zero()) return {};
            throw std::domain_error("inexact polynomial division");
        }
        std::vector<Coeff> quot(rem.size() - d.coeffs_.size() + 1, Coeff(0));
        const Coeff& lead = d.coeffs_.back();
        for (std::size_t k = quot.size(); k-- > 0;) {
            Coeff c = rem[k + d.coeffs_.size() - 1];
            if (c == 0) continue;
            Coeff qk = c / lead;
            if (qk * lead != c) throw std::domain_error("inexact polynomial division");
            quot[k] = qk;
            for (std::size_t j = 0; j < d.coeffs_.size(); ++j) rem[k + j] -= qk * d.coeffs_[j];
        }
        for (const auto& r : rem) {
            if (r != 0) throw std::domain_error("inexact polynomial division");
        }
        return Polynomial(std::move(quot));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Coefficients as strings, constant term first.
    std::vector<std::string> coefficient_strings() const {
        std::vector<std::string> out;
        for (const auto& c : coeffs_) out.push_back(to_text(c));
        return out;
    }

    /// Human readable form, e.g. "t^3 + t^2".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            if (coeffs_[k] == 0) continue;
            std::string c = to_text(coeffs_[k]);
            bool negative = !c.empty() && c[0] == '-';
            if (negative) c.erase(0, 1);
            if (!s.empty()) s += negative ? " - " : " + ";
            else if (negative) s += "-";
            if (k == 0) {
                s += c;
            } else {
                if (c != "1") s += c + "*";
                s += k == 1 ? std::string("t") : "t^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    static std::string to_text(const Integer& c) { return c.get_str(); }
    static std::string to_text(const Rational& c) { return c.to_string(); }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

/// Integer-coefficient polynomial in t (Kostka-Foulkes polynomials, b_lambda(t)).
using TPolynomial = Polynomial<Integer>;
using RationalPolynomial = Polynomial<Rational>;

inline RationalPolynomial to_rational(const TPolynomial& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RationalPolynomial(std::move(c));
}

}  // namespace gltrace
