#include "gltrace/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gltrace {

namespace {

bool parse_integer(std::string_view text, Integer& out) {
    if (text.empty()) return false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') i = 1;
    if (i == text.size()) return false;
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    Integer num;
    Integer den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) {
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        }
    } else {
        if (!parse_integer(trim(text.substr(0, slash)), num) ||
            !parse_integer(trim(text.substr(slash + 1)), den)) {
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        }
    }
    return Rational(num, den);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Rational r;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    r.v_ = mpq_class(num, den);
    return r;
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

mpz_class from_u64(std::uint64_t u) {
    mpz_class v;
    mpz_import(v.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
    return v;
}

mpz_class shifted_numerator(const Rational& r) {
    mpz_class v = r.numerator();
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), 64);
    return v;
}

}  // namespace

bool less_than_dyadic64(const Rational& r, std::uint64_t u) {
    // r < u / 2^64  <=>  num * 2^64 < u * den
    return shifted_numerator(r) < from_u64(u) * r.denominator();
}

bool dyadic64_less_than(std::uint64_t u, const Rational& r) {
    return from_u64(u) * r.denominator() < shifted_numerator(r);
}

}  // namespace gltrace
