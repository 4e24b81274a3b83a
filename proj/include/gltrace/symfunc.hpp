#pragma once

#include "gltrace/partition.hpp"
#include "gltrace/polynomial.hpp"
#include "gltrace/rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace gltrace {

/// Symmetric function in the power-sum basis: sum over rho of c_rho p_rho.
/// No stored coefficient is zero.
class PowerSumElement {
public:
    using Terms = std::map<Partition, Rational>;

    PowerSumElement() = default;
    explicit PowerSumElement(Terms terms);
    /// The single power-sum product p_rho.
    static PowerSumElement p(const Partition& rho);
    static PowerSumElement one() { return p(Partition()); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of p_rho (zero if absent).
    Rational coeff(const Partition& rho) const;
    /// Degree if every term has the same degree, -1 for zero or mixed.
    int homogeneous_degree() const;

    void add_term(const Partition& rho, const Rational& c);

    PowerSumElement& operator+=(const PowerSumElement& o);
    PowerSumElement& operator-=(const PowerSumElement& o);
    PowerSumElement& operator*=(const Rational& c);
    friend PowerSumElement operator+(PowerSumElement a, const PowerSumElement& b) { return a += b; }
    friend PowerSumElement operator-(PowerSumElement a, const PowerSumElement& b) { return a -= b; }
    friend PowerSumElement operator*(PowerSumElement a, const Rational& c) { return a *= c; }
    friend PowerSumElement operator*(const Rational& c, PowerSumElement a) { return a *= c; }
    /// Ring product: index concatenation with coefficient multiplication.
    friend PowerSumElement operator*(const PowerSumElement& a, const PowerSumElement& b);

    friend bool operator==(const PowerSumElement&, const PowerSumElement&) = default;

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const PowerSumElement& f);

/// A specialization of the ring of symmetric functions, given by its values
/// on the power sums: p_1 -> gamma, p_k -> higher(k) for k >= 2.
///
/// The finite form carries explicit alpha and beta sequences with
/// p_k -> sum alpha^k + (-1)^{k-1} sum beta^k and enforces
/// sum(alpha + beta) <= gamma. The power-values form wraps an arbitrary
/// function for infinite sequences (geometric spreads, plethysm images).
class Specialization {
public:
    using PowerFn = std::function<Rational(int)>;

    static Specialization finite(std::vector<Rational> alphas, std::vector<Rational> betas, Rational gamma);
    /// Finite form with gamma = 1.
    static Specialization thoma(std::vector<Rational> alphas, std::vector<Rational> betas) {
        return finite(std::move(alphas), std::move(betas), Rational(1));
    }
    static Specialization power_values(Rational p1, PowerFn higher);

    bool is_finite() const { return finite_; }
    const std::vector<Rational>& alphas() const { return alphas_; }
    const std::vector<Rational>& betas() const { return betas_; }
    const Rational& gamma() const { return gamma_; }

    /// Value on p_k, k >= 1.
    Rational power_sum(int k) const;
    /// The composition with Pl_n: p_k -> this(p_{nk}).
    Specialization plethysm(int n) const;

private:
    Specialization() = default;

    bool finite_ = false;
    std::vector<Rational> alphas_;
    std::vector<Rational> betas_;
    Rational gamma_;
    PowerFn higher_;
};

/// Sum of k-th powers of the sequence (1-q^{-1}) x_i q^{1-j}, i,j >= 1:
/// (1-q^{-1})^k / (1-q^{-k}) * sum_i x_i^k.
Rational spread_power_sum(const std::vector<Rational>& seq, const Rational& q, int k);

/// The geometric spread x^{(q)} placed in the alpha slot; its p_1 value is sum x_i.
/// Requires seq weakly decreasing, non-negative, summing to at most 1, q > 1.
Specialization geometric_spread(const std::vector<Rational>& seq, const Rational& q);

// ---- basis tables -------------------------------------------------------

/// Symmetric group character chi^lambda evaluated on cycle type rho
/// (Murnaghan-Nakayama). Sizes must agree.
Integer sn_character(const Partition& lambda, const Partition& rho);

/// s_lambda = sum_rho chi^lambda_rho / z_rho p_rho.
PowerSumElement schur_in_p(const Partition& lambda);

/// Number of semistandard tableaux of shape lambda and content mu.
Integer kostka(const Partition& lambda, const Partition& mu);

/// K_{mu,lambda}(t) = sum of t^{charge(T)} over SSYT T of shape mu, content lambda.
TPolynomial kostka_foulkes(const Partition& mu, const Partition& lambda);

/// Lascoux-Schuetzenberger charge of a word whose content is a partition
/// (letters 1..k, with #1 >= #2 >= ...).
int charge(const std::vector<int>& word);

/// Degree-n Kostka-Foulkes matrix as polynomials: entry [i][j] is
/// K_{parts[i], parts[j]}(t), parts = partitions_of(n).
const std::vector<std::vector<TPolynomial>>& kostka_foulkes_matrix(int n);

/// Exact inverse of kostka_foulkes_matrix(n) over Z[t] (it is unitriangular).
const std::vector<std::vector<TPolynomial>>& inverse_kostka_foulkes_matrix(int n);

/// b_lambda(t) = prod_i prod_{j=1}^{m_i(lambda)} (1 - t^j).
TPolynomial hl_b(const Partition& lambda);

/// Hall-Littlewood P_lambda(.;t) in the Schur basis.
std::map<Partition, Rational> hl_p_in_schur(const Partition& lambda, const Rational& t);

/// Hall-Littlewood Q_lambda(.;t) in the power-sum basis.
PowerSumElement hl_q_in_p(const Partition& lambda, const Rational& t);

/// Q_lambda(.;t) in the power-sum basis with polynomial-in-t coefficients.
std::map<Partition, RationalPolynomial> hl_q_in_p_symbolic(const Partition& lambda);

/// Applies p_k -> p_k / (1 - t^k). Rejects t with some 1 - t^k = 0.
PowerSumElement apply_mq(const PowerSumElement& f, const Rational& t);

/// Modified Hall-Littlewood Q~_lambda = M_q Q_lambda.
PowerSumElement modified_hl_q(const Partition& lambda, const Rational& t);

/// Pl_n: p_rho -> p_{n rho}.
PowerSumElement plethysm_pl(const PowerSumElement& f, int n);

/// sp(p_k) for k >= 1.
Rational spec_power_sum(const Specialization& sp, int k);

/// Applies the algebra homomorphism sp to f.
Rational specialize(const Specialization& sp, const PowerSumElement& f);

/// Schur coefficients of a homogeneous f. Zero coefficients are omitted.
/// Rejects non-homogeneous input.
std::map<Partition, Rational> schur_expand(const PowerSumElement& f);

/// Monomial symmetric function m_mu in the power-sum basis, via
/// m_mu = sum_lambda (K^{-1})_{mu,lambda} s_lambda.
PowerSumElement monomial_in_p(const Partition& mu);

}  // namespace gltrace
