#pragma once

// Brute-force linear algebra over small explicit finite fields.

#include "gltrace/family.hpp"
#include "gltrace/partition.hpp"
#include "gltrace/traces.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace gltrace::fq {

using Elem = std::uint8_t;

/// Field of order q <= 9 with tabulated operations. Element 0 is zero and
/// element 1 is one; element k of a non-prime field is the polynomial whose
/// base-p digits are its coefficients, constant term first.
class Field {
public:
    int order() const { return q_; }
    int characteristic() const { return p_; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    /// Multiplicative inverse; throws on zero.
    Elem inv(Elem a) const;

    friend std::shared_ptr<const Field> field_make(int q);

private:
    Field() = default;
    void validate() const;

    int q_ = 0;
    int p_ = 0;
    std::vector<Elem> add_, mul_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// q in {2,3,4,5,7,8,9}; other orders are rejected. Tables are validated
/// against the field axioms on construction.
FieldPtr field_make(int q);

class Matrix {
public:
    Matrix(FieldPtr field, int rows, int cols);
    static Matrix identity(FieldPtr field, int n);
    /// Row-major entries; each must be below q.
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<int>>& rows);

    const FieldPtr& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Elem at(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    void set(int i, int j, Elem v) { data_[static_cast<std::size_t>(i * cols_ + j)] = v; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(Elem c) const;
    Matrix pow(int k) const;
    bool is_zero() const;

    int rank() const;
    bool invertible() const { return rows_ == cols_ && rank() == rows_; }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_; }

private:
    FieldPtr field_;
    int rows_, cols_;
    std::vector<Elem> data_;
};

/// Jordan type of a unipotent matrix. Rejects non-square or non-unipotent input.
Partition unipotent_class_of(const Matrix& m);

/// A subspace of F_q^n stored by its reduced row echelon basis.
struct Subspace {
    int ambient = 0;
    std::vector<std::vector<Elem>> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    friend bool operator==(const Subspace&, const Subspace&) = default;
};

/// Every subspace of F_q^n of dimension d, generated from pivot patterns.
std::vector<Subspace> subspaces(const FieldPtr& field, int n, int d);

bool is_invariant(const Matrix& m, const Subspace& x);
/// x is contained in y.
bool contained_in(const FieldPtr& field, const Subspace& x, const Subspace& y);

/// Number of m-invariant flags with dimension jumps mu_1, mu_2, ...
long count_fixed_flags(const Matrix& m, const Partition& mu);

/// Number of m-invariant subspaces of dimension d.
long count_fixed_subspaces(const Matrix& m, int d);

/// Jumps of dim(X cap <e_1..e_i>) along i = 1..n.
std::vector<int> schubert_symbol(const FieldPtr& field, const Subspace& x);

/// Number of subspaces of F_q^n whose symbol is x, by enumeration.
long schubert_cell_count(const std::vector<int>& x, int q);

/// All h in GL(n+1,q) with top-left corner g, zero bottom row left of the
/// corner entry, and that entry nonzero (GLB) or equal to 1 (GLU).
std::vector<Matrix> ext_enumerate(const Matrix& g, Variant variant);

/// Monic polynomial, coefficients constant term first.
using Poly = std::vector<Elem>;

/// Monic irreducible polynomials of degree d, excluding x, in a fixed order.
std::vector<Poly> irreducible_polys(const FieldPtr& field, int d);

/// Printable tag; x - a prints as "x-<a>", so x - 1 is the unit tag.
std::string poly_tag(const FieldPtr& field, const Poly& p);

/// Value of p at the matrix m.
Matrix evaluate(const Poly& p, const Matrix& m);

/// Every family of degree n over the irreducible polynomials of F_q.
std::vector<Family> families_enumerate(int n, const FieldPtr& field);

/// Conjugacy class of an invertible matrix: per irreducible factor of the
/// characteristic polynomial, the partition read off the kernel filtration.
ClassLabel class_of(const Matrix& m);

/// Calls fn on every n x n matrix over the field (q^{n^2} of them).
void for_each_matrix(const FieldPtr& field, int n, const std::function<void(const Matrix&)>& fn);
/// Calls fn on every upper unitriangular n x n matrix.
void for_each_unitriangular(const FieldPtr& field, int n, const std::function<void(const Matrix&)>& fn);
/// Calls fn on every unipotent n x n matrix, found by filtering the matrices
/// of trace n for nilpotency of g - 1.
void for_each_unipotent(const FieldPtr& field, int n, const std::function<void(const Matrix&)>& fn);

/// Jordan types of all GLU extensions of the unipotent g, with multiplicity.
/// Same result as classifying every matrix of ext_enumerate(g, GLU), computed
/// from the ranks of the block powers of h - 1.
std::map<Partition, long> extension_type_counts(const Matrix& g);

/// Block matrix over F_q with companion blocks of p on the diagonal and
/// identity blocks on the superdiagonal, one Jordan chain per part of nu.
Matrix companion_jordan(const FieldPtr& field, const Poly& p, const Partition& nu);

}  // namespace gltrace::fq
