#include "gltrace/fq.hpp"

#include <algorithm>
#include <stdexcept>

namespace gltrace::fq {

namespace {

struct Order {
    int p;
    int k;
    std::vector<int> modulus;  // monic, constant term first; empty for prime fields
};

Order order_of(int q) {
    switch (q) {
    case 2: case 3: case 5: case 7: return {q, 1, {}};
    case 4: return {2, 2, {1, 1, 1}};     // x^2 + x + 1
    case 8: return {2, 3, {1, 1, 0, 1}};  // x^3 + x + 1
    case 9: return {3, 2, {1, 0, 1}};     // x^2 + 1
    default: throw std::invalid_argument("unsupported field order " + std::to_string(q));
    }
}

std::vector<int> digits(int e, int p, int k) {
    std::vector<int> d(static_cast<std::size_t>(k));
    for (auto& x : d) {
        x = e % p;
        e /= p;
    }
    return d;
}

int from_digits(const std::vector<int>& d, int p) {
    int e = 0;
    for (std::size_t i = d.size(); i-- > 0;) e = e * p + d[i];
    return e;
}

}  // namespace

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
}

void Field::validate() const {
    auto fail = [](const char* what) { throw std::logic_error(std::string("field tables violate ") + what); };
    for (int a = 0; a < q_; ++a) {
        const auto ea = static_cast<Elem>(a);
        if (add(ea, 0) != ea || mul(ea, 1) != ea) fail("identities");
        if (add(ea, neg(ea)) != 0) fail("additive inverses");
        if (a != 0 && mul(ea, inv_[a]) != 1) fail("multiplicative inverses");
        for (int b = 0; b < q_; ++b) {
            const auto eb = static_cast<Elem>(b);
            if (add(ea, eb) != add(eb, ea) || mul(ea, eb) != mul(eb, ea)) fail("commutativity");
            for (int c = 0; c < q_; ++c) {
                const auto ec = static_cast<Elem>(c);
                if (add(add(ea, eb), ec) != add(ea, add(eb, ec))) fail("additive associativity");
                if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec))) fail("multiplicative associativity");
                if (mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec))) fail("distributivity");
            }
        }
    }
}

FieldPtr field_make(int q) {
    const Order o = order_of(q);
    std::shared_ptr<Field> f(new Field());
    f->q_ = q;
    f->p_ = o.p;
    const auto qs = static_cast<std::size_t>(q);
    f->add_.resize(qs * qs);
    f->mul_.resize(qs * qs);
    f->neg_.resize(qs);
    f->inv_.assign(qs, 0);
    for (int a = 0; a < q; ++a) {
        const auto da = digits(a, o.p, o.k);
        for (int b = 0; b < q; ++b) {
            const auto db = digits(b, o.p, o.k);
            std::vector<int> sum(static_cast<std::size_t>(o.k));
            for (int i = 0; i < o.k; ++i) sum[i] = (da[i] + db[i]) % o.p;
            std::vector<int> prod(static_cast<std::size_t>(2 * o.k - 1), 0);
            for (int i = 0; i < o.k; ++i) {
                for (int j = 0; j < o.k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % o.p;
            }
            // Reduce modulo the monic modulus of degree k.
            for (int top = 2 * o.k - 2; top >= o.k; --top) {
                const int c = prod[top];
                if (c == 0) continue;
                for (int i = 0; i <= o.k; ++i) {
                    prod[top - o.k + i] = ((prod[top - o.k + i] - c * o.modulus[i]) % o.p + o.p) % o.p;
                }
            }
            prod.resize(static_cast<std::size_t>(o.k));
            f->add_[a * q + b] = static_cast<Elem>(from_digits(sum, o.p));
            f->mul_[a * q + b] = static_cast<Elem>(from_digits(prod, o.p));
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (f->add_[a * q + b] == 0) f->neg_[a] = static_cast<Elem>(b);
            if (f->mul_[a * q + b] == 1) f->inv_[a] = static_cast<Elem>(b);
        }
    }
    f->validate();
    return f;
}

// ---- matrices ------------------------------------------------------------------

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {
    if (!field_) throw std::invalid_argument("matrix needs a field");
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::identity(FieldPtr field, int n) {
    Matrix m(std::move(field), n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j) {
            const int v = rows[i][j];
            if (v < 0 || v >= field->order()) throw std::invalid_argument("matrix entry outside the field");
            m.set(i, j, static_cast<Elem>(v));
        }
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    const Field& f = *field_;
    Matrix out(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Elem a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) out.set(i, j, f.add(out.at(i, j), f.mul(a, o.at(k, j))));
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], o.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(field_->neg(1)); }

Matrix Matrix::scaled(Elem c) const {
    Matrix out = *this;
    for (auto& v : out.data_) v = field_->mul(v, c);
    return out;
}

Matrix Matrix::pow(int k) const {
    if (rows_ != cols_) throw std::invalid_argument("power of a non-square matrix");
    Matrix out = identity(field_, rows_);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Elem v) { return v == 0; });
}

namespace {

// Row reduces in place; returns the rank. Rows end up in reduced echelon form.
int row_reduce(const Field& f, std::vector<std::vector<Elem>>& rows, int cols) {
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int pivot = r;
        while (pivot < static_cast<int>(rows.size()) && rows[pivot][c] == 0) ++pivot;
        if (pivot == static_cast<int>(rows.size())) continue;
        std::swap(rows[pivot], rows[r]);
        const Elem scale = f.inv(rows[r][c]);
        for (auto& v : rows[r]) v = f.mul(v, scale);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Elem factor = f.neg(rows[i][c]);
            for (int j = 0; j < cols; ++j) rows[i][j] = f.add(rows[i][j], f.mul(factor, rows[r][j]));
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<Elem>> to_rows(const Matrix& m) {
    std::vector<std::vector<Elem>> rows(static_cast<std::size_t>(m.rows()), std::vector<Elem>(static_cast<std::size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    }
    return rows;
}

int nullity(const Matrix& m) { return m.cols() - m.rank(); }

}  // namespace

int Matrix::rank() const {
    auto rows = to_rows(*this);
    return row_reduce(*field_, rows, cols_);
}

Partition unipotent_class_of(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("unipotent_class_of needs a square matrix");
    const int n = m.rows();
    const Matrix nil = m - Matrix::identity(m.field(), n);
    std::vector<int> column_lengths;
    Matrix power = Matrix::identity(m.field(), n);
    int previous = 0;
    for (int k = 1; k <= n; ++k) {
        power = power * nil;
        const int kernel = nullity(power);
        if (kernel == previous) break;
        column_lengths.push_back(kernel - previous);
        previous = kernel;
    }
    if (previous != n) throw std::invalid_argument("matrix is not unipotent");
    return Partition(column_lengths).transpose();
}

// ---- subspaces -------------------------------------------------------------------

std::vector<Subspace> subspaces(const FieldPtr& field, int n, int d) {
    std::vector<Subspace> out;
    if (d < 0 || d > n) return out;
    const int q = field->order();
    std::vector<int> pivots(static_cast<std::size_t>(d));
    auto fill_free = [&](const std::vector<int>& piv) {
        std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
        for (int p : piv) is_pivot[p] = true;
        std::vector<std::pair<int, int>> free;  // (row, col)
        for (int i = 0; i < d; ++i) {
            for (int c = piv[i] + 1; c < n; ++c) {
                if (!is_pivot[c]) free.emplace_back(i, c);
            }
        }
        std::vector<int> values(free.size(), 0);
        while (true) {
            Subspace s{n, std::vector<std::vector<Elem>>(static_cast<std::size_t>(d), std::vector<Elem>(static_cast<std::size_t>(n), 0))};
            for (int i = 0; i < d; ++i) s.basis[i][piv[i]] = 1;
            for (std::size_t f = 0; f < free.size(); ++f) s.basis[free[f].first][free[f].second] = static_cast<Elem>(values[f]);
            out.push_back(std::move(s));
            std::size_t pos = 0;
            while (pos < values.size() && ++values[pos] == q) values[pos++] = 0;
            if (pos == values.size()) break;
        }
    };
    auto choose = [&](auto&& self, int i, int start) -> void {
        if (i == d) {
            fill_free(pivots);
            return;
        }
        for (int c = start; c <= n - (d - i); ++c) {
            pivots[i] = c;
            self(self, i + 1, c + 1);
        }
    };
    choose(choose, 0, 0);
    return out;
}

bool is_invariant(const Matrix& m, const Subspace& x) {
    const Field& f = *m.field();
    const int n = x.ambient;
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("matrix and subspace dimensions differ");
    auto rows = x.basis;
    for (const auto& v : x.basis) {
        std::vector<Elem> w(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) w[i] = f.add(w[i], f.mul(m.at(i, j), v[j]));
        }
        rows.push_back(std::move(w));
    }
    return row_reduce(f, rows, n) == x.dim();
}

bool contained_in(const FieldPtr& field, const Subspace& x, const Subspace& y) {
    if (x.dim() > y.dim()) return false;
    auto rows = y.basis;
    rows.insert(rows.end(), x.basis.begin(), x.basis.end());
    return row_reduce(*field, rows, y.ambient) == y.dim();
}

namespace {

std::vector<Subspace> invariant_subspaces(const Matrix& m, int d) {
    std::vector<Subspace> out;
    for (auto& s : subspaces(m.field(), m.rows(), d)) {
        if (is_invariant(m, s)) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

long count_fixed_flags(const Matrix& m, const Partition& mu) {
    const int n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("count_fixed_flags needs a square matrix");
    if (mu.size() != n) throw std::invalid_argument("flag shape must have size n");
    // counts[i] = number of invariant partial flags ending at layer[i].
    std::vector<Subspace> layer{Subspace{n, {}}};
    std::vector<long> counts{1};
    int dim = 0;
    for (int part : mu.parts()) {
        dim += part;
        std::vector<Subspace> next = invariant_subspaces(m, dim);
        std::vector<long> next_counts(next.size(), 0);
        for (std::size_t i = 0; i < next.size(); ++i) {
            for (std::size_t j = 0; j < layer.size(); ++j) {
                if (counts[j] != 0 && contained_in(m.field(), layer[j], next[i])) next_counts[i] += counts[j];
            }
        }
        layer = std::move(next);
        counts = std::move(next_counts);
    }
    long total = 0;
    for (long c : counts) total += c;
    return total;
}

long count_fixed_subspaces(const Matrix& m, int d) {
    if (m.rows() != m.cols()) throw std::invalid_argument("count_fixed_subspaces needs a square matrix");
    return static_cast<long>(invariant_subspaces(m, d).size());
}

std::vector<int> schubert_symbol(const FieldPtr& field, const Subspace& x) {
    const int n = x.ambient;
    std::vector<int> symbol;
    int previous = 0;
    for (int i = 1; i <= n; ++i) {
        // dim(X cap V_i) = dim X - rank of X projected to coordinates i+1..n.
        std::vector<std::vector<Elem>> tail;
        for (const auto& v : x.basis) tail.emplace_back(v.begin() + i, v.end());
        const int meet = x.dim() - row_reduce(*field, tail, n - i);
        symbol.push_back(meet - previous);
        previous = meet;
    }
    return symbol;
}

long schubert_cell_count(const std::vector<int>& x, int q) {
    const FieldPtr field = field_make(q);
    const int n = static_cast<int>(x.size());
    long count = 0;
    for (int d = 0; d <= n; ++d) {
        for (const auto& s : subspaces(field, n, d)) count += schubert_symbol(field, s) == x;
    }
    return count;
}

std::vector<Matrix> ext_enumerate(const Matrix& g, Variant variant) {
    const int n = g.rows();
    if (g.cols() != n) throw std::invalid_argument("ext_enumerate needs a square matrix");
    if (!g.invertible()) throw std::invalid_argument("ext_enumerate needs an invertible matrix");
    const int q = g.field()->order();
    std::vector<Matrix> out;
    Matrix h(g.field(), n + 1, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) h.set(i, j, g.at(i, j));
    }
    const int first_corner = 1;
    const int last_corner = variant == Variant::GLU ? 1 : q - 1;
    std::vector<int> column(static_cast<std::size_t>(n), 0);
    for (int corner = first_corner; corner <= last_corner; ++corner) {
        h.set(n, n, static_cast<Elem>(corner));
        std::fill(column.begin(), column.end(), 0);
        while (true) {
            for (int i = 0; i < n; ++i) h.set(i, n, static_cast<Elem>(column[i]));
            out.push_back(h);
            std::size_t pos = 0;
            while (pos < column.size() && ++column[pos] == q) column[pos++] = 0;
            if (pos == column.size()) break;
        }
    }
    return out;
}

// ---- polynomials -------------------------------------------------------------------

namespace {

// Remainder of a modulo monic b.
Poly poly_mod(const Field& f, Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const Elem c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

}  // namespace

std::vector<Poly> irreducible_polys(const FieldPtr& field, int d) {
    if (d < 1) throw std::invalid_argument("degree must be positive");
    const Field& f = *field;
    const int q = f.order();
    if (d == 1) {
        std::vector<Poly> out;
        for (int a = 1; a < q; ++a) out.push_back({f.neg(static_cast<Elem>(a)), 1});
        return out;
    }
    std::vector<Poly> divisors{{0, 1}};  // x itself
    for (int e = 1; 2 * e <= d; ++e) {
        for (auto& u : irreducible_polys(field, e)) divisors.push_back(std::move(u));
    }
    std::vector<Poly> out;
    long total = 1;
    for (int i = 0; i < d; ++i) total *= q;
    for (long code = 0; code < total; ++code) {
        Poly p(static_cast<std::size_t>(d) + 1, 0);
        long c = code;
        for (int i = 0; i < d; ++i) {
            p[i] = static_cast<Elem>(c % q);
            c /= q;
        }
        p[d] = 1;
        bool irreducible = true;
        for (const auto& u : divisors) {
            if (poly_mod(f, p, u).empty()) {
                irreducible = false;
                break;
            }
        }
        if (irreducible) out.push_back(std::move(p));
    }
    return out;
}

std::string poly_tag(const FieldPtr& field, const Poly& p) {
    const int d = static_cast<int>(p.size()) - 1;
    if (d < 1 || p.back() != 1) throw std::invalid_argument("poly_tag needs a monic polynomial of positive degree");
    if (d == 1) return "x-" + std::to_string(field->neg(p[0]));
    std::string s;
    for (int k = d; k >= 0; --k) {
        if (p[k] == 0) continue;
        if (!s.empty()) s += "+";
        const std::string coeff = p[k] == 1 && k > 0 ? "" : std::to_string(p[k]);
        s += coeff;
        if (k >= 1) s += "x";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
}

Matrix evaluate(const Poly& p, const Matrix& m) {
    const int n = m.rows();
    Matrix acc(m.field(), n, n);
    const Matrix id = Matrix::identity(m.field(), n);
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * m + id.scaled(p[k]);
    return acc;
}

std::vector<Family> families_enumerate(int n, const FieldPtr& field) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    struct Entry {
        std::string tag;
        int degree;
    };
    std::vector<Entry> polys;
    for (int d = 1; d <= n; ++d) {
        for (const auto& p : irreducible_polys(field, d)) polys.push_back({poly_tag(field, p), d});
    }
    std::vector<Family> out;
    std::vector<Block> chosen;
    auto recurse = [&](auto&& self, std::size_t i, int left) -> void {
        if (left == 0) {
            out.emplace_back(chosen);
            return;
        }
        if (i == polys.size()) return;
        self(self, i + 1, left);
        const int d = polys[i].degree;
        for (int s = 1; s * d <= left; ++s) {
            for (const auto& lambda : partitions_of(s)) {
                chosen.push_back({polys[i].tag, d, lambda});
                self(self, i + 1, left - s * d);
                chosen.pop_back();
            }
        }
    };
    recurse(recurse, 0, n);
    return out;
}

ClassLabel class_of(const Matrix& m) {
    const int n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("class_of needs a square matrix");
    if (!m.invertible()) throw std::invalid_argument("class_of needs an invertible matrix");
    std::vector<Block> blocks;
    int covered = 0;
    for (int d = 1; d <= n && covered < n; ++d) {
        for (const auto& u : irreducible_polys(m.field(), d)) {
            const Matrix um = evaluate(u, m);
            Matrix power = Matrix::identity(m.field(), n);
            std::vector<int> column_lengths;
            int previous = 0;
            while (true) {
                power = power * um;
                const int kernel = nullity(power);
                if (kernel == previous) break;
                column_lengths.push_back((kernel - previous) / d);
                previous = kernel;
            }
            if (previous == 0) continue;
            blocks.push_back({poly_tag(m.field(), u), d, Partition(column_lengths).transpose()});
            covered += previous;
        }
    }
    if (covered != n) throw std::logic_error("primary decomposition does not cover the space");
    return ClassLabel(std::move(blocks));
}

void for_each_matrix(const FieldPtr& field, int n, const std::function<void(const Matrix&)>& fn) {
    const int q = field->order();
    Matrix m(field, n, n);
    std::vector<int> entries(static_cast<std::size_t>(n * n), 0);
    while (true) {
        fn(m);
        std::size_t pos = 0;
        while (pos < entries.size() && ++entries[pos] == q) {
            entries[pos] = 0;
            m.set(static_cast<int>(pos) / n, static_cast<int>(pos) % n, 0);
            ++pos;
        }
        if (pos == entries.size()) break;
        m.set(static_cast<int>(pos) / n, static_cast<int>(pos) % n, static_cast<Elem>(entries[pos]));
    }
}

void for_each_unitriangular(const FieldPtr& field, int n, const std::function<void(const Matrix&)>& fn) {
    const int q = field->order();
    Matrix m = Matrix::identity(field, n);
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) cells.emplace_back(i, j);
    }
    std::vector<int> values(cells.size(), 0);
    while (true) {
        fn(m);
        std::size_t pos = 0;
        while (pos < values.size() && ++values[pos] == q) {
            values[pos] = 0;
            m.set(cells[pos].first, cells[pos].second, 0);
            ++pos;
        }
        if (pos == values.size()) break;
        m.set(cells[pos].first, cells[pos].second, static_cast<Elem>(values[pos]));
    }
}

namespace {

// out = a * b for raw n x n row-major matrices.
void raw_multiply(const Field& f, int n, const Elem* a, const Elem* b, Elem* out) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Elem acc = 0;
            for (int k = 0; k < n; ++k) acc = f.add(acc, f.mul(a[i * n + k], b[k * n + j]));
            out[i * n + j] = acc;
        }
    }
}

bool raw_nilpotent(const Field& f, int n, const std::vector<Elem>& nil, std::vector<Elem>& power, std::vector<Elem>& next) {
    power = nil;
    // Square until the exponent reaches n.
    for (int e = 1; e < n; e *= 2) {
        raw_multiply(f, n, power.data(), power.data(), next.data());
        power.swap(next);
    }
    return std::all_of(power.begin(), power.end(), [](Elem v) { return v == 0; });
}

}  // namespace

void for_each_unipotent(const FieldPtr& field, int n, const std::function<void(const Matrix&)>& fn) {
    if (n == 0) {
        fn(Matrix(field, 0, 0));
        return;
    }
    // g = 1 + N with N nilpotent. The trace of N vanishes, which fixes its last
    // diagonal entry; every other entry runs over the field.
    const Field& f = *field;
    const int q = f.order();
    const std::size_t cells = static_cast<std::size_t>(n * n);
    const std::size_t last = cells - 1;
    std::vector<Elem> nil(cells, 0), power(cells), next(cells);
    Matrix m(field, n, n);
    while (true) {
        Elem trace = 0;
        for (int i = 0; i + 1 < n; ++i) trace = f.add(trace, nil[static_cast<std::size_t>(i * n + i)]);
        nil[last] = f.neg(trace);
        if (raw_nilpotent(f, n, nil, power, next)) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) m.set(i, j, i == j ? f.add(nil[static_cast<std::size_t>(i * n + j)], 1) : nil[static_cast<std::size_t>(i * n + j)]);
            }
            fn(m);
        }
        std::size_t pos = 0;
        while (pos < last && ++nil[pos] == q) nil[pos++] = 0;
        if (pos == last) break;
    }
}

std::map<Partition, long> extension_type_counts(const Matrix& g) {
    if (g.rows() != g.cols()) throw std::invalid_argument("extension_type_counts needs a square matrix");
    const FieldPtr& field = g.field();
    const Field& f = *field;
    const int n = g.rows();
    const int q = f.order();
    const Matrix nil = g - Matrix::identity(field, n);

    // Reduced bases of the column spaces of N^k, k = 1..n+1, with pivots.
    struct Basis {
        std::vector<std::vector<Elem>> rows;
        std::vector<int> pivots;
    };
    std::vector<Basis> col_bases;
    std::vector<int> col_ranks;
    Matrix power = Matrix::identity(field, n);
    for (int k = 1; k <= n + 1; ++k) {
        power = power * nil;
        std::vector<std::vector<Elem>> rows(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) rows[j][i] = power.at(i, j);
        }
        const int r = row_reduce(f, rows, n);
        rows.resize(static_cast<std::size_t>(r));
        Basis b{std::move(rows), {}};
        for (const auto& row : b.rows) {
            int pivot = 0;
            while (row[static_cast<std::size_t>(pivot)] == 0) ++pivot;
            b.pivots.push_back(pivot);
        }
        col_bases.push_back(std::move(b));
        col_ranks.push_back(r);
    }
    if (col_ranks.back() != 0) throw std::invalid_argument("matrix is not unipotent");

    std::vector<Elem> nil_raw(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) nil_raw[static_cast<std::size_t>(i * n + j)] = nil.at(i, j);
    }
    std::vector<Elem> scratch(static_cast<std::size_t>(n));
    auto in_span = [&](const Basis& basis, const std::vector<Elem>& w) {
        std::copy(w.begin(), w.end(), scratch.begin());
        for (std::size_t b = 0; b < basis.rows.size(); ++b) {
            const Elem c = scratch[static_cast<std::size_t>(basis.pivots[b])];
            if (c == 0) continue;
            const auto& row = basis.rows[b];
            for (int j = 0; j < n; ++j) scratch[j] = f.sub(scratch[j], f.mul(c, row[j]));
        }
        return std::all_of(scratch.begin(), scratch.end(), [](Elem x) { return x == 0; });
    };

    // For h = [[g, v], [0, 1]], (h-1)^k = [[N^k, N^{k-1} v], [0, 0]], so its
    // rank exceeds rank(N^k) by one exactly when N^{k-1} v leaves col(N^k).
    std::vector<long> by_pattern(std::size_t{1} << (n + 1), 0);
    std::vector<Elem> v(static_cast<std::size_t>(n), 0), w(v.size()), next(v.size());
    while (true) {
        unsigned pattern = 0;
        w = v;
        for (int k = 1; k <= n + 1; ++k) {
            if (!in_span(col_bases[static_cast<std::size_t>(k - 1)], w)) pattern |= 1u << (k - 1);
            if (k == n + 1) break;
            for (int i = 0; i < n; ++i) {
                Elem acc = 0;
                for (int j = 0; j < n; ++j) acc = f.add(acc, f.mul(nil_raw[static_cast<std::size_t>(i * n + j)], w[j]));
                next[i] = acc;
            }
            w.swap(next);
        }
        ++by_pattern[pattern];
        std::size_t pos = 0;
        while (pos < v.size() && ++v[pos] == q) v[pos++] = 0;
        if (pos == v.size()) break;
    }

    std::map<Partition, long> out;
    for (unsigned pattern = 0; pattern < by_pattern.size(); ++pattern) {
        const long count = by_pattern[pattern];
        if (count == 0) continue;
        // Column lengths of the Jordan type are the rank drops of (h-1)^k.
        std::vector<int> columns;
        int previous = n + 1;
        for (int k = 1; k <= n + 1; ++k) {
            const int r = col_ranks[static_cast<std::size_t>(k - 1)] + ((pattern >> (k - 1)) & 1u);
            if (previous > r) columns.push_back(previous - r);
            previous = r;
        }
        out[Partition(columns).transpose()] += count;
    }
    return out;
}

Matrix companion_jordan(const FieldPtr& field, const Poly& p, const Partition& nu) {
    const int d = static_cast<int>(p.size()) - 1;
    if (d < 1 || p.back() != 1) throw std::invalid_argument("companion_jordan needs a monic polynomial");
    const int n = d * nu.size();
    Matrix m(field, n, n);
    int offset = 0;
    for (int part : nu.parts()) {
        for (int b = 0; b < part; ++b) {
            const int base = offset + b * d;
            for (int i = 0; i + 1 < d; ++i) m.set(base + i + 1, base + i, 1);
            for (int i = 0; i < d; ++i) m.set(base + i, base + d - 1, field->neg(p[i]));
            if (b + 1 < part) {
                for (int i = 0; i < d; ++i) m.set(base + i, base + d + i, 1);
            }
        }
        offset += part * d;
    }
    return m;
}

}  // namespace gltrace::fq
