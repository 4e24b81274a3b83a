#include "gltrace/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <set>
#include <stdexcept>

namespace gltrace {

// ---- PowerSumElement -------------------------------------------------------

PowerSumElement::PowerSumElement(Terms terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

PowerSumElement PowerSumElement::p(const Partition& rho) {
    PowerSumElement f;
    f.terms_.emplace(rho, Rational(1));
    return f;
}

Rational PowerSumElement::coeff(const Partition& rho) const {
    const auto it = terms_.find(rho);
    return it == terms_.end() ? Rational() : it->second;
}

int PowerSumElement::homogeneous_degree() const {
    int deg = -1;
    for (const auto& [rho, c] : terms_) {
        const int d = rho.size();
        if (deg == -1) deg = d;
        else if (deg != d) return -1;
    }
    return deg;
}

void PowerSumElement::add_term(const Partition& rho, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(rho, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PowerSumElement& PowerSumElement::operator+=(const PowerSumElement& o) {
    for (const auto& [rho, c] : o.terms_) add_term(rho, c);
    return *this;
}

PowerSumElement& PowerSumElement::operator-=(const PowerSumElement& o) {
    for (const auto& [rho, c] : o.terms_) add_term(rho, -c);
    return *this;
}

PowerSumElement& PowerSumElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [rho, v] : terms_) v *= c;
    return *this;
}

PowerSumElement operator*(const PowerSumElement& a, const PowerSumElement& b) {
    PowerSumElement out;
    for (const auto& [ra, ca] : a.terms()) {
        for (const auto& [rb, cb] : b.terms()) out.add_term(ra.merged(rb), ca * cb);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const PowerSumElement& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [rho, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c << "*p" << rho;
    }
    return os;
}

// ---- Specialization --------------------------------------------------------

namespace {

bool weakly_decreasing_nonnegative(const std::vector<Rational>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].sign() < 0) return false;
        if (i > 0 && v[i] > v[i - 1]) return false;
    }
    return true;
}

Rational sum_of_powers(const std::vector<Rational>& v, int k) {
    Rational s;
    for (const auto& x : v) s += x.pow(k);
    return s;
}

}  // namespace

Specialization Specialization::finite(std::vector<Rational> alphas, std::vector<Rational> betas, Rational gamma) {
    if (!weakly_decreasing_nonnegative(alphas)) {
        throw std::invalid_argument("alphas must be weakly decreasing and non-negative");
    }
    if (!weakly_decreasing_nonnegative(betas)) {
        throw std::invalid_argument("betas must be weakly decreasing and non-negative");
    }
    Rational total = sum_of_powers(alphas, 1) + sum_of_powers(betas, 1);
    if (total > gamma) throw std::invalid_argument("sum of alphas and betas exceeds gamma");
    Specialization sp;
    sp.finite_ = true;
    sp.alphas_ = std::move(alphas);
    sp.betas_ = std::move(betas);
    sp.gamma_ = std::move(gamma);
    return sp;
}

Specialization Specialization::power_values(Rational p1, PowerFn higher) {
    if (!higher) throw std::invalid_argument("power_values needs a value function");
    Specialization sp;
    sp.gamma_ = std::move(p1);
    sp.higher_ = std::move(higher);
    return sp;
}

Rational Specialization::power_sum(int k) const {
    if (k < 1) throw std::invalid_argument("power sums are indexed from 1");
    if (k == 1) return gamma_;
    if (finite_) {
        Rational b = sum_of_powers(betas_, k);
        return sum_of_powers(alphas_, k) + (k % 2 == 0 ? -b : b);
    }
    return higher_(k);
}

Specialization Specialization::plethysm(int n) const {
    if (n < 1) throw std::invalid_argument("plethysm index must be positive");
    if (n == 1) return *this;
    Specialization base = *this;
    return power_values(base.power_sum(n), [base, n](int k) { return base.power_sum(n * k); });
}

Rational spread_power_sum(const std::vector<Rational>& seq, const Rational& q, int k) {
    const Rational one(1);
    const Rational factor = (one - q.inverse()).pow(k) / (one - q.pow(-k));
    return factor * sum_of_powers(seq, k);
}

Specialization geometric_spread(const std::vector<Rational>& seq, const Rational& q) {
    if (q <= Rational(1)) throw std::invalid_argument("geometric spread needs q > 1");
    if (!weakly_decreasing_nonnegative(seq)) {
        throw std::invalid_argument("spread sequence must be weakly decreasing and non-negative");
    }
    if (sum_of_powers(seq, 1) > Rational(1)) throw std::invalid_argument("spread sequence sums past 1");
    return Specialization::power_values(sum_of_powers(seq, 1),
                                        [seq, q](int k) { return spread_power_sum(seq, q, k); });
}

// ---- symmetric group characters -------------------------------------------

namespace {

// Beta-set representation: distinct non-negative integers, one per row of a
// partition padded to a fixed length.
std::vector<int> beta_set(const Partition& lambda, std::size_t len) {
    std::vector<int> beta(len);
    for (std::size_t i = 0; i < len; ++i) beta[i] = lambda[i] + static_cast<int>(len - 1 - i);
    return beta;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const std::size_t len = beta.size();
    std::vector<int> parts(len);
    for (std::size_t i = 0; i < len; ++i) parts[i] = beta[i] - static_cast<int>(len - 1 - i);
    return Partition(std::move(parts));
}

class CharacterMemo {
public:
    Integer value(const Partition& lambda, const std::vector<int>& rho, std::size_t from) {
        if (from == rho.size()) return lambda.empty() ? Integer(1) : Integer(0);
        auto key = std::make_pair(lambda, from);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const int k = rho[from];
        const std::size_t len = lambda.length();
        std::vector<int> beta = beta_set(lambda, len);
        std::set<int> present(beta.begin(), beta.end());
        Integer total = 0;
        for (std::size_t i = 0; i < len; ++i) {
            const int b = beta[i];
            if (b - k < 0 || present.count(b - k)) continue;
            int between = 0;
            for (int x : beta) {
                if (x > b - k && x < b) ++between;
            }
            std::vector<int> next = beta;
            next[i] = b - k;
            const Integer sub = value(from_beta(next), rho, from + 1);
            if (between % 2) total -= sub;
            else total += sub;
        }
        memo_.emplace(key, total);
        return total;
    }

private:
    std::map<std::pair<Partition, std::size_t>, Integer> memo_;
};

struct CharacterTable {
    std::vector<Partition> parts;
    std::map<Partition, std::size_t> index;
    std::vector<std::vector<Integer>> chi;  // chi[lambda][rho]
    std::vector<PowerSumElement> schur;
};

// Build-once, read-many table per degree. Builders must not re-enter the
// same cache.
template <class Table>
class DegreeCache {
public:
    template <class Builder>
    const Table& get(int n, Builder build) {
        std::lock_guard lock(mutex_);
        auto it = tables_.find(n);
        if (it == tables_.end()) it = tables_.emplace(n, std::make_unique<Table>(build(n))).first;
        return *it->second;
    }

private:
    std::mutex mutex_;
    std::map<int, std::unique_ptr<Table>> tables_;
};

CharacterTable build_character_table(int n) {
    CharacterTable t;
    t.parts = partitions_of(n);
    for (std::size_t i = 0; i < t.parts.size(); ++i) t.index.emplace(t.parts[i], i);
    t.chi.assign(t.parts.size(), std::vector<Integer>(t.parts.size()));
    for (std::size_t r = 0; r < t.parts.size(); ++r) {
        CharacterMemo memo;
        for (std::size_t l = 0; l < t.parts.size(); ++l) {
            t.chi[l][r] = memo.value(t.parts[l], t.parts[r].parts(), 0);
        }
    }
    for (std::size_t l = 0; l < t.parts.size(); ++l) {
        PowerSumElement s;
        for (std::size_t r = 0; r < t.parts.size(); ++r) {
            s.add_term(t.parts[r], Rational(t.chi[l][r], Integer(static_cast<long>(t.parts[r].z_factor()))));
        }
        t.schur.push_back(std::move(s));
    }
    return t;
}

const CharacterTable& character_table(int n) {
    static DegreeCache<CharacterTable> cache;
    if (n < 0) throw std::invalid_argument("negative degree");
    return cache.get(n, build_character_table);
}

}  // namespace

Integer sn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw std::invalid_argument("character needs equal sizes");
    const auto& t = character_table(lambda.size());
    return t.chi[t.index.at(lambda)][t.index.at(rho)];
}

PowerSumElement schur_in_p(const Partition& lambda) {
    const auto& t = character_table(lambda.size());
    return t.schur[t.index.at(lambda)];
}

// ---- tableaux, charge, Kostka-Foulkes --------------------------------------

int charge(const std::vector<int>& word) {
    std::vector<bool> used(word.size(), false);
    std::size_t remaining = word.size();
    int total = 0;
    while (remaining > 0) {
        // Rightmost unused 1 starts the standard subword.
        std::size_t pos = word.size();
        for (std::size_t i = word.size(); i-- > 0;) {
            if (!used[i] && word[i] == 1) {
                pos = i;
                break;
            }
        }
        if (pos == word.size()) throw std::invalid_argument("charge needs partition content");
        used[pos] = true;
        --remaining;
        int index = 0;
        for (int letter = 2;; ++letter) {
            // Scan leftwards cyclically from pos for an unused `letter`.
            std::size_t found = word.size();
            bool wrapped = false;
            for (std::size_t step = 1; step <= word.size(); ++step) {
                std::size_t i;
                if (step <= pos) {
                    i = pos - step;
                } else {
                    i = word.size() - (step - pos);
                    wrapped = true;
                }
                if (!used[i] && word[i] == letter) {
                    found = i;
                    break;
                }
            }
            if (found == word.size()) break;
            if (wrapped) ++index;
            total += index;
            used[found] = true;
            --remaining;
            pos = found;
        }
    }
    return total;
}

namespace {

struct KostkaFoulkesTable {
    std::vector<Partition> parts;
    std::map<Partition, std::size_t> index;
    std::vector<std::vector<TPolynomial>> k;     // k[shape][content]
    std::vector<std::vector<TPolynomial>> kinv;
};

// Enumerates SSYT of a given content by adding one horizontal strip per letter.
class TableauEnumerator {
public:
    TableauEnumerator(const Partition& content, std::function<void(const std::vector<std::vector<int>>&)> visit)
        : content_(content.parts()), visit_(std::move(visit)) {}

    void run() { place_letter(0); }

private:
    void place_letter(std::size_t letter_index) {
        if (letter_index == content_.size()) {
            visit_(rows_);
            return;
        }
        std::vector<int> old;
        for (const auto& r : rows_) old.push_back(static_cast<int>(r.size()));
        fill_strip(letter_index, 0, content_[letter_index], old);
    }

    // Distribute `left` copies of the letter over rows >= row, keeping the
    // added cells a horizontal strip over the shape `old`.
    void fill_strip(std::size_t letter_index, std::size_t row, int left, const std::vector<int>& old) {
        if (left == 0) {
            place_letter(letter_index + 1);
            return;
        }
        if (row > old.size()) return;
        const int old_len = row < old.size() ? old[row] : 0;
        const int cap = row == 0 ? left : std::min(left, old[row - 1] - old_len);
        const int letter = static_cast<int>(letter_index) + 1;
        for (int a = cap; a >= 0; --a) {
            if (a > 0) {
                if (row == rows_.size()) rows_.emplace_back();
                for (int i = 0; i < a; ++i) rows_[row].push_back(letter);
            }
            fill_strip(letter_index, row + 1, left - a, old);
            if (a > 0) {
                for (int i = 0; i < a; ++i) rows_[row].pop_back();
                if (rows_[row].empty()) rows_.pop_back();
            }
        }
    }

    std::vector<int> content_;
    std::function<void(const std::vector<std::vector<int>>&)> visit_;
    std::vector<std::vector<int>> rows_;
};

std::vector<int> reading_word(const std::vector<std::vector<int>>& rows) {
    std::vector<int> w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

KostkaFoulkesTable build_kostka_foulkes(int n) {
    KostkaFoulkesTable t;
    t.parts = partitions_of(n);
    const std::size_t m = t.parts.size();
    for (std::size_t i = 0; i < m; ++i) t.index.emplace(t.parts[i], i);
    std::vector<std::vector<std::vector<long>>> counts(m, std::vector<std::vector<long>>(m));
    for (std::size_t c = 0; c < m; ++c) {
        TableauEnumerator(t.parts[c], [&](const std::vector<std::vector<int>>& rows) {
            std::vector<int> shape;
            for (const auto& r : rows) shape.push_back(static_cast<int>(r.size()));
            const std::size_t s = t.index.at(Partition(shape));
            const auto ch = static_cast<std::size_t>(charge(reading_word(rows)));
            auto& bucket = counts[s][c];
            if (bucket.size() <= ch) bucket.resize(ch + 1, 0);
            ++bucket[ch];
        }).run();
    }
    t.k.assign(m, std::vector<TPolynomial>(m));
    for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t c = 0; c < m; ++c) {
            std::vector<Integer> coeffs(counts[s][c].begin(), counts[s][c].end());
            t.k[s][c] = TPolynomial(std::move(coeffs));
        }
    }
    // K[s][c] != 0 only when content <= shape in dominance, and partitions
    // are listed in decreasing lex order, so K is upper unitriangular.
    for (std::size_t s = 0; s < m; ++s) {
        if (t.k[s][s] != TPolynomial(Integer(1))) throw std::logic_error("Kostka-Foulkes diagonal is not 1");
        for (std::size_t c = 0; c < s; ++c) {
            if (!t.k[s][c].is_zero()) throw std::logic_error("Kostka-Foulkes matrix is not upper triangular");
        }
    }
    // Back substitution for the inverse of an upper unitriangular matrix.
    t.kinv.assign(m, std::vector<TPolynomial>(m));
    for (std::size_t j = 0; j < m; ++j) {
        t.kinv[j][j] = TPolynomial(Integer(1));
        for (std::size_t i = j; i-- > 0;) {
            TPolynomial acc;
            for (std::size_t l = i + 1; l <= j; ++l) {
                if (!t.k[i][l].is_zero() && !t.kinv[l][j].is_zero()) acc += t.k[i][l] * t.kinv[l][j];
            }
            t.kinv[i][j] = -acc;
        }
    }
    return t;
}

const KostkaFoulkesTable& kostka_foulkes_table(int n) {
    static DegreeCache<KostkaFoulkesTable> cache;
    if (n < 0) throw std::invalid_argument("negative degree");
    return cache.get(n, build_kostka_foulkes);
}

}  // namespace

const std::vector<std::vector<TPolynomial>>& kostka_foulkes_matrix(int n) { return kostka_foulkes_table(n).k; }

const std::vector<std::vector<TPolynomial>>& inverse_kostka_foulkes_matrix(int n) {
    return kostka_foulkes_table(n).kinv;
}

TPolynomial kostka_foulkes(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) throw std::invalid_argument("Kostka-Foulkes needs equal sizes");
    const auto& t = kostka_foulkes_table(mu.size());
    return t.k[t.index.at(mu)][t.index.at(lambda)];
}

Integer kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("Kostka number needs equal sizes");
    const TPolynomial k = kostka_foulkes(lambda, mu);
    Integer total = 0;
    for (const auto& c : k.coeffs()) total += c;
    return total;
}

// ---- Hall-Littlewood ---------------------------------------------------------

TPolynomial hl_b(const Partition& lambda) {
    TPolynomial b(Integer(1));
    const auto m = lambda.multiplicities();
    for (std::size_t i = 1; i < m.size(); ++i) {
        for (int j = 1; j <= m[i]; ++j) {
            b *= TPolynomial(Integer(1)) - TPolynomial::monomial(static_cast<std::size_t>(j), Integer(1));
        }
    }
    return b;
}

std::map<Partition, Rational> hl_p_in_schur(const Partition& lambda, const Rational& t) {
    const auto& table = kostka_foulkes_table(lambda.size());
    const std::size_t row = table.index.at(lambda);
    std::map<Partition, Rational> out;
    for (std::size_t j = 0; j < table.parts.size(); ++j) {
        const Rational c = table.kinv[row][j].evaluate(t);
        if (!c.is_zero()) out.emplace(table.parts[j], c);
    }
    return out;
}

namespace {

using HlKey = std::pair<int, Rational>;

class HlCache {
public:
    const std::vector<PowerSumElement>& get(int n, const Rational& t) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = tables_.find({n, t}); it != tables_.end()) return *it->second;
        }
        auto built = std::make_unique<std::vector<PowerSumElement>>(build(n, t));
        std::lock_guard lock(mutex_);
        auto [it, inserted] = tables_.try_emplace({n, t}, std::move(built));
        return *it->second;
    }

private:
    static std::vector<PowerSumElement> build(int n, const Rational& t) {
        const auto& kf = kostka_foulkes_table(n);
        const auto& ch = character_table(n);
        std::vector<PowerSumElement> out;
        out.reserve(kf.parts.size());
        for (std::size_t i = 0; i < kf.parts.size(); ++i) {
            PowerSumElement q;
            for (std::size_t j = 0; j < kf.parts.size(); ++j) {
                if (kf.kinv[i][j].is_zero()) continue;
                q += ch.schur[ch.index.at(kf.parts[j])] * kf.kinv[i][j].evaluate(t);
            }
            q *= hl_b(kf.parts[i]).evaluate(t);
            out.push_back(std::move(q));
        }
        return out;
    }

    std::mutex mutex_;
    std::map<HlKey, std::unique_ptr<std::vector<PowerSumElement>>> tables_;
};

}  // namespace

PowerSumElement hl_q_in_p(const Partition& lambda, const Rational& t) {
    static HlCache cache;
    const auto& table = cache.get(lambda.size(), t);
    const auto& kf = kostka_foulkes_table(lambda.size());
    return table[kf.index.at(lambda)];
}

std::map<Partition, RationalPolynomial> hl_q_in_p_symbolic(const Partition& lambda) {
    const int n = lambda.size();
    const auto& kf = kostka_foulkes_table(n);
    const auto& ch = character_table(n);
    const std::size_t i = kf.index.at(lambda);
    const RationalPolynomial b = to_rational(hl_b(lambda));
    std::map<Partition, RationalPolynomial> out;
    for (std::size_t j = 0; j < kf.parts.size(); ++j) {
        if (kf.kinv[i][j].is_zero()) continue;
        const RationalPolynomial pj = to_rational(kf.kinv[i][j]) * b;
        const std::size_t sj = ch.index.at(kf.parts[j]);
        for (std::size_t r = 0; r < ch.parts.size(); ++r) {
            if (ch.chi[sj][r] == 0) continue;
            const Rational c(ch.chi[sj][r], Integer(static_cast<long>(ch.parts[r].z_factor())));
            out[ch.parts[r]] += pj * RationalPolynomial(c);
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

PowerSumElement apply_mq(const PowerSumElement& f, const Rational& t) {
    PowerSumElement out;
    const Rational one(1);
    for (const auto& [rho, c] : f.terms()) {
        Rational denom(1);
        for (int part : rho.parts()) denom *= one - t.pow(part);
        if (denom.is_zero()) throw std::domain_error("M_q undefined: 1 - t^k vanishes");
        out.add_term(rho, c / denom);
    }
    return out;
}

PowerSumElement modified_hl_q(const Partition& lambda, const Rational& t) {
    // Checked up front: Q_lambda itself vanishes at t = 1.
    if (t == Rational(1) || (t == Rational(-1) && lambda.size() >= 2)) {
        throw std::domain_error("M_q undefined: 1 - t^k vanishes");
    }
    return apply_mq(hl_q_in_p(lambda, t), t);
}

PowerSumElement plethysm_pl(const PowerSumElement& f, int n) {
    if (n < 1) throw std::invalid_argument("plethysm index must be positive");
    PowerSumElement out;
    for (const auto& [rho, c] : f.terms()) out.add_term(rho.scaled(n), c);
    return out;
}

Rational spec_power_sum(const Specialization& sp, int k) { return sp.power_sum(k); }

Rational specialize(const Specialization& sp, const PowerSumElement& f) {
    std::vector<Rational> powers;
    Rational total;
    for (const auto& [rho, c] : f.terms()) {
        Rational term = c;
        for (int part : rho.parts()) {
            const auto k = static_cast<std::size_t>(part);
            while (powers.size() < k) powers.push_back(sp.power_sum(static_cast<int>(powers.size()) + 1));
            term *= powers[k - 1];
            if (term.is_zero()) break;
        }
        total += term;
    }
    return total;
}

std::map<Partition, Rational> schur_expand(const PowerSumElement& f) {
    std::map<Partition, Rational> out;
    if (f.is_zero()) return out;
    const int n = f.homogeneous_degree();
    if (n < 0) throw std::invalid_argument("schur_expand needs a homogeneous element");
    const auto& ch = character_table(n);
    for (std::size_t l = 0; l < ch.parts.size(); ++l) {
        Rational d;
        for (const auto& [rho, c] : f.terms()) d += c * Rational(ch.chi[l][ch.index.at(rho)]);
        if (!d.is_zero()) out.emplace(ch.parts[l], d);
    }
    return out;
}

PowerSumElement monomial_in_p(const Partition& mu) {
    const int n = mu.size();
    const auto& kf = kostka_foulkes_table(n);
    const std::size_t row = kf.index.at(mu);
    PowerSumElement out;
    for (std::size_t j = 0; j < kf.parts.size(); ++j) {
        const Rational c = kf.kinv[row][j].evaluate(Rational(1));
        if (!c.is_zero()) out += schur_in_p(kf.parts[j]) * c;
    }
    return out;
}

}  // namespace gltrace
