#include "gltrace/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

namespace gltrace {

namespace {

void require_q(const Rational& q) {
    if (q <= Rational(1)) throw std::invalid_argument("q must exceed 1");
}

void validate_sequence(const std::vector<Frequency>& seq, const char* name) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].value.sign() < 0) throw std::invalid_argument(std::string(name) + " frequencies must be non-negative");
        if (i > 0 && seq[i].value > seq[i - 1].value) {
            throw std::invalid_argument(std::string(name) + " frequencies must be weakly decreasing");
        }
    }
}

bool is_single(const std::vector<Frequency>& seq, bool spread) {
    return seq.size() == 1 && seq[0].value == Rational(1) && seq[0].spread == spread;
}

// Sum of k-th powers of a frequency sequence whose entries are spread
// `extra` more times than recorded.
Rational sequence_power_sum(const std::vector<Frequency>& seq, const Rational& q, int k, int extra) {
    const Rational qi = q.inverse();
    const Rational factor = (Rational(1) - qi).pow(k) / (Rational(1) - qi.pow(k));
    Rational total;
    for (const auto& f : seq) total += factor.pow((f.spread ? 1 : 0) + extra) * f.value.pow(k);
    return total;
}

std::vector<Rational> leading(const std::vector<Frequency>& seq, const Rational& q, int k) {
    std::vector<Rational> all;
    const Rational lead = Rational(1) - q.inverse();
    for (const auto& f : seq) {
        if (!f.spread) {
            all.push_back(f.value);
            continue;
        }
        Rational v = lead * f.value;
        for (int j = 0; j < k; ++j, v /= q) all.push_back(v);
    }
    std::sort(all.begin(), all.end(), std::greater<>());
    all.resize(static_cast<std::size_t>(std::max(k, 0)));
    return all;
}

// q^{-n(n-1)/2}
Rational haar_cylinder(const Rational& q, int n) { return q.pow(-static_cast<long>(n) * (n - 1) / 2); }

// Column heights lambda'_j and lambda'_{j-1} at the cell (row, col), 1-based,
// before the box is added. The left neighbour of column 1 is infinitely tall.
struct ColumnPair {
    int here;
    int left;  // -1 encodes infinity
};

ColumnPair columns_at(const Partition& lambda, int row, int col) {
    const int here = row - 1;
    if (col == 1) return {here, -1};
    int left = 0;
    while (static_cast<std::size_t>(left) < lambda.length() && lambda[static_cast<std::size_t>(left)] >= col - 1) ++left;
    return {here, left};
}

// q^{-lambda'_j} (1 - q^{lambda'_j - lambda'_{j-1}}): N_{lambda,mu} / q^n.
Rational scaled_extension(const ColumnPair& cp, const Rational& q) {
    Rational v = q.pow(-cp.here);
    if (cp.left >= 0) v *= Rational(1) - q.pow(cp.here - cp.left);
    return v;
}

// The (row, col) of the single box mu / lambda, or (0, 0) when mu is not
// lambda plus one box.
std::pair<int, int> added_box(const Partition& lambda, const Partition& mu) {
    for (const auto& [row, col] : lambda.addable_corners()) {
        if (lambda.add_box(static_cast<std::size_t>(row - 1)) == mu) return {row, col};
    }
    return {0, 0};
}

void require_successor_size(const Partition& lambda, const Partition& mu) {
    if (mu.size() != lambda.size() + 1) throw std::invalid_argument("successor must have exactly one more box");
}

// Closed-form one-step probabilities for the special kinds, indexed like
// addable_corners.
std::vector<Rational> closed_form_step(const MeasureParams& params, const Partition& lambda) {
    const auto corners = lambda.addable_corners();
    std::vector<Rational> out(corners.size());
    const int n = lambda.size();
    switch (params.kind()) {
        case MeasureKind::Haar:
            for (std::size_t i = 0; i < corners.size(); ++i) {
                out[i] = scaled_extension(columns_at(lambda, corners[i].first, corners[i].second), params.q());
            }
            break;
        case MeasureKind::Delta:
            if (lambda != Partition::column(n)) throw std::invalid_argument("source class has probability zero");
            for (std::size_t i = 0; i < corners.size(); ++i) out[i] = Rational(corners[i].second == 1 ? 1 : 0);
            break;
        case MeasureKind::SingleRow:
            if (lambda != Partition::row(n)) throw std::invalid_argument("source class has probability zero");
            for (std::size_t i = 0; i < corners.size(); ++i) out[i] = Rational(corners[i].first == 1 ? 1 : 0);
            break;
        case MeasureKind::General:
            throw std::logic_error("general parameters have no closed form");
    }
    return out;
}

// Cylinder probabilities for general parameters, memoized per class.
class CylinderCache {
public:
    explicit CylinderCache(const MeasureParams& params) : params_(params) {}

    const Rational& get(const Partition& lambda) {
        auto it = values_.find(lambda);
        if (it == values_.end()) it = values_.emplace(lambda, cyl_prob_hl(params_, lambda)).first;
        return it->second;
    }

private:
    const MeasureParams& params_;
    std::map<Partition, Rational> values_;
};

std::vector<Rational> general_step(const MeasureParams& params, const Partition& lambda, CylinderCache& cache) {
    const Rational base = cache.get(lambda);
    if (base.sign() <= 0) throw std::invalid_argument("source class has probability zero");
    std::vector<Rational> out;
    for (const auto& [row, col] : lambda.addable_corners()) {
        const Partition mu = lambda.add_box(static_cast<std::size_t>(row - 1));
        const Rational n_count = extension_count(lambda, mu, params.q());
        out.push_back(n_count.is_zero() ? Rational(0) : n_count * cache.get(mu) / base);
    }
    return out;
}

std::vector<Rational> step_probabilities(const MeasureParams& params, const Partition& lambda, CylinderCache& cache) {
    return params.kind() == MeasureKind::General ? general_step(params, lambda, cache)
                                                 : closed_form_step(params, lambda);
}

std::vector<Partition> run_chain(const MeasureParams& params, int n_max, std::uint64_t seed, CylinderCache& cache) {
    if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
    if (params.kind() == MeasureKind::General && n_max > kExactDegreeCap) {
        throw std::invalid_argument("general parameters are limited to n_max <= " + std::to_string(kExactDegreeCap));
    }
    std::mt19937_64 engine(seed);
    std::vector<Partition> path{Partition()};
    path.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int k = 0; k < n_max; ++k) {
        const Partition& lambda = path.back();
        const auto corners = lambda.addable_corners();
        const auto probs = step_probabilities(params, lambda, cache);
        const std::uint64_t u = engine();
        Rational cumulative;
        std::size_t pick = corners.size();
        for (std::size_t i = 0; i < corners.size(); ++i) {
            cumulative += probs[i];
            if (!probs[i].is_zero() && dyadic64_less_than(u, cumulative)) {
                pick = i;
                break;
            }
        }
        if (pick == corners.size()) throw std::logic_error("transition probabilities do not sum to 1");
        path.push_back(lambda.add_box(static_cast<std::size_t>(corners[pick].first - 1)));
    }
    return path;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

MeasureParams::MeasureParams(std::vector<Frequency> r, std::vector<Frequency> c, Rational q)
    : r_(std::move(r)), c_(std::move(c)), q_(std::move(q)) {
    require_q(q_);
    validate_sequence(r_, "row");
    validate_sequence(c_, "column");
    Rational mass;
    for (const auto& f : r_) mass += f.value;
    for (const auto& f : c_) mass += f.value;
    if (mass > Rational(1)) throw std::invalid_argument("frequencies sum past 1");
    if (is_single(r_, true) && c_.empty()) kind_ = MeasureKind::Haar;
    else if (r_.empty() && is_single(c_, false)) kind_ = MeasureKind::Delta;
    else if (is_single(r_, false) && c_.empty()) kind_ = MeasureKind::SingleRow;
}

MeasureParams MeasureParams::haar(const Rational& q) { return MeasureParams({{Rational(1), true}}, {}, q); }
MeasureParams MeasureParams::delta(const Rational& q) { return MeasureParams({}, {{Rational(1), false}}, q); }
MeasureParams MeasureParams::single_row(const Rational& q) { return MeasureParams({{Rational(1), false}}, {}, q); }

Specialization MeasureParams::specialization() const {
    return Specialization::power_values(Rational(1), [r = r_, c = c_, q = q_](int k) {
        const Rational b = sequence_power_sum(c, q, k, 1);
        return sequence_power_sum(r, q, k, 0) + (k % 2 == 0 ? -b : b);
    });
}

std::vector<Rational> MeasureParams::leading_rows(int k) const { return leading(r_, q_, k); }
std::vector<Rational> MeasureParams::leading_columns(int k) const { return leading(c_, q_, k); }

Rational extension_count(const Partition& lambda, const Partition& mu, const Rational& q) {
    require_q(q);
    require_successor_size(lambda, mu);
    const auto [row, col] = added_box(lambda, mu);
    if (row == 0) return Rational(0);
    return q.pow(lambda.size()) * scaled_extension(columns_at(lambda, row, col), q);
}

Rational cyl_prob_hl(const MeasureParams& params, const Partition& lambda) {
    const Rational& q = params.q();
    const int n = lambda.size();
    const Rational qi = q.inverse();
    const Rational value = specialize(params.specialization(), hl_q_in_p(lambda, qi));
    return haar_cylinder(q, n) / (Rational(1) - qi).pow(n) * q.pow(lambda.n_stat()) * value;
}

Rational cyl_prob(const MeasureParams& params, const Partition& lambda) {
    const Rational& q = params.q();
    const int n = lambda.size();
    switch (params.kind()) {
        case MeasureKind::Haar:
            return haar_cylinder(q, n);
        case MeasureKind::Delta:
            return Rational(lambda == Partition::column(n) ? 1 : 0);
        case MeasureKind::SingleRow:
            if (n == 0) return Rational(1);
            if (lambda != Partition::row(n)) return Rational(0);
            return q.pow(-static_cast<long>(n - 1) * (n - 2) / 2) / (q - Rational(1)).pow(n - 1);
        case MeasureKind::General:
            break;
    }
    return cyl_prob_hl(params, lambda);
}

Rational cyl_prob_from_trace(const Specialization& sp, const Partition& lambda, const Rational& q) {
    require_q(q);
    if (sp.power_sum(1) != Rational(1)) throw std::invalid_argument("specialization must have gamma = 1");
    const int n = lambda.size();
    return haar_cylinder(q, n) * q.pow(lambda.n_stat()) * specialize(sp, modified_hl_q(lambda, q.inverse()));
}

MeasureParams params_from_trace(const Specialization& sp, const Rational& q) {
    if (!sp.is_finite()) throw std::invalid_argument("parameter map needs explicit alpha and beta");
    if (sp.gamma() != Rational(1)) throw std::invalid_argument("specialization must have gamma = 1");
    std::vector<Frequency> r, c;
    for (const auto& a : sp.alphas()) r.push_back({a, true});
    for (const auto& b : sp.betas()) c.push_back({b, false});
    return MeasureParams(std::move(r), std::move(c), q);
}

Rational transition_prob(const MeasureParams& params, const Partition& lambda, const Partition& mu) {
    require_successor_size(lambda, mu);
    const auto [row, col] = added_box(lambda, mu);
    if (params.kind() != MeasureKind::General) {
        const auto corners = lambda.addable_corners();
        const auto probs = closed_form_step(params, lambda);
        for (std::size_t i = 0; i < corners.size(); ++i) {
            if (corners[i] == std::make_pair(row, col)) return probs[i];
        }
        return Rational(0);
    }
    const Rational base = cyl_prob_hl(params, lambda);
    if (base.sign() <= 0) throw std::invalid_argument("source class has probability zero");
    const Rational n_count = extension_count(lambda, mu, params.q());
    return n_count.is_zero() ? Rational(0) : n_count * cyl_prob_hl(params, mu) / base;
}

std::vector<std::pair<Partition, Rational>> transitions(const MeasureParams& params, const Partition& lambda) {
    CylinderCache cache(params);
    const auto probs = step_probabilities(params, lambda, cache);
    const auto corners = lambda.addable_corners();
    std::vector<std::pair<Partition, Rational>> out;
    for (std::size_t i = 0; i < corners.size(); ++i) {
        out.emplace_back(lambda.add_box(static_cast<std::size_t>(corners[i].first - 1)), probs[i]);
    }
    return out;
}

std::vector<Partition> sample_trajectory(const MeasureParams& params, int n_max, std::uint64_t seed) {
    CylinderCache cache(params);
    return run_chain(params, n_max, seed, cache);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return splitmix64(splitmix64(seed) ^ trial); }

LlnReport lln_experiment(const MeasureParams& params, int n_max, int trials, std::uint64_t seed, int depth,
                         unsigned workers) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (n_max < 1) throw std::invalid_argument("n_max must be positive");
    if (depth < 1) throw std::invalid_argument("depth must be positive");
    if (params.kind() == MeasureKind::General && n_max > kExactDegreeCap) {
        throw std::invalid_argument("general parameters are limited to n_max <= " + std::to_string(kExactDegreeCap));
    }
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(trials));

    std::vector<Partition> finals(static_cast<std::size_t>(trials));
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned w) {
        try {
            CylinderCache cache(params);
            for (auto t = static_cast<std::size_t>(w); t < finals.size(); t += workers) {
                finals[t] = run_chain(params, n_max, trial_seed(seed, t), cache).back();
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    LlnReport report{n_max, trials, {}};
    const auto predicted_rows = params.leading_rows(depth);
    const auto predicted_cols = params.leading_columns(depth);
    auto add_rows = [&](const std::string& prefix, bool columns, const std::vector<Rational>& predicted) {
        std::vector<Partition> views;
        if (columns) {
            for (const auto& p : finals) views.push_back(p.transpose());
        }
        const std::vector<Partition>& source = columns ? views : finals;
        for (int i = 1; i <= depth; ++i) {
            double sum = 0, sum_sq = 0;
            for (const auto& p : source) {
                const double x = static_cast<double>(p[static_cast<std::size_t>(i - 1)]) / n_max;
                sum += x;
                sum_sq += x * x;
            }
            const double mean = sum / trials;
            double se = 0;
            if (trials > 1) {
                const double var = std::max(0.0, (sum_sq - trials * mean * mean) / (trials - 1));
                se = std::sqrt(var / trials);
            }
            report.rows.push_back({prefix + std::to_string(i) + "/n", i, mean, predicted[static_cast<std::size_t>(i - 1)], se});
        }
    };
    add_rows("lambda_", false, predicted_rows);
    add_rows("lambda'_", true, predicted_cols);
    return report;
}

void write_csv(std::ostream& os, const LlnReport& report) {
    os << "statistic,i,empirical,predicted,stderr\n";
    for (const auto& row : report.rows) {
        os << row.statistic << ',' << row.index << ',' << format_double(row.empirical) << ','
           << row.predicted.to_string() << ',' << format_double(row.std_error) << '\n';
    }
}

}  // namespace gltrace
