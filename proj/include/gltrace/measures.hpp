#pragma once

// Central measures on infinite unipotent upper-triangular matrices, viewed
// through the Jordan type of the growing top-left corner.

#include "gltrace/partition.hpp"
#include "gltrace/rational.hpp"
#include "gltrace/symfunc.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace gltrace {

/// One entry of a frequency sequence. A spread entry stands for the whole
/// geometric sequence (1-q^{-1}) value q^{1-j}, j >= 1, whose total is value.
struct Frequency {
    Rational value;
    bool spread = false;

    friend bool operator==(const Frequency&, const Frequency&) = default;
};

/// Parameter families with closed-form cylinder probabilities.
enum class MeasureKind { Haar, Delta, SingleRow, General };

/// Row frequencies r and column frequencies c of a central measure.
class MeasureParams {
public:
    /// Values must be non-negative and weakly decreasing within r and c, with
    /// total mass at most 1; q > 1.
    MeasureParams(std::vector<Frequency> r, std::vector<Frequency> c, Rational q);

    /// r = (1)^{(q)}, c empty: the Haar measure.
    static MeasureParams haar(const Rational& q);
    /// r empty, c = (1): the point mass on the identity.
    static MeasureParams delta(const Rational& q);
    /// r = (1), c empty: a single Jordan block.
    static MeasureParams single_row(const Rational& q);

    const std::vector<Frequency>& r() const { return r_; }
    const std::vector<Frequency>& c() const { return c_; }
    const Rational& q() const { return q_; }
    MeasureKind kind() const { return kind_; }

    /// Sp_{r, c^{(q)}, 1}: alpha slot r, beta slot the spread of c, gamma 1.
    Specialization specialization() const;

    /// The k largest entries of the row (or column) sequence, zero padded.
    std::vector<Rational> leading_rows(int k) const;
    std::vector<Rational> leading_columns(int k) const;

private:
    std::vector<Frequency> r_, c_;
    Rational q_;
    MeasureKind kind_ = MeasureKind::General;
};

/// Largest corner size for which general parameters are handled by the
/// Hall-Littlewood route inside the growth chain.
inline constexpr int kExactDegreeCap = 12;

/// N_{lambda,mu}: how many one-step extensions of a unipotent matrix of type
/// lambda have type mu. Zero unless mu is lambda plus one box.
Rational extension_count(const Partition& lambda, const Partition& mu, const Rational& q);

/// Probability of the cylinder of a single matrix of type lambda. Uses the
/// closed form for Haar, Delta and SingleRow parameters.
Rational cyl_prob(const MeasureParams& params, const Partition& lambda);

/// The same probability always computed from the Hall-Littlewood expansion.
Rational cyl_prob_hl(const MeasureParams& params, const Partition& lambda);

/// Cylinder probability of the trace measure with specialization sp
/// (gamma must be 1), through the modified Q~ function.
Rational cyl_prob_from_trace(const Specialization& sp, const Partition& lambda, const Rational& q);

/// The measure whose cylinders match cyl_prob_from_trace(sp, ., q): the alphas
/// spread into r and the betas as c. Requires a finite sp with gamma 1.
MeasureParams params_from_trace(const Specialization& sp, const Rational& q);

/// P(lambda -> mu) of the growth chain. Rejects a source of probability zero
/// and size mismatches.
Rational transition_prob(const MeasureParams& params, const Partition& lambda, const Partition& mu);

/// Every one-box successor of lambda in row order, with its probability.
std::vector<std::pair<Partition, Rational>> transitions(const MeasureParams& params, const Partition& lambda);

/// lambda^0 = empty, ..., lambda^{n_max}. General parameters are limited to
/// n_max <= kExactDegreeCap.
std::vector<Partition> sample_trajectory(const MeasureParams& params, int n_max, std::uint64_t seed);

/// Seed of the independent stream used for one trial of an experiment.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

struct LlnRow {
    std::string statistic;
    int index = 0;
    double empirical = 0;
    Rational predicted;
    double std_error = 0;
};

struct LlnReport {
    int n_max = 0;
    int trials = 0;
    std::vector<LlnRow> rows;
};

/// Mean of lambda_i / n and lambda'_i / n at n = n_max over independent
/// trajectories, for i = 1..depth. Trials run on up to `workers` threads
/// (0 picks the hardware count); the report does not depend on it.
LlnReport lln_experiment(const MeasureParams& params, int n_max, int trials, std::uint64_t seed, int depth = 3,
                         unsigned workers = 0);

/// CSV with columns statistic, i, empirical, predicted, stderr.
void write_csv(std::ostream& os, const LlnReport& report);

}  // namespace gltrace
