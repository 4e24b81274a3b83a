#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gltrace {

/// A Young diagram stored as its weakly decreasing positive row lengths.
/// Trailing zeros are never stored, so structural equality is diagram
/// equality and partitions can be used directly as map keys.
class Partition {
public:
    Partition() = default;
    /// Accepts any weakly decreasing non-negative sequence; zeros are dropped.
    /// Throws std::invalid_argument if the sequence increases.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses "3,1,1"; the empty string is the empty diagram.
    static Partition parse(std::string_view text);
    /// The single-column diagram (1^n).
    static Partition column(int n);
    static Partition row(int n);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    /// Row i (0-based); zero past the last row.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    int size() const;
    Partition transpose() const;
    /// n(lambda) = sum_i (i-1) lambda_i, rows counted from 1.
    long n_stat() const;
    /// One hook length per box, row by row.
    std::vector<int> hook_lengths() const;
    /// z = prod_i i^{m_i} m_i!, the power-sum normalizer.
    long z_factor() const;
    /// Multiplicity of each part value; index i holds m_i (index 0 unused).
    std::vector<int> multiplicities() const;

    /// 1-based (row, column) cells where a box can be added, sorted by row.
    std::vector<std::pair<int, int>> addable_corners() const;
    /// 1-based (row, column) cells whose box can be removed, sorted by row.
    std::vector<std::pair<int, int>> removable_corners() const;
    /// Adds a box at the end of the given 0-based row. Caller ensures validity.
    Partition add_box(std::size_t row) const;
    Partition remove_box(std::size_t row) const;

    /// Each part multiplied by k.
    Partition scaled(int k) const;
    /// Multiset union of parts, re-sorted.
    Partition merged(const Partition& other) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }
    friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
        return os << '(' << p.to_string() << ')';
    }

private:
    std::vector<int> parts_;
};

/// lambda <= mu in dominance order. Sizes must agree.
bool dominance_leq(const Partition& lambda, const Partition& mu);

/// All partitions of n in decreasing lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

/// Number of partitions of n.
std::size_t partition_count(int n);

}  // namespace gltrace
