#pragma once

#include "gltrace/partition.hpp"

#include <string>
#include <vector>

namespace gltrace {

/// Tag of the distinguished linear polynomial x - 1.
inline const std::string kUnitTag = "x-1";

/// One primary component: an irreducible polynomial (opaque tag) of the
/// given degree carrying a nonempty diagram.
struct Block {
    std::string tag;
    int degree = 1;
    Partition diagram;

    friend bool operator==(const Block&, const Block&) = default;
};

/// A finitely supported map from irreducible polynomials to diagrams. Used
/// both for irreducible representations and for conjugacy classes of
/// GL(n,q). Block order is preserved as given.
class Family {
public:
    Family() = default;
    /// Validates: distinct tags, positive degrees, nonempty diagrams, the
    /// unit tag only with degree 1.
    explicit Family(std::vector<Block> blocks);

    const std::vector<Block>& blocks() const { return blocks_; }
    bool empty() const { return blocks_.empty(); }
    /// Sum of degree * |diagram|.
    int size() const;

    bool has_unit() const;
    /// Diagram at the unit tag (empty if absent).
    Partition unit_diagram() const;
    /// Distinct degree-1 tags other than the unit.
    int nonunit_linear_count() const;

    /// The family with the block at `tag` replaced by `diagram`; an empty
    /// diagram removes the block, a missing tag appends a new one.
    Family with_diagram(const std::string& tag, int degree, const Partition& diagram) const;

    /// Compact text such as "x-1(2,1) c[2](1)"; "()" when empty.
    std::string to_string() const;

    friend bool operator==(const Family&, const Family&) = default;

private:
    std::vector<Block> blocks_;
};

/// A conjugacy class of GL(n,q) at the formula level: Jordan data per
/// irreducible factor of the characteristic polynomial.
using ClassLabel = Family;

}  // namespace gltrace
