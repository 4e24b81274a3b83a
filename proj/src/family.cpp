#include "gltrace/family.hpp"

#include <set>
#include <stdexcept>

namespace gltrace {

Family::Family(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    std::set<std::string> seen;
    for (const auto& b : blocks_) {
        if (b.degree < 1) throw std::invalid_argument("block degree must be positive");
        if (b.diagram.empty()) throw std::invalid_argument("block diagram must be nonempty");
        if (b.tag.empty()) throw std::invalid_argument("block tag must be nonempty");
        if (b.tag == kUnitTag && b.degree != 1) throw std::invalid_argument("the x-1 block must have degree 1");
        if (!seen.insert(b.tag).second) throw std::invalid_argument("duplicate polynomial tag: " + b.tag);
    }
}

int Family::size() const {
    int n = 0;
    for (const auto& b : blocks_) n += b.degree * b.diagram.size();
    return n;
}

bool Family::has_unit() const {
    for (const auto& b : blocks_) {
        if (b.tag == kUnitTag) return true;
    }
    return false;
}

Partition Family::unit_diagram() const {
    for (const auto& b : blocks_) {
        if (b.tag == kUnitTag) return b.diagram;
    }
    return {};
}

int Family::nonunit_linear_count() const {
    int k = 0;
    for (const auto& b : blocks_) k += b.degree == 1 && b.tag != kUnitTag;
    return k;
}

Family Family::with_diagram(const std::string& tag, int degree, const Partition& diagram) const {
    std::vector<Block> out;
    bool found = false;
    for (const auto& b : blocks_) {
        if (b.tag != tag) {
            out.push_back(b);
            continue;
        }
        found = true;
        if (!diagram.empty()) out.push_back({tag, b.degree, diagram});
    }
    if (!found && !diagram.empty()) out.push_back({tag, degree, diagram});
    return Family(std::move(out));
}

std::string Family::to_string() const {
    if (blocks_.empty()) return "()";
    std::string s;
    for (const auto& b : blocks_) {
        if (!s.empty()) s += ' ';
        s += b.tag;
        if (b.degree > 1) s += '[' + std::to_string(b.degree) + ']';
        s += '(' + b.diagram.to_string() + ')';
    }
    return s;
}

}  // namespace gltrace
