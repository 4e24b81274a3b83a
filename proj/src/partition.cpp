#include "gltrace/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace gltrace {

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    parts_ = std::move(parts);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
    if (text.empty()) return {};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!piece.empty() && is_space(piece.front())) piece.remove_prefix(1);
        while (!piece.empty() && is_space(piece.back())) piece.remove_suffix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty()) {
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition Partition::column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Partition Partition::row(int n) { return n == 0 ? Partition() : Partition({n}); }

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
    if (parts_.empty()) return {};
    std::vector<int> t(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(t));
}

long Partition::n_stat() const {
    long s = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<long>(i) * parts_[i];
    return s;
}

std::vector<int> Partition::hook_lengths() const {
    const Partition t = transpose();
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(size()));
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        for (int j = 0; j < parts_[i]; ++j) {
            const int arm = parts_[i] - j - 1;
            const int leg = t[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks.push_back(arm + leg + 1);
        }
    }
    return hooks;
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(parts_.empty() ? 1 : static_cast<std::size_t>(parts_.front()) + 1, 0);
    for (int p : parts_) ++m[static_cast<std::size_t>(p)];
    return m;
}

long Partition::z_factor() const {
    long z = 1;
    const auto m = multiplicities();
    for (std::size_t i = 1; i < m.size(); ++i) {
        for (int k = 1; k <= m[i]; ++k) {
            if (__builtin_mul_overflow(z, static_cast<long>(i) * k, &z)) throw std::overflow_error("z factor overflows");
        }
    }
    return z;
}

std::vector<std::pair<int, int>> Partition::addable_corners() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i <= parts_.size(); ++i) {
        const int here = (*this)[i];
        if (i == 0 || (*this)[i - 1] > here) {
            out.emplace_back(static_cast<int>(i) + 1, here + 1);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Partition::removable_corners() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if ((*this)[i + 1] < parts_[i]) out.emplace_back(static_cast<int>(i) + 1, parts_[i]);
    }
    return out;
}

Partition Partition::add_box(std::size_t row) const {
    std::vector<int> p = parts_;
    if (row == p.size()) {
        p.push_back(1);
    } else {
        ++p.at(row);
    }
    return Partition(std::move(p));
}

Partition Partition::remove_box(std::size_t row) const {
    std::vector<int> p = parts_;
    --p.at(row);
    return Partition(std::move(p));
}

Partition Partition::scaled(int k) const {
    std::vector<int> p = parts_;
    for (int& v : p) v *= k;
    return Partition(std::move(p));
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> p = parts_;
    p.insert(p.end(), other.parts_.begin(), other.parts_.end());
    std::sort(p.begin(), p.end(), std::greater<>());
    return Partition(std::move(p));
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("dominance order needs equal sizes");
    long a = 0, b = 0;
    const std::size_t len = std::max(lambda.length(), mu.length());
    for (std::size_t i = 0; i < len; ++i) {
        a += lambda[i];
        b += mu[i];
        if (a > b) return false;
    }
    return true;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        generate(remaining - p, p, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("negative partition size");
    std::vector<Partition> out;
    std::vector<int> current;
    generate(n, n, current, out);
    return out;
}

std::size_t partition_count(int n) {
    std::vector<std::size_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
    }
    return p[static_cast<std::size_t>(n)];
}

}  // namespace gltrace
