#include "gltrace/io.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace gltrace {

namespace {

using nlohmann::json;

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

Partition diagram_from_json(const json& j) {
    if (j.is_string()) return Partition::parse(j.get<std::string>());
    if (j.is_array()) {
        std::vector<int> parts;
        for (const auto& v : j) {
            if (!v.is_number_integer()) throw std::invalid_argument("diagram entries must be integers");
            parts.push_back(v.get<int>());
        }
        return Partition(std::move(parts));
    }
    throw std::invalid_argument("\"lambda\" must be a string or an array");
}

}  // namespace

Family parse_family_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed family JSON: ") + e.what());
    }
    if (!doc.is_array()) throw std::invalid_argument("family JSON must be an array of blocks");
    std::vector<Block> blocks;
    for (const auto& item : doc) {
        if (!item.is_object()) throw std::invalid_argument("each block must be an object");
        if (!item.contains("tag") || !item["tag"].is_string()) throw std::invalid_argument("block needs a string \"tag\"");
        if (!item.contains("lambda")) throw std::invalid_argument("block needs \"lambda\"");
        int degree = 1;
        if (item.contains("d")) {
            if (!item["d"].is_number_integer()) throw std::invalid_argument("\"d\" must be an integer");
            degree = item["d"].get<int>();
        }
        blocks.push_back({item["tag"].get<std::string>(), degree, diagram_from_json(item["lambda"])});
    }
    return Family(std::move(blocks));
}

std::string family_to_json(const Family& f) {
    json out = json::array();
    for (const auto& b : f.blocks()) out.push_back({{"tag", b.tag}, {"d", b.degree}, {"lambda", b.diagram.to_string()}});
    return out.dump();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    if (trim(text).empty()) return out;
    for (auto token : split(text, ',')) out.push_back(Rational::parse(trim(token)));
    return out;
}

std::vector<Frequency> parse_frequency_list(std::string_view text) {
    std::vector<Frequency> out;
    if (trim(text).empty()) return out;
    for (auto token : split(text, ',')) {
        token = trim(token);
        bool spread = false;
        if (token.size() >= 2 && token.substr(token.size() - 2) == "^q") {
            spread = true;
            token.remove_suffix(2);
        }
        out.push_back({Rational::parse(trim(token)), spread});
    }
    return out;
}

}  // namespace gltrace
