#pragma once

// Text and JSON encodings of the library's inputs.

#include "gltrace/family.hpp"
#include "gltrace/measures.hpp"
#include "gltrace/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gltrace {

/// Parses a JSON array of blocks such as
///   [{"tag":"x-1","d":1,"lambda":"2,1"}]
/// where "d" defaults to 1 and "lambda" may also be an array of integers.
Family parse_family_json(std::string_view text);

/// JSON array form of a family, the inverse of parse_family_json.
std::string family_to_json(const Family& f);

/// Comma-separated rationals; the empty string gives an empty list.
std::vector<Rational> parse_rational_list(std::string_view text);

/// Comma-separated frequencies; a trailing "^q" marks a geometric spread,
/// so "1/2^q,1/4" is the spread of 1/2 followed by the plain entry 1/4.
std::vector<Frequency> parse_frequency_list(std::string_view text);

}  // namespace gltrace
