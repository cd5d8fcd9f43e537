#pragma once

// Text encodings of chain records: JSON lines and CSV.

#include <string>
#include <string_view>

#include "polychi/enumerate.hpp"

namespace polychi {

// {"n":..,"turns":"..","cells":[[x,y],..],"length_vector":[..],"in_omega":..,"canonical_key":".."}
std::string to_json_line(const ChainRecord& r);

// Parses the fields as written, without re-deriving them. Throws DomainError
// on malformed input and InvalidChain on a bad turn string.
ChainRecord parse_json_line(std::string_view line);

// True when the derived fields agree with a fresh realization of the turns.
bool is_consistent(const ChainRecord& r);

// n,turns,length_vector,in_omega,canonical_key
std::string csv_header();
std::string to_csv_row(const ChainRecord& r);

// 12 significant digits, '.' decimal separator regardless of locale.
std::string format_value(double v);

}  // namespace polychi
