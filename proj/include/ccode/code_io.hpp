#pragma once

// Plain-text code files and bound-table exports.
//
// Code file format: '#' starts a comment line; the first data line is the
// header "n k N"; the body is N whitespace-separated transition elements
// (1-based coordinates). Files round-trip through parse/serialize up to
// whitespace normalization.

#include <string>
#include <string_view>

#include "ccode/bounds.hpp"
#include "ccode/code_model.hpp"

namespace ccode {

CircuitCode parse_code_file(std::string_view text);

std::string serialize_code_file(const CircuitCode& code);

// Matrix CSV: rows are dimensions, columns are spreads, empty cell when no
// bound is known.
std::string export_table_csv(const BoundTable& table);

// One entry per line with its value, exactness and derivation chain.
std::string export_table_text(const BoundTable& table);

}  // namespace ccode
