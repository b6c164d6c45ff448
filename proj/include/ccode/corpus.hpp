#pragma once

// Embedded reference codes: every transition sequence published in the
// record tables and figures this library reproduces, keyed by a stable id.
// All entries verify at their labeled spread (the test suite enforces this).

#include <string>
#include <string_view>
#include <vector>

#include "ccode/code_model.hpp"

namespace ccode {

struct CorpusEntry {
    std::string id;
    CircuitCode code;
    std::string source;
};

// In a fixed order: fig1-(3,2,6), fig1-(4,3,8), lemma4-T6, lemma4-T7,
// lemma4-T8, appendixA-(6,2,24), appendixB-(22,7,234).
const std::vector<CorpusEntry>& corpus();

// Lookup by id; throws NoEntry for unknown ids.
const CorpusEntry& corpus_entry(std::string_view id);

}  // namespace ccode
