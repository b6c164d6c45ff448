#include "ccode/corpus.hpp"

#include "ccode/errors.hpp"

namespace ccode {

namespace {

// (22,7) record code of length 234, transcribed row-wise from its published
// table (30 elements per row, last row short).
const std::vector<int> kAppendixB{
    6, 12, 4, 3, 16, 8, 9, 18, 17, 13, 4, 12, 15, 16, 5, 19, 14, 13, 9, 1, 2, 10, 6, 18, 14, 5, 8, 9, 15, 7,
    6, 20, 2, 11, 12, 3, 16, 7, 15, 18, 1, 2, 8, 17, 16, 12, 4, 19, 5, 13, 9, 17, 8, 11, 12, 18, 1, 10, 9, 5,
    14, 15, 6, 21, 2, 10, 1, 4, 5, 11, 3, 18, 2, 15, 7, 8, 16, 12, 3, 19, 11, 14, 15, 4, 13, 12, 8, 18, 17, 1,
    9, 5, 13, 4, 7, 20, 8, 14, 6, 5, 1, 10, 11, 18, 2, 15, 6, 14, 17, 1, 7, 19, 16, 15, 11, 3, 22, 4, 12, 8,
    16, 7, 10, 11, 18, 17, 9, 8, 4, 13, 14, 5, 19, 1, 9, 17, 3, 4, 10, 2, 18, 1, 14, 6, 7, 15, 11, 2, 20, 10,
    13, 14, 3, 12, 11, 7, 18, 16, 17, 8, 4, 12, 3, 6, 19, 7, 13, 5, 4, 17, 9, 10, 18, 1, 14, 5, 13, 16, 17, 6,
    21, 15, 14, 10, 2, 3, 11, 7, 18, 15, 6, 9, 10, 16, 8, 7, 19, 3, 12, 13, 4, 17, 8, 16, 18, 2, 3, 9, 1, 17,
    13, 5, 20, 6, 14, 10, 1, 9, 12, 13, 18, 2, 11, 10, 6, 15, 16, 7, 19, 3, 11, 2, 5, 22};

std::vector<CorpusEntry> build() {
    std::vector<CorpusEntry> out;
    out.push_back({"fig1-(3,2,6)", CircuitCode(3, 2, {2, 1, 3, 2, 1, 3}),
                   "figure 1, left cycle"});
    out.push_back({"fig1-(4,3,8)", CircuitCode(4, 3, {2, 1, 3, 4, 2, 1, 3, 4}),
                   "figure 1, right cycle (spread-raised hexagon)"});
    out.push_back({"lemma4-T6",
                   CircuitCode(6, 3, {1, 5, 2, 6, 3, 5, 4, 6, 1, 5, 2, 6, 3, 5, 4, 6}),
                   "spread-3 ladder base, dimension 6"});
    out.push_back({"lemma4-T7",
                   CircuitCode(7, 3, {5, 2, 6, 1, 7, 2, 5, 3, 6, 2, 7, 4,
                                      5, 2, 6, 1, 7, 2, 5, 3, 6, 2, 7, 4}),
                   "spread-3 ladder base, dimension 7"});
    out.push_back({"lemma4-T8",
                   CircuitCode(8, 3, {5, 2, 6, 8, 1, 7, 2, 8, 5, 3, 6, 8, 2, 7, 4, 8,
                                      5, 2, 6, 8, 1, 7, 2, 8, 5, 3, 6, 8, 2, 7, 4, 8}),
                   "spread-3 ladder base, dimension 8"});
    out.push_back({"appendixA-(6,2,24)",
                   CircuitCode(6, 2, {1, 2, 6, 4, 5, 6, 1, 3, 5, 4, 6, 5,
                                      1, 2, 6, 4, 5, 6, 1, 3, 5, 4, 6, 5}),
                   "appendix A base code; its naive extensions fail spread 3"});
    out.push_back({"appendixB-(22,7,234)", CircuitCode(22, 7, TransitionSequence(kAppendixB)),
                   "appendix B record table"});
    return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build();
    return entries;
}

const CorpusEntry& corpus_entry(std::string_view id) {
    for (const CorpusEntry& e : corpus())
        if (e.id == id) return e;
    throw NoEntry("no corpus entry with id '" + std::string(id) + "'");
}

}  // namespace ccode
