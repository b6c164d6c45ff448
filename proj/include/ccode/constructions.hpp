#pragma once

// Transition-sequence rewrites. construct7 lifts a spread-k code to spread
// k+1 by ruler-pattern insertion of fresh coordinates; klee_padding grows the
// dimension by one while padding the length up to a multiple of 2(k+1);
// naive_insertion builds the three phase-shifted single-coordinate insertion
// candidates (which in general do NOT gain spread -- they exist so the
// failure can be reproduced).
//
// Both spread-preserving rewrites re-verify their input and their output with
// the exhaustive spread scan; they never return an unverified code.

#include <cstddef>
#include <utility>
#include <vector>

#include "ccode/code_model.hpp"

namespace ccode {

// One block of at most k+1 consecutive transition elements.
struct Segment {
    int half = 0;   // 1 or 2
    int index = 0;  // 1..q within the half
    std::vector<int> elements;
};

// Splits the sequence into two halves and each half into q = ceil(N/(2(k+1)))
// segments of length k+1 (the last segment of a half may be shorter).
// Requires an even length.
std::vector<Segment> split_segments(const TransitionSequence& seq, int k);

// Per-half insertion subscripts for q segments: segment j < q receives
// subscript l where 2^(l-1) is the largest power of two dividing j, and the
// final segment receives r = ceil(log2 q) + 1. For q = 1 the single segment
// receives subscript r = 1.
std::vector<int> insertion_pattern(int q);

struct CodeParams {
    int n = 0;
    int k = 0;
    std::size_t length = 0;
};

struct ConstructionReport {
    CircuitCode output;
    int q = 0;  // segments per half
    int r = 0;  // number of new coordinates
    // Insertions applied to each half: (segment index, inserted element).
    std::vector<std::pair<int, int>> insertions;
    CodeParams input_params;
    CodeParams output_params;
};

struct Construct7Params {
    int n_out = 0;
    int k_out = 0;
    int q = 0;
    int r = 0;
    std::size_t length_out = 0;
};

// Parameter arithmetic of the spread-raising rewrite, usable without the
// actual sequence: q = ceil(N/(2(k+1))), r = ceil(log2 q) + 1, N' = N + 2q,
// n' = n + r, k' = k + 1. Requires even N >= 2(k+1).
Construct7Params construct7_params(int n, int k, std::size_t length);

// The spread-raising rewrite itself. Verifies the input at spread k
// (InputNotVerified) and the output at spread k+1 (PostVerificationFailed).
ConstructionReport construct7(const CircuitCode& code);

struct KleePaddingParams {
    int n_out = 0;
    int k_out = 0;
    int q = 0;
    int p = 0;  // padded segments per half
    std::size_t length_out = 0;
};

// Parameter arithmetic of the padding rewrite: p = (k+1)q - N/2 insertions
// per half, N' = 2(k+1)q (divisible by k+1). Requires even N > 2(k+1)^2.
KleePaddingParams klee_padding_params(int n, int k, std::size_t length);

// Inserts coordinate n+1 at the end of the first p segments of each half,
// preserving spread k in dimension n+1. With p = 0 the output is the input
// reinterpreted in dimension n+1.
ConstructionReport klee_padding(const CircuitCode& code);

// Appendix-style naive candidate: coordinate n+1 inserted after every three
// old elements, phase-shifted by offset in {0, 1, 2}. No spread guarantee.
// Requires a length divisible by 3.
TransitionSequence naive_insertion(const CircuitCode& code, int offset);

// First m coordinates of x.
Vertex project_vertex(const Vertex& x, int m);

// Removes every element above old_dimension; inverse of both rewrites.
TransitionSequence strip_above(const TransitionSequence& seq, int old_dimension);

}  // namespace ccode
