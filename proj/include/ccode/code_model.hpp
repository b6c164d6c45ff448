#pragma once

// Core types for circuit codes in the hypercube graph I(n): transition
// sequences, vertices as packed bit vectors, derived vertex cycles, and the
// brute-force distance/spread checks that the rest of the library trusts.
//
// Conventions: coordinates are 1-based (coordinate 1 is the leftmost position
// of a rendered vertex string); vertex cycles start at the all-zeros vertex;
// vertex indices in the C++ API are 0-based.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccode/errors.hpp"

namespace ccode {

// Dimensions are capped so a vertex fits in one machine word.
inline constexpr int kMaxDimension = 64;

// Cyclic list of coordinate flips (1-based coordinate indices).
class TransitionSequence {
public:
    TransitionSequence() = default;
    explicit TransitionSequence(std::vector<int> elements) : elems_(std::move(elements)) {}
    TransitionSequence(std::initializer_list<int> elements) : elems_(elements) {}

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    int operator[](std::size_t i) const { return elems_[i]; }
    const std::vector<int>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    int max_element() const;

    // Checks the sequence invariants for a code of dimension n: every element
    // in [1, n], even length >= 4, and an even flip count per coordinate.
    void validate(int n) const;

    friend bool operator==(const TransitionSequence&, const TransitionSequence&) = default;

private:
    std::vector<int> elems_;
};

// Fixed-width binary vector, i.e. a vertex of I(width).
class Vertex {
public:
    Vertex() = default;
    Vertex(std::uint64_t bits, int width);
    static Vertex zeros(int width) { return Vertex(0, width); }
    static Vertex parse(std::string_view text);

    int width() const { return width_; }
    std::uint64_t bits() const { return bits_; }
    bool coordinate(int i) const;      // 1-based
    Vertex with_flipped(int i) const;  // 1-based
    std::string str() const;

    friend bool operator==(const Vertex&, const Vertex&) = default;

private:
    std::uint64_t bits_ = 0;
    int width_ = 0;
};

struct SpreadWitness {
    // For vertex-pair checks these are 0-based vertex indices; for the
    // consecutive-distinct window check they are 0-based sequence positions.
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t cycle_distance = 0;
    int hypercube_distance = 0;
};

struct SpreadVerdict {
    bool holds = true;
    std::optional<SpreadWitness> witness;
    explicit operator bool() const { return holds; }
};

// A circuit code candidate: dimension, claimed spread, transition sequence
// and the derived vertex cycle. Construction checks closure and coordinate
// range; it does not verify simplicity or the claimed spread.
class CircuitCode {
public:
    CircuitCode(int n, int k, TransitionSequence seq);

    int dimension() const { return n_; }
    int claimed_spread() const { return k_; }
    std::size_t length() const { return seq_.size(); }
    const TransitionSequence& seq() const { return seq_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }

private:
    int n_ = 0;
    int k_ = 0;
    TransitionSequence seq_;
    std::vector<Vertex> vertices_;
};

// Walks the sequence from the all-zeros vertex. Throws ElementOutOfRange if
// an element exceeds n and NotClosed if the final flip does not return to
// all-zeros.
std::vector<Vertex> vertices_of(const TransitionSequence& seq, int n);

// Pairwise-distinct check over the walked vertices. A revisited vertex is
// reported as a witness (hypercube distance 0) before closure is enforced,
// so a non-closing sequence that also revisits still yields a witness.
SpreadVerdict is_simple_cycle(const TransitionSequence& seq, int n);

// Hamming distance between two vertices of equal width.
int hypercube_distance(const Vertex& a, const Vertex& b);

// Shorter of the two arc lengths between vertex indices i and j.
std::size_t cycle_distance(const CircuitCode& code, std::size_t i, std::size_t j);

// Elements applied when walking forward from vertex i to vertex j. The two
// arcs (i -> j and j -> i) partition the whole sequence.
std::vector<int> arc_elements(const CircuitCode& code, std::size_t i, std::size_t j);

// Spread verification by exhaustive scan over all vertex pairs. For
// N >= 2k the scan checks the equivalent characterization
// "cycle distance >= k implies hypercube distance >= k"; for shorter cycles
// it checks the defining condition "hypercube distance < k implies cycle
// distance equals hypercube distance" directly. The witness, if any, is the
// first violating pair in (i, j) scan order. Repeated vertices fail the scan
// immediately (a simple cycle is a precondition of spread).
SpreadVerdict has_spread(const CircuitCode& code, int k);

// Largest k <= N/2 for which has_spread holds. The cap keeps the scan in the
// regime where the pairwise characterization is meaningful; below length 2k
// the defining condition is vacuous and every short cycle would pass.
int max_spread(const CircuitCode& code);

// Window check: every k+1 cyclically consecutive elements of the transition
// sequence are pairwise distinct (a consequence of spread k for codes of
// length >= 2(k+1)). Throws LengthTooShort below that length.
SpreadVerdict check_consecutive_distinct(const CircuitCode& code, int k);

// No two cycle vertices are hypercube-adjacent unless they are cycle
// neighbours, i.e. the cycle is an induced subgraph. Spread >= 2 implies
// this; Gray codes (spread 1) generally violate it.
SpreadVerdict chord_free(const CircuitCode& code);

}  // namespace ccode
