#include "ccode/code_model.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace ccode {

int TransitionSequence::max_element() const {
    if (elems_.empty()) return 0;
    return *std::max_element(elems_.begin(), elems_.end());
}

void TransitionSequence::validate(int n) const {
    if (n < 1 || n > kMaxDimension)
        throw DimensionLimit("dimension must be in [1, " + std::to_string(kMaxDimension) +
                             "], got " + std::to_string(n));
    if (elems_.size() < 4 || elems_.size() % 2 != 0)
        throw MalformedSequence("transition sequence length must be even and >= 4, got " +
                                std::to_string(elems_.size()));
    std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
    for (int e : elems_) {
        if (e < 1 || e > n)
            throw ElementOutOfRange("transition element " + std::to_string(e) +
                                    " outside [1, " + std::to_string(n) + "]");
        ++counts[static_cast<std::size_t>(e)];
    }
    for (int c = 1; c <= n; ++c)
        if (counts[static_cast<std::size_t>(c)] % 2 != 0)
            throw NotClosed("coordinate " + std::to_string(c) +
                            " flips an odd number of times; cycle cannot close");
}

Vertex::Vertex(std::uint64_t bits, int width) : bits_(bits), width_(width) {
    if (width < 0 || width > kMaxDimension)
        throw DimensionLimit("vertex width must be in [0, 64], got " + std::to_string(width));
    if (width < 64) bits_ &= (std::uint64_t{1} << width) - 1;
}

Vertex Vertex::parse(std::string_view text) {
    if (text.empty() || text.size() > kMaxDimension)
        throw WidthMismatch("vertex string must have 1..64 characters");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            bits |= std::uint64_t{1} << i;
        else if (text[i] != '0')
            throw MalformedSequence("vertex string must consist of 0s and 1s");
    }
    return Vertex(bits, static_cast<int>(text.size()));
}

bool Vertex::coordinate(int i) const {
    if (i < 1 || i > width_)
        throw IndexOutOfRange("coordinate " + std::to_string(i) + " outside vertex of width " +
                              std::to_string(width_));
    return (bits_ >> (i - 1)) & 1u;
}

Vertex Vertex::with_flipped(int i) const {
    if (i < 1 || i > width_)
        throw IndexOutOfRange("cannot flip coordinate " + std::to_string(i) +
                              " of vertex of width " + std::to_string(width_));
    return Vertex(bits_ ^ (std::uint64_t{1} << (i - 1)), width_);
}

std::string Vertex::str() const {
    std::string s(static_cast<std::size_t>(width_), '0');
    for (int i = 0; i < width_; ++i)
        if ((bits_ >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

namespace {

// Raw walk from all-zeros; returns the N visited vertices and the end state
// (zero iff the sequence closes).
std::pair<std::vector<std::uint64_t>, std::uint64_t> walk(const TransitionSequence& seq, int n) {
    if (n < 1 || n > kMaxDimension)
        throw DimensionLimit("dimension must be in [1, 64], got " + std::to_string(n));
    std::vector<std::uint64_t> out;
    out.reserve(seq.size());
    std::uint64_t v = 0;
    for (int e : seq) {
        if (e < 1 || e > n)
            throw ElementOutOfRange("transition element " + std::to_string(e) +
                                    " outside [1, " + std::to_string(n) + "]");
        out.push_back(v);
        v ^= std::uint64_t{1} << (e - 1);
    }
    return {std::move(out), v};
}

std::size_t cyc_dist(std::size_t i, std::size_t j, std::size_t n_vertices) {
    std::size_t d = i < j ? j - i : i - j;
    return std::min(d, n_vertices - d);
}

// Distinctness scan in (i, j) order; nullopt when all vertices differ.
std::optional<SpreadWitness> first_repeat(const std::vector<std::uint64_t>& vs) {
    std::unordered_map<std::uint64_t, std::size_t> seen;
    seen.reserve(vs.size() * 2);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        auto [it, inserted] = seen.try_emplace(vs[i], i);
        if (!inserted)
            return SpreadWitness{it->second, i, cyc_dist(it->second, i, vs.size()), 0};
    }
    return std::nullopt;
}

SpreadVerdict spread_scan(const std::vector<std::uint64_t>& vs, int k) {
    if (auto rep = first_repeat(vs)) return {false, rep};
    const std::size_t n_vertices = vs.size();
    const bool pairwise_form = n_vertices >= 2 * static_cast<std::size_t>(k);
    for (std::size_t i = 0; i < n_vertices; ++i) {
        for (std::size_t j = i + 1; j < n_vertices; ++j) {
            const std::size_t dc = cyc_dist(i, j, n_vertices);
            const int di = std::popcount(vs[i] ^ vs[j]);
            const bool violated = pairwise_form
                                      ? dc >= static_cast<std::size_t>(k) && di < k
                                      : di < k && dc != static_cast<std::size_t>(di);
            if (violated) return {false, SpreadWitness{i, j, dc, di}};
        }
    }
    return {};
}

std::vector<std::uint64_t> raw_bits(const CircuitCode& code) {
    std::vector<std::uint64_t> vs;
    vs.reserve(code.length());
    for (const Vertex& v : code.vertices()) vs.push_back(v.bits());
    return vs;
}

}  // namespace

std::vector<Vertex> vertices_of(const TransitionSequence& seq, int n) {
    auto [vs, end] = walk(seq, n);
    if (end != 0)
        throw NotClosed("sequence does not return to the all-zeros vertex (end state " +
                        Vertex(end, n).str() + ")");
    std::vector<Vertex> out;
    out.reserve(vs.size());
    for (std::uint64_t b : vs) out.emplace_back(b, n);
    return out;
}

SpreadVerdict is_simple_cycle(const TransitionSequence& seq, int n) {
    auto [vs, end] = walk(seq, n);
    if (auto rep = first_repeat(vs)) return {false, rep};
    if (end != 0)
        throw NotClosed("sequence does not return to the all-zeros vertex (end state " +
                        Vertex(end, n).str() + ")");
    return {};
}

CircuitCode::CircuitCode(int n, int k, TransitionSequence seq)
    : n_(n), k_(k), seq_(std::move(seq)) {
    if (k < 1) throw MalformedSequence("claimed spread must be >= 1, got " + std::to_string(k));
    seq_.validate(n);
    vertices_ = vertices_of(seq_, n);
}

int hypercube_distance(const Vertex& a, const Vertex& b) {
    if (a.width() != b.width())
        throw WidthMismatch("vertex widths differ: " + std::to_string(a.width()) + " vs " +
                            std::to_string(b.width()));
    return std::popcount(a.bits() ^ b.bits());
}

std::size_t cycle_distance(const CircuitCode& code, std::size_t i, std::size_t j) {
    const std::size_t n_vertices = code.length();
    if (i >= n_vertices || j >= n_vertices)
        throw IndexOutOfRange("vertex index outside cycle of length " + std::to_string(n_vertices));
    return cyc_dist(i, j, n_vertices);
}

std::vector<int> arc_elements(const CircuitCode& code, std::size_t i, std::size_t j) {
    const std::size_t n_vertices = code.length();
    if (i >= n_vertices || j >= n_vertices)
        throw IndexOutOfRange("vertex index outside cycle of length " + std::to_string(n_vertices));
    std::vector<int> out;
    for (std::size_t p = i; p != j; p = (p + 1) % n_vertices) out.push_back(code.seq()[p]);
    return out;
}

SpreadVerdict has_spread(const CircuitCode& code, int k) {
    if (k < 1) throw MalformedSequence("spread must be >= 1, got " + std::to_string(k));
    return spread_scan(raw_bits(code), k);
}

int max_spread(const CircuitCode& code) {
    const auto vs = raw_bits(code);
    if (auto rep = first_repeat(vs))
        throw MalformedSequence("max_spread requires a simple cycle; vertex repeated at indices " +
                                std::to_string(rep->i) + " and " + std::to_string(rep->j));
    int k = 1;
    while (2 * static_cast<std::size_t>(k + 1) <= vs.size() && spread_scan(vs, k + 1).holds) ++k;
    return k;
}

SpreadVerdict check_consecutive_distinct(const CircuitCode& code, int k) {
    const std::size_t n_elems = code.length();
    const std::size_t window = static_cast<std::size_t>(k) + 1;
    if (n_elems < 2 * window)
        throw LengthTooShort("window check needs length >= 2(k+1) = " + std::to_string(2 * window) +
                             ", got " + std::to_string(n_elems));
    const auto& seq = code.seq();
    for (std::size_t s = 0; s < n_elems; ++s) {
        for (std::size_t a = 0; a < window; ++a) {
            for (std::size_t b = a + 1; b < window; ++b) {
                const std::size_t pa = (s + a) % n_elems;
                const std::size_t pb = (s + b) % n_elems;
                if (seq[pa] == seq[pb])
                    return {false, SpreadWitness{pa, pb, b - a, 0}};
            }
        }
    }
    return {};
}

SpreadVerdict chord_free(const CircuitCode& code) {
    const auto vs = raw_bits(code);
    if (auto rep = first_repeat(vs)) return {false, rep};
    const std::size_t n_vertices = vs.size();
    for (std::size_t i = 0; i < n_vertices; ++i) {
        for (std::size_t j = i + 1; j < n_vertices; ++j) {
            const std::size_t dc = cyc_dist(i, j, n_vertices);
            if (dc >= 2 && std::popcount(vs[i] ^ vs[j]) == 1)
                return {false, SpreadWitness{i, j, dc, 1}};
        }
    }
    return {};
}

}  // namespace ccode
