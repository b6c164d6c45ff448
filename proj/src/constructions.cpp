#include "ccode/constructions.hpp"

#include <bit>
#include <cassert>
#include <string>

namespace ccode {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

int ceil_log2(std::size_t q) {
    assert(q >= 1);
    return static_cast<int>(std::bit_width(q - 1));
}

std::string witness_text(const SpreadWitness& w) {
    return "pair (" + std::to_string(w.i + 1) + ", " + std::to_string(w.j + 1) +
           "), cycle distance " + std::to_string(w.cycle_distance) + ", hypercube distance " +
           std::to_string(w.hypercube_distance);
}

void require_verified(const CircuitCode& code, int k, const char* what) {
    SpreadVerdict v = has_spread(code, k);
    if (!v.holds)
        throw InputNotVerified(std::string(what) + ": input fails spread " + std::to_string(k) +
                               " at " + witness_text(*v.witness));
}

CircuitCode checked_output(int n_out, int k_out, TransitionSequence seq, const char* what) {
    CircuitCode out(n_out, k_out, std::move(seq));
    SpreadVerdict v = has_spread(out, k_out);
    if (!v.holds)
        throw PostVerificationFailed(std::string(what) + ": output fails spread " +
                                     std::to_string(k_out) + " at " + witness_text(*v.witness));
    return out;
}

}  // namespace

std::vector<Segment> split_segments(const TransitionSequence& seq, int k) {
    const std::size_t n_elems = seq.size();
    if (n_elems % 2 != 0) throw OddLength("cannot halve a sequence of odd length");
    if (k < 1) throw MalformedSequence("spread must be >= 1");
    const std::size_t half_len = n_elems / 2;
    const std::size_t seg_len = static_cast<std::size_t>(k) + 1;
    const std::size_t q = ceil_div(half_len, seg_len);
    std::vector<Segment> out;
    for (int half = 1; half <= 2; ++half) {
        const std::size_t base = half == 1 ? 0 : half_len;
        for (std::size_t j = 0; j < q; ++j) {
            Segment s;
            s.half = half;
            s.index = static_cast<int>(j) + 1;
            const std::size_t lo = j * seg_len;
            const std::size_t hi = std::min(half_len, lo + seg_len);
            for (std::size_t p = lo; p < hi; ++p) s.elements.push_back(seq[base + p]);
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<int> insertion_pattern(int q) {
    if (q < 1) throw MalformedSequence("segment count must be >= 1");
    const int r = ceil_log2(static_cast<std::size_t>(q)) + 1;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(q));
    for (int j = 1; j < q; ++j)
        out.push_back(std::countr_zero(static_cast<unsigned>(j)) + 1);
    out.push_back(r);
    return out;
}

Construct7Params construct7_params(int n, int k, std::size_t length) {
    const std::size_t seg_len = static_cast<std::size_t>(k) + 1;
    if (length < 2 * seg_len)
        throw TooShort("length " + std::to_string(length) + " below 2(k+1) = " +
                       std::to_string(2 * seg_len));
    if (length % 2 != 0) throw OddLength("length must be even");
    const std::size_t q = ceil_div(length, 2 * seg_len);
    const int r = ceil_log2(q) + 1;
#ifndef NDEBUG
    // The segment-level ceil(log2 q) + 1 must agree with the length-level
    // ceil(log2(N/(2(k+1)))) + 1: the latter minus one is the smallest m
    // with 2^m * 2(k+1) >= N.
    int m = 0;
    while ((std::size_t{1} << m) * 2 * seg_len < length) ++m;
    assert(m + 1 == r);
#endif
    return {n + r, k + 1, static_cast<int>(q), r, length + 2 * q};
}

ConstructionReport construct7(const CircuitCode& code) {
    const int n = code.dimension();
    const int k = code.claimed_spread();
    const Construct7Params params = construct7_params(n, k, code.length());
    if (params.n_out > kMaxDimension)
        throw DimensionLimit("output dimension " + std::to_string(params.n_out) + " exceeds " +
                             std::to_string(kMaxDimension));
    require_verified(code, k, "construct7");

    const std::vector<int> pattern = insertion_pattern(params.q);
    std::vector<std::pair<int, int>> insertions;
    for (int j = 1; j <= params.q; ++j)
        insertions.emplace_back(j, n + pattern[static_cast<std::size_t>(j) - 1]);

    std::vector<int> rewritten;
    rewritten.reserve(params.length_out);
    for (const Segment& seg : split_segments(code.seq(), k)) {
        rewritten.insert(rewritten.end(), seg.elements.begin(), seg.elements.end());
        rewritten.push_back(n + pattern[static_cast<std::size_t>(seg.index) - 1]);
    }
    assert(rewritten.size() == params.length_out);

    ConstructionReport report{
        checked_output(params.n_out, params.k_out, TransitionSequence(std::move(rewritten)),
                       "construct7"),
        params.q,
        params.r,
        std::move(insertions),
        {n, k, code.length()},
        {params.n_out, params.k_out, params.length_out}};
    return report;
}

KleePaddingParams klee_padding_params(int n, int k, std::size_t length) {
    const std::size_t seg_len = static_cast<std::size_t>(k) + 1;
    if (length <= 2 * seg_len * seg_len)
        throw TooShort("padding needs length > 2(k+1)^2 = " + std::to_string(2 * seg_len * seg_len) +
                       ", got " + std::to_string(length));
    if (length % 2 != 0) throw OddLength("length must be even");
    const std::size_t q = ceil_div(length, 2 * seg_len);
    const std::size_t p = seg_len * q - length / 2;
    assert(q > seg_len);
    assert(p <= static_cast<std::size_t>(k));
    return {n + 1, k, static_cast<int>(q), static_cast<int>(p), 2 * seg_len * q};
}

ConstructionReport klee_padding(const CircuitCode& code) {
    const int n = code.dimension();
    const int k = code.claimed_spread();
    const KleePaddingParams params = klee_padding_params(n, k, code.length());
    if (params.n_out > kMaxDimension)
        throw DimensionLimit("output dimension " + std::to_string(params.n_out) + " exceeds " +
                             std::to_string(kMaxDimension));
    require_verified(code, k, "klee_padding");

    std::vector<std::pair<int, int>> insertions;
    for (int j = 1; j <= params.p; ++j) insertions.emplace_back(j, n + 1);

    std::vector<int> rewritten;
    rewritten.reserve(params.length_out);
    for (const Segment& seg : split_segments(code.seq(), k)) {
        rewritten.insert(rewritten.end(), seg.elements.begin(), seg.elements.end());
        if (seg.index <= params.p) rewritten.push_back(n + 1);
    }
    assert(rewritten.size() == params.length_out);

    ConstructionReport report{
        checked_output(params.n_out, params.k_out, TransitionSequence(std::move(rewritten)),
                       "klee_padding"),
        params.q,
        1,
        std::move(insertions),
        {n, k, code.length()},
        {params.n_out, params.k_out, params.length_out}};
    return report;
}

TransitionSequence naive_insertion(const CircuitCode& code, int offset) {
    if (offset < 0 || offset > 2)
        throw MalformedSequence("offset must be 0, 1 or 2, got " + std::to_string(offset));
    const std::size_t n_elems = code.length();
    if (n_elems % 3 != 0)
        throw MalformedSequence("naive insertion needs a length divisible by 3, got " +
                                std::to_string(n_elems));
    const int fresh = code.dimension() + 1;
    if (fresh > kMaxDimension)
        throw DimensionLimit("output dimension " + std::to_string(fresh) + " exceeds 64");
    std::vector<int> out;
    out.reserve(n_elems + n_elems / 3);
    if (offset == 0) out.push_back(fresh);
    for (std::size_t i = 1; i <= n_elems; ++i) {
        out.push_back(code.seq()[i - 1]);
        // offset 0 places the element cyclically after position N, which is
        // the leading insertion above.
        if (i % 3 == static_cast<std::size_t>(offset) % 3 && i != n_elems)
            out.push_back(fresh);
    }
    return TransitionSequence(std::move(out));
}

Vertex project_vertex(const Vertex& x, int m) {
    if (m < 0 || m > x.width())
        throw WidthMismatch("cannot project width-" + std::to_string(x.width()) +
                            " vertex onto width " + std::to_string(m));
    const std::uint64_t mask = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    return Vertex(x.bits() & mask, m);
}

TransitionSequence strip_above(const TransitionSequence& seq, int old_dimension) {
    std::vector<int> out;
    out.reserve(seq.size());
    for (int e : seq)
        if (e <= old_dimension) out.push_back(e);
    return TransitionSequence(std::move(out));
}

}  // namespace ccode
