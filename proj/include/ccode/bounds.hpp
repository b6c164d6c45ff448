#pragma once

// Lower-bound table for K(n,k), the maximum length of an (n,k) circuit code.
// The table is seeded from the closed-form exact values, the non-asymptotic
// formula bounds and the embedded corpus codes, then closed under the
// construction transformations (applied as pure parameter arithmetic) until
// no entry improves. Every entry carries a provenance tree that can be
// replayed to reproduce its value.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ccode/bignum.hpp"

namespace ccode {

struct BoundEntry;
using BoundEntryPtr = std::shared_ptr<const BoundEntry>;

struct BoundEntry {
    int n = 0;
    int k = 0;
    BigUint value;  // even lower bound on K(n,k)
    bool exact = false;
    std::string rule;  // "exact:...", "formula:...", "corpus:<id>", "C1".."C7", "demotion"
    std::vector<BoundEntryPtr> parents;
    std::string note;  // rounding / padding annotations
};

struct GridRange {
    int n_lo = 2, n_hi = 30;
    int k_lo = 1, k_hi = 10;
    bool contains(int n, int k) const {
        return n_lo <= n && n <= n_hi && k_lo <= k && k <= k_hi;
    }
    bool empty() const { return n_lo > n_hi || k_lo > k_hi; }
};

class BoundTable {
public:
    BoundTable() = default;
    explicit BoundTable(GridRange range) : range_(range) {}

    const GridRange& range() const { return range_; }
    std::size_t size() const { return cells_.size(); }
    BoundEntryPtr find(int n, int k) const;

    // Keeps the better value; equal or worse candidates are dropped. A
    // strictly larger candidate in a cell holding a known exact value is a
    // soundness violation and throws.
    bool insert_if_better(BoundEntryPtr entry);

    // Entries in (k, n) lexicographic order.
    std::vector<BoundEntryPtr> entries() const;

private:
    GridRange range_;
    std::map<std::pair<int, int>, BoundEntryPtr> cells_;  // key (k, n)
};

// Closed-form exact values of K(n,k), when one of the four known cases
// applies: 2n for n < floor(3k/2)+2; 4k+6 / 4k+4 at n = floor(3k/2)+2 for k
// even / odd; 4k+8 at n = floor(3k/2)+3 for odd k >= 9.
std::optional<BoundEntry> seed_exact(int n, int k);

// Best applicable non-asymptotic formula bound: 2^n for k=1; the snake bound
// ceil-to-even of (77/256)2^n for k=2; the exact spread-3 ladder for k=3,
// n>=6; (k+1)2^(floor(2n/(k+1))-1) for odd k with floor(2n/(k+1)) >= 2.
std::optional<BoundEntry> seed_formula(int n, int k);

// Exact spread-3 code lengths 16, 24, 32 at n = 6, 7, 8, each tripling with
// every three added dimensions.
BigUint spread3_ladder(int n);

// Seeds a table over the given range from exact values, formulas and the
// embedded corpus.
BoundTable seed_table(const GridRange& range);

struct TransformResult {
    int n = 0;
    int k = 0;
    BigUint value;
    std::string note;
};

struct Transformation {
    std::string id;
    bool pairwise = false;
    // Unary: maps an entry (n, k, length). Null optional: not applicable.
    std::function<std::optional<TransformResult>(int n, int k, const BigUint& len)> apply;
    // Pairwise (C6 only): first argument acts as the odd-spread factor.
    std::function<std::optional<TransformResult>(int n1, int k1, const BigUint& len1, int n2,
                                                 int k2, const BigUint& len2)>
        apply_pair;
};

// The seven construction transformations plus spread demotion, in the fixed
// order they are applied during propagation.
const std::vector<Transformation>& transformations();

struct PropagationStats {
    int rounds = 0;
    std::size_t improvements = 0;
};

// Applies every transformation to every entry (C6 over all valid pairs),
// keeping strict improvements, until a full round changes nothing. Entries
// are scanned in (k, n) order and transformations in the order returned by
// transformations(); improvements become visible immediately, which is
// irrelevant for the fixpoint but makes provenance deterministic.
BoundTable propagate(const BoundTable& table, PropagationStats* stats = nullptr);

// Spread-4 bound from the spread-raising construction applied to the ladder
// codes: smallest even integer >= 40 * 3^((floor(0.6535 n) - 8)/3).
// Returns nullopt when floor(0.6535 n) < 8.
std::optional<BigUint> theorem2_bound(int n);

// The classical spread-4 baseline 6 * 2^(floor(2n/6) - 1); DomainError when
// floor(2n/6) < 2.
BigUint singleton_k4_baseline(int n);

// Recomputes an entry's value from its provenance tree.
BigUint replay(const BoundEntry& entry);

// Compact one-line derivation, e.g. "C1 <- corpus:appendixB-(22,7,234)".
std::string chain_line(const BoundEntry& entry);

// Full derivation of the (n, k) entry, one node per line. NoEntry if absent.
std::string explain(const BoundTable& table, int n, int k);

}  // namespace ccode
