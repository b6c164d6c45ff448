#include "ccode/bounds.hpp"

#include <algorithm>
#include <cassert>

#include "ccode/corpus.hpp"

namespace ccode {

BoundEntryPtr BoundTable::find(int n, int k) const {
    auto it = cells_.find({k, n});
    return it == cells_.end() ? nullptr : it->second;
}

bool BoundTable::insert_if_better(BoundEntryPtr entry) {
    if (!range_.contains(entry->n, entry->k)) return false;
    auto& cell = cells_[{entry->k, entry->n}];
    if (cell) {
        if (entry->value <= cell->value) return false;
        if (cell->exact)
            throw SoundnessViolation("bound " + entry->value.str() + " via " + entry->rule +
                                     " exceeds exact K(" + std::to_string(entry->n) + "," +
                                     std::to_string(entry->k) + ") = " + cell->value.str());
    }
    cell = std::move(entry);
    return true;
}

std::vector<BoundEntryPtr> BoundTable::entries() const {
    std::vector<BoundEntryPtr> out;
    out.reserve(cells_.size());
    for (const auto& [key, e] : cells_) out.push_back(e);
    return out;
}

std::optional<BoundEntry> seed_exact(int n, int k) {
    if (n < 1 || k < 1) return std::nullopt;
    const int threshold = (3 * k) / 2 + 2;
    if (n < threshold)
        return BoundEntry{n, k, BigUint(2 * static_cast<std::uint64_t>(n)), true, "exact:2n", {}, {}};
    if (n == threshold) {
        if (k % 2 == 0)
            return BoundEntry{n, k, BigUint(4 * static_cast<std::uint64_t>(k) + 6), true,
                              "exact:4k+6", {}, {}};
        return BoundEntry{n, k, BigUint(4 * static_cast<std::uint64_t>(k) + 4), true,
                          "exact:4k+4", {}, {}};
    }
    if (n == threshold + 1 && k % 2 == 1 && k >= 9)
        return BoundEntry{n, k, BigUint(4 * static_cast<std::uint64_t>(k) + 8), true,
                          "exact:4k+8", {}, {}};
    return std::nullopt;
}

BigUint spread3_ladder(int n) {
    if (n < 6) throw DomainError("spread-3 ladder starts at dimension 6");
    switch (n % 3) {
        case 0: return BigUint(16) * BigUint::pow(3, static_cast<std::uint64_t>(n - 6) / 3);
        case 1: return BigUint(24) * BigUint::pow(3, static_cast<std::uint64_t>(n - 7) / 3);
        default: return BigUint(32) * BigUint::pow(3, static_cast<std::uint64_t>(n - 8) / 3);
    }
}

std::optional<BoundEntry> seed_formula(int n, int k) {
    if (n < 1 || k < 1) return std::nullopt;
    std::optional<BoundEntry> best;
    auto consider = [&](BigUint v, std::string rule, std::string note = {}) {
        if (!best || v > best->value)
            best = BoundEntry{n, k, std::move(v), false, std::move(rule), {}, std::move(note)};
    };
    if (k == 1) consider(BigUint::pow(2, static_cast<std::uint64_t>(n)), "formula:gray-2^n");
    if (k == 2) {
        // (77/256) 2^n, rounded up to the next even integer (code lengths
        // are even). 2 ceil(x/2) with x = 77*2^n/256 gives that directly.
        BigUint numerator = BigUint(77) * BigUint::pow(2, static_cast<std::uint64_t>(n));
        BigUint v = numerator.div_ceil(512) * BigUint(2);
        std::string note;
        if (numerator.divmod(256).second != 0 || !numerator.div_floor(256).is_even())
            note = "raw 77*2^" + std::to_string(n) + "/256 rounded up to even";
        consider(std::move(v), "formula:snake-77/256", std::move(note));
    }
    if (k == 3 && n >= 6) consider(spread3_ladder(n), "formula:spread3-ladder");
    if (k % 2 == 1) {
        const int f = 2 * n / (k + 1);
        if (f >= 2)
            consider(BigUint(static_cast<std::uint64_t>(k) + 1) *
                         BigUint::pow(2, static_cast<std::uint64_t>(f) - 1),
                     "formula:odd-power");
    }
    return best;
}

BoundTable seed_table(const GridRange& range) {
    if (range.empty()) throw RangeTooSmall("empty (n, k) range");
    BoundTable table(range);
    for (int k = range.k_lo; k <= range.k_hi; ++k) {
        for (int n = range.n_lo; n <= range.n_hi; ++n) {
            if (auto e = seed_exact(n, k))
                table.insert_if_better(std::make_shared<BoundEntry>(std::move(*e)));
            if (auto e = seed_formula(n, k))
                table.insert_if_better(std::make_shared<BoundEntry>(std::move(*e)));
        }
    }
    for (const CorpusEntry& c : corpus()) {
        const auto& code = c.code;
        table.insert_if_better(std::make_shared<BoundEntry>(
            BoundEntry{code.dimension(), code.claimed_spread(), BigUint(code.length()), false,
                       "corpus:" + c.id, {}, {}}));
    }
    return table;
}

namespace {

std::uint32_t u32(int v) { return static_cast<std::uint32_t>(v); }

std::optional<TransformResult> c7_arithmetic(int n, int k, const BigUint& len) {
    if (len < BigUint(2 * u32(k + 1))) return std::nullopt;
    BigUint q = len.div_ceil(2 * u32(k + 1));
    const int r = static_cast<int>(ceil_log2(q)) + 1;
    return TransformResult{n + r, k + 1, len + q * BigUint(2), {}};
}

// Padding arithmetic used to meet C6's divisibility requirement: a spread-k
// code of even length N > 2(k+1)^2 yields a spread-k code in dimension n+1
// with length 2(k+1)ceil(N/(2(k+1))).
std::optional<std::pair<int, BigUint>> pad_to_multiple(int n, int k, const BigUint& len) {
    const std::uint32_t m = 2 * u32(k + 1);
    if (len <= BigUint(static_cast<std::uint64_t>(m) * (k + 1))) return std::nullopt;
    return std::make_pair(n + 1, len.div_ceil(m) * BigUint(m));
}

}  // namespace

const std::vector<Transformation>& transformations() {
    static const std::vector<Transformation> all = [] {
        std::vector<Transformation> ts;
        ts.push_back({"C1", false,
                      [](int n, int k, const BigUint& len) -> std::optional<TransformResult> {
                          return TransformResult{n + 1, k,
                                                 len + len.div_floor(2 * u32(k)) * BigUint(2), {}};
                      },
                      nullptr});
        ts.push_back({"C2", false,
                      [](int n, int k, const BigUint& len) -> std::optional<TransformResult> {
                          if (k < 3) return std::nullopt;
                          return TransformResult{
                              n + 2, k, len + len.div_floor(2 * u32(k - 1)) * BigUint(4), {}};
                      },
                      nullptr});
        ts.push_back({"C3", false,
                      [](int n, int k, const BigUint& len) -> std::optional<TransformResult> {
                          if (k < 3 || k % 2 == 0) return std::nullopt;
                          return TransformResult{n + (k + 1) / 2, k,
                                                 len + len.div_floor(u32(k + 1)) * BigUint(u32(k + 1)),
                                                 {}};
                      },
                      nullptr});
        ts.push_back({"C4", false,
                      [](int n, int k, const BigUint& len) -> std::optional<TransformResult> {
                          if (k < 2 || k % 2 == 1) return std::nullopt;
                          return TransformResult{n + (k + 2) / 2, k,
                                                 len + len.div_floor(u32(k + 1)) * BigUint(u32(k + 2)),
                                                 {}};
                      },
                      nullptr});
        ts.push_back({"C5", false,
                      [](int n, int k, const BigUint& len) -> std::optional<TransformResult> {
                          if (k < 2 || n < 3) return std::nullopt;
                          // The source construction guarantees only an
                          // inequality; the floor value is kept, rounded up
                          // to even.
                          BigUint v = ceil_even(len - len.div_floor(u32(n)));
                          std::string note;
                          if (!(len - len.div_floor(u32(n))).is_even())
                              note = "raw " + (len - len.div_floor(u32(n))).str() +
                                     " rounded up to even";
                          return TransformResult{n - 1, k - 1, std::move(v), std::move(note)};
                      },
                      nullptr});
        ts.push_back({"C6", true, nullptr,
                      [](int n1, int k1, const BigUint& len1, int n2, int k2,
                         const BigUint& len2) -> std::optional<TransformResult> {
                          // k1 odd factor of spread K-1, k2 = K even.
                          if (k1 % 2 == 0 || k2 != k1 + 1) return std::nullopt;
                          const int K = k2;
                          int n1_adj = n1;
                          BigUint len1_adj = len1;
                          std::string note;
                          if (len1_adj.divmod(u32(K)).second != 0) {
                              auto padded = pad_to_multiple(n1, k1, len1);
                              if (!padded) return std::nullopt;
                              n1_adj = padded->first;
                              len1_adj = std::move(padded->second);
                              note = "factor padded to (" + std::to_string(n1_adj) + "," +
                                     std::to_string(k1) + "," + len1_adj.str() + ")";
                          }
                          if (n1_adj < 2 || n1_adj > n2) return std::nullopt;
                          if (len1_adj < BigUint(2 * u32(K)) || len2 < BigUint(2 * u32(K)))
                              return std::nullopt;
                          BigUint unit = len1_adj.div_floor(u32(K));
                          if (K == 2)
                              return TransformResult{n1_adj + n2, K, unit * len2, std::move(note)};
                          return TransformResult{n1_adj + n2 + 1, K, unit * (len2 + BigUint(2)),
                                                 std::move(note)};
                      }});
        ts.push_back({"C7", false,
                      [](int n, int k, const BigUint& len) { return c7_arithmetic(n, k, len); },
                      nullptr});
        ts.push_back({"demotion", false,
                      [](int n, int k, const BigUint& len) -> std::optional<TransformResult> {
                          if (k < 2) return std::nullopt;
                          return TransformResult{n, k - 1, len, {}};
                      },
                      nullptr});
        return ts;
    }();
    return all;
}

BoundTable propagate(const BoundTable& table, PropagationStats* stats) {
    if (table.range().empty()) throw RangeTooSmall("empty (n, k) range");
    BoundTable work = table;
    PropagationStats local;
    if (table.size() != 0) {
        bool changed = true;
        while (changed) {
            changed = false;
            ++local.rounds;
            for (const Transformation& t : transformations()) {
                const std::vector<BoundEntryPtr> snapshot = work.entries();
                for (const BoundEntryPtr& src : snapshot) {
                    // Re-read the cell: it may have improved this round.
                    const BoundEntryPtr cur = work.find(src->n, src->k);
                    if (!t.pairwise) {
                        auto res = t.apply(cur->n, cur->k, cur->value);
                        if (!res) continue;
                        bool improved = work.insert_if_better(std::make_shared<BoundEntry>(
                            BoundEntry{res->n, res->k, std::move(res->value), false, t.id,
                                       {cur}, std::move(res->note)}));
                        if (improved) {
                            changed = true;
                            ++local.improvements;
                        }
                    } else {
                        for (const BoundEntryPtr& other : snapshot) {
                            const BoundEntryPtr cur2 = work.find(other->n, other->k);
                            auto res = t.apply_pair(cur->n, cur->k, cur->value, cur2->n, cur2->k,
                                                    cur2->value);
                            if (!res) continue;
                            bool improved = work.insert_if_better(std::make_shared<BoundEntry>(
                                BoundEntry{res->n, res->k, std::move(res->value), false, t.id,
                                           {cur, cur2}, std::move(res->note)}));
                            if (improved) {
                                changed = true;
                                ++local.improvements;
                            }
                        }
                    }
                }
            }
        }
    }
    if (stats) *stats = local;
    return work;
}

std::optional<BigUint> theorem2_bound(int n) {
    if (n < 1) return std::nullopt;
    // floor(0.6535 n) computed exactly as floor(6535 n / 10000).
    const std::int64_t m = static_cast<std::int64_t>(6535) * n / 10000;
    if (m < 8) return std::nullopt;
    const std::uint64_t e = static_cast<std::uint64_t>(m - 8);
    // Value is 40 * 3^(e/3) = cbrt(64000 * 3^e); the smallest even integer
    // at least that is the smallest even v with v^3 >= 64000 * 3^e.
    BigUint target = BigUint(64000) * BigUint::pow(3, e);
    BigUint root = icbrt(target);
    if (root * root * root != target) root += BigUint(1);
    return ceil_even(std::move(root));
}

BigUint singleton_k4_baseline(int n) {
    const int f = 2 * n / 6;
    if (f < 2) throw DomainError("baseline needs floor(2n/6) >= 2, got n = " + std::to_string(n));
    return BigUint(6) * BigUint::pow(2, static_cast<std::uint64_t>(f) - 1);
}

BigUint replay(const BoundEntry& entry) {
    const std::string& rule = entry.rule;
    if (rule.starts_with("exact:")) {
        auto e = seed_exact(entry.n, entry.k);
        if (!e) throw SoundnessViolation("exact rule no longer applies at this cell");
        return e->value;
    }
    if (rule.starts_with("formula:")) {
        auto e = seed_formula(entry.n, entry.k);
        if (!e) throw SoundnessViolation("formula rule no longer applies at this cell");
        return e->value;
    }
    if (rule.starts_with("corpus:"))
        return BigUint(corpus_entry(rule.substr(7)).code.length());
    for (const Transformation& t : transformations()) {
        if (t.id != rule) continue;
        if (!t.pairwise) {
            if (entry.parents.size() != 1) throw SoundnessViolation("bad parent count for " + rule);
            const auto& p = *entry.parents[0];
            auto res = t.apply(p.n, p.k, replay(p));
            if (!res) throw SoundnessViolation(rule + " not applicable to recorded parent");
            return std::move(res->value);
        }
        if (entry.parents.size() != 2) throw SoundnessViolation("bad parent count for " + rule);
        const auto& a = *entry.parents[0];
        const auto& b = *entry.parents[1];
        auto res = t.apply_pair(a.n, a.k, replay(a), b.n, b.k, replay(b));
        if (!res) throw SoundnessViolation(rule + " not applicable to recorded parents");
        return std::move(res->value);
    }
    throw SoundnessViolation("unknown provenance rule: " + rule);
}

std::string chain_line(const BoundEntry& entry) {
    if (entry.parents.empty()) return entry.rule;
    if (entry.parents.size() == 1) return entry.rule + " <- " + chain_line(*entry.parents[0]);
    std::string out = entry.rule + " <- (";
    for (std::size_t i = 0; i < entry.parents.size(); ++i) {
        if (i) out += " ; ";
        out += chain_line(*entry.parents[i]);
    }
    return out + ")";
}

namespace {

void render_tree(const BoundEntry& e, int depth, std::string& out) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += "K(" + std::to_string(e.n) + "," + std::to_string(e.k) + ") >= " + e.value.str() +
           (e.exact ? " (exact)" : "") + "  [" + e.rule + "]";
    if (!e.note.empty()) out += "  {" + e.note + "}";
    out += "\n";
    for (const auto& p : e.parents) render_tree(*p, depth + 1, out);
}

}  // namespace

std::string explain(const BoundTable& table, int n, int k) {
    BoundEntryPtr e = table.find(n, k);
    if (!e)
        throw NoEntry("no entry at (" + std::to_string(n) + ", " + std::to_string(k) + ")");
    std::string out = chain_line(*e) + "\n";
    render_tree(*e, 0, out);
    return out;
}

}  // namespace ccode
