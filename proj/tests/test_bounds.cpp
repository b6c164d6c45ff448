#include <doctest.h>

#include <algorithm>

#include "ccode/bounds.hpp"
#include "ccode/corpus.hpp"

using namespace ccode;

namespace {

const Transformation& transformation(const std::string& id) {
    for (const Transformation& t : transformations())
        if (t.id == id) return t;
    REQUIRE(false);
    throw std::logic_error("unreachable");
}

BoundTable tiny_table() {
    BoundTable t(GridRange{2, 4, 1, 3});
    t.insert_if_better(std::make_shared<BoundEntry>(
        BoundEntry{3, 2, BigUint(6), false, "corpus:fig1-(3,2,6)", {}, {}}));
    return t;
}

}  // namespace

TEST_CASE("biguint arithmetic against pinned values") {
    CHECK(BigUint::pow(3, 16).str() == "43046721");
    CHECK(BigUint::pow(2, 100).str() == "1267650600228229401496703205376");
    CHECK(BigUint::from_decimal("1011558529898448771818").str() == "1011558529898448771818");
    CHECK(BigUint(40) * BigUint::pow(3, 16) == BigUint(1721868840));
    CHECK((BigUint::pow(2, 64) - BigUint(1)).to_u64() == 0xffffffffffffffffULL);
    CHECK(BigUint(1000).divmod(7).first == BigUint(142));
    CHECK(BigUint(1000).divmod(7).second == 6);
    CHECK(BigUint(1000).div_ceil(7) == BigUint(143));
    CHECK(BigUint(12) < BigUint(13));
    CHECK(BigUint::pow(2, 40) > BigUint::pow(10, 12));
    CHECK(ceil_even(BigUint(7)) == BigUint(8));
    CHECK(ceil_even(BigUint(8)) == BigUint(8));
    CHECK(ceil_log2(BigUint(1)) == 0);
    CHECK(ceil_log2(BigUint(15)) == 4);
    CHECK(ceil_log2(BigUint(16)) == 4);
    CHECK(ceil_log2(BigUint(17)) == 5);
    CHECK_THROWS_AS(BigUint::pow(2, 65).to_u64(), DomainError);
    CHECK_THROWS_AS(BigUint(3) - BigUint(4), DomainError);
}

TEST_CASE("integer cube root") {
    CHECK(icbrt(BigUint(0)) == BigUint(0));
    CHECK(icbrt(BigUint(1)) == BigUint(1));
    CHECK(icbrt(BigUint(26)) == BigUint(2));
    CHECK(icbrt(BigUint(27)) == BigUint(3));
    CHECK(icbrt(BigUint(28)) == BigUint(3));
    BigUint big = BigUint::from_decimal("987654321987654321");
    BigUint r = icbrt(big);
    CHECK(r * r * r <= big);
    BigUint r1 = r + BigUint(1);
    CHECK(r1 * r1 * r1 > big);
}

TEST_CASE("closed-form exact values") {
    auto e = seed_exact(3, 2);
    REQUIRE(e.has_value());
    CHECK(e->value == BigUint(6));
    CHECK(e->exact);
    CHECK(e->rule == "exact:2n");
    CHECK(seed_exact(5, 2)->value == BigUint(14));
    CHECK(seed_exact(6, 3)->value == BigUint(16));
    CHECK(seed_exact(16, 9)->value == BigUint(44));  // odd k >= 9 at threshold+1
    CHECK_FALSE(seed_exact(10, 2).has_value());
    CHECK_FALSE(seed_exact(14, 7).has_value());  // 4k+8 needs k >= 9
}

TEST_CASE("formula seeds") {
    CHECK(seed_formula(8, 3)->value == BigUint(32));
    CHECK(seed_formula(7, 3)->value == BigUint(24));
    CHECK(seed_formula(11, 5)->value == BigUint(24));
    CHECK(seed_formula(10, 2)->value == BigUint(308));
    CHECK(seed_formula(3, 2)->value == BigUint(4));  // 77/256*8 rounded up to even
    CHECK(seed_formula(10, 1)->value == BigUint(1024));
    CHECK_FALSE(seed_formula(3, 4).has_value());
    // every seeded value is even
    for (int n = 2; n <= 30; ++n)
        for (int k = 1; k <= 10; ++k)
            if (auto f = seed_formula(n, k)) CHECK(f->value.is_even());
}

TEST_CASE("spread-3 ladder values") {
    CHECK(spread3_ladder(6) == BigUint(16));
    CHECK(spread3_ladder(7) == BigUint(24));
    CHECK(spread3_ladder(8) == BigUint(32));
    CHECK(spread3_ladder(9) == BigUint(48));
    CHECK(spread3_ladder(30) == BigUint(104976));
    CHECK_THROWS_AS(spread3_ladder(5), DomainError);
}

TEST_CASE("ladder stays within its two-sided envelope") {
    // 32*3^((n-8)/3) <= V <= (24/22)*32*3^((n-8)/3), compared exactly by
    // cubing both sides (exponents can be fractional).
    for (int n = 6; n <= 30; ++n) {
        CAPTURE(n);
        const BigUint v = spread3_ladder(n);
        const BigUint v3 = v * v * v;
        const std::uint64_t e = static_cast<std::uint64_t>(n - 8 + 2);  // shift by 3^2
        const BigUint lower = BigUint::pow(32, 3) * BigUint::pow(3, e);
        CHECK(lower <= v3 * BigUint(9));
        CHECK(v3 * BigUint(9) * BigUint::pow(22, 3) <=
              BigUint::pow(24, 3) * BigUint::pow(32, 3) * BigUint::pow(3, e));
    }
}

TEST_CASE("transformation arithmetic") {
    auto c7 = transformation("C7").apply(3, 2, BigUint(6));
    REQUIRE(c7.has_value());
    CHECK(c7->n == 4);
    CHECK(c7->k == 3);
    CHECK(c7->value == BigUint(8));

    auto record = transformation("C7").apply(17, 6, BigUint(204));
    REQUIRE(record.has_value());
    CHECK(record->n == 22);
    CHECK(record->k == 7);
    CHECK(record->value == BigUint(234));

    auto c1 = transformation("C1").apply(22, 7, BigUint(234));
    REQUIRE(c1.has_value());
    CHECK(c1->n == 23);
    CHECK(c1->k == 7);
    CHECK(c1->value == BigUint(266));

    auto dem = transformation("demotion").apply(22, 8, BigUint(100));
    REQUIRE(dem.has_value());
    CHECK(dem->n == 22);
    CHECK(dem->k == 7);
    CHECK(dem->value == BigUint(100));
    CHECK_FALSE(transformation("demotion").apply(22, 1, BigUint(100)).has_value());

    auto c3 = transformation("C3").apply(18, 7, BigUint(84));
    REQUIRE(c3.has_value());
    CHECK(c3->n == 22);
    CHECK(c3->value == BigUint(164));

    // C6 with k=2: Gray factor times snake
    auto c6 = transformation("C6").apply_pair(2, 1, BigUint(4), 3, 2, BigUint(6));
    REQUIRE(c6.has_value());
    CHECK(c6->n == 5);
    CHECK(c6->k == 2);
    CHECK(c6->value == BigUint(12));
}

TEST_CASE("theorem-2 style bound and its baseline") {
    CHECK_FALSE(theorem2_bound(12).has_value());
    CHECK(theorem2_bound(13).value() == BigUint(40));
    CHECK(theorem2_bound(86).value() == BigUint(1721868840));
    // fractional exponents round up to the next even integer
    CHECK(theorem2_bound(88).value() == BigUint(2483364596));
    CHECK(theorem2_bound(90).value() == BigUint(3581631520));
    CHECK(theorem2_bound(200).value() == BigUint::from_decimal("1011558529898448771818"));

    CHECK(singleton_k4_baseline(6) == BigUint(12));
    CHECK(singleton_k4_baseline(12) == BigUint(48));
    CHECK(singleton_k4_baseline(86) == BigUint(805306368));
    CHECK(singleton_k4_baseline(200) == BigUint::from_decimal("221360928884514619392"));
    CHECK_THROWS_AS(singleton_k4_baseline(5), DomainError);

    CHECK(theorem2_bound(86).value() > singleton_k4_baseline(86));
}

TEST_CASE("propagation on a tiny grid reproduces the one-step lift") {
    PropagationStats stats;
    BoundTable done = propagate(tiny_table(), &stats);
    CHECK(stats.rounds >= 2);
    REQUIRE(done.find(4, 3));
    CHECK(done.find(4, 3)->value == BigUint(8));
    CHECK(chain_line(*done.find(4, 3)) == "C7 <- corpus:fig1-(3,2,6)");
    // side products of the same fixpoint
    CHECK(done.find(4, 2)->value == BigUint(8));
    CHECK(done.find(2, 1)->value == BigUint(4));
    CHECK(done.find(4, 1)->value == BigUint(16));
}

TEST_CASE("propagation of an empty table is a no-op") {
    PropagationStats stats;
    BoundTable done = propagate(BoundTable(GridRange{2, 4, 1, 3}), &stats);
    CHECK(stats.rounds == 0);
    CHECK(done.size() == 0);
    CHECK_THROWS_AS(propagate(BoundTable(GridRange{5, 4, 1, 3})), RangeTooSmall);
    CHECK_THROWS_AS(seed_table(GridRange{2, 30, 5, 1}), RangeTooSmall);
}

TEST_CASE("default grid fixpoint") {
    PropagationStats stats;
    const BoundTable seeded = seed_table(GridRange{});
    const BoundTable done = propagate(seeded, &stats);
    CHECK(stats.rounds >= 2);

    CHECK(done.find(22, 7)->value == BigUint(234));
    CHECK(done.find(22, 7)->rule == "corpus:appendixB-(22,7,234)");
    CHECK(done.find(23, 7)->value == BigUint(266));
    CHECK(chain_line(*done.find(23, 7)) == "C1 <- corpus:appendixB-(22,7,234)");
    CHECK(done.find(27, 8)->value == BigUint(264));
    CHECK(chain_line(*done.find(27, 8)) == "C7 <- corpus:appendixB-(22,7,234)");
    CHECK(done.find(6, 2)->value == BigUint(24));

    SUBCASE("idempotent") {
        PropagationStats again;
        BoundTable done2 = propagate(done, &again);
        CHECK(again.rounds == 1);
        CHECK(again.improvements == 0);
        CHECK(done2.size() == done.size());
        for (const BoundEntryPtr& e : done.entries())
            CHECK(done2.find(e->n, e->k)->value == e->value);
    }

    SUBCASE("replay reproduces every value") {
        for (const BoundEntryPtr& e : done.entries()) {
            CAPTURE(e->n);
            CAPTURE(e->k);
            CHECK(replay(*e) == e->value);
        }
    }

    SUBCASE("exact cells keep their closed-form values") {
        for (int n = 2; n <= 30; ++n) {
            for (int k = 1; k <= 10; ++k) {
                if (auto exact = seed_exact(n, k)) {
                    REQUIRE(done.find(n, k));
                    CHECK(done.find(n, k)->value == exact->value);
                    CHECK(done.find(n, k)->exact);
                }
            }
        }
    }

    SUBCASE("fixpoint is monotone across the grid") {
        for (const BoundEntryPtr& e : done.entries()) {
            CHECK(e->value.is_even());
            if (auto up = done.find(e->n, e->k + 1)) CHECK(e->value >= up->value);
            if (auto right = done.find(e->n + 1, e->k)) CHECK(right->value >= e->value);
        }
    }

    SUBCASE("adding a seed never decreases any entry") {
        BoundTable boosted = seeded;
        boosted.insert_if_better(std::make_shared<BoundEntry>(
            BoundEntry{17, 6, BigUint(204), false, "corpus:external-(17,6,204)", {}, {}}));
        BoundTable done2 = propagate(boosted);
        for (const BoundEntryPtr& e : done.entries())
            CHECK(done2.find(e->n, e->k)->value >= e->value);
        // and the known chain actually improves
        CHECK(done2.find(22, 7)->value == BigUint(234));
    }
}

TEST_CASE("explain renders the chain and rejects missing cells") {
    BoundTable done = propagate(tiny_table());
    std::string text = explain(done, 4, 3);
    CHECK(text.find("C7 <- corpus:fig1-(3,2,6)") != std::string::npos);
    CHECK(text.find("K(4,3) >= 8") != std::string::npos);
    CHECK(text.find("K(3,2) >= 6") != std::string::npos);
    CHECK_THROWS_AS(explain(done, 9, 9), NoEntry);
}

TEST_CASE("a bound exceeding a known exact value is refused loudly") {
    BoundTable t(GridRange{2, 4, 1, 3});
    t.insert_if_better(std::make_shared<BoundEntry>(*seed_exact(3, 2)));
    CHECK_THROWS_AS(t.insert_if_better(std::make_shared<BoundEntry>(
                        BoundEntry{3, 2, BigUint(8), false, "bogus", {}, {}})),
                    SoundnessViolation);
}
