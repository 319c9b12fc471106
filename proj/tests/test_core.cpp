#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "invpat/core.hpp"
#include "invpat/enumerator.hpp"

using namespace invpat;

namespace {

const Word kSample = {0, 1, 0, 1, 0, 2, 5, 7, 7, 7, 9, 0, 10, 11, 12};

Word positives(std::span<const int> e)
{
    Word out;
    for (int v : e) {
        if (v > 0) out.push_back(v);
    }
    return out;
}

void for_each_seq(int n, const std::function<void(std::span<const int>)>& fn) { for_each_avoider(n, {}, fn); }

} // namespace

TEST_CASE("reduce")
{
    CHECK(reduce(Word{3, 0, 5, 2, 6, 6, 2}).letters() == Word{2, 0, 3, 1, 4, 4, 1});
    CHECK(reduce(Word{0, 0, 0}).letters() == Word{0, 0, 0});
    CHECK(reduce(Word{5, 2, 9}).letters() == Word{1, 0, 2});
    CHECK_THROWS_WITH(reduce(Word{}), "empty word");
}

TEST_CASE("reduce is idempotent")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(1, 9);
    std::uniform_int_distribution<int> val(0, 20);
    for (int trial = 0; trial < 500; ++trial) {
        Word w(static_cast<std::size_t>(len(rng)));
        for (auto& x : w) x = val(rng);
        const Pattern once = reduce(w);
        CHECK(reduce(once.letters()) == once);
    }
}

TEST_CASE("pattern text")
{
    CHECK(Pattern::parse("021").letters() == Word{0, 2, 1});
    CHECK(Pattern::parse("021").to_string() == "021");
    CHECK(Pattern::parse("0,1,10,2,3,4,5,6,7,8,9").to_string() == "0,1,10,2,3,4,5,6,7,8,9");
    CHECK_THROWS(Pattern::parse("02"));
    CHECK_THROWS(Pattern::parse("0a1"));
    CHECK_THROWS(Pattern::parse(""));
}

TEST_CASE("inversion sequence validity")
{
    CHECK(InversionSequence::is_valid(Word{0, 1, 0, 3}));
    CHECK_FALSE(InversionSequence::is_valid(Word{0, 2}));
    CHECK_FALSE(InversionSequence::is_valid(Word{1}));
    CHECK(InversionSequence::is_valid(Word{}));
    CHECK_THROWS(InversionSequence(Word{0, 0, 3}));
    CHECK(InversionSequence::parse("0, 1,0,2").to_string() == "0,1,0,2");
    CHECK_THROWS_WITH(parse_word("0,,1"), doctest::Contains("malformed sequence text"));
    CHECK_THROWS(parse_word("0,-1"));
}

TEST_CASE("contains")
{
    CHECK(contains(Word{0, 1, 0, 2}, Pattern::parse("012")));
    CHECK_FALSE(contains(Word{0, 0, 0}, Pattern::parse("01")));
    CHECK_FALSE(contains(kSample, Pattern::parse("021")));
    CHECK(contains(kSample, Pattern::parse("012")));
    CHECK(contains(Word{0, 0, 0}, Pattern::parse("000")));
}

TEST_CASE("containment is invariant under monotone relabeling")
{
    std::mt19937 rng(11);
    const std::vector<Pattern> pats = {Pattern::parse("021"), Pattern::parse("101"), Pattern::parse("0102"),
                                       Pattern::parse("000"), Pattern::parse("1200")};
    for (int trial = 0; trial < 400; ++trial) {
        Word w(8);
        for (auto& x : w) x = static_cast<int>(rng() % 6);
        // strictly increasing relabeling of 0..5
        std::vector<int> map(6);
        int acc = static_cast<int>(rng() % 3);
        for (auto& m : map) {
            m = acc;
            acc += 1 + static_cast<int>(rng() % 4);
        }
        Word w2 = w;
        for (auto& x : w2) x = map[static_cast<std::size_t>(x)];
        for (const auto& p : pats) {
            CHECK(contains(w, p) == contains(w2, p));
        }
    }
}

TEST_CASE("contains_ending_at_last agrees with full search on extensions")
{
    const Pattern p = Pattern::parse("201");
    for_each_seq(6, [&](std::span<const int> e) {
        const bool prefix = contains(e.first(e.size() - 1), p);
        CHECK(contains(e, p) == (prefix || contains_ending_at_last(e, p)));
    });
}

TEST_CASE("shift_positive")
{
    CHECK(shift_positive(Word{0, 3, 0, 4}, -2) == Word{0, 1, 0, 2});
    CHECK(shift_positive(Word{0, 0}, 5) == Word{0, 0});
    CHECK(shift_positive(Word{1, 2}, 1) == Word{2, 3});
    CHECK_THROWS_WITH(shift_positive(Word{0, 1}, -1), "shift would produce nonpositive entry");
}

TEST_CASE("stats examples")
{
    const auto s = stats(kSample);
    CHECK(s.zeros == 4);
    CHECK(s.maximal_entries == 3);
    CHECK(s.leading_zeros == 1);
    CHECK(s.late_zeros == 3);
    CHECK(s.last_entry == 12);

    CHECK(stats(Word{0, 0, 0, 1, 0, 0, 4, 7, 7, 0, 9, 0, 9, 11, 14}).ascents == 7);

    for (int n = 1; n <= 6; ++n) {
        const auto z = stats(Word(static_cast<std::size_t>(n), 0));
        CHECK(z.ascents == 0);
        CHECK(z.zeros == n);
        CHECK(z.distinct_values == 1);
        CHECK(z.bottom == -1);
        CHECK(z.late_zeros == 0);
    }

    const auto empty = stats(Word{});
    CHECK(empty.zeros == 0);
    CHECK(empty.maximal_entries == 0);
    CHECK(empty.bottom == -1);
}

TEST_CASE("statistic names round trip")
{
    for (auto s : all_statistics()) {
        CHECK(parse_statistic(statistic_name(s)) == s);
    }
    CHECK_THROWS(parse_statistic("nope"));
}

TEST_CASE("StatRecord invariants on I_n, n <= 8")
{
    for (int n = 1; n <= 8; ++n) {
        for_each_seq(n, [&](std::span<const int> e) {
            const auto s = stats(e);
            REQUIRE(s.zeros == s.late_zeros + s.leading_zeros);
            REQUIRE(s.ascents <= n - 1);
            REQUIRE(s.maximal_entries >= 1);
            REQUIRE((s.bottom == -1) == std::is_sorted(e.begin(), e.end()));
            REQUIRE(s.distinct_values == static_cast<int>(std::set<int>(e.begin(), e.end()).size()));
        });
    }
}

TEST_CASE("single-pattern characterizations, n <= 8")
{
    const Pattern p012 = Pattern::parse("012");
    const Pattern p021 = Pattern::parse("021");
    const Pattern p210 = Pattern::parse("210");
    const Pattern p001 = Pattern::parse("001");
    const Pattern p011 = Pattern::parse("011");
    const Pattern p000 = Pattern::parse("000");
    for (int n = 1; n <= 8; ++n) {
        for_each_seq(n, [&](std::span<const int> e) {
            const Word pos = positives(e);
            REQUIRE(avoids(e, p012) == std::is_sorted(pos.rbegin(), pos.rend()));
            REQUIRE(avoids(e, p021) == std::is_sorted(pos.begin(), pos.end()));

            // weak left-to-right maxima are weakly increasing; the rest must be too
            const auto s = stats(e);
            std::vector<bool> is_max(e.size(), false);
            for (int j : s.weak_ltr_maxima) is_max[static_cast<std::size_t>(j - 1)] = true;
            Word rest;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!is_max[i]) rest.push_back(e[i]);
            }
            REQUIRE(avoids(e, p210) == std::is_sorted(rest.begin(), rest.end()));

            bool unimodal = false;
            for (std::size_t t = 1; t <= e.size() && !unimodal; ++t) {
                bool ok = true;
                for (std::size_t i = 1; i < t && ok; ++i) ok = e[i - 1] < e[i];
                for (std::size_t i = t; i < e.size() && ok; ++i) ok = e[i - 1] >= e[i];
                unimodal = ok;
            }
            REQUIRE(avoids(e, p001) == unimodal);

            REQUIRE(avoids(e, p011) == (std::set<int>(pos.begin(), pos.end()).size() == pos.size()));

            bool at_most_twice = true;
            for (int v : std::set<int>(e.begin(), e.end())) {
                at_most_twice = at_most_twice && std::count(e.begin(), e.end(), v) <= 2;
            }
            REQUIRE(avoids(e, p000) == at_most_twice);
        });
    }
}

TEST_CASE("block decomposition")
{
    const auto d = blocks(kSample);
    REQUIRE(d.blocks.size() == kSample.size());
    CHECK(d.blocks[0].entries == Word{0});
    CHECK(d.blocks[1].entries == Word{1, 0, 1, 0});
    CHECK(d.blocks[2].entries == Word{2});
    CHECK(d.blocks[3].entries.empty());
    CHECK(d.blocks[5].entries == Word{5});
    CHECK(d.blocks[7].entries == Word{7, 7, 7});
    CHECK(d.blocks[9].entries == Word{9, 0});
    CHECK(d.blocks[12].entries == Word{12});
    std::vector<int> maximal;
    for (const auto& b : d.blocks) {
        if (b.maximal) maximal.push_back(b.value);
    }
    CHECK(maximal == std::vector<int>{0, 1, 7});
    CHECK(d.maximal_count() == 3);
    CHECK(d.concatenate() == kSample);

    const auto one = blocks(Word{0});
    CHECK(one.blocks.size() == 1);
    CHECK(one.blocks[0].maximal);

    const auto small = blocks(Word{0, 0, 2});
    CHECK(small.blocks[0].entries == Word{0, 0});
    CHECK(small.blocks[2].entries == Word{2});
    CHECK(small.blocks[0].maximal);
    // e_3 = 2 = 3 - 1, so b_2 starts with a maximal entry
    CHECK(small.blocks[2].maximal);
    CHECK(small.blocks[2].start == 3);
    CHECK_FALSE(blocks(Word{0, 0, 1}).blocks[1].maximal);

    CHECK_THROWS_WITH(blocks(Word{0, 0, 2, 1}), "block decomposition undefined");
}

TEST_CASE("block invariants on I_n(021), n <= 8")
{
    for (int n = 1; n <= 8; ++n) {
        for_each_avoider(n, {Pattern::parse("021")}, [&](std::span<const int> e) {
            const auto d = blocks(e);
            REQUIRE(d.concatenate() == Word(e.begin(), e.end()));
            int nonempty_positive = 0;
            for (const auto& b : d.blocks) {
                if (b.value >= 1 && !b.entries.empty()) ++nonempty_positive;
            }
            REQUIRE(nonempty_positive == stats(e).distinct_nonzero_values);
            REQUIRE(d.maximal_count() == stats(e).maximal_entries);
        });
    }
}
