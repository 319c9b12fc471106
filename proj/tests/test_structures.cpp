#include <doctest.h>

#include <random>
#include <set>

#include "invpat/counting.hpp"
#include "invpat/structures.hpp"

using namespace invpat;

namespace {

const char* kSamplePath = "UUDUFUDUFDDDUUDUDDUUUFDDD";

// prefix-sum oracle: heights never negative, end at 0
bool path_oracle(const std::string& s)
{
    int h = 0;
    for (char c : s) {
        if (c == 'U') ++h;
        else if (c == 'D') --h;
        else if (c != 'F') return false;
        if (h < 0) return false;
    }
    return h == 0;
}

long count_perms(int n, const std::function<bool(std::span<const int>)>& keep)
{
    long c = 0;
    for_each_permutation(n, [&](std::span<const int> pi) { c += keep(pi) ? 1 : 0; });
    return c;
}

} // namespace

TEST_CASE("path validity against a prefix-sum oracle")
{
    std::mt19937 rng(3);
    const char steps[] = {'U', 'D', 'F'};
    for (int trial = 0; trial < 3000; ++trial) {
        std::string s(rng() % 9, 'U');
        for (auto& c : s) c = steps[rng() % 3];
        CHECK(SchroderPath::is_valid(s) == path_oracle(s));
    }
    CHECK_FALSE(SchroderPath::is_valid("UX"));
    CHECK_THROWS_WITH(SchroderPath("DU"), doctest::Contains("invalid step word"));
    CHECK(SchroderPath(kSamplePath).size() == 14);
}

TEST_CASE("path statistics")
{
    const auto s = path_stats(SchroderPath(kSamplePath));
    CHECK(s.flats == 3);
    CHECK(s.valleys == 5);
    CHECK(s.initial_up_run == 2);

    const auto f = path_stats(SchroderPath("F"));
    CHECK(f.flats == 1);
    CHECK(f.flats_at_height0 == 1);
    CHECK(f.peaks == 0);

    const auto ud = path_stats(SchroderPath("UD"));
    CHECK(ud.peaks == 1);
    CHECK(ud.valleys == 0);
    CHECK(ud.ascents == 1);

    for (const auto& name : path_statistic_names()) {
        CHECK_NOTHROW(path_statistic(s, name));
    }
    CHECK(path_statistic(s, "flats") == 3);
    CHECK_THROWS(path_statistic(s, "humps"));
}

TEST_CASE("valley words")
{
    CHECK(valley_word(SchroderPath(kSamplePath)) == "UUVFUVFDDVUVDVUUFDDD");
    CHECK(valley_word(SchroderPath("UD")) == "UD");
    CHECK(valley_word(SchroderPath("UDUD")) == "UVD");
    CHECK(path_stats(SchroderPath(kSamplePath)).valley_word_U_count == 6);
}

TEST_CASE("peak-flat involution")
{
    CHECK(peak_flat_involution(SchroderPath("F")).to_string() == "UD");
    CHECK(peak_flat_involution(SchroderPath("UD")).to_string() == "F");
    CHECK(peak_flat_involution(SchroderPath("UUDD")).to_string() == "UFD");
    for (int n = 0; n <= 6; ++n) {
        for (const auto& p : schroder_paths(n)) {
            const auto q = peak_flat_involution(p);
            REQUIRE(q.size() == n);
            REQUIRE(peak_flat_involution(q) == p);
            REQUIRE(path_stats(q).flats == path_stats(p).peaks);
            REQUIRE(path_stats(q).peaks == path_stats(p).flats);
        }
    }
}

TEST_CASE("path enumeration")
{
    for (int n = 0; n <= 8; ++n) {
        const auto ps = schroder_paths(n);
        CHECK(BigInt(ps.size()) == schroder(n));
        CHECK(std::set<SchroderPath>(ps.begin(), ps.end()).size() == ps.size());
        for (const auto& p : ps) REQUIRE(p.size() == n);
    }
}

TEST_CASE("BWTree text")
{
    const std::string text = "W(B(,),B(W(,),))";
    const BWTree t = BWTree::parse(text);
    CHECK(t.to_string() == text);
    CHECK(t.size() == 4);
    CHECK(t.black_count() == 2);
    CHECK(t.white_count() == 2);
    CHECK(t.leftmost_branch_colors() == std::vector<Color>{Color::white, Color::black});
    CHECK(t.left_subtree().to_string() == "B(,)");
    CHECK(t.right_subtree().to_string() == "B(W(,),)");

    const BWTree w = BWTree::parse("W(,)");
    CHECK(w.black_count() == 0);
    CHECK(BWTree::parse("").empty());

    CHECK_THROWS_WITH(BWTree::parse("W(,W(,))"), "right-child color clash");
    CHECK_THROWS_WITH(BWTree::parse("W(,"), doctest::Contains("malformed tree"));
    CHECK_THROWS(BWTree::parse("X(,)"));
    CHECK_THROWS(BWTree::parse("W(,)B(,)"));
    CHECK(BWTree::parse("W(B(,))").to_string() == "W(B(,),)");
}

TEST_CASE("fourteen-node sample tree")
{
    const BWTree t = BWTree::parse("W(W(B(W(B(,),B(,W(B(,),B(,)))),W(,)),),B(B(,),W(W(,),)))");
    CHECK(t.valid());
    CHECK(t.size() == 14);
    CHECK(t.black_count() == 7);
}

TEST_CASE("BWTree enumeration and color symmetry")
{
    for (int n = 0; n <= 8; ++n) {
        const auto ts = bw_trees(n);
        CHECK(BigInt(ts.size()) == schroder(n));
        std::map<int, long> by_black;
        std::map<int, long> by_white;
        std::set<std::string> texts;
        for (const auto& t : ts) {
            REQUIRE(t.valid());
            REQUIRE(t.size() == n);
            REQUIRE(BWTree::parse(t.to_string()) == t);
            REQUIRE(t.color_swapped().valid());
            texts.insert(t.to_string());
            ++by_black[t.black_count()];
            ++by_white[t.white_count()];
        }
        CHECK(texts.size() == ts.size());
        CHECK(by_black == by_white);
    }
}

TEST_CASE("increasing 0-1-2 trees")
{
    CHECK(is_increasing_012_tree(Word{0, 1, 0, 3, 2, 1, 2, 4, 6, 4}));
    CHECK_FALSE(is_increasing_012_tree(Word{0, 0, 0}));
    CHECK(is_increasing_012_tree(Word{0, 1, 2}));
    CHECK_FALSE(is_increasing_012_tree(Word{0, 2}));
}

TEST_CASE("restricted growth functions")
{
    const Word v = {1, 2, 3, 1, 3, 2, 4, 5, 6, 3, 4, 2};
    const SetPartition p = rgf_to_partition(v);
    CHECK(format_partition(p) == "{1,4}|{2,6,12}|{3,5,10}|{7,11}|{8}|{9}");
    CHECK(partition_to_rgf(p) == v);
    CHECK(rgf_to_partition(Word{1, 1, 1}) == SetPartition{{1, 2, 3}});
    CHECK(rgf_to_partition(Word{1, 2, 3}) == SetPartition{{1}, {2}, {3}});
    CHECK_FALSE(is_rgf(Word{2, 1}));
    CHECK_FALSE(is_rgf(Word{1, 3}));
    CHECK_THROWS_WITH(rgf_to_partition(Word{1, 3}), doctest::Contains("invalid RGF"));
    CHECK_THROWS(partition_to_rgf(SetPartition{{2}, {1}}));

    for (int n = 1; n <= 8; ++n) {
        long c = 0;
        for_each_rgf(n, [&](std::span<const int> w) {
            REQUIRE(is_rgf(w));
            const auto blocks = rgf_to_partition(w);
            REQUIRE(partition_to_rgf(blocks) == Word(w.begin(), w.end()));
            REQUIRE(static_cast<int>(blocks.size()) == *std::max_element(w.begin(), w.end()));
            ++c;
        });
        CHECK(BigInt(c) == bell(n));
    }
}

TEST_CASE("permutation predicates")
{
    CHECK_FALSE(is_simsun(Word{2, 5, 6, 3, 7, 8, 1, 4}));
    CHECK(is_simsun(Word{1, 2, 3}));
    CHECK_FALSE(is_simsun(Word{3, 2, 1}));
    CHECK(is_down_up(Word{2, 1, 3}));
    CHECK_FALSE(is_down_up(Word{1, 3, 2}));
    CHECK(descents(Word{3, 1, 2, 5, 4}) == 2);
    CHECK(is_permutation(Word{2, 3, 1}));
    CHECK_FALSE(is_permutation(Word{0, 1}));
    CHECK(perm_pattern("132").letters() == Word{0, 2, 1});

    const PatternSet sim = {perm_pattern("132"), perm_pattern("231")};
    CHECK(count_perms(7, [&](std::span<const int> pi) { return avoids_classical(pi, sim); }) == 64);

    const PatternSet boolean = {perm_pattern("321"), perm_pattern("3412")};
    for (int n = 1; n <= 8; ++n) {
        CHECK(BigInt(count_perms(n, [&](std::span<const int> pi) { return avoids_classical(pi, boolean); })) ==
              count_012(n));
    }

    CHECK(avoids_1_23_4(Word{1, 2, 3}));
    CHECK_FALSE(avoids_1_23_4(Word{1, 2, 3, 4}));
    CHECK(avoids_1_23_4(Word{1, 3, 2, 4}));
    for (int n = 1; n <= 8; ++n) {
        CHECK(BigInt(count_perms(n, avoids_1_23_4)) == count_101_110(n));
    }
}

TEST_CASE("separable permutations")
{
    const PatternSet sep = {perm_pattern("2413"), perm_pattern("3142")};
    auto separable = [&](int n) { return count_perms(n, [&](std::span<const int> pi) { return avoids_classical(pi, sep); }); };
    // the count of S_n(2413,3142) is r_{n-1}, one index below r_n
    CHECK(separable(1) == 1);
    CHECK(schroder(1) == 2);
    for (int n = 1; n <= 8; ++n) {
        CHECK(BigInt(separable(n)) == schroder(n - 1));
    }
}
