#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

#include "invpat/counting.hpp"
#include "invpat/enumerator.hpp"
#include "invpat/structures.hpp"

using namespace invpat;

namespace {

Histogram hist(int n, const char* p, Statistic s) { return distribution(n, {Pattern::parse(p)}, s); }

BigInt bin(const Histogram& h, int k)
{
    const auto it = h.bins.find(k);
    return it == h.bins.end() ? BigInt(0) : it->second;
}

} // namespace

TEST_CASE("binomial and catalan")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(0, 0) == 1);
    const std::vector<int> cat = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int n = 0; n < static_cast<int>(cat.size()); ++n) CHECK(catalan(n) == cat[static_cast<std::size_t>(n)]);
}

TEST_CASE("CountTable boundaries")
{
    const CountTable t = table_stirling(5);
    CHECK(t.at(4, 2) == 7);
    CHECK(t.at(9, 2) == 0);
    CHECK(t.at(4, -3) == 0);
    CountTable copy = t;
    CHECK_THROWS_AS(copy.cell(6, 1), std::out_of_range);

    std::ostringstream csv;
    table_Y(2).write_csv(csv);
    CHECK(csv.str() == "n,k,value\n1,1,1\n2,1,1\n2,2,1\n");

    for (const auto& name : table_names()) {
        CHECK(table_by_name(name, 5).name() == name);
    }
    CHECK_THROWS(table_by_name("nope", 4));
}

TEST_CASE("012")
{
    CHECK(count_012(1) == 1);
    CHECK(count_012(4) == 13);
    CHECK(count_012(7) == 233);
}

TEST_CASE("021")
{
    CHECK(count_021(2) == 2);
    CHECK(count_021(4) == 22);
    CHECK(count_021(7) == 1806);
}

TEST_CASE("formulas equal brute force, n <= 9")
{
    for (const char* p : {"012", "021", "201", "210", "000", "001", "011", "101", "110", "102"}) {
        const Pattern pat = Pattern::parse(p);
        REQUIRE(has_formula(pat));
        for (int n = 1; n <= 9; ++n) {
            CHECK_MESSAGE(*formula_count(pat, n) == count_avoiders(n, {pat}), p << " n=" << n);
        }
    }
    for (const char* p : {"120", "010", "100"}) {
        CHECK_FALSE(has_formula(Pattern::parse(p)));
        CHECK_FALSE(formula_count(Pattern::parse(p), 4).has_value());
    }
}

TEST_CASE("T table")
{
    const CountTable t = table_T(12);
    CHECK(t.at(3, 1, -1) == 2);
    CHECK(count_201_210(7) == 4306);
    CHECK(count_201_210(12) == 124938648);
    const std::vector<long> a263777 = {1, 2, 6, 24, 118, 674, 4306, 29990, 223668, 1763468, 14558588, 124938648};
    for (int n = 1; n <= 12; ++n) {
        CHECK(count_201_210(t, n) == a263777[static_cast<std::size_t>(n - 1)]);
    }
    for (int n = 1; n <= 10; ++n) {
        const CountTable tn = table_T(n);
        BigInt s = 0;
        for (int a = 0; a < n; ++a) s += tn.at(n, a, -1);
        CHECK(s == catalan(n));
        CHECK(tn.at(n, n, -1) == 0);
    }
}

TEST_CASE("T cells equal top/bottom counts on I_n(210), n <= 8")
{
    const CountTable t = table_T(8);
    for (int n = 1; n <= 8; ++n) {
        std::map<std::pair<int, int>, BigInt> seen;
        for_each_avoider(n, {Pattern::parse("210")}, [&](std::span<const int> e) {
            const auto s = stats(e);
            seen[{s.top, s.bottom}] += 1;
        });
        for (int a = 0; a < n; ++a) {
            for (int b = -1; b < std::max(a, 0); ++b) {
                const auto it = seen.find({a, b});
                CHECK_MESSAGE(t.at(n, a, b) == (it == seen.end() ? BigInt(0) : it->second),
                              "n=" << n << " a=" << a << " b=" << b);
            }
        }
        BigInt total = 0;
        for (const auto& [key, c] : seen) total += c;
        CHECK(total == count_201_210(n));
    }
}

TEST_CASE("102 series")
{
    CHECK(count_102(3) == 6);
    CHECK(count_102(7) == 1694);
    CHECK(count_102(9) == 36168);
    const std::vector<int> printed = {1, 2, 6, 22, 89, 381, 1694, 7744, 36168};
    for (int n = 1; n <= 9; ++n) CHECK(count_102(n) == printed[static_cast<std::size_t>(n - 1)]);

    const int N = 20;
    const Series a = series_102(N);
    const Series rhs = Series::constant(N, 1) + (Series::monomial(N, 1) - Series::monomial(N, 2)) * a * a * a;
    CHECK(rhs == a);
    // A = 1 + x + 2x^2 + ..., so the coefficient of x^n is count_102(n)
    CHECK(series_102_alignment() == 0);
    CHECK(a[0] == 1);
}

TEST_CASE("000 and E table")
{
    CHECK(count_000(3) == 5);
    CHECK(count_000(7) == 1385);
    const CountTable e = table_E000(10);
    for (int n = 0; n <= 6; ++n) CHECK(e.at(n, n) == 1);
    for (int n = 1; n <= 9; ++n) {
        const Histogram h = hist(n, "000", Statistic::distinct_values);
        for (int k = 0; k <= n; ++k) CHECK(e.at(n, k) == bin(h, k));
    }
}

TEST_CASE("simsun table")
{
    const CountTable rs = table_simsun(10);
    const CountTable e = table_E000(10);
    for (int n = 0; n <= 8; ++n) CHECK(rs.at(n, 0) == 1);
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) CHECK(rs.at(n, k) == e.at(n, n - k));
    BigInt s7 = 0;
    for (int k = 0; k <= 7; ++k) s7 += rs.at(7, k);
    CHECK(s7 == 1385);

    for (int n = 1; n <= 8; ++n) {
        std::map<int, BigInt> by_desc;
        for_each_permutation(n, [&](std::span<const int> pi) {
            if (is_simsun(pi)) by_desc[descents(pi)] += 1;
        });
        for (int k = 0; k <= n; ++k) {
            CHECK(rs.at(n, k) == (by_desc.count(k) ? by_desc[k] : BigInt(0)));
        }
    }
}

TEST_CASE("Entringer table")
{
    const CountTable d = table_entringer(8);
    CHECK(d.at(1, 1) == 1);
    CHECK(d.at(2, 1) + d.at(2, 2) == 2);
    for (int n = 1; n <= 8; ++n) {
        BigInt s = 0;
        for (int k = 0; k <= n; ++k) s += d.at(n, k);
        CHECK(s == count_000(n));
        CHECK(d.at(n, 0) == 0);
    }
    // down/up permutations of [n+1] by first entry
    for (int n = 1; n <= 7; ++n) {
        std::map<int, BigInt> by_first;
        for_each_permutation(n + 1, [&](std::span<const int> pi) {
            if (is_down_up(pi)) by_first[pi[0] - 1] += 1;
        });
        for (int k = 1; k <= n; ++k) CHECK(d.at(n, k) == (by_first.count(k) ? by_first[k] : BigInt(0)));
    }
}

TEST_CASE("001")
{
    CHECK(count_001(1) == 1);
    CHECK(count_001(7) == 64);
    CHECK(by_t_decomposition(5) == std::vector<BigInt>{1, 4, 6, 4, 1});
    for (int n = 1; n <= 12; ++n) {
        BigInt s = 0;
        for (const auto& x : by_t_decomposition(n)) s += x;
        CHECK(s == count_001(n));
    }
}

TEST_CASE("Stirling and Bell")
{
    CHECK(stirling(4, 2) == 7);
    CHECK(bell(7) == 877);
    for (int n = 1; n <= 9; ++n) CHECK(stirling(n, n) == 1);
    CHECK(stirling(4, 0) == 0);
    CHECK(stirling(4, 5) == 0);
    for (int n = 1; n <= 9; ++n) {
        const Histogram h = hist(n, "011", Statistic::zeros);
        for (int k = 1; k <= n; ++k) CHECK(stirling(n, k) == bin(h, k));
    }
}

TEST_CASE("Callan table")
{
    CHECK(count_101_110(7) == 3207);
    const CountTable u = table_callan(10);
    for (int n = 0; n <= 8; ++n) CHECK(u.at(n, n) == 1);
    for (int n = 1; n <= 8; ++n) CHECK(u.at(n, 0) == 0);
    for (int n = 1; n <= 9; ++n) {
        const Histogram z101 = hist(n, "101", Statistic::zeros);
        const Histogram z110 = hist(n, "110", Statistic::zeros);
        for (int k = 1; k <= n; ++k) {
            CHECK(u.at(n, k) == bin(z101, k));
            CHECK(u.at(n, k) == bin(z110, k));
        }
    }
    using boost::multiprecision::cpp_rational;
    for (int n = 2; n <= 10; ++n) {
        for (int k = 1; k < n; ++k) {
            const cpp_rational lhs = cpp_rational(u.at(n, k + 1) + k * u.at(n - 1, k));
            const cpp_rational rhs = cpp_rational(k + 1, k) * cpp_rational(u.at(n, k) - u.at(n - 1, k - 1));
            CHECK_MESSAGE(lhs == rhs, "n=" << n << " k=" << k);
        }
    }
}

TEST_CASE("Y table")
{
    const CountTable y = table_Y(9);
    CHECK(y.at(1, 1) == 1);
    BigInt s7 = 0;
    for (int k = 1; k <= 7; ++k) s7 += y.at(7, k);
    CHECK(s7 == 1806);
    for (int n = 1; n <= 8; ++n) {
        const Histogram h = hist(n, "021", Statistic::maximal_entries);
        for (int k = 1; k <= n; ++k) CHECK_MESSAGE(y.at(n, k) == bin(h, k), "n=" << n << " k=" << k);
    }
}

TEST_CASE("Schroder numbers")
{
    CHECK(schroder(0) == 1);
    CHECK(schroder(3) == 22);
    CHECK(schroder(6) == 1806);
    const Series r = schroder_series(15);
    for (int n = 0; n <= 15; ++n) CHECK(r[n] == schroder(n));
    const Series x = Series::monomial(15, 1);
    CHECK(Series::constant(15, 1) + x * r + x * r * r == r);
}

TEST_CASE("bad arguments")
{
    CHECK_THROWS(count_012(0));
    CHECK_THROWS(bell(-1));
    CHECK_THROWS(Series(-1));
}
