#ifndef INVPAT_COUNTING_HPP
#define INVPAT_COUNTING_HPP

#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invpat/bigint.hpp"
#include "invpat/core.hpp"

namespace invpat {

/// One index of a CountTable, with inclusive bounds.
struct Dim {
    std::string name;
    int lo = 0;
    int hi = 0;
};

/// Dense table of exact counts over a box of indices.
///
/// Reads outside the box return 0. Indices may start at -1 (the T table's
/// bottom = -1 slot lives at b = -1). `support` narrows which in-box cells
/// are written out by write_csv; it does not affect reads.
class CountTable {
public:
    using Support = std::function<bool(std::span<const int>)>;

    CountTable(std::string name, std::vector<Dim> dims, Support support = {});

    const std::string& name() const noexcept { return name_; }
    const std::vector<Dim>& dims() const noexcept { return dims_; }

    bool in_range(std::span<const int> idx) const noexcept;
    BigInt at(std::span<const int> idx) const;
    BigInt at(int i) const { return at(std::span<const int>(&i, 1)); }
    BigInt at(int i, int j) const;
    BigInt at(int i, int j, int k) const;

    /// Throws std::out_of_range outside the box.
    BigInt& cell(std::span<const int> idx);
    BigInt& cell(int i, int j);
    BigInt& cell(int i, int j, int k);

    /// Header "n,k,value" (index names then value); values as decimal strings.
    void write_csv(std::ostream& out) const;

    /// Visits every in-box cell in row-major order.
    void for_each(const std::function<void(std::span<const int>, const BigInt&)>& fn) const;

private:
    std::size_t offset(std::span<const int> idx) const;

    std::string name_;
    std::vector<Dim> dims_;
    Support support_;
    std::vector<BigInt> cells_;
};

/// Truncated formal power series with exact integer coefficients.
class Series {
public:
    explicit Series(int degree);
    static Series constant(int degree, const BigInt& c);
    static Series monomial(int degree, int power, const BigInt& c = 1);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    BigInt& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    bool operator==(const Series&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

BigInt binomial(int n, int k);

/// C(2n, n) / (n + 1), exact division.
BigInt catalan(int n);

/// a_1 = 1, a_2 = 2, a_n = 3 a_{n-1} - a_{n-2}.
BigInt count_012(int n);

/// c_1 = 1, c_n = c_{n-1} + sum_{j=1}^{n-1} c_j c_{n-j}.
BigInt count_021(int n);

/// T_{n,a,b} over n in [1, n_max], a in [0, n_max-1], b in [-1, n_max-2].
/// Cells count 210-avoiders of length n by (top, bottom).
CountTable table_T(int n_max);
BigInt count_201_210(int n);
BigInt count_201_210(const CountTable& t, int n);

/// A(x) = 1 + (x - x^2) A(x)^3 through degree n_max, by fixed-point iteration.
Series series_102(int n_max);

/// Shift s with count_102(n) = [x^{n+s}] A(x), fixed by agreement with brute
/// force at n = 1..4. Throws std::logic_error if no shift in {-1,0,1} agrees.
int series_102_alignment();
BigInt count_102(int n);

/// E_{n,k}: 000-avoiders of length n with k distinct entries.
CountTable table_E000(int n_max);
BigInt count_000(int n);

/// rs_{n,k}: simsun permutations of [n] with k descents.
CountTable table_simsun(int n_max);

/// d_{n,k} for 1 <= n <= n_max, 0 <= k <= n, with d_{1,1} = 1 and d_{n,0} = 0.
CountTable table_entringer(int n_max);

BigInt count_001(int n);

/// C(n-1, t-1) for t = 1..n.
std::vector<BigInt> by_t_decomposition(int n);

/// S_{n,k}; zero out of range, S_{0,0} = 1.
BigInt stirling(int n, int k);
BigInt bell(int n);
CountTable table_stirling(int n_max);

/// u_{n,k} = u_{n-1,k-1} + k sum_{j=k}^{n-1} u_{n-1,j}.
CountTable table_callan(int n_max);
BigInt count_101_110(int n);

/// Y_{n,k}: 021-avoiders of length n with k maximal entries.
CountTable table_Y(int n_max);

/// r_n via count_021(n + 1).
BigInt schroder(int n);

/// R = 1 + x R + x R^2 through degree n_max.
Series schroder_series(int n_max);

bool has_formula(const Pattern& p);

/// Closed form or recurrence for |I_n(p)|; nullopt when none is known.
std::optional<BigInt> formula_count(const Pattern& p, int n);

/// T, E000, simsun, entringer, stirling, callan, Y.
CountTable table_by_name(std::string_view name, int n_max);
const std::vector<std::string>& table_names();

} // namespace invpat

#endif // INVPAT_COUNTING_HPP
