#ifndef INVPAT_CORE_HPP
#define INVPAT_CORE_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invpat {

using Word = std::vector<int>;

/// An integer word (e_1, ..., e_n) with 0 <= e_i < i.
///
/// Storage is 0-based: entry(0) is e_1. Text form is comma separated,
/// e.g. "0,1,0,2". The empty sequence (n = 0) is valid.
class InversionSequence {
public:
    InversionSequence() = default;

    /// Throws std::invalid_argument if some e_i is outside [0, i-1].
    explicit InversionSequence(Word entries);

    static bool is_valid(std::span<const int> entries) noexcept;
    static InversionSequence parse(std::string_view text);

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    int operator[](std::size_t i) const noexcept { return entries_[i]; }
    const Word& entries() const noexcept { return entries_; }
    operator std::span<const int>() const noexcept { return entries_; }

    std::string to_string() const;

    auto operator<=>(const InversionSequence&) const = default;

private:
    Word entries_;
};

/// A reduced word: its distinct letters are exactly {0, 1, ..., m}.
class Pattern {
public:
    /// Throws std::invalid_argument unless `letters` is nonempty and reduced.
    explicit Pattern(Word letters);

    /// Digit string ("021") or comma-separated letters ("0,10,3,...").
    static Pattern parse(std::string_view text);

    std::size_t size() const noexcept { return letters_.size(); }
    int operator[](std::size_t i) const noexcept { return letters_[i]; }
    const Word& letters() const noexcept { return letters_; }

    std::string to_string() const;

    auto operator<=>(const Pattern&) const = default;

private:
    Word letters_;
};

using PatternSet = std::vector<Pattern>;

/// The order-isomorphic reduced word. Throws "empty word" on empty input.
Pattern reduce(std::span<const int> word);

/// True iff some subsequence of `word` reduces to `p`.
bool contains(std::span<const int> word, const Pattern& p);
inline bool avoids(std::span<const int> word, const Pattern& p) { return !contains(word, p); }
bool avoids_all(std::span<const int> word, const PatternSet& ps);

/// True iff an occurrence of `p` uses the last letter of `word`.
bool contains_ending_at_last(std::span<const int> word, const Pattern& p);

/// sigma_t: zeros stay, positive entries move by t.
Word shift_positive(std::span<const int> word, int t);

/// Every statistic used on inversion sequences.
struct StatRecord {
    int zeros = 0;
    int ascents = 0;
    int maximal_entries = 0;
    int distinct_values = 0;
    int distinct_nonzero_values = 0;
    int late_zeros = 0;
    int leading_zeros = 0;
    int top = 0;
    int bottom = -1;
    int last_entry = 0;
    std::vector<int> weak_ltr_maxima; // 1-based positions
};

StatRecord stats(std::span<const int> e);

enum class Statistic {
    zeros,
    ascents,
    maximal_entries,
    distinct_values,
    distinct_nonzero_values,
    late_zeros,
    leading_zeros,
    top,
    bottom,
    last_entry,
};

/// Throws std::invalid_argument("unknown statistic: ...").
Statistic parse_statistic(std::string_view name);
std::string_view statistic_name(Statistic s) noexcept;
const std::vector<Statistic>& all_statistics();
int statistic_value(const StatRecord& r, Statistic s) noexcept;
int statistic_of(std::span<const int> e, Statistic s);

struct Block {
    int value = 0;
    int start = 0; // 1-based; 0 when the block is empty
    Word entries;
    bool maximal = false;
};

/// e = b_0 b_1 ... b_{n-1} for e avoiding 021.
struct BlockDecomposition {
    std::vector<Block> blocks;

    Word concatenate() const;
    int maximal_count() const;
};

/// Throws std::invalid_argument("block decomposition undefined") if e contains 021.
BlockDecomposition blocks(std::span<const int> e);

/// Comma-separated nonnegative integers. Throws on malformed text.
Word parse_word(std::string_view text);
std::string format_word(std::span<const int> w, char sep = ',');

} // namespace invpat

#endif // INVPAT_CORE_HPP
