#include "invpat/core.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>

namespace invpat {

namespace {

int compare(int a, int b) noexcept { return (a > b) - (a < b); }

constexpr std::size_t kMaxPatternLength = 32;

// Places letters a.. of p at increasing positions in [from, limit). When
// `tail` is set the last letter of p is pinned to w[limit], which must be
// consistent with every chosen letter.
bool place(std::span<const int> w, const Pattern& p, std::size_t a, std::size_t from,
           std::size_t limit, bool tail, std::array<std::size_t, kMaxPatternLength>& chosen)
{
    const std::size_t needed = p.size() - (tail ? 1 : 0);
    if (a == needed) {
        return true;
    }
    for (std::size_t i = from; i + (needed - a) <= limit; ++i) {
        bool ok = !tail || compare(w[i], w[limit]) == compare(p[a], p[p.size() - 1]);
        for (std::size_t b = 0; ok && b < a; ++b) {
            ok = compare(w[i], w[chosen[b]]) == compare(p[a], p[b]);
        }
        if (!ok) {
            continue;
        }
        chosen[a] = i;
        if (place(w, p, a + 1, i + 1, limit, tail, chosen)) {
            return true;
        }
    }
    return false;
}

void require_supported(const Pattern& p)
{
    if (p.size() > kMaxPatternLength) {
        throw std::invalid_argument("pattern longer than " + std::to_string(kMaxPatternLength));
    }
}

} // namespace

// ---------------------------------------------------------------- InversionSequence

InversionSequence::InversionSequence(Word entries) : entries_(std::move(entries))
{
    if (!is_valid(entries_)) {
        throw std::invalid_argument("not an inversion sequence: " + format_word(entries_));
    }
}

bool InversionSequence::is_valid(std::span<const int> entries) noexcept
{
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 0 || entries[i] > static_cast<int>(i)) {
            return false;
        }
    }
    return true;
}

InversionSequence InversionSequence::parse(std::string_view text)
{
    return InversionSequence(parse_word(text));
}

std::string InversionSequence::to_string() const { return format_word(entries_); }

// ---------------------------------------------------------------- Pattern

Pattern::Pattern(Word letters) : letters_(std::move(letters))
{
    if (letters_.empty()) {
        throw std::invalid_argument("empty word");
    }
    Word sorted = letters_;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != static_cast<int>(i)) {
            throw std::invalid_argument("pattern is not reduced: " + format_word(letters_));
        }
    }
}

Pattern Pattern::parse(std::string_view text)
{
    if (text.find(',') != std::string_view::npos) {
        return Pattern(parse_word(text));
    }
    if (text.empty()) {
        throw std::invalid_argument("empty word");
    }
    Word letters;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("unknown pattern: " + std::string(text));
        }
        letters.push_back(c - '0');
    }
    return Pattern(std::move(letters));
}

std::string Pattern::to_string() const
{
    const bool digits = std::all_of(letters_.begin(), letters_.end(), [](int v) { return v <= 9; });
    if (!digits) {
        return format_word(letters_);
    }
    std::string out;
    for (int v : letters_) {
        out.push_back(static_cast<char>('0' + v));
    }
    return out;
}

// ---------------------------------------------------------------- word operations

Pattern reduce(std::span<const int> word)
{
    if (word.empty()) {
        throw std::invalid_argument("empty word");
    }
    Word sorted(word.begin(), word.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Word out;
    out.reserve(word.size());
    for (int v : word) {
        out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()));
    }
    return Pattern(std::move(out));
}

bool contains(std::span<const int> word, const Pattern& p)
{
    require_supported(p);
    if (p.size() > word.size()) {
        return false;
    }
    std::array<std::size_t, kMaxPatternLength> chosen{};
    return place(word, p, 0, 0, word.size(), false, chosen);
}

bool contains_ending_at_last(std::span<const int> word, const Pattern& p)
{
    require_supported(p);
    if (p.size() > word.size()) {
        return false;
    }
    std::array<std::size_t, kMaxPatternLength> chosen{};
    return place(word, p, 0, 0, word.size() - 1, true, chosen);
}

bool avoids_all(std::span<const int> word, const PatternSet& ps)
{
    return std::none_of(ps.begin(), ps.end(), [&](const Pattern& p) { return contains(word, p); });
}

Word shift_positive(std::span<const int> word, int t)
{
    Word out(word.begin(), word.end());
    for (int& v : out) {
        if (v == 0) {
            continue;
        }
        if (v + t <= 0) {
            throw std::invalid_argument("shift would produce nonpositive entry");
        }
        v += t;
    }
    return out;
}

// ---------------------------------------------------------------- statistics

StatRecord stats(std::span<const int> e)
{
    StatRecord r;
    const int n = static_cast<int>(e.size());
    if (n == 0) {
        return r;
    }
    std::vector<char> seen(static_cast<std::size_t>(*std::max_element(e.begin(), e.end())) + 1, 0);
    bool nonzero_seen = false;
    int running_max = -1;
    for (int i = 0; i < n; ++i) {
        const int v = e[i];
        if (v == 0) {
            ++r.zeros;
            if (nonzero_seen) {
                ++r.late_zeros;
            } else {
                ++r.leading_zeros;
            }
        } else {
            nonzero_seen = true;
        }
        if (i + 1 < n && v < e[i + 1]) {
            ++r.ascents;
        }
        if (v == i) {
            ++r.maximal_entries;
        }
        if (!seen[v]) {
            seen[v] = 1;
            ++r.distinct_values;
            if (v != 0) {
                ++r.distinct_nonzero_values;
            }
        }
        if (v >= running_max) {
            running_max = v;
            r.weak_ltr_maxima.push_back(i + 1);
            r.top = v;
        } else {
            r.bottom = v;
        }
    }
    r.last_entry = e[n - 1];
    return r;
}

namespace {

struct StatisticName {
    Statistic stat;
    std::string_view name;
};

constexpr std::array<StatisticName, 10> kStatisticNames{{
    {Statistic::zeros, "zeros"},
    {Statistic::ascents, "ascents"},
    {Statistic::maximal_entries, "maximal_entries"},
    {Statistic::distinct_values, "distinct_values"},
    {Statistic::distinct_nonzero_values, "distinct_nonzero_values"},
    {Statistic::late_zeros, "late_zeros"},
    {Statistic::leading_zeros, "leading_zeros"},
    {Statistic::top, "top"},
    {Statistic::bottom, "bottom"},
    {Statistic::last_entry, "last_entry"},
}};

} // namespace

Statistic parse_statistic(std::string_view name)
{
    for (const auto& s : kStatisticNames) {
        if (s.name == name) {
            return s.stat;
        }
    }
    throw std::invalid_argument("unknown statistic: " + std::string(name));
}

std::string_view statistic_name(Statistic s) noexcept
{
    for (const auto& entry : kStatisticNames) {
        if (entry.stat == s) {
            return entry.name;
        }
    }
    return "?";
}

const std::vector<Statistic>& all_statistics()
{
    static const std::vector<Statistic> all = [] {
        std::vector<Statistic> v;
        for (const auto& s : kStatisticNames) {
            v.push_back(s.stat);
        }
        return v;
    }();
    return all;
}

int statistic_value(const StatRecord& r, Statistic s) noexcept
{
    switch (s) {
    case Statistic::zeros: return r.zeros;
    case Statistic::ascents: return r.ascents;
    case Statistic::maximal_entries: return r.maximal_entries;
    case Statistic::distinct_values: return r.distinct_values;
    case Statistic::distinct_nonzero_values: return r.distinct_nonzero_values;
    case Statistic::late_zeros: return r.late_zeros;
    case Statistic::leading_zeros: return r.leading_zeros;
    case Statistic::top: return r.top;
    case Statistic::bottom: return r.bottom;
    case Statistic::last_entry: return r.last_entry;
    }
    return 0;
}

int statistic_of(std::span<const int> e, Statistic s) { return statistic_value(stats(e), s); }

// ---------------------------------------------------------------- blocks

Word BlockDecomposition::concatenate() const
{
    Word out;
    for (const auto& b : blocks) {
        out.insert(out.end(), b.entries.begin(), b.entries.end());
    }
    return out;
}

int BlockDecomposition::maximal_count() const
{
    return static_cast<int>(std::count_if(blocks.begin(), blocks.end(), [](const Block& b) { return b.maximal; }));
}

BlockDecomposition blocks(std::span<const int> e)
{
    static const Pattern p021({0, 2, 1});
    if (contains(e, p021)) {
        throw std::invalid_argument("block decomposition undefined");
    }
    BlockDecomposition d;
    const int n = static_cast<int>(e.size());
    d.blocks.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        d.blocks[k].value = k;
    }
    int current = 0;
    for (int i = 0; i < n; ++i) {
        const int v = e[i];
        if (v != 0 && v != current) {
            current = v;
        }
        Block& b = d.blocks[current];
        if (b.entries.empty()) {
            b.start = i + 1;
        }
        b.entries.push_back(v);
    }
    for (auto& b : d.blocks) {
        b.maximal = !b.entries.empty() && b.start == b.value + 1;
    }
    return d;
}

// ---------------------------------------------------------------- text

Word parse_word(std::string_view text)
{
    Word out;
    if (text.empty()) {
        return out;
    }
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!item.empty() && item.front() == ' ') {
            item.remove_prefix(1);
        }
        while (!item.empty() && item.back() == ' ') {
            item.remove_suffix(1);
        }
        int value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 0) {
            throw std::invalid_argument("malformed sequence text: " + std::string(text));
        }
        out.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

std::string format_word(std::span<const int> w, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) {
            out.push_back(sep);
        }
        out += std::to_string(w[i]);
    }
    return out;
}

} // namespace invpat
