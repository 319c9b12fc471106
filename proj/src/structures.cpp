#include "invpat/structures.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace invpat {

// ---------------------------------------------------------------- paths

bool SchroderPath::is_valid(std::string_view steps) noexcept
{
    int h = 0;
    for (char c : steps) {
        if (c == 'U') {
            ++h;
        } else if (c == 'D') {
            if (--h < 0) {
                return false;
            }
        } else if (c != 'F') {
            return false;
        }
    }
    return h == 0;
}

SchroderPath::SchroderPath(std::string steps) : steps_(std::move(steps))
{
    if (!is_valid(steps_)) {
        throw std::invalid_argument("invalid step word: " + steps_);
    }
}

int SchroderPath::size() const noexcept
{
    int n = 0;
    for (char c : steps_) {
        n += c != 'D';
    }
    return n;
}

PathStats path_stats(const SchroderPath& p)
{
    const std::string& s = p.steps();
    PathStats r;
    int h = 0;
    bool leading = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        const char prev = i > 0 ? s[i - 1] : '\0';
        if (c != 'U') {
            leading = false;
        }
        switch (c) {
        case 'U':
            if (leading) {
                ++r.initial_up_run;
            }
            if (prev != 'U') {
                ++r.ascents;
            }
            if (prev == 'D') {
                ++r.valleys;
            }
            ++h;
            break;
        case 'D':
            if (prev == 'U') {
                ++r.peaks;
            }
            --h;
            break;
        default:
            ++r.flats;
            if (h == 0) {
                ++r.flats_at_height0;
            }
            break;
        }
    }
    r.valley_word_U_count = static_cast<int>(std::count(s.begin(), s.end(), 'U')) - r.valleys;
    return r;
}

const std::vector<std::string>& path_statistic_names()
{
    static const std::vector<std::string> names = {"flats",  "peaks",           "valleys",
                                                   "initial_up_run", "ascents", "flats_at_height0",
                                                   "valley_word_U_count"};
    return names;
}

int path_statistic(const PathStats& s, std::string_view name)
{
    if (name == "flats") return s.flats;
    if (name == "peaks") return s.peaks;
    if (name == "valleys") return s.valleys;
    if (name == "initial_up_run") return s.initial_up_run;
    if (name == "ascents") return s.ascents;
    if (name == "flats_at_height0") return s.flats_at_height0;
    if (name == "valley_word_U_count") return s.valley_word_U_count;
    throw std::invalid_argument("unknown path statistic: " + std::string(name));
}

std::string valley_word(const SchroderPath& p)
{
    const std::string& s = p.steps();
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'D' && i + 1 < s.size() && s[i + 1] == 'U') {
            out += 'V';
            ++i;
        } else {
            out += s[i];
        }
    }
    return out;
}

SchroderPath peak_flat_involution(const SchroderPath& p)
{
    const std::string& s = p.steps();
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'U' && i + 1 < s.size() && s[i + 1] == 'D') {
            out += 'F';
            ++i;
        } else if (s[i] == 'F') {
            out += "UD";
        } else {
            out += s[i];
        }
    }
    return SchroderPath(std::move(out));
}

namespace {

const std::vector<std::string>& path_words(int n, std::vector<std::vector<std::string>>& memo)
{
    auto& slot = memo[static_cast<std::size_t>(n)];
    if (!slot.empty() || n < 0) {
        return slot;
    }
    if (n == 0) {
        slot.push_back("");
        return slot;
    }
    for (const auto& rest : path_words(n - 1, memo)) {
        slot.push_back("F" + rest);
    }
    for (int a = 0; a <= n - 1; ++a) {
        const auto& inner = path_words(a, memo);
        const auto& tail = path_words(n - 1 - a, memo);
        for (const auto& x : inner) {
            for (const auto& y : tail) {
                slot.push_back("U" + x + "D" + y);
            }
        }
    }
    return slot;
}

} // namespace

std::vector<SchroderPath> schroder_paths(int n)
{
    if (n < 0) {
        throw std::invalid_argument("path size must be nonnegative");
    }
    std::vector<std::vector<std::string>> memo(static_cast<std::size_t>(n) + 1);
    std::vector<SchroderPath> out;
    for (const auto& w : path_words(n, memo)) {
        out.emplace_back(w);
    }
    return out;
}

// ---------------------------------------------------------------- BW trees

int BWTree::copy_from(const BWTree& src, int at)
{
    if (at < 0) {
        return -1;
    }
    const Node& s = src.nodes_[static_cast<std::size_t>(at)];
    const int idx = static_cast<int>(nodes_.size());
    nodes_.push_back({s.color, -1, -1});
    const int l = copy_from(src, s.left);
    const int r = copy_from(src, s.right);
    nodes_[static_cast<std::size_t>(idx)].left = l;
    nodes_[static_cast<std::size_t>(idx)].right = r;
    return idx;
}

BWTree BWTree::join(Color root, const BWTree& left, const BWTree& right)
{
    BWTree t;
    t.nodes_.reserve(static_cast<std::size_t>(1 + left.size() + right.size()));
    t.nodes_.push_back({root, -1, -1});
    t.root_ = 0;
    const int l = t.copy_from(left, left.root_);
    const int r = t.copy_from(right, right.root_);
    t.nodes_[0].left = l;
    t.nodes_[0].right = r;
    return t;
}

BWTree BWTree::left_subtree() const
{
    BWTree t;
    if (!empty()) {
        t.root_ = t.copy_from(*this, node(root_).left);
    }
    return t;
}

BWTree BWTree::right_subtree() const
{
    BWTree t;
    if (!empty()) {
        t.root_ = t.copy_from(*this, node(root_).right);
    }
    return t;
}

bool BWTree::valid() const noexcept
{
    for (const Node& n : nodes_) {
        if (n.right >= 0 && nodes_[static_cast<std::size_t>(n.right)].color == n.color) {
            return false;
        }
    }
    return true;
}

void BWTree::validate() const
{
    if (!valid()) {
        throw std::invalid_argument("right-child color clash");
    }
}

namespace {

void write_node(const BWTree& t, int i, std::string& out)
{
    const auto& n = t.node(i);
    out += n.color == Color::black ? 'B' : 'W';
    out += '(';
    if (n.left >= 0) {
        write_node(t, n.left, out);
    }
    out += ',';
    if (n.right >= 0) {
        write_node(t, n.right, out);
    }
    out += ')';
}

struct TreeParser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const char* what) const
    {
        throw std::invalid_argument("malformed tree at offset " + std::to_string(pos) + ": " + what);
    }

    bool at_color() const { return pos < text.size() && (text[pos] == 'B' || text[pos] == 'W'); }

    BWTree node()
    {
        if (!at_color()) {
            fail("expected B or W");
        }
        const Color c = text[pos++] == 'B' ? Color::black : Color::white;
        if (pos >= text.size() || text[pos] != '(') {
            fail("expected '('");
        }
        ++pos;
        BWTree left;
        BWTree right;
        if (at_color()) {
            left = node();
        }
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            if (at_color()) {
                right = node();
            }
        }
        if (pos >= text.size() || text[pos] != ')') {
            fail("expected ')'");
        }
        ++pos;
        return BWTree::join(c, left, right);
    }
};

} // namespace

BWTree BWTree::parse(std::string_view text)
{
    if (text.empty()) {
        return {};
    }
    TreeParser p{text};
    BWTree t = p.node();
    if (p.pos != text.size()) {
        p.fail("trailing text");
    }
    t.validate();
    return t;
}

std::string BWTree::to_string() const
{
    std::string out;
    if (!empty()) {
        write_node(*this, root_, out);
    }
    return out;
}

int BWTree::black_count() const noexcept
{
    return static_cast<int>(
        std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.color == Color::black; }));
}

std::vector<Color> BWTree::leftmost_branch_colors() const
{
    std::vector<Color> out;
    for (int i = root_; i >= 0; i = nodes_[static_cast<std::size_t>(i)].left) {
        out.push_back(nodes_[static_cast<std::size_t>(i)].color);
    }
    return out;
}

BWTree BWTree::color_swapped() const
{
    BWTree t = *this;
    for (Node& n : t.nodes_) {
        n.color = n.color == Color::black ? Color::white : Color::black;
    }
    return t;
}

std::vector<BWTree> bw_trees(int n)
{
    if (n < 0) {
        throw std::invalid_argument("tree size must be nonnegative");
    }
    // all[m]: every valid tree with m nodes.
    std::vector<std::vector<BWTree>> all(static_cast<std::size_t>(n) + 1);
    all[0].emplace_back();
    for (int m = 1; m <= n; ++m) {
        for (Color c : {Color::black, Color::white}) {
            for (int l = 0; l <= m - 1; ++l) {
                for (const auto& left : all[static_cast<std::size_t>(l)]) {
                    for (const auto& right : all[static_cast<std::size_t>(m - 1 - l)]) {
                        if (!right.empty() && right.node(right.root()).color == c) {
                            continue;
                        }
                        all[static_cast<std::size_t>(m)].push_back(BWTree::join(c, left, right));
                    }
                }
            }
        }
    }
    return all[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------- 0-1-2 trees

bool is_increasing_012_tree(std::span<const int> parents) noexcept
{
    std::vector<int> children(parents.size() + 1, 0);
    for (std::size_t i = 0; i < parents.size(); ++i) {
        const int p = parents[i];
        if (p < 0 || p > static_cast<int>(i)) {
            return false;
        }
        if (++children[static_cast<std::size_t>(p)] > 2) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- RGFs

bool is_rgf(std::span<const int> v) noexcept
{
    int mx = 0;
    for (int x : v) {
        if (x < 1 || x > mx + 1) {
            return false;
        }
        mx = std::max(mx, x);
    }
    return true;
}

SetPartition rgf_to_partition(std::span<const int> v)
{
    if (!is_rgf(v)) {
        throw std::invalid_argument("invalid RGF: " + format_word(v));
    }
    SetPartition blocks;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto b = static_cast<std::size_t>(v[i]);
        if (blocks.size() < b) {
            blocks.resize(b);
        }
        blocks[b - 1].push_back(static_cast<int>(i) + 1);
    }
    return blocks;
}

Word partition_to_rgf(const SetPartition& blocks)
{
    std::size_t n = 0;
    for (const auto& b : blocks) {
        n += b.size();
    }
    Word v(n, 0);
    int prev_min = 0;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const auto& b = blocks[k];
        if (b.empty() || b.front() <= prev_min) {
            throw std::invalid_argument("partition blocks must be nonempty and ordered by minimum");
        }
        prev_min = b.front();
        for (int x : b) {
            if (x < b.front() || x < 1 || static_cast<std::size_t>(x) > n || v[static_cast<std::size_t>(x - 1)] != 0) {
                throw std::invalid_argument("not a set partition of [n]");
            }
            v[static_cast<std::size_t>(x - 1)] = static_cast<int>(k) + 1;
        }
    }
    return v;
}

std::string format_partition(const SetPartition& blocks)
{
    std::string out;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (k > 0) {
            out += '|';
        }
        out += '{' + format_word(blocks[k]) + '}';
    }
    return out;
}

namespace {

void rgf_rec(Word& v, int n, int mx, const std::function<void(std::span<const int>)>& visit)
{
    if (static_cast<int>(v.size()) == n) {
        visit(v);
        return;
    }
    for (int x = 1; x <= mx + 1; ++x) {
        v.push_back(x);
        rgf_rec(v, n, std::max(mx, x), visit);
        v.pop_back();
    }
}

} // namespace

void for_each_rgf(int n, const std::function<void(std::span<const int>)>& visit)
{
    Word v;
    rgf_rec(v, n, 0, visit);
}

// ---------------------------------------------------------------- permutations

bool is_permutation(std::span<const int> pi) noexcept
{
    std::vector<bool> seen(pi.size() + 1, false);
    for (int x : pi) {
        if (x < 1 || static_cast<std::size_t>(x) > pi.size() || seen[static_cast<std::size_t>(x)]) {
            return false;
        }
        seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

Pattern perm_pattern(std::string_view text)
{
    Word w;
    for (char c : text) {
        if (c < '1' || c > '9') {
            throw std::invalid_argument("unknown pattern: " + std::string(text));
        }
        w.push_back(c - '0');
    }
    if (!is_permutation(w)) {
        throw std::invalid_argument("not a permutation pattern: " + std::string(text));
    }
    return reduce(w);
}

bool avoids_classical(std::span<const int> pi, const PatternSet& sigmas)
{
    return avoids_all(pi, sigmas);
}

bool avoids_1_23_4(std::span<const int> pi) noexcept
{
    const auto n = pi.size();
    for (std::size_t j = 1; j + 2 < n; ++j) {
        const int b = pi[j];
        const int c = pi[j + 1];
        if (b >= c) {
            continue;
        }
        bool low = false;
        for (std::size_t i = 0; i < j && !low; ++i) {
            low = pi[i] < b;
        }
        if (!low) {
            continue;
        }
        for (std::size_t k = j + 2; k < n; ++k) {
            if (pi[k] > c) {
                return false;
            }
        }
    }
    return true;
}

namespace {

bool has_double_descent(const Word& w)
{
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
        if (w[i - 1] > w[i] && w[i] > w[i + 1]) {
            return true;
        }
    }
    return false;
}

} // namespace

bool is_simsun(std::span<const int> pi)
{
    Word w(pi.begin(), pi.end());
    for (int top = static_cast<int>(w.size()); top >= 1; --top) {
        if (has_double_descent(w)) {
            return false;
        }
        w.erase(std::remove(w.begin(), w.end(), top), w.end());
    }
    return true;
}

bool is_down_up(std::span<const int> pi) noexcept
{
    for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
        const bool down = i % 2 == 0;
        if (down ? pi[i] < pi[i + 1] : pi[i] > pi[i + 1]) {
            return false;
        }
    }
    return true;
}

int descents(std::span<const int> pi) noexcept
{
    int d = 0;
    for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
        d += pi[i] > pi[i + 1];
    }
    return d;
}

void for_each_permutation(int n, const std::function<void(std::span<const int>)>& visit)
{
    Permutation p(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(p.begin(), p.end(), 1);
    do {
        visit(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

} // namespace invpat
