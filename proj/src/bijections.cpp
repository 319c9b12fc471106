#include "invpat/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace invpat {

namespace {

const Pattern& p021()
{
    static const Pattern p({0, 2, 1});
    return p;
}

void require_inversion_sequence(std::span<const int> e)
{
    if (!InversionSequence::is_valid(e)) {
        throw std::invalid_argument("not an inversion sequence: " + format_word(e));
    }
}

void require_avoids(std::span<const int> e, const Pattern& p)
{
    require_inversion_sequence(e);
    if (e.empty()) {
        throw std::invalid_argument("empty inversion sequence");
    }
    if (contains(e, p)) {
        throw std::invalid_argument("input contains " + p.to_string());
    }
}

Word concat(std::initializer_list<std::span<const int>> parts)
{
    Word out;
    for (auto s : parts) {
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------- theta

InversionSequence theta(std::span<const int> pi)
{
    if (!is_permutation(pi)) {
        throw std::invalid_argument("not a permutation: " + format_word(pi));
    }
    Word e(pi.size(), 0);
    for (std::size_t i = 0; i < pi.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            e[i] += pi[j] > pi[i];
        }
    }
    return InversionSequence(std::move(e));
}

Permutation theta_inv(std::span<const int> e)
{
    require_inversion_sequence(e);
    const int n = static_cast<int>(e.size());
    Word remaining(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        remaining[static_cast<std::size_t>(v)] = v + 1;
    }
    Permutation pi(static_cast<std::size_t>(n));
    // pi_i is the (e_i + 1)-th largest value not used by later positions.
    for (int i = n - 1; i >= 0; --i) {
        const auto idx = remaining.size() - 1 - static_cast<std::size_t>(e[static_cast<std::size_t>(i)]);
        pi[static_cast<std::size_t>(i)] = remaining[idx];
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return pi;
}

// ---------------------------------------------------------------- rho

namespace {

std::string rho_rec(std::span<const int> e)
{
    const int n = static_cast<int>(e.size());
    if (n <= 1) {
        return "";
    }
    int j = 0;
    for (int i = n - 1; i >= 0; --i) {
        if (e[static_cast<std::size_t>(i)] == i) {
            j = i;
            break;
        }
    }
    if (j == 0) {
        return "F" + rho_rec(e.subspan(1));
    }
    Word rest{0};
    rest.insert(rest.end(), e.begin() + j + 1, e.end());
    return "U" + rho_rec(e.first(static_cast<std::size_t>(j))) + "D" + rho_rec(shift_positive(rest, 1 - j));
}

Word rho_inv_rec(std::string_view s)
{
    if (s.empty()) {
        return {0};
    }
    if (s.front() == 'F') {
        return concat({Word{0}, rho_inv_rec(s.substr(1))});
    }
    // s = U A D B with D the first return to the axis.
    std::size_t ret = 0;
    int h = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        h += s[i] == 'U' ? 1 : s[i] == 'D' ? -1 : 0;
        if (h == 0) {
            ret = i;
            break;
        }
    }
    const Word a = rho_inv_rec(s.substr(1, ret - 1));
    const Word f = rho_inv_rec(s.substr(ret + 1));
    const int j = static_cast<int>(a.size());
    const Word tail = shift_positive(std::span<const int>(f).subspan(1), j - 1);
    return concat({a, Word{j}, tail});
}

} // namespace

SchroderPath rho(std::span<const int> e)
{
    require_avoids(e, p021());
    return SchroderPath(rho_rec(e));
}

InversionSequence rho_inv(const SchroderPath& p) { return InversionSequence(rho_inv_rec(p.steps())); }

// ---------------------------------------------------------------- phi

namespace {

// Builds e block by block; blocks[v] holds b_v for every value seen so far.
struct BlockBuilder {
    std::vector<std::pair<int, Word>> blocks{{0, Word{0}}};
    int length = 1;

    Word& block(int value)
    {
        for (auto& [v, w] : blocks) {
            if (v == value) {
                return w;
            }
        }
        throw std::logic_error("missing block");
    }

    Word flatten() const
    {
        Word e;
        for (const auto& [v, w] : blocks) {
            e.insert(e.end(), w.begin(), w.end());
        }
        return e;
    }
};

} // namespace

InversionSequence phi(const SchroderPath& p)
{
    const std::string word = valley_word(p);
    BlockBuilder b;
    std::vector<int> m{0};
    for (char c : word) {
        switch (c) {
        case 'U':
            b.blocks.push_back({b.length, Word{b.length}});
            m.push_back(b.length);
            ++b.length;
            break;
        case 'D':
            m.pop_back();
            break;
        case 'V':
            b.block(m.back()).push_back(0);
            ++b.length;
            break;
        default:
            b.block(m.back()).push_back(m.back());
            ++b.length;
            break;
        }
    }
    return InversionSequence(b.flatten());
}

SchroderPath phi_inv(std::span<const int> e)
{
    require_avoids(e, p021());
    const BlockDecomposition target = blocks(e);

    std::vector<const Block*> pending; // nonzero nonempty blocks by value
    for (const auto& blk : target.blocks) {
        if (blk.value > 0 && !blk.entries.empty()) {
            pending.push_back(&blk);
        }
    }
    const Block& b0 = target.blocks.front();

    struct Open {
        const Block* blk;
        std::size_t placed;
    };
    std::vector<Open> m{{&b0, 1}};
    std::size_t next = 0;
    int length = 1;
    const int n = static_cast<int>(e.size());
    std::string word;

    while (length < n || m.size() > 1) {
        if (next < pending.size() && pending[next]->value == length) {
            word += 'U';
            m.push_back({pending[next], 1});
            ++next;
            ++length;
            continue;
        }
        Open& top = m.back();
        if (top.placed < top.blk->entries.size()) {
            const int x = top.blk->entries[top.placed++];
            word += x == 0 && top.blk->value != 0 ? 'V' : 'F';
            ++length;
            continue;
        }
        if (m.size() == 1) {
            throw std::logic_error("phi_inv: no valid move");
        }
        word += 'D';
        m.pop_back();
    }

    std::string steps;
    for (char c : word) {
        steps += c == 'V' ? std::string("DU") : std::string(1, c);
    }
    return SchroderPath(std::move(steps));
}

// ---------------------------------------------------------------- kappa

Word kappa(std::span<const int> e)
{
    require_avoids(e, Pattern({0, 1, 1}));
    Word v;
    std::vector<bool> used(e.size() + 1, false);
    int zeros = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const int x = e[i];
        if (x == 0) {
            v.push_back(zeros + 1);
            ++zeros;
            continue;
        }
        // x is the r-th smallest value of [i] not yet used.
        int r = 0;
        for (int a = 1; a <= x; ++a) {
            r += !used[static_cast<std::size_t>(a)];
        }
        v.push_back(r);
        used[static_cast<std::size_t>(x)] = true;
    }
    return v;
}

InversionSequence kappa_inv(std::span<const int> v)
{
    if (v.empty() || !is_rgf(v)) {
        throw std::invalid_argument("invalid RGF: " + format_word(v));
    }
    Word e;
    std::vector<bool> used(v.size() + 1, false);
    int mx = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > mx) {
            e.push_back(0);
            mx = v[i];
            continue;
        }
        int r = 0;
        int a = 0;
        while (r < v[i]) {
            ++a;
            r += !used[static_cast<std::size_t>(a)];
        }
        used[static_cast<std::size_t>(a)] = true;
        e.push_back(a);
    }
    return InversionSequence(std::move(e));
}

// ---------------------------------------------------------------- tau

namespace {

BWTree tau_rec(const Word& e)
{
    const int n = static_cast<int>(e.size());
    if (n <= 1) {
        return {};
    }
    // 1-based: e_i is e[i-1].
    auto at = [&](int i) { return e[static_cast<std::size_t>(i - 1)]; };
    int ell = 1;
    while (ell + 2 <= n && at(ell + 2) == at(2)) {
        ++ell;
    }
    int k = n;
    for (int pos = ell + 2; pos <= n; ++pos) {
        if (at(pos) >= pos - ell) {
            k = pos - 1;
            break;
        }
    }
    Word left(static_cast<std::size_t>(ell), 0);
    const Word shifted = shift_positive(std::span<const int>(e).subspan(static_cast<std::size_t>(k)), ell - k);
    left.insert(left.end(), shifted.begin(), shifted.end());
    Word right{0};
    right.insert(right.end(), e.begin() + ell + 1, e.begin() + k);
    return BWTree::join(at(2) == 0 ? Color::white : Color::black, tau_rec(left), tau_rec(right));
}

Word tau_inv_rec(const BWTree& t)
{
    if (t.empty()) {
        return {0};
    }
    const Word el = tau_inv_rec(t.left_subtree());
    const Word er = tau_inv_rec(t.right_subtree());
    int ell = 0;
    while (ell < static_cast<int>(el.size()) && el[static_cast<std::size_t>(ell)] == 0) {
        ++ell;
    }
    const int k = ell + static_cast<int>(er.size());
    const int c = t.node(t.root()).color == Color::black ? 1 : 0;
    Word e{0};
    e.insert(e.end(), static_cast<std::size_t>(ell), c);
    e.insert(e.end(), er.begin() + 1, er.end());
    const Word tail = shift_positive(std::span<const int>(el).subspan(static_cast<std::size_t>(ell)), k - ell);
    e.insert(e.end(), tail.begin(), tail.end());
    return e;
}

} // namespace

BWTree tau(std::span<const int> e)
{
    require_avoids(e, p021());
    return tau_rec(Word(e.begin(), e.end()));
}

InversionSequence tau_inv(const BWTree& t)
{
    t.validate();
    return InversionSequence(tau_inv_rec(t));
}

// ---------------------------------------------------------------- mu

namespace {

Word mu_sweep(std::span<const int> e, bool take_max)
{
    const StatRecord r = stats(e);
    std::vector<bool> is_max(e.size(), false);
    for (int pos : r.weak_ltr_maxima) {
        is_max[static_cast<std::size_t>(pos - 1)] = true;
    }
    std::vector<int> pool;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!is_max[i]) {
            pool.push_back(e[i]);
        }
    }
    std::sort(pool.begin(), pool.end());

    Word f(e.begin(), e.end());
    int running = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (is_max[i]) {
            running = std::max(running, e[i]);
            continue;
        }
        // Candidates are the pool entries strictly below the running maximum.
        const auto end = std::lower_bound(pool.begin(), pool.end(), running);
        if (end == pool.begin()) {
            throw std::invalid_argument("no candidate value at position " + std::to_string(i + 1));
        }
        const auto pick = take_max ? std::prev(end) : pool.begin();
        f[i] = *pick;
        pool.erase(pick);
    }
    return f;
}

} // namespace

InversionSequence mu_210_to_201(std::span<const int> e)
{
    require_avoids(e, Pattern({2, 1, 0}));
    return InversionSequence(mu_sweep(e, true));
}

InversionSequence mu_inv(std::span<const int> f)
{
    require_avoids(f, Pattern({2, 0, 1}));
    return InversionSequence(mu_sweep(f, false));
}

// ---------------------------------------------------------------- tree000

InversionSequence tree000_to_inv(std::span<const int> parents)
{
    if (!is_increasing_012_tree(parents)) {
        throw std::invalid_argument("not a 0-1-2 increasing tree: " + format_word(parents));
    }
    return InversionSequence(Word(parents.begin(), parents.end()));
}

Word inv_to_tree000(std::span<const int> e)
{
    require_avoids(e, Pattern({0, 0, 0}));
    return Word(e.begin(), e.end());
}

// ---------------------------------------------------------------- by name

const std::vector<std::string>& bijection_names()
{
    static const std::vector<std::string> names = {"theta", "rho", "phi", "kappa", "tau", "mu", "tree000"};
    return names;
}

std::string apply_bijection(std::string_view name, bool forward, std::string_view input)
{
    auto seq = [&] { return parse_word(input); };
    if (name == "theta") {
        return forward ? theta(seq()).to_string() : format_word(theta_inv(seq()));
    }
    if (name == "rho") {
        return forward ? rho(seq()).to_string() : rho_inv(SchroderPath(std::string(input))).to_string();
    }
    if (name == "phi") {
        return forward ? phi(SchroderPath(std::string(input))).to_string() : phi_inv(seq()).to_string();
    }
    if (name == "kappa") {
        return forward ? format_word(kappa(seq())) : kappa_inv(seq()).to_string();
    }
    if (name == "tau") {
        return forward ? tau(seq()).to_string() : tau_inv(BWTree::parse(input)).to_string();
    }
    if (name == "mu") {
        return forward ? mu_210_to_201(seq()).to_string() : mu_inv(seq()).to_string();
    }
    if (name == "tree000") {
        return forward ? tree000_to_inv(seq()).to_string() : format_word(inv_to_tree000(seq()));
    }
    throw std::invalid_argument("unknown bijection: " + std::string(name));
}

} // namespace invpat
