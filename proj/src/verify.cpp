#include "invpat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "invpat/bijections.hpp"
#include "invpat/counting.hpp"
#include "invpat/enumerator.hpp"
#include "invpat/structures.hpp"

namespace invpat {

// ---------------------------------------------------------------- report

bool VerdictReport::passed() const noexcept
{
    if (!error.empty()) {
        return false;
    }
    return std::all_of(per_n.begin(), per_n.end(), [](const NStatus& s) { return s.pass; });
}

void VerdictReport::record(int n, bool pass, const nlohmann::json& detail)
{
    for (auto& s : per_n) {
        if (s.n == n) {
            s.pass = s.pass && pass;
            if (!pass && !counterexample) {
                counterexample = detail;
            }
            return;
        }
    }
    per_n.push_back({n, pass});
    if (!pass && !counterexample) {
        counterexample = detail;
    }
}

nlohmann::json VerdictReport::to_json() const
{
    nlohmann::json status = nlohmann::json::object();
    for (const auto& s : per_n) {
        status[std::to_string(s.n)] = s.pass ? "pass" : "fail";
    }
    nlohmann::json j = {{"suite", suite},
                        {"n_min", n_min},
                        {"n_max", n_max},
                        {"status", status},
                        {"pass", passed()},
                        {"seconds", seconds}};
    if (counterexample) {
        j["counterexample"] = *counterexample;
    }
    if (!error.empty()) {
        j["error"] = error;
    }
    if (!notes.empty()) {
        j["notes"] = notes;
    }
    return j;
}

namespace {

class Stopwatch {
public:
    explicit Stopwatch(VerdictReport& r) : r_(r), start_(std::chrono::steady_clock::now()) {}

    void stop()
    {
        r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    VerdictReport& r_;
    std::chrono::steady_clock::time_point start_;
};

VerdictReport make_report(std::string suite, int n_min, int n_max)
{
    VerdictReport r;
    r.suite = std::move(suite);
    r.n_min = n_min;
    r.n_max = n_max;
    return r;
}

nlohmann::json dist_json(const Distribution& d)
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [v, c] : d) {
        j[std::to_string(v)] = to_decimal(c);
    }
    return j;
}

PatternSet parse_pattern_set(std::string_view text)
{
    PatternSet ps;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto plus = text.find('+', start);
        const auto end = plus == std::string_view::npos ? text.size() : plus;
        ps.push_back(Pattern::parse(text.substr(start, end - start)));
        if (plus == std::string_view::npos) {
            break;
        }
        start = plus + 1;
    }
    return ps;
}

Distribution raw_distribution(std::string_view source, int n)
{
    Distribution d;
    const auto colon = source.find(':');
    const std::string_view kind = source.substr(0, colon);
    const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : source.substr(colon + 1);

    if (kind == "inv") {
        const auto c2 = rest.rfind(':');
        if (c2 == std::string_view::npos) {
            throw std::invalid_argument("inv source needs patterns and a statistic: " + std::string(source));
        }
        const PatternSet ps = parse_pattern_set(rest.substr(0, c2));
        return distribution(n, ps, rest.substr(c2 + 1)).bins;
    }
    if (kind == "path") {
        for (const auto& p : schroder_paths(n - 1)) {
            ++d[path_statistic(path_stats(p), rest)];
        }
        return d;
    }
    if (kind == "partition" && rest == "blocks") {
        for_each_rgf(n, [&](std::span<const int> v) { ++d[v.empty() ? 0 : *std::max_element(v.begin(), v.end())]; });
        return d;
    }
    if (kind == "bwtree" && rest == "black") {
        for (const auto& t : bw_trees(n - 1)) {
            ++d[t.black_count()];
        }
        return d;
    }
    if (kind == "simsun" && rest == "descents") {
        for_each_permutation(n, [&](std::span<const int> pi) {
            if (is_simsun(pi)) {
                ++d[descents(pi)];
            }
        });
        return d;
    }
    if (kind == "downup" && rest == "first") {
        for_each_permutation(n + 1, [&](std::span<const int> pi) {
            if (is_down_up(pi)) {
                ++d[pi[0]];
            }
        });
        return d;
    }
    if (kind == "table") {
        const CountTable t = table_by_name(rest, std::max(n, 1));
        if (t.dims().size() != 2) {
            throw std::invalid_argument("table source needs a two-index table: " + std::string(rest));
        }
        t.for_each([&](std::span<const int> idx, const BigInt& v) {
            if (idx[0] == n && v != 0) {
                d[idx[1]] = v;
            }
        });
        return d;
    }
    throw std::invalid_argument("unknown family: " + std::string(source));
}

bool same_counts(const std::vector<BigInt>& xs)
{
    return std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) == xs.end();
}

nlohmann::json counts_json(const std::vector<BigInt>& xs)
{
    nlohmann::json j = nlohmann::json::array();
    for (const auto& x : xs) {
        j.push_back(to_decimal(x));
    }
    return j;
}

BigInt count_perms(int n, const std::function<bool(std::span<const int>)>& pred)
{
    std::uint64_t c = 0;
    for_each_permutation(n, [&](std::span<const int> pi) { c += pred(pi); });
    return c;
}

} // namespace

Distribution side_distribution(const Side& side, int n)
{
    Distribution out;
    for (const auto& [v, c] : raw_distribution(side.source, n)) {
        if (c == 0) {
            continue;
        }
        int w = v + side.offset;
        if (side.mirror) {
            w = n + *side.mirror - w;
        }
        out[w] += c;
    }
    return out;
}

// ---------------------------------------------------------------- wilf

VerdictReport check_wilf(const Pattern& p1, const Pattern& p2, int n_max)
{
    VerdictReport r = make_report("wilf:" + p1.to_string() + "~" + p2.to_string(), 1, n_max);
    Stopwatch sw(r);
    for (int n = 1; n <= n_max; ++n) {
        const BigInt a = count_avoiders(n, {p1});
        const BigInt b = count_avoiders(n, {p2});
        r.record(n, a == b,
                 {{"n", n}, {p1.to_string(), to_decimal(a)}, {p2.to_string(), to_decimal(b)}});
    }
    sw.stop();
    return r;
}

// ---------------------------------------------------------------- equidistribution

VerdictReport check_equidistribution(const std::string& name, const Side& a, const Side& b, int n_min, int n_max)
{
    VerdictReport r = make_report("equidistribution:" + name, n_min, n_max);
    Stopwatch sw(r);
    try {
        for (int n = n_min; n <= n_max; ++n) {
            const Distribution da = side_distribution(a, n);
            const Distribution db = side_distribution(b, n);
            r.record(n, da == db, {{"n", n}, {a.source, dist_json(da)}, {b.source, dist_json(db)}});
        }
    } catch (const std::exception& ex) {
        r.error = ex.what();
    }
    sw.stop();
    return r;
}

std::vector<VerdictReport> check_equidistributions(int n_max)
{
    struct Claim {
        const char* name;
        Side a;
        Side b;
    };
    const std::vector<Claim> claims = {
        {"021_zeros_vs_flats", {"inv:021:zeros"}, {"path:flats", 1}},
        {"021_zeros_vs_peaks", {"inv:021:zeros"}, {"path:peaks", 1}},
        {"021_maximal_vs_initial_ups", {"inv:021:maximal_entries"}, {"path:initial_up_run", 1}},
        {"021_ascent_symmetry", {"inv:021:ascents"}, {"inv:021:ascents", 0, -1}},
        {"021_ascents_vs_black_nodes", {"inv:021:ascents"}, {"bwtree:black"}},
        {"021_maximal_vs_Y", {"inv:021:maximal_entries"}, {"table:Y"}},
        {"011_zeros_vs_blocks", {"inv:011:zeros"}, {"partition:blocks"}},
        {"011_zeros_vs_stirling", {"inv:011:zeros"}, {"table:stirling"}},
        {"000_distinct_vs_E", {"inv:000:distinct_values"}, {"table:E000"}},
        {"E_vs_simsun_duality", {"table:E000", 0, 0}, {"table:simsun"}},
        {"101_zeros_vs_callan", {"inv:101:zeros"}, {"table:callan"}},
        {"110_zeros_vs_callan", {"inv:110:zeros"}, {"table:callan"}},
    };
    std::vector<VerdictReport> out;
    for (const auto& c : claims) {
        out.push_back(check_equidistribution(c.name, c.a, c.b, 1, n_max));
    }
    out.push_back(check_T_table(n_max));
    return out;
}

VerdictReport check_T_table(int n_max)
{
    VerdictReport r = make_report("equidistribution:210_top_bottom_vs_T", 1, n_max);
    Stopwatch sw(r);
    const CountTable t = table_T(n_max);
    for (int n = 1; n <= n_max; ++n) {
        std::map<std::pair<int, int>, std::uint64_t> hist;
        for_each_avoider(n, {Pattern({2, 1, 0})}, [&](std::span<const int> e) {
            const StatRecord s = stats(e);
            ++hist[{s.top, s.bottom}];
        });
        bool ok = true;
        nlohmann::json detail;
        for (int a = 0; a < n && ok; ++a) {
            for (int b = -1; b < a && ok; ++b) {
                const auto it = hist.find({a, b});
                const BigInt brute = it == hist.end() ? BigInt(0) : BigInt(it->second);
                if (brute != t.at(n, a, b)) {
                    ok = false;
                    detail = {{"n", n}, {"a", a}, {"b", b}, {"table", to_decimal(t.at(n, a, b))},
                              {"brute", to_decimal(brute)}};
                }
            }
        }
        std::uint64_t total = 0;
        for (const auto& [k, c] : hist) {
            total += c;
        }
        if (ok && BigInt(total) != count_201_210(t, n)) {
            ok = false;
            detail = {{"n", n}, {"total", to_decimal(count_201_210(t, n))}, {"brute", total}};
        }
        r.record(n, ok, detail);
    }
    sw.stop();
    return r;
}

// ---------------------------------------------------------------- conjectures

VerdictReport run_conjecture(std::string_view id, int n_max)
{
    if (id == "entringer") {
        VerdictReport r = make_report("conjecture:entringer", 1, n_max);
        Stopwatch sw(r);
        const Side brute{"inv:000:last_entry", 1};
        const Side table{"table:entringer"};
        const Side oracle{"downup:first", -1};
        for (int n = 1; n <= n_max; ++n) {
            const Distribution b = side_distribution(brute, n);
            const Distribution t = side_distribution(table, n);
            const Distribution o = side_distribution(oracle, n);
            r.record(n, b == t && t == o,
                     {{"n", n}, {"last_entry_plus_one", dist_json(b)}, {"d_table", dist_json(t)},
                      {"down_up_first_minus_one", dist_json(o)}});
        }
        sw.stop();
        return r;
    }
    if (id == "schroder_ascents") {
        VerdictReport r = make_report("conjecture:schroder_ascents", 1, n_max);
        Stopwatch sw(r);
        const Side paths{"path:ascents", 1};
        const Side seqs{"inv:021:distinct_values"};
        for (int n = 1; n <= n_max; ++n) {
            const Distribution a = side_distribution(paths, n);
            const Distribution b = side_distribution(seqs, n);
            r.record(n, a == b, {{"n", n}, {"path_ascents_plus_one", dist_json(a)}, {"distinct_values", dist_json(b)}});
        }
        sw.stop();
        return r;
    }
    throw std::invalid_argument("unknown conjecture: " + std::string(id));
}

// ---------------------------------------------------------------- formulas

VerdictReport check_formulas(int n_max, int n_max_102)
{
    VerdictReport r = make_report("formulas", 1, n_max);
    Stopwatch sw(r);
    for (const char* text : {"012", "021", "102", "201", "210", "000", "001", "011", "101", "110"}) {
        const Pattern p = Pattern::parse(text);
        const int top = p.to_string() == "102" ? std::min(n_max, n_max_102) : n_max;
        for (int n = 1; n <= top; ++n) {
            const BigInt f = *formula_count(p, n);
            const BigInt b = count_avoiders(n, {p});
            r.record(n, f == b, {{"pattern", p.to_string()}, {"n", n}, {"formula", to_decimal(f)}, {"brute", to_decimal(b)}});
        }
    }
    sw.stop();
    return r;
}

// ---------------------------------------------------------------- bijections

std::vector<VerdictReport> check_bijections(int n_max)
{
    std::vector<VerdictReport> out;
    const Pattern p021({0, 2, 1});

    {
        VerdictReport r = make_report("bijection:theta", 1, n_max);
        Stopwatch sw(r);
        const PatternSet s132_231{perm_pattern("132"), perm_pattern("231")};
        for (int n = 1; n <= n_max; ++n) {
            bool ok = true;
            nlohmann::json bad;
            std::uint64_t target = 0;
            for_each_permutation(n, [&](std::span<const int> pi) {
                const auto e = theta(pi);
                if (ok && theta_inv(e) != Permutation(pi.begin(), pi.end())) {
                    ok = false;
                    bad = {{"n", n}, {"permutation", format_word(pi)}};
                }
                target += avoids_classical(pi, s132_231);
            });
            std::uint64_t hits = 0;
            for_each_avoider(n, {Pattern({0, 0, 1})}, [&](std::span<const int> e) {
                const Permutation pi = theta_inv(e);
                const bool avoid = avoids_classical(pi, s132_231);
                hits += avoid;
                if (ok && (!avoid || theta(pi).entries() != Word(e.begin(), e.end()))) {
                    ok = false;
                    bad = {{"n", n}, {"sequence", format_word(e)}, {"image", format_word(pi)}};
                }
            });
            if (ok && hits != target) {
                ok = false;
                bad = {{"n", n}, {"images", hits}, {"S_n(132,231)", target}};
            }
            r.record(n, ok, bad);
        }
        sw.stop();
        out.push_back(std::move(r));
    }

    {
        VerdictReport r = make_report("bijection:rho", 1, n_max);
        Stopwatch sw(r);
        for (int n = 1; n <= n_max; ++n) {
            bool ok = true;
            nlohmann::json bad;
            for_each_avoider(n, {p021}, [&](std::span<const int> e) {
                if (!ok) {
                    return;
                }
                const SchroderPath p = rho(e);
                const bool round = rho_inv(p).entries() == Word(e.begin(), e.end());
                const bool sized = p.size() == n - 1;
                const bool transport = stats(e).maximal_entries == path_stats(p).initial_up_run + 1;
                if (!(round && sized && transport)) {
                    ok = false;
                    bad = {{"n", n}, {"sequence", format_word(e)}, {"path", p.to_string()}};
                }
            });
            for (const auto& p : schroder_paths(n - 1)) {
                if (ok && rho(rho_inv(p)) != p) {
                    ok = false;
                    bad = {{"n", n}, {"path", p.to_string()}};
                }
            }
            r.record(n, ok, bad);
        }
        sw.stop();
        out.push_back(std::move(r));
    }

    {
        VerdictReport r = make_report("bijection:phi", 1, n_max);
        Stopwatch sw(r);
        for (int n = 1; n <= n_max; ++n) {
            bool ok = true;
            nlohmann::json bad;
            for (const auto& p : schroder_paths(n - 1)) {
                const InversionSequence e = phi(p);
                const PathStats ps = path_stats(p);
                const StatRecord s = stats(e);
                const bool good = static_cast<int>(e.size()) == n && avoids(e, p021) && phi_inv(e) == p &&
                                  ps.valleys == s.late_zeros &&
                                  ps.valley_word_U_count == s.distinct_nonzero_values &&
                                  ps.flats_at_height0 == s.leading_zeros - 1;
                if (!good) {
                    ok = false;
                    bad = {{"n", n}, {"path", p.to_string()}, {"sequence", e.to_string()}};
                    break;
                }
            }
            for_each_avoider(n, {p021}, [&](std::span<const int> e) {
                if (ok && phi(phi_inv(e)).entries() != Word(e.begin(), e.end())) {
                    ok = false;
                    bad = {{"n", n}, {"sequence", format_word(e)}};
                }
            });
            r.record(n, ok, bad);
        }
        sw.stop();
        out.push_back(std::move(r));
    }

    {
        VerdictReport r = make_report("bijection:kappa", 1, n_max);
        Stopwatch sw(r);
        for (int n = 1; n <= n_max; ++n) {
            bool ok = true;
            nlohmann::json bad;
            for_each_avoider(n, {Pattern({0, 1, 1})}, [&](std::span<const int> e) {
                if (!ok) {
                    return;
                }
                const Word v = kappa(e);
                const bool good = is_rgf(v) && kappa_inv(v).entries() == Word(e.begin(), e.end()) &&
                                  stats(e).zeros == static_cast<int>(rgf_to_partition(v).size());
                if (!good) {
                    ok = false;
                    bad = {{"n", n}, {"sequence", format_word(e)}, {"rgf", format_word(v)}};
                }
            });
            for_each_rgf(n, [&](std::span<const int> v) {
                if (ok && kappa(kappa_inv(v)) != Word(v.begin(), v.end())) {
                    ok = false;
                    bad = {{"n", n}, {"rgf", format_word(v)}};
                }
            });
            r.record(n, ok, bad);
        }
        sw.stop();
        out.push_back(std::move(r));
    }

    {
        VerdictReport r = make_report("bijection:tau", 1, n_max);
        Stopwatch sw(r);
        for (int n = 1; n <= n_max; ++n) {
            bool ok = true;
            nlohmann::json bad;
            for_each_avoider(n, {p021}, [&](std::span<const int> e) {
                if (!ok) {
                    return;
                }
                const BWTree t = tau(e);
                const StatRecord s = stats(e);
                const auto branch = t.leftmost_branch_colors();
                const int branch_black = static_cast<int>(std::count(branch.begin(), branch.end(), Color::black));
                bool white_top = static_cast<int>(branch.size()) >= s.leading_zeros - 1;
                for (int i = 0; white_top && i < s.leading_zeros - 1; ++i) {
                    white_top = branch[static_cast<std::size_t>(i)] == Color::white;
                }
                const bool good = t.valid() && t.size() == n - 1 && tau_inv(t).entries() == Word(e.begin(), e.end()) &&
                                  s.ascents == t.black_count() && s.maximal_entries - 1 == branch_black && white_top;
                if (!good) {
                    ok = false;
                    bad = {{"n", n}, {"sequence", format_word(e)}, {"tree", t.to_string()}};
                }
            });
            for (const auto& t : bw_trees(n - 1)) {
                if (ok && tau(tau_inv(t)) != t) {
                    ok = false;
                    bad = {{"n", n}, {"tree", t.to_string()}};
                }
            }
            r.record(n, ok, bad);
        }
        sw.stop();
        out.push_back(std::move(r));
    }

    {
        VerdictReport r = make_report("bijection:mu", 1, n_max);
        Stopwatch sw(r);
        const Pattern p201({2, 0, 1});
        for (int n = 1; n <= n_max; ++n) {
            bool ok = true;
            nlohmann::json bad;
            std::set<Word> images;
            for_each_avoider(n, {Pattern({2, 1, 0})}, [&](std::span<const int> e) {
                if (!ok) {
                    return;
                }
                const InversionSequence f = mu_210_to_201(e);
                const StatRecord se = stats(e);
                const StatRecord sf = stats(f);
                bool fixed = se.weak_ltr_maxima == sf.weak_ltr_maxima;
                for (int pos : se.weak_ltr_maxima) {
                    fixed = fixed && e[static_cast<std::size_t>(pos - 1)] == f[static_cast<std::size_t>(pos - 1)];
                }
                const bool good = avoids(f, p201) && fixed && mu_inv(f).entries() == Word(e.begin(), e.end());
                images.insert(f.entries());
                if (!good) {
                    ok = false;
                    bad = {{"n", n}, {"sequence", format_word(e)}, {"image", f.to_string()}};
                }
            });
            const BigInt target = count_avoiders(n, {p201});
            if (ok && BigInt(images.size()) != target) {
                ok = false;
                bad = {{"n", n}, {"distinct_images", images.size()}, {"I_n(201)", to_decimal(target)}};
            }
            r.record(n, ok, bad);
        }
        sw.stop();
        out.push_back(std::move(r));
    }

    {
        VerdictReport r = make_report("bijection:tree000", 1, n_max);
        Stopwatch sw(r);
        const Pattern p000({0, 0, 0});
        for (int n = 1; n <= n_max; ++n) {
            bool ok = true;
            nlohmann::json bad;
            for_each_avoider(n, {}, [&](std::span<const int> e) {
                if (!ok) {
                    return;
                }
                const bool tree = is_increasing_012_tree(e);
                bool good = tree == avoids(e, p000);
                if (good && tree) {
                    good = tree000_to_inv(inv_to_tree000(e)).entries() == Word(e.begin(), e.end());
                }
                if (!good) {
                    ok = false;
                    bad = {{"n", n}, {"parents", format_word(e)}};
                }
            });
            r.record(n, ok, bad);
        }
        sw.stop();
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------- cross family

std::vector<VerdictReport> check_cross_family(int n_max)
{
    std::vector<VerdictReport> out;
    {
        VerdictReport r = make_report("cross_family:schroder", 1, n_max);
        Stopwatch sw(r);
        const PatternSet separable{perm_pattern("2413"), perm_pattern("3142")};
        for (int n = 1; n <= n_max; ++n) {
            const std::vector<BigInt> xs = {
                BigInt(bw_trees(n).size()), BigInt(schroder_paths(n).size()),
                count_perms(n + 1, [&](std::span<const int> pi) { return avoids_classical(pi, separable); }),
                schroder(n)};
            // Separable permutations of [n+1], not [n], are counted by r_n.
            r.record(n, same_counts(xs), {{"n", n}, {"bwtrees,paths,separable_n+1,r_n", counts_json(xs)}});
        }
        sw.stop();
        out.push_back(std::move(r));
    }
    {
        VerdictReport r = make_report("cross_family:boolean", 1, n_max);
        Stopwatch sw(r);
        const PatternSet boolean{perm_pattern("321"), perm_pattern("3412")};
        for (int n = 1; n <= n_max; ++n) {
            const std::vector<BigInt> xs = {
                count_perms(n, [&](std::span<const int> pi) { return avoids_classical(pi, boolean); }), count_012(n)};
            r.record(n, same_counts(xs), {{"n", n}, {"S_n(321,3412),count_012", counts_json(xs)}});
        }
        sw.stop();
        out.push_back(std::move(r));
    }
    {
        VerdictReport r = make_report("cross_family:vincular_1_23_4", 1, n_max);
        Stopwatch sw(r);
        for (int n = 1; n <= n_max; ++n) {
            const std::vector<BigInt> xs = {count_perms(n, [](std::span<const int> pi) { return avoids_1_23_4(pi); }),
                                            count_101_110(n)};
            r.record(n, same_counts(xs), {{"n", n}, {"S_n(1-23-4),count_101_110", counts_json(xs)}});
        }
        sw.stop();
        out.push_back(std::move(r));
    }
    {
        VerdictReport r = make_report("cross_family:simion_schmidt", 1, n_max);
        Stopwatch sw(r);
        const PatternSet ps{perm_pattern("132"), perm_pattern("231")};
        for (int n = 1; n <= n_max; ++n) {
            const std::vector<BigInt> xs = {
                count_perms(n, [&](std::span<const int> pi) { return avoids_classical(pi, ps); }), count_001(n)};
            r.record(n, same_counts(xs), {{"n", n}, {"S_n(132,231),count_001", counts_json(xs)}});
        }
        sw.stop();
        out.push_back(std::move(r));
    }
    {
        VerdictReport r = make_report("cross_family:bwtree_color_symmetry", 1, n_max);
        Stopwatch sw(r);
        for (int n = 1; n <= n_max; ++n) {
            Distribution black;
            Distribution white;
            for (const auto& t : bw_trees(n)) {
                ++black[t.black_count()];
                ++white[t.white_count()];
            }
            r.record(n, black == white, {{"n", n}, {"black", dist_json(black)}, {"white", dist_json(white)}});
        }
        sw.stop();
        out.push_back(std::move(r));
    }
    out.push_back(check_equidistribution("simsun_descents_vs_rs", {"simsun:descents"}, {"table:simsun"}, 1, n_max));
    return out;
}

// ---------------------------------------------------------------- callan

VerdictReport check_callan_identity(int n_max)
{
    VerdictReport r = make_report("callan_identity", 2, n_max);
    Stopwatch sw(r);
    const CountTable u = table_callan(n_max);
    for (int n = 2; n <= n_max; ++n) {
        bool ok = true;
        nlohmann::json bad;
        for (int k = 1; k < n; ++k) {
            const BigRational lhs = BigRational(u.at(n, k + 1) + k * u.at(n - 1, k));
            const BigRational rhs = BigRational(k + 1, k) * BigRational(u.at(n, k) - u.at(n - 1, k - 1));
            if (lhs != rhs) {
                ok = false;
                bad = {{"n", n}, {"k", k}, {"lhs", lhs.str()}, {"rhs", rhs.str()}};
                break;
            }
        }
        r.record(n, ok, bad);
    }
    sw.stop();
    return r;
}

// ---------------------------------------------------------------- suites

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"wilf",     "equidistribution", "bijections", "formulas",
                                                   "conjectures", "cross_family",  "callan",     "all"};
    return names;
}

std::vector<VerdictReport> run_suite(std::string_view name, int n_max)
{
    std::vector<VerdictReport> out;
    auto append = [&](std::vector<VerdictReport> rs) {
        for (auto& r : rs) {
            out.push_back(std::move(r));
        }
    };
    const bool all = name == "all";
    bool known = all;
    if (all || name == "wilf") {
        known = true;
        out.push_back(check_wilf(Pattern({2, 0, 1}), Pattern({2, 1, 0}), n_max));
        out.push_back(check_wilf(Pattern({1, 0, 1}), Pattern({1, 1, 0}), n_max));
    }
    if (all || name == "equidistribution") {
        known = true;
        append(check_equidistributions(n_max));
    }
    if (all || name == "bijections") {
        known = true;
        append(check_bijections(n_max));
    }
    if (all || name == "formulas") {
        known = true;
        out.push_back(check_formulas(n_max));
    }
    if (all || name == "conjectures") {
        known = true;
        out.push_back(run_conjecture("entringer", n_max));
        out.push_back(run_conjecture("schroder_ascents", n_max));
    }
    if (all || name == "cross_family") {
        known = true;
        append(check_cross_family(n_max));
    }
    if (all || name == "callan") {
        known = true;
        out.push_back(check_callan_identity(n_max));
    }
    if (!known) {
        throw std::invalid_argument("unknown suite: " + std::string(name));
    }
    return out;
}

} // namespace invpat
