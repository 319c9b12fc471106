#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "invpat/bijections.hpp"
#include "invpat/counting.hpp"
#include "invpat/enumerator.hpp"
#include "invpat/oeis.hpp"
#include "invpat/verify.hpp"

namespace invpat::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string pattern;
    int n = -1;
    int n_max = -1;
    std::string method = "auto";
    std::string stat;
    std::string bijection;
    std::string dir = "fwd";
    std::string input;
    std::string format;
    bool offline = false;
    bool fetch = false;
    std::string cache_dir;
    bool force = false;
    std::string suite = "all";
    std::string id;
    std::string table;
};

// Thrown for bad input that CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PatternSet parse_patterns(const std::string& text)
{
    if (text.empty()) {
        throw UsageError("--pattern is required");
    }
    PatternSet ps;
    std::size_t start = 0;
    while (true) {
        const auto plus = text.find('+', start);
        ps.push_back(Pattern::parse(text.substr(start, plus == std::string::npos ? std::string::npos : plus - start)));
        if (plus == std::string::npos) {
            break;
        }
        start = plus + 1;
    }
    return ps;
}

std::string pattern_label(const PatternSet& ps)
{
    std::string s;
    for (const auto& p : ps) {
        s += (s.empty() ? "" : "+") + p.to_string();
    }
    return s;
}

void check_ceiling(int n, const Options& o)
{
    if (n > kBruteCeiling && !o.force) {
        throw UsageError("n = " + std::to_string(n) + " exceeds the brute-force ceiling of " +
                         std::to_string(kBruteCeiling) + "; pass --force to run anyway");
    }
}

// Returns the count and the method actually used.
std::pair<BigInt, std::string> count_one(const PatternSet& ps, int n, const Options& o)
{
    const bool single_formula = ps.size() == 1 && has_formula(ps.front());
    if (o.method == "formula" || (o.method == "auto" && single_formula)) {
        if (!single_formula) {
            throw UsageError("no formula for pattern " + pattern_label(ps));
        }
        return {*formula_count(ps.front(), n), "formula"};
    }
    check_ceiling(n, o);
    return {count_avoiders(n, ps), "brute"};
}

int emit_reports(const std::vector<VerdictReport>& reports, std::ostream& out)
{
    json arr = json::array();
    bool pass = true;
    for (const auto& r : reports) {
        arr.push_back(r.to_json());
        pass = pass && r.passed();
    }
    out << json{{"pass", pass}, {"reports", arr}}.dump(2) << '\n';
    return pass ? kExitOk : kExitFailed;
}

int cmd_count(const Options& o, std::ostream& out)
{
    const PatternSet ps = parse_patterns(o.pattern);
    if (o.n < 1) {
        throw UsageError("--n must be at least 1");
    }
    const auto [count, method] = count_one(ps, o.n, o);
    if (o.format == "csv") {
        out << "pattern,n,count,method\n" << pattern_label(ps) << ',' << o.n << ',' << to_decimal(count) << ','
            << method << '\n';
    } else {
        out << json{{"pattern", pattern_label(ps)}, {"n", o.n}, {"count", to_decimal(count)}, {"method", method}}.dump()
            << '\n';
    }
    return kExitOk;
}

int cmd_sequence(const Options& o, std::ostream& out)
{
    const PatternSet ps = parse_patterns(o.pattern);
    if (o.n_max < 1) {
        throw UsageError("--n-max must be at least 1");
    }
    std::vector<BigInt> terms;
    std::string method;
    for (int n = 1; n <= o.n_max; ++n) {
        auto [c, m] = count_one(ps, n, o);
        terms.push_back(std::move(c));
        method = m;
    }
    if (o.format == "csv") {
        out << "n,count\n";
        for (std::size_t i = 0; i < terms.size(); ++i) {
            out << i + 1 << ',' << to_decimal(terms[i]) << '\n';
        }
    } else {
        json t = json::array();
        for (const auto& x : terms) {
            t.push_back(to_decimal(x));
        }
        out << json{{"pattern", pattern_label(ps)}, {"n_max", o.n_max}, {"method", method}, {"terms", t}}.dump()
            << '\n';
    }
    return kExitOk;
}

int cmd_dist(const Options& o, std::ostream& out)
{
    const PatternSet ps = o.pattern.empty() ? PatternSet{} : parse_patterns(o.pattern);
    if (o.n < 0) {
        throw UsageError("--n is required");
    }
    if (o.stat.empty()) {
        throw UsageError("--stat is required");
    }
    check_ceiling(o.n, o);
    const Histogram h = distribution(o.n, ps, parse_statistic(o.stat));
    if (o.format == "csv") {
        out << "value,count\n";
        for (const auto& [v, c] : h.bins) {
            out << v << ',' << to_decimal(c) << '\n';
        }
    } else {
        out << h.to_json().dump() << '\n';
    }
    return kExitOk;
}

int cmd_map(const Options& o, std::ostream& out)
{
    if (o.bijection.empty()) {
        throw UsageError("--bijection is required");
    }
    const std::string result = apply_bijection(o.bijection, o.dir == "fwd", o.input);
    if (o.format == "json") {
        out << json{{"bijection", o.bijection}, {"dir", o.dir}, {"input", o.input}, {"output", result}}.dump() << '\n';
    } else {
        out << result << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const int n_max = o.n_max < 0 ? 8 : o.n_max;
    check_ceiling(n_max, o);
    return emit_reports(run_suite(o.suite, n_max), out);
}

int cmd_conjecture(const Options& o, std::ostream& out)
{
    if (o.id.empty()) {
        throw UsageError("--id is required (entringer or schroder_ascents)");
    }
    const int n_max = o.n_max < 0 ? 9 : o.n_max;
    check_ceiling(n_max, o);
    return emit_reports({run_conjecture(o.id, n_max)}, out);
}

int cmd_oeis(const Options& o, std::ostream& out)
{
    oeis::Source src;
    src.offline = o.offline;
    src.fetch = o.fetch && !o.offline;
    src.cache_dir = o.cache_dir.empty() ? oeis::default_cache_dir() : std::filesystem::path(o.cache_dir);

    std::vector<const oeis::CrossCheck*> checks;
    if (o.id.empty()) {
        for (const auto& c : oeis::registry()) {
            checks.push_back(&c);
        }
    } else if (const auto* c = oeis::find(o.id)) {
        checks.push_back(c);
    } else {
        throw UsageError("no cross-check registered for " + o.id);
    }
    std::vector<VerdictReport> reports;
    bool io_error = false;
    for (const auto* c : checks) {
        reports.push_back(oeis::run(*c, src, o.n_max > 0 ? o.n_max : 0));
        io_error = io_error || !reports.back().error.empty();
    }
    const int code = emit_reports(reports, out);
    return io_error ? kExitUsage : code;
}

int cmd_dump_table(const Options& o, std::ostream& out)
{
    if (o.table.empty()) {
        throw UsageError("--table is required");
    }
    const CountTable t = table_by_name(o.table, o.n_max < 0 ? 8 : o.n_max);
    if (o.format == "json") {
        json cells = json::array();
        t.for_each([&](std::span<const int> idx, const BigInt& v) {
            cells.push_back({{"index", std::vector<int>(idx.begin(), idx.end())}, {"value", to_decimal(v)}});
        });
        json dims = json::array();
        for (const auto& d : t.dims()) {
            dims.push_back({{"name", d.name}, {"lo", d.lo}, {"hi", d.hi}});
        }
        out << json{{"name", t.name()}, {"dims", dims}, {"cells", cells}}.dump() << '\n';
    } else {
        t.write_csv(out);
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Pattern-avoiding inversion sequences: counting, maps and verification", "invpat"};
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"json", "csv"};
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_flag("--force", o.force, "Allow brute force beyond n = 11");
    };

    auto* count = app.add_subcommand("count", "Count I_n(p)");
    count->add_option("--pattern", o.pattern, "Pattern, e.g. 021; join several with +")->required();
    count->add_option("--n", o.n, "Length")->required();
    count->add_option("--method", o.method)->check(CLI::IsMember({"brute", "formula", "auto"}));
    common(count);

    auto* sequence = app.add_subcommand("sequence", "Avoidance sequence for n = 1..n-max");
    sequence->add_option("--pattern", o.pattern)->required();
    sequence->add_option("--n-max", o.n_max)->required();
    sequence->add_option("--method", o.method)->check(CLI::IsMember({"brute", "formula", "auto"}));
    common(sequence);

    auto* dist = app.add_subcommand("dist", "Histogram of a statistic over I_n(p)");
    dist->add_option("--pattern", o.pattern, "Omit to use all of I_n");
    dist->add_option("--n", o.n)->required();
    dist->add_option("--stat", o.stat)->required();
    common(dist);

    auto* map = app.add_subcommand("map", "Apply a bijection");
    map->add_option("--bijection", o.bijection)->required()->check(CLI::IsMember(bijection_names()));
    map->add_option("--dir", o.dir)->check(CLI::IsMember({"fwd", "inv"}));
    map->add_option("--input", o.input)->required();
    common(map);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", o.suite)->check(CLI::IsMember(suite_names()));
    verify->add_option("--n-max", o.n_max);
    common(verify);

    auto* conj = app.add_subcommand("conjecture", "Check a conjecture by exhaustive search");
    conj->add_option("--id", o.id)->required()->check(CLI::IsMember({"entringer", "schroder_ascents"}));
    conj->add_option("--n-max", o.n_max);
    common(conj);

    auto* oeis_cmd = app.add_subcommand("oeis", "Compare computed terms with b-files");
    oeis_cmd->add_option("--id", o.id, "Sequence id; default all registered");
    oeis_cmd->add_option("--n-max", o.n_max);
    oeis_cmd->add_flag("--offline", o.offline, "Use only the bundled fixtures");
    oeis_cmd->add_flag("--fetch", o.fetch, "Download missing b-files from oeis.org");
    oeis_cmd->add_option("--cache-dir", o.cache_dir, "Overrides $INVPAT_CACHE");
    common(oeis_cmd);

    auto* dump = app.add_subcommand("dump-table", "Print a count table");
    dump->add_option("--table", o.table)->required()->check(CLI::IsMember(table_names()));
    dump->add_option("--n-max", o.n_max);
    common(dump);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "invpat: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(o, out);
        if (sequence->parsed()) return cmd_sequence(o, out);
        if (dist->parsed()) return cmd_dist(o, out);
        if (map->parsed()) return cmd_map(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (conj->parsed()) return cmd_conjecture(o, out);
        if (oeis_cmd->parsed()) return cmd_oeis(o, out);
        if (dump->parsed()) return cmd_dump_table(o, out);
    } catch (const std::exception& e) {
        err << "invpat: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace invpat::cli
