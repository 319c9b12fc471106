#include "invpat/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <httplib.h>

#include "invpat/counting.hpp"
#include "invpat/enumerator.hpp"

namespace invpat::oeis {

Terms parse_bfile(std::istream& in)
{
    Terms out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream ls(line);
        long n = 0;
        std::string value;
        std::string extra;
        if (!(ls >> n >> value) || (ls >> extra)) {
            throw std::runtime_error("malformed b-file line " + std::to_string(lineno) + ": " + line);
        }
        try {
            out[n] = from_decimal(value);
        } catch (const std::exception&) {
            throw std::runtime_error("malformed b-file line " + std::to_string(lineno) + ": " + line);
        }
    }
    return out;
}

Terms load_bfile(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return parse_bfile(in);
}

std::string bfile_name(const std::string& id)
{
    const bool ok = id.size() == 7 && id[0] == 'A' &&
                    std::all_of(id.begin() + 1, id.end(), [](unsigned char c) { return std::isdigit(c); });
    if (!ok) {
        throw std::invalid_argument("bad sequence id: " + id);
    }
    return "b" + id.substr(1) + ".txt";
}

std::filesystem::path bundled_dir() { return std::filesystem::path(INVPAT_DATA_DIR) / "oeis"; }

std::filesystem::path default_cache_dir()
{
    if (const char* c = std::getenv("INVPAT_CACHE"); c != nullptr && *c != '\0') {
        return c;
    }
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x != nullptr && *x != '\0') {
        return std::filesystem::path(x) / "invpat";
    }
    if (const char* h = std::getenv("HOME"); h != nullptr && *h != '\0') {
        return std::filesystem::path(h) / ".cache" / "invpat";
    }
    return std::filesystem::temp_directory_path() / "invpat";
}

std::optional<std::string> fetch_bfile(const std::string& id, const std::filesystem::path& cache_dir)
{
    try {
        const std::string name = bfile_name(id);
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
        httplib::SSLClient cli("oeis.org");
#else
        httplib::Client cli("oeis.org");
#endif
        cli.set_connection_timeout(10);
        cli.set_read_timeout(30);
        cli.set_follow_location(true);
        const auto res = cli.Get("/" + id + "/" + name);
        if (!res) {
            return "fetch " + id + ": " + httplib::to_string(res.error());
        }
        if (res->status != 200) {
            return "fetch " + id + ": HTTP " + std::to_string(res->status);
        }
        std::istringstream check(res->body);
        parse_bfile(check);
        std::filesystem::create_directories(cache_dir);
        std::ofstream out(cache_dir / name, std::ios::binary);
        out << res->body;
        if (!out) {
            return "cannot write " + (cache_dir / name).string();
        }
        return std::nullopt;
    } catch (const std::exception& ex) {
        return "fetch " + id + ": " + ex.what();
    }
}

std::optional<Terms> resolve(const std::string& id, const Source& src, std::string& error)
{
    try {
        const std::string name = bfile_name(id);
        const auto bundled = bundled_dir() / name;
        if (src.offline) {
            if (std::filesystem::exists(bundled)) {
                return load_bfile(bundled);
            }
            error = "no bundled b-file for " + id;
            return std::nullopt;
        }
        const auto cached = src.cache_dir / name;
        if (std::filesystem::exists(cached)) {
            return load_bfile(cached);
        }
        if (src.fetch) {
            if (auto err = fetch_bfile(id, src.cache_dir)) {
                error = *err;
            } else {
                return load_bfile(cached);
            }
        }
        if (std::filesystem::exists(bundled)) {
            return load_bfile(bundled);
        }
        if (error.empty()) {
            error = "no b-file for " + id + " (remote fetch is off)";
        }
    } catch (const std::exception& ex) {
        error = ex.what();
    }
    return std::nullopt;
}

const std::vector<CrossCheck>& registry()
{
    auto brute = [](const char* p) {
        return [pat = Pattern::parse(p)](int n) { return count_avoiders(n, {pat}); };
    };
    static const std::vector<CrossCheck> checks = {
        {"A001519", "count_012(n) = A001519(n)", 0, 1, 25, count_012},
        {"A006318", "count_021(n) = A006318(n-1)", -1, 1, 25, count_021},
        {"A000111", "count_000(n) = A000111(n+1)", 1, 1, 25, count_000},
        {"A000079", "count_001(n) = A000079(n-1)", -1, 1, 30, count_001},
        {"A000110", "bell(n) = A000110(n)", 0, 1, 25, bell},
        {"A113227", "count_101_110(n) = A113227(n)", 0, 1, 10, count_101_110},
        {"A200753", "count_102(n) = A200753(n)", 0, 1, 25, count_102},
        {"A263777", "count_201_210(n) = A263777(n)", 0, 1, 12, [](int n) { return count_201_210(n); }},
        {"A263778", "|I_n(120)| = A263778(n)", 0, 1, 9, brute("120")},
        {"A263779", "|I_n(010)| = A263779(n)", 0, 1, 9, brute("010")},
        {"A263780", "|I_n(100)| = A263780(n)", 0, 1, 9, brute("100")},
    };
    return checks;
}

const CrossCheck* find(const std::string& id)
{
    for (const auto& c : registry()) {
        if (c.id == id) {
            return &c;
        }
    }
    return nullptr;
}

VerdictReport crosscheck(const std::string& id, const std::vector<std::pair<int, BigInt>>& terms, int shift,
                         const Terms& bfile)
{
    VerdictReport r;
    r.suite = "oeis:" + id;
    r.n_min = terms.empty() ? 1 : terms.front().first;
    r.n_max = terms.empty() ? 0 : terms.back().first;
    int overlap = 0;
    for (const auto& [n, value] : terms) {
        const auto it = bfile.find(static_cast<long>(n) + shift);
        if (it == bfile.end()) {
            continue;
        }
        ++overlap;
        r.record(n, it->second == value,
                 {{"n", n}, {"oeis_index", n + shift}, {"computed", to_decimal(value)}, {"oeis", to_decimal(it->second)}});
    }
    if (overlap == 0) {
        r.error = "no overlapping terms for " + id;
    }
    return r;
}

VerdictReport run(const CrossCheck& check, const Source& src, int n_max)
{
    const auto start = std::chrono::steady_clock::now();
    const int top = n_max > 0 ? n_max : check.n_max;
    std::string error;
    const auto bfile = resolve(check.id, src, error);
    VerdictReport r;
    if (!bfile) {
        r.suite = "oeis:" + check.id;
        r.n_min = check.n_min;
        r.n_max = top;
        r.error = error;
    } else {
        std::vector<std::pair<int, BigInt>> terms;
        for (int n = check.n_min; n <= top; ++n) {
            terms.emplace_back(n, check.term(n));
        }
        r = crosscheck(check.id, terms, check.shift, *bfile);
        if (!error.empty()) {
            r.notes.push_back(error + "; used the bundled b-file");
        }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace invpat::oeis
