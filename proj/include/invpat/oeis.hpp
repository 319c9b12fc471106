#ifndef INVPAT_OEIS_HPP
#define INVPAT_OEIS_HPP

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invpat/bigint.hpp"
#include "invpat/verify.hpp"

namespace invpat::oeis {

/// OEIS index -> term.
using Terms = std::map<long, BigInt>;

/// Lines "n a(n)"; blank lines and '#' comments are skipped.
/// Throws std::runtime_error("malformed b-file line K: ...").
Terms parse_bfile(std::istream& in);
Terms load_bfile(const std::filesystem::path& path);

/// "A006318" -> "b006318.txt". Throws std::invalid_argument on a bad id.
std::string bfile_name(const std::string& id);

/// Directory of the fixtures shipped with the source tree.
std::filesystem::path bundled_dir();

/// $INVPAT_CACHE, else $XDG_CACHE_HOME/invpat, else ~/.cache/invpat.
std::filesystem::path default_cache_dir();

struct Source {
    bool offline = true;
    bool fetch = false;
    std::filesystem::path cache_dir;
};

/// Downloads the b-file into `cache_dir`. Never throws; returns an error message on failure.
std::optional<std::string> fetch_bfile(const std::string& id, const std::filesystem::path& cache_dir);

/// Finds the b-file for `id`: bundled fixtures when offline, otherwise the
/// cache, then the fixtures, then a download if fetching is enabled.
/// Returns nullopt and sets `error` when nothing is available.
std::optional<Terms> resolve(const std::string& id, const Source& src, std::string& error);

/// One registered comparison. Artifact index n maps to OEIS index n + shift.
struct CrossCheck {
    std::string id;
    std::string what;
    int shift = 0;
    int n_min = 1;
    int n_max = 1;
    std::function<BigInt(int)> term;
};

const std::vector<CrossCheck>& registry();
const CrossCheck* find(const std::string& id);

/// Term-by-term comparison where the b-file has the index; reports the first
/// mismatching n. Fails if no term overlaps.
VerdictReport crosscheck(const std::string& id, const std::vector<std::pair<int, BigInt>>& terms, int shift,
                         const Terms& bfile);

/// Computes the registered terms for `id` (n_max overrides the default range
/// when positive) and compares them with the resolved b-file.
VerdictReport run(const CrossCheck& check, const Source& src, int n_max = 0);

} // namespace invpat::oeis

#endif // INVPAT_OEIS_HPP
