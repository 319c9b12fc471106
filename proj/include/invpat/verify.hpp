#ifndef INVPAT_VERIFY_HPP
#define INVPAT_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "invpat/bigint.hpp"
#include "invpat/core.hpp"

namespace invpat {

struct NStatus {
    int n = 0;
    bool pass = true;
};

/// Outcome of one check over a range of n.
///
/// A failing report carries the first counterexample. `error` is set when the
/// check could not run at all (bad input, missing data); such a report fails.
struct VerdictReport {
    std::string suite;
    int n_min = 1;
    int n_max = 0;
    std::vector<NStatus> per_n;
    std::optional<nlohmann::json> counterexample;
    std::string error;
    /// Non-fatal remarks, e.g. a failed download that fell back to a fixture.
    std::vector<std::string> notes;
    double seconds = 0.0;

    bool passed() const noexcept;
    /// Records the status for n; the first failure's detail becomes the counterexample.
    void record(int n, bool pass, const nlohmann::json& detail = {});
    nlohmann::json to_json() const;
};

using Distribution = std::map<int, BigInt>;

/// One side of an equidistribution check.
///
/// `source` is one of
///   inv:<patterns>:<statistic>   I_n avoiding the '+'-separated patterns
///   path:<statistic>             Schroder paths of size n-1
///   partition:blocks             set partitions of [n]
///   bwtree:black                 BW trees with n-1 nodes
///   simsun:descents              simsun permutations of [n]
///   downup:first                 down/up permutations of [n+1], first entry
///   table:<name>                 row n of a two-index count table
/// Each value v is reported as v + offset, then as n + mirror - v if mirror is set.
struct Side {
    std::string source;
    int offset = 0;
    std::optional<int> mirror;
};

/// Throws std::invalid_argument for unknown sources or statistics.
Distribution side_distribution(const Side& side, int n);

VerdictReport check_wilf(const Pattern& p1, const Pattern& p2, int n_max);

VerdictReport check_equidistribution(const std::string& name, const Side& a, const Side& b, int n_min, int n_max);

/// entringer or schroder_ascents. Throws std::invalid_argument on other ids.
VerdictReport run_conjecture(std::string_view id, int n_max);

/// Brute force against every known formula, n = 1..n_max.
VerdictReport check_formulas(int n_max, int n_max_102 = 9);

/// Round trips and statistic transports of every bijection, n = 1..n_max.
std::vector<VerdictReport> check_bijections(int n_max);

/// Cell-level check of T_{n,a,b} against the top/bottom histogram of I_n(210).
VerdictReport check_T_table(int n_max);

/// Counts shared across families: paths, BW trees, separable and Boolean
/// permutations, simsun descents, 1-23-4 avoiders, S_n(132,231).
std::vector<VerdictReport> check_cross_family(int n_max);

/// k (u_{n,k+1} + k u_{n-1,k}) = (k+1)(u_{n,k} - u_{n-1,k-1}) in exact rationals.
VerdictReport check_callan_identity(int n_max);

/// The named equidistributions claimed for the families above.
std::vector<VerdictReport> check_equidistributions(int n_max);

/// wilf, equidistribution, bijections, formulas, conjectures, cross_family, callan, all.
std::vector<VerdictReport> run_suite(std::string_view name, int n_max);
const std::vector<std::string>& suite_names();

} // namespace invpat

#endif // INVPAT_VERIFY_HPP
