#ifndef INVPAT_ENUMERATOR_HPP
#define INVPAT_ENUMERATOR_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "invpat/bigint.hpp"
#include "invpat/core.hpp"

namespace invpat {

/// Selects the serial reference kernel or the OpenMP kernel.
enum class Exec { serial, parallel };

using StatFn = std::function<int(std::span<const int>)>;
using Tally = std::map<int, std::uint64_t>;

// Reference kernels. Single-threaded depth-first search in lexicographic order.
namespace serial {
std::uint64_t count(int n, const PatternSet& avoid);
Tally tally(int n, const PatternSet& avoid, const StatFn& stat);
} // namespace serial

// OpenMP kernels. The search tree is cut at a fixed prefix depth and the
// subtrees are counted independently, then summed.
namespace omp {
std::uint64_t count(int n, const PatternSet& avoid);
Tally tally(int n, const PatternSet& avoid, const StatFn& stat);
int max_threads();
} // namespace omp

/// Visits every e in I_n avoiding all of `avoid`, in lexicographic order.
/// A prefix that already contains a pattern is never extended.
void for_each_avoider(int n, const PatternSet& avoid, const std::function<void(std::span<const int>)>& visit);

/// Pull-style version of for_each_avoider. Single consumer.
class AvoiderStream {
public:
    AvoiderStream(int n, PatternSet avoid);

    std::optional<InversionSequence> next();

private:
    int n_;
    PatternSet avoid_;
    Word prefix_;
    std::vector<int> next_value_;
    bool done_ = false;
};

std::vector<InversionSequence> generate(int n, const PatternSet& avoid);

BigInt count_avoiders(int n, const PatternSet& avoid, Exec exec = Exec::parallel);

/// Terms for n = 1..n_max.
std::vector<BigInt> avoidance_sequence(const PatternSet& avoid, int n_max, Exec exec = Exec::parallel);

struct Histogram {
    int n = 0;
    std::string statistic;
    std::map<int, BigInt> bins;

    BigInt total() const;
    nlohmann::json to_json() const;
    static Histogram from_json(const nlohmann::json& j);

    bool operator==(const Histogram&) const = default;
};

Histogram distribution(int n, const PatternSet& avoid, Statistic stat, Exec exec = Exec::parallel);

/// Throws std::invalid_argument on an unknown statistic name.
Histogram distribution(int n, const PatternSet& avoid, std::string_view stat, Exec exec = Exec::parallel);

Histogram to_histogram(int n, std::string statistic, const Tally& t);

} // namespace invpat

#endif // INVPAT_ENUMERATOR_HPP
