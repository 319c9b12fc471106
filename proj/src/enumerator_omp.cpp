#include "invpat/enumerator.hpp"

#include <omp.h>

#include "dfs.hpp"

namespace invpat {

namespace detail {

std::vector<Word> avoiding_prefixes(int n, const PatternSet& avoid, std::size_t min_tasks)
{
    std::vector<Word> level{Word{}};
    for (int d = 0; d < n && level.size() < min_tasks; ++d) {
        std::vector<Word> next;
        next.reserve(level.size() * static_cast<std::size_t>(d + 1));
        for (const auto& w : level) {
            for (int v = 0; v <= d; ++v) {
                Word ext = w;
                ext.push_back(v);
                if (extension_allowed(ext, avoid)) {
                    next.push_back(std::move(ext));
                }
            }
        }
        level = std::move(next);
    }
    return level;
}

} // namespace detail

namespace omp {

namespace {

std::size_t task_target() { return static_cast<std::size_t>(64 * omp_get_max_threads()); }

} // namespace

int max_threads() { return omp_get_max_threads(); }

std::uint64_t count(int n, const PatternSet& avoid)
{
    const std::vector<Word> tasks = detail::avoiding_prefixes(n, avoid, task_target());
    const auto num_tasks = static_cast<long>(tasks.size());
    std::uint64_t total = 0;

#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (long t = 0; t < num_tasks; ++t) {
        Word prefix = tasks[t];
        prefix.reserve(static_cast<std::size_t>(n));
        std::uint64_t local = 0;
        auto visit = [&](std::span<const int>) { ++local; };
        detail::extend_avoiders(prefix, n, avoid, visit);
        total += local;
    }
    return total;
}

Tally tally(int n, const PatternSet& avoid, const StatFn& stat)
{
    const std::vector<Word> tasks = detail::avoiding_prefixes(n, avoid, task_target());
    const auto num_tasks = static_cast<long>(tasks.size());
    Tally merged;

#pragma omp parallel
    {
        Tally local;
#pragma omp for schedule(dynamic)
        for (long t = 0; t < num_tasks; ++t) {
            Word prefix = tasks[t];
            prefix.reserve(static_cast<std::size_t>(n));
            auto visit = [&](std::span<const int> e) { ++local[stat(e)]; };
            detail::extend_avoiders(prefix, n, avoid, visit);
        }
#pragma omp critical(invpat_tally_merge)
        for (const auto& [value, c] : local) {
            merged[value] += c;
        }
    }
    return merged;
}

} // namespace omp

} // namespace invpat
