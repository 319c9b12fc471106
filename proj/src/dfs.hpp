#ifndef INVPAT_SRC_DFS_HPP
#define INVPAT_SRC_DFS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "invpat/core.hpp"

namespace invpat::detail {

inline bool extension_allowed(const Word& prefix, const PatternSet& avoid)
{
    // Any new occurrence must use the entry just appended.
    for (const auto& p : avoid) {
        if (contains_ending_at_last(prefix, p)) {
            return false;
        }
    }
    return true;
}

template <class Visit>
void extend_avoiders(Word& prefix, int n, const PatternSet& avoid, Visit& visit)
{
    const int i = static_cast<int>(prefix.size());
    if (i == n) {
        visit(std::span<const int>(prefix));
        return;
    }
    for (int v = 0; v <= i; ++v) {
        prefix.push_back(v);
        if (extension_allowed(prefix, avoid)) {
            extend_avoiders(prefix, n, avoid, visit);
        }
        prefix.pop_back();
    }
}

/// All avoiding prefixes at the first depth with at least `min_tasks` of
/// them (or depth n).
std::vector<Word> avoiding_prefixes(int n, const PatternSet& avoid, std::size_t min_tasks);

} // namespace invpat::detail

#endif // INVPAT_SRC_DFS_HPP
