#include "invpat/enumerator.hpp"

#include "dfs.hpp"

namespace invpat {

namespace serial {

std::uint64_t count(int n, const PatternSet& avoid)
{
    std::uint64_t total = 0;
    auto visit = [&](std::span<const int>) { ++total; };
    Word prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    detail::extend_avoiders(prefix, n, avoid, visit);
    return total;
}

Tally tally(int n, const PatternSet& avoid, const StatFn& stat)
{
    Tally out;
    auto visit = [&](std::span<const int> e) { ++out[stat(e)]; };
    Word prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    detail::extend_avoiders(prefix, n, avoid, visit);
    return out;
}

} // namespace serial

void for_each_avoider(int n, const PatternSet& avoid, const std::function<void(std::span<const int>)>& visit)
{
    Word prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    auto call = [&](std::span<const int> e) { visit(e); };
    detail::extend_avoiders(prefix, n, avoid, call);
}

} // namespace invpat
