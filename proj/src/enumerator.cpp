#include "invpat/enumerator.hpp"

#include <stdexcept>

#include "dfs.hpp"

namespace invpat {

AvoiderStream::AvoiderStream(int n, PatternSet avoid) : n_(n), avoid_(std::move(avoid))
{
    if (n_ < 0) {
        throw std::invalid_argument("length must be nonnegative");
    }
    prefix_.reserve(static_cast<std::size_t>(n_));
    next_value_.push_back(0);
}

std::optional<InversionSequence> AvoiderStream::next()
{
    if (done_) {
        return std::nullopt;
    }
    if (n_ == 0) {
        done_ = true;
        return InversionSequence{};
    }
    while (true) {
        const int depth = static_cast<int>(prefix_.size());
        if (next_value_.back() > depth) {
            if (depth == 0) {
                done_ = true;
                return std::nullopt;
            }
            prefix_.pop_back();
            next_value_.pop_back();
            continue;
        }
        prefix_.push_back(next_value_.back()++);
        if (!detail::extension_allowed(prefix_, avoid_)) {
            prefix_.pop_back();
            continue;
        }
        if (static_cast<int>(prefix_.size()) == n_) {
            InversionSequence out(prefix_);
            prefix_.pop_back();
            return out;
        }
        next_value_.push_back(0);
    }
}

std::vector<InversionSequence> generate(int n, const PatternSet& avoid)
{
    std::vector<InversionSequence> out;
    for_each_avoider(n, avoid, [&](std::span<const int> e) { out.emplace_back(Word(e.begin(), e.end())); });
    return out;
}

BigInt count_avoiders(int n, const PatternSet& avoid, Exec exec)
{
    if (n < 0) {
        throw std::invalid_argument("length must be nonnegative");
    }
    return exec == Exec::serial ? BigInt(serial::count(n, avoid)) : BigInt(omp::count(n, avoid));
}

std::vector<BigInt> avoidance_sequence(const PatternSet& avoid, int n_max, Exec exec)
{
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
    std::vector<BigInt> terms;
    for (int n = 1; n <= n_max; ++n) {
        terms.push_back(count_avoiders(n, avoid, exec));
    }
    return terms;
}

BigInt Histogram::total() const
{
    BigInt sum = 0;
    for (const auto& [v, c] : bins) {
        sum += c;
    }
    return sum;
}

nlohmann::json Histogram::to_json() const
{
    nlohmann::json b = nlohmann::json::object();
    for (const auto& [v, c] : bins) {
        b[std::to_string(v)] = to_decimal(c);
    }
    return {{"n", n}, {"statistic", statistic}, {"bins", b}};
}

Histogram Histogram::from_json(const nlohmann::json& j)
{
    Histogram h;
    h.n = j.at("n").get<int>();
    h.statistic = j.at("statistic").get<std::string>();
    for (const auto& [key, value] : j.at("bins").items()) {
        h.bins[std::stoi(key)] = from_decimal(value.get<std::string>());
    }
    return h;
}

Histogram to_histogram(int n, std::string statistic, const Tally& t)
{
    Histogram h;
    h.n = n;
    h.statistic = std::move(statistic);
    for (const auto& [v, c] : t) {
        h.bins[v] = BigInt(c);
    }
    return h;
}

Histogram distribution(int n, const PatternSet& avoid, Statistic stat, Exec exec)
{
    if (n < 0) {
        throw std::invalid_argument("length must be nonnegative");
    }
    const StatFn fn = [stat](std::span<const int> e) { return statistic_of(e, stat); };
    const Tally t = exec == Exec::serial ? serial::tally(n, avoid, fn) : omp::tally(n, avoid, fn);
    return to_histogram(n, std::string(statistic_name(stat)), t);
}

Histogram distribution(int n, const PatternSet& avoid, std::string_view stat, Exec exec)
{
    return distribution(n, avoid, parse_statistic(stat), exec);
}

} // namespace invpat
