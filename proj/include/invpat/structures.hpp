#ifndef INVPAT_STRUCTURES_HPP
#define INVPAT_STRUCTURES_HPP

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invpat/core.hpp"

namespace invpat {

// ---------------------------------------------------------------- paths

/// Lattice path from (0,0) to (2n,0) over U=(1,1), D=(1,-1), F=(2,0),
/// never below the axis. Stored as its step string.
class SchroderPath {
public:
    SchroderPath() = default;
    /// Throws std::invalid_argument("invalid step word: ...").
    explicit SchroderPath(std::string steps);

    static bool is_valid(std::string_view steps) noexcept;

    const std::string& steps() const noexcept { return steps_; }
    int size() const noexcept;
    bool empty() const noexcept { return steps_.empty(); }
    const std::string& to_string() const noexcept { return steps_; }

    auto operator<=>(const SchroderPath&) const = default;

private:
    std::string steps_;
};

struct PathStats {
    int flats = 0;
    int peaks = 0;
    int valleys = 0;
    int initial_up_run = 0;
    int ascents = 0;
    int flats_at_height0 = 0;
    int valley_word_U_count = 0;
};

PathStats path_stats(const SchroderPath& p);

/// Throws std::invalid_argument("unknown path statistic: ...").
int path_statistic(const PathStats& s, std::string_view name);
const std::vector<std::string>& path_statistic_names();

/// Every DU replaced by V, left to right.
std::string valley_word(const SchroderPath& p);

/// Swaps UD <-> F.
SchroderPath peak_flat_involution(const SchroderPath& p);

/// All paths of size n, by first-return decomposition.
std::vector<SchroderPath> schroder_paths(int n);

// ---------------------------------------------------------------- BW trees

enum class Color { black, white };

/// Binary tree with black/white nodes; no node shares its right child's color.
///
/// Nodes live in an arena and refer to children by index (-1 for none).
/// Text form: node := color '(' node? (',' node?)? ')', e.g. "W(B(,),B(W(,),))".
/// The empty tree serializes as "".
class BWTree {
public:
    struct Node {
        Color color = Color::white;
        int left = -1;
        int right = -1;
    };

    BWTree() = default;

    /// Root of the given color over copies of `left` and `right`. Does not validate.
    static BWTree join(Color root, const BWTree& left, const BWTree& right);

    /// Throws std::invalid_argument on malformed text or a color clash.
    static BWTree parse(std::string_view text);

    int root() const noexcept { return root_; }
    bool empty() const noexcept { return root_ < 0; }
    int size() const noexcept { return static_cast<int>(nodes_.size()); }
    const Node& node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }

    BWTree left_subtree() const;
    BWTree right_subtree() const;

    bool valid() const noexcept;
    /// Throws std::invalid_argument("right-child color clash").
    void validate() const;

    std::string to_string() const;

    int black_count() const noexcept;
    int white_count() const noexcept { return size() - black_count(); }
    /// Root first, following left children.
    std::vector<Color> leftmost_branch_colors() const;
    BWTree color_swapped() const;

    bool operator==(const BWTree& o) const { return to_string() == o.to_string(); }

private:
    int copy_from(const BWTree& src, int at);

    std::vector<Node> nodes_;
    int root_ = -1;
};

/// All valid trees with n nodes.
std::vector<BWTree> bw_trees(int n);

// ---------------------------------------------------------------- 0-1-2 trees

/// parents[i-1] is the parent label of vertex i. Valid iff every parent is
/// smaller than its child and no label is a parent more than twice.
bool is_increasing_012_tree(std::span<const int> parents) noexcept;

// ---------------------------------------------------------------- RGFs

using SetPartition = std::vector<std::vector<int>>;

bool is_rgf(std::span<const int> v) noexcept;

/// Throws std::invalid_argument("invalid RGF: ...").
SetPartition rgf_to_partition(std::span<const int> v);

/// Blocks must be nonempty, disjoint, cover 1..n, and be listed by their minima.
Word partition_to_rgf(const SetPartition& blocks);

/// "{1,4}|{2,6,12}|..."
std::string format_partition(const SetPartition& blocks);

/// All RGFs of length n in lexicographic order.
void for_each_rgf(int n, const std::function<void(std::span<const int>)>& visit);

// ---------------------------------------------------------------- permutations

using Permutation = std::vector<int>; // values 1..n

bool is_permutation(std::span<const int> pi) noexcept;

/// Classical pattern from text such as "132" or "2413".
Pattern perm_pattern(std::string_view text);

bool avoids_classical(std::span<const int> pi, const PatternSet& sigmas);

/// No i < j < k with pi_i < pi_j < pi_{j+1} < pi_k.
bool avoids_1_23_4(std::span<const int> pi) noexcept;

/// No double descents, even after removing n, n-1, ..., k for every k.
bool is_simsun(std::span<const int> pi);

/// pi_1 > pi_2 < pi_3 > ...
bool is_down_up(std::span<const int> pi) noexcept;

int descents(std::span<const int> pi) noexcept;

/// All permutations of [n] in lexicographic order.
void for_each_permutation(int n, const std::function<void(std::span<const int>)>& visit);

} // namespace invpat

#endif // INVPAT_STRUCTURES_HPP
