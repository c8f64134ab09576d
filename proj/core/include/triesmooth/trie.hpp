#pragma once

#include <cstdint>
#include <vector>

#include "triesmooth/string_spec.hpp"

namespace triesmooth {

struct HeightResult {
    std::uint32_t height;
    bool saturated;  // some pair of strings agreed on all of the first depth_cap symbols
};

/*
 * r-ary trie over a set of strings. Subtrees holding a single string are kept
 * as unexpanded leaves and only split when a second string reaches them, so a
 * string's path is materialized exactly as far as needed to tell it apart.
 *
 * Every build is bounded by depth_cap: a pair still together at that depth
 * stops there and flips the saturated flag instead of recursing further
 * (identical or near-identical inputs are legal and must not blow up).
 * The height equals the depth of the deepest node lying on at least two
 * strings' paths, i.e. the maximum lcp over distinct input pairs.
 */
class Trie {
public:
    /// Strings given as specs are materialized to at most depth_cap symbols.
    static Trie build(const std::vector<StringSpec>& strings, std::uint32_t depth_cap);

    /// Strings given as raw symbol sequences (e.g. sampled perturbation
    /// outputs); sequences longer than depth_cap are truncated.
    static Trie build(const std::vector<std::vector<Symbol>>& strings, std::uint32_t arity,
                      std::uint32_t depth_cap);

    std::uint32_t height() const { return height_; }
    bool saturated() const { return saturated_; }
    HeightResult height_result() const { return {height_, saturated_}; }

    std::uint32_t arity() const { return arity_; }
    std::uint32_t depth_cap() const { return depth_cap_; }
    std::size_t node_count() const { return nodes_.size(); }

private:
    struct Node {
        std::int32_t children = -1;   // offset into child_slots_, arity entries
        std::int32_t pending = -1;    // id of the single string parked below this node
        std::uint32_t through = 0;    // strings whose path passes this node
        std::uint32_t ends = 0;       // strings ending exactly here
    };

    Trie(std::uint32_t arity, std::uint32_t depth_cap);

    void insert(std::int32_t id, const std::vector<std::vector<Symbol>>& all);
    std::int32_t new_node();
    std::int32_t ensure_children(std::int32_t node);
    void place_shallow(std::int32_t parent_children, std::int32_t id, std::uint32_t child_depth,
                       const std::vector<std::vector<Symbol>>& all);
    void touch(std::int32_t node, std::uint32_t depth);

    std::uint32_t arity_;
    std::uint32_t depth_cap_;
    std::uint32_t height_ = 0;
    bool saturated_ = false;
    std::vector<Node> nodes_;
    std::vector<std::int32_t> child_slots_;
};

/// Independent quadratic reference: height as the maximum pairwise lcp,
/// probed with the given cap. Mutual oracle for Trie::build in tests.
HeightResult height_by_pairwise_lcp(const std::vector<StringSpec>& strings, std::uint64_t cap);

}  // namespace triesmooth
