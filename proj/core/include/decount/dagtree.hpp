#pragma once

#include <decount/bigint.hpp>
#include <decount/graph.hpp>
#include <decount/image_key.hpp>
#include <decount/pattern.hpp>

#include <optional>
#include <unordered_map>
#include <vector>

namespace decount {

/// Sources beyond this count are rejected by the exhaustive tree search.
inline constexpr int max_exhaustive_sources = 8;

/// A DAG pattern, possibly restricted to a vertex subset, with its sources,
/// reach sets and intersection vertices precomputed. Vertex ids are those of
/// the underlying digraph; vertices outside `vertices` are absent.
struct OrientedPattern
{
    SmallDigraph dag;
    VertexMask vertices = 0;
    std::vector<int> sources;
    std::array<VertexMask, max_pattern_vertices> reach{};   ///< per vertex, itself included
    VertexMask intersection = 0;

    [[nodiscard]] auto source_mask() const -> VertexMask;
    /// Union of the reach sets of the given sources.
    [[nodiscard]] auto reach_of(VertexMask source_set) const -> VertexMask;
};

/// Throws InputError when `dag` has a directed cycle.
auto analyze(const SmallDigraph & dag) -> OrientedPattern;

/// H(S): the sub-pattern induced by everything reachable from `source_set`.
auto induced_by_sources(const OrientedPattern & p, VertexMask source_set) -> OrientedPattern;

/// Tree over singleton source bags. `parent[i]` indexes into `nodes`, -1 at the root.
struct DagTreeDecomposition
{
    std::vector<int> nodes;     ///< source held by each bag
    std::vector<int> parent;
    int root = 0;               ///< index into nodes

    [[nodiscard]] auto width() const -> int { return nodes.empty() ? 0 : 1; }
    [[nodiscard]] auto root_source() const -> int { return nodes[root]; }
    /// Same tree with the bag holding `source` as root.
    [[nodiscard]] auto rerooted(int source) const -> DagTreeDecomposition;
};

/// Checks the path-reach condition and coverage of every source.
auto is_valid_decomposition(const OrientedPattern & p, const DagTreeDecomposition & d) -> bool;

/// A width-1 decomposition if one exists. Uses a maximum-weight spanning tree
/// of the reach-intersection graph, which is a valid tree whenever any is.
auto find_tau1_decomposition(const OrientedPattern & p) -> std::optional<DagTreeDecomposition>;

/// Same contract as find_tau1_decomposition, by trying every labelled tree
/// (Prüfer sequences). Throws CapExceededError above max_exhaustive_sources.
auto find_tau1_decomposition_exhaustive(const OrientedPattern & p) -> std::optional<DagTreeDecomposition>;

/// Ext counts keyed by the images of `key_vertices` (ascending).
struct ExtensionTable
{
    VertexMask key_vertices = 0;
    std::unordered_map<ImageKey, BigInt, ImageKeyHash> entries;

    [[nodiscard]] auto total() const -> BigInt;
    [[nodiscard]] auto at(const ImageKey & key) const -> BigInt;
};

/// For every map of `target` into g that extends to a homomorphism of p,
/// the number of such homomorphisms. `d` must be a width-1 decomposition of
/// p; its root source must reach all of `target`.
auto extension_counts(const OrientedPattern & p, const DagTreeDecomposition & d, const DirectedGraph & g, VertexMask target)
    -> ExtensionTable;

/// Hom(g, p) through a width-1 decomposition; UnsupportedError if none exists.
auto hom_count_tau1(const OrientedPattern & p, const DirectedGraph & g) -> BigInt;
auto hom_count_tau1(const OrientedPattern & p, const DagTreeDecomposition & d, const DirectedGraph & g) -> BigInt;

} // namespace decount
