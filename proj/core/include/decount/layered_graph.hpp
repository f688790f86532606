#pragma once

#include <decount/bigint.hpp>
#include <decount/graph.hpp>
#include <decount/image_key.hpp>
#include <decount/pattern.hpp>

#include <cstdint>
#include <vector>

namespace decount {

struct LayeredEdge
{
    VertexId u;      ///< local id in layer i
    VertexId v;      ///< local id in layer i+1 (mod k)
    BigInt weight;
};

/// k coloured layers with weighted edges between cyclically consecutive
/// layers. `edges[i]` holds the edges between layer i and layer (i+1) mod k.
/// Keys are optional and only set for reduced graphs.
struct LayeredWeightedGraph
{
    int k = 0;
    std::vector<std::size_t> layer_size;
    std::vector<std::vector<LayeredEdge>> edges;
    std::vector<VertexMask> layer_pattern_vertices;
    std::vector<std::vector<ImageKey>> layer_keys;

    LayeredWeightedGraph() = default;
    explicit LayeredWeightedGraph(int layers);

    auto add_vertex(int layer) -> VertexId;
    void add_edge(int layer, VertexId u, VertexId v, BigInt weight);

    [[nodiscard]] auto num_vertices() const -> std::size_t;
    [[nodiscard]] auto num_edges() const -> std::size_t;

    /// Merges parallel edges by adding weights and drops zero-weight edges.
    void normalise();
};

} // namespace decount
