#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace decount {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

struct LoadOptions
{
    /// Collapse repeated edges instead of rejecting them.
    bool dedupe = true;
};

/// Immutable simple undirected graph in CSR form with sorted neighbour lists.
///
/// Vertex ids are dense (0..n-1). When built by load_edge_list, `label(v)`
/// returns the label the vertex carried in the input file.
class UndirectedGraph
{
public:
    UndirectedGraph() = default;

    /// Builds a graph on `n` vertices. Self-loops are rejected; duplicate
    /// edges are collapsed when `dedupe` is set and rejected otherwise.
    static auto from_edges(std::size_t n, std::span<const Edge> edges, bool dedupe = true) -> UndirectedGraph;

    [[nodiscard]] auto num_vertices() const noexcept -> std::size_t { return _offsets.empty() ? 0 : _offsets.size() - 1; }
    [[nodiscard]] auto num_edges() const noexcept -> std::size_t { return _adjacency.size() / 2; }

    [[nodiscard]] auto neighbors(VertexId v) const -> std::span<const VertexId>
    {
        return {_adjacency.data() + _offsets[v], _adjacency.data() + _offsets[v + 1]};
    }

    [[nodiscard]] auto degree(VertexId v) const -> std::size_t { return _offsets[v + 1] - _offsets[v]; }
    [[nodiscard]] auto has_edge(VertexId u, VertexId v) const -> bool;

    /// All edges as (u, v) with u < v, in ascending order.
    [[nodiscard]] auto edges() const -> std::vector<Edge>;

    [[nodiscard]] auto label(VertexId v) const -> std::uint64_t { return _labels.empty() ? v : _labels[v]; }
    [[nodiscard]] auto labels() const -> std::vector<std::uint64_t>;
    void set_labels(std::vector<std::uint64_t> labels);

    /// Degeneracy (largest degree seen during min-degree peeling).
    [[nodiscard]] auto degeneracy() const -> std::size_t;

private:
    std::vector<std::size_t> _offsets;
    std::vector<VertexId> _adjacency;
    std::vector<std::uint64_t> _labels;
};

/// Immutable directed graph with CSR out- and in-adjacency.
class DirectedGraph
{
public:
    DirectedGraph() = default;

    /// Builds a digraph on `n` vertices from arcs (u -> v). Self-loops and
    /// repeated arcs are rejected, as are antiparallel pairs.
    static auto from_arcs(std::size_t n, std::span<const Edge> arcs) -> DirectedGraph;

    [[nodiscard]] auto num_vertices() const noexcept -> std::size_t { return _out_offsets.empty() ? 0 : _out_offsets.size() - 1; }
    [[nodiscard]] auto num_arcs() const noexcept -> std::size_t { return _out.size(); }

    [[nodiscard]] auto out_neighbors(VertexId v) const -> std::span<const VertexId>
    {
        return {_out.data() + _out_offsets[v], _out.data() + _out_offsets[v + 1]};
    }

    [[nodiscard]] auto in_neighbors(VertexId v) const -> std::span<const VertexId>
    {
        return {_in.data() + _in_offsets[v], _in.data() + _in_offsets[v + 1]};
    }

    [[nodiscard]] auto out_degree(VertexId v) const -> std::size_t { return _out_offsets[v + 1] - _out_offsets[v]; }
    [[nodiscard]] auto in_degree(VertexId v) const -> std::size_t { return _in_offsets[v + 1] - _in_offsets[v]; }
    [[nodiscard]] auto max_outdegree() const noexcept -> std::size_t { return _max_outdegree; }
    [[nodiscard]] auto has_arc(VertexId u, VertexId v) const -> bool;

    [[nodiscard]] auto arcs() const -> std::vector<Edge>;
    [[nodiscard]] auto is_acyclic() const -> bool;
    [[nodiscard]] auto to_undirected() const -> UndirectedGraph;

    [[nodiscard]] auto label(VertexId v) const -> std::uint64_t { return _labels.empty() ? v : _labels[v]; }
    void set_labels(std::vector<std::uint64_t> labels) { _labels = std::move(labels); }

private:
    std::vector<std::size_t> _out_offsets, _in_offsets;
    std::vector<VertexId> _out, _in;
    std::vector<std::uint64_t> _labels;
    std::size_t _max_outdegree = 0;
};

/// Reads a whitespace separated edge list. Lines whose first non-blank
/// character is '#' are comments. Labels are arbitrary non-negative integers;
/// they are remapped to dense ids in ascending label order.
auto load_edge_list(std::istream & in, const LoadOptions & options = {}) -> UndirectedGraph;

/// Writes "u v" lines using the graph's labels.
void write_edge_list(std::ostream & out, const UndirectedGraph & g);

struct DegeneracyOrder
{
    std::vector<VertexId> order;    ///< removal order
    std::size_t degeneracy = 0;
};

/// Repeatedly removes a vertex of minimum remaining degree, breaking ties by
/// smallest id.
auto degeneracy_order(const UndirectedGraph & g) -> DegeneracyOrder;

/// Directs every edge from the endpoint removed first to the one removed later.
auto orient_by_degeneracy(const UndirectedGraph & g) -> DirectedGraph;

} // namespace decount
