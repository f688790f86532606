#include <decount/error.hpp>
#include <decount/graph.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <string>

namespace decount {

namespace
{
    auto build_csr(std::size_t n, const std::vector<Edge> & arcs, bool by_first, std::vector<std::size_t> & offsets,
        std::vector<VertexId> & targets) -> void
    {
        offsets.assign(n + 1, 0);
        for (const auto & [u, v] : arcs)
            ++offsets[(by_first ? u : v) + 1];
        for (std::size_t i = 0; i < n; ++i)
            offsets[i + 1] += offsets[i];
        targets.resize(arcs.size());
        auto cursor = offsets;
        for (const auto & [u, v] : arcs) {
            auto from = by_first ? u : v;
            targets[cursor[from]++] = by_first ? v : u;
        }
        for (std::size_t i = 0; i < n; ++i)
            std::sort(targets.begin() + offsets[i], targets.begin() + offsets[i + 1]);
    }
}

auto UndirectedGraph::from_edges(std::size_t n, std::span<const Edge> edges, bool dedupe) -> UndirectedGraph
{
    std::vector<Edge> normalised;
    normalised.reserve(edges.size());
    for (const auto & [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") refers to a vertex outside 0.." +
                std::to_string(n == 0 ? 0 : n - 1));
        if (u == v)
            throw InputError("self-loop on vertex " + std::to_string(u));
        normalised.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalised.begin(), normalised.end());
    auto dup = std::adjacent_find(normalised.begin(), normalised.end());
    if (dup != normalised.end()) {
        if (! dedupe)
            throw InputError("duplicate edge (" + std::to_string(dup->first) + ", " + std::to_string(dup->second) + ")");
        normalised.erase(std::unique(normalised.begin(), normalised.end()), normalised.end());
    }

    std::vector<Edge> arcs;
    arcs.reserve(2 * normalised.size());
    for (const auto & [u, v] : normalised) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }

    UndirectedGraph g;
    build_csr(n, arcs, true, g._offsets, g._adjacency);
    return g;
}

auto UndirectedGraph::has_edge(VertexId u, VertexId v) const -> bool
{
    if (degree(u) > degree(v))
        std::swap(u, v);
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

auto UndirectedGraph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(num_edges());
    for (VertexId u = 0; u < num_vertices(); ++u)
        for (auto v : neighbors(u))
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto UndirectedGraph::labels() const -> std::vector<std::uint64_t>
{
    std::vector<std::uint64_t> result(num_vertices());
    for (VertexId v = 0; v < num_vertices(); ++v)
        result[v] = label(v);
    return result;
}

void UndirectedGraph::set_labels(std::vector<std::uint64_t> labels)
{
    if (! labels.empty() && labels.size() != num_vertices())
        throw InputError("label table size does not match vertex count");
    _labels = std::move(labels);
}

auto UndirectedGraph::degeneracy() const -> std::size_t { return degeneracy_order(*this).degeneracy; }

auto DirectedGraph::from_arcs(std::size_t n, std::span<const Edge> arcs) -> DirectedGraph
{
    std::vector<Edge> sorted(arcs.begin(), arcs.end());
    for (const auto & [u, v] : sorted) {
        if (u >= n || v >= n)
            throw InputError("arc refers to a vertex outside the graph");
        if (u == v)
            throw InputError("self-loop on vertex " + std::to_string(u));
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("repeated arc");
    for (const auto & [u, v] : sorted)
        if (std::binary_search(sorted.begin(), sorted.end(), Edge{v, u}))
            throw InputError("antiparallel arcs between " + std::to_string(u) + " and " + std::to_string(v));

    DirectedGraph g;
    build_csr(n, sorted, true, g._out_offsets, g._out);
    build_csr(n, sorted, false, g._in_offsets, g._in);
    for (VertexId v = 0; v < n; ++v)
        g._max_outdegree = std::max(g._max_outdegree, g.out_degree(v));
    return g;
}

auto DirectedGraph::has_arc(VertexId u, VertexId v) const -> bool
{
    auto out = out_neighbors(u);
    return std::binary_search(out.begin(), out.end(), v);
}

auto DirectedGraph::arcs() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(num_arcs());
    for (VertexId u = 0; u < num_vertices(); ++u)
        for (auto v : out_neighbors(u))
            result.emplace_back(u, v);
    return result;
}

auto DirectedGraph::is_acyclic() const -> bool
{
    // Kahn's algorithm
    std::vector<std::size_t> indegree(num_vertices());
    std::vector<VertexId> ready;
    for (VertexId v = 0; v < num_vertices(); ++v)
        if ((indegree[v] = in_degree(v)) == 0)
            ready.push_back(v);
    std::size_t seen = 0;
    while (! ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        ++seen;
        for (auto w : out_neighbors(v))
            if (--indegree[w] == 0)
                ready.push_back(w);
    }
    return seen == num_vertices();
}

auto DirectedGraph::to_undirected() const -> UndirectedGraph
{
    auto a = arcs();
    auto g = UndirectedGraph::from_edges(num_vertices(), a, false);
    if (! _labels.empty())
        g.set_labels(_labels);
    return g;
}

auto load_edge_list(std::istream & in, const LoadOptions & options) -> UndirectedGraph
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> first_seen;
    std::string line;
    std::size_t line_number = 0;

    auto parse_token = [&](std::string_view token) -> std::uint64_t {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw InputError("line " + std::to_string(line_number) + ": expected a non-negative integer, got '" +
                std::string(token) + "'");
        return value;
    };

    while (std::getline(in, line)) {
        ++line_number;
        std::string_view view(line);
        auto start = view.find_first_not_of(" \t\r");
        if (start == std::string_view::npos || view[start] == '#')
            continue;

        std::vector<std::string_view> tokens;
        std::size_t pos = start;
        while (pos < view.size()) {
            auto end = view.find_first_of(" \t\r", pos);
            if (end == std::string_view::npos)
                end = view.size();
            if (end > pos)
                tokens.push_back(view.substr(pos, end - pos));
            pos = view.find_first_not_of(" \t\r", end);
            if (pos == std::string_view::npos)
                break;
        }
        if (tokens.size() != 2)
            throw InputError("line " + std::to_string(line_number) + ": expected two vertex labels");

        auto u = parse_token(tokens[0]);
        auto v = parse_token(tokens[1]);
        if (u == v)
            throw InputError("line " + std::to_string(line_number) + ": self-loop on vertex " + std::to_string(u));

        auto key = std::minmax(u, v);
        auto [it, inserted] = first_seen.emplace(key, line_number);
        if (! inserted) {
            if (! options.dedupe)
                throw InputError("line " + std::to_string(line_number) + ": duplicate edge (" + std::to_string(u) + ", " +
                    std::to_string(v) + ") first seen on line " + std::to_string(it->second));
            continue;
        }
        raw.emplace_back(u, v);
    }

    std::vector<std::uint64_t> labels;
    labels.reserve(2 * raw.size());
    for (const auto & [u, v] : raw) {
        labels.push_back(u);
        labels.push_back(v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    auto dense = [&](std::uint64_t label) {
        return static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
    };

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto & [u, v] : raw)
        edges.emplace_back(dense(u), dense(v));

    auto g = UndirectedGraph::from_edges(labels.size(), edges, false);
    g.set_labels(std::move(labels));
    return g;
}

void write_edge_list(std::ostream & out, const UndirectedGraph & g)
{
    for (const auto & [u, v] : g.edges())
        out << g.label(u) << ' ' << g.label(v) << '\n';
}

auto degeneracy_order(const UndirectedGraph & g) -> DegeneracyOrder
{
    auto n = g.num_vertices();
    DegeneracyOrder result;
    result.order.reserve(n);
    if (n == 0)
        return result;

    std::size_t max_degree = 0;
    std::vector<std::size_t> degree(n);
    for (VertexId v = 0; v < n; ++v)
        max_degree = std::max(max_degree, degree[v] = g.degree(v));

    // Bucket queue by current degree; each bucket is a min-heap of ids so the
    // smallest id wins ties. Stale entries are skipped lazily.
    using MinHeap = std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>>;
    std::vector<MinHeap> buckets(max_degree + 1);
    for (VertexId v = 0; v < n; ++v)
        buckets[degree[v]].push(v);

    std::vector<bool> removed(n, false);
    std::size_t current = 0;
    while (result.order.size() < n) {
        while (buckets[current].empty())
            ++current;
        auto v = buckets[current].top();
        buckets[current].pop();
        if (removed[v] || degree[v] != current)
            continue;

        removed[v] = true;
        result.order.push_back(v);
        result.degeneracy = std::max(result.degeneracy, current);
        for (auto w : g.neighbors(v)) {
            if (removed[w])
                continue;
            --degree[w];
            buckets[degree[w]].push(w);
        }
        if (current > 0)
            --current;
    }
    return result;
}

auto orient_by_degeneracy(const UndirectedGraph & g) -> DirectedGraph
{
    auto order = degeneracy_order(g);
    std::vector<std::size_t> position(g.num_vertices());
    for (std::size_t i = 0; i < order.order.size(); ++i)
        position[order.order[i]] = i;

    std::vector<Edge> arcs;
    arcs.reserve(g.num_edges());
    for (const auto & [u, v] : g.edges())
        arcs.push_back(position[u] < position[v] ? Edge{u, v} : Edge{v, u});

    auto d = DirectedGraph::from_arcs(g.num_vertices(), arcs);
    d.set_labels(g.labels());
    return d;
}

} // namespace decount
