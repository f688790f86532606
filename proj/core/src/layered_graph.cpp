#include <decount/error.hpp>
#include <decount/layered_graph.hpp>

#include <algorithm>

namespace decount {

LayeredWeightedGraph::LayeredWeightedGraph(int layers) :
    k(layers),
    layer_size(layers, 0),
    edges(layers)
{
    if (layers < 3)
        throw InputError("a layered graph needs at least 3 layers");
}

auto LayeredWeightedGraph::add_vertex(int layer) -> VertexId { return static_cast<VertexId>(layer_size.at(layer)++); }

void LayeredWeightedGraph::add_edge(int layer, VertexId u, VertexId v, BigInt weight)
{
    if (layer < 0 || layer >= k)
        throw InputError("layer index out of range");
    if (u >= layer_size[layer] || v >= layer_size[(layer + 1) % k])
        throw InputError("layered edge endpoint out of range");
    edges[layer].push_back(LayeredEdge{u, v, std::move(weight)});
}

auto LayeredWeightedGraph::num_vertices() const -> std::size_t
{
    std::size_t total = 0;
    for (auto s : layer_size)
        total += s;
    return total;
}

auto LayeredWeightedGraph::num_edges() const -> std::size_t
{
    std::size_t total = 0;
    for (const auto & e : edges)
        total += e.size();
    return total;
}

void LayeredWeightedGraph::normalise()
{
    for (auto & list : edges) {
        std::sort(list.begin(), list.end(), [](const LayeredEdge & a, const LayeredEdge & b) {
            return a.u != b.u ? a.u < b.u : a.v < b.v;
        });
        std::vector<LayeredEdge> merged;
        for (auto & e : list) {
            if (! merged.empty() && merged.back().u == e.u && merged.back().v == e.v)
                merged.back().weight += e.weight;
            else
                merged.push_back(std::move(e));
        }
        std::erase_if(merged, [](const LayeredEdge & e) { return e.weight == 0; });
        list = std::move(merged);
    }
}

} // namespace decount
