#include <decount/error.hpp>
#include <decount/oracle.hpp>

#include <algorithm>

namespace decount {

namespace
{
    // Pattern vertices in BFS order over the underlying undirected graph;
    // `anchor[i]` is an earlier neighbour of order[i] (-1 starts a new component).
    struct SearchOrder
    {
        std::vector<int> order;
        std::vector<int> anchor;
    };

    auto search_order(const SmallDigraph & h) -> SearchOrder
    {
        SearchOrder s;
        VertexMask placed = 0;
        for (int start = 0; start < h.n; ++start) {
            if (placed & bit(start))
                continue;
            placed |= bit(start);
            s.order.push_back(start);
            s.anchor.push_back(-1);
            for (std::size_t i = s.order.size() - 1; i < s.order.size(); ++i) {
                int u = s.order[i];
                for_each_vertex(static_cast<VertexMask>((h.out[u] | h.in[u]) & ~placed), [&](int v) {
                    placed |= bit(v);
                    s.order.push_back(v);
                    s.anchor.push_back(u);
                });
            }
        }
        return s;
    }

    // Shared backtracking over a digraph pattern. Undirected inputs use the
    // symmetric digraph on both sides, so every check is an arc check.
    template <typename HasArc, typename Candidates>
    auto count_maps(const SmallDigraph & h, std::size_t n, bool injective, HasArc && has_arc, Candidates && candidates)
        -> BigInt
    {
        if (h.n == 0)
            return 1;
        auto s = search_order(h);
        std::vector<VertexId> image(h.n);
        std::vector<char> used(n, 0);
        BigInt total = 0;

        auto consistent = [&](std::size_t i, VertexId y) {
            int v = s.order[i];
            if (injective && used[y])
                return false;
            for (std::size_t j = 0; j < i; ++j) {
                int w = s.order[j];
                if (h.has_arc(v, w) && ! has_arc(y, image[w]))
                    return false;
                if (h.has_arc(w, v) && ! has_arc(image[w], y))
                    return false;
            }
            return true;
        };

        auto place = [&](auto & self, std::size_t i) -> void {
            if (i == s.order.size()) {
                ++total;
                return;
            }
            auto try_vertex = [&](VertexId y) {
                if (! consistent(i, y))
                    return;
                image[s.order[i]] = y;
                used[y] = 1;
                self(self, i + 1);
                used[y] = 0;
            };
            if (s.anchor[i] < 0) {
                for (VertexId y = 0; y < n; ++y)
                    try_vertex(y);
            }
            else
                candidates(image[s.anchor[i]], try_vertex);
        };
        place(place, 0);
        return total;
    }

    auto undirected_count(const UndirectedGraph & g, const Pattern & h, bool injective) -> BigInt
    {
        return count_maps(
            h.as_digraph(), g.num_vertices(), injective, [&](VertexId a, VertexId b) { return g.has_edge(a, b); },
            [&](VertexId from, auto && visit) {
                for (auto y : g.neighbors(from))
                    visit(y);
            });
    }
}

auto hom_bruteforce(const UndirectedGraph & g, const Pattern & h) -> BigInt { return undirected_count(g, h, false); }

auto injective_hom_bruteforce(const UndirectedGraph & g, const Pattern & h) -> BigInt { return undirected_count(g, h, true); }

auto hom_bruteforce(const DirectedGraph & g, const SmallDigraph & h) -> BigInt
{
    return count_maps(
        h, g.num_vertices(), false, [&](VertexId a, VertexId b) { return g.has_arc(a, b); },
        [&](VertexId from, auto && visit) {
            for (auto y : g.out_neighbors(from))
                visit(y);
            for (auto y : g.in_neighbors(from))
                visit(y);
        });
}

auto automorphisms_bruteforce(const Pattern & h) -> std::uint64_t
{
    return static_cast<std::uint64_t>(injective_hom_bruteforce(h.to_graph(), h));
}

auto sub_bruteforce(const UndirectedGraph & g, const Pattern & h) -> BigInt
{
    return exact_divide(injective_hom_bruteforce(g, h), static_cast<unsigned>(automorphisms_bruteforce(h)), "subgraph count");
}

auto cycle_bruteforce(const UndirectedGraph & g, int k) -> BigInt
{
    if (k < 3)
        throw InputError("cycles have at least 3 vertices");
    auto n = g.num_vertices();
    BigInt total = 0;
    std::vector<VertexId> path;
    std::vector<char> on_path(n, 0);

    auto extend = [&](auto & self, VertexId start) -> void {
        auto last = path.back();
        if (path.size() == static_cast<std::size_t>(k)) {
            if (path[1] < path.back() && g.has_edge(last, start))
                ++total;
            return;
        }
        for (auto next : g.neighbors(last)) {
            if (next <= start || on_path[next])
                continue;
            path.push_back(next);
            on_path[next] = 1;
            self(self, start);
            on_path[next] = 0;
            path.pop_back();
        }
    };

    for (VertexId s = 0; s < n; ++s) {
        path = {s};
        on_path[s] = 1;
        extend(extend, s);
        on_path[s] = 0;
    }
    return total;
}

} // namespace decount
