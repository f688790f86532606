#include <decount/dagtree.hpp>
#include <decount/error.hpp>

#include <algorithm>
#include <numeric>

namespace decount {

auto OrientedPattern::source_mask() const -> VertexMask
{
    VertexMask m = 0;
    for (int s : sources)
        m |= bit(s);
    return m;
}

auto OrientedPattern::reach_of(VertexMask source_set) const -> VertexMask
{
    VertexMask m = 0;
    for_each_vertex(source_set, [&](int s) { m |= reach[s]; });
    return m;
}

namespace
{
    // Fills sources, reach and intersection for the arcs already restricted to p.vertices.
    void compute_structure(OrientedPattern & p)
    {
        p.reach = {};
        p.sources.clear();
        p.intersection = 0;

        // Kahn order restricted to the vertex mask, then reach in reverse.
        std::vector<int> order;
        VertexMask placed = 0;
        while (popcount(placed) < popcount(p.vertices)) {
            bool progress = false;
            for_each_vertex(static_cast<VertexMask>(p.vertices & ~placed), [&](int v) {
                if ((p.dag.in[v] & p.vertices & ~placed) == 0 && ! (placed & bit(v))) {
                    order.push_back(v);
                    placed |= bit(v);
                    progress = true;
                }
            });
            if (! progress)
                throw InputError("oriented pattern has a directed cycle");
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int v = *it;
            VertexMask r = bit(v);
            for_each_vertex(static_cast<VertexMask>(p.dag.out[v] & p.vertices), [&](int w) { r |= p.reach[w]; });
            p.reach[v] = r;
        }

        for_each_vertex(p.vertices, [&](int v) {
            if ((p.dag.in[v] & p.vertices) == 0)
                p.sources.push_back(v);
        });

        std::array<int, max_pattern_vertices> hits{};
        for (int s : p.sources)
            for_each_vertex(p.reach[s], [&](int v) { ++hits[v]; });
        for_each_vertex(p.vertices, [&](int v) {
            if (hits[v] >= 2)
                p.intersection |= bit(v);
        });
    }
}

auto analyze(const SmallDigraph & dag) -> OrientedPattern
{
    OrientedPattern p;
    p.dag = dag;
    p.vertices = full_mask(dag.n);
    compute_structure(p);
    return p;
}

auto induced_by_sources(const OrientedPattern & p, VertexMask source_set) -> OrientedPattern
{
    if ((source_set & ~p.source_mask()) != 0)
        throw InputError("induced_by_sources: set contains a non-source vertex");

    OrientedPattern q;
    q.vertices = p.reach_of(source_set);
    q.dag.n = p.dag.n;
    for_each_vertex(q.vertices, [&](int v) {
        q.dag.out[v] = p.dag.out[v] & q.vertices;
        q.dag.in[v] = p.dag.in[v] & q.vertices;
    });
    compute_structure(q);
    return q;
}

auto DagTreeDecomposition::rerooted(int source) const -> DagTreeDecomposition
{
    auto it = std::find(nodes.begin(), nodes.end(), source);
    if (it == nodes.end())
        throw InputError("rerooted: source " + std::to_string(source) + " is not in the decomposition");
    int new_root = static_cast<int>(it - nodes.begin());

    DagTreeDecomposition result = *this;
    // Reverse the parent pointers along the path from the new root up to the old one.
    int previous = -1;
    int current = new_root;
    while (current != -1) {
        int next = parent[current];
        result.parent[current] = previous;
        previous = current;
        current = next;
    }
    result.root = new_root;
    return result;
}

auto is_valid_decomposition(const OrientedPattern & p, const DagTreeDecomposition & d) -> bool
{
    auto k = d.nodes.size();
    if (k == 0 || d.parent.size() != k || d.root < 0 || static_cast<std::size_t>(d.root) >= k)
        return false;
    if (d.parent[d.root] != -1)
        return false;

    auto sorted = d.nodes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    auto expected = p.sources;
    std::sort(expected.begin(), expected.end());
    if (sorted != expected)
        return false;

    // every bag must reach the root through parent pointers
    for (std::size_t i = 0; i < k; ++i) {
        int current = static_cast<int>(i);
        std::size_t steps = 0;
        while (current != d.root) {
            if (current < 0 || static_cast<std::size_t>(current) >= k || ++steps > k)
                return false;
            current = d.parent[current];
        }
    }

    // The sources reaching any vertex must span a connected subtree.
    for (int x = 0; x < p.dag.n; ++x) {
        if (! (p.vertices & bit(x)))
            continue;
        std::vector<bool> holds(k);
        int members = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (p.reach[d.nodes[i]] & bit(x)) {
                holds[i] = true;
                ++members;
            }
        if (members == 0)
            return false;
        int inner_edges = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (d.parent[i] != -1 && holds[i] && holds[d.parent[i]])
                ++inner_edges;
        if (inner_edges != members - 1)
            return false;
    }
    return true;
}

namespace
{
    auto tree_from_edges(const std::vector<int> & nodes, const std::vector<std::pair<int, int>> & edges) -> DagTreeDecomposition
    {
        auto k = nodes.size();
        std::vector<std::vector<int>> adjacent(k);
        for (auto [a, b] : edges) {
            adjacent[a].push_back(b);
            adjacent[b].push_back(a);
        }
        DagTreeDecomposition d;
        d.nodes = nodes;
        d.parent.assign(k, -1);
        d.root = 0;
        std::vector<bool> seen(k, false);
        std::vector<int> stack{0};
        seen[0] = true;
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adjacent[v])
                if (! seen[w]) {
                    seen[w] = true;
                    d.parent[w] = v;
                    stack.push_back(w);
                }
        }
        return d;
    }
}

auto find_tau1_decomposition(const OrientedPattern & p) -> std::optional<DagTreeDecomposition>
{
    const auto & s = p.sources;
    int k = static_cast<int>(s.size());
    if (k == 0)
        return std::nullopt;

    struct Candidate
    {
        int weight, a, b;
    };
    std::vector<Candidate> candidates;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            candidates.push_back({popcount(static_cast<VertexMask>(p.reach[s[a]] & p.reach[s[b]])), a, b});
    std::stable_sort(candidates.begin(), candidates.end(),
        [](const Candidate & x, const Candidate & y) { return x.weight > y.weight; });

    std::vector<int> leader(k);
    std::iota(leader.begin(), leader.end(), 0);
    auto find = [&](int v) {
        while (leader[v] != v)
            v = leader[v] = leader[leader[v]];
        return v;
    };

    std::vector<std::pair<int, int>> edges;
    for (const auto & c : candidates) {
        int ra = find(c.a), rb = find(c.b);
        if (ra == rb)
            continue;
        leader[ra] = rb;
        edges.emplace_back(c.a, c.b);
    }

    auto d = tree_from_edges(s, edges);
    if (! is_valid_decomposition(p, d))
        return std::nullopt;
    return d;
}

auto find_tau1_decomposition_exhaustive(const OrientedPattern & p) -> std::optional<DagTreeDecomposition>
{
    const auto & s = p.sources;
    int k = static_cast<int>(s.size());
    if (k > max_exhaustive_sources)
        throw CapExceededError("exhaustive tree search supports at most " + std::to_string(max_exhaustive_sources) + " sources");
    if (k == 0)
        return std::nullopt;
    if (k <= 2) {
        std::vector<std::pair<int, int>> edges;
        if (k == 2)
            edges.emplace_back(0, 1);
        auto d = tree_from_edges(s, edges);
        return is_valid_decomposition(p, d) ? std::optional(d) : std::nullopt;
    }

    std::vector<int> code(k - 2, 0);
    while (true) {
        // Prüfer decoding
        std::vector<int> degree(k, 1);
        for (int c : code)
            ++degree[c];
        std::vector<std::pair<int, int>> edges;
        for (int c : code) {
            int leaf = 0;
            while (degree[leaf] != 1)
                ++leaf;
            edges.emplace_back(leaf, c);
            --degree[leaf];
            --degree[c];
        }
        int u = -1, v = -1;
        for (int i = 0; i < k; ++i)
            if (degree[i] == 1)
                (u < 0 ? u : v) = i;
        edges.emplace_back(u, v);

        auto d = tree_from_edges(s, edges);
        if (is_valid_decomposition(p, d))
            return d;

        int pos = 0;
        while (pos < k - 2 && ++code[pos] == k)
            code[pos++] = 0;
        if (pos == k - 2)
            return std::nullopt;
    }
}

auto ExtensionTable::total() const -> BigInt
{
    BigInt sum = 0;
    for (const auto & [key, count] : entries)
        sum += count;
    return sum;
}

auto ExtensionTable::at(const ImageKey & key) const -> BigInt
{
    auto it = entries.find(key);
    return it == entries.end() ? BigInt(0) : it->second;
}

namespace
{
    struct ArcCheck
    {
        int other;
        bool outgoing;   ///< arc goes from the new vertex to `other`
    };

    // Enumerates homomorphisms of the sub-pattern reachable from one source.
    class RootedEnumerator
    {
    public:
        RootedEnumerator(const OrientedPattern & p, int source, const DirectedGraph & g) : _g(g)
        {
            VertexMask own = p.reach[source];
            _order.push_back(source);
            _tree_parent.push_back(-1);
            VertexMask placed = bit(source);
            for (std::size_t i = 0; i < _order.size(); ++i) {
                int u = _order[i];
                for_each_vertex(static_cast<VertexMask>(p.dag.out[u] & own & ~placed), [&](int v) {
                    placed |= bit(v);
                    _order.push_back(v);
                    _tree_parent.push_back(u);
                });
            }

            _checks.resize(_order.size());
            VertexMask before = 0;
            for (std::size_t i = 0; i < _order.size(); ++i) {
                int v = _order[i];
                for_each_vertex(static_cast<VertexMask>(p.dag.out[v] & before), [&](int w) {
                    _checks[i].push_back({w, true});
                });
                for_each_vertex(static_cast<VertexMask>(p.dag.in[v] & before), [&](int w) {
                    if (w != _tree_parent[i])
                        _checks[i].push_back({w, false});
                });
                before |= bit(v);
            }
        }

        template <typename F>
        void run(F && visit)
        {
            for (VertexId x = 0; x < _g.num_vertices(); ++x) {
                _assignment[_order[0]] = x;
                step(1, visit);
            }
        }

    private:
        const DirectedGraph & _g;
        std::vector<int> _order;
        std::vector<int> _tree_parent;
        std::vector<std::vector<ArcCheck>> _checks;
        std::array<VertexId, max_pattern_vertices> _assignment{};

        template <typename F>
        void step(std::size_t i, F & visit)
        {
            if (i == _order.size()) {
                visit(static_cast<const std::array<VertexId, max_pattern_vertices> &>(_assignment));
                return;
            }
            int v = _order[i];
            for (auto y : _g.out_neighbors(_assignment[_tree_parent[i]])) {
                bool ok = true;
                for (const auto & c : _checks[i]) {
                    auto other = _assignment[c.other];
                    if (c.outgoing ? ! _g.has_arc(y, other) : ! _g.has_arc(other, y)) {
                        ok = false;
                        break;
                    }
                }
                if (! ok)
                    continue;
                _assignment[v] = y;
                step(i + 1, visit);
            }
        }
    };
}

auto extension_counts(const OrientedPattern & p, const DagTreeDecomposition & d, const DirectedGraph & g, VertexMask target)
    -> ExtensionTable
{
    if (! is_valid_decomposition(p, d))
        throw InputError("extension_counts: decomposition is not a valid width-1 decomposition of the pattern");
    if (! contains(p.reach[d.root_source()], target))
        throw InputError("extension_counts: target vertices are not all reachable from the root source");

    auto k = d.nodes.size();
    std::vector<std::vector<int>> children(k);
    for (std::size_t i = 0; i < k; ++i)
        if (d.parent[i] != -1)
            children[d.parent[i]].push_back(static_cast<int>(i));

    std::vector<int> post_order;
    {
        std::vector<std::pair<int, bool>> stack{{d.root, false}};
        while (! stack.empty()) {
            auto [node, expanded] = stack.back();
            stack.pop_back();
            if (expanded) {
                post_order.push_back(node);
                continue;
            }
            stack.emplace_back(node, true);
            for (auto it = children[node].rbegin(); it != children[node].rend(); ++it)
                stack.emplace_back(*it, false);
        }
    }

    std::vector<ExtensionTable> tables(k);
    for (int node : post_order) {
        int source = d.nodes[node];
        VertexMask key = node == d.root ? target
                                        : static_cast<VertexMask>(p.reach[source] & p.reach[d.nodes[d.parent[node]]]);
        auto & table = tables[node];
        table.key_vertices = key;

        RootedEnumerator enumerator(p, source, g);
        enumerator.run([&](const std::array<VertexId, max_pattern_vertices> & assignment) {
            BigInt product = 1;
            for (int c : children[node]) {
                const auto & child = tables[c];
                auto it = child.entries.find(restrict_image(assignment, child.key_vertices));
                if (it == child.entries.end())
                    return;
                product *= it->second;
            }
            table.entries[restrict_image(assignment, key)] += product;
        });

        for (int c : children[node])
            tables[c] = ExtensionTable{};
    }
    return std::move(tables[d.root]);
}

auto hom_count_tau1(const OrientedPattern & p, const DagTreeDecomposition & d, const DirectedGraph & g) -> BigInt
{
    return extension_counts(p, d, g, 0).total();
}

auto hom_count_tau1(const OrientedPattern & p, const DirectedGraph & g) -> BigInt
{
    auto d = find_tau1_decomposition(p);
    if (! d)
        throw UnsupportedError("oriented pattern has no width-1 DAG-tree decomposition");
    return hom_count_tau1(p, *d, g);
}

} // namespace decount
