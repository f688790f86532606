#include <decount/error.hpp>
#include <decount/pattern.hpp>

#include <algorithm>
#include <deque>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace decount {

auto mask_vertices(VertexMask mask) -> std::vector<int>
{
    std::vector<int> result;
    for_each_vertex(mask, [&](int v) { result.push_back(v); });
    return result;
}

auto SmallDigraph::num_arcs() const -> int
{
    int total = 0;
    for (int v = 0; v < n; ++v)
        total += popcount(out[v]);
    return total;
}

auto SmallDigraph::arcs() const -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> result;
    for (int u = 0; u < n; ++u)
        for_each_vertex(out[u], [&](int v) { result.emplace_back(u, v); });
    return result;
}

auto SmallDigraph::is_acyclic() const -> bool
{
    VertexMask remaining = full_mask(n);
    bool progress = true;
    while (remaining != 0 && progress) {
        progress = false;
        for_each_vertex(remaining, [&](int v) {
            if ((in[v] & remaining) == 0) {
                remaining &= static_cast<VertexMask>(~bit(v));
                progress = true;
            }
        });
    }
    return remaining == 0;
}

auto Pattern::from_edges(int n, std::span<const std::pair<int, int>> edges) -> Pattern
{
    if (n > max_pattern_vertices)
        throw CapExceededError("pattern has " + std::to_string(n) + " vertices; the cap is " +
            std::to_string(max_pattern_vertices));
    if (n < 1)
        throw InputError("pattern must have at least one vertex");

    Pattern p;
    p._n = n;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("pattern edge refers to a vertex outside the pattern");
        if (u == v)
            throw InputError("pattern has a self-loop");
        p._adj[u] |= bit(v);
        p._adj[v] |= bit(u);
    }

    VertexMask seen = 1, frontier = 1;
    while (frontier != 0) {
        VertexMask next = 0;
        for_each_vertex(frontier, [&](int v) { next |= p._adj[v]; });
        frontier = next & static_cast<VertexMask>(~seen);
        seen |= next;
    }
    if (seen != full_mask(n))
        throw InputError("pattern is not connected");
    return p;
}

auto Pattern::from_graph(const UndirectedGraph & g) -> Pattern
{
    if (g.num_vertices() > static_cast<std::size_t>(max_pattern_vertices))
        throw CapExceededError("pattern has " + std::to_string(g.num_vertices()) + " vertices; the cap is " +
            std::to_string(max_pattern_vertices));
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    return from_edges(static_cast<int>(g.num_vertices()), edges);
}

auto Pattern::num_edges() const -> int
{
    int total = 0;
    for (int v = 0; v < _n; ++v)
        total += popcount(_adj[v]);
    return total / 2;
}

auto Pattern::edges() const -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> result;
    for (int u = 0; u < _n; ++u)
        for_each_vertex(_adj[u], [&](int v) {
            if (u < v)
                result.emplace_back(u, v);
        });
    return result;
}

auto Pattern::to_graph() const -> UndirectedGraph
{
    std::vector<Edge> e;
    for (auto [u, v] : edges())
        e.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    return UndirectedGraph::from_edges(static_cast<std::size_t>(_n), e);
}

auto Pattern::as_digraph() const -> SmallDigraph
{
    SmallDigraph d;
    d.n = _n;
    for (int v = 0; v < _n; ++v) {
        d.out[v] = _adj[v];
        d.in[v] = _adj[v];
    }
    return d;
}

auto CanonicalForm::to_string() const -> std::string
{
    std::ostringstream s;
    s << n << ':' << std::hex;
    auto hi = static_cast<std::uint64_t>(code >> 64);
    auto lo = static_cast<std::uint64_t>(code);
    if (hi != 0)
        s << hi << std::setfill('0') << std::setw(16);
    s << lo;
    return s.str();
}

namespace
{
    using Colouring = std::array<int, max_pattern_vertices>;

    // Individualisation-refinement over colourings. Refinement is
    // isomorphism invariant and keeps the relative order of existing cells,
    // so every leaf is a distinct labelling and the leaves sharing the
    // minimal code are exactly the images of one another under Aut(g).
    class CanonicalSearch
    {
    public:
        explicit CanonicalSearch(const SmallDigraph & g) : _g(g) {}

        void run()
        {
            Colouring colour{};
            search(colour);
        }

        unsigned __int128 best_code = 0;
        std::uint64_t leaves_at_best = 0;
        std::vector<int> best_labelling;

    private:
        const SmallDigraph & _g;
        bool _have_best = false;

        auto refine(Colouring & colour) const -> int
        {
            int n = _g.n;
            int classes = 0;
            {
                std::vector<int> distinct(colour.begin(), colour.begin() + n);
                std::sort(distinct.begin(), distinct.end());
                classes = static_cast<int>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
            }

            while (true) {
                std::vector<std::vector<int>> signature(n);
                for (int v = 0; v < n; ++v) {
                    auto & s = signature[v];
                    s.push_back(colour[v]);
                    std::vector<int> outs, ins;
                    for_each_vertex(_g.out[v], [&](int w) { outs.push_back(colour[w]); });
                    for_each_vertex(_g.in[v], [&](int w) { ins.push_back(colour[w]); });
                    std::sort(outs.begin(), outs.end());
                    std::sort(ins.begin(), ins.end());
                    s.push_back(static_cast<int>(outs.size()));
                    s.insert(s.end(), outs.begin(), outs.end());
                    s.push_back(static_cast<int>(ins.size()));
                    s.insert(s.end(), ins.begin(), ins.end());
                }
                auto sorted = signature;
                std::sort(sorted.begin(), sorted.end());
                sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                for (int v = 0; v < n; ++v)
                    colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), signature[v]) - sorted.begin());
                int now = static_cast<int>(sorted.size());
                if (now == classes)
                    return classes;
                classes = now;
            }
        }

        void search(Colouring colour)
        {
            int n = _g.n;
            int classes = refine(colour);
            if (classes == n) {
                leaf(colour);
                return;
            }

            std::vector<int> cell_size(n, 0);
            for (int v = 0; v < n; ++v)
                ++cell_size[colour[v]];
            int target = 0;
            while (cell_size[target] < 2)
                ++target;

            for (int v = 0; v < n; ++v) {
                if (colour[v] != target)
                    continue;
                Colouring next{};
                for (int u = 0; u < n; ++u)
                    next[u] = 2 * colour[u] + ((colour[u] == target && u != v) ? 1 : 0);
                search(next);
            }
        }

        void leaf(const Colouring & colour)
        {
            int n = _g.n;
            std::vector<int> labelling(n);
            for (int v = 0; v < n; ++v)
                labelling[colour[v]] = v;

            unsigned __int128 code = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (_g.has_arc(labelling[i], labelling[j]))
                        code |= static_cast<unsigned __int128>(1) << (i * n + j);

            if (! _have_best || code < best_code) {
                _have_best = true;
                best_code = code;
                leaves_at_best = 1;
                best_labelling = std::move(labelling);
            }
            else if (code == best_code)
                ++leaves_at_best;
        }
    };

    auto canonical_impl(const SmallDigraph & g) -> CanonicalSearch
    {
        CanonicalSearch search(g);
        if (g.n > 0)
            search.run();
        return search;
    }
}

auto canonical_form(const SmallDigraph & h) -> CanonicalForm
{
    if (h.n > max_pattern_vertices)
        throw CapExceededError("graph exceeds the pattern vertex cap");
    auto search = canonical_impl(h);
    return CanonicalForm{h.n, search.best_code, std::max<std::uint64_t>(search.leaves_at_best, 1)};
}

auto canonical_form(const Pattern & h) -> CanonicalForm { return canonical_form(h.as_digraph()); }

auto canonical_labelling(const SmallDigraph & h) -> std::vector<int> { return canonical_impl(h).best_labelling; }

auto pattern_from_form(const CanonicalForm & form) -> Pattern
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < form.n; ++i)
        for (int j = i + 1; j < form.n; ++j)
            if ((form.code >> (i * form.n + j)) & 1)
                edges.emplace_back(i, j);
    return Pattern::from_edges(form.n, edges);
}

auto digraph_from_form(const CanonicalForm & form) -> SmallDigraph
{
    SmallDigraph d;
    d.n = form.n;
    for (int i = 0; i < form.n; ++i)
        for (int j = 0; j < form.n; ++j)
            if ((form.code >> (i * form.n + j)) & 1)
                d.add_arc(i, j);
    return d;
}

auto enumerate_acyclic_orientations(const Pattern & h) -> std::vector<SmallDigraph>
{
    auto edges = h.edges();
    std::vector<SmallDigraph> result;
    SmallDigraph current;
    current.n = h.num_vertices();

    auto reaches = [&](int from, int to) {
        VertexMask seen = bit(from), frontier = bit(from);
        while (frontier != 0) {
            if (frontier & bit(to))
                return true;
            VertexMask next = 0;
            for_each_vertex(frontier, [&](int v) { next |= current.out[v]; });
            frontier = next & static_cast<VertexMask>(~seen);
            seen |= next;
        }
        return (seen & bit(to)) != 0;
    };

    auto recurse = [&](auto & self, std::size_t index) -> void {
        if (index == edges.size()) {
            result.push_back(current);
            return;
        }
        auto [u, v] = edges[index];
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            if (reaches(b, a))
                continue;
            current.add_arc(a, b);
            self(self, index + 1);
            current.out[a] &= static_cast<VertexMask>(~bit(b));
            current.in[b] &= static_cast<VertexMask>(~bit(a));
        }
    };
    recurse(recurse, 0);
    return result;
}

auto orientation_classes(const Pattern & h) -> std::vector<OrientationClass>
{
    std::vector<OrientationClass> classes;
    std::unordered_map<CanonicalForm, std::size_t, CanonicalFormHash> index;
    for (const auto & orientation : enumerate_acyclic_orientations(h)) {
        auto form = canonical_form(orientation);
        auto [it, inserted] = index.emplace(form, classes.size());
        if (inserted)
            classes.push_back(OrientationClass{orientation, form, 0});
        ++classes[it->second].multiplicity;
    }
    return classes;
}

auto licl(const Pattern & h) -> int
{
    int n = h.num_vertices();
    int best = 0;
    for (unsigned subset = 1; subset < (1u << n); ++subset) {
        auto mask = static_cast<VertexMask>(subset);
        int size = popcount(mask);
        if (size < 3 || size <= best)
            continue;

        bool two_regular = true;
        for_each_vertex(mask, [&](int v) {
            if (popcount(h.neighbors(v) & mask) != 2)
                two_regular = false;
        });
        if (! two_regular)
            continue;

        VertexMask start = static_cast<VertexMask>(mask & (~mask + 1));
        VertexMask seen = start, frontier = start;
        while (frontier != 0) {
            VertexMask next = 0;
            for_each_vertex(frontier, [&](int v) { next |= h.neighbors(v) & mask; });
            frontier = next & static_cast<VertexMask>(~seen);
            seen |= next;
        }
        if (seen == mask)
            best = size;
    }
    return best;
}

auto SpasmDecomposition::find(const CanonicalForm & form) const -> const SpasmEntry *
{
    for (const auto & e : entries)
        if (e.form == form)
            return &e;
    return nullptr;
}

auto quotient(const Pattern & h, std::span<const int> block_of) -> Pattern
{
    int blocks = 0;
    for (int b : block_of)
        blocks = std::max(blocks, b + 1);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : h.edges()) {
        int a = block_of[u], b = block_of[v];
        if (a == b)
            throw InputError("quotient block is not an independent set");
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Pattern::from_edges(blocks, edges);
}

namespace
{
    void sort_entries(std::vector<SpasmEntry> & entries)
    {
        std::sort(entries.begin(), entries.end(), [](const SpasmEntry & a, const SpasmEntry & b) {
            if (a.pattern.num_vertices() != b.pattern.num_vertices())
                return a.pattern.num_vertices() > b.pattern.num_vertices();
            if (a.pattern.num_edges() != b.pattern.num_edges())
                return a.pattern.num_edges() > b.pattern.num_edges();
            return a.form.code < b.form.code;
        });
    }
}

auto spasm(const Pattern & h) -> SpasmDecomposition
{
    SpasmDecomposition dec;
    dec.source = h;
    std::unordered_map<CanonicalForm, bool, CanonicalFormHash> seen;
    std::deque<Pattern> queue;

    auto visit = [&](const Pattern & p) {
        auto form = canonical_form(p);
        if (seen.emplace(form, true).second) {
            dec.entries.push_back(SpasmEntry{pattern_from_form(form), form, Rational(0)});
            queue.push_back(p);
        }
    };

    visit(h);
    while (! queue.empty()) {
        auto p = queue.front();
        queue.pop_front();
        int n = p.num_vertices();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (p.adjacent(u, v))
                    continue;
                std::vector<int> block(n);
                for (int w = 0, next = 0; w < n; ++w)
                    block[w] = (w == v) ? block[u] : next++;
                visit(quotient(p, block));
            }
    }
    sort_entries(dec.entries);
    return dec;
}

auto spasm_coefficients(const Pattern & h) -> SpasmDecomposition
{
    int n = h.num_vertices();
    auto aut = canonical_form(h).automorphisms;

    // (-1)^(s-1) (s-1)! for block sizes up to n
    std::vector<BigInt> block_weight(n + 1);
    BigInt factorial = 1;
    for (int s = 1; s <= n; ++s) {
        block_weight[s] = (s % 2 == 1) ? factorial : BigInt(-factorial);
        factorial *= s;
    }

    std::unordered_map<CanonicalForm, std::size_t, CanonicalFormHash> index;
    std::vector<SpasmEntry> entries;
    std::vector<BigInt> sums;
    std::vector<int> block(n, -1);
    std::vector<VertexMask> members;

    auto recurse = [&](auto & self, int v) -> void {
        if (v == n) {
            BigInt mu = 1;
            for (auto m : members)
                mu *= block_weight[popcount(m)];
            auto q = quotient(h, block);
            auto form = canonical_form(q);
            auto [it, inserted] = index.emplace(form, entries.size());
            if (inserted) {
                entries.push_back(SpasmEntry{pattern_from_form(form), form, Rational(0)});
                sums.emplace_back(0);
            }
            sums[it->second] += mu;
            return;
        }
        for (std::size_t b = 0; b < members.size(); ++b) {
            if (members[b] & h.neighbors(v))
                continue;
            block[v] = static_cast<int>(b);
            members[b] |= bit(v);
            self(self, v + 1);
            members[b] &= static_cast<VertexMask>(~bit(v));
        }
        block[v] = static_cast<int>(members.size());
        members.push_back(bit(v));
        self(self, v + 1);
        members.pop_back();
    };
    recurse(recurse, 0);

    for (std::size_t i = 0; i < entries.size(); ++i)
        entries[i].coefficient = Rational(sums[i], BigInt(aut));

    SpasmDecomposition dec;
    dec.source = h;
    dec.entries = std::move(entries);
    sort_entries(dec.entries);
    return dec;
}

auto sub_from_homs(const SpasmDecomposition & dec, const HomTable & homs) -> BigInt
{
    Rational total = 0;
    for (const auto & entry : dec.entries) {
        if (entry.coefficient == 0)
            continue;
        auto it = homs.find(entry.form);
        if (it == homs.end())
            throw InputError("no homomorphism count supplied for spasm entry " + entry.form.to_string());
        total += entry.coefficient * Rational(it->second);
    }
    auto result = to_integer(total, "subgraph count");
    if (result < 0)
        throw InvariantError("subgraph count is negative: " + result.str());
    return result;
}

auto cycle_pattern(int k) -> Pattern
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        edges.emplace_back(i, (i + 1) % k);
    return Pattern::from_edges(k, edges);
}

auto path_pattern(int vertices) -> Pattern
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < vertices; ++i)
        edges.emplace_back(i, i + 1);
    return Pattern::from_edges(vertices, edges);
}

auto complete_pattern(int n) -> Pattern
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Pattern::from_edges(n, edges);
}

namespace
{
    auto all_graphs(int n) -> std::vector<SmallDigraph>
    {
        if (n == 1) {
            SmallDigraph g;
            g.n = 1;
            return {g};
        }
        std::map<CanonicalForm, SmallDigraph> found;
        for (const auto & smaller : all_graphs(n - 1)) {
            for (unsigned nbrs = 0; nbrs < (1u << (n - 1)); ++nbrs) {
                SmallDigraph g = smaller;
                g.n = n;
                for_each_vertex(static_cast<VertexMask>(nbrs), [&](int v) {
                    g.add_arc(v, n - 1);
                    g.add_arc(n - 1, v);
                });
                found.emplace(canonical_form(g), g);
            }
        }
        std::vector<SmallDigraph> result;
        for (auto & [form, g] : found)
            result.push_back(g);
        return result;
    }
}

auto connected_patterns(int n) -> std::vector<Pattern>
{
    if (n < 1 || n > max_pattern_vertices)
        throw CapExceededError("connected_patterns supports 1.." + std::to_string(max_pattern_vertices) + " vertices");
    std::vector<Pattern> result;
    for (const auto & g : all_graphs(n)) {
        VertexMask seen = 1, frontier = 1;
        while (frontier != 0) {
            VertexMask next = 0;
            for_each_vertex(frontier, [&](int v) { next |= g.out[v]; });
            frontier = next & static_cast<VertexMask>(~seen);
            seen |= next;
        }
        if (seen == full_mask(n))
            result.push_back(pattern_from_form(canonical_form(g)));
    }
    return result;
}

} // namespace decount
