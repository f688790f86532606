#include <decount/error.hpp>
#include <decount/reducer.hpp>

#include <algorithm>
#include <unordered_map>

namespace decount {

namespace
{
    auto prev_index(int i, int k) -> int { return (i + k - 1) % k; }

    class CycleSearch
    {
    public:
        explicit CycleSearch(const OrientedPattern & p) : _p(p) {}

        auto run(int k) -> std::optional<ReducibilityCertificate>
        {
            auto ns = _p.sources.size();
            if (ns < static_cast<std::size_t>(k))
                return std::nullopt;

            std::vector<int> assignment(ns, 0);
            while (true) {
                if (auto cert = try_assignment(k, assignment))
                    return cert;
                // odometer over positions 1..ns-1, last position fastest
                std::size_t pos = ns - 1;
                while (pos >= 1 && ++assignment[pos] == k)
                    assignment[pos--] = 0;
                if (pos == 0)
                    return std::nullopt;
            }
        }

    private:
        const OrientedPattern & _p;
        std::unordered_map<VertexMask, bool> _tau1;

        auto has_tau1(VertexMask block) -> bool
        {
            auto it = _tau1.find(block);
            if (it != _tau1.end())
                return it->second;
            bool found = find_tau1_decomposition(induced_by_sources(_p, block)).has_value();
            _tau1.emplace(block, found);
            return found;
        }

        auto try_assignment(int k, const std::vector<int> & assignment) -> std::optional<ReducibilityCertificate>
        {
            std::vector<VertexMask> blocks(k, 0);
            for (std::size_t t = 0; t < assignment.size(); ++t)
                blocks[assignment[t]] |= bit(_p.sources[t]);
            for (auto b : blocks)
                if (b == 0)
                    return std::nullopt;

            std::vector<VertexMask> reach(k), inter(k);
            for (int i = 0; i < k; ++i)
                reach[i] = _p.reach_of(blocks[i]);
            VertexMask star = 0;
            for (int i = 0; i < k; ++i) {
                inter[i] = reach[i] & reach[(i + 1) % k];
                star |= inter[i];
            }

            for (int i = 0; i < k; ++i)
                if ((inter[prev_index(i, k)] | inter[i]) != (reach[i] & star))
                    return std::nullopt;

            // Each vertex's run of intersection sets must be one cyclic interval:
            // at most one index where it enters the run.
            bool contiguous = true;
            for_each_vertex(star, [&](int x) {
                int entries = 0;
                for (int i = 0; i < k; ++i)
                    if ((inter[i] & bit(x)) && ! (inter[prev_index(i, k)] & bit(x)))
                        ++entries;
                if (entries > 1)
                    contiguous = false;
            });
            if (! contiguous)
                return std::nullopt;

            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (j != i && j != prev_index(i, k) && j != (i + 1) % k && ! contains(star, reach[i] & reach[j]))
                        return std::nullopt;

            for (int i = 0; i < k; ++i)
                if (! has_tau1(blocks[i]))
                    return std::nullopt;

            std::vector<std::vector<int>> candidates(k);
            for (int i = 0; i < k; ++i) {
                VertexMask needed = inter[prev_index(i, k)] | inter[i];
                for_each_vertex(blocks[i], [&](int s) {
                    if (contains(_p.reach[s], needed))
                        candidates[i].push_back(s);
                });
                if (candidates[i].empty())
                    return std::nullopt;
            }

            std::vector<int> chosen(k, -1);
            auto pick = [&](auto & self, int i) -> bool {
                if (i == k)
                    return true;
                for (int s : candidates[i]) {
                    bool ok = true;
                    for (int j = 0; j < i && ok; ++j) {
                        if (j == prev_index(i, k) || j == (i + 1) % k)
                            continue;
                        ok = (reach[i] & reach[j]) == (_p.reach[s] & _p.reach[chosen[j]]);
                    }
                    if (! ok)
                        continue;
                    chosen[i] = s;
                    if (self(self, i + 1))
                        return true;
                }
                return false;
            };
            if (! pick(pick, 0))
                return std::nullopt;

            return ReducibilityCertificate{k, blocks, chosen, inter, star};
        }
    };
}

auto find_cycle_reduction(const OrientedPattern & p, int k_max, int k_min) -> std::optional<ReducibilityCertificate>
{
    if (static_cast<int>(p.sources.size()) > max_pattern_vertices)
        throw CapExceededError("too many sources for the reducibility search");
    CycleSearch search(p);
    for (int k = std::max(3, k_min); k <= k_max; ++k)
        if (auto cert = search.run(k))
            return cert;
    return std::nullopt;
}

auto certificate_violation(const OrientedPattern & p, const ReducibilityCertificate & cert) -> std::optional<std::string>
{
    int k = cert.k;
    if (k < 3)
        return "cycle length below 3";
    if (cert.blocks.size() != static_cast<std::size_t>(k) || cert.designated.size() != static_cast<std::size_t>(k) ||
        cert.intersections.size() != static_cast<std::size_t>(k))
        return "certificate vectors do not have k entries";

    VertexMask covered = 0;
    for (int i = 0; i < k; ++i) {
        if (cert.blocks[i] == 0)
            return "block " + std::to_string(i) + " is empty";
        if (covered & cert.blocks[i])
            return "blocks overlap";
        covered |= cert.blocks[i];
        if (cert.designated[i] < 0 || cert.designated[i] >= max_pattern_vertices || ! (cert.blocks[i] & bit(cert.designated[i])))
            return "designated source of block " + std::to_string(i) + " is not in the block";
    }
    if (covered != p.source_mask())
        return "blocks do not partition the sources";

    std::vector<OrientedPattern> sub;
    for (int i = 0; i < k; ++i)
        sub.push_back(induced_by_sources(p, cert.blocks[i]));

    VertexMask star = 0;
    for (int i = 0; i < k; ++i) {
        auto next = (i + 1) % k;
        if ((sub[i].vertices & sub[next].vertices) != cert.intersections[i])
            return "condition 1 fails between blocks " + std::to_string(i) + " and " + std::to_string(next);
        star |= cert.intersections[i];
    }
    if (star != cert.i_star)
        return "I* is not the union of the intersection sets";

    for (int i = 0; i < k; ++i) {
        auto before = cert.intersections[(i + k - 1) % k];
        if ((before | cert.intersections[i]) != (sub[i].vertices & cert.i_star))
            return "condition 2 fails for block " + std::to_string(i);
    }

    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int gap = (j - i + k) % k;
            if (gap == 0 || gap == 1 || gap == k - 1)
                continue;
            VertexMask shared = sub[i].vertices & sub[j].vertices;
            VertexMask designated_shared = p.reach[cert.designated[i]] & p.reach[cert.designated[j]];
            if (shared != designated_shared || ! contains(cert.i_star, shared))
                return "condition 3 fails for blocks " + std::to_string(i) + " and " + std::to_string(j);
        }

    for (int i = 0; i < k; ++i) {
        auto s = cert.designated[i];
        auto needed = cert.intersections[(i + k - 1) % k] | cert.intersections[i];
        if (! contains(p.reach[s], needed))
            return "designated source of block " + std::to_string(i) + " does not reach its intersection sets";
        auto d = find_tau1_decomposition(sub[i]);
        if (! d || ! is_valid_decomposition(sub[i], d->rerooted(s)))
            return "block " + std::to_string(i) + " has no width-1 decomposition rooted at its designated source";
    }

    for (int x = 0; x < p.dag.n; ++x) {
        std::vector<bool> member(k);
        int count = 0;
        for (int i = 0; i < k; ++i)
            if (cert.intersections[i] & bit(x)) {
                member[i] = true;
                ++count;
            }
        if (count == 0 || count == k)
            continue;
        bool interval = false;
        for (int start = 0; start < k && ! interval; ++start) {
            bool all = true;
            for (int t = 0; t < count; ++t)
                all = all && member[(start + t) % k];
            interval = all;
        }
        if (! interval)
            return "intersection sets containing vertex " + std::to_string(x) + " are not contiguous";
    }
    return std::nullopt;
}

auto build_reduced_graph(const ReducibilityCertificate & cert, const OrientedPattern & p, const DirectedGraph & g)
    -> LayeredWeightedGraph
{
    if (auto problem = certificate_violation(p, cert))
        throw InputError("invalid reducibility certificate: " + *problem);

    int k = cert.k;
    LayeredWeightedGraph lg(k);
    lg.layer_pattern_vertices = cert.intersections;
    lg.layer_keys.resize(k);
    std::vector<std::unordered_map<ImageKey, VertexId, ImageKeyHash>> ids(k);

    auto vertex = [&](int layer, const ImageKey & key) {
        auto [it, inserted] = ids[layer].emplace(key, 0);
        if (inserted) {
            it->second = lg.add_vertex(layer);
            lg.layer_keys[layer].push_back(key);
        }
        return it->second;
    };

    for (int i = 0; i < k; ++i) {
        int before = (i + k - 1) % k;
        auto sub = induced_by_sources(p, cert.blocks[i]);
        auto d = find_tau1_decomposition(sub);
        if (! d)
            throw InvariantError("block lost its width-1 decomposition");
        VertexMask target = cert.intersections[before] | cert.intersections[i];
        auto table = extension_counts(sub, d->rerooted(cert.designated[i]), g, target);

        // Sort for a deterministic vertex numbering.
        std::vector<std::pair<ImageKey, BigInt>> rows(table.entries.begin(), table.entries.end());
        std::sort(rows.begin(), rows.end(), [](const auto & a, const auto & b) { return a.first < b.first; });

        for (const auto & [key, weight] : rows) {
            ImageKey left, right;
            int t = 0;
            for_each_vertex(target, [&](int x) {
                if (cert.intersections[before] & bit(x))
                    left.push_back(key[t]);
                if (cert.intersections[i] & bit(x))
                    right.push_back(key[t]);
                ++t;
            });
            auto u = vertex(before, left);
            auto v = vertex(i, right);
            lg.add_edge(before, u, v, weight);
        }
    }
    return lg;
}

auto hom_count_via_reduction(const ReducibilityCertificate & cert, const OrientedPattern & p, const DirectedGraph & g,
    WSubEngine engine, const ThresholdConfig & cfg) -> BigInt
{
    return wsub(build_reduced_graph(cert, p, g), engine, cfg);
}

} // namespace decount
