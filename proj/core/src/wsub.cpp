#include <decount/error.hpp>
#include <decount/wsub.hpp>

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace decount {

WeightMatrix::WeightMatrix(std::size_t rows, std::size_t cols) :
    _rows(rows),
    _cols(cols)
{
}

auto WeightMatrix::identity(std::size_t n) -> WeightMatrix
{
    WeightMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m._rows[i].push_back(Entry{static_cast<std::uint32_t>(i), BigInt(1)});
    return m;
}

auto WeightMatrix::at(std::size_t i, std::size_t j) const -> BigInt
{
    const auto & r = _rows[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry & e, std::size_t c) { return e.col < c; });
    return (it != r.end() && it->col == j) ? it->value : BigInt(0);
}

auto WeightMatrix::nonzeros() const -> std::size_t
{
    std::size_t total = 0;
    for (const auto & r : _rows)
        total += r.size();
    return total;
}

void WeightMatrix::set(std::size_t i, std::size_t j, BigInt value)
{
    if (i >= rows() || j >= _cols)
        throw InputError("matrix index out of range");
    auto & r = _rows[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry & e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == j) {
        if (value == 0)
            r.erase(it);
        else
            it->value = std::move(value);
    }
    else if (value != 0)
        r.insert(it, Entry{static_cast<std::uint32_t>(j), std::move(value)});
}

void WeightMatrix::add(std::size_t i, std::size_t j, const BigInt & value) { set(i, j, at(i, j) + value); }

auto operator==(const WeightMatrix & a, const WeightMatrix & b) -> bool
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto & x = a._rows[i];
        const auto & y = b._rows[i];
        if (x.size() != y.size())
            return false;
        for (std::size_t t = 0; t < x.size(); ++t)
            if (x[t].col != y[t].col || x[t].value != y[t].value)
                return false;
    }
    return true;
}

auto multiply(const WeightMatrix & a, const WeightMatrix & b) -> WeightMatrix
{
    if (a.cols() != b.rows())
        throw InputError("matrix dimensions do not match");
    WeightMatrix c(a.rows(), b.cols());
    std::vector<BigInt> accumulator(b.cols());
    std::vector<char> touched(b.cols(), 0);
    std::vector<std::uint32_t> columns;

    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (const auto & [k, x] : a._rows[i])
            for (const auto & [j, y] : b._rows[k]) {
                if (! touched[j]) {
                    touched[j] = 1;
                    columns.push_back(j);
                }
                accumulator[j] += x * y;
            }
        std::sort(columns.begin(), columns.end());
        auto & row = c._rows[i];
        row.reserve(columns.size());
        for (auto j : columns) {
            if (accumulator[j] != 0)
                row.push_back(WeightMatrix::Entry{j, std::move(accumulator[j])});
            accumulator[j] = 0;
            touched[j] = 0;
        }
        columns.clear();
    }
    return c;
}

auto trace(const WeightMatrix & a) -> BigInt
{
    BigInt sum = 0;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
        sum += a.at(i, i);
    return sum;
}

auto trace_of_product(const WeightMatrix & a, const WeightMatrix & b) -> BigInt
{
    if (a.cols() != b.rows() || a.rows() != b.cols())
        throw InputError("trace_of_product needs a (n x m) and b (m x n)");
    BigInt sum = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto & [k, x] : a.row(i)) {
            auto y = b.at(k, i);
            if (y != 0)
                sum += x * y;
        }
    return sum;
}

auto default_delta(int k, std::size_t m) -> std::uint64_t
{
    int num = 0, den = 0;
    switch (k) {
    case 3: num = 1, den = 2; break;
    case 4: num = 4, den = 7; break;
    case 5: num = 2, den = 5; break;
    default: throw InputError("no default threshold for k = " + std::to_string(k));
    }
    if (m <= 1)
        return 1;

    using Wide = unsigned __int128;
    auto power = [](Wide base, int e) {
        Wide r = 1;
        for (int i = 0; i < e; ++i)
            r *= base;
        return r;
    };
    Wide target = power(m, num);
    auto x = static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<long double>(m), static_cast<long double>(num) / den)));
    x = std::max<std::uint64_t>(x, 1);
    while (x > 1 && power(x - 1, den) >= target)
        --x;
    while (power(x, den) < target)
        ++x;
    return x;
}

auto LayeredView::num_arcs() const -> std::size_t
{
    std::size_t total = 0;
    for (const auto & o : out)
        total += o.size();
    return total;
}

auto LayeredView::arc(VertexId u, VertexId v) const -> const BigInt *
{
    const auto & list = out[u];
    auto it = std::lower_bound(list.begin(), list.end(), v, [](const WeightedArc & a, VertexId t) { return a.to < t; });
    return (it != list.end() && it->to == v) ? &it->weight : nullptr;
}

auto directed_view(const LayeredWeightedGraph & lg) -> LayeredView
{
    LayeredWeightedGraph g = lg;
    g.normalise();

    LayeredView view;
    view.k = g.k;
    view.offset.assign(g.k + 1, 0);
    for (int i = 0; i < g.k; ++i)
        view.offset[i + 1] = view.offset[i] + g.layer_size[i];
    auto n = view.offset[g.k];
    view.layer_of.resize(n);
    for (int i = 0; i < g.k; ++i)
        for (auto v = view.offset[i]; v < view.offset[i + 1]; ++v)
            view.layer_of[v] = i;

    view.out.resize(n);
    view.in.resize(n);
    for (int i = 0; i < g.k; ++i) {
        auto from = view.offset[i];
        auto to = view.offset[(i + 1) % g.k];
        for (const auto & e : g.edges[i]) {
            auto u = static_cast<VertexId>(from + e.u);
            auto v = static_cast<VertexId>(to + e.v);
            view.out[u].push_back(WeightedArc{v, e.weight});
            view.in[v].push_back(WeightedArc{u, e.weight});
        }
    }
    auto by_target = [](const WeightedArc & a, const WeightedArc & b) { return a.to < b.to; };
    for (auto & list : view.out)
        std::sort(list.begin(), list.end(), by_target);
    for (auto & list : view.in)
        std::sort(list.begin(), list.end(), by_target);
    return view;
}

auto degree_classes(const LayeredView & view, int k, std::uint64_t delta) -> std::vector<DegreeClass>
{
    std::vector<DegreeClass> cls(view.size());
    for (VertexId v = 0; v < view.size(); ++v) {
        auto d = static_cast<unsigned __int128>(view.out_degree(v));
        auto D = static_cast<unsigned __int128>(delta);
        switch (k) {
        case 3: cls[v] = d >= D ? DegreeClass::High : DegreeClass::Low; break;
        case 4: cls[v] = d >= D ? DegreeClass::High : (d * d < D ? DegreeClass::Low : DegreeClass::Medium); break;
        case 5: cls[v] = d >= D * D ? DegreeClass::High : (d < D ? DegreeClass::Low : DegreeClass::Medium); break;
        default: throw InputError("degree classes are defined for k in 3..5");
        }
    }
    return cls;
}

auto wsub_bruteforce(const LayeredWeightedGraph & lg) -> BigInt
{
    auto view = directed_view(lg);
    int k = view.k;
    BigInt total = 0;
    std::vector<VertexId> path(k);
    std::vector<BigInt> prefix(k + 1);
    prefix[0] = 1;

    auto extend = [&](auto & self, int depth) -> void {
        auto last = path[depth - 1];
        if (depth == k) {
            if (auto w = view.arc(last, path[0]))
                total += prefix[depth - 1] * *w;
            return;
        }
        for (const auto & a : view.out[last]) {
            path[depth] = a.to;
            prefix[depth] = prefix[depth - 1] * a.weight;
            self(self, depth + 1);
        }
    };

    for (auto v = view.offset[0]; v < view.offset[1]; ++v) {
        path[0] = static_cast<VertexId>(v);
        extend(extend, 1);
    }
    return total;
}

namespace
{
    // Members of a vertex class, and the inverse index (-1 outside the class).
    struct Subset
    {
        std::vector<VertexId> members;
        std::vector<int> index;

        [[nodiscard]] auto has(VertexId v) const -> bool { return index[v] >= 0; }
    };

    template <typename Pred>
    auto make_subset(const LayeredView & view, Pred && keep) -> Subset
    {
        Subset s;
        s.index.assign(view.size(), -1);
        for (VertexId v = 0; v < view.size(); ++v)
            if (keep(v)) {
                s.index[v] = static_cast<int>(s.members.size());
                s.members.push_back(v);
            }
        return s;
    }

    // Adjacency matrix of the arcs from `rows` into `cols`.
    auto restricted(const LayeredView & view, const Subset & rows, const Subset & cols) -> WeightMatrix
    {
        WeightMatrix m(rows.members.size(), cols.members.size());
        for (std::size_t i = 0; i < rows.members.size(); ++i)
            for (const auto & a : view.out[rows.members[i]])
                if (cols.has(a.to))
                    m.set(i, static_cast<std::size_t>(cols.index[a.to]), a.weight);
        return m;
    }

    auto entry(const WeightMatrix & m, const Subset & rows, const Subset & cols, VertexId u, VertexId v) -> BigInt
    {
        if (! rows.has(u) || ! cols.has(v))
            return 0;
        return m.at(static_cast<std::size_t>(rows.index[u]), static_cast<std::size_t>(cols.index[v]));
    }

    using PairMap = std::unordered_map<std::uint64_t, BigInt>;

    auto pair_key(VertexId u, VertexId v) -> std::uint64_t { return (static_cast<std::uint64_t>(u) << 32) | v; }
    auto key_first(std::uint64_t key) -> VertexId { return static_cast<VertexId>(key >> 32); }
    auto key_second(std::uint64_t key) -> VertexId { return static_cast<VertexId>(key & 0xffffffffULL); }

    auto lookup(const PairMap & map, VertexId u, VertexId v) -> const BigInt *
    {
        auto it = map.find(pair_key(u, v));
        return it == map.end() ? nullptr : &it->second;
    }

    auto checked_view(const LayeredWeightedGraph & lg, int k) -> LayeredView
    {
        if (lg.k != k)
            throw InputError("kernel for C" + std::to_string(k) + " needs " + std::to_string(k) + " layers, got " +
                std::to_string(lg.k));
        return directed_view(lg);
    }

    auto resolve_delta(const ThresholdConfig & cfg, int k, const LayeredView & view) -> std::uint64_t
    {
        return cfg.delta != 0 ? cfg.delta : default_delta(k, view.num_arcs());
    }

    auto finish(std::vector<BigInt> cases, WSubAudit * audit) -> BigInt
    {
        BigInt total = 0;
        for (const auto & c : cases)
            total += c;
        if (audit)
            audit->cases = std::move(cases);
        return total;
    }
}

auto wsub_c3_mm(const LayeredWeightedGraph & lg, const ThresholdConfig & cfg, WSubAudit * audit) -> BigInt
{
    auto view = checked_view(lg, 3);
    auto cls = degree_classes(view, 3, resolve_delta(cfg, 3, view));
    auto high = make_subset(view, [&](VertexId v) { return cls[v] == DegreeClass::High; });

    // Case 1: all three vertices high.
    auto a_h = restricted(view, high, high);
    auto case1 = exact_divide(trace_of_product(multiply(a_h, a_h), a_h), 3, "C3 all-high case");

    // Case 2: at least one low vertex; each cycle is found once per low vertex
    // sitting in the middle of a 2-path.
    BigInt by_lows[4] = {0, 0, 0, 0};
    for (VertexId v = 0; v < view.size(); ++v) {
        if (cls[v] != DegreeClass::Low)
            continue;
        for (const auto & in : view.in[v])
            for (const auto & out : view.out[v]) {
                auto closing = view.arc(out.to, in.to);
                if (! closing)
                    continue;
                int lows = 1 + (cls[in.to] == DegreeClass::Low) + (cls[out.to] == DegreeClass::Low);
                by_lows[lows] += in.weight * out.weight * *closing;
            }
    }
    BigInt case2 = by_lows[1] + exact_divide(by_lows[2], 2, "C3 two-low case") + exact_divide(by_lows[3], 3, "C3 three-low case");
    return finish({case1, case2}, audit);
}

auto wsub_c4_mm(const LayeredWeightedGraph & lg, const ThresholdConfig & cfg, WSubAudit * audit) -> BigInt
{
    auto view = checked_view(lg, 4);
    auto cls = degree_classes(view, 4, resolve_delta(cfg, 4, view));
    auto is = [&](VertexId v, DegreeClass c) { return cls[v] == c; };
    auto high = make_subset(view, [&](VertexId v) { return is(v, DegreeClass::High); });
    auto medium = make_subset(view, [&](VertexId v) { return is(v, DegreeClass::Medium); });
    auto in_x = [&](VertexId v) { return ! is(v, DegreeClass::High); };

    auto a_h = restricted(view, high, high);
    auto a_h2 = multiply(a_h, a_h);

    // Case 1: all high.
    auto case1 = exact_divide(trace_of_product(a_h2, a_h2), 4, "C4 all-high case");

    // val(u, v): 2-paths u -> x -> v through a non-high middle.
    PairMap val;
    for (VertexId x = 0; x < view.size(); ++x) {
        if (! in_x(x))
            continue;
        for (const auto & in : view.in[x])
            for (const auto & out : view.out[x])
                val[pair_key(in.to, out.to)] += in.weight * out.weight;
    }

    // Case 2: an opposite pair of non-high vertices. Found twice, or four
    // times when both opposite pairs are non-high.
    BigInt twice = 0, four_times = 0;
    for (const auto & [key, forward] : val) {
        auto u = key_first(key), v = key_second(key);
        auto backward = lookup(val, v, u);
        if (! backward)
            continue;
        if (in_x(u) && in_x(v))
            four_times += forward * *backward;
        else
            twice += forward * *backward;
    }
    BigInt case2 = exact_divide(twice, 2, "C4 opposite pair case") + exact_divide(four_times, 4, "C4 all non-high case");

    // Case 3: one non-high vertex, the other three high.
    BigInt case3 = 0;
    for (const auto & [key, forward] : val) {
        auto u = key_first(key), v = key_second(key);
        if (high.has(u) && high.has(v))
            case3 += forward * entry(a_h2, high, high, v, u);
    }

    // Case 4: two consecutive high vertices and an adjacent non-high pair with a medium.
    BigInt case4 = 0;
    {
        // x1 low, x2 medium: x2 -> h1 -> h2 -> x1 -> x2
        auto a_mhh = multiply(restricted(view, medium, high), a_h);
        for (VertexId x1 = 0; x1 < view.size(); ++x1) {
            if (! is(x1, DegreeClass::Low))
                continue;
            for (const auto & in : view.in[x1]) {
                if (! high.has(in.to))
                    continue;
                for (const auto & out : view.out[x1])
                    if (medium.has(out.to))
                        case4 += in.weight * out.weight * entry(a_mhh, medium, high, out.to, in.to);
            }
        }
        // x1 medium, x2 non-high: h1 -> h2 -> x1 -> x2 -> h1
        auto a_hhm = multiply(a_h, restricted(view, high, medium));
        for (VertexId x2 = 0; x2 < view.size(); ++x2) {
            if (! in_x(x2))
                continue;
            for (const auto & in : view.in[x2]) {
                if (! medium.has(in.to))
                    continue;
                for (const auto & out : view.out[x2])
                    if (high.has(out.to))
                        case4 += in.weight * out.weight * entry(a_hhm, high, medium, out.to, in.to);
            }
        }
    }

    // Case 5: two consecutive high vertices, two consecutive low ones.
    BigInt case5 = 0;
    for (VertexId l1 = 0; l1 < view.size(); ++l1) {
        if (! is(l1, DegreeClass::Low))
            continue;
        for (const auto & h2 : view.in[l1]) {
            if (! high.has(h2.to))
                continue;
            for (const auto & l2 : view.out[l1]) {
                if (! is(l2.to, DegreeClass::Low))
                    continue;
                for (const auto & h1 : view.out[l2.to]) {
                    if (! high.has(h1.to))
                        continue;
                    auto closing = view.arc(h1.to, h2.to);
                    if (closing)
                        case5 += h2.weight * l2.weight * h1.weight * *closing;
                }
            }
        }
    }

    return finish({case1, case2, case3, case4, case5}, audit);
}

auto wsub_c5_mm(const LayeredWeightedGraph & lg, const ThresholdConfig & cfg, WSubAudit * audit) -> BigInt
{
    auto view = checked_view(lg, 5);
    auto cls = degree_classes(view, 5, resolve_delta(cfg, 5, view));
    auto is = [&](VertexId v, DegreeClass c) { return cls[v] == c; };
    auto low = [&](VertexId v) { return is(v, DegreeClass::Low); };
    auto high = make_subset(view, [&](VertexId v) { return is(v, DegreeClass::High); });
    auto medium = make_subset(view, [&](VertexId v) { return is(v, DegreeClass::Medium); });
    auto hm = make_subset(view, [&](VertexId v) { return ! low(v); });
    auto lows = make_subset(view, low);

    auto a_p = restricted(view, hm, hm);
    auto a_p2 = multiply(a_p, a_p);
    auto a_p3 = multiply(a_p2, a_p);

    // Case 1: no low vertex.
    auto case1 = exact_divide(trace_of_product(a_p2, a_p3), 5, "C5 no-low case");

    // Case 2: exactly one low vertex.
    BigInt case2 = 0;
    for (VertexId l : lows.members)
        for (const auto & u : view.in[l]) {
            if (! hm.has(u.to))
                continue;
            for (const auto & v : view.out[l])
                if (hm.has(v.to))
                    case2 += u.weight * v.weight * entry(a_p3, hm, hm, v.to, u.to);
        }

    // Case 3: two adjacent low vertices, three consecutive non-low ones.
    BigInt case3 = 0;
    for (VertexId l1 : lows.members)
        for (const auto & u : view.in[l1]) {
            if (! hm.has(u.to))
                continue;
            for (const auto & l2 : view.out[l1]) {
                if (! low(l2.to))
                    continue;
                for (const auto & v : view.out[l2.to])
                    if (hm.has(v.to))
                        case3 += u.weight * l2.weight * v.weight * entry(a_p2, hm, hm, v.to, u.to);
            }
        }

    // Case 4: two consecutive lows l1, l2 and a low x opposite them:
    // u -> l1 -> l2 -> v -> x -> u. Counted once when u and v are non-low,
    // twice when exactly one of them is low and five times when both are.
    PairMap val;
    for (VertexId x : lows.members)
        for (const auto & in : view.in[x])
            for (const auto & out : view.out[x])
                val[pair_key(in.to, out.to)] += in.weight * out.weight;
    BigInt by_lows[3] = {0, 0, 0};
    for (VertexId l1 : lows.members)
        for (const auto & u : view.in[l1])
            for (const auto & l2 : view.out[l1]) {
                if (! low(l2.to))
                    continue;
                for (const auto & v : view.out[l2.to]) {
                    auto closing = lookup(val, v.to, u.to);
                    if (closing)
                        by_lows[low(u.to) + low(v.to)] += u.weight * l2.weight * v.weight * *closing;
                }
            }
    BigInt case4 = by_lows[0] + exact_divide(by_lows[1], 2, "C5 four-low case") + exact_divide(by_lows[2], 5, "C5 all-low case");

    // Case 5: u1 -> u2 -> l1 -> l2 -> l3 -> u1 with u1, u2 non-low.
    BigInt case5 = 0;
    {
        // (a) u1, u2 high
        auto a_hhl = multiply(restricted(view, high, high), restricted(view, high, lows));
        // (b) u2 medium: val_b(u1, l1) over u1 -> u2 -> l1
        PairMap val_b;
        for (VertexId u2 : medium.members)
            for (const auto & u1 : view.in[u2]) {
                if (! hm.has(u1.to))
                    continue;
                for (const auto & l1 : view.out[u2])
                    if (low(l1.to))
                        val_b[pair_key(u1.to, l1.to)] += u1.weight * l1.weight;
            }
        // (c) u1 medium, u2 high: val_c(l3, u2) over l3 -> u1 -> u2
        PairMap val_c;
        for (VertexId u1 : medium.members)
            for (const auto & l3 : view.in[u1]) {
                if (! low(l3.to))
                    continue;
                for (const auto & u2 : view.out[u1])
                    if (high.has(u2.to))
                        val_c[pair_key(l3.to, u2.to)] += l3.weight * u2.weight;
            }

        for (VertexId l2 : lows.members)
            for (const auto & l1 : view.in[l2]) {
                if (! low(l1.to))
                    continue;
                for (const auto & l3 : view.out[l2]) {
                    if (! low(l3.to))
                        continue;
                    BigInt middle = l1.weight * l3.weight;
                    for (const auto & u1 : view.out[l3.to]) {
                        if (high.has(u1.to))
                            case5 += middle * u1.weight * entry(a_hhl, high, lows, u1.to, l1.to);
                        if (auto w = lookup(val_b, u1.to, l1.to))
                            case5 += middle * u1.weight * *w;
                    }
                    for (const auto & u2 : view.in[l1.to])
                        if (high.has(u2.to))
                            if (auto w = lookup(val_c, l3.to, u2.to))
                                case5 += middle * u2.weight * *w;
                }
            }
    }

    // Case 6: two non-adjacent lows, e.g. a -> l -> b -> c -> l' -> a.
    auto b_plp = multiply(restricted(view, hm, lows), restricted(view, lows, hm));
    auto case6 = trace_of_product(multiply(b_plp, a_p), b_plp);

    return finish({case1, case2, case3, case4, case5, case6}, audit);
}

auto wsub_combinatorial(const LayeredWeightedGraph & lg) -> BigInt
{
    if (lg.k != 3 && lg.k != 4)
        throw UnsupportedError("the combinatorial kernel handles k = 3 and k = 4 only");
    auto view = directed_view(lg);
    int k = view.k;

    std::vector<Edge> edges;
    for (VertexId u = 0; u < view.size(); ++u)
        for (const auto & a : view.out[u])
            edges.emplace_back(u, a.to);
    auto g = UndirectedGraph::from_edges(view.size(), edges, false);
    auto oriented = orient_by_degeneracy(g);

    auto weight = [&](VertexId a, VertexId b) -> const BigInt * {
        if (auto w = view.arc(a, b))
            return w;
        return view.arc(b, a);
    };

    BigInt total = 0;
    if (k == 3) {
        // every triangle has exactly one vertex with both triangle edges outgoing
        for (VertexId v = 0; v < oriented.num_vertices(); ++v) {
            auto out = oriented.out_neighbors(v);
            for (std::size_t i = 0; i < out.size(); ++i)
                for (std::size_t j = i + 1; j < out.size(); ++j)
                    if (auto closing = weight(out[i], out[j]))
                        total += *weight(v, out[i]) * *weight(v, out[j]) * *closing;
        }
        return total;
    }

    // k = 4: a colourful 4-cycle has exactly one diagonal whose two wedges are
    // both out-out or directed 2-paths (the other diagonal contains a sink).
    struct Sides
    {
        BigInt by_middle[2];
    };
    std::unordered_map<std::uint64_t, Sides> wedges;
    auto record = [&](VertexId middle, VertexId a, VertexId b, const BigInt & product) {
        if (a > b)
            std::swap(a, b);
        if ((view.layer_of[a] - view.layer_of[b] + 4) % 4 != 2)
            return;
        int side = view.layer_of[middle] == (view.layer_of[a] + 1) % 4 ? 0 : 1;
        wedges[pair_key(a, b)].by_middle[side] += product;
    };
    for (VertexId v = 0; v < oriented.num_vertices(); ++v) {
        auto out = oriented.out_neighbors(v);
        auto in = oriented.in_neighbors(v);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j)
                record(v, out[i], out[j], *weight(v, out[i]) * *weight(v, out[j]));
        for (auto a : in)
            for (auto b : out)
                record(v, a, b, *weight(a, v) * *weight(v, b));
    }
    for (const auto & [key, sides] : wedges)
        total += sides.by_middle[0] * sides.by_middle[1];
    return total;
}

auto wsub(const LayeredWeightedGraph & lg, WSubEngine engine, const ThresholdConfig & cfg) -> BigInt
{
    switch (engine) {
    case WSubEngine::BruteForce: return wsub_bruteforce(lg);
    case WSubEngine::Combinatorial:
        if (lg.k == 3 || lg.k == 4)
            return wsub_combinatorial(lg);
        [[fallthrough]];
    case WSubEngine::Matrix:
        switch (lg.k) {
        case 3: return wsub_c3_mm(lg, cfg);
        case 4: return wsub_c4_mm(lg, cfg);
        case 5: return wsub_c5_mm(lg, cfg);
        default: throw UnsupportedError("no matrix kernel for C" + std::to_string(lg.k));
        }
    }
    throw InvariantError("unknown WSub engine");
}

} // namespace decount
