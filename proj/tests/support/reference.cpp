#include "reference.hpp"

#include <vector>

namespace decount::testing {

auto closed_walks(const UndirectedGraph & g, int length) -> BigInt
{
    auto n = g.num_vertices();
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0));
    for (auto [u, v] : g.edges())
        a[u][v] = a[v][u] = 1;
    auto p = a;
    for (int step = 1; step < length; ++step) {
        std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < n; ++t)
                if (p[i][t] != 0)
                    for (std::size_t j = 0; j < n; ++j)
                        if (a[t][j] != 0)
                            next[i][j] += p[i][t];
        p = std::move(next);
    }
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i)
        tr += p[i][i];
    return tr;
}

} // namespace decount::testing
