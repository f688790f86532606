#pragma once

#include <decount/bigint.hpp>
#include <decount/graph.hpp>
#include <decount/layered_graph.hpp>
#include <decount/pattern.hpp>

namespace decount {

// Brute-force references. They favour obvious correctness over speed and
// are meant for graphs of a few dozen vertices.

/// Edge-preserving maps V(h) -> V(g), by backtracking.
auto hom_bruteforce(const UndirectedGraph & g, const Pattern & h) -> BigInt;

/// Arc-preserving maps V(h) -> V(g). `h` need not be acyclic.
auto hom_bruteforce(const DirectedGraph & g, const SmallDigraph & h) -> BigInt;

/// Injective edge-preserving maps V(h) -> V(g).
auto injective_hom_bruteforce(const UndirectedGraph & g, const Pattern & h) -> BigInt;

/// |Aut(h)| as the number of injective homomorphisms from h to itself.
auto automorphisms_bruteforce(const Pattern & h) -> std::uint64_t;

/// Copies of h in g: injective homomorphisms divided by |Aut(h)|.
auto sub_bruteforce(const UndirectedGraph & g, const Pattern & h) -> BigInt;

/// Simple k-cycles, each counted once (smallest vertex first, then the
/// smaller of its two cycle neighbours second).
auto cycle_bruteforce(const UndirectedGraph & g, int k) -> BigInt;

} // namespace decount
