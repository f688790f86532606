#pragma once

#include <decount/bigint.hpp>
#include <decount/dagtree.hpp>
#include <decount/layered_graph.hpp>
#include <decount/wsub.hpp>

#include <optional>
#include <string>
#include <vector>

namespace decount {

/// Witness that an oriented pattern reduces to weighted colourful C_k
/// counting. Indices are cyclic: block i shares `intersections[i-1]` with
/// block i-1 and `intersections[i]` with block i+1.
struct ReducibilityCertificate
{
    int k = 0;
    std::vector<VertexMask> blocks;          ///< S_i, disjoint source sets
    std::vector<int> designated;             ///< s_i ∈ S_i
    std::vector<VertexMask> intersections;   ///< I_i = H(S_i) ∩ H(S_i+1)
    VertexMask i_star = 0;                   ///< union of the I_i
};

/// Smallest k first, then block assignments in lexicographic order (first
/// source always in block 0). Returns the first certificate found.
auto find_cycle_reduction(const OrientedPattern & p, int k_max, int k_min = 3) -> std::optional<ReducibilityCertificate>;

/// Independent check of every certificate condition. Returns a description
/// of the first violated condition, or nullopt when the certificate is valid.
auto certificate_violation(const OrientedPattern & p, const ReducibilityCertificate & cert) -> std::optional<std::string>;

/// Reduced graph: layer i holds the images of I_i; block i contributes edges
/// between layers i-1 and i weighted by the extension counts of H(S_i).
auto build_reduced_graph(const ReducibilityCertificate & cert, const OrientedPattern & p, const DirectedGraph & g)
    -> LayeredWeightedGraph;

/// Hom(g, p) as the weighted colourful C_k sum of the reduced graph.
auto hom_count_via_reduction(const ReducibilityCertificate & cert, const OrientedPattern & p, const DirectedGraph & g,
    WSubEngine engine = WSubEngine::Matrix, const ThresholdConfig & cfg = {}) -> BigInt;

} // namespace decount
