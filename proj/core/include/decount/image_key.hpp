#pragma once

#include <decount/graph.hpp>
#include <decount/pattern.hpp>

#include <array>
#include <cstdint>
#include <functional>

namespace decount {

/// Images of an ordered set of pattern vertices (ascending pattern-vertex id).
struct ImageKey
{
    std::array<VertexId, max_pattern_vertices> image{};
    std::uint8_t size = 0;

    void push_back(VertexId v) { image[size++] = v; }
    [[nodiscard]] auto operator[](std::size_t i) const -> VertexId { return image[i]; }

    friend auto operator==(const ImageKey & a, const ImageKey & b) -> bool
    {
        if (a.size != b.size)
            return false;
        for (std::uint8_t i = 0; i < a.size; ++i)
            if (a.image[i] != b.image[i])
                return false;
        return true;
    }

    friend auto operator<(const ImageKey & a, const ImageKey & b) -> bool
    {
        for (std::uint8_t i = 0; i < a.size && i < b.size; ++i)
            if (a.image[i] != b.image[i])
                return a.image[i] < b.image[i];
        return a.size < b.size;
    }
};

struct ImageKeyHash
{
    auto operator()(const ImageKey & k) const noexcept -> std::size_t
    {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ k.size;
        for (std::uint8_t i = 0; i < k.size; ++i) {
            h ^= k.image[i];
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Restricts a full assignment (indexed by pattern vertex) to `mask`, in
/// ascending vertex order.
inline auto restrict_image(const std::array<VertexId, max_pattern_vertices> & assignment, VertexMask mask) -> ImageKey
{
    ImageKey key;
    for_each_vertex(mask, [&](int v) { key.push_back(assignment[v]); });
    return key;
}

} // namespace decount
