#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mal {

/// Subset of the ground set [m] = {1,...,m}, stored as a bitmask.
/// Vertex k occupies bit k-1; at most 64 vertices.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

    static VertexSet of(std::initializer_list<int> vertices) {
        VertexSet s;
        for (int v : vertices) s = s.with(v);
        return s;
    }

    /// The full set {1,...,m}.
    static constexpr VertexSet full(int m) {
        return VertexSet(m == 64 ? ~0ULL : (1ULL << m) - 1);
    }

    int count() const { return __builtin_popcountll(bits); }
    bool empty() const { return bits == 0; }
    bool contains(int v) const { return (bits >> (v - 1)) & 1; }
    bool subset_of(VertexSet other) const { return (bits & ~other.bits) == 0; }

    VertexSet with(int v) const { return VertexSet(bits | (1ULL << (v - 1))); }
    VertexSet without(int v) const { return VertexSet(bits & ~(1ULL << (v - 1))); }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;

    /// 1-based vertices in increasing order.
    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(__builtin_ctzll(b) + 1);
        return out;
    }

    /// Number of elements strictly below v.
    int rank_below(int v) const {
        return __builtin_popcountll(bits & ((1ULL << (v - 1)) - 1));
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : vertices()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }
};

}  // namespace mal
