#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "mal/numbers.hpp"
#include "mal/vertex_set.hpp"

namespace mal {

/// Face-count vector (f_0, ..., f_{n-1}); f_{-1} = 1 is implicit.
struct FVector {
    std::vector<Int> f;

    /// f_i with the conventions f_{-1} = 1 and f_i = 0 out of range.
    Int at(long long i) const {
        if (i == -1) return 1;
        if (i < -1 || i >= static_cast<long long>(f.size())) return 0;
        return f[static_cast<std::size_t>(i)];
    }
    bool operator==(const FVector&) const = default;
    std::string to_string() const;
};

/// (h_0, ..., h_n) defined by the (t-1)-expansion of the f-polynomial.
struct HVector {
    std::vector<Int> h;

    Int at(long long i) const {
        if (i < 0 || i >= static_cast<long long>(h.size())) return 0;
        return h[static_cast<std::size_t>(i)];
    }
    bool operator==(const HVector&) const = default;
    std::string to_string() const;
};

/// Diagnostics towards "K triangulates a closed manifold".  The conditions
/// here are necessary, not sufficient; the final word is the user attestation.
struct ManifoldStatus {
    bool is_pure = false;
    bool is_closed_pseudomanifold = false;   // every (n-2)-face in exactly two facets
    bool is_strongly_connected = false;      // facet graph across shared ridges connected
    std::optional<bool> is_orientable;       // defined when closed pseudomanifold
    std::map<int, Int> link_euler_numbers;   // vertex -> chi(link)
    bool user_attested_manifold = false;
};

/// Abstract simplicial complex on [m], stored by inclusion-maximal facets
/// with the full downward closure materialized at construction.
class SimplicialComplex {
public:
    /// Builds from a facet list; dominated facets are dropped.
    /// Throws InputError on out-of-range vertices or an empty facet list.
    static SimplicialComplex from_facets(std::vector<VertexSet> facets, int m);

    int m() const { return m_; }
    /// Max facet cardinality; the complex has dimension n-1.
    int n() const { return n_; }
    bool is_full_simplex() const { return full_simplex_; }

    const std::vector<VertexSet>& facets() const { return facets_; }
    /// All simplices including the empty set, sorted by (cardinality, bitmask).
    const std::vector<VertexSet>& simplices() const { return simplices_; }
    bool contains(VertexSet s) const { return membership_.count(s.bits) != 0; }

    /// Simplices of the given cardinality, in bitmask order.
    std::vector<VertexSet> simplices_of_card(int card) const;

    FVector f_vector() const;
    HVector h_vector() const;
    Int euler_number() const;

    /// Link of sigma on the re-indexed ground set [m - |sigma|].
    /// Throws InputError if sigma is not a simplex.
    SimplicialComplex link(VertexSet sigma) const;

    SimplicialComplex barycentric_subdivision() const;

    ManifoldStatus manifold_status(bool attested) const;

private:
    SimplicialComplex() = default;

    int m_ = 0;
    int n_ = 0;
    bool full_simplex_ = false;
    std::vector<VertexSet> facets_;
    std::vector<VertexSet> simplices_;
    std::unordered_set<std::uint64_t> membership_;
};

}  // namespace mal
