#pragma once

#include <map>
#include <vector>

#include "mal/numbers.hpp"
#include "mal/sparse_matrix.hpp"

namespace mal {

/// Bidegree (q, 2p): q is the (possibly negative) first degree, the second
/// degree is even and stored as p.
struct Bidegree {
    int q = 0;
    int p = 0;

    bool operator==(const Bidegree&) const = default;
    auto operator<=>(const Bidegree&) const = default;
};

/// b_{q,2p} per bidegree, plus the ambient (m, n).
struct BigradedBettiTable {
    int m = 0, n = 0;
    std::map<Bidegree, Int> b;

    Int at(Bidegree d) const {
        auto it = b.find(d);
        return it == b.end() ? Int(0) : it->second;
    }
    /// b_k = sum over q + 2p = k.
    std::map<int, Int> ordinary() const {
        std::map<int, Int> out;
        for (const auto& [d, v] : b)
            if (v != 0) out[d.q + 2 * d.p] += v;
        return out;
    }
    bool operator==(const BigradedBettiTable&) const = default;
};

/// Chain complex split by second degree; the differential maps (q, 2p) to
/// (q-1, 2p).  Words are stored per component as opaque basis labels.
template <class Word>
struct BigradedChainComplex {
    int m = 0, n = 0;
    std::map<Bidegree, std::vector<Word>> components;
    /// boundaries[d] maps component d into component (d.q - 1, d.p).
    std::map<Bidegree, SparseMatrix> boundaries;

    int dim(Bidegree d) const {
        auto it = components.find(d);
        return it == components.end() ? 0 : static_cast<int>(it->second.size());
    }
};

/// Homology dimensions of a chain complex split by second degree.
/// `boundaries[d]` must map d to (d.q-1, d.p); dims provides component sizes.
/// Verifies boundary*boundary = 0 and throws std::logic_error otherwise.
/// jobs > 1 distributes the per-bidegree rank computations over threads.
BigradedBettiTable homology_dimensions(const std::map<Bidegree, int>& dims,
                                       const std::map<Bidegree, SparseMatrix>& boundaries,
                                       int m, int n, int jobs = 1);

template <class Word>
BigradedBettiTable bigraded_betti(const BigradedChainComplex<Word>& C, int jobs = 1) {
    std::map<Bidegree, int> dims;
    for (const auto& [d, basis] : C.components) dims[d] = static_cast<int>(basis.size());
    return homology_dimensions(dims, C.boundaries, C.m, C.n, jobs);
}

}  // namespace mal
