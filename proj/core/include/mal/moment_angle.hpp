#pragma once

#include "mal/bigraded.hpp"
#include "mal/simplicial_complex.hpp"
#include "mal/vertex_set.hpp"

namespace mal {

/// Cell D_D T_T of the 3-letter model of Z_K; the 1-letters are implicit.
/// Bidegree (-|T|, 2|D|+2|T|), dimension 2|D|+|T|.
struct CellWordZ {
    VertexSet D, T;
    bool operator==(const CellWordZ&) const = default;
    auto operator<=>(const CellWordZ&) const = default;
};

/// Cell D_D I_I 0_Z T_T of the 5-letter model of W_K; requires D u I u Z in K
/// and |Z| >= 1.  Bidegree (|I|-|T|, 2|D|+2|T|), dimension 2|D|+|I|+|T|.
struct CellWordW {
    VertexSet D, I, Z, T;
    bool operator==(const CellWordW&) const = default;
    auto operator<=>(const CellWordW&) const = default;
};

struct MomentAngleCaps {
    int max_m_zk = 14;
    int max_m_wk = 9;
    int max_m_hochster = 8;
};

/// Cellular chain complex of Z_K with the product-complex sign convention.
BigradedChainComplex<CellWordZ> build_zk_complex(const SimplicialComplex& K,
                                                 const MomentAngleCaps& caps = {});

/// Cellular chain complex of W_K (5-letter cells, 0-letter set non-empty).
BigradedChainComplex<CellWordW> build_wk_complex(const SimplicialComplex& K,
                                                 const MomentAngleCaps& caps = {});

/// Quotient of the Z_K complex by the torus subcomplex (the D = {} words).
BigradedChainComplex<CellWordZ> build_zk_rel_torus(const SimplicialComplex& K,
                                                   const MomentAngleCaps& caps = {});

/// Independent oracle: b_{-q,2p} as the sum over p-subsets W of [m] of the
/// reduced cohomology dimension of the full subcomplex K_W in degree p-q-1.
/// Uses its own dense elimination, sharing nothing with the cell-word path.
BigradedBettiTable hochster_oracle(const SimplicialComplex& K,
                                   const MomentAngleCaps& caps = {});

}  // namespace mal
