#pragma once

#include <optional>

#include "mal/bigraded.hpp"
#include "mal/simplicial_complex.hpp"
#include "mal/vertex_set.hpp"

namespace mal {

/// Generators of the face-ring ideal: the inclusion-minimal non-faces.
struct StanleyReisnerData {
    int m = 0;
    std::vector<VertexSet> minimal_nonfaces;
};

/// Square-free monomial v_I u_J with I in K and I, J disjoint.
/// Bidegree (-|J|, 2|I|+2|J|); u-letters are kept in increasing index order.
struct KoszulMonomial {
    VertexSet I, J;
    bool operator==(const KoszulMonomial&) const = default;
    auto operator<=>(const KoszulMonomial&) const = default;

    int total_degree() const { return 2 * I.count() + J.count(); }
};

/// A monomial with a sign, as produced by the product.
struct SignedMonomial {
    int sign = 1;
    KoszulMonomial monomial;
    bool operator==(const SignedMonomial&) const = default;
};

/// The finite cochain model: basis v_I u_J per bidegree with d(u_i) = v_i
/// extended as a derivation.  The differential maps (-q, 2p) to (-q+1, 2p).
struct KoszulCochainComplex {
    int m = 0, n = 0;
    std::map<Bidegree, std::vector<KoszulMonomial>> components;
    /// differentials[d] maps component d into component (d.q + 1, d.p).
    std::map<Bidegree, SparseMatrix> differentials;

    int dim(Bidegree d) const {
        auto it = components.find(d);
        return it == components.end() ? 0 : static_cast<int>(it->second.size());
    }
};

StanleyReisnerData minimal_nonfaces(const SimplicialComplex& K);

KoszulCochainComplex build_koszul_complex(const SimplicialComplex& K);

/// Cohomology dimensions per bidegree; equals the cellular Betti table.
BigradedBettiTable tor_dimensions(const KoszulCochainComplex& C, int jobs = 1);

/// Product in the finite model: zero when supports collide or the combined
/// v-part leaves K; otherwise the concatenation with the exterior sign.
std::optional<SignedMonomial> monomial_product(const KoszulMonomial& a, const KoszulMonomial& b,
                                               const SimplicialComplex& K);

/// Representative v_I u_{[m]\I} of the top class for the lexicographically
/// first facet I; verifies it is a nonzero class and that every other facet
/// yields the same class up to sign.  Throws InputError when K fails the
/// closed-pseudomanifold preconditions.
KoszulMonomial fundamental_class(const SimplicialComplex& K);

/// Cohomology of the full complex (arbitrary exponents on the v's) up to
/// second degree 2*p_max; agrees with tor_dimensions in that range.
BigradedBettiTable full_koszul_crosscheck(const SimplicialComplex& K, int p_max);

/// True iff the Betti table satisfies the bigraded duality pattern
/// b_{-q,2p} = b_{-(m-n)+q,2(m-p)} for all (q, p).
bool gorenstein_star_check(const SimplicialComplex& K);

}  // namespace mal
