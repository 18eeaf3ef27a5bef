#pragma once

#include <string>
#include <vector>

#include "mal/euler_poly.hpp"
#include "mal/koszul.hpp"
#include "mal/moment_angle.hpp"
#include "mal/simplicial_complex.hpp"

namespace mal {

enum class CheckStatus { Pass, Fail, Skipped };

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string lhs, rhs;   // the two compared values, for failed-check forensics
    std::string citation;   // which classical identity is being exercised
};

struct VerificationReport {
    std::vector<Check> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
};

/// Which geometric hypotheses the user vouches for.  The tool only ever
/// computes necessary conditions; these flags gate the conditional checks.
struct Attestation {
    bool sphere = false;
    bool manifold = false;
    bool orientable = false;
};

/// Runs the identity suite: generating-polynomial agreement for all three
/// spaces, chi(Z_K) = 0, and the duality / Dehn-Sommerville checks gated on
/// the attestation flags.
VerificationReport verify_identities(const SimplicialComplex& K, const ManifoldStatus& status,
                                     const Attestation& attest = {},
                                     const MomentAngleCaps& caps = {}, int jobs = 1);

/// Generalized-lower-bound report: both the h-vector side and the bigraded
/// Betti side of the first two inequalities, with their exact equivalence.
VerificationReport glb_report(const SimplicialComplex& K, const MomentAngleCaps& caps = {},
                              int jobs = 1);

/// The coordinate subspace arrangement attached to K: maximal planes (one per
/// minimal non-face), and the complement's Betti data borrowed from Z_K.
struct ArrangementDescriptor {
    int m = 0;
    std::vector<VertexSet> maximal_planes;  // I with z_i = 0 for i in I
    std::vector<int> plane_dims;            // complex dimension m - |I|
    BigradedBettiTable complement_betti;
    Int complement_euler = 0;
};

/// Throws FullSimplexError when K = 2^[m] (empty arrangement).
ArrangementDescriptor arrangement_descriptor(const SimplicialComplex& K,
                                             const MomentAngleCaps& caps = {}, int jobs = 1);

}  // namespace mal
