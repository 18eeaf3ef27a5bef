#pragma once

#include <string>

#include "mal/moment_angle.hpp"
#include "mal/numbers.hpp"
#include "mal/simplicial_complex.hpp"

namespace mal {

enum class Space { Zk, Wk, ZkRelTorus };

std::string space_name(Space s);
Space space_from_name(const std::string& name);  // throws InputError

/// Polynomial in t^2: coefficient chi[p] at t^{2p}.
struct EulerPolynomial {
    std::vector<Int> chi;

    Int at(int p) const {
        return (p < 0 || p >= static_cast<int>(chi.size())) ? Int(0) : chi[p];
    }
    /// Value at t = 1, i.e. the Euler characteristic of the space.
    Int value_at_one() const;
    std::string to_string() const;
    bool operator==(const EulerPolynomial&) const = default;
};

/// chi_p as alternating sums of per-bidegree cell counts.
EulerPolynomial euler_poly_direct(Space space, const SimplicialComplex& K,
                                  const MomentAngleCaps& caps = {});

/// The closed h-vector formula: (1-t^2)^{m-n} h(t^2), with the extra
/// -(1-t^2)^m term for the relative pair and +(chi(K)-1)(1-t^2)^m for W_K.
EulerPolynomial euler_poly_closed(Space space, const SimplicialComplex& K);

}  // namespace mal
