#pragma once

#include <iosfwd>
#include <vector>

#include "mal/numbers.hpp"
#include "mal/simplicial_complex.hpp"
#include "mal/vertex_set.hpp"

namespace mal {

/// Face F_{I in J} of the m-cube: y_i = 0 for i in I, y_j = 1 for j outside J.
/// Dimension is |J| - |I|.
struct CubicalFacePair {
    VertexSet I, J;

    int dimension() const { return J.count() - I.count(); }
    bool operator==(const CubicalFacePair&) const = default;
    auto operator<=>(const CubicalFacePair&) const = default;
};

/// Subcomplex of the m-cube closed under passing to subfaces.  Faces are
/// generated from a simplicial complex; the face set is materialized lazily.
class CubicalComplex {
public:
    enum class Kind { Cub, Cc };

    int m() const { return m_; }
    Kind kind() const { return kind_; }

    /// Membership test straight from the generator description.
    bool contains(const CubicalFacePair& f) const;

    /// All faces, sorted; built on first use.
    const std::vector<CubicalFacePair>& faces() const;

    int dimension() const;
    /// Alternating sum of face counts over the face poset.
    Int euler_number() const;

    /// Vertex coordinate list plus per-face vertex index lists, for external
    /// visualization.
    void write_off(std::ostream& os) const;

private:
    friend CubicalComplex cub(const SimplicialComplex& K);
    friend CubicalComplex cc(const SimplicialComplex& K);

    CubicalComplex(Kind kind, const SimplicialComplex& K)
        : m_(K.m()), kind_(kind), K_(K) {}

    int m_ = 0;
    Kind kind_ = Kind::Cub;
    SimplicialComplex K_;
    mutable std::vector<CubicalFacePair> faces_;
    mutable bool materialized_ = false;
};

/// cub(K): faces F_{I in J} with J in K and I a non-empty subset of J.
/// The underlying space is |K|, of dimension n-1.
CubicalComplex cub(const SimplicialComplex& K);

/// cc(K): faces F_{I in J} with J in K and any I, including the empty set.
/// The underlying space is the cone over |K|, of dimension n.
CubicalComplex cc(const SimplicialComplex& K);

/// Coordinates of the cube vertex v_I: 0 in the positions of I, 1 elsewhere.
std::vector<int> cube_vertex(VertexSet I, int m);

}  // namespace mal
