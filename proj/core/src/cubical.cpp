#include "mal/cubical.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "mal/errors.hpp"

namespace mal {

CubicalComplex cub(const SimplicialComplex& K) {
    return CubicalComplex(CubicalComplex::Kind::Cub, K);
}

CubicalComplex cc(const SimplicialComplex& K) {
    return CubicalComplex(CubicalComplex::Kind::Cc, K);
}

bool CubicalComplex::contains(const CubicalFacePair& f) const {
    if (!f.I.subset_of(f.J) || !f.J.subset_of(VertexSet::full(m_))) return false;
    if (!K_.contains(f.J)) return false;
    if (kind_ == Kind::Cub && f.I.empty()) return false;
    return true;
}

const std::vector<CubicalFacePair>& CubicalComplex::faces() const {
    if (!materialized_) {
        for (const auto& J : K_.simplices()) {
            std::uint64_t sub = J.bits;
            while (true) {
                if (kind_ == Kind::Cc || sub != 0)
                    faces_.push_back({VertexSet(sub), J});
                if (sub == 0) break;
                sub = (sub - 1) & J.bits;
            }
        }
        std::sort(faces_.begin(), faces_.end());
        materialized_ = true;
    }
    return faces_;
}

int CubicalComplex::dimension() const {
    int d = 0;
    for (const auto& f : faces()) d = std::max(d, f.dimension());
    return d;
}

Int CubicalComplex::euler_number() const {
    Int chi = 0;
    for (const auto& f : faces()) chi += (f.dimension() % 2 == 0) ? 1 : -1;
    return chi;
}

std::vector<int> cube_vertex(VertexSet I, int m) {
    std::vector<int> coords(m, 1);
    for (int v : I.vertices()) coords[v - 1] = 0;
    return coords;
}

void CubicalComplex::write_off(std::ostream& os) const {
    // Vertices of a face F_{I in J} are the v_{I'} with I <= I' <= J.
    std::map<std::uint64_t, int> vertex_index;
    std::vector<VertexSet> verts;
    for (const auto& f : faces())
        if (f.dimension() == 0 && !vertex_index.count(f.I.bits)) {
            vertex_index[f.I.bits] = static_cast<int>(verts.size());
            verts.push_back(f.I);
        }

    os << "OFF\n" << verts.size() << " " << faces().size() << " 0\n";
    for (const auto& v : verts) {
        auto coords = cube_vertex(v, m_);
        for (int i = 0; i < m_; ++i) os << coords[i] << (i + 1 < m_ ? " " : "\n");
    }
    for (const auto& f : faces()) {
        std::vector<int> ids;
        std::uint64_t between = f.J.bits & ~f.I.bits;
        std::uint64_t sub = between;
        while (true) {
            ids.push_back(vertex_index.at(f.I.bits | sub));
            if (sub == 0) break;
            sub = (sub - 1) & between;
        }
        std::sort(ids.begin(), ids.end());
        os << ids.size();
        for (int id : ids) os << " " << id;
        os << "\n";
    }
}

}  // namespace mal
