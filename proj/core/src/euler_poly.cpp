#include "mal/euler_poly.hpp"

#include "mal/errors.hpp"

namespace mal {

std::string space_name(Space s) {
    switch (s) {
        case Space::Zk: return "zk";
        case Space::Wk: return "wk";
        case Space::ZkRelTorus: return "zk-rel-torus";
    }
    return "?";
}

Space space_from_name(const std::string& name) {
    if (name == "zk") return Space::Zk;
    if (name == "wk") return Space::Wk;
    if (name == "zk-rel-torus") return Space::ZkRelTorus;
    throw InputError("unknown space '" + name + "' (expected zk, wk or zk-rel-torus)");
}

Int EulerPolynomial::value_at_one() const {
    Int s = 0;
    for (const auto& c : chi) s += c;
    return s;
}

std::string EulerPolynomial::to_string() const {
    std::string s;
    for (int p = 0; p < static_cast<int>(chi.size()); ++p) {
        if (chi[p] == 0) continue;
        const Int a = chi[p] < 0 ? Int(-chi[p]) : chi[p];
        if (s.empty())
            s += chi[p] < 0 ? "-" : "";
        else
            s += chi[p] < 0 ? " - " : " + ";
        if (a != 1 || p == 0) s += a.str();
        if (p > 0) {
            if (a != 1) s += "*";
            s += "t^" + std::to_string(2 * p);
        }
    }
    return s.empty() ? "0" : s;
}

namespace {

template <class Word>
EulerPolynomial from_dims(const BigradedChainComplex<Word>& C) {
    EulerPolynomial poly;
    poly.chi.assign(C.m + 1, 0);
    for (const auto& [d, basis] : C.components) {
        const Int count = static_cast<long long>(basis.size());
        poly.chi[d.p] += (d.q % 2 == 0) ? count : -count;
    }
    return poly;
}

}  // namespace

EulerPolynomial euler_poly_direct(Space space, const SimplicialComplex& K,
                                  const MomentAngleCaps& caps) {
    switch (space) {
        case Space::Zk: return from_dims(build_zk_complex(K, caps));
        case Space::ZkRelTorus: return from_dims(build_zk_rel_torus(K, caps));
        case Space::Wk: return from_dims(build_wk_complex(K, caps));
    }
    throw InputError("euler_poly_direct: bad space");
}

EulerPolynomial euler_poly_closed(Space space, const SimplicialComplex& K) {
    const int m = K.m();
    const int n = K.n();
    const HVector h = K.h_vector();

    IntPoly h_t2(h.h.begin(), h.h.end());  // index p = coefficient of t^{2p}
    const IntPoly one_minus{1, -1};
    IntPoly result = poly_mul(poly_pow(one_minus, m - n), h_t2);

    if (space == Space::ZkRelTorus)
        result = poly_add(result, poly_scale(poly_pow(one_minus, m), -1));
    else if (space == Space::Wk)
        result = poly_add(result, poly_scale(poly_pow(one_minus, m), K.euler_number() - 1));

    result.resize(m + 1, 0);
    EulerPolynomial poly;
    poly.chi = std::move(result);
    return poly;
}

}  // namespace mal
