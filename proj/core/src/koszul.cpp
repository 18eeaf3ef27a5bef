#include "mal/koszul.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "mal/errors.hpp"

namespace mal {

namespace {

std::vector<VertexSet> subsets_of_card(VertexSet mask, int k) {
    std::vector<VertexSet> out;
    std::uint64_t sub = mask.bits;
    while (true) {
        if (__builtin_popcountll(sub) == k) out.push_back(VertexSet(sub));
        if (sub == 0) break;
        sub = (sub - 1) & mask.bits;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Flip the sign of the first degree so cochain differentials (raising q)
/// become chain boundaries (lowering it), and back.
BigradedBettiTable cohomology_via_homology(const std::map<Bidegree, int>& dims,
                                           const std::map<Bidegree, SparseMatrix>& diffs,
                                           int m, int n, int jobs) {
    std::map<Bidegree, int> rdims;
    std::map<Bidegree, SparseMatrix> rbnds;
    for (const auto& [d, v] : dims) rdims[{-d.q, d.p}] = v;
    for (const auto& [d, mat] : diffs) rbnds[{-d.q, d.p}] = mat;
    BigradedBettiTable t = homology_dimensions(rdims, rbnds, m, n, jobs);
    BigradedBettiTable out;
    out.m = m;
    out.n = n;
    for (const auto& [d, v] : t.b) out.b[{-d.q, d.p}] = v;
    return out;
}

SparseMatrix with_extra_column(const SparseMatrix& M, const std::map<int, int>& column) {
    SparseMatrix A(M.rows(), M.cols() + 1);
    for (const auto& [rc, v] : M.entries()) A.set(rc.first, rc.second, v);
    for (const auto& [r, v] : column) A.set(r, M.cols(), v);
    return A;
}

}  // namespace

StanleyReisnerData minimal_nonfaces(const SimplicialComplex& K) {
    StanleyReisnerData sr;
    sr.m = K.m();
    std::set<std::uint64_t> found;
    for (const auto& sigma : K.simplices()) {
        for (int v = 1; v <= K.m(); ++v) {
            if (sigma.contains(v)) continue;
            const VertexSet S = sigma.with(v);
            if (K.contains(S) || found.count(S.bits)) continue;
            bool all_proper_in = true;
            for (int w : S.vertices())
                if (!K.contains(S.without(w))) { all_proper_in = false; break; }
            if (all_proper_in) found.insert(S.bits);
        }
    }
    for (std::uint64_t b : found) sr.minimal_nonfaces.push_back(VertexSet(b));
    std::sort(sr.minimal_nonfaces.begin(), sr.minimal_nonfaces.end(),
              [](VertexSet a, VertexSet b) {
                  return a.count() < b.count() || (a.count() == b.count() && a.bits < b.bits);
              });
    return sr;
}

KoszulCochainComplex build_koszul_complex(const SimplicialComplex& K) {
    const int m = K.m();
    const VertexSet ground = VertexSet::full(m);

    KoszulCochainComplex C;
    C.m = m;
    C.n = K.n();

    for (int q = 0; q <= m; ++q)
        for (int p = q; p <= m; ++p) {
            std::vector<KoszulMonomial> basis;
            for (const auto& I : K.simplices_of_card(p - q))
                for (const auto& J : subsets_of_card(ground - I, q)) basis.push_back({I, J});
            if (!basis.empty()) C.components[{-q, p}] = std::move(basis);
        }

    std::map<Bidegree, std::map<KoszulMonomial, int>> index;
    for (const auto& [d, basis] : C.components)
        for (int i = 0; i < static_cast<int>(basis.size()); ++i) index[d][basis[i]] = i;

    for (const auto& [d, basis] : C.components) {
        const Bidegree target{d.q + 1, d.p};
        auto tgt = index.find(target);
        if (tgt == index.end()) continue;
        SparseMatrix mat(C.dim(target), static_cast<int>(basis.size()));
        for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
            const auto& mono = basis[col];
            for (int j : mono.J.vertices()) {
                if (!K.contains(mono.I.with(j))) continue;
                const int sign = mono.J.rank_below(j) % 2 == 0 ? 1 : -1;
                mat.add(tgt->second.at({mono.I.with(j), mono.J.without(j)}), col, sign);
            }
        }
        C.differentials[d] = std::move(mat);
    }
    return C;
}

BigradedBettiTable tor_dimensions(const KoszulCochainComplex& C, int jobs) {
    std::map<Bidegree, int> dims;
    for (const auto& [d, basis] : C.components) dims[d] = static_cast<int>(basis.size());
    return cohomology_via_homology(dims, C.differentials, C.m, C.n, jobs);
}

std::optional<SignedMonomial> monomial_product(const KoszulMonomial& a, const KoszulMonomial& b,
                                               const SimplicialComplex& K) {
    if (!(a.I & b.I).empty() || !(a.J & b.J).empty()) return std::nullopt;
    const VertexSet I = a.I | b.I;
    const VertexSet J = a.J | b.J;
    if (!(I & J).empty()) return std::nullopt;
    if (!K.contains(I)) return std::nullopt;

    // Exterior sign of merging the two increasing u-words.
    int inversions = 0;
    for (int x : a.J.vertices()) inversions += b.J.rank_below(x);
    return SignedMonomial{inversions % 2 == 0 ? 1 : -1, KoszulMonomial{I, J}};
}

KoszulMonomial fundamental_class(const SimplicialComplex& K) {
    const ManifoldStatus st = K.manifold_status(false);
    if (!st.is_closed_pseudomanifold || !st.is_strongly_connected)
        throw InputError(
            "fundamental_class: K is not a strongly connected closed pseudomanifold");

    const int m = K.m();
    const int n = K.n();
    const KoszulCochainComplex C = build_koszul_complex(K);
    const Bidegree top{-(m - n), m};

    const auto& basis = C.components.at(top);
    std::map<KoszulMonomial, int> index;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) index[basis[i]] = i;

    auto image_it = C.differentials.find(Bidegree{top.q - 1, top.p});
    const SparseMatrix image = image_it != C.differentials.end()
                                   ? image_it->second
                                   : SparseMatrix(static_cast<int>(basis.size()), 0);
    const int image_rank = rank(image).rank;

    // Lexicographically first facet: smallest bitmask among top facets.
    VertexSet first;
    bool have = false;
    for (const auto& f : K.facets())
        if (f.count() == n && (!have || f.bits < first.bits)) { first = f; have = true; }

    const KoszulMonomial rep{first, VertexSet::full(m) - first};
    const int rep_row = index.at(rep);
    if (rank(with_extra_column(image, {{rep_row, 1}})).rank != image_rank + 1)
        throw std::logic_error("fundamental_class: representative is a coboundary");

    for (const auto& f : K.facets()) {
        if (f == first) continue;
        const int row = index.at(KoszulMonomial{f, VertexSet::full(m) - f});
        const bool minus = rank(with_extra_column(image, {{row, 1}, {rep_row, -1}})).rank == image_rank;
        const bool plus = rank(with_extra_column(image, {{row, 1}, {rep_row, 1}})).rank == image_rank;
        if (!minus && !plus)
            throw std::logic_error("fundamental_class: facet classes are not proportional");
    }
    return rep;
}

BigradedBettiTable full_koszul_crosscheck(const SimplicialComplex& K, int p_max) {
    const int m = K.m();
    if (p_max < 0 || p_max > m)
        throw CapExceededError("full_koszul_crosscheck: p_max must be in 0.." + std::to_string(m));

    // Monomial v^a u_J with support(a) in K; key = (exponents, J).
    using FullMonomial = std::pair<std::vector<int>, std::uint64_t>;
    std::map<Bidegree, std::vector<FullMonomial>> components;

    // Exponent vectors with given total and support exactly sigma.
    std::function<void(const std::vector<int>&, std::size_t, int, std::vector<int>&,
                       std::vector<std::vector<int>>&)>
        compose = [&](const std::vector<int>& verts, std::size_t at, int remaining,
                      std::vector<int>& acc, std::vector<std::vector<int>>& out) {
            if (at == verts.size()) {
                if (remaining == 0) out.push_back(acc);
                return;
            }
            const int slots = static_cast<int>(verts.size() - at);
            for (int e = 1; e + (slots - 1) <= remaining; ++e) {
                acc[verts[at] - 1] = e;
                compose(verts, at + 1, remaining - e, acc, out);
            }
            acc[verts[at] - 1] = 0;
        };

    for (int q = 0; q <= std::min(m, p_max); ++q) {
        for (int p = q; p <= p_max; ++p) {
            std::vector<FullMonomial> basis;
            for (const auto& sigma : K.simplices()) {
                if (sigma.count() > p - q) continue;
                if (sigma.empty() && p != q) continue;
                std::vector<std::vector<int>> exps;
                if (sigma.empty()) {
                    exps.push_back(std::vector<int>(m, 0));
                } else {
                    auto verts = sigma.vertices();
                    std::vector<int> acc(m, 0);
                    compose(verts, 0, p - q, acc, exps);
                }
                for (auto& e : exps)
                    for (const auto& J : subsets_of_card(VertexSet::full(m), q))
                        basis.push_back({e, J.bits});
            }
            std::sort(basis.begin(), basis.end());
            if (!basis.empty()) components[{-q, p}] = std::move(basis);
        }
    }

    std::map<Bidegree, std::map<FullMonomial, int>> index;
    for (const auto& [d, basis] : components)
        for (int i = 0; i < static_cast<int>(basis.size()); ++i) index[d][basis[i]] = i;

    std::map<Bidegree, int> dims;
    std::map<Bidegree, SparseMatrix> diffs;
    for (const auto& [d, basis] : components) dims[d] = static_cast<int>(basis.size());

    for (const auto& [d, basis] : components) {
        const Bidegree target{d.q + 1, d.p};
        auto tgt = index.find(target);
        if (tgt == index.end()) continue;
        SparseMatrix mat(static_cast<int>(components.at(target).size()),
                         static_cast<int>(basis.size()));
        for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
            const auto& [exps, j_bits] = basis[col];
            const VertexSet J(j_bits);
            for (int j : J.vertices()) {
                VertexSet support;
                for (int v = 1; v <= m; ++v)
                    if (exps[v - 1] > 0 || v == j) support = support.with(v);
                if (!K.contains(support)) continue;
                auto e2 = exps;
                ++e2[j - 1];
                const int sign = J.rank_below(j) % 2 == 0 ? 1 : -1;
                mat.add(tgt->second.at({e2, J.without(j).bits}), col, sign);
            }
        }
        diffs[d] = std::move(mat);
    }
    return cohomology_via_homology(dims, diffs, m, K.n(), 1);
}

bool gorenstein_star_check(const SimplicialComplex& K) {
    const BigradedBettiTable t = tor_dimensions(build_koszul_complex(K));
    const int m = K.m();
    const int n = K.n();
    for (int q = 0; q <= m; ++q)
        for (int p = 0; p <= m; ++p)
            if (t.at({-q, p}) != t.at({-(m - n) + q, m - p})) return false;
    return true;
}

}  // namespace mal
