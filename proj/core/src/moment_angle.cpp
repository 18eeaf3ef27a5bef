#include "mal/moment_angle.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "mal/errors.hpp"

namespace mal {

namespace {

/// k-subsets of the mask, in increasing bitmask order.
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

/// Sign of moving the letter at vertex v past the earlier odd-dimensional
/// letters of the word (T- and I-letters have odd dimension).
int koszul_sign(VertexSet odd_letters, int v) {
    return odd_letters.rank_below(v) % 2 == 0 ? 1 : -1;
}

BigradedChainComplex<CellWordZ> build_zk_like(const SimplicialComplex& K,
                                              const MomentAngleCaps& caps, bool relative) {
    if (K.m() > caps.max_m_zk)
        throw CapExceededError("Z_K construction capped at m <= " + std::to_string(caps.max_m_zk) +
                               " (got m = " + std::to_string(K.m()) + ")");
    const int m = K.m();
    const VertexSet ground = VertexSet::full(m);

    BigradedChainComplex<CellWordZ> C;
    C.m = m;
    C.n = K.n();

    for (int q = 0; q <= m; ++q) {
        for (int p = q; p <= m; ++p) {
            std::vector<CellWordZ> basis;
            for (const auto& D : K.simplices_of_card(p - q)) {
                if (relative && D.empty()) continue;
                for (const auto& T : subsets_of_card(ground - D, q)) basis.push_back({D, T});
            }
            if (!basis.empty()) C.components[{-q, p}] = std::move(basis);
        }
    }

    std::map<Bidegree, std::map<CellWordZ, int>> index;
    for (const auto& [d, basis] : C.components)
        for (int i = 0; i < static_cast<int>(basis.size()); ++i) index[d][basis[i]] = i;

    for (const auto& [d, basis] : C.components) {
        const Bidegree target{d.q - 1, d.p};
        auto tgt = index.find(target);
        SparseMatrix bd(C.dim(target), static_cast<int>(basis.size()));
        if (tgt != index.end()) {
            for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
                const auto& w = basis[col];
                for (int v : w.D.vertices()) {
                    CellWordZ img{w.D.without(v), w.T.with(v)};
                    if (relative && img.D.empty()) continue;
                    bd.add(tgt->second.at(img), col, koszul_sign(w.T, v));
                }
            }
        }
        if (bd.rows() > 0 && bd.cols() > 0) C.boundaries[d] = std::move(bd);
    }
    return C;
}

/// Dense Gaussian elimination over Q; deliberately separate from the sparse
/// fraction-free engine so the oracle shares nothing with it.
int dense_rank(std::vector<std::vector<Rational>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[r][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace

BigradedChainComplex<CellWordZ> build_zk_complex(const SimplicialComplex& K,
                                                 const MomentAngleCaps& caps) {
    return build_zk_like(K, caps, false);
}

BigradedChainComplex<CellWordZ> build_zk_rel_torus(const SimplicialComplex& K,
                                                   const MomentAngleCaps& caps) {
    return build_zk_like(K, caps, true);
}

BigradedChainComplex<CellWordW> build_wk_complex(const SimplicialComplex& K,
                                                 const MomentAngleCaps& caps) {
    if (K.m() > caps.max_m_wk)
        throw CapExceededError("W_K construction capped at m <= " + std::to_string(caps.max_m_wk) +
                               " (got m = " + std::to_string(K.m()) + ")");
    const int m = K.m();
    const VertexSet ground = VertexSet::full(m);

    BigradedChainComplex<CellWordW> C;
    C.m = m;
    C.n = K.n();

    for (const auto& S : K.simplices()) {
        if (S.empty()) continue;  // the 0-letter set must be non-empty
        std::uint64_t d_bits = S.bits;
        while (true) {
            const VertexSet D(d_bits);
            const VertexSet rest = S - D;
            std::uint64_t i_bits = rest.bits;
            while (true) {
                const VertexSet I(i_bits);
                const VertexSet Z = rest - I;
                if (!Z.empty()) {
                    std::uint64_t t_bits = (ground - S).bits;
                    while (true) {
                        const VertexSet T(t_bits);
                        C.components[{I.count() - T.count(), D.count() + T.count()}].push_back(
                            {D, I, Z, T});
                        if (t_bits == 0) break;
                        t_bits = (t_bits - 1) & (ground - S).bits;
                    }
                }
                if (i_bits == 0) break;
                i_bits = (i_bits - 1) & rest.bits;
            }
            if (d_bits == 0) break;
            d_bits = (d_bits - 1) & S.bits;
        }
    }
    for (auto& [d, basis] : C.components) std::sort(basis.begin(), basis.end());

    std::map<Bidegree, std::map<CellWordW, int>> index;
    for (const auto& [d, basis] : C.components)
        for (int i = 0; i < static_cast<int>(basis.size()); ++i) index[d][basis[i]] = i;

    for (const auto& [d, basis] : C.components) {
        const Bidegree target{d.q - 1, d.p};
        auto tgt = index.find(target);
        if (tgt == index.end()) continue;
        SparseMatrix bd(C.dim(target), static_cast<int>(basis.size()));
        for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
            const auto& w = basis[col];
            const VertexSet odd = w.I | w.T;
            for (int v : w.D.vertices())
                bd.add(tgt->second.at({w.D.without(v), w.I, w.Z, w.T.with(v)}), col,
                       koszul_sign(odd, v));
            for (int v : w.I.vertices()) {
                const int s = koszul_sign(odd, v);
                bd.add(tgt->second.at({w.D, w.I.without(v), w.Z, w.T}), col, s);
                bd.add(tgt->second.at({w.D, w.I.without(v), w.Z.with(v), w.T}), col, -s);
            }
        }
        C.boundaries[d] = std::move(bd);
    }
    return C;
}

BigradedBettiTable hochster_oracle(const SimplicialComplex& K, const MomentAngleCaps& caps) {
    if (K.m() > caps.max_m_hochster)
        throw CapExceededError("Hochster oracle capped at m <= " +
                               std::to_string(caps.max_m_hochster) +
                               " (got m = " + std::to_string(K.m()) + ")");
    const int m = K.m();

    BigradedBettiTable table;
    table.m = m;
    table.n = K.n();

    for (std::uint64_t w_bits = 0;; ++w_bits) {
        const VertexSet W(w_bits);
        const int p = W.count();

        // Full subcomplex K_W, grouped by cardinality.
        std::vector<std::vector<VertexSet>> by_card(K.n() + 1);
        for (const auto& s : K.simplices())
            if (s.subset_of(W)) by_card[s.count()].push_back(s);

        // Reduced chain complex: degree d has basis of (d+1)-sets, with the
        // empty set alone in degree -1.
        auto boundary_rank = [&](int card) {  // rank of C_card -> C_{card-1}
            if (card <= 0 || by_card[card].empty()) return 0;
            std::map<std::uint64_t, int> idx;
            for (int i = 0; i < static_cast<int>(by_card[card - 1].size()); ++i)
                idx[by_card[card - 1][i].bits] = i;
            std::vector<std::vector<Rational>> mat(
                by_card[card - 1].size(), std::vector<Rational>(by_card[card].size(), 0));
            for (int col = 0; col < static_cast<int>(by_card[card].size()); ++col) {
                const auto verts = by_card[card][col].vertices();
                for (std::size_t i = 0; i < verts.size(); ++i)
                    mat[idx.at(by_card[card][col].without(verts[i]).bits)][col] +=
                        (i % 2 == 0) ? 1 : -1;
            }
            return dense_rank(std::move(mat));
        };

        std::vector<int> rk(K.n() + 2, 0);
        for (int card = 1; card <= K.n(); ++card) rk[card] = boundary_rank(card);

        for (int card = 0; card <= K.n(); ++card) {  // homological degree card-1
            const int dim = static_cast<int>(by_card[card].size());
            if (dim == 0) continue;
            const int h = dim - rk[card] - rk[card + 1];
            if (h > 0) {
                const int q = p - card;  // degree card-1 = p-q-1
                table.b[{-q, p}] += h;
            }
        }
        if (w_bits == VertexSet::full(m).bits) break;
    }
    return table;
}

}  // namespace mal
