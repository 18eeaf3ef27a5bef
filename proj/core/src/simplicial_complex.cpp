#include "mal/simplicial_complex.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

#include "mal/errors.hpp"

namespace mal {

namespace {

std::string vec_to_string(const std::vector<Int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

}  // namespace

std::string FVector::to_string() const { return vec_to_string(f); }
std::string HVector::to_string() const { return vec_to_string(h); }

SimplicialComplex SimplicialComplex::from_facets(std::vector<VertexSet> facets, int m) {
    if (m < 0 || m > 63) throw InputError("vertex count m must be in 0..63");
    if (facets.empty()) throw InputError("facet list is empty");
    const VertexSet ground = VertexSet::full(m);
    for (const auto& f : facets) {
        if (!f.subset_of(ground))
            throw InputError("facet " + f.to_string() + " has a vertex outside 1.." +
                             std::to_string(m));
    }

    // Drop duplicates and dominated facets.
    std::sort(facets.begin(), facets.end(),
              [](VertexSet a, VertexSet b) { return a.count() > b.count() || (a.count() == b.count() && a.bits < b.bits); });
    std::vector<VertexSet> maximal;
    for (const auto& f : facets) {
        bool dominated = false;
        for (const auto& g : maximal)
            if (f.subset_of(g)) { dominated = true; break; }
        if (!dominated) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end(),
              [](VertexSet a, VertexSet b) { return a.count() < b.count() || (a.count() == b.count() && a.bits < b.bits); });

    SimplicialComplex K;
    K.m_ = m;
    K.facets_ = std::move(maximal);
    K.n_ = 0;
    for (const auto& f : K.facets_) K.n_ = std::max(K.n_, f.count());

    // Downward closure.
    for (const auto& f : K.facets_) {
        std::uint64_t sub = f.bits;
        while (true) {
            K.membership_.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f.bits;
        }
    }
    K.simplices_.reserve(K.membership_.size());
    for (std::uint64_t b : K.membership_) K.simplices_.push_back(VertexSet(b));
    std::sort(K.simplices_.begin(), K.simplices_.end(), [](VertexSet a, VertexSet b) {
        return a.count() < b.count() || (a.count() == b.count() && a.bits < b.bits);
    });

    K.full_simplex_ = (K.facets_.size() == 1 && K.facets_[0] == ground && m > 0);
    return K;
}

std::vector<VertexSet> SimplicialComplex::simplices_of_card(int card) const {
    std::vector<VertexSet> out;
    for (const auto& s : simplices_)
        if (s.count() == card) out.push_back(s);
    return out;
}

FVector SimplicialComplex::f_vector() const {
    FVector fv;
    fv.f.assign(n_, 0);
    for (const auto& s : simplices_)
        if (!s.empty()) fv.f[s.count() - 1] += 1;
    return fv;
}

HVector SimplicialComplex::h_vector() const {
    const FVector fv = f_vector();
    // Expand (t-1)^n + f_0 (t-1)^{n-1} + ... + f_{n-1}; h_k is the
    // coefficient of t^{n-k}.
    IntPoly sum;
    const IntPoly tm1{-1, 1};
    for (int i = 0; i <= n_; ++i)
        sum = poly_add(sum, poly_scale(poly_pow(tm1, n_ - i), fv.at(i - 1)));
    sum.resize(n_ + 1, 0);

    HVector hv;
    hv.h.assign(n_ + 1, 0);
    for (int k = 0; k <= n_; ++k) hv.h[k] = sum[n_ - k];

    // Cross-check against the alternating-sum formula.
    for (int k = 0; k <= n_; ++k) {
        Int alt = 0;
        for (int i = 0; i <= k; ++i) {
            Int term = binomial(n_ - i, k - i) * fv.at(i - 1);
            alt += ((k - i) % 2 == 0) ? term : -term;
        }
        assert(alt == hv.h[k]);
        (void)alt;
    }
    return hv;
}

Int SimplicialComplex::euler_number() const {
    const FVector fv = f_vector();
    Int chi = 0;
    for (int i = 0; i < n_; ++i) chi += (i % 2 == 0) ? fv.f[i] : -fv.f[i];
    const HVector hv = h_vector();
    const Int hn = hv.at(n_);
    assert(chi == 1 + ((n_ - 1) % 2 == 0 ? hn : -hn));
    (void)hv;
    return chi;
}

SimplicialComplex SimplicialComplex::link(VertexSet sigma) const {
    if (!contains(sigma)) throw InputError("link: " + sigma.to_string() + " is not a simplex");
    if (sigma.empty()) return *this;

    // Re-index [m] \ sigma to 1..m-|sigma|.
    std::vector<int> old_to_new(m_ + 1, 0);
    int next = 1;
    for (int v = 1; v <= m_; ++v)
        if (!sigma.contains(v)) old_to_new[v] = next++;

    std::vector<VertexSet> link_faces;
    for (const auto& tau : simplices_) {
        if ((tau & sigma).empty() && contains(tau | sigma)) {
            VertexSet mapped;
            for (int v : tau.vertices()) mapped = mapped.with(old_to_new[v]);
            link_faces.push_back(mapped);
        }
    }
    // from_facets drops the non-maximal ones.
    return from_facets(link_faces, m_ - sigma.count());
}

SimplicialComplex SimplicialComplex::barycentric_subdivision() const {
    // Vertices of bs(K) are the non-empty simplices of K; facets are the
    // maximal flags sigma_1 < sigma_2 < ... inside a facet of K.
    std::map<std::uint64_t, int> simplex_index;
    int next = 1;
    for (const auto& s : simplices_)
        if (!s.empty()) simplex_index[s.bits] = next++;

    std::vector<VertexSet> bs_facets;
    std::function<void(VertexSet, VertexSet)> extend = [&](VertexSet chain_face, VertexSet top) {
        // chain_face: bs-vertices picked so far; top: last simplex of the flag.
        if (top.count() == 1) {
            bs_facets.push_back(chain_face);
            return;
        }
        for (int v : top.vertices()) extend(chain_face.with(simplex_index.at(top.without(v).bits)), top.without(v));
    };
    for (const auto& f : facets_) {
        if (f.empty()) { bs_facets.push_back(VertexSet()); continue; }
        extend(VertexSet().with(simplex_index.at(f.bits)), f);
    }
    return from_facets(bs_facets, next - 1);
}

ManifoldStatus SimplicialComplex::manifold_status(bool attested) const {
    ManifoldStatus st;
    st.user_attested_manifold = attested;

    st.is_pure = true;
    for (const auto& f : facets_)
        if (f.count() != n_) st.is_pure = false;

    // Ridges: (n-2)-faces, i.e. subsets of cardinality n-1 of the top facets.
    std::map<std::uint64_t, std::vector<int>> ridge_to_facets;
    std::vector<VertexSet> top;
    for (const auto& f : facets_)
        if (f.count() == n_) top.push_back(f);
    for (int fi = 0; fi < static_cast<int>(top.size()); ++fi) {
        if (n_ == 1) {
            ridge_to_facets[0].push_back(fi);
            continue;
        }
        for (int v : top[fi].vertices()) ridge_to_facets[top[fi].without(v).bits].push_back(fi);
    }

    bool two_facets_per_ridge = true;
    for (const auto& [ridge, fs] : ridge_to_facets)
        if (fs.size() != 2) two_facets_per_ridge = false;
    st.is_closed_pseudomanifold = st.is_pure && two_facets_per_ridge && !top.empty();

    // Facet graph connectivity across shared ridges.
    std::vector<std::vector<int>> adj(top.size());
    for (const auto& [ridge, fs] : ridge_to_facets)
        for (std::size_t a = 0; a < fs.size(); ++a)
            for (std::size_t b = a + 1; b < fs.size(); ++b) {
                adj[fs[a]].push_back(fs[b]);
                adj[fs[b]].push_back(fs[a]);
            }
    std::vector<int> comp(top.size(), -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < top.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{static_cast<int>(s)};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (comp[y] < 0) {
                    comp[y] = ncomp;
                    stack.push_back(y);
                }
        }
        ++ncomp;
    }
    st.is_strongly_connected = st.is_pure && ncomp == 1 && facets_.size() == top.size();

    if (st.is_closed_pseudomanifold) {
        // Propagate facet orientations over the ridge graph; a consistent
        // assignment exists iff orientable.  The induced orientation of a
        // ridge flips with the parity of the removed vertex position, so two
        // neighbours are compatible when their signs differ accordingly.
        std::vector<int> sign(top.size(), 0);
        bool orientable = true;
        for (std::size_t s = 0; s < top.size() && orientable; ++s) {
            if (sign[s] != 0) continue;
            sign[s] = 1;
            std::vector<int> stack{static_cast<int>(s)};
            while (!stack.empty() && orientable) {
                int x = stack.back();
                stack.pop_back();
                for (const auto& [ridge, fs] : ridge_to_facets) {
                    if (fs[0] != x && fs[1] != x) continue;
                    int y = fs[0] == x ? fs[1] : fs[0];
                    // Position parity of the vertex missing from the ridge.
                    auto parity = [&](int facet) {
                        VertexSet extra = top[facet] - VertexSet(ridge);
                        return top[facet].rank_below(extra.vertices()[0]) % 2;
                    };
                    int needed = (parity(x) == parity(y)) ? -sign[x] : sign[x];
                    if (sign[y] == 0) {
                        sign[y] = needed;
                        stack.push_back(y);
                    } else if (sign[y] != needed) {
                        orientable = false;
                        break;
                    }
                }
            }
        }
        st.is_orientable = orientable;
    }

    for (int v = 1; v <= m_; ++v) {
        VertexSet vs = VertexSet().with(v);
        if (contains(vs)) st.link_euler_numbers[v] = link(vs).euler_number();
    }
    return st;
}

}  // namespace mal
