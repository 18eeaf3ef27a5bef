#include "mal/examples.hpp"

#include <random>

#include "mal/errors.hpp"

namespace mal {
namespace examples {

SimplicialComplex boundary_simplex(int n) {
    if (n < 1) throw InputError("boundary-simplex: n must be >= 1");
    const int m = n + 1;
    std::vector<VertexSet> facets;
    for (int skip = 1; skip <= m; ++skip) facets.push_back(VertexSet::full(m).without(skip));
    return SimplicialComplex::from_facets(facets, m);
}

SimplicialComplex full_simplex(int m) {
    if (m < 1) throw InputError("full-simplex: m must be >= 1");
    return SimplicialComplex::from_facets({VertexSet::full(m)}, m);
}

SimplicialComplex disjoint_points(int k) {
    if (k < 1) throw InputError("points: k must be >= 1");
    std::vector<VertexSet> facets;
    for (int v = 1; v <= k; ++v) facets.push_back(VertexSet().with(v));
    return SimplicialComplex::from_facets(facets, k);
}

SimplicialComplex torus9() {
    auto vertex = [](int r, int c) { return 3 * ((r % 3 + 3) % 3) + ((c % 3 + 3) % 3) + 1; };
    std::vector<VertexSet> facets;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            facets.push_back(VertexSet::of({vertex(r, c), vertex(r, c + 1), vertex(r + 1, c + 1)}));
            facets.push_back(VertexSet::of({vertex(r, c), vertex(r + 1, c), vertex(r + 1, c + 1)}));
        }
    return SimplicialComplex::from_facets(facets, 9);
}

SimplicialComplex cyclic_polytope_boundary(int d, int v) {
    if (d < 2 || d % 2 != 0) throw InputError("cyclic: only even dimension d supported");
    if (v < d + 1) throw InputError("cyclic: need at least d+1 vertices");

    // Gale evenness: S is a facet iff any two elements outside S are
    // separated by an even number of elements of S.
    std::vector<VertexSet> facets;
    for (std::uint64_t bits = 0; bits < (1ULL << v); ++bits) {
        VertexSet S(bits);
        if (S.count() != d) continue;
        bool ok = true;
        for (int i = 1; i <= v && ok; ++i) {
            if (S.contains(i)) continue;
            for (int j = i + 1; j <= v && ok; ++j) {
                if (S.contains(j)) continue;
                int between = 0;
                for (int k = i + 1; k < j; ++k)
                    if (S.contains(k)) ++between;
                if (between % 2 != 0) ok = false;
            }
        }
        if (ok) facets.push_back(S);
    }
    return SimplicialComplex::from_facets(facets, v);
}

SimplicialComplex random_complex(int m, std::uint32_t seed) {
    if (m < 2) throw InputError("random: m must be >= 2");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> card_dist(1, std::min(m - 1, 4));
    std::uniform_int_distribution<int> vert_dist(1, m);
    std::uniform_int_distribution<int> count_dist(2, 2 * m);

    std::vector<VertexSet> facets;
    const int count = count_dist(rng);
    for (int i = 0; i < count; ++i) {
        VertexSet f;
        const int card = card_dist(rng);
        while (f.count() < card) f = f.with(vert_dist(rng));
        facets.push_back(f);
    }
    // Every vertex present, so f_0 = m.
    for (int vtx = 1; vtx <= m; ++vtx) facets.push_back(VertexSet().with(vtx));
    return SimplicialComplex::from_facets(facets, m);
}

SimplicialComplex by_name(const std::string& name) {
    auto parse_args = [&](const std::string& s) {
        std::vector<int> args;
        std::size_t at = 0;
        while (at < s.size()) {
            std::size_t comma = s.find(',', at);
            if (comma == std::string::npos) comma = s.size();
            try {
                args.push_back(std::stoi(s.substr(at, comma - at)));
            } catch (const std::exception&) {
                throw InputError("bad example arguments '" + s + "'");
            }
            at = comma + 1;
        }
        return args;
    };

    const std::size_t colon = name.find(':');
    const std::string base = name.substr(0, colon);
    const std::vector<int> args =
        colon == std::string::npos ? std::vector<int>{} : parse_args(name.substr(colon + 1));

    auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw InputError("example '" + base + "' takes " + std::to_string(k) + " argument(s)");
    };
    if (base == "torus9") { want(0); return torus9(); }
    if (base == "boundary-simplex") { want(1); return boundary_simplex(args[0]); }
    if (base == "full-simplex") { want(1); return full_simplex(args[0]); }
    if (base == "points") { want(1); return disjoint_points(args[0]); }
    if (base == "cyclic") { want(2); return cyclic_polytope_boundary(args[0], args[1]); }
    if (base == "random") { want(2); return random_complex(args[0], static_cast<std::uint32_t>(args[1])); }
    throw InputError("unknown example '" + name + "'");
}

}  // namespace examples
}  // namespace mal
