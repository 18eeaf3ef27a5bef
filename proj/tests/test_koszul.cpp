#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mal/errors.hpp"
#include "mal/examples.hpp"
#include "mal/koszul.hpp"
#include "mal/moment_angle.hpp"

using namespace mal;

TEST_CASE("minimal non-faces") {
    auto circle = minimal_nonfaces(examples::boundary_simplex(2));
    REQUIRE(circle.minimal_nonfaces.size() == 1);
    CHECK(circle.minimal_nonfaces[0] == VertexSet::of({1, 2, 3}));

    auto pts = minimal_nonfaces(examples::disjoint_points(3));
    CHECK(pts.minimal_nonfaces.size() == 3);
    for (const auto& nf : pts.minimal_nonfaces) CHECK(nf.count() == 2);

    auto full = minimal_nonfaces(examples::full_simplex(3));
    CHECK(full.minimal_nonfaces.empty());
}

TEST_CASE("koszul differential relations") {
    auto K = examples::disjoint_points(3);
    auto C = build_koszul_complex(K);

    // d(u_i u_j) = v_i u_j - v_j u_i: component (-2, 2p=4) -> (-1, 4).
    const auto& dom = C.components.at({-2, 2});
    const auto& cod = C.components.at({-1, 2});
    const auto& d = C.differentials.at({-2, 2});
    auto dom_idx = [&](VertexSet J) {
        return std::find(dom.begin(), dom.end(), KoszulMonomial{VertexSet(), J}) - dom.begin();
    };
    auto cod_idx = [&](VertexSet I, VertexSet J) {
        return std::find(cod.begin(), cod.end(), KoszulMonomial{I, J}) - cod.begin();
    };
    const auto j12 = dom_idx(VertexSet::of({1, 2}));
    CHECK(d.get(static_cast<int>(cod_idx(VertexSet::of({1}), VertexSet::of({2}))),
                static_cast<int>(j12)) == 1);
    CHECK(d.get(static_cast<int>(cod_idx(VertexSet::of({2}), VertexSet::of({1}))),
                static_cast<int>(j12)) == -1);

    // v_i u_j is a cocycle iff {i,j} is not an edge: for 3 points all are, so
    // the differential out of (-1, 4) has empty codomain and is not stored.
    CHECK(C.differentials.find({-1, 2}) == C.differentials.end());
    CHECK(C.components.find({0, 2}) == C.components.end());

    // On the triangle boundary, d(v_1 u_2) = v_1 v_2 is a non-trivial cocycle
    // target, so the same differential is present and non-zero.
    auto D = build_koszul_complex(examples::boundary_simplex(2));
    CHECK(D.differentials.find({-1, 2}) != D.differentials.end());
    CHECK(!D.differentials.at({-1, 2}).is_zero());
}

TEST_CASE("koszul component dimensions equal the cellular counts") {
    for (const auto& K : {examples::boundary_simplex(3), examples::random_complex(5, 8)}) {
        auto koszul = build_koszul_complex(K);
        auto cellular = build_zk_complex(K);
        for (const auto& [d, basis] : cellular.components)
            CHECK(koszul.dim(d) == static_cast<int>(basis.size()));
    }
}

TEST_CASE("tor dimensions equal the cellular betti table") {
    for (const auto& K :
         {examples::disjoint_points(3), examples::boundary_simplex(2),
          examples::boundary_simplex(3), examples::random_complex(6, 12)}) {
        auto tor = tor_dimensions(build_koszul_complex(K));
        auto cellular = bigraded_betti(build_zk_complex(K));
        CHECK(tor.b == cellular.b);
    }
    auto pts = tor_dimensions(build_koszul_complex(examples::disjoint_points(3)));
    CHECK(pts.at({-1, 2}) == 3);
    CHECK(pts.at({0, 0}) == 1);
    auto circle = tor_dimensions(build_koszul_complex(examples::boundary_simplex(2)));
    CHECK(circle.at({-1, 3}) == 1);
}

TEST_CASE("monomial product") {
    auto K = examples::boundary_simplex(2);
    const KoszulMonomial v1{VertexSet::of({1}), VertexSet()};
    const KoszulMonomial u1{VertexSet(), VertexSet::of({1})};
    const KoszulMonomial u2{VertexSet(), VertexSet::of({2})};

    CHECK(!monomial_product(v1, v1, K).has_value());

    auto p12 = monomial_product(u1, u2, K);
    REQUIRE(p12.has_value());
    CHECK(p12->sign == 1);
    CHECK(p12->monomial.J == VertexSet::of({1, 2}));

    auto p21 = monomial_product(u2, u1, K);
    REQUIRE(p21.has_value());
    CHECK(p21->sign == -1);
    CHECK(p21->monomial == p12->monomial);

    // v_{12} * v_3 leaves K.
    const KoszulMonomial v12{VertexSet::of({1, 2}), VertexSet()};
    const KoszulMonomial v3{VertexSet::of({3}), VertexSet()};
    CHECK(!monomial_product(v12, v3, K).has_value());
}

TEST_CASE("monomial product is graded commutative") {
    auto K = examples::random_complex(4, 6);
    std::vector<KoszulMonomial> all;
    for (const auto& I : K.simplices())
        for (std::uint64_t j = 0; j < 16; ++j)
            if ((I.bits & j) == 0) all.push_back({I, VertexSet(j)});
    for (const auto& a : all)
        for (const auto& b : all) {
            auto ab = monomial_product(a, b, K);
            auto ba = monomial_product(b, a, K);
            CHECK(ab.has_value() == ba.has_value());
            if (!ab) continue;
            const int da = a.total_degree(), db = b.total_degree();
            const int sign = (da * db) % 2 == 0 ? 1 : -1;
            CHECK(ab->monomial == ba->monomial);
            CHECK(ab->sign == sign * ba->sign);
        }
}

TEST_CASE("fundamental class") {
    auto circle_class = fundamental_class(examples::boundary_simplex(2));
    CHECK(circle_class.I == VertexSet::of({1, 2}));
    CHECK(circle_class.J == VertexSet::of({3}));

    auto torus_class = fundamental_class(examples::torus9());
    CHECK(torus_class.I.count() == 3);
    CHECK(torus_class.J.count() == 6);
    CHECK(torus_class.total_degree() == 12);  // m + n

    CHECK_THROWS_AS(fundamental_class(examples::disjoint_points(3)), InputError);
}

TEST_CASE("full koszul crosscheck") {
    auto pts = full_koszul_crosscheck(examples::disjoint_points(3), 3);
    CHECK(pts.at({0, 0}) == 1);
    CHECK(pts.at({-1, 2}) == 3);

    auto K = examples::boundary_simplex(2);
    auto full = full_koszul_crosscheck(K, 3);
    auto finite = tor_dimensions(build_koszul_complex(K));
    for (const auto& [d, v] : finite.b)
        if (d.p <= 3) CHECK(full.at(d) == v);
    for (const auto& [d, v] : full.b)
        if (d.p <= 3) CHECK(finite.at(d) == v);
}

TEST_CASE("gorenstein* detection") {
    CHECK(gorenstein_star_check(examples::boundary_simplex(3)));
    CHECK(gorenstein_star_check(examples::boundary_simplex(2)));
    CHECK(!gorenstein_star_check(examples::disjoint_points(3)));
}
