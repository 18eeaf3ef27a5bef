#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "mal/sparse_matrix.hpp"

using namespace mal;

namespace {

// Independent oracle: plain dense Gaussian elimination over the rationals.
int dense_rank(const SparseMatrix& M) {
    std::vector<std::vector<Rational>> a(M.rows(), std::vector<Rational>(M.cols(), 0));
    for (const auto& [rc, v] : M.entries()) a[rc.first][rc.second] = v;
    int rank = 0;
    for (int col = 0; col < M.cols() && rank < M.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < M.rows(); ++r)
            if (a[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < M.rows(); ++r) {
            if (a[r][col] == 0) continue;
            const Rational factor = a[r][col] / a[rank][col];
            for (int c = col; c < M.cols(); ++c) a[r][c] -= factor * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

/// Boundary matrix C_1 -> C_0 of the cycle graph on k vertices.
SparseMatrix cycle_boundary(int k) {
    SparseMatrix d(k, k);
    for (int e = 0; e < k; ++e) {
        d.set(e, e, -1);
        d.set((e + 1) % k, e, 1);
    }
    return d;
}

SparseMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
    SparseMatrix M(rows, cols);
    std::uniform_int_distribution<int> val(-3, 3);
    std::uniform_int_distribution<int> fill(0, 3);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (fill(rng) == 0) M.set(r, c, val(rng));
    return M;
}

}  // namespace

TEST_CASE("rank of trivial matrices") {
    CHECK(rank(SparseMatrix(0, 0)).rank == 0);
    CHECK(rank(SparseMatrix(0, 0)).nullity == 0);
    CHECK(rank(SparseMatrix(4, 7)).rank == 0);
    CHECK(rank(SparseMatrix(4, 7)).nullity == 7);

    SparseMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.set(i, i, 1);
    CHECK(rank(id).rank == 3);
    CHECK(rank(id).nullity == 0);
}

TEST_CASE("rank of the 6-cycle boundary matrix") {
    CHECK(rank(cycle_boundary(6)).rank == 5);
}

TEST_CASE("rank matches a dense oracle on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        auto M = random_matrix(rng, 1 + static_cast<int>(rng() % 9),
                               1 + static_cast<int>(rng() % 9));
        const int expected = dense_rank(M);
        CHECK(rank(M).rank == expected);
        CHECK(rank(M.transposed()).rank == expected);
    }
}

TEST_CASE("rank is invariant under row and column permutation") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        auto M = random_matrix(rng, 6, 8);
        std::vector<int> rp(6), cp(8);
        for (int i = 0; i < 6; ++i) rp[i] = i;
        for (int i = 0; i < 8; ++i) cp[i] = i;
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        SparseMatrix P(6, 8);
        for (const auto& [rc, v] : M.entries()) P.set(rp[rc.first], cp[rc.second], v);
        CHECK(rank(M).rank == rank(P).rank);
    }
}

TEST_CASE("rank handles rational entries") {
    SparseMatrix M(2, 2);
    M.set(0, 0, Rational(1, 2));
    M.set(0, 1, Rational(1, 3));
    M.set(1, 0, Rational(3, 2));
    M.set(1, 1, 1);  // second row = 3 * first row
    CHECK(rank(M).rank == 1);
}

TEST_CASE("betti_from_pair") {
    // Zero maps on a 5-dimensional space.
    CHECK(betti_from_pair(SparseMatrix(5, 0), SparseMatrix(0, 5)) == 5);

    // Circle homology from the 6-cycle: H_0 and H_1 both 1-dimensional.
    auto d1 = cycle_boundary(6);
    CHECK(betti_from_pair(d1, SparseMatrix(0, 6)) == 1);          // H_0
    CHECK(betti_from_pair(SparseMatrix(6, 0), d1) == 1);          // H_1
}

TEST_CASE("betti_from_pair rejects non-composable pairs") {
    SparseMatrix d_in(3, 2), d_out(2, 3);
    d_in.set(0, 0, 1);
    d_out.set(0, 0, 1);
    CHECK_THROWS_AS(betti_from_pair(d_in, d_out), std::logic_error);
}

TEST_CASE("matrix product and transpose") {
    SparseMatrix A(2, 3), B(3, 2);
    A.set(0, 0, 1);
    A.set(0, 2, 2);
    A.set(1, 1, -1);
    B.set(0, 0, 3);
    B.set(2, 1, 4);
    B.set(1, 0, 5);
    auto C = A * B;
    CHECK(C.get(0, 0) == 3);
    CHECK(C.get(0, 1) == 8);
    CHECK(C.get(1, 0) == -5);
    CHECK(A.transposed().get(2, 0) == 2);
}
