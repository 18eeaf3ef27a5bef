#pragma once

#include <map>
#include <utility>

#include "mal/numbers.hpp"

namespace mal {

struct RankProfile {
    int rank = 0;
    int nullity = 0;
};

/// Sparse matrix over the rationals; zeros are never stored.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, Rational value);
    void add(int r, int c, const Rational& value);
    Rational get(int r, int c) const;

    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    SparseMatrix transposed() const;
    SparseMatrix operator*(const SparseMatrix& other) const;
    bool operator==(const SparseMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::map<std::pair<int, int>, Rational> entries_;
};

/// Exact rank over Q by fraction-free elimination with Markowitz pivoting.
RankProfile rank(const SparseMatrix& M);

/// dim ker(d_out) - rank(d_in) for composable maps d_out . d_in = 0.
/// Throws std::logic_error if the composition is non-zero, which signals a
/// chain-complex construction bug.
Int betti_from_pair(const SparseMatrix& d_in, const SparseMatrix& d_out);

}  // namespace mal
