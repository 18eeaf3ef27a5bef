#include "mal/sparse_matrix.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace mal {

void SparseMatrix::set(int r, int c, Rational value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseMatrix::set index out of range");
    if (value == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(value);
}

void SparseMatrix::add(int r, int c, const Rational& value) { set(r, c, get(r, c) + value); }

Rational SparseMatrix::get(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix T(cols_, rows_);
    for (const auto& [rc, v] : entries_) T.set(rc.second, rc.first, v);
    return T;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
    if (cols_ != other.rows_) throw std::logic_error("SparseMatrix: dimension mismatch in product");
    SparseMatrix P(rows_, other.cols_);
    // Group the right factor by row.
    std::vector<std::vector<std::pair<int, const Rational*>>> by_row(other.rows_);
    for (const auto& [rc, v] : other.entries_) by_row[rc.first].push_back({rc.second, &v});
    for (const auto& [rc, v] : entries_)
        for (const auto& [c2, v2] : by_row[rc.second]) P.add(rc.first, c2, v * *v2);
    return P;
}

namespace {

// Row-list form with integer entries for fraction-free (Bareiss) elimination.
struct Workspace {
    std::vector<std::map<int, Int>> rows;
    std::vector<int> col_count;

    explicit Workspace(const SparseMatrix& M) : rows(M.rows()), col_count(M.cols(), 0) {
        // Clear denominators row by row; rank is unaffected.
        std::vector<Int> row_lcm(M.rows(), 1);
        for (const auto& [rc, v] : M.entries())
            row_lcm[rc.first] = boost::multiprecision::lcm(row_lcm[rc.first], Int(denominator(v)));
        for (const auto& [rc, v] : M.entries()) {
            Int scaled = Int(numerator(v)) * (row_lcm[rc.first] / Int(denominator(v)));
            rows[rc.first][rc.second] = std::move(scaled);
            ++col_count[rc.second];
        }
    }
};

}  // namespace

RankProfile rank(const SparseMatrix& M) {
    Workspace ws(M);
    std::vector<bool> row_done(M.rows(), false);

    int r = 0;
    while (true) {
        // Markowitz: minimize (nnz(row)-1)*(nnz(col)-1) over nonzero entries.
        long long best = std::numeric_limits<long long>::max();
        int pr = -1, pc = -1;
        for (int i = 0; i < M.rows(); ++i) {
            if (row_done[i] || ws.rows[i].empty()) continue;
            const long long rn = static_cast<long long>(ws.rows[i].size()) - 1;
            for (const auto& [c, v] : ws.rows[i]) {
                const long long score = rn * (ws.col_count[c] - 1);
                if (score < best) {
                    best = score;
                    pr = i;
                    pc = c;
                    if (best == 0) break;
                }
            }
            if (best == 0) break;
        }
        if (pr < 0) break;

        const Int pivot = ws.rows[pr].at(pc);
        for (int i = 0; i < M.rows(); ++i) {
            if (i == pr || row_done[i]) continue;
            auto hit = ws.rows[i].find(pc);
            if (hit == ws.rows[i].end()) continue;
            const Int factor = hit->second;
            // row_i := pivot*row_i - factor*row_pr, then divide by gcd(row_i).
            // Fraction-free: integer entries throughout, and the gcd division
            // is exact by construction, so no Bareiss bookkeeping is needed.
            for (auto it = ws.rows[i].begin(); it != ws.rows[i].end(); ++it)
                it->second *= pivot;
            for (const auto& [c, v] : ws.rows[pr]) {
                auto it = ws.rows[i].find(c);
                Int updated = (it == ws.rows[i].end()) ? Int(-factor * v)
                                                       : Int(it->second - factor * v);
                if (updated == 0) {
                    if (it != ws.rows[i].end()) {
                        ws.rows[i].erase(it);
                        --ws.col_count[c];
                    }
                } else if (it == ws.rows[i].end()) {
                    ws.rows[i][c] = std::move(updated);
                    ++ws.col_count[c];
                } else {
                    it->second = std::move(updated);
                }
            }
            Int g = 0;
            for (const auto& [c, v] : ws.rows[i]) {
                g = boost::multiprecision::gcd(g, v);
                if (g == 1) break;
            }
            if (g > 1)
                for (auto& [c, v] : ws.rows[i]) v /= g;
        }
        for (const auto& [c, v] : ws.rows[pr]) --ws.col_count[c];
        ws.rows[pr].clear();
        row_done[pr] = true;
        ++r;
    }

    return RankProfile{r, M.cols() - r};
}

Int betti_from_pair(const SparseMatrix& d_in, const SparseMatrix& d_out) {
    if (d_in.rows() != d_out.cols())
        throw std::logic_error("betti_from_pair: maps are not composable");
    if (!(d_out * d_in).is_zero())
        throw std::logic_error("betti_from_pair: d_out . d_in != 0 (broken chain complex)");
    const RankProfile out = rank(d_out);
    const RankProfile in = rank(d_in);
    return Int(out.nullity) - in.rank;
}

}  // namespace mal
