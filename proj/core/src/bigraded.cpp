#include "mal/bigraded.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

namespace mal {

BigradedBettiTable homology_dimensions(const std::map<Bidegree, int>& dims,
                                       const std::map<Bidegree, SparseMatrix>& boundaries,
                                       int m, int n, int jobs) {
    // boundary(d) . boundary(q+1, p) must vanish.
    for (const auto& [d, mat] : boundaries) {
        auto above = boundaries.find(Bidegree{d.q + 1, d.p});
        if (above != boundaries.end() && !(mat * above->second).is_zero())
            throw std::logic_error("homology_dimensions: boundary^2 != 0");
    }

    // Rank of every boundary matrix, computed once, optionally in parallel.
    std::vector<const SparseMatrix*> mats;
    std::vector<Bidegree> keys;
    for (const auto& [d, mat] : boundaries) {
        keys.push_back(d);
        mats.push_back(&mat);
    }
    std::vector<int> ranks(mats.size(), 0);
    if (jobs <= 1 || mats.size() <= 1) {
        for (std::size_t i = 0; i < mats.size(); ++i) ranks[i] = rank(*mats[i]).rank;
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < mats.size(); i = next.fetch_add(1))
                ranks[i] = rank(*mats[i]).rank;
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::map<Bidegree, int> rank_of;
    for (std::size_t i = 0; i < keys.size(); ++i) rank_of[keys[i]] = ranks[i];

    BigradedBettiTable table;
    table.m = m;
    table.n = n;
    for (const auto& [d, dim] : dims) {
        if (dim == 0) continue;
        auto r = [&](Bidegree k) {
            auto it = rank_of.find(k);
            return it == rank_of.end() ? 0 : it->second;
        };
        Int b = Int(dim) - r(d) - r(Bidegree{d.q + 1, d.p});
        if (b != 0) table.b[d] = b;
    }
    return table;
}

}  // namespace mal
