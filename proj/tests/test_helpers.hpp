#ifndef INJSPEC_TEST_HELPERS_HPP
#define INJSPEC_TEST_HELPERS_HPP

#include <cstdint>
#include <vector>

#include "injspec/rep.hpp"

namespace injspec::testing {

// Exhaustive oracle: count all vertex-matrix tuples satisfying the commuting
// squares by enumerating every candidate map entrywise. The count must be
// p^dim Hom(M,N). Only usable for small total dimensions.
inline std::uint64_t brute_hom_count(const Rep& m, const Rep& n) {
    int nentries = 0;
    for (int w = 1; w <= m.q.n; ++w) nentries += m.dim(w) * n.dim(w);
    std::uint64_t total = 1;
    for (int i = 0; i < nentries; ++i) total *= m.p;

    std::uint64_t good = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<Mat> mats;
        std::uint64_t rest = code;
        for (int w = 1; w <= m.q.n; ++w) {
            Mat f(m.p, n.dim(w), m.dim(w));
            for (auto& x : f.a) {
                x = std::uint32_t(rest % m.p);
                rest /= m.p;
            }
            mats.push_back(std::move(f));
        }
        bool ok = true;
        for (std::size_t ai = 0; ai < m.q.arrows.size() && ok; ++ai) {
            const auto& a = m.q.arrows[ai];
            ok = (mats[std::size_t(a.tgt - 1)] * m.arrow_maps[ai] ==
                  n.arrow_maps[ai] * mats[std::size_t(a.src - 1)]);
        }
        if (ok) ++good;
    }
    return good;
}

inline std::uint64_t pow_u64(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

// All representations of the quiver with total dimension <= cap (every
// dimension vector, every tuple of arrow matrices). GF(2)-sized batteries.
inline std::vector<Rep> all_reps_up_to_dim(const Quiver& q, std::uint32_t p, int cap) {
    std::vector<std::vector<int>> dim_vectors;
    std::vector<int> cur(std::size_t(q.n), 0);
    // enumerate dimension vectors with sum <= cap
    while (true) {
        int sum = 0;
        for (int d : cur) sum += d;
        if (sum <= cap) dim_vectors.push_back(cur);
        int i = 0;
        while (i < q.n && cur[std::size_t(i)] == cap) cur[std::size_t(i++)] = 0;
        if (i == q.n) break;
        ++cur[std::size_t(i)];
    }
    std::vector<Rep> out;
    for (const auto& dims : dim_vectors) {
        int nentries = 0;
        for (const auto& a : q.arrows) nentries += dims[std::size_t(a.tgt - 1)] * dims[std::size_t(a.src - 1)];
        std::uint64_t total = pow_u64(p, std::uint64_t(nentries));
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<Mat> maps;
            std::uint64_t rest = code;
            for (const auto& a : q.arrows) {
                Mat m(p, dims[std::size_t(a.tgt - 1)], dims[std::size_t(a.src - 1)]);
                for (auto& x : m.a) {
                    x = std::uint32_t(rest % p);
                    rest /= p;
                }
                maps.push_back(std::move(m));
            }
            out.emplace_back(q, p, dims, std::move(maps));
        }
    }
    return out;
}

} // namespace injspec::testing

#endif
