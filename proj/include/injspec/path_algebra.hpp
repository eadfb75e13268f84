#ifndef INJSPEC_PATH_ALGEBRA_HPP
#define INJSPEC_PATH_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "injspec/rep.hpp"

namespace injspec {

// The path algebra R = kQ with its regular right module R_R = P_1 + ... + P_n
// and the coordinate bookkeeping between ring elements (vectors over the path
// basis, in quiver path order) and elements of the regular representation.
struct PathAlgebra {
    Quiver q;
    std::uint32_t p = 2;
    std::vector<Rep> simples, projectives, injectives; // indexed by vertex-1
    Rep regular;                                       // P_1 + ... + P_n
    DirectSum reg_sum;

    // regular-rep basis at vertex w: pairs (start vertex j, path j -> w),
    // in direct-sum order (all of P_1's paths, then P_2's, ...)
    std::vector<std::vector<Quiver::Path>> reg_basis;

    explicit PathAlgebra(Quiver q_, std::uint32_t p_) : q(std::move(q_)), p(p_) {
        check_prime_field(p);
        for (int v = 1; v <= q.n; ++v) {
            simples.push_back(simple_rep(q, p, v));
            projectives.push_back(projective_rep(q, p, v));
            injectives.push_back(injective_rep(q, p, v));
        }
        if (q.n == 0) {
            regular = zero_rep(q, p);
        } else {
            reg_sum = direct_sum(projectives);
            regular = reg_sum.total;
        }
        reg_basis.resize(std::size_t(q.n));
        for (int w = 1; w <= q.n; ++w)
            for (int j = 1; j <= q.n; ++j)
                for (const auto& path : q.paths)
                    if (path.src == j && path.tgt == w) reg_basis[std::size_t(w - 1)].push_back(path);
    }

    int dim_ring() const { return int(q.paths.size()); }

    // position of a path inside the regular rep's vertex block
    int reg_index(const Quiver::Path& path) const {
        const auto& list = reg_basis[std::size_t(path.tgt - 1)];
        for (std::size_t i = 0; i < list.size(); ++i)
            if (list[i].src == path.src && list[i].arrows == path.arrows) return int(i);
        throw invariant_violation("path not found in regular basis");
    }

    int path_index(const Quiver::Path& path) const {
        for (std::size_t i = 0; i < q.paths.size(); ++i)
            if (q.paths[i].src == path.src && q.paths[i].arrows == path.arrows) return int(i);
        throw invariant_violation("unknown path");
    }

    // ring coordinates (over q.paths) -> element of the regular rep
    // (concatenated vertex coordinates)
    Vec ring_to_element(const Vec& ring) const {
        Vec x(std::size_t(regular.total_dim()), 0);
        for (std::size_t i = 0; i < q.paths.size(); ++i) {
            if (!ring[i]) continue;
            const auto& path = q.paths[i];
            x[std::size_t(regular.offset(path.tgt) + reg_index(path))] = ring[i];
        }
        return x;
    }

    Vec element_to_ring(const Vec& elem) const {
        Vec ring(q.paths.size(), 0);
        for (std::size_t i = 0; i < q.paths.size(); ++i) {
            const auto& path = q.paths[i];
            ring[i] = elem[std::size_t(regular.offset(path.tgt) + reg_index(path))];
        }
        return ring;
    }

    Vec ring_one() const {
        Vec one(q.paths.size(), 0);
        for (int v = 1; v <= q.n; ++v) one[std::size_t(v - 1)] = 1 % p; // trivial paths come first
        return one;
    }

    Vec ring_path(const Quiver::Path& path) const {
        Vec x(q.paths.size(), 0);
        x[std::size_t(path_index(path))] = 1 % p;
        return x;
    }

    // concatenation gamma . delta (gamma then delta), zero unless composable
    std::optional<Quiver::Path> compose_paths(const Quiver::Path& gamma, const Quiver::Path& delta) const {
        if (gamma.tgt != delta.src) return std::nullopt;
        Quiver::Path r = gamma;
        r.arrows.insert(r.arrows.end(), delta.arrows.begin(), delta.arrows.end());
        r.tgt = delta.tgt;
        return r;
    }

    Vec ring_mul(const Vec& x, const Vec& y) const {
        Vec r(q.paths.size(), 0);
        for (std::size_t i = 0; i < q.paths.size(); ++i) {
            if (!x[i]) continue;
            for (std::size_t j = 0; j < q.paths.size(); ++j) {
                if (!y[j]) continue;
                auto prod = compose_paths(q.paths[i], q.paths[j]);
                if (!prod) continue;
                std::size_t k = std::size_t(path_index(*prod));
                r[k] = fadd(r[k], fmul(x[i], y[j], p), p);
            }
        }
        return r;
    }

    // left multiplication by a ring element, as an endomorphism of R_R
    RepMap left_mult(const Vec& ring) const {
        std::vector<Mat> mats;
        for (int w = 1; w <= q.n; ++w) {
            const auto& basis = reg_basis[std::size_t(w - 1)];
            Mat m(p, int(basis.size()), int(basis.size()));
            for (std::size_t col = 0; col < basis.size(); ++col) {
                // image of basis path x under r -> elem * x
                for (std::size_t i = 0; i < q.paths.size(); ++i) {
                    if (!ring[i]) continue;
                    auto prod = compose_paths(q.paths[i], basis[col]);
                    if (!prod) continue;
                    m.at(reg_index(*prod), int(col)) = fadd(m.at(reg_index(*prod), int(col)), ring[i], p);
                }
            }
            mats.push_back(std::move(m));
        }
        return RepMap(regular, regular, std::move(mats));
    }

    // the map R -> M of right modules sending 1 to the element m of M
    // (m given in concatenated coordinates)
    RepMap element_map(const Rep& module, const Vec& m) const {
        std::vector<Mat> mats;
        for (int w = 1; w <= q.n; ++w) {
            const auto& basis = reg_basis[std::size_t(w - 1)];
            Mat f(p, module.dim(w), int(basis.size()));
            for (std::size_t col = 0; col < basis.size(); ++col) {
                const auto& path = basis[col];
                Vec comp = vertex_component(module, m, path.src);
                Vec img = path_action(module, path) * comp;
                for (int i = 0; i < f.rows; ++i) f.at(i, int(col)) = img[std::size_t(i)];
            }
            mats.push_back(std::move(f));
        }
        return RepMap(regular, module, std::move(mats));
    }
};

} // namespace injspec

#endif
