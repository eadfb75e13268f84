#ifndef INJSPEC_REP_HPP
#define INJSPEC_REP_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "injspec/common.hpp"
#include "injspec/mat.hpp"

namespace injspec {

// ---- Quivers ---------------------------------------------------------------

// Finite acyclic quiver with vertices 1..n. Paths are enumerated once at
// construction: trivial paths first (by vertex), then by length and
// lexicographically on arrow indices, so every basis derived from paths is
// deterministic.
struct Quiver {
    struct Arrow {
        std::string name;
        int src = 0, tgt = 0;
        bool operator==(const Arrow& o) const { return name == o.name && src == o.src && tgt == o.tgt; }
    };
    struct Path {
        int src = 0, tgt = 0;
        std::vector<int> arrows; // arrow indices; empty = trivial path at src==tgt
        bool trivial() const { return arrows.empty(); }
    };

    int n = 0;
    std::vector<Arrow> arrows;
    std::vector<Path> paths;

    Quiver() = default;
    Quiver(int n_, std::vector<Arrow> arrows_) : n(n_), arrows(std::move(arrows_)) {
        if (n < 0) throw invariant_violation("negative vertex count");
        for (const auto& a : arrows)
            if (a.src < 1 || a.src > n || a.tgt < 1 || a.tgt > n)
                throw invariant_violation("arrow endpoint out of range: " + a.name);
        check_acyclic();
        build_paths();
    }

    bool operator==(const Quiver& o) const { return n == o.n && arrows == o.arrows; }
    bool operator!=(const Quiver& o) const { return !(*this == o); }

    int arrow_index(const std::string& name) const {
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].name == name) return int(i);
        throw invariant_violation("unknown arrow: " + name);
    }

  private:
    void check_acyclic() {
        std::vector<int> indeg(std::size_t(n) + 1, 0);
        for (const auto& a : arrows) ++indeg[std::size_t(a.tgt)];
        std::vector<int> queue;
        for (int v = 1; v <= n; ++v)
            if (indeg[std::size_t(v)] == 0) queue.push_back(v);
        int seen = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++seen;
            for (const auto& a : arrows)
                if (a.src == v && --indeg[std::size_t(a.tgt)] == 0) queue.push_back(a.tgt);
        }
        if (seen != n) throw invariant_violation("quiver has an oriented cycle");
    }

    void build_paths() {
        for (int v = 1; v <= n; ++v) paths.push_back({v, v, {}});
        std::size_t lo = 0, hi = paths.size();
        while (lo < hi) {
            for (std::size_t i = lo; i < hi; ++i)
                for (int ai = 0; ai < int(arrows.size()); ++ai)
                    if (arrows[std::size_t(ai)].src == paths[i].tgt) {
                        Path ext = paths[i];
                        ext.arrows.push_back(ai);
                        ext.tgt = arrows[std::size_t(ai)].tgt;
                        paths.push_back(std::move(ext));
                    }
            lo = hi;
            hi = paths.size();
        }
    }
};

inline Quiver linear_quiver(int n) { // A_n: 1 -> 2 -> ... -> n
    std::vector<Quiver::Arrow> as;
    for (int v = 1; v < n; ++v) as.push_back({std::string(1, char('a' + v - 1)), v, v + 1});
    return Quiver(n, std::move(as));
}

// ---- Representations -------------------------------------------------------

// A finite-dimensional right kQ-module, stored as a covariant representation:
// the arrow a: s -> t acts by the matrix arrow_maps[a]: M_s -> M_t.
struct Rep {
    Quiver q;
    std::uint32_t p = 2;
    std::vector<int> dims;      // size n, vertex v has dims[v-1]
    std::vector<Mat> arrow_maps; // size #arrows

    Rep() = default;
    Rep(Quiver q_, std::uint32_t p_, std::vector<int> dims_, std::vector<Mat> maps)
        : q(std::move(q_)), p(p_), dims(std::move(dims_)), arrow_maps(std::move(maps)) {
        check_prime_field(p);
        if (int(dims.size()) != q.n) throw invariant_violation("dims size != vertex count");
        for (int d : dims)
            if (d < 0) throw invariant_violation("negative dimension");
        if (arrow_maps.size() != q.arrows.size()) throw invariant_violation("arrow map count mismatch");
        for (std::size_t i = 0; i < arrow_maps.size(); ++i) {
            const auto& a = q.arrows[i];
            const Mat& m = arrow_maps[i];
            if (m.p != p || m.rows != dim(a.tgt) || m.cols != dim(a.src))
                throw invariant_violation("arrow map shape mismatch at " + a.name);
        }
    }

    int dim(int v) const { return dims[std::size_t(v - 1)]; }
    int total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }
    bool is_zero() const { return total_dim() == 0; }

    // offset of vertex v's block in the concatenated coordinate space
    int offset(int v) const { return std::accumulate(dims.begin(), dims.begin() + (v - 1), 0); }

    bool operator==(const Rep& o) const {
        return q == o.q && p == o.p && dims == o.dims && arrow_maps == o.arrow_maps;
    }
};

inline Rep zero_rep(const Quiver& q, std::uint32_t p) {
    std::vector<Mat> maps(q.arrows.size(), Mat(p, 0, 0));
    return Rep(q, p, std::vector<int>(std::size_t(q.n), 0), std::move(maps));
}

inline void check_compatible(const Rep& m, const Rep& n) {
    if (m.q != n.q) throw invariant_violation("quiver mismatch");
    if (m.p != n.p) throw invariant_violation("field mismatch");
}

// Matrix of the action of a path: M_src -> M_tgt (identity for trivial paths).
inline Mat path_action(const Rep& m, const Quiver::Path& path) {
    Mat acc = Mat::identity(m.p, m.dim(path.src));
    for (int ai : path.arrows) acc = m.arrow_maps[std::size_t(ai)] * acc;
    return acc;
}

// ---- Morphisms -------------------------------------------------------------

// A homomorphism of representations: one matrix per vertex, f_v: M_v -> N_v.
// Commuting squares f_t * M_a = N_a * f_s are checked at construction.
struct RepMap {
    Rep src, dst;
    std::vector<Mat> v; // size n

    RepMap() = default;
    RepMap(Rep src_, Rep dst_, std::vector<Mat> mats)
        : src(std::move(src_)), dst(std::move(dst_)), v(std::move(mats)) {
        check_compatible(src, dst);
        if (int(v.size()) != src.q.n) throw invariant_violation("vertex map count mismatch");
        for (int w = 1; w <= src.q.n; ++w) {
            const Mat& f = at(w);
            if (f.p != src.p || f.rows != dst.dim(w) || f.cols != src.dim(w))
                throw invariant_violation("vertex map shape mismatch at vertex " + std::to_string(w));
        }
        for (std::size_t i = 0; i < src.q.arrows.size(); ++i) {
            const auto& a = src.q.arrows[i];
            if (at(a.tgt) * src.arrow_maps[i] != dst.arrow_maps[i] * at(a.src))
                throw invariant_violation("commuting square fails at arrow " + a.name);
        }
    }

    const Mat& at(int vertex) const { return v[std::size_t(vertex - 1)]; }
    Mat& at(int vertex) { return v[std::size_t(vertex - 1)]; }

    bool is_zero() const {
        return std::all_of(v.begin(), v.end(), [](const Mat& m) { return m.is_zero(); });
    }
    bool is_injective() const {
        return std::all_of(v.begin(), v.end(), [](const Mat& m) { return rank(m) == m.cols; });
    }
    bool is_surjective() const {
        return std::all_of(v.begin(), v.end(), [](const Mat& m) { return rank(m) == m.rows; });
    }
    bool is_iso() const {
        return std::all_of(v.begin(), v.end(), [](const Mat& m) { return is_invertible(m); });
    }
};

inline RepMap identity_map(const Rep& m) {
    std::vector<Mat> mats;
    for (int w = 1; w <= m.q.n; ++w) mats.push_back(Mat::identity(m.p, m.dim(w)));
    return RepMap(m, m, std::move(mats));
}

inline RepMap zero_map(const Rep& m, const Rep& n) {
    std::vector<Mat> mats;
    for (int w = 1; w <= m.q.n; ++w) mats.push_back(Mat(m.p, n.dim(w), m.dim(w)));
    return RepMap(m, n, std::move(mats));
}

inline RepMap compose(const RepMap& g, const RepMap& f) { // g after f
    if (!(f.dst == g.src)) throw invariant_violation("composition mismatch");
    std::vector<Mat> mats;
    for (int w = 1; w <= f.src.q.n; ++w) mats.push_back(g.at(w) * f.at(w));
    return RepMap(f.src, g.dst, std::move(mats));
}

inline RepMap map_add(const RepMap& f, const RepMap& g) {
    std::vector<Mat> mats;
    for (int w = 1; w <= f.src.q.n; ++w) mats.push_back(f.at(w) + g.at(w));
    return RepMap(f.src, f.dst, std::move(mats));
}

inline RepMap map_sub(const RepMap& f, const RepMap& g) {
    std::vector<Mat> mats;
    for (int w = 1; w <= f.src.q.n; ++w) mats.push_back(f.at(w) - g.at(w));
    return RepMap(f.src, f.dst, std::move(mats));
}

inline RepMap map_scale(const RepMap& f, std::uint32_t c) {
    std::vector<Mat> mats;
    for (int w = 1; w <= f.src.q.n; ++w) mats.push_back(scale(f.at(w), c));
    return RepMap(f.src, f.dst, std::move(mats));
}

inline RepMap map_inverse(const RepMap& f) {
    if (!f.is_iso()) throw invariant_violation("inverting a non-isomorphism");
    std::vector<Mat> mats;
    for (int w = 1; w <= f.src.q.n; ++w) mats.push_back(inverse(f.at(w)));
    return RepMap(f.dst, f.src, std::move(mats));
}

// ---- Subrepresentations ----------------------------------------------------

// A subrepresentation given by canonical per-vertex row-space bases.
// Arrow-closedness M_a(U_s) <= U_t is checked at construction.
struct Subrep {
    Rep ambient;
    std::vector<Mat> basis; // basis[v-1]: rows = basis vectors of U_v

    Subrep() = default;
    Subrep(Rep ambient_, std::vector<Mat> basis_, bool check = true)
        : ambient(std::move(ambient_)), basis(std::move(basis_)) {
        if (int(basis.size()) != ambient.q.n) throw invariant_violation("subrep basis count mismatch");
        for (int w = 1; w <= ambient.q.n; ++w) {
            basis[std::size_t(w - 1)] = row_space(basis[std::size_t(w - 1)]);
            if (basis[std::size_t(w - 1)].cols != ambient.dim(w))
                throw invariant_violation("subrep ambient dimension mismatch");
        }
        if (check) {
            for (std::size_t i = 0; i < ambient.q.arrows.size(); ++i) {
                const auto& a = ambient.q.arrows[i];
                const Mat& bs = at(a.src);
                for (int r = 0; r < bs.rows; ++r) {
                    Vec img = (ambient.arrow_maps[i]) * (bs.row(r));
                    if (!in_row_space(at(a.tgt), img))
                        throw invariant_violation("subspace not closed under arrow " + a.name);
                }
            }
        }
    }

    const Mat& at(int v) const { return basis[std::size_t(v - 1)]; }
    int dim(int v) const { return at(v).rows; }
    std::vector<int> dims() const {
        std::vector<int> d;
        for (const auto& b : basis) d.push_back(b.rows);
        return d;
    }
    int total_dim() const {
        int t = 0;
        for (const auto& b : basis) t += b.rows;
        return t;
    }
    bool is_zero() const { return total_dim() == 0; }
    bool is_all() const { return dims() == ambient.dims; }

    bool operator==(const Subrep& o) const { return ambient == o.ambient && basis == o.basis; }
    bool operator<(const Subrep& o) const { return basis < o.basis; }

    bool contains(const Subrep& o) const {
        for (int w = 1; w <= ambient.q.n; ++w)
            for (int r = 0; r < o.at(w).rows; ++r)
                if (!in_row_space(at(w), o.at(w).row(r))) return false;
        return true;
    }

    // The subrepresentation as a representation in its own basis, with the
    // inclusion into the ambient module.
    std::pair<Rep, RepMap> as_rep() const {
        std::vector<Mat> maps;
        for (std::size_t i = 0; i < ambient.q.arrows.size(); ++i) {
            const auto& a = ambient.q.arrows[i];
            Mat m(ambient.p, dim(a.tgt), dim(a.src));
            for (int r = 0; r < at(a.src).rows; ++r) {
                Vec img = (ambient.arrow_maps[i]) * (at(a.src).row(r));
                Vec coords = coords_in_row_space(at(a.tgt), img);
                for (int j = 0; j < m.rows; ++j) m.at(j, r) = coords[std::size_t(j)];
            }
            maps.push_back(std::move(m));
        }
        Rep sub(ambient.q, ambient.p, dims(), std::move(maps));
        std::vector<Mat> inc;
        for (int w = 1; w <= ambient.q.n; ++w) inc.push_back(transpose(at(w)));
        return {sub, RepMap(sub, ambient, std::move(inc))};
    }
};

inline Subrep zero_subrep(const Rep& m) {
    std::vector<Mat> basis;
    for (int w = 1; w <= m.q.n; ++w) basis.push_back(Mat(m.p, 0, m.dim(w)));
    return Subrep(m, std::move(basis), false);
}

inline Subrep full_subrep(const Rep& m) {
    std::vector<Mat> basis;
    for (int w = 1; w <= m.q.n; ++w) basis.push_back(Mat::identity(m.p, m.dim(w)));
    return Subrep(m, std::move(basis), false);
}

inline Subrep subrep_sum(const Subrep& x, const Subrep& y) {
    std::vector<Mat> basis;
    for (int w = 1; w <= x.ambient.q.n; ++w) basis.push_back(subspace_sum(x.at(w), y.at(w)));
    return Subrep(x.ambient, std::move(basis), false);
}

inline Subrep subrep_intersect(const Subrep& x, const Subrep& y) {
    std::vector<Mat> basis;
    for (int w = 1; w <= x.ambient.q.n; ++w) basis.push_back(subspace_intersect(x.at(w), y.at(w)));
    return Subrep(x.ambient, std::move(basis), false);
}

inline Subrep kernel_subrep(const RepMap& f) {
    std::vector<Mat> basis;
    for (int w = 1; w <= f.src.q.n; ++w)
        basis.push_back(row_space_from_vectors(f.src.p, kernel_basis(f.at(w)), f.src.dim(w)));
    return Subrep(f.src, std::move(basis), false);
}

inline Subrep image_subrep(const RepMap& f) {
    std::vector<Mat> basis;
    for (int w = 1; w <= f.src.q.n; ++w) basis.push_back(row_space(transpose(f.at(w))));
    return Subrep(f.dst, std::move(basis), false);
}

// ---- Hom spaces ------------------------------------------------------------

// Basis of Hom(M, N): the kernel of the commuting-square constraint system,
// with unknowns the stacked entries of all vertex matrices.
inline std::vector<RepMap> hom_basis(const Rep& m, const Rep& n) {
    check_compatible(m, n);
    const Quiver& q = m.q;
    std::vector<int> var_off(std::size_t(q.n) + 1, 0);
    for (int w = 1; w <= q.n; ++w)
        var_off[std::size_t(w)] = var_off[std::size_t(w - 1)] + n.dim(w) * m.dim(w);
    int nvars = var_off[std::size_t(q.n)];
    int nrows = 0;
    for (const auto& a : q.arrows) nrows += n.dim(a.tgt) * m.dim(a.src);

    Mat sys(m.p, nrows, nvars);
    int r0 = 0;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        const Mat& Ma = m.arrow_maps[ai];
        const Mat& Na = n.arrow_maps[ai];
        // (F_t * Ma - Na * F_s)[i][j] = 0  for i < n.dim(t), j < m.dim(s)
        for (int i = 0; i < n.dim(a.tgt); ++i)
            for (int j = 0; j < m.dim(a.src); ++j) {
                int row = r0 + i * m.dim(a.src) + j;
                for (int k = 0; k < m.dim(a.tgt); ++k) {
                    int var = var_off[std::size_t(a.tgt - 1)] + i * m.dim(a.tgt) + k;
                    sys.at(row, var) = fadd(sys.at(row, var), Ma.at(k, j), m.p);
                }
                for (int k = 0; k < n.dim(a.src); ++k) {
                    int var = var_off[std::size_t(a.src - 1)] + k * m.dim(a.src) + j;
                    sys.at(row, var) = fsub(sys.at(row, var), Na.at(i, k), m.p);
                }
            }
        r0 += n.dim(a.tgt) * m.dim(a.src);
    }

    std::vector<RepMap> out;
    for (const Vec& x : kernel_basis(sys)) {
        std::vector<Mat> mats;
        for (int w = 1; w <= q.n; ++w) {
            Mat f(m.p, n.dim(w), m.dim(w));
            for (int i = 0; i < f.rows; ++i)
                for (int j = 0; j < f.cols; ++j)
                    f.at(i, j) = x[std::size_t(var_off[std::size_t(w - 1)] + i * m.dim(w) + j)];
            mats.push_back(std::move(f));
        }
        out.emplace_back(m, n, std::move(mats));
    }
    return out;
}

inline int hom_dim(const Rep& m, const Rep& n) { return int(hom_basis(m, n).size()); }

inline Vec flatten_map(const RepMap& f) {
    Vec x;
    for (const Mat& m : f.v) x.insert(x.end(), m.a.begin(), m.a.end());
    return x;
}

// Coordinates of f in a hom basis (throws if f is outside the span).
inline Vec coords_in_hom_basis(const std::vector<RepMap>& basis, const RepMap& f) {
    Vec target = flatten_map(f);
    if (basis.empty()) {
        for (auto t : target)
            if (t) throw invariant_violation("map not in empty hom space");
        return {};
    }
    int n = int(target.size());
    Mat cols(f.src.p, n, int(basis.size()));
    for (std::size_t b = 0; b < basis.size(); ++b) {
        Vec fb = flatten_map(basis[b]);
        for (int i = 0; i < n; ++i) cols.at(i, int(b)) = fb[std::size_t(i)];
    }
    auto x = solve(cols, target);
    if (!x) throw invariant_violation("map not in hom-basis span");
    return *x;
}

inline RepMap combine_hom(const std::vector<RepMap>& basis, const Rep& m, const Rep& n, const Vec& coef) {
    RepMap acc = zero_map(m, n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coef[i]) acc = map_add(acc, map_scale(basis[i], coef[i]));
    return acc;
}

// ---- Direct sums -----------------------------------------------------------

struct DirectSum {
    Rep total;
    std::vector<RepMap> inject;  // summand -> total
    std::vector<RepMap> project; // total -> summand
};

inline DirectSum direct_sum(const std::vector<Rep>& parts) {
    if (parts.empty()) throw invariant_violation("empty direct sum needs an explicit quiver");
    const Quiver& q = parts[0].q;
    std::uint32_t p = parts[0].p;
    std::vector<int> dims(std::size_t(q.n), 0);
    for (const Rep& r : parts) {
        check_compatible(parts[0], r);
        for (int w = 1; w <= q.n; ++w) dims[std::size_t(w - 1)] += r.dim(w);
    }
    std::vector<Mat> maps;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        Mat m(p, 0, 0);
        for (const Rep& r : parts) m = diag_sum(m, r.arrow_maps[ai]);
        maps.push_back(std::move(m));
    }
    Rep total(q, p, dims, std::move(maps));

    DirectSum ds;
    ds.total = total;
    std::vector<int> off(std::size_t(q.n), 0);
    for (const Rep& r : parts) {
        std::vector<Mat> inj, prj;
        for (int w = 1; w <= q.n; ++w) {
            Mat in(p, total.dim(w), r.dim(w));
            Mat pr(p, r.dim(w), total.dim(w));
            for (int i = 0; i < r.dim(w); ++i) {
                in.at(off[std::size_t(w - 1)] + i, i) = 1 % p;
                pr.at(i, off[std::size_t(w - 1)] + i) = 1 % p;
            }
            inj.push_back(std::move(in));
            prj.push_back(std::move(pr));
        }
        ds.inject.emplace_back(r, total, std::move(inj));
        ds.project.emplace_back(total, r, std::move(prj));
        for (int w = 1; w <= q.n; ++w) off[std::size_t(w - 1)] += r.dim(w);
    }
    return ds;
}

// ---- Standard modules ------------------------------------------------------

inline Rep simple_rep(const Quiver& q, std::uint32_t p, int vertex) {
    if (vertex < 1 || vertex > q.n) throw invariant_violation("vertex out of range");
    std::vector<int> dims(std::size_t(q.n), 0);
    dims[std::size_t(vertex - 1)] = 1;
    std::vector<Mat> maps;
    for (const auto& a : q.arrows)
        maps.push_back(Mat(p, dims[std::size_t(a.tgt - 1)], dims[std::size_t(a.src - 1)]));
    return Rep(q, p, std::move(dims), std::move(maps));
}

namespace detail {
// Paths with the given endpoint predicate, grouped per vertex, quiver order.
inline std::vector<std::vector<Quiver::Path>> paths_by_vertex(const Quiver& q, bool group_by_tgt,
                                                              int fixed_endpoint, bool fix_src) {
    std::vector<std::vector<Quiver::Path>> by(std::size_t(q.n));
    for (const auto& path : q.paths) {
        if (fix_src && path.src != fixed_endpoint) continue;
        if (!fix_src && path.tgt != fixed_endpoint) continue;
        int slot = group_by_tgt ? path.tgt : path.src;
        by[std::size_t(slot - 1)].push_back(path);
    }
    return by;
}
} // namespace detail

// Projective P_i: basis at vertex w = paths i -> w; arrows append.
inline Rep projective_rep(const Quiver& q, std::uint32_t p, int vertex) {
    if (vertex < 1 || vertex > q.n) throw invariant_violation("vertex out of range");
    auto by = detail::paths_by_vertex(q, /*group_by_tgt=*/true, vertex, /*fix_src=*/true);
    std::vector<int> dims;
    for (const auto& v : by) dims.push_back(int(v.size()));
    auto find_path = [&](int w, const Quiver::Path& target) {
        const auto& list = by[std::size_t(w - 1)];
        for (std::size_t i = 0; i < list.size(); ++i)
            if (list[i].arrows == target.arrows) return int(i);
        throw invariant_violation("path bookkeeping error");
    };
    std::vector<Mat> maps;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        Mat m(p, dims[std::size_t(a.tgt - 1)], dims[std::size_t(a.src - 1)]);
        const auto& srcs = by[std::size_t(a.src - 1)];
        for (std::size_t j = 0; j < srcs.size(); ++j) {
            Quiver::Path ext = srcs[j];
            ext.arrows.push_back(int(ai));
            ext.tgt = a.tgt;
            m.at(find_path(a.tgt, ext), int(j)) = 1 % p;
        }
        maps.push_back(std::move(m));
    }
    return Rep(q, p, std::move(dims), std::move(maps));
}

// Injective E_i: basis at vertex w = paths w -> i; the arrow a: w -> u sends
// a basis path to its tail if it starts with a, else to zero.
inline Rep injective_rep(const Quiver& q, std::uint32_t p, int vertex) {
    if (vertex < 1 || vertex > q.n) throw invariant_violation("vertex out of range");
    auto by = detail::paths_by_vertex(q, /*group_by_tgt=*/false, vertex, /*fix_src=*/false);
    std::vector<int> dims;
    for (const auto& v : by) dims.push_back(int(v.size()));
    auto find_path = [&](int w, const std::vector<int>& arrows) {
        const auto& list = by[std::size_t(w - 1)];
        for (std::size_t i = 0; i < list.size(); ++i)
            if (list[i].arrows == arrows) return int(i);
        throw invariant_violation("path bookkeeping error");
    };
    std::vector<Mat> maps;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        Mat m(p, dims[std::size_t(a.tgt - 1)], dims[std::size_t(a.src - 1)]);
        const auto& srcs = by[std::size_t(a.src - 1)];
        for (std::size_t j = 0; j < srcs.size(); ++j) {
            const auto& path = srcs[j];
            if (!path.arrows.empty() && path.arrows.front() == int(ai)) {
                std::vector<int> tail(path.arrows.begin() + 1, path.arrows.end());
                m.at(find_path(a.tgt, tail), int(j)) = 1 % p;
            }
        }
        maps.push_back(std::move(m));
    }
    return Rep(q, p, std::move(dims), std::move(maps));
}

enum class StandardKind { Simple, Projective, Injective };

inline Rep standard_module(const Quiver& q, std::uint32_t p, StandardKind kind, int vertex) {
    switch (kind) {
        case StandardKind::Simple: return simple_rep(q, p, vertex);
        case StandardKind::Projective: return projective_rep(q, p, vertex);
        case StandardKind::Injective: return injective_rep(q, p, vertex);
    }
    throw std::logic_error("unreachable");
}

// ---- Socle and radical -----------------------------------------------------

// Largest subrepresentation with zero induced arrow maps: per vertex, the
// intersection of the kernels of all arrows leaving that vertex.
inline Subrep socle(const Rep& m) {
    std::vector<Mat> basis;
    for (int w = 1; w <= m.q.n; ++w) {
        Mat space = row_space(Mat::identity(m.p, m.dim(w)));
        for (std::size_t ai = 0; ai < m.q.arrows.size(); ++ai)
            if (m.q.arrows[ai].src == w) {
                Mat ker = row_space_from_vectors(m.p, kernel_basis(m.arrow_maps[ai]), m.dim(w));
                space = subspace_intersect(space, ker);
            }
        basis.push_back(std::move(space));
    }
    return Subrep(m, std::move(basis), false);
}

// Sum of the images of all arrow maps.
inline Subrep radical(const Rep& m) {
    std::vector<Mat> basis;
    for (int w = 1; w <= m.q.n; ++w) {
        Mat space(m.p, 0, m.dim(w));
        for (std::size_t ai = 0; ai < m.q.arrows.size(); ++ai)
            if (m.q.arrows[ai].tgt == w)
                space = subspace_sum(space, row_space(transpose(m.arrow_maps[ai])));
        basis.push_back(std::move(space));
    }
    return Subrep(m, std::move(basis), false);
}

// Socle multiplicities: soc(M) = ⊕ S_v^{mult[v-1]}.
inline std::vector<int> socle_multiplicities(const Rep& m) { return socle(m).dims(); }

// ---- Sub/quotient ----------------------------------------------------------

// Elements of a representation are concatenated coordinate vectors
// (vertex blocks in order), length total_dim().
inline Vec vertex_component(const Rep& m, const Vec& x, int v) {
    return Vec(x.begin() + m.offset(v), x.begin() + m.offset(v) + m.dim(v));
}

inline Vec embed_component(const Rep& m, const Vec& comp, int v) {
    Vec x(std::size_t(m.total_dim()), 0);
    std::copy(comp.begin(), comp.end(), x.begin() + m.offset(v));
    return x;
}

// Arrow-closure of a set of elements: the smallest subrepresentation
// containing them (the span of all path translates).
inline Subrep generated_subrep(const Rep& m, const std::vector<Vec>& generators) {
    std::vector<std::vector<Vec>> spans(std::size_t(m.q.n));
    for (const Vec& g : generators) {
        if (int(g.size()) != m.total_dim()) throw invariant_violation("generator length mismatch");
        for (const auto& path : m.q.paths) {
            Vec img = path_action(m, path) * vertex_component(m, g, path.src);
            spans[std::size_t(path.tgt - 1)].push_back(std::move(img));
        }
    }
    std::vector<Mat> basis;
    for (int w = 1; w <= m.q.n; ++w)
        basis.push_back(row_space_from_vectors(m.p, spans[std::size_t(w - 1)], m.dim(w)));
    return Subrep(m, std::move(basis), false);
}

struct SubQuotient {
    Subrep sub;
    Rep quotient;
    RepMap projection; // ambient -> quotient, kernel = sub
};

inline SubQuotient quotient_by(const Rep& m, const Subrep& sub) {
    std::vector<Mat> qmaps, sections;
    for (int w = 1; w <= m.q.n; ++w) {
        qmaps.push_back(quotient_map(sub.at(w), m.dim(w)));
        sections.push_back(quotient_section(sub.at(w), m.dim(w)));
    }
    std::vector<int> qdims;
    for (const auto& qm : qmaps) qdims.push_back(qm.rows);
    std::vector<Mat> arrows;
    for (std::size_t ai = 0; ai < m.q.arrows.size(); ++ai) {
        const auto& a = m.q.arrows[ai];
        arrows.push_back(qmaps[std::size_t(a.tgt - 1)] * m.arrow_maps[ai] * sections[std::size_t(a.src - 1)]);
    }
    Rep quot(m.q, m.p, std::move(qdims), std::move(arrows));
    RepMap proj(m, quot, std::move(qmaps));
    return {sub, std::move(quot), std::move(proj)};
}

inline SubQuotient sub_quotient(const Rep& m, const std::vector<Vec>& generators) {
    return quotient_by(m, generated_subrep(m, generators));
}

// ---- Injective hulls -------------------------------------------------------

// E(M) = ⊕ E_v^{m_v} over the socle decomposition, with an embedding obtained
// by extending the socle matching along the commuting-square system. The
// extension is the first solution in canonical order; its kernel is checked
// to be zero.
struct Hull {
    Rep hull;
    RepMap embedding;
};

inline Hull injective_hull(const Rep& m) {
    const Quiver& q = m.q;
    Subrep soc = socle(m);
    std::vector<Rep> parts;
    std::vector<std::pair<int, int>> copy_of; // (vertex, index within vertex) per part
    for (int v = 1; v <= q.n; ++v)
        for (int c = 0; c < soc.dim(v); ++c) {
            parts.push_back(injective_rep(q, m.p, v));
            copy_of.push_back({v, c});
        }
    if (parts.empty()) {
        Rep z = zero_rep(q, m.p);
        return {z, zero_map(m, z)};
    }
    DirectSum ds = direct_sum(parts);
    const Rep& e = ds.total;

    // socle coordinate of E_v inside the big sum, for each part
    auto socle_position = [&](std::size_t part) {
        int v = copy_of[part].first;
        // within E_v, the trivial path at v is the unique basis vector at vertex v
        Vec unit(std::size_t(parts[part].dim(v)), 0);
        unit[0] = 1 % m.p;
        return (ds.inject[part].at(v)) * (unit);
    };

    // unknowns: entries of F_w (e.dim(w) x m.dim(w)); constraints: commuting
    // squares plus F(socle basis vector) = matching socle coordinate in E.
    std::vector<int> var_off(std::size_t(q.n) + 1, 0);
    for (int w = 1; w <= q.n; ++w)
        var_off[std::size_t(w)] = var_off[std::size_t(w - 1)] + e.dim(w) * m.dim(w);
    int nvars = var_off[std::size_t(q.n)];

    std::vector<Vec> rows;
    Vec rhs;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        const Mat& Ma = m.arrow_maps[ai];
        const Mat& Ea = e.arrow_maps[ai];
        for (int i = 0; i < e.dim(a.tgt); ++i)
            for (int j = 0; j < m.dim(a.src); ++j) {
                Vec row(std::size_t(nvars), 0);
                for (int k = 0; k < m.dim(a.tgt); ++k)
                    row[std::size_t(var_off[std::size_t(a.tgt - 1)] + i * m.dim(a.tgt) + k)] = Ma.at(k, j);
                for (int k = 0; k < e.dim(a.src); ++k) {
                    auto& cell = row[std::size_t(var_off[std::size_t(a.src - 1)] + k * m.dim(a.src) + j)];
                    cell = fsub(cell, Ea.at(i, k), m.p);
                }
                rows.push_back(std::move(row));
                rhs.push_back(0);
            }
    }
    std::size_t part = 0;
    for (int v = 1; v <= q.n; ++v)
        for (int c = 0; c < soc.dim(v); ++c, ++part) {
            Vec svec = soc.at(v).row(c);
            Vec target = socle_position(part);
            for (int i = 0; i < e.dim(v); ++i) {
                Vec row(std::size_t(nvars), 0);
                for (int j = 0; j < m.dim(v); ++j)
                    row[std::size_t(var_off[std::size_t(v - 1)] + i * m.dim(v) + j)] = svec[std::size_t(j)];
                rows.push_back(std::move(row));
                rhs.push_back(target[std::size_t(i)]);
            }
        }

    Mat sys = Mat::from_rows(m.p, rows, nvars);
    auto sol = solve(sys, rhs);
    if (!sol)
        throw invariant_violation("injective hull extension system inconsistent (internal bug)");
    std::vector<Mat> mats;
    for (int w = 1; w <= q.n; ++w) {
        Mat f(m.p, e.dim(w), m.dim(w));
        for (int i = 0; i < f.rows; ++i)
            for (int j = 0; j < f.cols; ++j)
                f.at(i, j) = (*sol)[std::size_t(var_off[std::size_t(w - 1)] + i * m.dim(w) + j)];
        mats.push_back(std::move(f));
    }
    RepMap emb(m, e, std::move(mats));
    if (!emb.is_injective())
        throw invariant_violation("injective hull embedding has a kernel (internal bug)");
    return {e, std::move(emb)};
}

// ---- Submodule enumeration -------------------------------------------------

// All subrepresentations, as canonical Subreps including 0 and M. Exhaustive:
// cyclic closures of all p^dim elements, then closure under pairwise sums.
// Refuses loudly when p^dim exceeds the budget.
inline std::vector<Subrep> all_submodules(const Rep& m, std::uint64_t budget = kDefaultBudget) {
    int d = m.total_dim();
    double count = 1;
    for (int i = 0; i < d; ++i) {
        count *= m.p;
        if (count > double(budget))
            throw budget_exceeded("submodule enumeration needs " + std::to_string(m.p) + "^" +
                                  std::to_string(d) + " vectors, budget " + std::to_string(budget));
    }
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= m.p;

    std::set<Subrep> seen;
    seen.insert(zero_subrep(m));
    for (std::uint64_t code = 1; code < total; ++code) {
        Vec x(std::size_t(d), 0);
        std::uint64_t rest = code;
        for (int i = 0; i < d; ++i) {
            x[std::size_t(i)] = std::uint32_t(rest % m.p);
            rest /= m.p;
        }
        seen.insert(generated_subrep(m, {x}));
    }
    // close under sums
    std::vector<Subrep> work(seen.begin(), seen.end());
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Subrep s = subrep_sum(work[i], work[j]);
            if (seen.insert(s).second) work.push_back(std::move(s));
        }
    std::sort(work.begin(), work.end(), [](const Subrep& a, const Subrep& b) {
        if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
        return a < b;
    });
    return work;
}

// ---- Isomorphism testing ---------------------------------------------------

// Search the hom space for an invertible element; exhaustive over all
// coefficient combinations, budget-capped.
inline bool is_isomorphic(const Rep& m, const Rep& n, std::uint64_t budget = kDefaultBudget) {
    if (m.dims != n.dims) return false;
    if (m.total_dim() == 0) return true;
    auto basis = hom_basis(m, n);
    if (basis.empty()) return false;
    double combos = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        combos *= m.p;
        if (combos > double(budget))
            throw budget_exceeded("isomorphism search space exceeds budget");
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) total *= m.p;
    for (std::uint64_t code = 1; code < total; ++code) {
        Vec coef(basis.size());
        std::uint64_t rest = code;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            coef[i] = std::uint32_t(rest % m.p);
            rest /= m.p;
        }
        if (combine_hom(basis, m, n, coef).is_iso()) return true;
    }
    return false;
}

// ---- Module-to-representation conversion -----------------------------------

// Rebuild a representation from a right action of the path algebra given by
// one operator per path (in quiver path order) on an abstract coordinate
// space. Returns the representation together with the change of coordinates
// (rows of `coords` express the rep basis in the abstract space).
struct ModuleAsRep {
    Rep rep;
    Mat coords; // total_dim x ambient_dim; row r = ambient coordinates of rep basis vector r
};

inline ModuleAsRep module_to_rep(const Quiver& q, std::uint32_t p,
                                 const std::vector<Mat>& path_ops, int ambient_dim) {
    if (path_ops.size() != q.paths.size()) throw invariant_violation("path operator count mismatch");
    // idempotent action of each trivial path carves out the vertex components
    std::vector<Mat> vertex_basis;
    for (int v = 1; v <= q.n; ++v) {
        // trivial path at v is path index v-1 by construction
        vertex_basis.push_back(row_space(transpose(path_ops[std::size_t(v - 1)])));
    }
    std::vector<int> dims;
    for (const auto& b : vertex_basis) dims.push_back(b.rows);
    std::vector<Mat> arrows;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        // operator of the length-1 path [ai]
        int path_idx = -1;
        for (std::size_t pi = 0; pi < q.paths.size(); ++pi)
            if (q.paths[pi].arrows.size() == 1 && q.paths[pi].arrows[0] == int(ai)) {
                path_idx = int(pi);
                break;
            }
        Mat m(p, dims[std::size_t(a.tgt - 1)], dims[std::size_t(a.src - 1)]);
        for (int j = 0; j < dims[std::size_t(a.src - 1)]; ++j) {
            Vec img = (path_ops[std::size_t(path_idx)]) * (vertex_basis[std::size_t(a.src - 1)].row(j));
            Vec coords = coords_in_row_space(vertex_basis[std::size_t(a.tgt - 1)], img);
            for (int i = 0; i < m.rows; ++i) m.at(i, j) = coords[std::size_t(i)];
        }
        arrows.push_back(std::move(m));
    }
    Rep rep(q, p, dims, std::move(arrows));
    Mat coords(p, rep.total_dim(), ambient_dim);
    int r = 0;
    for (int v = 1; v <= q.n; ++v)
        for (int i = 0; i < rep.dim(v); ++i, ++r)
            for (int j = 0; j < ambient_dim; ++j) coords.at(r, j) = vertex_basis[std::size_t(v - 1)].at(i, j);
    return {std::move(rep), std::move(coords)};
}

} // namespace injspec

#endif
