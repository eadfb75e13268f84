#ifndef INJSPEC_TORSION_HPP
#define INJSPEC_TORSION_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "injspec/algebra.hpp"
#include "injspec/path_algebra.hpp"
#include "injspec/rep.hpp"

namespace injspec {

// ---- Torsion classes -------------------------------------------------------

// A hereditary torsion class on mod-kQ, encoded by its cogenerating set of
// spectrum points: T_U = { M : (M, E_i) = 0 for all i in U }. The torsionfree
// class is cogenerated by { E_i : i in U }.
struct TorsionClass {
    std::vector<int> cogen; // sorted, unique, subset of {1..n}

    TorsionClass() = default;
    explicit TorsionClass(std::vector<int> points) : cogen(std::move(points)) {
        std::sort(cogen.begin(), cogen.end());
        cogen.erase(std::unique(cogen.begin(), cogen.end()), cogen.end());
    }

    bool has(int i) const { return std::binary_search(cogen.begin(), cogen.end(), i); }
    bool operator==(const TorsionClass& o) const { return cogen == o.cogen; }
    bool operator<(const TorsionClass& o) const { return cogen < o.cogen; }

    // T_U <= T_V as torsion classes iff U >= V as point sets
    bool contained_in(const TorsionClass& o) const {
        return std::includes(cogen.begin(), cogen.end(), o.cogen.begin(), o.cogen.end());
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < cogen.size(); ++i)
            s += (i ? "," : "") + std::to_string(cogen[i]);
        return s + "}";
    }
};

inline TorsionClass trivial_torsion_class(int n) { // tau = 0: cogenerated by everything
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    return TorsionClass(std::move(all));
}

inline TorsionClass improper_torsion_class() { return TorsionClass({}); } // everything torsion

// meet of torsion classes = T_{U union V}; join = T_{U intersect V}
inline TorsionClass torsion_meet(const TorsionClass& a, const TorsionClass& b) {
    std::vector<int> u = a.cogen;
    u.insert(u.end(), b.cogen.begin(), b.cogen.end());
    return TorsionClass(std::move(u));
}

inline TorsionClass torsion_join(const TorsionClass& a, const TorsionClass& b) {
    std::vector<int> u;
    std::set_intersection(a.cogen.begin(), a.cogen.end(), b.cogen.begin(), b.cogen.end(),
                          std::back_inserter(u));
    return TorsionClass(std::move(u));
}

// ---- Torsion radical -------------------------------------------------------

// tau(M): the joint kernel of all maps M -> E_i over i in the cogenerating
// set. M/tau(M) then embeds into a product of copies of the E_i, and any map
// from the joint kernel to an E_i would extend to M by injectivity, so the
// kernel is exactly the largest torsion submodule.
inline Subrep torsion_submodule(const Rep& m, const TorsionClass& t, const PathAlgebra& alg) {
    Subrep tau = full_subrep(m);
    for (int i : t.cogen)
        for (const RepMap& f : hom_basis(m, alg.injectives[std::size_t(i - 1)]))
            tau = subrep_intersect(tau, kernel_subrep(f));
    return tau;
}

inline bool is_torsion(const Rep& m, const TorsionClass& t, const PathAlgebra& alg) {
    return torsion_submodule(m, t, alg).is_all();
}

inline bool is_torsionfree(const Rep& m, const TorsionClass& t, const PathAlgebra& alg) {
    return torsion_submodule(m, t, alg).is_zero();
}

// ---- Map utilities ---------------------------------------------------------

inline Vec apply_elem(const RepMap& f, const Vec& x) {
    Vec y(std::size_t(f.dst.total_dim()), 0);
    for (int v = 1; v <= f.src.q.n; ++v) {
        Vec comp = f.at(v) * vertex_component(f.src, x, v);
        std::copy(comp.begin(), comp.end(), y.begin() + f.dst.offset(v));
    }
    return y;
}

// concatenated-coordinate row basis of a subrep inside its ambient module
inline Mat subrep_concat_basis(const Subrep& s) {
    const Rep& m = s.ambient;
    std::vector<Vec> rows;
    for (int v = 1; v <= m.q.n; ++v)
        for (int r = 0; r < s.at(v).rows; ++r) rows.push_back(embed_component(m, s.at(v).row(r), v));
    return row_space_from_vectors(m.p, rows, m.total_dim());
}

// per-vertex preimage f^{-1}(target): kernel of (quotient by target) . f
inline Subrep preimage_subrep(const RepMap& f, const Subrep& target) {
    std::vector<Mat> basis;
    for (int v = 1; v <= f.src.q.n; ++v) {
        Mat q = quotient_map(target.at(v), f.dst.dim(v));
        basis.push_back(row_space_from_vectors(f.src.p, kernel_basis(q * f.at(v)), f.src.dim(v)));
    }
    return Subrep(f.src, std::move(basis)); // checked: must be arrow-closed
}

// view f: X -> ambient with image inside `sub` as a map X -> sub_rep
inline RepMap corestrict(const RepMap& f, const Subrep& sub, const Rep& sub_rep) {
    std::vector<Mat> mats;
    for (int v = 1; v <= f.src.q.n; ++v) {
        Mat m(f.src.p, sub.dim(v), f.src.dim(v));
        for (int j = 0; j < f.src.dim(v); ++j) {
            Vec coords = coords_in_row_space(sub.at(v), f.at(v).col(j));
            for (int i = 0; i < m.rows; ++i) m.at(i, j) = coords[std::size_t(i)];
        }
        mats.push_back(std::move(m));
    }
    return RepMap(f.src, sub_rep, std::move(mats));
}

// Solutions of g . along = target with g: X -> Y a module map.
struct Extension {
    std::optional<RepMap> particular;
    std::vector<RepMap> homogeneous; // basis of { h : X -> Y, h . along = 0 }
};

inline Extension extend_hom(const RepMap& along /* U -> X */, const RepMap& target /* U -> Y */) {
    const Rep& x = along.dst;
    const Rep& y = target.dst;
    const Quiver& q = x.q;
    std::vector<int> var_off(std::size_t(q.n) + 1, 0);
    for (int w = 1; w <= q.n; ++w)
        var_off[std::size_t(w)] = var_off[std::size_t(w - 1)] + y.dim(w) * x.dim(w);
    int nvars = var_off[std::size_t(q.n)];

    std::vector<Vec> rows;
    Vec rhs;
    // commuting squares for g
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        const Mat& Xa = x.arrow_maps[ai];
        const Mat& Ya = y.arrow_maps[ai];
        for (int i = 0; i < y.dim(a.tgt); ++i)
            for (int j = 0; j < x.dim(a.src); ++j) {
                Vec row(std::size_t(nvars), 0);
                for (int k = 0; k < x.dim(a.tgt); ++k)
                    row[std::size_t(var_off[std::size_t(a.tgt - 1)] + i * x.dim(a.tgt) + k)] = Xa.at(k, j);
                for (int k = 0; k < y.dim(a.src); ++k) {
                    auto& cell = row[std::size_t(var_off[std::size_t(a.src - 1)] + k * x.dim(a.src) + j)];
                    cell = fsub(cell, Ya.at(i, k), x.p);
                }
                rows.push_back(std::move(row));
                rhs.push_back(0);
            }
    }
    // restriction equations g . along = target
    for (int w = 1; w <= q.n; ++w)
        for (int i = 0; i < y.dim(w); ++i)
            for (int j = 0; j < along.src.dim(w); ++j) {
                Vec row(std::size_t(nvars), 0);
                for (int k = 0; k < x.dim(w); ++k)
                    row[std::size_t(var_off[std::size_t(w - 1)] + i * x.dim(w) + k)] = along.at(w).at(k, j);
                rows.push_back(std::move(row));
                rhs.push_back(target.at(w).at(i, j));
            }

    Mat sys = Mat::from_rows(x.p, rows, nvars);
    auto unpack = [&](const Vec& sol) {
        std::vector<Mat> mats;
        for (int w = 1; w <= q.n; ++w) {
            Mat f(x.p, y.dim(w), x.dim(w));
            for (int i = 0; i < f.rows; ++i)
                for (int j = 0; j < f.cols; ++j)
                    f.at(i, j) = sol[std::size_t(var_off[std::size_t(w - 1)] + i * x.dim(w) + j)];
            mats.push_back(std::move(f));
        }
        return RepMap(x, y, std::move(mats));
    };

    Extension ext;
    if (auto sol = solve(sys, rhs)) ext.particular = unpack(*sol);
    // homogeneous part: squares + vanishing on the image of `along`
    Mat hsys = sys;
    for (const Vec& k : kernel_basis(hsys)) ext.homogeneous.push_back(unpack(k));
    return ext;
}

// ---- Localization at a torsion class ---------------------------------------

// i_T Q_T(A), computed literally from the quotient-category formula:
// pass to A' = A/tau(A), take the injective hull E of A', and pull back the
// torsion part of E/A' along the quotient map. Structural facts (kernel of
// the unit, torsion quotient, torsionfree complement) are asserted after the
// computation.
struct Localization {
    Rep source;
    TorsionClass tclass;
    Subrep torsion_part;  // tau(A)
    SubQuotient tf;       // A -> A' = A/tau(A)
    Hull hull;            // E(A'), with embedding A' -> E
    Subrep localized_sub; // the localization as a submodule of E
    Rep localized;        // the localization in its own basis
    RepMap incl;          // localized -> E
    RepMap unit;          // A -> localized
};

inline Localization localize_module(const Rep& a, const TorsionClass& t, const PathAlgebra& alg) {
    Localization L;
    L.source = a;
    L.tclass = t;
    L.torsion_part = torsion_submodule(a, t, alg);
    L.tf = quotient_by(a, L.torsion_part);
    L.hull = injective_hull(L.tf.quotient);
    const Rep& e = L.hull.hull;

    Subrep af_image = image_subrep(L.hull.embedding); // A' inside E
    SubQuotient mod_af = quotient_by(e, af_image);
    Subrep x = torsion_submodule(mod_af.quotient, t, alg);
    L.localized_sub = preimage_subrep(mod_af.projection, x);
    auto [lrep, lincl] = L.localized_sub.as_rep();
    L.localized = std::move(lrep);
    L.incl = std::move(lincl);
    L.unit = corestrict(compose(L.hull.embedding, L.tf.projection), L.localized_sub, L.localized);

    // kernel of the unit is exactly tau(A)
    if (!(kernel_subrep(L.unit) == L.torsion_part))
        throw invariant_violation("localization: unit kernel differs from the torsion part");
    // A-hat / A' is torsion
    Subrep af_in_l = image_subrep(L.unit);
    SubQuotient top = quotient_by(L.localized, af_in_l);
    if (!is_torsion(top.quotient, t, alg))
        throw invariant_violation("localization: A-hat / A' is not torsion");
    // E / A-hat is torsionfree
    SubQuotient rest = quotient_by(e, L.localized_sub);
    if (!is_torsionfree(rest.quotient, t, alg))
        throw invariant_violation("localization: E / A-hat is not torsionfree");
    return L;
}

// Localize a map f: A -> B: induce A' -> B', extend over the injective hulls,
// restrict to the localizations. The result does not depend on the chosen
// extension; this is checked against every extension of the trivial map.
inline RepMap localize_map(const RepMap& f, const Localization& la, const Localization& lb,
                           bool check_choice_independence = false) {
    // induced map on torsionfree quotients (f maps tau(A) into tau(B))
    std::vector<Mat> fmats;
    for (int v = 1; v <= f.src.q.n; ++v) {
        Mat sec = quotient_section(la.torsion_part.at(v), f.src.dim(v));
        fmats.push_back(lb.tf.projection.at(v) * f.at(v) * sec);
    }
    RepMap f_tf(la.tf.quotient, lb.tf.quotient, std::move(fmats));

    RepMap target = compose(lb.hull.embedding, f_tf); // A' -> E_B
    Extension ext = extend_hom(la.hull.embedding, target);
    if (!ext.particular)
        throw invariant_violation("localize_map: no extension over the hull (internal bug)");

    RepMap g_on_loc = compose(*ext.particular, la.incl); // localized(A) -> E_B
    if (check_choice_independence) {
        for (const RepMap& h : ext.homogeneous)
            if (!compose(h, la.incl).is_zero())
                throw invariant_violation("localize_map: extension choice leaks into the localization");
    }
    Subrep img = image_subrep(g_on_loc);
    if (!lb.localized_sub.contains(img))
        throw invariant_violation("localize_map: image escapes the localization (internal bug)");
    return corestrict(g_on_loc, lb.localized_sub, lb.localized);
}

// ---- The localized ring R_T and localized module groups M_T ----------------

// R_T = End(R-hat) with composition as multiplication; the canonical ring map
// R -> R_T sends a path to the localization of left multiplication by it.
struct LocalizedRing {
    TorsionClass tclass;
    Localization loc;          // localization of R_R
    std::vector<RepMap> basis; // hom basis of End(R-hat)
    Algebra ring;              // structure constants: product = composition
    Mat ring_map;              // (dim R_T) x (dim R): path coordinates -> R_T coordinates
};

inline LocalizedRing localized_ring(const TorsionClass& t, const PathAlgebra& alg) {
    LocalizedRing R;
    R.tclass = t;
    R.loc = localize_module(alg.regular, t, alg);
    R.basis = hom_basis(R.loc.localized, R.loc.localized);
    int d = int(R.basis.size());
    Vec unit = coords_in_hom_basis(R.basis, identity_map(R.loc.localized));
    R.ring = algebra_from_mult(
        alg.p, d,
        [&](int i, int j) {
            return coords_in_hom_basis(R.basis, compose(R.basis[std::size_t(i)], R.basis[std::size_t(j)]));
        },
        unit);

    R.ring_map = Mat(alg.p, d, alg.dim_ring());
    for (int pi = 0; pi < alg.dim_ring(); ++pi) {
        RepMap lam = alg.left_mult(alg.ring_path(alg.q.paths[std::size_t(pi)]));
        Vec col = coords_in_hom_basis(R.basis, localize_map(lam, R.loc, R.loc));
        for (int i = 0; i < d; ++i) R.ring_map.at(i, pi) = col[std::size_t(i)];
    }

    // the map is a unital ring homomorphism: checked on the path generating set
    if (d > 0 && !(R.ring_map * alg.ring_one() == R.ring.unit))
        throw invariant_violation("R -> R_T does not preserve the unit");
    for (std::size_t i = 0; i < alg.q.paths.size(); ++i)
        for (std::size_t j = 0; j < alg.q.paths.size(); ++j) {
            Vec prod = alg.ring_mul(alg.ring_path(alg.q.paths[i]), alg.ring_path(alg.q.paths[j]));
            Vec lhs = R.ring_map * prod;
            Vec rhs = R.ring.mul(R.ring_map * alg.ring_path(alg.q.paths[i]),
                                 R.ring_map * alg.ring_path(alg.q.paths[j]));
            if (lhs != rhs) throw invariant_violation("R -> R_T is not multiplicative");
        }
    return R;
}

// M_T = Hom(R-hat, M-hat) as a right R_T-module, the action being
// precomposition (mu, rho) -> mu . rho.
struct ModuleSections {
    Localization loc;          // localization of M
    std::vector<RepMap> basis; // hom basis of Hom(R-hat, M-hat)
    std::vector<std::vector<Vec>> action; // action[i][j] = coords of basis_i . ringbasis_j
};

inline ModuleSections module_sections(const Rep& m, const LocalizedRing& rt, const PathAlgebra& alg) {
    ModuleSections s;
    s.loc = localize_module(m, rt.tclass, alg);
    s.basis = hom_basis(rt.loc.localized, s.loc.localized);
    s.action.assign(s.basis.size(), std::vector<Vec>(rt.basis.size()));
    for (std::size_t i = 0; i < s.basis.size(); ++i)
        for (std::size_t j = 0; j < rt.basis.size(); ++j)
            s.action[i][j] = coords_in_hom_basis(s.basis, compose(s.basis[i], rt.basis[j]));
    return s;
}

// ---- Restriction maps along inclusions of torsion classes ------------------

// For S <= T (as torsion classes): the unit R -> R_S becomes invertible after
// localizing at T, which identifies (R_S)-hat-at-T with R-hat-at-T; conjugating
// endomorphisms along this identification realizes rho_{S,T}: R_S -> R_T.
struct RingRestriction {
    Mat rho; // (dim R_T) x (dim R_S), on the hom bases
};

namespace detail {
struct TransportAtT {
    Localization loc_at_t; // localization of X-hat-S at T
    RepMap u;              // X-hat-T -> (X-hat-S)-hat-T, an isomorphism
    RepMap u_inv;
};

inline TransportAtT transport(const Localization& ls, const Localization& lt, const PathAlgebra& alg) {
    TransportAtT tr;
    tr.loc_at_t = localize_module(ls.localized, lt.tclass, alg);
    tr.u = localize_map(ls.unit, lt, tr.loc_at_t);
    if (!tr.u.is_iso())
        throw invariant_violation("restriction transport map is not an isomorphism");
    tr.u_inv = map_inverse(tr.u);
    return tr;
}
} // namespace detail

inline RingRestriction restriction_ring_map(const LocalizedRing& rs, const LocalizedRing& rt,
                                            const PathAlgebra& alg) {
    if (!rs.tclass.contained_in(rt.tclass))
        throw invariant_violation("restriction requires an inclusion of torsion classes");
    auto tr = detail::transport(rs.loc, rt.loc, alg);
    RingRestriction out;
    out.rho = Mat(alg.p, int(rt.basis.size()), int(rs.basis.size()));
    for (std::size_t j = 0; j < rs.basis.size(); ++j) {
        RepMap f_at_t = localize_map(rs.basis[j], tr.loc_at_t, tr.loc_at_t);
        RepMap conj = compose(tr.u_inv, compose(f_at_t, tr.u));
        Vec col = coords_in_hom_basis(rt.basis, conj);
        for (int i = 0; i < out.rho.rows; ++i) out.rho.at(i, int(j)) = col[std::size_t(i)];
    }
    // unital + multiplicative + compatible with the canonical maps from R
    if (!(out.rho * rs.ring.unit == rt.ring.unit))
        throw invariant_violation("restriction map is not unital");
    for (int i = 0; i < rs.ring.dim; ++i)
        for (int j = 0; j < rs.ring.dim; ++j) {
            Vec ei(std::size_t(rs.ring.dim), 0), ej(std::size_t(rs.ring.dim), 0);
            ei[std::size_t(i)] = 1 % alg.p;
            ej[std::size_t(j)] = 1 % alg.p;
            if (!(out.rho * rs.ring.mul(ei, ej) == rt.ring.mul(out.rho * ei, out.rho * ej)))
                throw invariant_violation("restriction map is not multiplicative");
        }
    if (!(out.rho * rs.ring_map == rt.ring_map))
        throw invariant_violation("restriction map does not commute with R -> R_T");
    return out;
}

// Group-level restriction res^M_{S,T}: M_S -> M_T, R_S-linear over rho.
struct ModuleRestriction {
    Mat res; // (dim M_T) x (dim M_S)
};

inline ModuleRestriction restriction_module_map(const Rep& m, const LocalizedRing& rs,
                                                const LocalizedRing& rt, const ModuleSections& ms,
                                                const ModuleSections& mt, const RingRestriction& rr,
                                                const PathAlgebra& alg) {
    auto tr_r = detail::transport(rs.loc, rt.loc, alg);
    auto tr_m = detail::transport(ms.loc, mt.loc, alg);
    ModuleRestriction out;
    out.res = Mat(alg.p, int(mt.basis.size()), int(ms.basis.size()));
    for (std::size_t j = 0; j < ms.basis.size(); ++j) {
        RepMap mu_at_t = localize_map(ms.basis[j], tr_r.loc_at_t, tr_m.loc_at_t);
        RepMap conj = compose(tr_m.u_inv, compose(mu_at_t, tr_r.u));
        Vec col = coords_in_hom_basis(mt.basis, conj);
        for (int i = 0; i < out.res.rows; ++i) out.res.at(i, int(j)) = col[std::size_t(i)];
    }
    // R_S-linearity over rho, on basis pairs
    for (std::size_t i = 0; i < ms.basis.size(); ++i)
        for (std::size_t j = 0; j < rs.basis.size(); ++j) {
            Vec lhs = out.res * ms.action[i][j];
            // res(mu) . rho(r) computed through the M_T action
            Vec rmu = out.res * unit_vec(ms.basis.size(), i, alg.p);
            Vec rho_r = rr.rho * unit_vec(rs.basis.size(), j, alg.p);
            Vec rhs(std::size_t(mt.basis.size()), 0);
            for (std::size_t k = 0; k < mt.basis.size(); ++k) {
                if (!rmu[k]) continue;
                for (std::size_t l = 0; l < rt.basis.size(); ++l) {
                    if (!rho_r[l]) continue;
                    std::uint32_t c = fmul(rmu[k], rho_r[l], alg.p);
                    const Vec& t = mt.action[k][l];
                    for (std::size_t s = 0; s < rhs.size(); ++s)
                        rhs[s] = fadd(rhs[s], fmul(c, t[s], alg.p), alg.p);
                }
            }
            if (lhs != rhs)
                throw invariant_violation("module restriction is not linear over the ring restriction");
        }
    (void)m;
    return out;
}

// ---- Free presentations and the tensor side ---------------------------------

// R^a -> R^b -> M -> 0 with the generators lifting a basis of M/rad(M) and
// the relation columns given by ring elements (path algebras are hereditary,
// so the relation module is projective and one step suffices).
struct FreePresentation {
    int gens = 0, rels = 0;
    std::vector<Vec> generator_elems;   // elements of M, one per generator
    std::vector<std::vector<Vec>> rel;  // rel[l][j] = ring coordinates of r_{jl}
    Rep rb, ra;                         // R^b and R^a
    RepMap eps;                         // R^b -> M, surjective
    RepMap d;                           // R^a -> R^b, image = ker eps
};

inline FreePresentation free_presentation(const Rep& m, const PathAlgebra& alg) {
    FreePresentation fp;
    // generators: lifts of a basis of the top M/rad(M)
    Subrep rad = radical(m);
    for (int v = 1; v <= m.q.n; ++v) {
        Mat sec = quotient_section(rad.at(v), m.dim(v));
        for (int j = 0; j < sec.cols; ++j)
            fp.generator_elems.push_back(embed_component(m, sec.col(j), v));
    }
    fp.gens = int(fp.generator_elems.size());
    if (fp.gens == 0) {
        fp.rb = zero_rep(m.q, m.p);
        fp.ra = zero_rep(m.q, m.p);
        fp.eps = zero_map(fp.rb, m);
        fp.d = zero_map(fp.ra, fp.rb);
        return fp;
    }
    DirectSum rb_sum = direct_sum(std::vector<Rep>(std::size_t(fp.gens), alg.regular));
    fp.rb = rb_sum.total;
    RepMap eps = zero_map(fp.rb, m);
    for (int j = 0; j < fp.gens; ++j)
        eps = map_add(eps, compose(alg.element_map(m, fp.generator_elems[std::size_t(j)]),
                                   rb_sum.project[std::size_t(j)]));
    fp.eps = eps;
    if (!fp.eps.is_surjective())
        throw invariant_violation("presentation generators fail to generate (internal bug)");

    Subrep k = kernel_subrep(fp.eps);
    auto [krep, kincl] = k.as_rep();
    Subrep krad = radical(krep);
    std::vector<Vec> klifts;
    for (int v = 1; v <= m.q.n; ++v) {
        Mat sec = quotient_section(krad.at(v), krep.dim(v));
        for (int j = 0; j < sec.cols; ++j)
            klifts.push_back(apply_elem(kincl, embed_component(krep, sec.col(j), v)));
    }
    fp.rels = int(klifts.size());
    fp.rel.assign(std::size_t(fp.rels), std::vector<Vec>(std::size_t(fp.gens)));
    for (int l = 0; l < fp.rels; ++l)
        for (int j = 0; j < fp.gens; ++j)
            fp.rel[std::size_t(l)][std::size_t(j)] =
                alg.element_to_ring(apply_elem(rb_sum.project[std::size_t(j)], klifts[std::size_t(l)]));

    if (fp.rels == 0) {
        fp.ra = zero_rep(m.q, m.p);
        fp.d = zero_map(fp.ra, fp.rb);
    } else {
        DirectSum ra_sum = direct_sum(std::vector<Rep>(std::size_t(fp.rels), alg.regular));
        fp.ra = ra_sum.total;
        RepMap d = zero_map(fp.ra, fp.rb);
        for (int l = 0; l < fp.rels; ++l)
            for (int j = 0; j < fp.gens; ++j)
                d = map_add(d, compose(rb_sum.inject[std::size_t(j)],
                                       compose(alg.left_mult(fp.rel[std::size_t(l)][std::size_t(j)]),
                                               ra_sum.project[std::size_t(l)])));
        fp.d = d;
    }
    if (!(image_subrep(fp.d) == k))
        throw invariant_violation("presentation relations do not span the kernel (internal bug)");
    return fp;
}

// M (x)_R R_T as the cokernel of the relation matrix over R_T, together with
// the canonical map M -> M (x) R_T and the right R_T-action.
struct TensorModule {
    int dim = 0;
    int gens = 0;
    Mat to_coker;            // (gens * dim R_T) -> dim
    Mat section;             // dim -> (gens * dim R_T)
    std::vector<Mat> action; // right multiplication by each R_T basis element
    Mat unit;                // total_dim(M) -> dim: m -> m (x) 1
};

inline TensorModule tensor_with_localized_ring(const Rep& m, const FreePresentation& fp,
                                               const LocalizedRing& rt, const PathAlgebra& alg) {
    TensorModule t;
    int r = rt.ring.dim;
    t.gens = fp.gens;
    int vdim = fp.gens * r;
    if (vdim == 0) {
        t.to_coker = Mat(alg.p, 0, 0);
        t.section = Mat(alg.p, 0, 0);
        t.unit = Mat(alg.p, 0, m.total_dim());
        t.action.assign(std::size_t(std::max(r, 0)), Mat(alg.p, 0, 0));
        return t;
    }
    // image of d (x) R_T
    std::vector<Vec> image;
    for (int l = 0; l < fp.rels; ++l)
        for (int s = 0; s < r; ++s) {
            Vec col(std::size_t(vdim), 0);
            for (int j = 0; j < fp.gens; ++j) {
                Vec rho = rt.ring_map * fp.rel[std::size_t(l)][std::size_t(j)];
                Vec prod = rt.ring.mul(rho, unit_vec(std::size_t(r), std::size_t(s), alg.p));
                for (int i = 0; i < r; ++i) col[std::size_t(j * r + i)] = prod[std::size_t(i)];
            }
            image.push_back(std::move(col));
        }
    Mat w = row_space_from_vectors(alg.p, image, vdim);
    t.to_coker = quotient_map(w, vdim);
    t.section = quotient_section(w, vdim);
    t.dim = t.to_coker.rows;

    // right action of R_T, blockwise right multiplication, descended to the cokernel
    for (int s = 0; s < r; ++s) {
        Mat rm = rt.ring.right_mult(unit_vec(std::size_t(r), std::size_t(s), alg.p));
        Mat big(alg.p, vdim, vdim);
        for (int j = 0; j < fp.gens; ++j)
            for (int i = 0; i < r; ++i)
                for (int k = 0; k < r; ++k) big.at(j * r + i, j * r + k) = rm.at(i, k);
        t.action.push_back(t.to_coker * big * t.section);
    }

    // canonical map m -> m (x) 1: lift m through eps, push coordinates to R_T
    t.unit = Mat(alg.p, t.dim, m.total_dim());
    for (int col = 0; col < m.total_dim(); ++col) {
        Vec target(std::size_t(m.total_dim()), 0);
        target[std::size_t(col)] = 1 % alg.p;
        // solve eps(x) = target per vertex
        Vec lift(std::size_t(fp.rb.total_dim()), 0);
        for (int v = 1; v <= m.q.n; ++v) {
            auto sol = solve(fp.eps.at(v), vertex_component(m, target, v));
            if (!sol) throw invariant_violation("presentation lift failed (internal bug)");
            std::copy(sol->begin(), sol->end(), lift.begin() + fp.rb.offset(v));
        }
        Vec vcol(std::size_t(vdim), 0);
        // decompose the lift into ring elements per generator copy
        DirectSum rb_sum = direct_sum(std::vector<Rep>(std::size_t(fp.gens), alg.regular));
        for (int j = 0; j < fp.gens; ++j) {
            Vec ring = alg.element_to_ring(apply_elem(rb_sum.project[std::size_t(j)], lift));
            Vec rho = rt.ring_map * ring;
            for (int i = 0; i < r; ++i) vcol[std::size_t(j * r + i)] = rho[std::size_t(i)];
        }
        Vec cc = t.to_coker * vcol;
        for (int i = 0; i < t.dim; ++i) t.unit.at(i, col) = cc[std::size_t(i)];
    }
    return t;
}

// theta_{M,T}: M (x) R_T -> M_T, sending the class of (mu_j)_j to
// sum_j Q(y_M(m_j)) . mu_j, where m_j are the presentation generators.
struct Theta {
    Mat matrix; // (dim M_T) x (dim M (x) R_T)
    bool iso = false;
};

inline Theta theta_map(const Rep& m, const FreePresentation& fp, const TensorModule& tm,
                       const LocalizedRing& rt, const ModuleSections& mt, const PathAlgebra& alg) {
    Theta th;
    int r = rt.ring.dim;
    int vdim = fp.gens * r;
    Mat on_v(alg.p, int(mt.basis.size()), vdim);
    for (int j = 0; j < fp.gens; ++j) {
        RepMap qy = localize_map(alg.element_map(m, fp.generator_elems[std::size_t(j)]), rt.loc, mt.loc);
        for (int s = 0; s < r; ++s) {
            Vec col = coords_in_hom_basis(mt.basis, compose(qy, rt.basis[std::size_t(s)]));
            for (std::size_t i = 0; i < mt.basis.size(); ++i) on_v.at(int(i), j * r + s) = col[i];
        }
    }
    // theta kills the image of d (x) R_T, hence descends to the cokernel
    for (int l = 0; l < fp.rels; ++l)
        for (int s = 0; s < r; ++s) {
            Vec col(std::size_t(vdim), 0);
            for (int j = 0; j < fp.gens; ++j) {
                Vec rho = rt.ring_map * fp.rel[std::size_t(l)][std::size_t(j)];
                Vec prod = rt.ring.mul(rho, unit_vec(std::size_t(r), std::size_t(s), alg.p));
                for (int i = 0; i < r; ++i) col[std::size_t(j * r + i)] = prod[std::size_t(i)];
            }
            Vec img = on_v * col;
            if (!std::all_of(img.begin(), img.end(), [](std::uint32_t x) { return x == 0; }))
                throw invariant_violation("theta does not kill the relations (internal bug)");
        }
    th.matrix = on_v * tm.section;
    th.iso = (tm.dim == int(mt.basis.size())) && rank(th.matrix) == tm.dim;
    return th;
}

// Everything theta-related for one module at one torsion class.
struct ThetaBundle {
    FreePresentation pres;
    TensorModule tensor;
    ModuleSections sections;
    Theta theta;
};

inline ThetaBundle theta_bundle(const Rep& m, const LocalizedRing& rt, const PathAlgebra& alg) {
    ThetaBundle b;
    b.pres = free_presentation(m, alg);
    b.tensor = tensor_with_localized_ring(m, b.pres, rt, alg);
    b.sections = module_sections(m, rt, alg);
    b.theta = theta_map(m, b.pres, b.tensor, rt, b.sections, alg);
    return b;
}

// The induced map f (x) R_T on tensor modules, in cokernel coordinates.
inline Mat tensor_map(const RepMap& f, const FreePresentation& fm, const TensorModule& tmm,
                      const FreePresentation& fn, const TensorModule& tmn, const LocalizedRing& rt,
                      const PathAlgebra& alg) {
    int r = rt.ring.dim;
    int vm = fm.gens * r, vn = fn.gens * r;
    Mat big(alg.p, vn, vm);
    if (fn.gens > 0) {
        DirectSum rbn_sum = direct_sum(std::vector<Rep>(std::size_t(fn.gens), alg.regular));
        for (int j = 0; j < fm.gens; ++j) {
            Vec img = apply_elem(f, fm.generator_elems[std::size_t(j)]);
            // lift f(m_j) through eps_N
            Vec lift(std::size_t(fn.rb.total_dim()), 0);
            for (int v = 1; v <= f.src.q.n; ++v) {
                auto sol = solve(fn.eps.at(v), vertex_component(f.dst, img, v));
                if (!sol) throw invariant_violation("tensor_map lift failed (internal bug)");
                std::copy(sol->begin(), sol->end(), lift.begin() + fn.rb.offset(v));
            }
            for (int i = 0; i < fn.gens; ++i) {
                Vec s_ij = alg.element_to_ring(apply_elem(rbn_sum.project[std::size_t(i)], lift));
                Vec rho = rt.ring_map * s_ij;
                // block (i, j): left multiplication by rho(s_ij) in R_T
                Mat lm = rt.ring.left_mult(rho);
                for (int a = 0; a < r; ++a)
                    for (int b = 0; b < r; ++b) big.at(i * r + a, j * r + b) = lm.at(a, b);
            }
        }
    }
    return tmn.to_coker * big * tmm.section;
}

// The induced map f_T: M_T -> N_T (postcomposition with the localized f).
inline Mat sections_map(const RepMap& f, const ModuleSections& ms, const ModuleSections& ns,
                        const PathAlgebra& alg) {
    RepMap f_loc = localize_map(f, ms.loc, ns.loc);
    Mat out(alg.p, int(ns.basis.size()), int(ms.basis.size()));
    for (std::size_t j = 0; j < ms.basis.size(); ++j) {
        Vec col = coords_in_hom_basis(ns.basis, compose(f_loc, ms.basis[j]));
        for (int i = 0; i < out.rows; ++i) out.at(i, int(j)) = col[std::size_t(i)];
    }
    return out;
}

// ---- Perfectness battery -----------------------------------------------------

struct PerfectnessReport {
    bool theta_iso = true;            // condition (5) on the battery
    bool unit_kernel_is_torsion = true; // condition (6) on the battery
    std::optional<bool> filter_matches; // condition (7); empty if budget ran out
    std::vector<std::string> failures;
};

inline PerfectnessReport perfectness_report(const TorsionClass& t, const PathAlgebra& alg,
                                            const std::vector<Rep>& battery,
                                            std::uint64_t ideal_budget = kDefaultBudget) {
    PerfectnessReport rep;
    LocalizedRing rt = localized_ring(t, alg);
    for (const Rep& m : battery) {
        ThetaBundle b = theta_bundle(m, rt, alg);
        if (!b.theta.iso) {
            rep.theta_iso = false;
            rep.failures.push_back("theta not iso at a battery module");
        }
        Mat ker = row_space_from_vectors(alg.p, kernel_basis(b.tensor.unit), m.total_dim());
        Mat tau = subrep_concat_basis(torsion_submodule(m, t, alg));
        if (!(ker == tau)) {
            rep.unit_kernel_is_torsion = false;
            rep.failures.push_back("unit kernel differs from the torsion submodule");
        }
    }
    // condition (7), filter part: G_T = { I : rho(I) R_T = R_T }
    try {
        bool ok = true;
        for (const Subrep& ideal : all_submodules(alg.regular, ideal_budget)) {
            SubQuotient sq = quotient_by(alg.regular, ideal);
            bool in_filter = is_torsion(sq.quotient, t, alg);
            // right ideal of R_T generated by rho(I)
            std::vector<Vec> span;
            for (int v = 1; v <= alg.q.n; ++v)
                for (int r = 0; r < ideal.at(v).rows; ++r) {
                    Vec ring = alg.element_to_ring(embed_component(alg.regular, ideal.at(v).row(r), v));
                    Vec rho = rt.ring_map * ring;
                    for (int s = 0; s < rt.ring.dim; ++s)
                        span.push_back(rt.ring.mul(rho, unit_vec(std::size_t(rt.ring.dim), std::size_t(s), alg.p)));
                }
            bool full = rt.ring.dim == 0 ||
                        row_space_from_vectors(alg.p, span, rt.ring.dim).rows == rt.ring.dim;
            if (in_filter != full) {
                ok = false;
                rep.failures.push_back("filter condition fails at a right ideal");
            }
        }
        rep.filter_matches = ok;
    } catch (const budget_exceeded&) {
        rep.filter_matches = std::nullopt;
    }
    return rep;
}

} // namespace injspec

#endif
