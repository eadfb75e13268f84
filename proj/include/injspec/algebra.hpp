#ifndef INJSPEC_ALGEBRA_HPP
#define INJSPEC_ALGEBRA_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "injspec/common.hpp"
#include "injspec/mat.hpp"

namespace injspec {

// A finite-dimensional associative unital GF(p)-algebra given by structure
// constants with respect to a fixed basis. The zero algebra (dim 0) is legal.
struct Algebra {
    std::uint32_t p = 2;
    int dim = 0;
    std::vector<std::vector<Vec>> table; // table[i][j] = coordinates of b_i * b_j
    Vec unit;

    Algebra() = default;
    Algebra(std::uint32_t p_, int dim_, std::vector<std::vector<Vec>> table_, Vec unit_)
        : p(p_), dim(dim_), table(std::move(table_)), unit(std::move(unit_)) {
        check_prime_field(p);
        if (int(table.size()) != dim || int(unit.size()) != dim)
            throw invariant_violation("algebra table shape mismatch");
        for (const auto& row : table) {
            if (int(row.size()) != dim) throw invariant_violation("algebra table shape mismatch");
            for (const auto& v : row)
                if (int(v.size()) != dim) throw invariant_violation("algebra table shape mismatch");
        }
        validate();
    }

    Vec mul(const Vec& x, const Vec& y) const {
        Vec r(std::size_t(dim), 0);
        for (int i = 0; i < dim; ++i) {
            if (!x[std::size_t(i)]) continue;
            for (int j = 0; j < dim; ++j) {
                if (!y[std::size_t(j)]) continue;
                std::uint32_t c = fmul(x[std::size_t(i)], y[std::size_t(j)], p);
                const Vec& t = table[std::size_t(i)][std::size_t(j)];
                for (int k = 0; k < dim; ++k)
                    r[std::size_t(k)] = fadd(r[std::size_t(k)], fmul(c, t[std::size_t(k)], p), p);
            }
        }
        return r;
    }

    Mat left_mult(const Vec& x) const { // y -> x*y
        Mat m(p, dim, dim);
        for (int j = 0; j < dim; ++j) {
            Vec e(std::size_t(dim), 0);
            e[std::size_t(j)] = 1 % p;
            Vec c = mul(x, e);
            for (int i = 0; i < dim; ++i) m.at(i, j) = c[std::size_t(i)];
        }
        return m;
    }

    Mat right_mult(const Vec& x) const { // y -> y*x
        Mat m(p, dim, dim);
        for (int j = 0; j < dim; ++j) {
            Vec e(std::size_t(dim), 0);
            e[std::size_t(j)] = 1 % p;
            Vec c = mul(e, x);
            for (int i = 0; i < dim; ++i) m.at(i, j) = c[std::size_t(i)];
        }
        return m;
    }

    bool is_zero_elem(const Vec& x) const {
        return std::all_of(x.begin(), x.end(), [](std::uint32_t v) { return v == 0; });
    }

    std::uint64_t element_count() const {
        std::uint64_t n = 1;
        for (int i = 0; i < dim; ++i) n *= p;
        return n;
    }

    Vec element_from_code(std::uint64_t code) const {
        Vec x(std::size_t(dim), 0);
        for (int i = 0; i < dim; ++i) {
            x[std::size_t(i)] = std::uint32_t(code % p);
            code /= p;
        }
        return x;
    }

    // canonical row-space basis of the centre
    Mat center() const {
        Mat sys(p, 0, dim);
        for (int j = 0; j < dim; ++j) {
            Vec e(std::size_t(dim), 0);
            e[std::size_t(j)] = 1 % p;
            sys = vstack(sys, left_mult(e) - right_mult(e));
        }
        if (dim == 0) return Mat(p, 0, 0);
        return row_space_from_vectors(p, kernel_basis(sys), dim);
    }

    // all idempotents inside a subspace (given by a canonical row basis),
    // by exhaustive enumeration
    std::vector<Vec> idempotents_in(const Mat& subspace,
                                    std::uint64_t budget = kDefaultElementBudget) const {
        std::uint64_t total = 1;
        for (int i = 0; i < subspace.rows; ++i) {
            total *= p;
            if (total > budget) throw budget_exceeded("idempotent enumeration exceeds budget");
        }
        std::vector<Vec> out;
        for (std::uint64_t code = 0; code < total; ++code) {
            Vec coeff(std::size_t(subspace.rows), 0);
            std::uint64_t rest = code;
            for (int i = 0; i < subspace.rows; ++i) {
                coeff[std::size_t(i)] = std::uint32_t(rest % p);
                rest /= p;
            }
            Vec x(std::size_t(dim), 0);
            for (int i = 0; i < subspace.rows; ++i)
                for (int k = 0; k < dim; ++k)
                    x[std::size_t(k)] = fadd(x[std::size_t(k)],
                                             fmul(coeff[std::size_t(i)], subspace.at(i, k), p), p);
            if (mul(x, x) == x) out.push_back(std::move(x));
        }
        return out;
    }

    // primitive central idempotents: the atoms among nonzero central
    // idempotents under e <= f iff e*f == e
    std::vector<Vec> primitive_central_idempotents(std::uint64_t budget = kDefaultElementBudget) const {
        auto idems = idempotents_in(center(), budget);
        std::vector<Vec> nonzero;
        for (auto& e : idems)
            if (!is_zero_elem(e)) nonzero.push_back(e);
        std::vector<Vec> prim;
        for (const Vec& e : nonzero) {
            bool minimal = true;
            for (const Vec& f : nonzero)
                if (f != e && mul(f, e) == f) { minimal = false; break; }
            if (minimal) prim.push_back(e);
        }
        return prim;
    }

    // block cut out by a central idempotent: the ideal e*A with unit e
    Algebra corner(const Vec& central_idem) const {
        std::vector<Vec> span;
        for (int j = 0; j < dim; ++j) {
            Vec e(std::size_t(dim), 0);
            e[std::size_t(j)] = 1 % p;
            span.push_back(mul(central_idem, e));
        }
        Mat basis = row_space_from_vectors(p, span, dim);
        const std::size_t d = std::size_t(basis.rows);
        auto coords = [&](const Vec& x) { return coords_in_row_space(basis, x); };
        std::vector<std::vector<Vec>> t(d, std::vector<Vec>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) t[i][j] = coords(mul(basis.row(int(i)), basis.row(int(j))));
        return Algebra(p, int(d), std::move(t), coords(central_idem));
    }

    bool elem_invertible(const Vec& x) const { return is_invertible(left_mult(x)); }

    // Jacobson radical by the quasi-regularity criterion:
    // x in J(A) iff 1 - x*y is invertible for every y. Exhaustive over all
    // p^dim elements, so budget-guarded twice (outer and inner loop).
    Mat jacobson_radical(std::uint64_t budget = kDefaultElementBudget) const {
        if (element_count() > budget || dim == 0) {
            if (dim == 0) return Mat(p, 0, 0);
            throw budget_exceeded("radical enumeration exceeds budget");
        }
        std::uint64_t total = element_count();
        std::vector<Vec> members;
        for (std::uint64_t cx = 0; cx < total; ++cx) {
            Vec x = element_from_code(cx);
            bool in_radical = true;
            for (std::uint64_t cy = 0; cy < total && in_radical; ++cy) {
                Vec y = element_from_code(cy);
                Vec xy = mul(x, y);
                Vec one_minus(std::size_t(dim), 0);
                for (int k = 0; k < dim; ++k)
                    one_minus[std::size_t(k)] = fsub(unit[std::size_t(k)], xy[std::size_t(k)], p);
                in_radical = elem_invertible(one_minus);
            }
            if (in_radical) members.push_back(std::move(x));
        }
        return row_space_from_vectors(p, members, dim);
    }

    bool is_semisimple(std::uint64_t budget = kDefaultElementBudget) const {
        return jacobson_radical(budget).rows == 0;
    }

  private:
    void validate() const {
        if (dim == 0) return;
        for (int i = 0; i < dim; ++i) {
            Vec e(std::size_t(dim), 0);
            e[std::size_t(i)] = 1 % p;
            if (mul(unit, e) != e || mul(e, unit) != e)
                throw invariant_violation("algebra unit fails");
        }
        auto table_mul = [&](const Vec& x, int k) { // x * b_k via the table
            Vec r(std::size_t(dim), 0);
            for (int m = 0; m < dim; ++m) {
                if (!x[std::size_t(m)]) continue;
                const Vec& t = table[std::size_t(m)][std::size_t(k)];
                for (int s = 0; s < dim; ++s)
                    r[std::size_t(s)] = fadd(r[std::size_t(s)], fmul(x[std::size_t(m)], t[std::size_t(s)], p), p);
            }
            return r;
        };
        auto table_mul_left = [&](int i, const Vec& x) { // b_i * x
            Vec r(std::size_t(dim), 0);
            for (int m = 0; m < dim; ++m) {
                if (!x[std::size_t(m)]) continue;
                const Vec& t = table[std::size_t(i)][std::size_t(m)];
                for (int s = 0; s < dim; ++s)
                    r[std::size_t(s)] = fadd(r[std::size_t(s)], fmul(x[std::size_t(m)], t[std::size_t(s)], p), p);
            }
            return r;
        };
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k)
                    if (table_mul(table[std::size_t(i)][std::size_t(j)], k) !=
                        table_mul_left(i, table[std::size_t(j)][std::size_t(k)]))
                        throw invariant_violation("algebra multiplication not associative");
    }
};

// Build an algebra from an abstract basis and a multiplication callback
// producing coordinates in that basis.
inline Algebra algebra_from_mult(std::uint32_t p, int dim,
                                 const std::function<Vec(int, int)>& basis_mul, Vec unit) {
    std::vector<std::vector<Vec>> table(std::size_t(dim), std::vector<Vec>(std::size_t(dim)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) table[std::size_t(i)][std::size_t(j)] = basis_mul(i, j);
    return Algebra(p, dim, std::move(table), std::move(unit));
}

} // namespace injspec

#endif
