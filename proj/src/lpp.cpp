#include "lppforge/lpp.hpp"

#include <numeric>

namespace lppforge {

bool is_latin(const LatinSquare& L) {
    const int q = L.q;
    if (q <= 0 || static_cast<int>(L.cells.size()) != q * q) return false;
    for (int i = 0; i < q; ++i) {
        std::uint32_t row = 0, col = 0;
        for (int j = 0; j < q; ++j) {
            if (L.at(i, j) >= q || L.at(j, i) >= q) return false;
            row |= 1u << L.at(i, j);
            col |= 1u << L.at(j, i);
        }
        if (row != (1u << q) - 1 || col != (1u << q) - 1) return false;
    }
    return true;
}

bool is_permutation_poly(const MPoly& f) {
    const Field& F = f.field();
    const int q = F.q();
    auto table = value_table(f);
    long expected = static_cast<long>(table.size()) / q;
    std::vector<long> hits(q, 0);
    for (felem v : table) ++hits[v];
    for (long h : hits)
        if (h != expected) return false;
    return true;
}

bool is_lpp(const MPoly& f) {
    const Field& F = f.field();
    const int q = F.q();
    const int n = f.nvars();
    std::vector<felem> point(n, 0);
    // For each axis, run through all assignments of the remaining variables
    // and demand a bijective restriction.
    std::vector<int> rest(n - 1, 0);
    for (int axis = 0; axis < n; ++axis) {
        std::fill(rest.begin(), rest.end(), 0);
        while (true) {
            for (int i = 0, k = 0; i < n; ++i)
                if (i != axis) point[i] = F.element(rest[k++]);
            std::uint32_t seen = 0;
            for (int v = 0; v < q; ++v) {
                point[axis] = F.element(v);
                std::uint32_t bit = 1u << F.index_of(f.eval(point));
                if (seen & bit) return false;
                seen |= bit;
            }
            int i = n - 2;
            while (i >= 0 && ++rest[i] == q) rest[i--] = 0;
            if (i < 0) break;
        }
    }
    return true;
}

LatinSquare value_grid(const MPoly& f) {
    require(f.nvars() == 2, errc::arity_mismatch, "value grid requires a bivariate polynomial");
    const Field& F = f.field();
    const int q = F.q();
    LatinSquare L;
    L.q = q;
    L.cells.resize(static_cast<size_t>(q) * q);
    std::vector<felem> point(2);
    for (int i = 0; i < q; ++i) {
        point[0] = F.element(i);
        for (int j = 0; j < q; ++j) {
            point[1] = F.element(j);
            L.at(i, j) = static_cast<std::uint8_t>(F.index_of(f.eval(point)));
        }
    }
    return L;
}

PermTuple lpp_to_tuple(const MPoly& f, TupleVariable convention) {
    require(f.nvars() == 2, errc::arity_mismatch, "tuples require a bivariate polynomial");
    require(is_lpp(f), errc::not_lpp, "polynomial is not a local permutation polynomial");
    const int q = f.field().q();
    LatinSquare V = value_grid(f);
    PermTuple tuple(q, Perm(q));
    if (convention == TupleVariable::second) {
        // beta_i(c_j) = the unique y with f(c_j, y) = c_i.
        for (int j = 0; j < q; ++j)
            for (int y = 0; y < q; ++y) tuple[V.at(j, y)][j] = static_cast<std::uint8_t>(y);
    } else {
        // beta_i(c_j) = the unique x with f(x, c_j) = c_i.
        for (int x = 0; x < q; ++x)
            for (int j = 0; j < q; ++j) tuple[V.at(x, j)][j] = static_cast<std::uint8_t>(x);
    }
    return tuple;
}

MPoly tuple_to_lpp(const Field::Ptr& field, const PermTuple& tuple) {
    const int q = field->q();
    require(static_cast<int>(tuple.size()) == q, errc::wrong_length,
            "tuple length must equal the field order");
    require(tuple_valid(tuple), errc::invalid_tuple,
            "pairwise quotients must be fixed-point-free");
    std::vector<felem> table(static_cast<size_t>(q) * q, 0);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            table[static_cast<size_t>(j) * q + tuple[i][j]] = field->element(i);
    return interpolate(field, 2, table);
}

MPoly latin_to_lpp(const Field::Ptr& field, const LatinSquare& L) {
    require(L.q == field->q(), errc::order_mismatch, "grid order does not match the field");
    require(is_latin(L), errc::not_latin, "grid is not a Latin square");
    std::vector<felem> table(static_cast<size_t>(L.q) * L.q);
    for (int i = 0; i < L.q; ++i)
        for (int j = 0; j < L.q; ++j)
            table[static_cast<size_t>(i) * L.q + j] = field->element(L.at(i, j));
    return interpolate(field, 2, table);
}

LatinSquare lpp_to_latin(const MPoly& f) {
    require(is_lpp(f), errc::not_lpp, "polynomial is not a local permutation polynomial");
    return value_grid(f);
}

namespace {

// z + sum_{k=0}^{q-2} z^k: permutes the points 0 and 1, fixes everything else.
MPoly swap01_poly(const Field::Ptr& field) {
    const int q = field->q();
    MPoly s = MPoly::variable(field, 1, 0);
    for (int k = 0; k <= q - 2; ++k)
        s = add(s, MPoly::monomial(field, 1, {k}, field->one()));
    return s;
}

} // namespace

MPoly transposition_poly(const Field::Ptr& field, felem a, felem b) {
    require(a != b, errc::equal_points, "transposition endpoints must differ");
    const Field& F = *field;
    // f(x) = a + (b-a) * s((x-a)/(b-a)) with s the 0<->1 swap.
    felem scale_in = F.inv(F.sub(b, a));
    MPoly z = add(scale(MPoly::variable(field, 1, 0), scale_in),
                  MPoly::constant(field, 1, F.mul(F.neg(a), scale_in)));
    MPoly s = compose_univariate(swap01_poly(field), z);
    return add(MPoly::constant(field, 1, a), scale(s, F.sub(b, a)));
}

MPoly full_cycle_poly(const Field::Ptr& field) {
    const Field& F = *field;
    const int q = F.q();
    felem alpha = F.primitive_element();
    // (alpha*x - 1)^(q-1) - x^(q-1) + alpha*x
    MPoly ax = scale(MPoly::variable(field, 1, 0), alpha);
    MPoly lhs = power(sub(ax, MPoly::constant(field, 1, F.one())), q - 1);
    MPoly xq1 = MPoly::monomial(field, 1, {q - 1}, F.one());
    return add(sub(lhs, xq1), ax);
}

MPoly sum_lpp(const MPoly& g, const MPoly& h) {
    require(same_field(g.field(), h.field()), errc::field_mismatch,
            "operands belong to different fields");
    const int m = g.nvars();
    const int n = m + h.nvars();
    MPoly out(g.field_ptr(), n);
    ExpVec e(n, 0);
    auto widen = [&](const MPoly& part, int offset) {
        for (const auto& [pe, c] : part.terms()) {
            std::fill(e.begin(), e.end(), 0);
            for (size_t i = 0; i < pe.size(); ++i) e[offset + i] = pe[i];
            out = add(out, MPoly::monomial(out.field_ptr(), n,
                                           std::vector<long>(e.begin(), e.end()), c));
        }
    };
    widen(g, 0);
    widen(h, m);
    return out;
}

MPoly compose_outer(const MPoly& g, const MPoly& f) {
    require(g.nvars() == 1, errc::arity_mismatch, "outer polynomial must be univariate");
    require(is_permutation_poly(g), errc::not_permutation,
            "outer polynomial must be a permutation polynomial");
    return compose_univariate(g, f);
}

MPoly compose_inner(const MPoly& f, const std::vector<MPoly>& hs) {
    const Field& F = f.field();
    const int n = f.nvars();
    const int q = F.q();
    require(static_cast<int>(hs.size()) == n, errc::arity_mismatch,
            "need one inner polynomial per variable");
    for (const auto& h : hs) {
        require(h.nvars() == 1, errc::arity_mismatch, "inner polynomials must be univariate");
        require(same_field(h.field(), F), errc::field_mismatch,
                "operands belong to different fields");
        require(is_permutation_poly(h), errc::not_permutation,
                "inner polynomials must be permutation polynomials");
    }
    // Compose by value table; interpolation restores the canonical form.
    std::vector<std::vector<felem>> himg(n, std::vector<felem>(q));
    for (int i = 0; i < n; ++i) {
        std::vector<felem> pt(1);
        for (int v = 0; v < q; ++v) {
            pt[0] = F.element(v);
            himg[i][v] = hs[i].eval(pt);
        }
    }
    long size = 1;
    for (int i = 0; i < n; ++i) size *= q;
    std::vector<felem> table(size);
    std::vector<felem> point(n);
    for (long I = 0; I < size; ++I) {
        long rem = I;
        for (int i = n - 1; i >= 0; --i) {
            point[i] = himg[i][rem % q];
            rem /= q;
        }
        table[I] = f.eval(point);
    }
    return interpolate(f.field_ptr(), n, table);
}

MPoly max_degree_lpp_n(int p, int n) {
    auto field = Field::make(p, 1);
    require(n >= 1 && n < p, errc::bad_input, "need 1 <= n < p");
    if (std::gcd(n, p - 1) != 1) {
        // x^n is not a permutation then; only the bivariate extremal
        // construction can still reach degree n(p-2).
        if (n == 2 && p > 3) return max_degree_lpp_2(field);
        fail(errc::gcd_violation, "gcd(n, p-1) must be 1");
    }
    MPoly s(field, n);
    for (int i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = p - 2;
        s = add(s, MPoly::monomial(field, n, e, field->one()));
    }
    return power(s, n);
}

MPoly max_degree_lpp_2(const Field::Ptr& field) {
    const Field& F = *field;
    const int q = F.q();
    require(q > 3, errc::unsupported_order, "degree 2(q-2) requires q > 3");
    if (q == 4) {
        // u*x^2*y^2 + (u+1)*x^2*y + (u+1)*x*y^2 + x*y + y^2 + u*x + 1
        felem u = F.from_coeffs({0, 1});
        felem u1 = F.add(u, F.one());
        MPoly f(field, 2);
        f = add(f, MPoly::monomial(field, 2, {2, 2}, u));
        f = add(f, MPoly::monomial(field, 2, {2, 1}, u1));
        f = add(f, MPoly::monomial(field, 2, {1, 2}, u1));
        f = add(f, MPoly::monomial(field, 2, {1, 1}, F.one()));
        f = add(f, MPoly::monomial(field, 2, {0, 2}, F.one()));
        f = add(f, MPoly::monomial(field, 2, {1, 0}, u));
        f = add(f, MPoly::constant(field, 2, F.one()));
        return f;
    }
    const long ye = (q % 2 == 1) ? q - 2 : (q - 2) / 2;
    MPoly s = add(MPoly::monomial(field, 2, {q - 2, 0}, F.one()),
                  MPoly::monomial(field, 2, {0, ye}, F.one()));
    return compose_univariate(swap01_poly(field), s);
}

} // namespace lppforge
