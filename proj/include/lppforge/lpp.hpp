#ifndef LPPFORGE_LPP_HPP
#define LPPFORGE_LPP_HPP

#include "lppforge/mpoly.hpp"
#include "lppforge/perm.hpp"

namespace lppforge {

/// q x q grid of element-order indices, rows/columns indexed by c_0..c_{q-1}.
/// Row index is the first variable.
struct LatinSquare {
    int q = 0;
    std::vector<std::uint8_t> cells;  // row-major

    std::uint8_t at(int i, int j) const { return cells[static_cast<size_t>(i) * q + j]; }
    std::uint8_t& at(int i, int j) { return cells[static_cast<size_t>(i) * q + j]; }
};

bool is_latin(const LatinSquare& L);

/// Every value hit exactly q^(n-1) times over F_q^n. Total predicate:
/// constants and non-permutations return false.
bool is_permutation_poly(const MPoly& f);

/// Bijective in each variable for every fixing of the others.
bool is_lpp(const MPoly& f);

/// q x q table of order indices for a bivariate f: entry (i, j) holds the
/// index of f(c_i, c_j).
LatinSquare value_grid(const MPoly& f);

/// Which variable the tuple permutations act on. The convention of record is
/// `second`: beta_i(c_j) is the unique y with f(c_j, y) = c_i.
enum class TupleVariable { second, first };

PermTuple lpp_to_tuple(const MPoly& f, TupleVariable convention = TupleVariable::second);
MPoly tuple_to_lpp(const Field::Ptr& field, const PermTuple& tuple);

MPoly latin_to_lpp(const Field::Ptr& field, const LatinSquare& L);
LatinSquare lpp_to_latin(const MPoly& f);

/// Univariate polynomial inducing the transposition (a b), identity elsewhere.
MPoly transposition_poly(const Field::Ptr& field, felem a, felem b);

/// Univariate polynomial inducing a single cycle through all q elements,
/// built from the primitive element.
MPoly full_cycle_poly(const Field::Ptr& field);

/// g + h on disjoint variable blocks; the sum is an LPP iff both parts are.
MPoly sum_lpp(const MPoly& g, const MPoly& h);

/// g(f(..)) for a univariate permutation polynomial g.
MPoly compose_outer(const MPoly& g, const MPoly& f);
/// f(h_1(x_1), ..., h_n(x_n)) for univariate permutation polynomials h_i.
MPoly compose_inner(const MPoly& f, const std::vector<MPoly>& hs);

/// LPP over F_p of the extremal degree n(p-2). For gcd(n, p-1) = 1 this is
/// (x_1^(p-2) + ... + x_n^(p-2))^n; for n = 2 with p > 3 the bivariate
/// extremal construction is used instead.
MPoly max_degree_lpp_n(int p, int n);

/// Bivariate LPP of degree exactly 2(q-2), q > 3.
MPoly max_degree_lpp_2(const Field::Ptr& field);

} // namespace lppforge

#endif
