#ifndef LPPFORGE_ORTHO_HPP
#define LPPFORGE_ORTHO_HPP

#include <functional>

#include "lppforge/klenian.hpp"

namespace lppforge {

/// m polynomials in n variables whose joint fibers all have size q^(n-m).
bool is_orthogonal_system(const std::vector<MPoly>& fs);

/// (f, g) is a bijection of F_q^2.
bool is_companion(const MPoly& f, const MPoly& g);

/// (q!)^q, the number of companions of any bivariate permutation polynomial.
bigint companion_count(int q);

/// Visit every companion of f exactly once (level-set construction over all
/// q-tuples of permutations). Full enumeration is limited to q <= 3; the
/// visitor may return false to stop early.
void enumerate_companions(const MPoly& f, const std::function<bool(const MPoly&)>& visit);

/// Random companions for orders where full enumeration is refused.
std::vector<MPoly> sample_companions(const MPoly& f, int count, std::uint64_t seed);

/// All LPP companions of an LPP, via backtracking over level assignments with
/// fixed-point-free pruning. q <= 5.
std::vector<MPoly> enumerate_lpp_companions(const MPoly& f);

/// Count of LPP companions straight from the tuple; used by censuses.
long long count_lpp_companions(const PermTuple& tuple);

/// A linear LPP companion of a linear LPP, q >= 3.
MPoly linear_companion(const MPoly& f);

/// Optional knobs for klenian_companion. Defaults give the plain block
/// construction; both exist so printed reference grids (which were produced
/// with shifted bases and a cycle-induced point order) can be reproduced
/// bit-exactly.
struct KlenianCompanionOptions {
    Perm g_base;                   // empty = identity
    std::vector<int> point_order;  // empty = the field's element order
};

/// The LPP companion of the e-Klenian polynomial f of the group, for odd q:
/// level m = a + b*l collects (p_k, g_base * alpha^(a+i) beta^(b+j) (p_k)) over
/// k = i + j*l. The result is verified to be an LPP companion of f.
MPoly klenian_companion(const EKlenianGroup& group, const MPoly& f,
                        const KlenianCompanionOptions& opts = {});

/// Pairwise-orthogonal bivariate polynomials over a common field.
struct MolsSet {
    std::vector<MPoly> polys;
    int q() const { return polys.empty() ? 0 : polys.front().field().q(); }
    int size() const { return static_cast<int>(polys.size()); }
};

/// {f + a*g : a in F_q^*} for a companion LPP pair; size q-1, pairwise
/// orthogonal. Members need not all be Latin; all_members_latin reports that
/// separately.
MolsSet mols_from_pair(const MPoly& f, const MPoly& g);

/// {f(x) + a*h(y) : a in F_q^*} for univariate permutation polynomials f, h;
/// a complete set of genuinely Latin squares.
MolsSet mols_separated(const Field::Ptr& field, const MPoly& f, const MPoly& h);

/// Pairwise orthogonality over a common order (singletons are vacuously true).
bool is_mols(const MolsSet& set);
/// size == q-1.
bool is_complete(const MolsSet& set);
bool all_members_latin(const MolsSet& set);

} // namespace lppforge

#endif
