#ifndef LPPFORGE_KLENIAN_HPP
#define LPPFORGE_KLENIAN_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "lppforge/lpp.hpp"

namespace lppforge {

using bigint = boost::multiprecision::cpp_int;

/// Abelian fixed-point-free group of order q = p^r generated by alpha
/// (t disjoint l-cycles) and beta (l disjoint t-cycles), l = p^e, t = p^(r-e).
/// Degenerate e in {0, r} collapses one generator to the identity.
/// elements[i + j*l] = alpha^i beta^j.
struct EKlenianGroup {
    Field::Ptr field;
    int e = 0;
    int l = 1;
    int t = 1;
    Perm alpha, beta;
    std::vector<Perm> elements;
};

/// Canonical block generators over the field's element order:
/// alpha: c_{j+il} -> c_{((j+1) mod l)+il}, beta: c_{j+il} -> c_{j+((i+1) mod t)l}.
std::pair<Perm, Perm> eklenian_generators(const Field::Ptr& field, int e);

EKlenianGroup eklenian_group(const Field::Ptr& field, int e);

/// Validates the generator invariants (cycle structure, commutativity, q
/// distinct fixed-point-free products) before assembling the group.
EKlenianGroup eklenian_group_from_generators(const Field::Ptr& field, int e, Perm alpha,
                                             Perm beta);

/// e = 0 group generated by a single q-cycle.
EKlenianGroup cycle_group(const Field::Ptr& field, const Perm& beta);

/// The LPP whose tuple is (base * alpha^i beta^j) at level n = i + j*l.
MPoly eklenian_poly(const EKlenianGroup& group, const Perm& base);
MPoly eklenian_poly(const EKlenianGroup& group);

/// q!(q-1)!/phi(q), the number of distinct 0-Klenian polynomials.
bigint count_0klenian_polys(int p, int r);
bigint count_0klenian_polys(const Field::Ptr& field);

/// (q-1)! * N polynomials are equivalent to e-Klenian ones, N the e-Klenian
/// polynomial count.
bigint count_equivalent_to_eklenian(int q, const bigint& n_klenian);

/// Closed under composition, contains the identity, and every non-identity
/// element moves every point.
bool is_fpf_subgroup(const std::vector<Perm>& perms);

/// tuple_to_lpp over an explicit ordering of a fixed-point-free subgroup.
MPoly group_polynomial(const Field::Ptr& field, const std::vector<Perm>& ordered_elements);

/// If the set is an e-Klenian group, its canonical parameter e (0 <= e <= r/2);
/// empty otherwise.
std::optional<int> eklenian_parameter(const std::vector<Perm>& elements, int p, int r);

struct EKlenianEquivalence {
    Perm sigma, delta;    // witnesses: sigma * (group ordering) * delta = tuple
    EKlenianGroup group;
};

/// True (with witness) iff the tuple set of f is a left coset of an e-Klenian
/// group of the requested parameter, i.e. f is equivalent to some e-Klenian
/// polynomial.
std::optional<EKlenianEquivalence> is_equivalent_to_eklenian(const MPoly& f, int e);

} // namespace lppforge

#endif
