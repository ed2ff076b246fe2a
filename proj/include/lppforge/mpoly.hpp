#ifndef LPPFORGE_MPOLY_HPP
#define LPPFORGE_MPOLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lppforge/field.hpp"

namespace lppforge {

/// Largest field order for table-based operations (interpolation, exhaustive
/// predicates). Point tables have q^n entries.
inline constexpr int kMaxTableOrder = 16;

using ExpVec = std::vector<std::uint16_t>;

/// Descending graded lexicographic order: higher total degree first, ties
/// broken lexicographically. Map iteration order doubles as the canonical
/// serialization order.
struct GradedLexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        long da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

/// Multivariate polynomial over GF(q) in reduced form: every per-variable
/// exponent < q, no zero coefficients stored. Equal term maps <=> equal
/// functions. Immutable value; all operations are pure.
class MPoly {
public:
    using Terms = std::map<ExpVec, felem, GradedLexDesc>;

    MPoly(Field::Ptr field, int nvars);  // zero polynomial

    static MPoly constant(Field::Ptr field, int nvars, felem c);
    static MPoly variable(Field::Ptr field, int nvars, int var);
    static MPoly monomial(Field::Ptr field, int nvars, const std::vector<long>& exps, felem c);

    const Field& field() const { return *field_; }
    const Field::Ptr& field_ptr() const { return field_; }
    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Max term degree; empty for the zero polynomial (no NoTerms sentinel
    /// integer leaks into degree comparisons).
    std::optional<long> total_degree() const;
    int monomial_count() const { return static_cast<int>(terms_.size()); }
    felem coeff(const std::vector<long>& exps) const;

    felem eval(std::span<const felem> point) const;

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && same_field(*a.field_, *b.field_) && a.terms_ == b.terms_;
    }

    friend MPoly add(const MPoly& a, const MPoly& b);
    friend MPoly sub(const MPoly& a, const MPoly& b);
    friend MPoly scale(const MPoly& a, felem c);
    friend MPoly multiply(const MPoly& a, const MPoly& b);
    friend MPoly interpolate(const Field::Ptr& field, int nvars, std::span<const felem> table);

private:
    void add_term(const ExpVec& exps, felem c);  // accumulate, dropping zeros

    Field::Ptr field_;
    int nvars_;
    Terms terms_;
};

MPoly add(const MPoly& a, const MPoly& b);
MPoly sub(const MPoly& a, const MPoly& b);
MPoly scale(const MPoly& a, felem c);
MPoly multiply(const MPoly& a, const MPoly& b);
MPoly power(const MPoly& a, long k);

/// g(f(..)) for univariate g; exponents stay reduced throughout.
MPoly compose_univariate(const MPoly& g, const MPoly& f);

/// Unique reduced polynomial agreeing with a total value table on F_q^n.
/// table[I] is the value (encoding) at the point whose variable-i coordinate
/// is c_d with d the i-th most significant base-q digit of I.
MPoly interpolate(const Field::Ptr& field, int nvars, std::span<const felem> table);

/// Value table of f in the same indexing interpolate() consumes.
std::vector<felem> value_table(const MPoly& f);

/// x^q = x exponent reduction: 0 stays 0, otherwise 1 + (e-1) mod (q-1).
inline long reduce_exponent(long e, int q) {
    if (e <= 0) return 0;
    return 1 + (e - 1) % (q - 1);
}

} // namespace lppforge

#endif
