#ifndef LPPFORGE_FIELD_HPP
#define LPPFORGE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lppforge/error.hpp"

namespace lppforge {

/// Element of GF(p^r), encoded as sum coeffs[i]*p^i over the power basis
/// of the modulus root. Encodings range over [0, q).
using felem = std::uint16_t;

/// Largest supported field order. Arithmetic uses full q*q tables, so this
/// stays deliberately small.
inline constexpr int kMaxFieldOrder = 512;

/// GF(p^r) with an explicit element enumeration c_0..c_{q-1}.
///
/// The enumeration ("order") is part of the field's identity: every
/// combinatorial structure downstream (tuples, grids, block generators)
/// refers to elements by their index in it. Instances are immutable after
/// construction and safe to share across threads.
class Field {
public:
    using Ptr = std::shared_ptr<const Field>;

    /// Build GF(p^r). If modulus is omitted, the monic irreducible of degree r
    /// with the smallest base-p coefficient encoding is chosen. If order is
    /// omitted, elements are enumerated by their base-p integer encoding.
    /// modulus: length r+1, low-to-high degree, monic.
    /// order: q coefficient vectors (each length r, entries in [0,p)).
    static Ptr make(int p, int r,
                    std::optional<std::vector<int>> modulus = std::nullopt,
                    std::optional<std::vector<std::vector<int>>> order = std::nullopt);

    int p() const { return p_; }
    int r() const { return r_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    felem zero() const { return 0; }
    felem one() const { return 1; }

    felem add(felem a, felem b) const { return add_[a * q_ + b]; }
    felem sub(felem a, felem b) const { return add_[a * q_ + neg_[b]]; }
    felem neg(felem a) const { return neg_[a]; }
    felem mul(felem a, felem b) const { return mul_[a * q_ + b]; }
    felem inv(felem a) const;
    felem pow(felem a, long k) const;

    /// Image of an integer in the prime subfield.
    felem from_int(long v) const;

    /// The element enumeration c_0..c_{q-1} (as encodings).
    const std::vector<felem>& order() const { return order_; }
    felem element(int idx) const;
    int index_of(felem a) const { return index_[a]; }

    std::vector<int> coeffs(felem a) const;
    felem from_coeffs(const std::vector<int>& c) const;

    /// Multiplicative order of a nonzero element.
    int mult_order(felem a) const;

    /// Generator of the multiplicative group, smallest under the element order.
    felem primitive_element() const;

    /// Human-readable label, e.g. "0", "2", "u", "2u+1", "u^2+u".
    std::string label(felem a) const;
    /// Lenient inverse of label(); accepts forms like "2u+1", "u^2 + 2", "-1".
    felem parse(const std::string& text) const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.p_ == b.p_ && a.r_ == b.r_ && a.modulus_ == b.modulus_ && a.order_ == b.order_;
    }

private:
    Field() = default;

    int p_ = 0, r_ = 0, q_ = 0;
    std::vector<int> modulus_;           // length r+1, low-to-high, monic
    std::vector<felem> add_, mul_;       // q*q operation tables
    std::vector<felem> neg_, inv_;
    std::vector<felem> order_;           // index -> encoding
    std::vector<int> index_;             // encoding -> index
};

/// True iff fields are structurally identical (same p, r, modulus, order).
inline bool same_field(const Field& a, const Field& b) { return &a == &b || a == b; }

} // namespace lppforge

#endif
