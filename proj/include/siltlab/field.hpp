#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "siltlab/error.hpp"

namespace siltlab {

/// A field element: residues mod p live in the int64 alternative,
/// rationals in the mpq alternative. Elements do not know their field;
/// the Field object drives all arithmetic.
using Scalar = std::variant<std::int64_t, mpq_class>;

enum class FieldKind { Prime, Rationals };

/// Exact coefficient field: F_p for a prime p <= 2^31, or Q.
/// All operations are exact; division by a nonzero element always succeeds.
class Field {
public:
    static Field fp(std::int64_t p);
    static Field rationals();

    /// Parses "Fp:<p>" or "Q".
    static Field parse(const std::string& spec);

    FieldKind kind() const { return kind_; }
    std::int64_t characteristic() const { return kind_ == FieldKind::Prime ? p_ : 0; }
    std::string name() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t n) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const;

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;

    /// Decimal residue for F_p, "num" or "num/den" for Q.
    std::string to_string(const Scalar& a) const;
    /// Inverse of to_string; accepts any integer (reduced mod p) and
    /// "num/den" over Q.
    Scalar parse_scalar(const std::string& s) const;

    bool operator==(const Field& other) const {
        return kind_ == other.kind_ && p_ == other.p_;
    }
    bool operator!=(const Field& other) const { return !(*this == other); }

private:
    Field(FieldKind kind, std::int64_t p) : kind_(kind), p_(p) {}

    std::int64_t norm(std::int64_t v) const {
        v %= p_;
        return v < 0 ? v + p_ : v;
    }

    FieldKind kind_;
    std::int64_t p_;  // 0 for Q
};

}  // namespace siltlab
