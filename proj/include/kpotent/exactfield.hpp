#pragma once

/*
 * Exact scalar arithmetic for the three coefficient fields used throughout the
 * library:
 *
 *   - Z_p for an odd prime p that fits in a 64-bit word,
 *   - the rationals Q,
 *   - a real quadratic extension Q(sqrt d), d > 1 squarefree.
 *
 * Every FieldElement carries its FieldSpec, is stored in canonical form
 * (residue in [0, p-1], reduced fractions) and is immutable, so structural
 * equality is field equality.
 *
 * Scalar text grammar (shared by the CLI and the JSON/CSV emitters):
 *
 *   Z_p       [+-]digits              reduced mod p
 *   Q         [+-]n  |  [+-]n/m
 *   Q(sqrt d) r  |  r's  |  r+r's  |  r-r's      where `s` stands for sqrt d
 *
 * e.g. "1/2+1/2s", "-3s", "0".  parse(print(x)) == x for every element.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/gmp.hpp>

#include "kpotent/error.hpp"

namespace kpotent {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// r + s*sqrt(d), with d supplied by the owning FieldSpec.
struct QuadNumber {
    Rational rational;
    Rational radical;

    friend bool operator==(const QuadNumber&, const QuadNumber&) = default;
};

class FieldElement;

/// Largest prime for which square roots are supported (exhaustive scan).
inline constexpr std::uint64_t kMaxSqrtPrime = std::uint64_t{1} << 20;

/// Largest radicand accepted for Q(sqrt d); keeps the squarefree check cheap.
inline constexpr std::int64_t kMaxRadicand = std::int64_t{1} << 40;

class FieldSpec {
public:
    enum class Kind : std::uint8_t { prime, rationals, quadratic };

    /// Z_p. Throws PreconditionError unless p is an odd prime.
    static FieldSpec prime(std::uint64_t p);
    static FieldSpec rationals() noexcept;
    /// Q(sqrt d). Throws PreconditionError unless 1 < d <= kMaxRadicand is squarefree.
    static FieldSpec quadratic(std::int64_t d);

    /// Parses `f<p>`, `q` or `q[sqrt<d>]`.
    static FieldSpec parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    bool is_prime() const noexcept { return kind_ == Kind::prime; }
    /// Characteristic p for Z_p, 0 otherwise.
    std::uint64_t modulus() const noexcept { return modulus_; }
    /// d for Q(sqrt d), 0 otherwise.
    std::int64_t radicand() const noexcept { return radicand_; }

    /// Inverse of parse().
    std::string to_string() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(std::int64_t value) const;
    FieldElement from_integer(const BigInt& value) const;
    /// n/m mapped into the field; for Z_p this is n * m^-1 mod p.
    FieldElement from_rational(const Rational& value) const;
    /// sqrt(d) itself. Only valid for Q(sqrt d).
    FieldElement radical_unit() const;

    /// Parses one scalar literal (see file comment). `offset` is added to the
    /// position reported by ParseError.
    FieldElement parse_scalar(std::string_view text, std::size_t offset = 0) const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind kind, std::uint64_t modulus, std::int64_t radicand) noexcept
        : kind_(kind), modulus_(modulus), radicand_(radicand) {}

    Kind kind_;
    std::uint64_t modulus_;
    std::int64_t radicand_;
};

class FieldElement {
public:
    /// Zero of Q; placeholder for default-constructed containers.
    FieldElement();

    const FieldSpec& field() const noexcept { return field_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Residue in [0, p-1]. Requires a prime field.
    std::uint64_t residue() const;
    /// Value as a rational. Requires Q, or Q(sqrt d) with zero radical part.
    Rational to_rational() const;
    /// (r, s) for r + s sqrt d. Requires Q(sqrt d).
    const QuadNumber& quadratic() const;

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
    /// Throws ArithmeticError when y is zero.
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y);

    /// In place; avoids a temporary per accumulation step.
    FieldElement& operator+=(const FieldElement& y);
    FieldElement& operator-=(const FieldElement& y);
    FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }

    /// Multiplicative inverse. Throws ArithmeticError on zero.
    FieldElement inverse() const;

    /// Canonical square root: the smaller residue in Z_p, and in Q / Q(sqrt d)
    /// the root that is non-negative under the real embedding sqrt d > 0.
    /// Z_p roots are found by exhaustive scan and need p < kMaxSqrtPrime.
    /// Throws ArithmeticError("not a square in this field") when no root exists.
    FieldElement sqrt() const;

    /// Sign under the real embedding (-1, 0, 1). Requires Q or Q(sqrt d).
    int sign() const;

    std::string to_string() const;
    /// Like to_string(), but Z_p residues above p/2 print as negatives (4 in f5 is "-1").
    std::string to_signed_string() const;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    friend class FieldSpec;
    using Value = std::variant<std::uint64_t, Rational, QuadNumber>;

    FieldElement(FieldSpec field, Value value) : field_(field), value_(std::move(value)) {}

    FieldSpec field_;
    Value value_;
};

FieldElement pow(const FieldElement& base, std::uint64_t exponent);

/// Parses `n` or `n/m` into a reduced rational (m != 0).
Rational parse_rational(std::string_view text, std::size_t offset = 0);
std::string format_rational(const Rational& value);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

} // namespace kpotent
