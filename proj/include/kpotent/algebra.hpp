#pragma once

/*
 * Generalized quaternion algebras H(a,b) and octonion algebras O(a,b,c) over
 * any supported field.
 *
 * Products follow the printed multiplication tables (basis 1, f1, ..., f7):
 *
 *   H(a,b):    f1^2 = a, f2^2 = b, f3^2 = -ab, f1 f2 = f3 = -f2 f1,
 *              f1 f3 = a f2, f2 f3 = -b f1 (and anti-commuted counterparts)
 *   O(a,b,c):  f4^2 = c, f5^2 = -ac, f6^2 = -bc, f7^2 = abc, f1 f4 = f5, ...
 *
 * The octonion table is also reachable through the Cayley-Dickson doubling
 * x = x' + x'' f4 (x', x'' in H(a,b)), implemented independently by
 * cayley_dickson_multiply() so the two routes can be checked against each
 * other.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "kpotent/exactfield.hpp"

namespace kpotent {

/// f_i * f_j = coefficient * f_basis
struct ProductTerm {
    std::size_t basis;
    FieldElement coefficient;
};

/// Quaternion (Dim = 4) or octonion (Dim = 8) algebra with fixed structure
/// constants. Cheap to copy: the table is shared.
template <std::size_t Dim>
class Algebra {
    static_assert(Dim == 4 || Dim == 8);

public:
    static constexpr std::size_t dimension = Dim;
    static constexpr std::size_t parameter_count = Dim == 4 ? 2 : 3;

    /// H(a,b). Throws PreconditionError when a or b is zero, MismatchError on mixed fields.
    Algebra(const FieldElement& a, const FieldElement& b)
        requires(Dim == 4);
    /// O(a,b,c). Throws PreconditionError when a, b or c is zero.
    Algebra(const FieldElement& a, const FieldElement& b, const FieldElement& c)
        requires(Dim == 8);

    const FieldSpec& field() const noexcept;
    const FieldElement& a() const noexcept { return parameter(0); }
    const FieldElement& b() const noexcept { return parameter(1); }
    const FieldElement& c() const noexcept
        requires(Dim == 8)
    {
        return parameter(2);
    }
    const FieldElement& parameter(std::size_t i) const noexcept;

    /// f_i * f_j from the multiplication table.
    const ProductTerm& product(std::size_t i, std::size_t j) const noexcept;

    /// Weight of x_i^2 in the norm form: 1, -a, -b, ab, -c, ac, bc, -abc.
    const FieldElement& norm_weight(std::size_t i) const noexcept;

    /// H(a,b) sitting inside O(a,b,c) as span{1, f1, f2, f3}.
    Algebra<4> quaternion_part() const
        requires(Dim == 8);

    /// "H(a,b) over F" / "O(a,b,c) over F".
    std::string to_string() const;

    friend bool operator==(const Algebra& x, const Algebra& y) {
        return x.state_ == y.state_ || x.state_->parameters == y.state_->parameters;
    }

private:
    struct State {
        std::array<FieldElement, parameter_count> parameters;
        std::array<std::array<ProductTerm, Dim>, Dim> table;
        std::array<FieldElement, Dim> norm_weights;
        std::conditional_t<Dim == 8, std::shared_ptr<const Algebra<4>>, std::monostate> quaternion_part;
    };

    void build();

    std::shared_ptr<const State> state_;
};

using QuatAlgebra = Algebra<4>;
using OctAlgebra = Algebra<8>;

/// x = x_0 + x_1 f1 + ... + x_{Dim-1} f_{Dim-1}.
template <std::size_t Dim>
class Element {
public:
    using Coords = std::array<FieldElement, Dim>;

    /// Throws MismatchError when a coordinate lies outside the algebra's field.
    Element(Algebra<Dim> algebra, Coords coords);

    static Element zero(const Algebra<Dim>& algebra);
    static Element one(const Algebra<Dim>& algebra);
    static Element scalar(const Algebra<Dim>& algebra, const FieldElement& value);
    /// f_i (f_0 = 1).
    static Element basis(const Algebra<Dim>& algebra, std::size_t i);
    /// Coordinates given as integers mapped into the algebra's field.
    static Element from_ints(const Algebra<Dim>& algebra, const std::array<std::int64_t, Dim>& values);

    const Algebra<Dim>& algebra() const noexcept { return algebra_; }
    const FieldSpec& field() const noexcept { return algebra_.field(); }
    const Coords& coords() const noexcept { return coords_; }
    const FieldElement& operator[](std::size_t i) const noexcept { return coords_[i]; }

    bool is_zero() const noexcept;

    Element operator-() const;
    Element operator+(const Element& y) const;
    Element operator-(const Element& y) const;
    /// Product from the multiplication table.
    Element operator*(const Element& y) const;

    friend Element operator*(const FieldElement& lambda, const Element& x) {
        Coords out;
        for (std::size_t i = 0; i < Dim; ++i) out[i] = lambda * x.coords_[i];
        return Element(x.algebra_, std::move(out));
    }

    /// Comma-separated coordinate literal, e.g. "2,3,1,3".
    std::string to_string() const;

    friend bool operator==(const Element& x, const Element& y) {
        return x.algebra_ == y.algebra_ && x.coords_ == y.coords_;
    }

private:
    Algebra<Dim> algebra_;
    Coords coords_;
};

using Quaternion = Element<4>;
using Octonion = Element<8>;

/// Octonion product through the Cayley-Dickson doubling
///   (p + q f4)(r + s f4) = (pr + c s̄ q) + (s p + q r̄) f4,   p, q, r, s in H(a,b).
/// This is the one doubling convention that reproduces the multiplication
/// table on all 64 basis pairs.
Octonion cayley_dickson_multiply(const Octonion& x, const Octonion& y);

/// x = x' + x'' f4.
std::pair<Quaternion, Quaternion> split(const Octonion& x);
Octonion join(const OctAlgebra& algebra, const Quaternion& head, const Quaternion& tail);

template <std::size_t Dim>
Element<Dim> conjugate(const Element<Dim>& x);

/// t(x) = x + x̄ = 2 x_0.
template <std::size_t Dim>
FieldElement trace(const Element<Dim>& x);

/// n(x) = x x̄, evaluated as the diagonal quadratic form.
template <std::size_t Dim>
FieldElement norm(const Element<Dim>& x);

/// x^n by left-to-right repeated multiplication, x^0 = 1.
template <std::size_t Dim>
Element<Dim> power(const Element<Dim>& x, std::uint64_t n);

/// x^-1 = x̄ / n(x). Throws ArithmeticError when n(x) = 0.
template <std::size_t Dim>
Element<Dim> inverse(const Element<Dim>& x);

/// Whether x^2 - t(x) x + n(x) = 0. Always true; a self-test hook.
template <std::size_t Dim>
bool satisfies_quadratic_identity(const Element<Dim>& x);

/// Parses exactly Dim comma-separated scalars in the algebra's field.
template <std::size_t Dim>
Element<Dim> parse_element(const Algebra<Dim>& algebra, std::string_view text);

/// Comma-separated scalars in `field`; used for directions and parameters.
std::vector<FieldElement> parse_scalar_list(const FieldSpec& field, std::string_view text);

} // namespace kpotent
