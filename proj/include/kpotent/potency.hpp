#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

#include "kpotent/algebra.hpp"
#include "kpotent/exactfield.hpp"
#include "kpotent/represent.hpp"

namespace kpotent {

inline constexpr std::uint64_t kDefaultMaxK = 64;

enum class PotencyKind { k_potent, nilpotent, none };

/// "k-potent", "nilpotent", "none".
std::string to_string(PotencyKind kind);
PotencyKind parse_potency_kind(std::string_view text);

/// Classification of one element.
///
/// k_potent:  index is the smallest k > 1 with x^k = x.
/// nilpotent: index is the smallest n with x^n = 0 (x != 0).
/// none:      neither happened for exponents up to index (= max_k).
struct PotencyReport {
    PotencyKind kind;
    std::uint64_t index;
    FieldElement trace;
    FieldElement norm;

    friend bool operator==(const PotencyReport&, const PotencyReport&) = default;
};

/// Successive powers x^2, x^3, ..., x^max_k, stopping at the first x^k = x or
/// x^k = 0. Zero is idempotent (0^2 = 0).
///
/// Over Q and Q(sqrt d) with all parameters -1 the algebra is a division
/// algebra with positive definite norm, so a k-potent must have norm 0 or 1;
/// any other norm short-circuits to `none`.
///
/// Throws PreconditionError when max_k < 2.
template <std::size_t Dim>
PotencyReport classify(const Element<Dim>& x, std::uint64_t max_k = kDefaultMaxK);

/// Same classification for a matrix: smallest k > 1 with M^k = M, or smallest
/// n with M^n = 0.
struct MatrixPotency {
    PotencyKind kind;
    std::uint64_t index;

    friend bool operator==(const MatrixPotency&, const MatrixPotency&) = default;
};
MatrixPotency classify_matrix(const SquareMatrix& m, std::uint64_t max_k = kDefaultMaxK);

/// Whether a representation matrix of a classified element behaves as the
/// report says: M^(k-1) M = M for k-potents, M^n = 0 for nilpotents.
/// Reports of kind `none` are never confirmed.
bool representation_confirms(const PotencyReport& report, const SquareMatrix& m);

/// cos(2 pi / (k-1)) + theta sin(2 pi / (k-1)) in H(-1,-1) over Q or Q(sqrt d),
/// with theta the unit pure quaternion along `direction`.
///
/// Supported k are 3, 4, 5, 7 (k - 1 in {2, 3, 4, 6}); the scaling factor
/// sin(alpha) / |direction| must exist in the field.
/// The result x satisfies x^(k-1) = 1 and classifies as k-potent with index k.
///
/// Throws PreconditionError for unsupported k, a non-rotor algebra, or a
/// direction that cannot be normalized in the field.
Quaternion rotor_generate(std::uint64_t k, std::span<const FieldElement, 3> direction, const QuatAlgebra& algebra);

/// The k values rotor_generate() accepts.
std::span<const std::uint64_t> supported_rotor_orders();

/// Checks x^m = cos(m alpha) + theta sin(m alpha) for all m <= n, where
/// x = cos_alpha + pure in H(-1,-1). The multiple-angle values come from
/// the recursions cos((m+1)a) = 2 cos(a) cos(ma) - cos((m-1)a) and the
/// matching one for sin(ma) / sin(a), so no square roots are needed.
bool demoivre_power_check(const FieldElement& cos_alpha, std::span<const FieldElement, 3> pure, std::uint64_t n);

enum class SplitKind { idempotent, tripotent, nilpotent };

std::string to_string(SplitKind kind);
SplitKind parse_split_kind(std::string_view text);

/// Norm-zero elements of a split algebra.
///
/// idempotent: 1/2 + lambda v, tripotent: -1/2 + lambda v, with lambda^2 = -1 / (4 N(v))
/// chosen so that n(x) = 0 (N is the norm form restricted to the pure part).
/// nilpotent: v itself, which requires N(v) = 0 and v != 0.
///
/// Throws PreconditionError when the direction cannot be used.
template <std::size_t Dim>
Element<Dim> split_generate(SplitKind kind, const Algebra<Dim>& algebra,
                            std::span<const FieldElement, Dim - 1> direction);

/// {"kind": ..., "index": ..., "trace": ..., "norm": ...}
nlohmann::json to_json(const PotencyReport& report);

} // namespace kpotent
