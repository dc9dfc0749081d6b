#include "kpotent/potency.hpp"

#include <array>

namespace kpotent {

namespace {

constexpr std::array<std::uint64_t, 4> kRotorOrders{3, 4, 5, 7};

template <std::size_t Dim>
bool is_definite_rational(const Algebra<Dim>& algebra) {
    if (algebra.field().is_prime()) return false;
    const FieldElement minus_one = algebra.field().from_int(-1);
    for (std::size_t i = 0; i < Algebra<Dim>::parameter_count; ++i) {
        if (algebra.parameter(i) != minus_one) return false;
    }
    return true;
}

/// cos(2 pi / (k-1)) for the supported orders.
Rational rotor_cosine(std::uint64_t k) {
    switch (k) {
    case 3:
        return Rational(-1);
    case 4:
        return Rational(-1, 2);
    case 5:
        return Rational(0);
    case 7:
        return Rational(1, 2);
    default:
        break;
    }
    throw PreconditionError("unsupported k = " + std::to_string(k) + "; supported k: 3, 4, 5, 7");
}

[[noreturn]] void throw_not_normalizable() { throw PreconditionError("direction not normalizable in field"); }

FieldElement checked_sqrt(const FieldElement& x) {
    try {
        return x.sqrt();
    } catch (const ArithmeticError&) {
        throw_not_normalizable();
    }
}

} // namespace

std::string to_string(PotencyKind kind) {
    switch (kind) {
    case PotencyKind::k_potent:
        return "k-potent";
    case PotencyKind::nilpotent:
        return "nilpotent";
    case PotencyKind::none:
        return "none";
    }
    return {};
}

PotencyKind parse_potency_kind(std::string_view text) {
    if (text == "k-potent") return PotencyKind::k_potent;
    if (text == "nilpotent") return PotencyKind::nilpotent;
    if (text == "none") return PotencyKind::none;
    throw ParseError("unknown potency kind '" + std::string(text) + "'", 0);
}

template <std::size_t Dim>
PotencyReport classify(const Element<Dim>& x, std::uint64_t max_k) {
    if (max_k < 2) throw PreconditionError("max_k must be at least 2");
    PotencyReport report{PotencyKind::none, max_k, trace(x), norm(x)};
    if (is_definite_rational(x.algebra()) && !report.norm.is_zero() && !report.norm.is_one()) return report;

    Element<Dim> current = x;
    for (std::uint64_t k = 2; k <= max_k; ++k) {
        current = current * x;
        if (current == x) {
            report.kind = PotencyKind::k_potent;
            report.index = k;
            return report;
        }
        if (current.is_zero()) {
            report.kind = PotencyKind::nilpotent;
            report.index = k;
            return report;
        }
    }
    return report;
}

MatrixPotency classify_matrix(const SquareMatrix& m, std::uint64_t max_k) {
    if (max_k < 2) throw PreconditionError("max_k must be at least 2");
    SquareMatrix current = m;
    for (std::uint64_t k = 2; k <= max_k; ++k) {
        current = current * m;
        if (current == m) return {PotencyKind::k_potent, k};
        if (current.is_zero()) return {PotencyKind::nilpotent, k};
    }
    return {PotencyKind::none, max_k};
}

bool representation_confirms(const PotencyReport& report, const SquareMatrix& m) {
    switch (report.kind) {
    case PotencyKind::k_potent:
        return power(m, report.index - 1) * m == m;
    case PotencyKind::nilpotent:
        return power(m, report.index).is_zero() && !power(m, report.index - 1).is_zero();
    case PotencyKind::none:
        return false;
    }
    return false;
}

std::span<const std::uint64_t> supported_rotor_orders() { return kRotorOrders; }

Quaternion rotor_generate(std::uint64_t k, std::span<const FieldElement, 3> direction, const QuatAlgebra& algebra) {
    if (!is_definite_rational(algebra)) {
        throw PreconditionError("rotor generation needs H(-1,-1) over q or q[sqrt d], got " + algebra.to_string());
    }
    const FieldSpec& field = algebra.field();
    const FieldElement cosine = field.from_rational(rotor_cosine(k));
    const FieldElement sine_squared = field.one() - cosine * cosine;

    FieldElement length_squared = field.zero();
    for (const auto& d : direction) length_squared += d * d;
    if (length_squared.is_zero()) throw_not_normalizable();

    const FieldElement scale = checked_sqrt(sine_squared / length_squared);
    return Quaternion(algebra, {cosine, scale * direction[0], scale * direction[1], scale * direction[2]});
}

bool demoivre_power_check(const FieldElement& cos_alpha, std::span<const FieldElement, 3> pure, std::uint64_t n) {
    const FieldSpec& field = cos_alpha.field();
    const FieldElement minus_one = field.from_int(-1);
    const QuatAlgebra algebra(minus_one, minus_one);
    const Quaternion theta_part(algebra, {field.zero(), pure[0], pure[1], pure[2]});
    const Quaternion x = Quaternion::scalar(algebra, cos_alpha) + theta_part;
    const FieldElement twice_cos = cos_alpha + cos_alpha;

    // cos(m a) and sin(m a) / sin(a) for m-1 and m.
    FieldElement cos_prev = field.one();
    FieldElement cos_cur = cos_alpha;
    FieldElement sin_prev = field.zero();
    FieldElement sin_cur = field.one();
    Quaternion x_m = x;
    for (std::uint64_t m = 1; m <= n; ++m) {
        if (m > 1) {
            x_m = x_m * x;
            FieldElement cos_next = twice_cos * cos_cur - cos_prev;
            FieldElement sin_next = twice_cos * sin_cur - sin_prev;
            cos_prev = std::move(cos_cur);
            cos_cur = std::move(cos_next);
            sin_prev = std::move(sin_cur);
            sin_cur = std::move(sin_next);
        }
        if (x_m != Quaternion::scalar(algebra, cos_cur) + sin_cur * theta_part) return false;
    }
    return true;
}

std::string to_string(SplitKind kind) {
    switch (kind) {
    case SplitKind::idempotent:
        return "idempotent";
    case SplitKind::tripotent:
        return "tripotent";
    case SplitKind::nilpotent:
        return "nilpotent";
    }
    return {};
}

SplitKind parse_split_kind(std::string_view text) {
    if (text == "idempotent") return SplitKind::idempotent;
    if (text == "tripotent") return SplitKind::tripotent;
    if (text == "nilpotent") return SplitKind::nilpotent;
    throw ParseError("unknown split kind '" + std::string(text) + "'", 0);
}

template <std::size_t Dim>
Element<Dim> split_generate(SplitKind kind, const Algebra<Dim>& algebra,
                            std::span<const FieldElement, Dim - 1> direction) {
    const FieldSpec& field = algebra.field();
    typename Element<Dim>::Coords coords;
    coords[0] = field.zero();
    FieldElement pure_norm = field.zero();
    bool all_zero = true;
    for (std::size_t i = 1; i < Dim; ++i) {
        coords[i] = direction[i - 1];
        if (coords[i].field() != field) throw MismatchError("direction lies outside " + field.to_string());
        all_zero = all_zero && coords[i].is_zero();
        pure_norm += algebra.norm_weight(i) * (coords[i] * coords[i]);
    }
    if (all_zero) throw PreconditionError("direction must be nonzero");

    if (kind == SplitKind::nilpotent) {
        if (!pure_norm.is_zero()) {
            throw PreconditionError("nilpotent generation needs a direction of norm zero, got norm " +
                                    pure_norm.to_string());
        }
        return Element<Dim>(algebra, std::move(coords));
    }

    if (pure_norm.is_zero()) throw_not_normalizable();
    const FieldElement four = field.from_int(4);
    const FieldElement scale = checked_sqrt(-(four * pure_norm).inverse());
    for (std::size_t i = 1; i < Dim; ++i) coords[i] = scale * coords[i];
    const FieldElement half = field.from_rational(Rational(1, 2));
    coords[0] = kind == SplitKind::idempotent ? half : -half;
    return Element<Dim>(algebra, std::move(coords));
}

nlohmann::json to_json(const PotencyReport& report) {
    return nlohmann::json{{"kind", to_string(report.kind)},
                          {"index", report.index},
                          {"trace", report.trace.to_string()},
                          {"norm", report.norm.to_string()}};
}

template PotencyReport classify(const Element<4>&, std::uint64_t);
template PotencyReport classify(const Element<8>&, std::uint64_t);
template Element<4> split_generate(SplitKind, const Algebra<4>&, std::span<const FieldElement, 3>);
template Element<8> split_generate(SplitKind, const Algebra<8>&, std::span<const FieldElement, 7>);

} // namespace kpotent
