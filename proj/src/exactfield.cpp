#include "kpotent/exactfield.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <optional>

namespace kpotent {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<u128>(x) * y % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exponent != 0) {
        if (exponent & 1U) result = mulmod(result, base, p);
        base = mulmod(base, base, p);
        exponent >>= 1U;
    }
    return result;
}

std::uint64_t reduce(const BigInt& value, std::uint64_t p) {
    BigInt r = value % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint64_t>();
}

bool is_squarefree(std::int64_t d) {
    for (std::int64_t f = 2; f * f <= d; ++f) {
        if (d % (f * f) == 0) return false;
    }
    return true;
}

/// Exact non-negative root of a rational, when both parts are perfect squares.
std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    const BigInt rn = boost::multiprecision::sqrt(num);
    const BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

int sign_of(const Rational& x) { return x.sign(); }

/// Sign of r + s sqrt(d) with sqrt(d) > 0.
int quad_sign(const Rational& r, const Rational& s, std::int64_t d) {
    const int sr = sign_of(r);
    const int ss = sign_of(s);
    if (ss == 0) return sr;
    if (sr == 0) return ss;
    if (sr == ss) return sr;
    // Opposite signs: the larger magnitude wins.
    const Rational lhs = r * r;
    const Rational rhs = s * s * d;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sr : ss;
}

[[noreturn]] void throw_mismatch(const FieldSpec& x, const FieldSpec& y) {
    throw MismatchError("operands belong to different fields: " + x.to_string() + " vs " + y.to_string());
}

[[noreturn]] void throw_not_square(const FieldElement& x) {
    throw ArithmeticError("not a square in this field: " + x.to_string() + " in " + x.field().to_string());
}

std::size_t skip_sign(std::string_view text) {
    return (!text.empty() && (text.front() == '+' || text.front() == '-')) ? 1 : 0;
}

bool all_digits(std::string_view text) {
    if (text.empty()) return false;
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch)) == 0) return false;
    }
    return true;
}

BigInt parse_integer(std::string_view text, std::size_t offset) {
    const std::size_t start = skip_sign(text);
    const std::string_view digits = text.substr(start);
    if (!all_digits(digits)) {
        throw ParseError("expected an integer, got '" + std::string(text) + "'", offset);
    }
    BigInt value{std::string(digits)};
    return (start == 1 && text.front() == '-') ? BigInt(-value) : value;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t w : witnesses) {
        if (n % w == 0) return n == w;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++r;
    }
    for (std::uint64_t w : witnesses) {
        std::uint64_t x = powmod(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Rational parse_rational(std::string_view text, std::size_t offset) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, offset));
    const BigInt num = parse_integer(text.substr(0, slash), offset);
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw ParseError("expected a positive denominator, got '" + std::string(den_text) + "'", offset + slash + 1);
    }
    const BigInt den(std::string{den_text});
    if (den == 0) throw ParseError("zero denominator", offset + slash + 1);
    return Rational(num, den);
}

std::string format_rational(const Rational& value) {
    const BigInt& den = boost::multiprecision::denominator(value);
    std::string out = boost::multiprecision::numerator(value).str();
    if (den != 1) out += "/" + den.str();
    return out;
}

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p == 2) throw PreconditionError("characteristic 2 is not supported");
    if (!is_prime_u64(p)) throw PreconditionError("modulus " + std::to_string(p) + " is not an odd prime");
    return FieldSpec(Kind::prime, p, 0);
}

FieldSpec FieldSpec::rationals() noexcept { return FieldSpec(Kind::rationals, 0, 0); }

FieldSpec FieldSpec::quadratic(std::int64_t d) {
    if (d < 2 || d > kMaxRadicand) {
        throw PreconditionError("radicand must lie in [2, 2^40], got " + std::to_string(d));
    }
    if (!is_squarefree(d)) throw PreconditionError("radicand " + std::to_string(d) + " is not squarefree");
    return FieldSpec(Kind::quadratic, 0, d);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q") return rationals();
    if (text.size() >= 2 && text.front() == 'f') {
        const std::string_view digits = text.substr(1);
        if (!all_digits(digits) || digits.size() > 20) throw ParseError("bad prime field '" + std::string(text) + "'", 1);
        const BigInt p{std::string(digits)};
        if (p > std::numeric_limits<std::uint64_t>::max()) throw PreconditionError("modulus exceeds 64 bits");
        return prime(p.convert_to<std::uint64_t>());
    }
    constexpr std::string_view prefix = "q[sqrt";
    if (text.starts_with(prefix) && text.ends_with("]")) {
        const std::string_view digits = text.substr(prefix.size(), text.size() - prefix.size() - 1);
        if (!all_digits(digits) || digits.size() > 18) {
            throw ParseError("bad radicand in '" + std::string(text) + "'", prefix.size());
        }
        return quadratic(std::stoll(std::string(digits)));
    }
    throw ParseError("unknown field '" + std::string(text) + "' (expected f<p>, q or q[sqrt<d>])", 0);
}

std::string FieldSpec::to_string() const {
    switch (kind_) {
    case Kind::prime:
        return "f" + std::to_string(modulus_);
    case Kind::rationals:
        return "q";
    case Kind::quadratic:
        return "q[sqrt" + std::to_string(radicand_) + "]";
    }
    return {};
}

FieldElement FieldSpec::zero() const { return from_int(0); }

FieldElement FieldSpec::one() const { return from_int(1); }

FieldElement FieldSpec::from_int(std::int64_t value) const { return from_integer(BigInt(value)); }

FieldElement FieldSpec::from_integer(const BigInt& value) const {
    switch (kind_) {
    case Kind::prime:
        return FieldElement(*this, reduce(value, modulus_));
    case Kind::rationals:
        return FieldElement(*this, Rational(value));
    case Kind::quadratic:
        return FieldElement(*this, QuadNumber{Rational(value), Rational(0)});
    }
    return {};
}

FieldElement FieldSpec::from_rational(const Rational& value) const {
    switch (kind_) {
    case Kind::prime: {
        const std::uint64_t den = reduce(boost::multiprecision::denominator(value), modulus_);
        if (den == 0) throw ArithmeticError("denominator vanishes mod " + std::to_string(modulus_));
        const std::uint64_t num = reduce(boost::multiprecision::numerator(value), modulus_);
        return FieldElement(*this, mulmod(num, powmod(den, modulus_ - 2, modulus_), modulus_));
    }
    case Kind::rationals:
        return FieldElement(*this, value);
    case Kind::quadratic:
        return FieldElement(*this, QuadNumber{value, Rational(0)});
    }
    return {};
}

FieldElement FieldSpec::radical_unit() const {
    if (kind_ != Kind::quadratic) throw PreconditionError("sqrt(d) only exists in a quadratic field");
    return FieldElement(*this, QuadNumber{Rational(0), Rational(1)});
}

FieldElement FieldSpec::parse_scalar(std::string_view text, std::size_t offset) const {
    if (text.empty()) throw ParseError("empty scalar", offset);
    switch (kind_) {
    case Kind::prime:
        return from_integer(parse_integer(text, offset));
    case Kind::rationals:
        if (text.back() == 's') throw ParseError("sqrt term not allowed over q", offset + text.size() - 1);
        return from_rational(parse_rational(text, offset));
    case Kind::quadratic:
        break;
    }
    if (text.back() != 's') return from_rational(parse_rational(text, offset));

    // Split "r+r's" at the last sign that is not the leading one.
    const std::string_view body = text.substr(0, text.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }
    const std::size_t coef_start = split == std::string_view::npos ? 0 : split;
    const std::string_view coef_text = body.substr(coef_start);
    Rational radical;
    if (coef_text.empty() || coef_text == "+") {
        radical = 1;
    } else if (coef_text == "-") {
        radical = -1;
    } else {
        radical = parse_rational(coef_text.front() == '+' ? coef_text.substr(1) : coef_text,
                                 offset + coef_start + (coef_text.front() == '+' ? 1 : 0));
    }
    Rational rational;
    if (split != std::string_view::npos) rational = parse_rational(body.substr(0, split), offset);
    return FieldElement(*this, QuadNumber{std::move(rational), std::move(radical)});
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement() : field_(FieldSpec::rationals()), value_(Rational(0)) {}

bool FieldElement::is_zero() const noexcept {
    switch (value_.index()) {
    case 0:
        return std::get<0>(value_) == 0;
    case 1:
        return std::get<1>(value_).is_zero();
    default: {
        const auto& q = std::get<2>(value_);
        return q.rational.is_zero() && q.radical.is_zero();
    }
    }
}

bool FieldElement::is_one() const noexcept {
    switch (value_.index()) {
    case 0:
        return std::get<0>(value_) == 1;
    case 1:
        return std::get<1>(value_) == 1;
    default: {
        const auto& q = std::get<2>(value_);
        return q.rational == 1 && q.radical.is_zero();
    }
    }
}

std::uint64_t FieldElement::residue() const {
    if (!field_.is_prime()) throw PreconditionError("residue() requires a prime field");
    return std::get<0>(value_);
}

Rational FieldElement::to_rational() const {
    if (value_.index() == 1) return std::get<1>(value_);
    if (value_.index() == 2 && std::get<2>(value_).radical.is_zero()) return std::get<2>(value_).rational;
    throw PreconditionError("element " + to_string() + " is not rational");
}

const QuadNumber& FieldElement::quadratic() const {
    if (value_.index() != 2) throw PreconditionError("quadratic() requires Q(sqrt d)");
    return std::get<2>(value_);
}

FieldElement FieldElement::operator-() const {
    switch (value_.index()) {
    case 0: {
        const std::uint64_t v = std::get<0>(value_);
        return FieldElement(field_, v == 0 ? 0 : field_.modulus() - v);
    }
    case 1:
        return FieldElement(field_, Rational(-std::get<1>(value_)));
    default: {
        const auto& q = std::get<2>(value_);
        return FieldElement(field_, QuadNumber{-q.rational, -q.radical});
    }
    }
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    if (x.field_ != y.field_) throw_mismatch(x.field_, y.field_);
    switch (x.value_.index()) {
    case 0: {
        const std::uint64_t p = x.field_.modulus();
        const std::uint64_t a = std::get<0>(x.value_);
        const std::uint64_t b = std::get<0>(y.value_);
        const std::uint64_t s = a >= p - b ? a - (p - b) : a + b;
        return FieldElement(x.field_, s);
    }
    case 1:
        return FieldElement(x.field_, Rational(std::get<1>(x.value_) + std::get<1>(y.value_)));
    default: {
        const auto& a = std::get<2>(x.value_);
        const auto& b = std::get<2>(y.value_);
        return FieldElement(x.field_, QuadNumber{a.rational + b.rational, a.radical + b.radical});
    }
    }
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) { return x + (-y); }

FieldElement& FieldElement::operator+=(const FieldElement& y) {
    if (field_ != y.field_) throw_mismatch(field_, y.field_);
    switch (value_.index()) {
    case 0:
        return *this = *this + y;
    case 1:
        std::get<1>(value_) += std::get<1>(y.value_);
        return *this;
    default: {
        auto& a = std::get<2>(value_);
        const auto& b = std::get<2>(y.value_);
        a.rational += b.rational;
        a.radical += b.radical;
        return *this;
    }
    }
}

FieldElement& FieldElement::operator-=(const FieldElement& y) {
    if (field_ != y.field_) throw_mismatch(field_, y.field_);
    switch (value_.index()) {
    case 0:
        return *this = *this - y;
    case 1:
        std::get<1>(value_) -= std::get<1>(y.value_);
        return *this;
    default: {
        auto& a = std::get<2>(value_);
        const auto& b = std::get<2>(y.value_);
        a.rational -= b.rational;
        a.radical -= b.radical;
        return *this;
    }
    }
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    if (x.field_ != y.field_) throw_mismatch(x.field_, y.field_);
    switch (x.value_.index()) {
    case 0:
        return FieldElement(x.field_, mulmod(std::get<0>(x.value_), std::get<0>(y.value_), x.field_.modulus()));
    case 1:
        return FieldElement(x.field_, Rational(std::get<1>(x.value_) * std::get<1>(y.value_)));
    default: {
        const auto& a = std::get<2>(x.value_);
        const auto& b = std::get<2>(y.value_);
        const std::int64_t d = x.field_.radicand();
        return FieldElement(x.field_, QuadNumber{a.rational * b.rational + a.radical * b.radical * d,
                                                 a.rational * b.radical + a.radical * b.rational});
    }
    }
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) { return x * y.inverse(); }

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero in " + field_.to_string());
    switch (value_.index()) {
    case 0:
        return FieldElement(field_, powmod(std::get<0>(value_), field_.modulus() - 2, field_.modulus()));
    case 1:
        return FieldElement(field_, Rational(1 / std::get<1>(value_)));
    default: {
        // (r - s sqrt d) / (r^2 - s^2 d); the norm is nonzero since d is not a square.
        const auto& q = std::get<2>(value_);
        const Rational norm = q.rational * q.rational - q.radical * q.radical * field_.radicand();
        return FieldElement(field_, QuadNumber{q.rational / norm, -q.radical / norm});
    }
    }
}

int FieldElement::sign() const {
    switch (value_.index()) {
    case 0:
        throw PreconditionError("Z_p has no ordering");
    case 1:
        return sign_of(std::get<1>(value_));
    default: {
        const auto& q = std::get<2>(value_);
        return quad_sign(q.rational, q.radical, field_.radicand());
    }
    }
}

FieldElement FieldElement::sqrt() const {
    switch (value_.index()) {
    case 0: {
        const std::uint64_t p = field_.modulus();
        if (p >= kMaxSqrtPrime) {
            throw PreconditionError("square roots are only supported for p < 2^20, got p = " + std::to_string(p));
        }
        const std::uint64_t v = std::get<0>(value_);
        for (std::uint64_t y = 0; y <= p / 2; ++y) {
            if (y * y % p == v) return FieldElement(field_, y);
        }
        throw_not_square(*this);
    }
    case 1: {
        if (auto root = rational_sqrt(std::get<1>(value_))) return FieldElement(field_, std::move(*root));
        throw_not_square(*this);
    }
    default:
        break;
    }

    const auto& q = std::get<2>(value_);
    const std::int64_t d = field_.radicand();
    if (q.radical.is_zero()) {
        if (auto root = rational_sqrt(q.rational)) return FieldElement(field_, QuadNumber{std::move(*root), 0});
        // r = d t^2  ->  t sqrt(d), t > 0
        if (auto root = rational_sqrt(q.rational / d)) return FieldElement(field_, QuadNumber{0, std::move(*root)});
        throw_not_square(*this);
    }

    // (u + v sqrt d)^2 = (u^2 + d v^2) + 2uv sqrt d with u, v both nonzero:
    // u^2 is a root of T^2 - r T + d s^2 / 4.
    const auto disc = rational_sqrt(q.rational * q.rational - q.radical * q.radical * d);
    if (disc) {
        const std::array<Rational, 2> candidates{Rational((q.rational + *disc) / 2),
                                                 Rational((q.rational - *disc) / 2)};
        for (const Rational& u2 : candidates) {
            const auto u = rational_sqrt(u2);
            if (!u || u->is_zero()) continue;
            Rational v = q.radical / (2 * *u);
            Rational uu = *u;
            if (quad_sign(uu, v, d) < 0) {
                uu = -uu;
                v = -v;
            }
            FieldElement root(field_, QuadNumber{std::move(uu), std::move(v)});
            if (root * root == *this) return root;
        }
    }
    throw_not_square(*this);
}

std::string FieldElement::to_signed_string() const {
    if (value_.index() != 0) return to_string();
    const std::uint64_t r = std::get<0>(value_);
    const std::uint64_t p = field_.modulus();
    return r > p / 2 ? "-" + std::to_string(p - r) : std::to_string(r);
}

std::string FieldElement::to_string() const {
    switch (value_.index()) {
    case 0:
        return std::to_string(std::get<0>(value_));
    case 1:
        return format_rational(std::get<1>(value_));
    default:
        break;
    }
    const auto& q = std::get<2>(value_);
    if (q.radical.is_zero()) return format_rational(q.rational);
    if (q.rational.is_zero()) return format_rational(q.radical) + "s";
    const std::string radical = format_rational(q.radical);
    return format_rational(q.rational) + (q.radical.sign() > 0 ? "+" : "") + radical + "s";
}

FieldElement pow(const FieldElement& base, std::uint64_t exponent) {
    FieldElement result = base.field().one();
    FieldElement factor = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= factor;
        factor *= factor;
        exponent >>= 1U;
    }
    return result;
}

} // namespace kpotent
