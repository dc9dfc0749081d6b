#include "kpotent/algebra.hpp"

namespace kpotent {

namespace {

enum : std::uint8_t { kA = 1, kB = 2, kC = 4 };

/// sign * (a, b, c monomial selected by `params`) * f_basis
struct Cell {
    int sign;
    std::uint8_t params;
    std::uint8_t basis;
};

// Row i, column j holds f_i * f_j; index 0 is the unit.
constexpr Cell kQuaternionTable[4][4] = {
    {{+1, 0, 0}, {+1, 0, 1}, {+1, 0, 2}, {+1, 0, 3}},
    {{+1, 0, 1}, {+1, kA, 0}, {+1, 0, 3}, {+1, kA, 2}},
    {{+1, 0, 2}, {-1, 0, 3}, {+1, kB, 0}, {-1, kB, 1}},
    {{+1, 0, 3}, {-1, kA, 2}, {+1, kB, 1}, {-1, kA | kB, 0}},
};

constexpr Cell kOctonionTable[8][8] = {
    {{+1, 0, 0}, {+1, 0, 1}, {+1, 0, 2}, {+1, 0, 3}, {+1, 0, 4}, {+1, 0, 5}, {+1, 0, 6}, {+1, 0, 7}},
    // f1 * f1 is printed as "alpha"; it is the parameter a.
    {{+1, 0, 1}, {+1, kA, 0}, {+1, 0, 3}, {+1, kA, 2}, {+1, 0, 5}, {+1, kA, 4}, {-1, 0, 7}, {-1, kA, 6}},
    {{+1, 0, 2}, {-1, 0, 3}, {+1, kB, 0}, {-1, kB, 1}, {+1, 0, 6}, {+1, 0, 7}, {+1, kB, 4}, {+1, kB, 5}},
    {{+1, 0, 3}, {-1, kA, 2}, {+1, kB, 1}, {-1, kA | kB, 0}, {+1, 0, 7}, {+1, kA, 6}, {-1, kB, 5}, {-1, kA | kB, 4}},
    {{+1, 0, 4}, {-1, 0, 5}, {-1, 0, 6}, {-1, 0, 7}, {+1, kC, 0}, {-1, kC, 1}, {-1, kC, 2}, {-1, kC, 3}},
    {{+1, 0, 5}, {-1, kA, 4}, {-1, 0, 7}, {-1, kA, 6}, {+1, kC, 1}, {-1, kA | kC, 0}, {+1, kC, 3}, {+1, kA | kC, 2}},
    {{+1, 0, 6}, {+1, 0, 7}, {-1, kB, 4}, {+1, kB, 5}, {+1, kC, 2}, {-1, kC, 3}, {-1, kB | kC, 0}, {-1, kB | kC, 1}},
    {{+1, 0, 7}, {+1, kA, 6}, {-1, kB, 5}, {+1, kA | kB, 4}, {+1, kC, 3}, {-1, kA | kC, 2}, {+1, kB | kC, 1},
     {+1, kA | kB | kC, 0}},
};

// Norm form n(x) = sum w_i x_i^2.
constexpr Cell kNormWeights[8] = {
    {+1, 0, 0}, {-1, kA, 1}, {-1, kB, 2}, {+1, kA | kB, 3},
    {-1, kC, 4}, {+1, kA | kC, 5}, {+1, kB | kC, 6}, {-1, kA | kB | kC, 7},
};

template <std::size_t N>
FieldElement evaluate(const Cell& cell, const std::array<FieldElement, N>& parameters) {
    FieldElement value = parameters[0].field().from_int(cell.sign);
    for (std::size_t k = 0; k < N; ++k) {
        if ((cell.params >> k) & 1U) value *= parameters[k];
    }
    return value;
}

template <std::size_t N>
void validate_parameters(const std::array<FieldElement, N>& parameters) {
    static constexpr const char* names[] = {"a", "b", "c"};
    for (std::size_t k = 0; k < N; ++k) {
        if (parameters[k].field() != parameters[0].field()) {
            throw MismatchError("algebra parameters belong to different fields");
        }
        if (parameters[k].is_zero()) {
            throw PreconditionError(std::string("algebra parameter ") + names[k] + " must be nonzero");
        }
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Algebra

template <std::size_t Dim>
Algebra<Dim>::Algebra(const FieldElement& a, const FieldElement& b)
    requires(Dim == 4)
{
    auto state = std::make_shared<State>();
    state->parameters = {a, b};
    state_ = std::move(state);
    build();
}

template <std::size_t Dim>
Algebra<Dim>::Algebra(const FieldElement& a, const FieldElement& b, const FieldElement& c)
    requires(Dim == 8)
{
    auto state = std::make_shared<State>();
    state->parameters = {a, b, c};
    state_ = std::move(state);
    build();
}

template <std::size_t Dim>
void Algebra<Dim>::build() {
    validate_parameters(state_->parameters);
    auto state = std::make_shared<State>(*state_);
    for (std::size_t i = 0; i < Dim; ++i) {
        for (std::size_t j = 0; j < Dim; ++j) {
            const Cell& cell = Dim == 4 ? kQuaternionTable[i][j] : kOctonionTable[i][j];
            state->table[i][j] = ProductTerm{cell.basis, evaluate(cell, state->parameters)};
        }
        state->norm_weights[i] = evaluate(kNormWeights[i], state->parameters);
    }
    if constexpr (Dim == 8) {
        state->quaternion_part = std::make_shared<const Algebra<4>>(state->parameters[0], state->parameters[1]);
    }
    state_ = std::move(state);
}

template <std::size_t Dim>
const FieldSpec& Algebra<Dim>::field() const noexcept {
    return state_->parameters[0].field();
}

template <std::size_t Dim>
const FieldElement& Algebra<Dim>::parameter(std::size_t i) const noexcept {
    return state_->parameters[i];
}

template <std::size_t Dim>
const ProductTerm& Algebra<Dim>::product(std::size_t i, std::size_t j) const noexcept {
    return state_->table[i][j];
}

template <std::size_t Dim>
const FieldElement& Algebra<Dim>::norm_weight(std::size_t i) const noexcept {
    return state_->norm_weights[i];
}

template <std::size_t Dim>
Algebra<4> Algebra<Dim>::quaternion_part() const
    requires(Dim == 8)
{
    return *state_->quaternion_part;
}

template <std::size_t Dim>
std::string Algebra<Dim>::to_string() const {
    std::string out = Dim == 4 ? "H(" : "O(";
    for (std::size_t k = 0; k < parameter_count; ++k) {
        if (k != 0) out += ",";
        out += state_->parameters[k].to_signed_string();
    }
    return out + ") over " + field().to_string();
}

template class Algebra<4>;
template class Algebra<8>;

// ---------------------------------------------------------------------------
// Element

template <std::size_t Dim>
Element<Dim>::Element(Algebra<Dim> algebra, Coords coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    for (const auto& x : coords_) {
        if (x.field() != algebra_.field()) {
            throw MismatchError("coordinate " + x.to_string() + " of " + x.field().to_string() +
                                " does not belong to " + algebra_.field().to_string());
        }
    }
}

template <std::size_t Dim>
Element<Dim> Element<Dim>::zero(const Algebra<Dim>& algebra) {
    Coords coords;
    coords.fill(algebra.field().zero());
    return Element(algebra, std::move(coords));
}

template <std::size_t Dim>
Element<Dim> Element<Dim>::one(const Algebra<Dim>& algebra) {
    return scalar(algebra, algebra.field().one());
}

template <std::size_t Dim>
Element<Dim> Element<Dim>::scalar(const Algebra<Dim>& algebra, const FieldElement& value) {
    Coords coords;
    coords.fill(algebra.field().zero());
    coords[0] = value;
    return Element(algebra, std::move(coords));
}

template <std::size_t Dim>
Element<Dim> Element<Dim>::basis(const Algebra<Dim>& algebra, std::size_t i) {
    Coords coords;
    coords.fill(algebra.field().zero());
    coords.at(i) = algebra.field().one();
    return Element(algebra, std::move(coords));
}

template <std::size_t Dim>
Element<Dim> Element<Dim>::from_ints(const Algebra<Dim>& algebra, const std::array<std::int64_t, Dim>& values) {
    Coords coords;
    for (std::size_t i = 0; i < Dim; ++i) coords[i] = algebra.field().from_int(values[i]);
    return Element(algebra, std::move(coords));
}

template <std::size_t Dim>
bool Element<Dim>::is_zero() const noexcept {
    for (const auto& x : coords_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

template <std::size_t Dim>
Element<Dim> Element<Dim>::operator-() const {
    Coords out;
    for (std::size_t i = 0; i < Dim; ++i) out[i] = -coords_[i];
    return Element(algebra_, std::move(out));
}

template <std::size_t Dim>
Element<Dim> Element<Dim>::operator+(const Element& y) const {
    if (!(algebra_ == y.algebra_)) throw MismatchError("operands belong to different algebras");
    Coords out;
    for (std::size_t i = 0; i < Dim; ++i) out[i] = coords_[i] + y.coords_[i];
    return Element(algebra_, std::move(out));
}

template <std::size_t Dim>
Element<Dim> Element<Dim>::operator-(const Element& y) const {
    return *this + (-y);
}

template <std::size_t Dim>
Element<Dim> Element<Dim>::operator*(const Element& y) const {
    if (!(algebra_ == y.algebra_)) {
        throw MismatchError("operands belong to different algebras: " + algebra_.to_string() + " vs " +
                            y.algebra_.to_string());
    }
    Coords out;
    out.fill(algebra_.field().zero());
    for (std::size_t i = 0; i < Dim; ++i) {
        if (coords_[i].is_zero()) continue;
        for (std::size_t j = 0; j < Dim; ++j) {
            if (y.coords_[j].is_zero()) continue;
            const ProductTerm& term = algebra_.product(i, j);
            out[term.basis] += term.coefficient * (coords_[i] * y.coords_[j]);
        }
    }
    return Element(algebra_, std::move(out));
}

template <std::size_t Dim>
std::string Element<Dim>::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < Dim; ++i) {
        if (i != 0) out += ',';
        out += coords_[i].to_string();
    }
    return out;
}

template class Element<4>;
template class Element<8>;

// ---------------------------------------------------------------------------
// Free functions

std::pair<Quaternion, Quaternion> split(const Octonion& x) {
    const QuatAlgebra h = x.algebra().quaternion_part();
    const auto& c = x.coords();
    return {Quaternion(h, {c[0], c[1], c[2], c[3]}), Quaternion(h, {c[4], c[5], c[6], c[7]})};
}

Octonion join(const OctAlgebra& algebra, const Quaternion& head, const Quaternion& tail) {
    const auto& p = head.coords();
    const auto& q = tail.coords();
    return Octonion(algebra, {p[0], p[1], p[2], p[3], q[0], q[1], q[2], q[3]});
}

Octonion cayley_dickson_multiply(const Octonion& x, const Octonion& y) {
    if (!(x.algebra() == y.algebra())) throw MismatchError("operands belong to different algebras");
    const auto [p, q] = split(x);
    const auto [r, s] = split(y);
    const FieldElement& c = x.algebra().c();
    return join(x.algebra(), p * r + c * (conjugate(s) * q), s * p + q * conjugate(r));
}

template <std::size_t Dim>
Element<Dim> conjugate(const Element<Dim>& x) {
    typename Element<Dim>::Coords out;
    out[0] = x[0];
    for (std::size_t i = 1; i < Dim; ++i) out[i] = -x[i];
    return Element<Dim>(x.algebra(), std::move(out));
}

template <std::size_t Dim>
FieldElement trace(const Element<Dim>& x) {
    return x[0] + x[0];
}

template <std::size_t Dim>
FieldElement norm(const Element<Dim>& x) {
    FieldElement total = x.field().zero();
    for (std::size_t i = 0; i < Dim; ++i) {
        if (x[i].is_zero()) continue;
        total += x.algebra().norm_weight(i) * (x[i] * x[i]);
    }
    return total;
}

template <std::size_t Dim>
Element<Dim> power(const Element<Dim>& x, std::uint64_t n) {
    if (n == 0) return Element<Dim>::one(x.algebra());
    Element<Dim> result = x;
    for (std::uint64_t k = 1; k < n; ++k) result = result * x;
    return result;
}

template <std::size_t Dim>
Element<Dim> inverse(const Element<Dim>& x) {
    const FieldElement n = norm(x);
    if (n.is_zero()) throw ArithmeticError("element " + x.to_string() + " has norm zero and is not invertible");
    return n.inverse() * conjugate(x);
}

template <std::size_t Dim>
bool satisfies_quadratic_identity(const Element<Dim>& x) {
    const auto residual = x * x - trace(x) * x + Element<Dim>::scalar(x.algebra(), norm(x));
    return residual.is_zero();
}

std::vector<FieldElement> parse_scalar_list(const FieldSpec& field, std::string_view text) {
    std::vector<FieldElement> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(field.parse_scalar(text.substr(start, end - start), start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

template <std::size_t Dim>
Element<Dim> parse_element(const Algebra<Dim>& algebra, std::string_view text) {
    const auto scalars = parse_scalar_list(algebra.field(), text);
    if (scalars.size() != Dim) {
        throw ParseError("expected " + std::to_string(Dim) + " coordinates, got " + std::to_string(scalars.size()),
                         text.size());
    }
    typename Element<Dim>::Coords coords;
    std::copy(scalars.begin(), scalars.end(), coords.begin());
    return Element<Dim>(algebra, std::move(coords));
}

#define KPOTENT_INSTANTIATE(Dim)                                                        \
    template Element<Dim> conjugate(const Element<Dim>&);                               \
    template FieldElement trace(const Element<Dim>&);                                   \
    template FieldElement norm(const Element<Dim>&);                                    \
    template Element<Dim> power(const Element<Dim>&, std::uint64_t);                    \
    template Element<Dim> inverse(const Element<Dim>&);                                 \
    template bool satisfies_quadratic_identity(const Element<Dim>&);                    \
    template Element<Dim> parse_element(const Algebra<Dim>&, std::string_view);

KPOTENT_INSTANTIATE(4)
KPOTENT_INSTANTIATE(8)

#undef KPOTENT_INSTANTIATE

} // namespace kpotent
