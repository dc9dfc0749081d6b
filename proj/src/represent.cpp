#include "kpotent/represent.hpp"

#include <algorithm>
#include <sstream>

namespace kpotent {

namespace {

enum : std::uint8_t { kA = 1, kB = 2, kC = 4 };

/// sign * (monomial in a, b, c) * x_coord
struct Entry {
    int sign;
    std::uint8_t params;
    std::uint8_t coord;
};

constexpr Entry kLeftQuaternion[4][4] = {
    {{+1, 0, 0}, {+1, kA, 1}, {+1, kB, 2}, {-1, kA | kB, 3}},
    {{+1, 0, 1}, {+1, 0, 0}, {+1, kB, 3}, {-1, kB, 2}},
    {{+1, 0, 2}, {-1, kA, 3}, {+1, 0, 0}, {+1, kA, 1}},
    {{+1, 0, 3}, {-1, 0, 2}, {+1, 0, 1}, {+1, 0, 0}},
};

constexpr Entry kRightQuaternion[4][4] = {
    {{+1, 0, 0}, {+1, kA, 1}, {+1, kB, 2}, {-1, kA | kB, 3}},
    {{+1, 0, 1}, {+1, 0, 0}, {-1, kB, 3}, {+1, kB, 2}},
    {{+1, 0, 2}, {+1, kA, 3}, {+1, 0, 0}, {-1, kA, 1}},
    {{+1, 0, 3}, {+1, 0, 2}, {-1, 0, 1}, {+1, 0, 0}},
};

constexpr std::uint8_t kAB = kA | kB;
constexpr std::uint8_t kAC = kA | kC;
constexpr std::uint8_t kBC = kB | kC;
constexpr std::uint8_t kABC = kA | kB | kC;

constexpr Entry kLeftOctonion[8][8] = {
    {{+1, 0, 0}, {+1, kA, 1}, {+1, kB, 2}, {-1, kAB, 3}, {+1, kC, 4}, {-1, kAC, 5}, {-1, kBC, 6}, {+1, kABC, 7}},
    {{+1, 0, 1}, {+1, 0, 0}, {+1, kB, 3}, {-1, kB, 2}, {+1, kC, 5}, {-1, kC, 4}, {+1, kBC, 7}, {-1, kBC, 6}},
    {{+1, 0, 2}, {-1, kA, 3}, {+1, 0, 0}, {+1, kA, 1}, {+1, kC, 6}, {-1, kAC, 7}, {-1, kC, 4}, {+1, kAC, 5}},
    {{+1, 0, 3}, {-1, 0, 2}, {+1, 0, 1}, {+1, 0, 0}, {+1, kC, 7}, {-1, kC, 6}, {+1, kC, 5}, {-1, kC, 4}},
    {{+1, 0, 4}, {-1, kA, 5}, {-1, kB, 6}, {+1, kAB, 7}, {+1, 0, 0}, {+1, kA, 1}, {+1, kB, 2}, {-1, kAB, 3}},
    {{+1, 0, 5}, {-1, 0, 4}, {-1, kB, 7}, {+1, kB, 6}, {+1, 0, 1}, {+1, 0, 0}, {-1, kB, 3}, {+1, kB, 2}},
    {{+1, 0, 6}, {+1, kA, 7}, {-1, 0, 4}, {-1, kA, 5}, {+1, 0, 2}, {+1, kA, 3}, {+1, 0, 0}, {-1, kA, 1}},
    {{+1, 0, 7}, {+1, 0, 6}, {-1, 0, 5}, {-1, 0, 4}, {+1, 0, 3}, {+1, 0, 2}, {-1, 0, 1}, {+1, 0, 0}},
};

constexpr Entry kRightOctonion[8][8] = {
    {{+1, 0, 0}, {+1, kA, 1}, {+1, kB, 2}, {-1, kAB, 3}, {+1, kC, 4}, {-1, kAC, 5}, {-1, kBC, 6}, {+1, kABC, 7}},
    {{+1, 0, 1}, {+1, 0, 0}, {-1, kB, 3}, {+1, kB, 2}, {-1, kC, 5}, {+1, kC, 4}, {-1, kBC, 7}, {+1, kBC, 6}},
    {{+1, 0, 2}, {+1, kA, 3}, {+1, 0, 0}, {-1, kA, 1}, {-1, kC, 6}, {+1, kAC, 7}, {+1, kC, 4}, {-1, kAC, 5}},
    {{+1, 0, 3}, {+1, 0, 2}, {-1, 0, 1}, {+1, 0, 0}, {-1, kC, 7}, {+1, kC, 6}, {-1, kC, 5}, {+1, kC, 4}},
    {{+1, 0, 4}, {+1, kA, 5}, {+1, kB, 6}, {-1, kAB, 7}, {+1, 0, 0}, {-1, kA, 1}, {-1, kB, 2}, {+1, kAB, 3}},
    {{+1, 0, 5}, {+1, 0, 4}, {+1, kB, 7}, {-1, kB, 6}, {-1, 0, 1}, {+1, 0, 0}, {+1, kB, 3}, {-1, kB, 2}},
    {{+1, 0, 6}, {-1, kA, 7}, {+1, 0, 4}, {+1, kA, 5}, {-1, 0, 2}, {-1, kA, 3}, {+1, 0, 0}, {+1, kA, 1}},
    {{+1, 0, 7}, {-1, 0, 6}, {+1, 0, 5}, {+1, 0, 4}, {-1, 0, 3}, {-1, 0, 2}, {+1, 0, 1}, {+1, 0, 0}},
};

template <std::size_t Dim, std::size_t N>
SquareMatrix assemble(const Element<Dim>& x, const Entry (&layout)[Dim][Dim], const Algebra<Dim>& algebra) {
    const FieldSpec& field = x.field();
    std::array<FieldElement, 8> monomials;
    for (std::uint8_t mask = 0; mask < 8; ++mask) {
        FieldElement m = field.one();
        for (std::size_t k = 0; k < N; ++k) {
            if ((mask >> k) & 1U) m *= algebra.parameter(k);
        }
        monomials[mask] = m;
    }
    SquareMatrix out(field, Dim);
    for (std::size_t r = 0; r < Dim; ++r) {
        for (std::size_t c = 0; c < Dim; ++c) {
            const Entry& e = layout[r][c];
            FieldElement value = monomials[e.params] * x[e.coord];
            out.set(r, c, e.sign < 0 ? -value : value);
        }
    }
    return out;
}

std::vector<FieldElement> entries_of(const SquareMatrix& m) {
    std::vector<FieldElement> out;
    out.reserve(m.order() * m.order());
    for (std::size_t r = 0; r < m.order(); ++r) {
        for (std::size_t c = 0; c < m.order(); ++c) out.push_back(m(r, c));
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> mismatches(const SquareMatrix& x, const SquareMatrix& y) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t r = 0; r < x.order(); ++r) {
        for (std::size_t c = 0; c < x.order(); ++c) {
            if (x(r, c) != y(r, c)) out.emplace_back(r, c);
        }
    }
    return out;
}

SquareMatrix from_string_rows(const FieldSpec& field, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<FieldElement>> values;
    for (const auto& row : rows) {
        if (row.size() != rows.size()) {
            throw ParseError("row " + std::to_string(values.size()) + " has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(rows.size()),
                             values.size());
        }
        auto& out = values.emplace_back();
        for (const auto& cell : row) out.push_back(field.parse_scalar(cell));
    }
    return SquareMatrix::from_rows(field, values);
}

} // namespace

// ---------------------------------------------------------------------------
// SquareMatrix

SquareMatrix::SquareMatrix(const FieldSpec& field, std::size_t order)
    : field_(field), order_(order), entries_(order * order, field.zero()) {
    if (order != 4 && order != 8) throw PreconditionError("matrix order must be 4 or 8, got " + std::to_string(order));
}

SquareMatrix SquareMatrix::identity(const FieldSpec& field, std::size_t order) {
    SquareMatrix out(field, order);
    for (std::size_t i = 0; i < order; ++i) out.entries_[i * order + i] = field.one();
    return out;
}

SquareMatrix SquareMatrix::diagonal(const std::vector<FieldElement>& entries) {
    if (entries.empty()) throw PreconditionError("empty diagonal");
    SquareMatrix out(entries.front().field(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) out.set(i, i, entries[i]);
    return out;
}

SquareMatrix SquareMatrix::from_rows(const FieldSpec& field, const std::vector<std::vector<FieldElement>>& rows) {
    SquareMatrix out(field, rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size()) {
            throw PreconditionError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                    " entries, expected " + std::to_string(rows.size()));
        }
        for (std::size_t c = 0; c < rows.size(); ++c) out.set(r, c, rows[r][c]);
    }
    return out;
}

SquareMatrix SquareMatrix::from_ints(const FieldSpec& field, const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<FieldElement>> values;
    for (const auto& row : rows) {
        if (row.size() != rows.size()) {
            throw ParseError("row " + std::to_string(values.size()) + " has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(rows.size()),
                             values.size());
        }
        auto& out = values.emplace_back();
        for (std::int64_t v : row) out.push_back(field.from_int(v));
    }
    return from_rows(field, values);
}

void SquareMatrix::set(std::size_t row, std::size_t col, FieldElement value) {
    if (value.field() != field_) {
        throw MismatchError("entry of " + value.field().to_string() + " placed in a matrix over " + field_.to_string());
    }
    entries_.at(row * order_ + col) = std::move(value);
}

void SquareMatrix::place(std::size_t row, std::size_t col, const std::vector<FieldElement>& block,
                         std::size_t block_order) {
    for (std::size_t r = 0; r < block_order; ++r) {
        for (std::size_t c = 0; c < block_order; ++c) set(row + r, col + c, block[r * block_order + c]);
    }
}

SquareMatrix SquareMatrix::transpose() const {
    SquareMatrix out(field_, order_);
    for (std::size_t r = 0; r < order_; ++r) {
        for (std::size_t c = 0; c < order_; ++c) out.entries_[c * order_ + r] = entries_[r * order_ + c];
    }
    return out;
}

bool SquareMatrix::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

void SquareMatrix::check_compatible(const SquareMatrix& other) const {
    if (order_ != other.order_) throw MismatchError("matrix orders differ");
    if (field_ != other.field_) throw MismatchError("matrices over different fields");
}

SquareMatrix SquareMatrix::operator+(const SquareMatrix& other) const {
    check_compatible(other);
    SquareMatrix out(*this);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
    return out;
}

SquareMatrix SquareMatrix::operator-(const SquareMatrix& other) const {
    check_compatible(other);
    SquareMatrix out(*this);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= other.entries_[i];
    return out;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& other) const {
    check_compatible(other);
    SquareMatrix out(field_, order_);
    for (std::size_t r = 0; r < order_; ++r) {
        for (std::size_t k = 0; k < order_; ++k) {
            const FieldElement& lhs = entries_[r * order_ + k];
            if (lhs.is_zero()) continue;
            for (std::size_t c = 0; c < order_; ++c) {
                const FieldElement& rhs = other.entries_[k * order_ + c];
                if (rhs.is_zero()) continue;
                out.entries_[r * order_ + c] += lhs * rhs;
            }
        }
    }
    return out;
}

SquareMatrix operator*(const FieldElement& lambda, const SquareMatrix& m) {
    SquareMatrix out(m);
    for (auto& x : out.entries_) x = lambda * x;
    return out;
}

SquareMatrix power(const SquareMatrix& a, std::uint64_t n) {
    SquareMatrix result = SquareMatrix::identity(a.field(), a.order());
    SquareMatrix factor = a;
    while (n != 0) {
        if (n & 1U) result = result * factor;
        n >>= 1U;
        if (n != 0) factor = factor * factor;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Representations

std::string to_string(Representation rep) {
    switch (rep) {
    case Representation::phi:
        return "phi";
    case Representation::rho:
        return "rho";
    case Representation::Phi:
        return "Phi";
    case Representation::Psi:
        return "Psi";
    }
    return {};
}

Representation parse_representation(std::string_view text) {
    if (text == "phi") return Representation::phi;
    if (text == "rho") return Representation::rho;
    if (text == "Phi") return Representation::Phi;
    if (text == "Psi") return Representation::Psi;
    throw ParseError("unknown representation '" + std::string(text) + "' (expected phi, rho, Phi or Psi)", 0);
}

SquareMatrix left_representation(const Quaternion& q) {
    return assemble<4, 2>(q, kLeftQuaternion, q.algebra());
}

SquareMatrix right_representation(const Quaternion& q) {
    return assemble<4, 2>(q, kRightQuaternion, q.algebra());
}

SquareMatrix left_representation(const Octonion& x) {
    return assemble<8, 3>(x, kLeftOctonion, x.algebra());
}

SquareMatrix right_representation(const Octonion& x) {
    return assemble<8, 3>(x, kRightOctonion, x.algebra());
}

SquareMatrix e4(const FieldSpec& field) {
    const FieldElement one = field.one();
    return SquareMatrix::diagonal({one, -one, -one, -one});
}

SquareMatrix left_block_form(const Octonion& x) {
    const auto [head, tail] = split(x);
    const SquareMatrix flip = e4(x.field());
    SquareMatrix out(x.field(), 8);
    out.place(0, 0, entries_of(left_representation(head)), 4);
    out.place(0, 4, entries_of(x.field().from_int(-1) * (right_representation(tail) * flip)), 4);
    out.place(4, 0, entries_of(left_representation(tail) * flip), 4);
    out.place(4, 4, entries_of(right_representation(head)), 4);
    return out;
}

SquareMatrix right_block_form(const Octonion& x) {
    const auto [head, tail] = split(x);
    SquareMatrix out(x.field(), 8);
    out.place(0, 0, entries_of(right_representation(head)), 4);
    out.place(0, 4, entries_of(x.field().from_int(-1) * left_representation(conjugate(tail))), 4);
    out.place(4, 0, entries_of(left_representation(head)), 4);
    out.place(4, 4, entries_of(right_representation(conjugate(head))), 4);
    return out;
}

BlockCheckReport block_check(const Octonion& x) {
    return BlockCheckReport{mismatches(left_block_form(x), left_representation(x)),
                            mismatches(right_block_form(x), right_representation(x))};
}

// ---------------------------------------------------------------------------
// Serialization

std::string to_csv(const SquareMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.order(); ++r) {
        for (std::size_t c = 0; c < m.order(); ++c) {
            if (c != 0) out += ',';
            out += m(r, c).to_string();
        }
        out += '\n';
    }
    return out;
}

nlohmann::json to_json(const SquareMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.order(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.order(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string to_text(const SquareMatrix& m) {
    std::vector<std::string> cells;
    std::size_t width = 0;
    for (std::size_t r = 0; r < m.order(); ++r) {
        for (std::size_t c = 0; c < m.order(); ++c) {
            cells.push_back(m(r, c).to_string());
            width = std::max(width, cells.back().size());
        }
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < m.order(); ++r) {
        for (std::size_t c = 0; c < m.order(); ++c) {
            const std::string& cell = cells[r * m.order() + c];
            out << (c == 0 ? "" : "  ") << std::string(width - cell.size(), ' ') << cell;
        }
        out << '\n';
    }
    return out.str();
}

SquareMatrix matrix_from_csv(const FieldSpec& field, std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) {
            auto& row = rows.emplace_back();
            std::size_t pos = 0;
            while (true) {
                const std::size_t comma = line.find(',', pos);
                row.emplace_back(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
                if (comma == std::string_view::npos) break;
                pos = comma + 1;
            }
        }
        start = end + 1;
    }
    return from_string_rows(field, rows);
}

SquareMatrix matrix_from_json(const FieldSpec& field, const nlohmann::json& value) {
    if (!value.is_array()) throw ParseError("matrix JSON must be an array of rows", 0);
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : value) {
        if (!row.is_array()) throw ParseError("matrix row must be an array", rows.size());
        auto& out = rows.emplace_back();
        for (const auto& cell : row) {
            if (!cell.is_string()) throw ParseError("matrix entries must be strings", rows.size() - 1);
            out.push_back(cell.get<std::string>());
        }
    }
    return from_string_rows(field, rows);
}

} // namespace kpotent
