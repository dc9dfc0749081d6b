#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "kpotent/algebra.hpp"
#include "kpotent/exactfield.hpp"

namespace kpotent {

/// Dense row-major matrix of order 4 or 8 over one field.
class SquareMatrix {
public:
    /// Zero matrix. Throws PreconditionError unless order is 4 or 8.
    SquareMatrix(const FieldSpec& field, std::size_t order);

    static SquareMatrix identity(const FieldSpec& field, std::size_t order);
    static SquareMatrix diagonal(const std::vector<FieldElement>& entries);
    static SquareMatrix from_rows(const FieldSpec& field, const std::vector<std::vector<FieldElement>>& rows);
    /// Integer entries mapped into the field (negative values allowed).
    static SquareMatrix from_ints(const FieldSpec& field, const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t order() const noexcept { return order_; }
    const FieldSpec& field() const noexcept { return field_; }

    const FieldElement& operator()(std::size_t row, std::size_t col) const noexcept {
        return entries_[row * order_ + col];
    }
    /// Throws MismatchError when value lies in another field.
    void set(std::size_t row, std::size_t col, FieldElement value);

    SquareMatrix transpose() const;
    bool is_zero() const noexcept;

    SquareMatrix operator+(const SquareMatrix& other) const;
    SquareMatrix operator-(const SquareMatrix& other) const;
    SquareMatrix operator*(const SquareMatrix& other) const;
    friend SquareMatrix operator*(const FieldElement& lambda, const SquareMatrix& m);

    /// Copies `block` (any order) into this matrix with its top-left corner at (row, col).
    void place(std::size_t row, std::size_t col, const std::vector<FieldElement>& block, std::size_t block_order);

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    void check_compatible(const SquareMatrix& other) const;

    FieldSpec field_;
    std::size_t order_;
    std::vector<FieldElement> entries_;
};

/// A^n by square-and-multiply; A^0 = I.
SquareMatrix power(const SquareMatrix& a, std::uint64_t n);

/// The four representation maps.
enum class Representation { phi, rho, Phi, Psi };

/// "phi", "rho", "Phi", "Psi".
std::string to_string(Representation rep);
Representation parse_representation(std::string_view text);

/// phi(q): left multiplication by q on H(a,b).
SquareMatrix left_representation(const Quaternion& q);
/// rho(q): right multiplication by q on H(a,b).
SquareMatrix right_representation(const Quaternion& q);
/// Phi(x): left multiplication by x on O(a,b,c).
SquareMatrix left_representation(const Octonion& x);
/// Psi(x): right multiplication by x on O(a,b,c).
SquareMatrix right_representation(const Octonion& x);

/// diag(1, -1, -1, -1).
SquareMatrix e4(const FieldSpec& field);

/// Phi assembled from quaternion blocks
///   ( phi(x')        -rho(x'') E4 )
///   ( phi(x'') E4     rho(x')     )
SquareMatrix left_block_form(const Octonion& x);

/// Psi assembled from the quaternion-block formula
///   ( rho(x')   -phi(conj x'') )
///   ( phi(x')    rho(conj x')  )
SquareMatrix right_block_form(const Octonion& x);

/// Entrywise comparison of the block assemblies with the explicit 8x8 matrices.
struct BlockCheckReport {
    std::vector<std::pair<std::size_t, std::size_t>> left_mismatches;
    std::vector<std::pair<std::size_t, std::size_t>> right_mismatches;

    bool left_agrees() const noexcept { return left_mismatches.empty(); }
    bool right_agrees() const noexcept { return right_mismatches.empty(); }
};

BlockCheckReport block_check(const Octonion& x);

/// One row per line, comma-separated scalar literals.
std::string to_csv(const SquareMatrix& m);
/// Array of rows, each an array of scalar strings.
nlohmann::json to_json(const SquareMatrix& m);
/// Right-aligned columns for terminals.
std::string to_text(const SquareMatrix& m);

SquareMatrix matrix_from_csv(const FieldSpec& field, std::string_view text);
SquareMatrix matrix_from_json(const FieldSpec& field, const nlohmann::json& value);

} // namespace kpotent
