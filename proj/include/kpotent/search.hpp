#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "kpotent/algebra.hpp"
#include "kpotent/potency.hpp"

namespace kpotent {

/// Exhaustive runs are refused above this many elements.
inline constexpr std::uint64_t kExhaustiveBudget = 100'000'000;

/// One (kind, index) class of a census.
struct CensusRow {
    PotencyKind kind;
    std::uint64_t index;
    std::uint64_t count;
    /// Lexicographically smallest member seen, as residues.
    std::vector<std::uint64_t> sample;

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// Rows sorted by kind (k-potent, nilpotent, none), then index.
using Census = std::vector<CensusRow>;

struct SearchOptions {
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
    /// Walk each worker's range from the top down. The output does not change;
    /// the flag exists so that can be tested.
    bool reverse_traversal = false;
};

/// Classifies every element of an algebra over Z_p.
///
/// Throws PreconditionError for other fields, and when p^Dim exceeds
/// kExhaustiveBudget (use search_sample() instead).
template <std::size_t Dim>
Census search_exhaustive(const Algebra<Dim>& algebra, std::uint64_t max_k = kDefaultMaxK,
                         const SearchOptions& options = {});

/// Coordinates drawn from std::mt19937_64 seeded with `seed`. Each coordinate
/// is one draw g mapped to (g * p) >> 64 on a 128-bit product.
class ElementSampler {
public:
    ElementSampler(std::uint64_t modulus, std::size_t dimension, std::uint64_t seed);

    std::vector<std::uint64_t> next();

private:
    std::uint64_t modulus_;
    std::size_t dimension_;
    std::mt19937_64 engine_;
};

/// Classifies `budget` elements drawn by ElementSampler. Same seed, same census.
/// Throws PreconditionError for fields other than Z_p or budget 0.
template <std::size_t Dim>
Census search_sample(const Algebra<Dim>& algebra, std::uint64_t budget, std::uint64_t seed,
                     std::uint64_t max_k = kDefaultMaxK);

/// First nonzero element of norm 0 in lexicographic order, or nullopt when the
/// algebra is a division algebra. Only Z_p is supported; the scan gives up
/// with PreconditionError after kExhaustiveBudget candidates.
template <std::size_t Dim>
std::optional<Element<Dim>> split_witness(const Algebra<Dim>& algebra);

/// Header `kind,index,count,sample`; the sample is a quoted coordinate list.
std::string census_to_csv(const Census& census);
nlohmann::json census_to_json(const Census& census);
/// Aligned table for terminals.
std::string census_to_text(const Census& census);

} // namespace kpotent
