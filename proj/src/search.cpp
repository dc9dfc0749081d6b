#include "kpotent/search.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>
#include <utility>

namespace kpotent {

namespace {

__extension__ typedef unsigned __int128 u128;

using Key = std::pair<int, std::uint64_t>;
using Tally = std::map<Key, CensusRow>;

int kind_rank(PotencyKind kind) {
    switch (kind) {
    case PotencyKind::k_potent:
        return 0;
    case PotencyKind::nilpotent:
        return 1;
    case PotencyKind::none:
        return 2;
    }
    return 3;
}

void require_prime_field(const FieldSpec& field, const char* what) {
    if (!field.is_prime()) {
        throw PreconditionError(std::string(what) + " is only supported over f<p>, got " + field.to_string());
    }
}

// p^dim, or nullopt past the budget.
std::optional<std::uint64_t> element_count(std::uint64_t p, std::size_t dim) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (total > kExhaustiveBudget / p) return std::nullopt;
        total *= p;
    }
    return total;
}

void record(Tally& tally, const PotencyReport& report, const std::vector<std::uint64_t>& coords) {
    auto [it, inserted] = tally.try_emplace(Key{kind_rank(report.kind), report.index},
                                            CensusRow{report.kind, report.index, 0, coords});
    ++it->second.count;
    if (!inserted && coords < it->second.sample) it->second.sample = coords;
}

void merge(Tally& into, const Tally& from) {
    for (const auto& [key, row] : from) {
        auto [it, inserted] = into.try_emplace(key, row);
        if (inserted) continue;
        it->second.count += row.count;
        if (row.sample < it->second.sample) it->second.sample = row.sample;
    }
}

Census to_census(const Tally& tally) {
    Census out;
    out.reserve(tally.size());
    for (const auto& [key, row] : tally) out.push_back(row);
    return out;
}

template <std::size_t Dim>
Element<Dim> make_element(const Algebra<Dim>& algebra, const std::vector<std::uint64_t>& residues) {
    typename Element<Dim>::Coords coords;
    for (std::size_t i = 0; i < Dim; ++i) coords[i] = algebra.field().from_integer(BigInt(residues[i]));
    return Element<Dim>(algebra, std::move(coords));
}

// Mixed-radix digits of n, most significant first.
std::vector<std::uint64_t> digits_of(std::uint64_t n, std::uint64_t p, std::size_t dim) {
    std::vector<std::uint64_t> out(dim);
    for (std::size_t i = dim; i > 0; --i) {
        out[i - 1] = n % p;
        n /= p;
    }
    return out;
}

} // namespace

template <std::size_t Dim>
Census search_exhaustive(const Algebra<Dim>& algebra, std::uint64_t max_k, const SearchOptions& options) {
    require_prime_field(algebra.field(), "exhaustive search");
    const std::uint64_t p = algebra.field().modulus();
    const auto total = element_count(p, Dim);
    if (!total) {
        throw PreconditionError("exhaustive search over " + algebra.to_string() + " exceeds " +
                                std::to_string(kExhaustiveBudget) + " elements; use --mode sample");
    }
    if (max_k < 2) throw PreconditionError("max_k must be at least 2");

    unsigned workers = options.workers ? options.workers : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, *total));

    // Worker w owns the contiguous block [w * total / workers, (w+1) * total / workers).
    std::vector<Tally> partial(workers);
    auto run = [&](unsigned w) {
        const std::uint64_t begin = *total * w / workers;
        const std::uint64_t end = *total * (w + 1) / workers;
        for (std::uint64_t step = 0; step < end - begin; ++step) {
            const std::uint64_t n = options.reverse_traversal ? end - 1 - step : begin + step;
            const auto coords = digits_of(n, p, Dim);
            record(partial[w], classify(make_element(algebra, coords), max_k), coords);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    }

    Tally tally;
    for (const auto& t : partial) merge(tally, t);
    return to_census(tally);
}

ElementSampler::ElementSampler(std::uint64_t modulus, std::size_t dimension, std::uint64_t seed)
    : modulus_(modulus), dimension_(dimension), engine_(seed) {}

std::vector<std::uint64_t> ElementSampler::next() {
    std::vector<std::uint64_t> out(dimension_);
    for (auto& v : out) v = static_cast<std::uint64_t>((static_cast<u128>(engine_()) * modulus_) >> 64);
    return out;
}

template <std::size_t Dim>
Census search_sample(const Algebra<Dim>& algebra, std::uint64_t budget, std::uint64_t seed, std::uint64_t max_k) {
    require_prime_field(algebra.field(), "sampling search");
    if (budget == 0) throw PreconditionError("budget must be at least 1");
    if (max_k < 2) throw PreconditionError("max_k must be at least 2");
    ElementSampler sampler(algebra.field().modulus(), Dim, seed);
    Tally tally;
    for (std::uint64_t i = 0; i < budget; ++i) {
        const auto coords = sampler.next();
        record(tally, classify(make_element(algebra, coords), max_k), coords);
    }
    return to_census(tally);
}

template <std::size_t Dim>
std::optional<Element<Dim>> split_witness(const Algebra<Dim>& algebra) {
    require_prime_field(algebra.field(), "witness search");
    const std::uint64_t p = algebra.field().modulus();
    const auto total = element_count(p, Dim);
    const std::uint64_t limit = total ? *total : kExhaustiveBudget;
    for (std::uint64_t n = 1; n < limit; ++n) {
        const Element<Dim> x = make_element(algebra, digits_of(n, p, Dim));
        if (norm(x).is_zero()) return x;
    }
    if (!total) {
        throw PreconditionError("no witness among the first " + std::to_string(kExhaustiveBudget) +
                                " elements of " + algebra.to_string());
    }
    return std::nullopt;
}

namespace {

std::string join_residues(const std::vector<std::uint64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

} // namespace

std::string census_to_csv(const Census& census) {
    std::string out = "kind,index,count,sample\n";
    for (const auto& row : census) {
        out += to_string(row.kind) + ',' + std::to_string(row.index) + ',' + std::to_string(row.count) + ",\"" +
               join_residues(row.sample) + "\"\n";
    }
    return out;
}

nlohmann::json census_to_json(const Census& census) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : census) {
        out.push_back({{"kind", to_string(row.kind)},
                       {"index", row.index},
                       {"count", row.count},
                       {"sample", row.sample}});
    }
    return out;
}

std::string census_to_text(const Census& census) {
    std::ostringstream out;
    std::uint64_t total = 0;
    for (const auto& row : census) {
        out << to_string(row.kind);
        for (std::size_t pad = to_string(row.kind).size(); pad < 10; ++pad) out << ' ';
        out << "index " << row.index << "  count " << row.count << "  sample (" << join_residues(row.sample)
            << ")\n";
        total += row.count;
    }
    out << "total " << total << '\n';
    return out.str();
}

template Census search_exhaustive(const Algebra<4>&, std::uint64_t, const SearchOptions&);
template Census search_exhaustive(const Algebra<8>&, std::uint64_t, const SearchOptions&);
template Census search_sample(const Algebra<4>&, std::uint64_t, std::uint64_t, std::uint64_t);
template Census search_sample(const Algebra<8>&, std::uint64_t, std::uint64_t, std::uint64_t);
template std::optional<Element<4>> split_witness(const Algebra<4>&);
template std::optional<Element<8>> split_witness(const Algebra<8>&);

} // namespace kpotent
