#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "kpotent/exactfield.hpp"

namespace kpotent {

inline constexpr int kReportVersion = 1;
inline constexpr std::uint64_t kReportSeed = 0x6b706f74656e74;  // "kpotent"

/// A field plus two (quaternion) or three (octonion) parameters.
struct Regime {
    FieldSpec field;
    std::vector<FieldElement> params;

    /// e.g. Regime::parse("f5", "-1,-1").
    static Regime parse(std::string_view field, std::string_view params);
    bool is_octonion() const noexcept { return params.size() == 3; }
    /// "H(-1,-1) over f5"
    std::string name() const;
};

/// Defaults checked by `paper-report`: definite and general parameters over
/// Z_p and Q, for both dimensions.
std::vector<Regime> default_regimes();

struct Evidence {
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;

    bool holds() const noexcept { return failures == 0; }
    friend bool operator==(const Evidence&, const Evidence&) = default;
};

/// One law for one representation map in one regime.
///
/// `basis` runs x over e_i and e_i + e_j and y over e_j, which decides every
/// law that is at most quadratic in x and linear in y. `random` runs seeded
/// random pairs. The verdict is "holds" or "fails" when they agree and
/// "inconclusive" otherwise.
struct LawFinding {
    std::string map;
    std::string law;
    Evidence basis;
    Evidence random;

    bool evidence_agrees() const noexcept { return basis.holds() == random.holds(); }
    std::string verdict() const;
    friend bool operator==(const LawFinding&, const LawFinding&) = default;
};

struct RegimeFindings {
    Regime regime;
    std::vector<LawFinding> laws;

    friend bool operator==(const RegimeFindings& x, const RegimeFindings& y) {
        return x.regime.name() == y.regime.name() && x.laws == y.laws;
    }
};

/// A printed value compared with the recomputed one.
struct StaticFinding {
    std::string subject;
    std::string stated;
    std::string computed;

    bool agrees() const { return stated == computed; }
    friend bool operator==(const StaticFinding&, const StaticFinding&) = default;
};

struct ReportOptions {
    std::uint64_t seed = kReportSeed;
    std::uint64_t random_cases = 64;
    /// Exponents 1..max_power for the power law.
    std::uint64_t max_power = 12;
};

struct PaperReport {
    int version = kReportVersion;
    ReportOptions options;
    std::vector<StaticFinding> statics;
    std::vector<RegimeFindings> regimes;

    friend bool operator==(const PaperReport& x, const PaperReport& y) {
        return x.version == y.version && x.statics == y.statics && x.regimes == y.regimes;
    }
};

RegimeFindings check_regime(const Regime& regime, const ReportOptions& options = {});
std::vector<StaticFinding> static_findings();
PaperReport paper_report(const std::vector<Regime>& regimes, const ReportOptions& options = {});

/// Looks up one law; throws PreconditionError when absent.
const LawFinding& find_law(const RegimeFindings& findings, std::string_view map, std::string_view law);

std::string to_text(const PaperReport& report);
nlohmann::json to_json(const PaperReport& report);

} // namespace kpotent
