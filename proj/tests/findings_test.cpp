#include <gtest/gtest.h>

#include "kpotent/error.hpp"
#include "kpotent/findings.hpp"

using namespace kpotent;

namespace {

const PaperReport& default_report() {
    static const PaperReport report = paper_report(default_regimes());
    return report;
}

const RegimeFindings& regime(const std::string& name) {
    for (const auto& r : default_report().regimes) {
        if (r.regime.name() == name) return r;
    }
    throw std::runtime_error("missing regime " + name);
}

std::string verdict(const std::string& name, const std::string& map, const std::string& law) {
    return find_law(regime(name), map, law).verdict();
}

} // namespace

TEST(PaperReport, StableAcrossRuns) {
    const PaperReport again = paper_report(default_regimes());
    EXPECT_EQ(again, default_report());
    EXPECT_EQ(to_text(again), to_text(default_report()));
    EXPECT_EQ(to_json(again), to_json(default_report()));
}

TEST(PaperReport, BasisAndRandomEvidenceAgree) {
    for (const auto& r : default_report().regimes) {
        for (const auto& f : r.laws) {
            EXPECT_TRUE(f.evidence_agrees()) << r.regime.name() << ' ' << f.map << ' ' << f.law;
            EXPECT_GT(f.basis.cases, 0U);
            EXPECT_GT(f.random.cases, 0U);
        }
    }
}

TEST(PaperReport, QuaternionVerdicts) {
    for (const std::string name : {"H(-1,-1) over f5", "H(2,3) over f13", "H(-1,-1) over q", "H(2,3) over q"}) {
        EXPECT_EQ(verdict(name, "phi", "homomorphism"), "holds") << name;
        EXPECT_EQ(verdict(name, "phi", "reversed homomorphism"), "fails") << name;
        EXPECT_EQ(verdict(name, "rho", "homomorphism"), "fails") << name;
        EXPECT_EQ(verdict(name, "rho", "reversed homomorphism"), "holds") << name;
        for (const std::string map : {"phi", "rho"}) {
            for (const std::string law : {"additive", "scaling", "inverse", "injective", "power"}) {
                EXPECT_EQ(verdict(name, map, law), "holds") << name << ' ' << map << ' ' << law;
            }
        }
    }
    for (const std::string map : {"phi", "rho"}) {
        EXPECT_EQ(verdict("H(-1,-1) over f5", map, "transpose"), "holds");
        EXPECT_EQ(verdict("H(-1,-1) over q", map, "transpose"), "holds");
        EXPECT_EQ(verdict("H(2,3) over f13", map, "transpose"), "fails");
        EXPECT_EQ(verdict("H(2,3) over q", map, "transpose"), "fails");
    }
}

TEST(PaperReport, OctonionVerdicts) {
    for (const std::string name : {"O(-1,-1,-1) over f7", "O(-1,-1,-1) over q", "O(2,3,5) over q"}) {
        for (const std::string map : {"Phi", "Psi"}) {
            for (const std::string law : {"additive", "scaling", "square", "sandwich", "inverse", "injective", "power"}) {
                EXPECT_EQ(verdict(name, map, law), "holds") << name << ' ' << map << ' ' << law;
            }
            EXPECT_EQ(verdict(name, map, "homomorphism"), "fails") << name << ' ' << map;
        }
        EXPECT_EQ(verdict(name, "Psi", "block form"), "fails") << name;
    }
    EXPECT_EQ(verdict("O(-1,-1,-1) over f7", "Phi", "block form"), "holds");
    EXPECT_EQ(verdict("O(-1,-1,-1) over q", "Phi", "block form"), "holds");
    EXPECT_EQ(verdict("O(2,3,5) over q", "Phi", "block form"), "fails");
    for (const std::string map : {"Phi", "Psi"}) {
        EXPECT_EQ(verdict("O(-1,-1,-1) over q", map, "transpose"), "holds");
        EXPECT_EQ(verdict("O(2,3,5) over q", map, "transpose"), "fails");
    }
}

TEST(PaperReport, PrintedValues) {
    const auto& s = default_report().statics;
    ASSERT_EQ(s.size(), 3U);
    EXPECT_EQ(s[0].stated, "1");
    EXPECT_EQ(s[0].computed, "3");
    EXPECT_FALSE(s[0].agrees());
    EXPECT_EQ(s[1].computed, "a (alternative algebra)");
    EXPECT_EQ(s[2].computed, "64 of 64");
    EXPECT_TRUE(s[2].agrees());
}

TEST(PaperReport, TextAndJson) {
    const std::string text = to_text(default_report());
    EXPECT_NE(text.find("paper-report version 1"), std::string::npos);
    EXPECT_NE(text.find("phi homomorphism: holds"), std::string::npos);
    EXPECT_NE(text.find("stated 1, computed 3"), std::string::npos);
    const auto j = to_json(default_report());
    EXPECT_EQ(j["version"], kReportVersion);
    EXPECT_EQ(j["regimes"].size(), default_regimes().size());
    EXPECT_EQ(j["regimes"][0]["params"], nlohmann::json::parse(R"(["-1","-1"])"));
}

TEST(PaperReport, CustomRegime) {
    ReportOptions options;
    options.random_cases = 16;
    const RegimeFindings r = check_regime(Regime::parse("f11", "3,-2"), options);
    EXPECT_EQ(r.regime.name(), "H(3,-2) over f11");
    EXPECT_EQ(find_law(r, "rho", "reversed homomorphism").verdict(), "holds");
    EXPECT_EQ(find_law(r, "rho", "transpose").verdict(), "fails");
}

TEST(PaperReport, RegimeErrors) {
    EXPECT_THROW(Regime::parse("f5", "1"), ParseError);
    EXPECT_THROW(Regime::parse("f5", "1,5"), PreconditionError);
    EXPECT_THROW(Regime::parse("f4", "1,1"), PreconditionError);
    const RegimeFindings r = check_regime(Regime::parse("f5", "-1,-1"), {});
    EXPECT_THROW(find_law(r, "rho", "square"), PreconditionError);
}
