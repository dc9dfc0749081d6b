#include "kpotent/findings.hpp"

#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "kpotent/algebra.hpp"
#include "kpotent/represent.hpp"

namespace kpotent {

namespace {

FieldElement random_scalar(const FieldSpec& field, std::mt19937_64& engine) {
    switch (field.kind()) {
    case FieldSpec::Kind::prime:
        return field.from_integer(BigInt(engine() % field.modulus()));
    case FieldSpec::Kind::rationals:
    case FieldSpec::Kind::quadratic:
        break;
    }
    auto small = [&] {
        const auto num = static_cast<std::int64_t>(engine() % 13) - 6;
        const auto den = static_cast<std::int64_t>(engine() % 4) + 1;
        return Rational(num, den);
    };
    FieldElement out = field.from_rational(small());
    if (field.kind() == FieldSpec::Kind::quadratic) out += field.from_rational(small()) * field.radical_unit();
    return out;
}

template <std::size_t Dim>
Element<Dim> random_element(const Algebra<Dim>& algebra, std::mt19937_64& engine) {
    typename Element<Dim>::Coords coords;
    for (auto& c : coords) c = random_scalar(algebra.field(), engine);
    return Element<Dim>(algebra, std::move(coords));
}

template <std::size_t Dim>
SquareMatrix represent(bool left, const Element<Dim>& x) {
    return left ? left_representation(x) : right_representation(x);
}

template <std::size_t Dim>
struct Case {
    Element<Dim> x;
    Element<Dim> y;
    FieldElement lambda;
};

// nullopt: the law says nothing about this case.
template <std::size_t Dim>
using Law = std::function<std::optional<bool>(bool left, const Case<Dim>&)>;

template <std::size_t Dim>
struct NamedLaw {
    std::string name;
    Law<Dim> check;
};

template <std::size_t Dim>
std::vector<NamedLaw<Dim>> laws(const ReportOptions& options) {
    using E = Element<Dim>;
    std::vector<NamedLaw<Dim>> out;
    out.push_back({"additive", [](bool left, const Case<Dim>& c) -> std::optional<bool> {
                       return represent(left, c.x + c.y) == represent(left, c.x) + represent(left, c.y);
                   }});
    out.push_back({"scaling", [](bool left, const Case<Dim>& c) -> std::optional<bool> {
                       const E one = E::one(c.x.algebra());
                       return represent(left, c.lambda * c.x) == c.lambda * represent(left, c.x) &&
                              represent(left, one) == SquareMatrix::identity(c.x.field(), Dim);
                   }});
    out.push_back({"homomorphism", [](bool left, const Case<Dim>& c) -> std::optional<bool> {
                       return represent(left, c.x * c.y) == represent(left, c.x) * represent(left, c.y);
                   }});
    out.push_back({"reversed homomorphism", [](bool left, const Case<Dim>& c) -> std::optional<bool> {
                       return represent(left, c.x * c.y) == represent(left, c.y) * represent(left, c.x);
                   }});
    if constexpr (Dim == 8) {
        out.push_back({"square", [](bool left, const Case<Dim>& c) -> std::optional<bool> {
                           const SquareMatrix m = represent(left, c.x);
                           return represent(left, c.x * c.x) == m * m;
                       }});
        out.push_back({"sandwich", [](bool left, const Case<Dim>& c) -> std::optional<bool> {
                           const SquareMatrix m = represent(left, c.x);
                           return represent(left, (c.x * c.y) * c.x) == m * represent(left, c.y) * m;
                       }});
    }
    out.push_back({"transpose", [](bool left, const Case<Dim>& c) -> std::optional<bool> {
                       return represent(left, conjugate(c.x)) == represent(left, c.x).transpose();
                   }});
    out.push_back({"inverse", [](bool left, const Case<Dim>& c) -> std::optional<bool> {
                       if (norm(c.x).is_zero()) return std::nullopt;
                       return represent(left, inverse(c.x)) * represent(left, c.x) ==
                              SquareMatrix::identity(c.x.field(), Dim);
                   }});
    out.push_back({"injective", [](bool left, const Case<Dim>& c) -> std::optional<bool> {
                       return (represent(left, c.x) == represent(left, c.y)) == (c.x == c.y);
                   }});
    const std::uint64_t max_power = options.max_power;
    out.push_back({"power", [max_power](bool left, const Case<Dim>& c) -> std::optional<bool> {
                       const SquareMatrix m = represent(left, c.x);
                       SquareMatrix m_n = m;
                       E x_n = c.x;
                       for (std::uint64_t n = 1; n <= max_power; ++n) {
                           if (n > 1) {
                               x_n = x_n * c.x;
                               m_n = m_n * m;
                           }
                           if (represent(left, x_n) != m_n) return false;
                       }
                       return true;
                   }});
    if constexpr (Dim == 8) {
        out.push_back({"block form", [](bool left, const Case<Dim>& c) -> std::optional<bool> {
                           const BlockCheckReport r = block_check(c.x);
                           return left ? r.left_agrees() : r.right_agrees();
                       }});
    }
    return out;
}

template <std::size_t Dim>
std::vector<Case<Dim>> basis_cases(const Algebra<Dim>& algebra) {
    using E = Element<Dim>;
    std::vector<E> xs;
    for (std::size_t i = 0; i < Dim; ++i) {
        xs.push_back(E::basis(algebra, i));
        for (std::size_t j = i + 1; j < Dim; ++j) xs.push_back(E::basis(algebra, i) + E::basis(algebra, j));
    }
    std::vector<Case<Dim>> out;
    for (const E& x : xs) {
        for (std::size_t j = 0; j < Dim; ++j) {
            out.push_back({x, E::basis(algebra, j), algebra.field().from_int(static_cast<std::int64_t>(j) + 2)});
        }
    }
    return out;
}

template <std::size_t Dim>
std::vector<Case<Dim>> random_cases(const Algebra<Dim>& algebra, const ReportOptions& options) {
    std::mt19937_64 engine(options.seed);
    std::vector<Case<Dim>> out;
    for (std::uint64_t i = 0; i < options.random_cases; ++i) {
        Element<Dim> x = random_element(algebra, engine);
        Element<Dim> y = random_element(algebra, engine);
        out.push_back({std::move(x), std::move(y), random_scalar(algebra.field(), engine)});
    }
    return out;
}

template <std::size_t Dim>
Evidence run(const Law<Dim>& law, bool left, const std::vector<Case<Dim>>& cases) {
    Evidence e;
    for (const auto& c : cases) {
        const auto ok = law(left, c);
        if (!ok) continue;
        ++e.cases;
        if (!*ok) ++e.failures;
    }
    return e;
}

template <std::size_t Dim>
std::vector<LawFinding> check(const Algebra<Dim>& algebra, const ReportOptions& options) {
    const auto basis = basis_cases(algebra);
    const auto random = random_cases(algebra, options);
    const char* names[2] = {Dim == 4 ? "phi" : "Phi", Dim == 4 ? "rho" : "Psi"};
    std::vector<LawFinding> out;
    for (const auto& law : laws<Dim>(options)) {
        for (int side = 0; side < 2; ++side) {
            const bool left = side == 0;
            out.push_back({names[side], law.name, run(law.check, left, basis), run(law.check, left, random)});
        }
    }
    return out;
}

std::string join_params(const std::vector<FieldElement>& params) {
    std::string out;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ',';
        out += params[i].to_signed_string();
    }
    return out;
}

} // namespace

Regime Regime::parse(std::string_view field, std::string_view params) {
    Regime r{FieldSpec::parse(field), {}};
    r.params = parse_scalar_list(r.field, params);
    if (r.params.size() != 2 && r.params.size() != 3) {
        throw ParseError("expected 2 or 3 parameters, got " + std::to_string(r.params.size()), 0);
    }
    for (const auto& p : r.params) {
        if (p.is_zero()) throw PreconditionError("parameters must be nonzero");
    }
    return r;
}

std::string Regime::name() const {
    return std::string(is_octonion() ? "O(" : "H(") + join_params(params) + ") over " + field.to_string();
}

std::vector<Regime> default_regimes() {
    return {Regime::parse("f5", "-1,-1"),        Regime::parse("f13", "2,3"),    Regime::parse("q", "-1,-1"),
            Regime::parse("q", "2,3"),           Regime::parse("f7", "-1,-1,-1"), Regime::parse("q", "-1,-1,-1"),
            Regime::parse("q", "2,3,5")};
}

std::string LawFinding::verdict() const {
    if (!evidence_agrees()) return "inconclusive";
    return basis.holds() ? "holds" : "fails";
}

RegimeFindings check_regime(const Regime& regime, const ReportOptions& options) {
    RegimeFindings out{regime, {}};
    if (regime.is_octonion()) {
        out.laws = check(OctAlgebra(regime.params[0], regime.params[1], regime.params[2]), options);
    } else if (regime.params.size() == 2) {
        out.laws = check(QuatAlgebra(regime.params[0], regime.params[1]), options);
    } else {
        throw PreconditionError("expected 2 or 3 parameters");
    }
    return out;
}

std::vector<StaticFinding> static_findings() {
    std::vector<StaticFinding> out;

    const FieldSpec f5 = FieldSpec::prime(5);
    const QuatAlgebra h5(f5.from_int(-1), f5.from_int(-1));
    const Quaternion x = Quaternion::from_ints(h5, {2, 3, 1, 3});
    out.push_back({"norm of 2+3f1+f2+3f3 in " + h5.to_string(), "1", norm(x).to_string()});

    // The printed table has "alpha" at f1*f1. Reading it as a must give an
    // alternative algebra; check left and right alternativity on e_i + e_j.
    const FieldSpec q = FieldSpec::rationals();
    const OctAlgebra o(q.from_int(2), q.from_int(3), q.from_int(5));
    bool alternative = true;
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = i; j < 8; ++j) {
            const Octonion s = Octonion::basis(o, i) + Octonion::basis(o, j);
            for (std::size_t k = 0; k < 8; ++k) {
                const Octonion e = Octonion::basis(o, k);
                alternative = alternative && (s * s) * e == s * (s * e) && (e * s) * s == e * (s * s);
            }
        }
    }
    out.push_back({"octonion table entry f1*f1", "alpha",
                   alternative ? "a (alternative algebra)" : "a (not alternative)"});

    std::size_t agree = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            const Octonion u = Octonion::basis(o, i), v = Octonion::basis(o, j);
            if (u * v == cayley_dickson_multiply(u, v)) ++agree;
        }
    }
    out.push_back({"doubling (p,q)(r,s) = (pr + c conj(s) q, s p + q conj(r)) on basis pairs", "64 of 64",
                   std::to_string(agree) + " of 64"});
    return out;
}

PaperReport paper_report(const std::vector<Regime>& regimes, const ReportOptions& options) {
    PaperReport out;
    out.options = options;
    out.statics = static_findings();
    for (const auto& r : regimes) out.regimes.push_back(check_regime(r, options));
    return out;
}

const LawFinding& find_law(const RegimeFindings& findings, std::string_view map, std::string_view law) {
    for (const auto& f : findings.laws) {
        if (f.map == map && f.law == law) return f;
    }
    throw PreconditionError("no law '" + std::string(law) + "' for " + std::string(map));
}

std::string to_text(const PaperReport& report) {
    std::ostringstream out;
    out << "paper-report version " << report.version << " (seed " << report.options.seed << ", "
        << report.options.random_cases << " random cases, powers up to " << report.options.max_power << ")\n";
    out << "\nprinted values\n";
    for (const auto& s : report.statics) {
        out << "  " << s.subject << ": stated " << s.stated << ", computed " << s.computed
            << (s.agrees() ? "" : "  [differs]") << '\n';
    }
    for (const auto& r : report.regimes) {
        out << '\n' << r.regime.name() << '\n';
        for (const auto& f : r.laws) {
            out << "  " << f.map << ' ' << f.law << ": " << f.verdict() << " (basis " << f.basis.failures << '/'
                << f.basis.cases << " failed, random " << f.random.failures << '/' << f.random.cases
                << " failed)\n";
        }
    }
    return out.str();
}

nlohmann::json to_json(const PaperReport& report) {
    nlohmann::json out;
    out["version"] = report.version;
    out["seed"] = report.options.seed;
    out["random_cases"] = report.options.random_cases;
    out["max_power"] = report.options.max_power;
    out["printed_values"] = nlohmann::json::array();
    for (const auto& s : report.statics) {
        out["printed_values"].push_back(
            {{"subject", s.subject}, {"stated", s.stated}, {"computed", s.computed}, {"agrees", s.agrees()}});
    }
    out["regimes"] = nlohmann::json::array();
    for (const auto& r : report.regimes) {
        nlohmann::json laws = nlohmann::json::array();
        for (const auto& f : r.laws) {
            laws.push_back({{"map", f.map},
                            {"law", f.law},
                            {"verdict", f.verdict()},
                            {"basis", {{"cases", f.basis.cases}, {"failures", f.basis.failures}}},
                            {"random", {{"cases", f.random.cases}, {"failures", f.random.failures}}}});
        }
        std::vector<std::string> params;
        for (const auto& p : r.regime.params) params.push_back(p.to_signed_string());
        out["regimes"].push_back({{"name", r.regime.name()},
                                  {"field", r.regime.field.to_string()},
                                  {"params", params},
                                  {"laws", laws}});
    }
    return out;
}

} // namespace kpotent
