#include "kpotent/cli.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "kpotent/algebra.hpp"
#include "kpotent/error.hpp"
#include "kpotent/findings.hpp"
#include "kpotent/potency.hpp"
#include "kpotent/represent.hpp"
#include "kpotent/search.hpp"

namespace kpotent {

namespace {

// One result rendered in every format; the caller picks one.
struct Output {
    std::string text;
    std::string csv;
    nlohmann::json json;
};

template <class F>
decltype(auto) with_algebra(const RunConfig& cfg, F&& f) {
    const FieldSpec field = FieldSpec::parse(cfg.field);
    const bool oct = cfg.algebra == "oct";
    const std::string params = cfg.params.empty() ? (oct ? "-1,-1,-1" : "-1,-1") : cfg.params;
    const auto values = parse_scalar_list(field, params);
    const std::size_t want = oct ? 3 : 2;
    if (values.size() != want) {
        throw PreconditionError(cfg.algebra + " needs " + std::to_string(want) + " parameters, got " +
                                std::to_string(values.size()));
    }
    if (oct) return f(OctAlgebra(values[0], values[1], values[2]));
    return f(QuatAlgebra(values[0], values[1]));
}

template <std::size_t Dim>
std::array<Representation, 2> maps_for() {
    if constexpr (Dim == 4) {
        return {Representation::phi, Representation::rho};
    } else {
        return {Representation::Phi, Representation::Psi};
    }
}

template <std::size_t Dim>
SquareMatrix represent(Representation rep, const Element<Dim>& x) {
    const auto maps = maps_for<Dim>();
    if (rep != maps[0] && rep != maps[1]) {
        throw PreconditionError("map " + to_string(rep) + " does not apply to " + x.algebra().to_string() +
                                "; use " + to_string(maps[0]) + " or " + to_string(maps[1]));
    }
    return rep == maps[0] ? left_representation(x) : right_representation(x);
}

std::string report_line(const PotencyReport& r) {
    return to_string(r.kind) + ", index " + std::to_string(r.index);
}

template <std::size_t Dim>
Output verify(const RunConfig& cfg, const Algebra<Dim>& algebra) {
    if (cfg.coords.empty()) throw PreconditionError("verify needs --coords");
    const Element<Dim> x = parse_element(algebra, cfg.coords);
    const PotencyReport r = classify(x, cfg.max_k);

    Output o;
    o.json = {{"element", x.to_string()}, {"algebra", algebra.to_string()}, {"report", to_json(r)}};
    o.text = "element  " + x.to_string() + " in " + algebra.to_string() + "\nkind     " + to_string(r.kind) +
             "\nindex    " + std::to_string(r.index) + "\ntrace    " + r.trace.to_string() + "\nnorm     " +
             r.norm.to_string() + '\n';
    o.csv = "kind,index,trace,norm\n" + to_string(r.kind) + ',' + std::to_string(r.index) + ',' +
            r.trace.to_string() + ',' + r.norm.to_string() + '\n';
    if (!cfg.matrices) return o;

    const std::string rule = r.kind == PotencyKind::nilpotent
                                 ? "^" + std::to_string(r.index) + " = 0"
                                 : "^" + std::to_string(r.index - 1) + " * M = M";
    for (Representation rep : maps_for<Dim>()) {
        const SquareMatrix m = represent(rep, x);
        const bool confirmed = representation_confirms(r, m);
        const std::string name = to_string(rep);
        o.json["matrices"][name] = to_json(m);
        o.json["confirmed"][name] = confirmed;
        const std::string check = r.kind == PotencyKind::none
                                      ? "not checked (no k-potency found)"
                                      : "M = " + name + ", M" + rule + ": " + (confirmed ? "yes" : "no");
        o.text += '\n' + name + "(x)\n" + to_text(m) + check + '\n';
        o.csv += "\n# " + name + '\n' + to_csv(m);
    }
    return o;
}

template <std::size_t Dim>
Output rep(const RunConfig& cfg, const Algebra<Dim>& algebra) {
    if (cfg.coords.empty()) throw PreconditionError("rep needs --coords");
    if (cfg.rep.empty()) throw PreconditionError("rep needs --rep");
    const Element<Dim> x = parse_element(algebra, cfg.coords);
    const SquareMatrix m = represent(parse_representation(cfg.rep), x);
    return {to_text(m), to_csv(m), to_json(m)};
}

template <std::size_t Dim>
Output describe(const Element<Dim>& x, const std::string& label) {
    const PotencyReport r = classify(x);
    Output o;
    o.text = x.to_string() + '\n' + report_line(r) + (label.empty() ? "" : " (" + label + ")") + '\n';
    o.csv = "element,kind,index\n\"" + x.to_string() + "\"," + to_string(r.kind) + ',' + std::to_string(r.index) +
            '\n';
    o.json = {{"element", x.to_string()}, {"algebra", x.algebra().to_string()}, {"report", to_json(r)}};
    return o;
}

template <std::size_t Dim>
Output generate(const RunConfig& cfg, const Algebra<Dim>& algebra) {
    if (cfg.direction.empty()) throw PreconditionError("generate needs --direction");
    const auto direction = parse_scalar_list(algebra.field(), cfg.direction);
    if (direction.size() != Dim - 1) {
        throw ParseError("direction needs " + std::to_string(Dim - 1) + " entries, got " +
                             std::to_string(direction.size()),
                         0);
    }
    if (cfg.kind == "rotor") {
        if constexpr (Dim == 4) {
            if (cfg.k == 0) throw PreconditionError("rotor generation needs --k");
            return describe(rotor_generate(cfg.k, std::span<const FieldElement, 3>(direction.data(), 3), algebra),
                            "");
        } else {
            throw PreconditionError("rotor generation needs --algebra quat");
        }
    }
    const SplitKind kind = parse_split_kind(cfg.kind);
    return describe(split_generate(kind, algebra, std::span<const FieldElement, Dim - 1>(direction.data(), Dim - 1)),
                    to_string(kind));
}

template <std::size_t Dim>
Output search(const RunConfig& cfg, const Algebra<Dim>& algebra) {
    if (cfg.mode == "witness") {
        const auto w = split_witness(algebra);
        Output o;
        const std::string s = w ? w->to_string() : "none";
        o.text = s + '\n';
        o.csv = "witness\n\"" + s + "\"\n";
        o.json = {{"algebra", algebra.to_string()}, {"witness", w ? nlohmann::json(s) : nlohmann::json()}};
        return o;
    }
    Census census;
    if (cfg.mode == "exhaustive") {
        census = search_exhaustive(algebra, cfg.max_k);
    } else if (cfg.mode == "sample") {
        census = search_sample(algebra, cfg.budget, cfg.seed, cfg.max_k);
    } else {
        throw ParseError("unknown mode '" + cfg.mode + "'; expected exhaustive, sample or witness", 0);
    }
    return {census_to_text(census), census_to_csv(census), census_to_json(census)};
}

Output report(const RunConfig& cfg, bool custom) {
    std::vector<Regime> regimes;
    if (custom) {
        const bool oct = cfg.algebra == "oct";
        regimes.push_back(Regime::parse(cfg.field, cfg.params.empty() ? (oct ? "-1,-1,-1" : "-1,-1") : cfg.params));
        if (regimes.back().is_octonion() != oct) throw PreconditionError("parameter count does not match --algebra");
    } else {
        regimes = default_regimes();
    }
    ReportOptions options;
    options.random_cases = cfg.cases;
    if (cfg.seed != 0) options.seed = cfg.seed;
    const PaperReport r = paper_report(regimes, options);
    Output o;
    o.text = to_text(r);
    o.json = to_json(r);
    o.csv = "regime,map,law,verdict,basis_failures,basis_cases,random_failures,random_cases\n";
    for (const auto& g : r.regimes) {
        for (const auto& f : g.laws) {
            o.csv += '"' + g.regime.name() + "\"," + f.map + ',' + f.law + ',' + f.verdict() + ',' +
                     std::to_string(f.basis.failures) + ',' + std::to_string(f.basis.cases) + ',' +
                     std::to_string(f.random.failures) + ',' + std::to_string(f.random.cases) + '\n';
        }
    }
    return o;
}

void emit(std::ostream& out, const RunConfig& cfg, const std::string& command, const Output& o) {
    if (cfg.envelope) {
        nlohmann::json env{{"command", command}, {"ok", true}, {"format", cfg.format}};
        if (cfg.format == "json") {
            env["output"] = o.json;
        } else {
            env["output"] = cfg.format == "csv" ? o.csv : o.text;
        }
        out << env.dump() << '\n';
        return;
    }
    if (cfg.format == "json") {
        out << o.json.dump(2) << '\n';
    } else {
        out << (cfg.format == "csv" ? o.csv : o.text);
    }
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"k-potent elements of quaternion and octonion algebras and their matrices", "kpotent"};
    app.require_subcommand(1);
    app.add_flag("--json", cfg.envelope, "wrap the output in a JSON envelope");

    auto common = [&](CLI::App* sub, bool coords) {
        sub->add_option("--field", cfg.field, "f<p>, q or q[sqrt<d>]")->capture_default_str();
        sub->add_option("--algebra", cfg.algebra, "quat or oct")
            ->check(CLI::IsMember({"quat", "oct"}))
            ->capture_default_str();
        sub->add_option("--params", cfg.params, "a,b or a,b,c (default all -1)");
        sub->add_option("--format", cfg.format, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        sub->add_flag("--json", cfg.envelope, "wrap the output in a JSON envelope");
        if (coords) sub->add_option("--coords", cfg.coords, "comma-separated coordinates");
    };

    CLI::App* verify_cmd = app.add_subcommand("verify", "classify an element");
    common(verify_cmd, true);
    verify_cmd->add_option("--max-k", cfg.max_k, "largest exponent tried")->capture_default_str();
    verify_cmd->add_flag("--matrices", cfg.matrices, "print representation matrices and check them");

    CLI::App* rep_cmd = app.add_subcommand("rep", "print a representation matrix");
    common(rep_cmd, true);
    rep_cmd->add_option("--rep", cfg.rep, "phi, rho (quat) or Phi, Psi (oct)")
        ->check(CLI::IsMember({"phi", "rho", "Phi", "Psi"}));

    CLI::App* gen_cmd = app.add_subcommand("generate", "build a k-potent, idempotent, tripotent or nilpotent");
    common(gen_cmd, false);
    gen_cmd->add_option("kind", cfg.kind, "rotor, idempotent, tripotent or nilpotent")
        ->required()
        ->check(CLI::IsMember({"rotor", "idempotent", "tripotent", "nilpotent"}));
    gen_cmd->add_option("--k", cfg.k, "potency index for rotors (3, 4, 5, 7)");
    gen_cmd->add_option("--direction", cfg.direction, "pure part direction");

    CLI::App* search_cmd = app.add_subcommand("search", "census over f<p>");
    common(search_cmd, false);
    search_cmd->add_option("--mode", cfg.mode, "exhaustive, sample or witness")
        ->check(CLI::IsMember({"exhaustive", "sample", "witness"}))
        ->capture_default_str();
    search_cmd->add_option("--budget", cfg.budget, "elements drawn in sample mode")->capture_default_str();
    search_cmd->add_option("--seed", cfg.seed, "sampler seed")->capture_default_str();
    search_cmd->add_option("--max-k", cfg.max_k, "largest exponent tried")->capture_default_str();

    CLI::App* report_cmd = app.add_subcommand("paper-report", "which printed claims hold in which regimes");
    common(report_cmd, false);
    report_cmd->add_option("--cases", cfg.cases, "random cases per law")->capture_default_str();
    report_cmd->add_option("--seed", cfg.seed, "seed for random cases (0 keeps the default)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error[usage]: " << one_line(e.what()) << '\n';
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    try {
        Output o;
        if (sub == verify_cmd) {
            o = with_algebra(cfg, [&](const auto& a) { return verify(cfg, a); });
        } else if (sub == rep_cmd) {
            o = with_algebra(cfg, [&](const auto& a) { return rep(cfg, a); });
        } else if (sub == gen_cmd) {
            o = with_algebra(cfg, [&](const auto& a) { return generate(cfg, a); });
        } else if (sub == search_cmd) {
            o = with_algebra(cfg, [&](const auto& a) { return search(cfg, a); });
        } else {
            o = report(cfg, report_cmd->count("--field") > 0 || report_cmd->count("--params") > 0);
        }
        emit(out, cfg, command, o);
        return 0;
    } catch (const Error& e) {
        err << "error[" << e.category() << "]: " << one_line(e.what()) << '\n';
        if (cfg.envelope) {
            out << nlohmann::json{{"command", command},
                                  {"ok", false},
                                  {"error", {{"category", e.category()}, {"message", one_line(e.what())}}}}
                       .dump()
                << '\n';
        }
        return 1;
    }
}

} // namespace kpotent
