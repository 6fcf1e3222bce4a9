#include "cfl/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "cfl/error.hpp"

namespace cfl::cli {

namespace {

WeightAssignment parse_bindings(const std::vector<std::string>& bindings) {
    WeightAssignment w;
    for (const auto& b : bindings) {
        auto eq = b.find('=');
        if (eq == std::string::npos) throw SyntaxError("binding '" + b + "' is not atom=weight", 0);
        const std::string atom = b.substr(0, eq);
        if (!is_identifier(atom)) throw SyntaxError("illegal atom name '" + atom + "' in binding", 0);
        if (w.contains(atom)) throw BindingError("atom '" + atom + "' bound twice");
        w.set(atom, Weight::parse(b.substr(eq + 1)));
    }
    return w;
}

int cmd_table(const Session& s, const std::string& text, std::ostream& out) {
    out << render_truth_table(build_truth_table(parse_formula(text), s.max_atoms));
    return kOk;
}

int cmd_weight(const Session& s, const std::string& text, const std::vector<std::string>& bindings,
               std::ostream& out) {
    const Formula f = parse_formula(text);
    const WeightAssignment w = parse_bindings(bindings);
    out << weight(f, w, s.max_atoms).to_string() << '\n';
    return kOk;
}

int cmd_prove(const Session& s, const std::string& text, std::ostream& out) {
    const auto poly = symbolic_weight(parse_formula(text), s.max_symbolic);
    if (poly == MultilinearPoly::constant(1)) {
        out << "TAUTOLOGY (weight \xE2\x89\xA1 1)\n";
        return kOk;
    }
    if (poly.is_zero()) {
        out << "CONTRADICTION (weight \xE2\x89\xA1 0)\n";
        return kOk;
    }
    out << "CONTINGENT: " << poly.to_string() << '\n';
    return kNotALaw;
}

int cmd_poly(const Session& s, const std::string& text, std::ostream& out) {
    out << symbolic_weight(parse_formula(text), s.max_symbolic).to_string() << '\n';
    return kOk;
}

int cmd_set_eval(Session& s, const std::string& file, const std::string& text, std::ostream& out) {
    s.library = load_set_file(file);
    const auto expr = parse_set_expression(text);
    out << render_set_line(eval_set_expression(expr, s.library.sets, s.max_atoms)) << '\n';
    return kOk;
}

int cmd_set_law(const Session& s, const std::string& text, std::ostream& out) {
    const auto expr = parse_set_expression(text);
    if (verify_universal_law(expr, s.max_symbolic)) {
        out << "UNIVERSAL-LAW\n";
        return kOk;
    }
    if (verify_empty_law(expr, s.max_symbolic)) {
        out << "EMPTY-LAW\n";
        return kOk;
    }
    out << "NOT A LAW\n";
    return kNotALaw;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Session session;

    CLI::App app{"Canonical fuzzy logic: truth tables, truth weights and fuzzy sets", "cfl"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--max-atoms", session.max_atoms, "atom cap for tables and numeric weights")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-symbolic", session.max_symbolic, "atom cap for symbolic expansion")
        ->check(CLI::PositiveNumber);

    std::string formula, file, expression;
    std::vector<std::string> bindings;

    auto* table = app.add_subcommand("table", "print the truth table of a formula");
    table->add_option("formula", formula)->required();

    auto* weigh = app.add_subcommand("weight", "exact weight of truth under atom=weight bindings");
    weigh->add_option("formula", formula)->required();
    weigh->add_option("bindings", bindings, "atom=weight, weight as decimal or a/b");

    auto* prove = app.add_subcommand("prove", "decide whether the weight is identically 1 or 0");
    prove->add_option("formula", formula)->required();

    auto* poly = app.add_subcommand("poly", "print the weight polynomial of a formula");
    poly->add_option("formula", formula)->required();

    auto* set = app.add_subcommand("set", "fuzzy-set algebra");
    set->require_subcommand(1);
    auto* set_eval = set->add_subcommand("eval", "evaluate a set expression over a set file");
    set_eval->add_option("file", file)->required();
    set_eval->add_option("expression", expression)->required();
    auto* set_law = set->add_subcommand("law", "decide whether a set expression is a universal or empty law");
    set_law->add_option("expression", expression)->required();

    for (auto* sub : {table, weigh, prove, poly, set, set_eval, set_law}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kSyntax;
    }

    try {
        if (*table) return cmd_table(session, formula, out);
        if (*weigh) return cmd_weight(session, formula, bindings, out);
        if (*prove) return cmd_prove(session, formula, out);
        if (*poly) return cmd_poly(session, formula, out);
        if (*set_eval) return cmd_set_eval(session, file, expression, out);
        if (*set_law) return cmd_set_law(session, expression, out);
    } catch (const SyntaxError& e) {
        err << "cfl: " << e.what() << '\n';
        return kSyntax;
    } catch (const CapExceeded& e) {
        err << "cfl: " << e.what() << '\n';
        return kCap;
    } catch (const RangeError& e) {
        err << "cfl: " << e.what() << '\n';
        return kRange;
    } catch (const Error& e) {
        err << "cfl: " << e.what() << '\n';
        return kBinding;
    }
    return kSyntax;
}

}  // namespace cfl::cli
