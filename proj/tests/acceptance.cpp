// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Every comparison is exact unless a tolerance is stated.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cfl/cli.hpp"
#include "cfl/error.hpp"
#include "cfl/fuzzy_set.hpp"
#include "cfl/weight.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace cfl;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

std::vector<Rational> values(const FuzzySet& s) {
    std::vector<Rational> out;
    for (const auto& w : s.weights()) out.push_back(w.value());
    return out;
}

std::vector<Rational> R(std::initializer_list<const char*> xs) {
    std::vector<Rational> out;
    for (const char* x : xs) out.push_back(parse_rational(x));
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Check worked_example() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    auto u = make_universe("U", {"x1", "x2", "x3", "x4", "x5"});
    const SetEnvironment env{{"C1", make_set("C1", u, R({"0", "1", "0", "0", "0.4"}))},
                             {"C2", make_set("C2", u, R({"0.9", "0.8", "0.7", "0", "0.6"}))}};
    c.expect(values(eval_set_expression(parse_set_expression("C1 | C2"), env)) == R({"0.9", "1", "0.7", "0", "0.76"}),
             "C1 | C2");
    c.expect(values(eval_set_expression(parse_set_expression("C1 & C2"), env)) == R({"0", "0.8", "0", "0", "0.24"}),
             "C1 & C2");
    c.expect(values(complement(env.at("C1"))) == R({"1", "0", "1", "1", "0.6"}), "!C1");
    c.expect(seconds_since(t0) < 1.0, "runtime >= 1 s");
    return c;
}

Check closed_forms() {
    Check c;
    testing::Gen gen(1001);
    const Formula a = Formula::atom("a"), b = Formula::atom("b");
    for (int i = 0; i < 1000; ++i) {
        const Weight wa(gen.weight_value(1000)), wb(gen.weight_value(1000));
        const WeightAssignment w{{"a", wa}, {"b", wb}};
        c.expect(weight(a | b, w) == connective_weight(Connective::Or, wa, wb), "OR");
        c.expect(weight(a & b, w) == connective_weight(Connective::And, wa, wb), "AND");
        c.expect(weight(implies(a, b), w) == connective_weight(Connective::Implies, wa, wb), "IMP");
        c.expect(weight(iff(a, b), w) == connective_weight(Connective::Iff, wa, wb), "IFF");
        c.expect(weight(!a, w).value() == 1 - wa.value(), "NOT");
    }
    return c;
}

std::string cli_line(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    cli::run(args, out, err);
    return out.str();
}

Check law_catalog() {
    Check c;
    const std::pair<const char*, const char*> laws[] = {
        {"q | !q", "C | !C"},
        {"((q1 -> q2) & q1) -> q2", "((C1 => C2) & C1) => C2"},
        {"((q1 -> q2) & !q2) -> !q1", "((C1 => C2) & !C2) => !C1"},
        {"((q1 -> q2) & (q2 -> q3)) -> (q1 -> q3)", "((C1 => C2) & (C2 => C3)) => (C1 => C3)"},
        {"(!(q1 | q2)) <-> (!q1 & !q2)", "(!(C1 | C2)) <=> (!C1 & !C2)"},
        {"(!(q1 & q2)) <-> (!q1 | !q2)", "(!(C1 & C2)) <=> (!C1 | !C2)"},
    };
    for (const auto& [formula, set] : laws) {
        const Formula f = parse_formula(formula);
        c.expect(is_cfl_tautology(f), std::string("tautology: ") + formula);
        c.expect(symbolic_weight(f) == MultilinearPoly::constant(1), std::string("polynomial 1: ") + formula);
        c.expect(cli_line({"set", "law", set}) == "UNIVERSAL-LAW\n", std::string("universal law: ") + set);
    }
    c.expect(is_cfl_contradiction(parse_formula("q & !q")), "q & !q contradiction");
    c.expect(cli_line({"prove", "q & !q"}) == "CONTRADICTION (weight \xE2\x89\xA1 0)\n", "prove q & !q");
    c.expect(cli_line({"set", "law", "C & !C"}) == "EMPTY-LAW\n", "C & !C empty law");
    return c;
}

Check classical_limit() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const auto fns = enumerate_functions(3);
    c.expect(fns.size() == 256, "256 functions");
    for (const auto& fn : fns) {
        const auto& atoms = fn.table.atoms;
        for (std::size_t row = 0; row < fn.table.rows(); ++row) {
            WeightAssignment w;
            for (std::size_t k = 0; k < atoms.size(); ++k)
                w.set(atoms[k], fn.table.input(row, k) ? Weight::one() : Weight::zero());
            const Weight expected = fn.table.output(row) ? Weight::one() : Weight::zero();
            c.expect(weight(fn.formula, w) == expected, "DNF weight at 0/1 point: " + fn.table.label);
        }
        const Classification bl = classify(fn.formula);
        c.expect((bl == Classification::Tautology) == is_cfl_tautology(fn.formula), "tautology status " + fn.table.label);
        c.expect((bl == Classification::Contradiction) == is_cfl_contradiction(fn.formula),
                 "contradiction status " + fn.table.label);
    }
    c.expect(seconds_since(t0) < 10.0, "runtime >= 10 s");
    return c;
}

Check function_counting() {
    Check c;
    c.expect(count_logical_functions(1) == 4, "n=1");
    c.expect(count_logical_functions(2) == 16, "n=2");
    c.expect(count_logical_functions(3) == 256, "n=3");
    return c;
}

Check property_suite() {
    Check c;
    constexpr int kCases = 200;
    testing::Gen gen(2026);
    const auto atoms = testing::atom_names(5);
    for (int i = 0; i < kCases; ++i) {
        const Formula f = gen.formula(atoms, 8);
        const auto w = gen.weights(atom_list(f), 100);
        const Weight wf = weight(f, w);
        c.expect(wf.value() + weight(!f, w).value() == 1, "complement law");
        c.expect(wf.value() >= 0 && wf.value() <= 1, "range");
        c.expect(poly_eval(symbolic_weight(f), w) == wf, "symbolic vs numeric");
    }

    auto u = make_universe("U", testing::atom_names(8, "x"));
    for (int i = 0; i < kCases; ++i) {
        const FuzzySet s = gen.fuzzy_set("S", u);
        c.expect(set_equal(complement(complement(s)), s), "involution");
    }

    const auto left = testing::atom_names(3, "a"), right = testing::atom_names(3, "b");
    for (int i = 0; i < kCases; ++i) {
        const Formula phi = gen.formula(left, 5), psi = gen.formula(right, 5);
        WeightAssignment w = gen.weights(left, 100);
        for (const auto& [k, v] : gen.weights(right, 100)) w.set(k, v);
        const Weight wp = weight(phi, w), ws = weight(psi, w);
        c.expect(weight(phi & psi, w).value() == wp.value() * ws.value(), "factorization AND");
        c.expect(weight(phi | psi, w) == connective_weight(Connective::Or, wp, ws), "factorization OR");
    }
    return c;
}

Check statistical_oracle() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const Formula disjunction = parse_formula("q1 | q2");
    const WeightAssignment wd{{"q1", Weight::parse("0.4")}, {"q2", Weight::parse("0.6")}};
    const Formula chain = parse_formula("(q1 -> q2) & (q2 -> q3)");
    const Weight half = Weight::parse("1/2");
    const WeightAssignment wc{{"q1", half}, {"q2", half}, {"q3", half}};

    c.expect(weight(disjunction, wd) == Weight::parse("0.76"), "exact 0.76");
    c.expect(weight(chain, wc) == half, "exact 0.5");
    const double e1 = testing::monte_carlo(disjunction, wd, 100000, 12345);
    const double e2 = testing::monte_carlo(chain, wc, 100000, 67890);
    c.expect(std::abs(e1 - 0.76) <= 0.01, "q1|q2 frequency " + std::to_string(e1));
    c.expect(std::abs(e2 - 0.5) <= 0.01, "chain frequency " + std::to_string(e2));
    c.expect(seconds_since(t0) < 5.0, "runtime >= 5 s");
    return c;
}

Check crisp_correspondence() {
    Check c;
    auto n = make_universe("N", {"1", "2", "3", "4", "5", "6", "7"});
    const auto c1 = embed_classical({"2", "3", "5", "7"}, n, "C1");
    const auto c2 = embed_classical({"1", "3", "4", "7"}, n, "C2");
    c.expect(project_classical(set_union(c1, c2)) == std::vector<std::string>{"1", "2", "3", "4", "5", "7"}, "union");
    c.expect(project_classical(set_intersection(c1, c2)) == std::vector<std::string>{"3", "7"}, "intersection");
    return c;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Check()>> criteria[] = {
        {"1 worked example (union, intersection, complement; exact, < 1 s)", worked_example},
        {"2 closed forms vs row-sum weights (1000 random pairs; exact)", closed_forms},
        {"3 law catalog (tautologies, contradiction, set laws; exact)", law_catalog},
        {"4 classical limit over all 256 three-atom functions (< 10 s)", classical_limit},
        {"5 logical function counts 4, 16, 256", function_counting},
        {"6 property suite (>= 200 random cases each; exact)", property_suite},
        {"7 Monte-Carlo frequency within 0.01 (10^5 samples, < 5 s)", statistical_oracle},
        {"8 crisp correspondence over {1..7}", crisp_correspondence},
    };

    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Check result;
        try {
            result = run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        std::cout << (result.ok ? "PASS " : "FAIL ") << name;
        if (!result.ok) std::cout << " -- " << result.detail;
        std::cout << '\n';
        failures += result.ok ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
