#include <doctest.h>

#include <set>

#include "cfl/classical.hpp"
#include "cfl/error.hpp"
#include "support/generators.hpp"

using namespace cfl;

namespace {

std::vector<std::uint8_t> column(const char* text) { return build_truth_table(parse_formula(text)).outputs; }

using Col = std::vector<std::uint8_t>;

}  // namespace

TEST_CASE("eval_classical follows the connective tables") {
    CHECK_FALSE(eval_classical(parse_formula("q1 -> q2"), {{"q1", true}, {"q2", false}}));
    CHECK(eval_classical(parse_formula("q1 <-> q2"), {{"q1", false}, {"q2", false}}));
    CHECK_FALSE(eval_classical(parse_formula("!q"), {{"q", true}}));
}

TEST_CASE("eval_classical names the missing atom") {
    try {
        eval_classical(parse_formula("q1 & q2"), {{"q1", true}});
        FAIL("expected BindingError");
    } catch (const BindingError& e) {
        CHECK(std::string(e.what()).find("q2") != std::string::npos);
    }
}

TEST_CASE("truth tables of the basic connectives") {
    CHECK(column("!q") == Col{1, 0});
    CHECK(column("q1 | q2") == Col{0, 1, 1, 1});
    CHECK(column("q1 & q2") == Col{0, 0, 0, 1});
    CHECK(column("q1 -> q2") == Col{1, 1, 0, 1});
    CHECK(column("q1 <-> q2") == Col{1, 0, 0, 1});
    // Columns follow first occurrence, so q2 is the leading atom here.
    CHECK(build_truth_table(parse_formula("q2 -> q1")).atoms == std::vector<std::string>{"q2", "q1"});
    CHECK(column("q2 -> q1") == Col{1, 1, 0, 1});
}

TEST_CASE("truth tables of the laws") {
    CHECK(column("q | !q") == Col{1, 1});
    CHECK(column("((q1 -> q2) & !q2) -> !q1") == Col{1, 1, 1, 1});
    CHECK(column("((q1 -> q2) & q1) -> q2") == Col{1, 1, 1, 1});
    CHECK(column("q & !q") == Col{0, 0});
    CHECK(column("((q1 -> q2) & (q2 -> q3)) -> (q1 -> q3)") == Col(8, 1));
}

TEST_CASE("row order puts the first atom in the most significant place") {
    const auto t = build_truth_table(parse_formula("q1 & !q2"));
    REQUIRE(t.rows() == 4);
    CHECK(t.atoms == std::vector<std::string>{"q1", "q2"});
    CHECK_FALSE(t.input(1, 0));
    CHECK(t.input(1, 1));
    CHECK(t.input(2, 0));
    CHECK_FALSE(t.input(2, 1));
    CHECK(t.outputs == Col{0, 0, 1, 0});
}

TEST_CASE("rendered table is byte stable") {
    CHECK(render_truth_table(build_truth_table(parse_formula("q1 | q2"))) ==
          "q1 q2 || (q1 | q2)\n"
          "0 0 || 0\n"
          "0 1 || 1\n"
          "1 0 || 1\n"
          "1 1 || 1\n");
    CHECK(render_truth_table(build_truth_table(parse_formula("q & !q"))) ==
          "q || (q & (!q))\n"
          "0 || 0\n"
          "1 || 0\n");
}

TEST_CASE("atom cap") {
    std::string text = "a0";
    for (int i = 1; i < 6; ++i) text += " | a" + std::to_string(i);
    const Formula f = parse_formula(text);
    CHECK(build_truth_table(f, 6).rows() == 64);
    try {
        build_truth_table(f, 5);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        CHECK(e.atoms() == 6);
        CHECK(e.cap() == 5);
    }
    CHECK_THROWS_AS(classify(f, 3), CapExceeded);
}

TEST_CASE("classify") {
    CHECK(classify(parse_formula("q | !q")) == Classification::Tautology);
    CHECK(classify(parse_formula("q & !q")) == Classification::Contradiction);
    CHECK(classify(parse_formula("q1 -> q2")) == Classification::Contingent);
    CHECK(to_string(Classification::Contingent) == "CONTINGENT");
}

TEST_CASE("count_logical_functions") {
    CHECK(count_logical_functions(1) == 4);
    CHECK(count_logical_functions(2) == 16);
    CHECK(count_logical_functions(3) == 256);
    CHECK(count_logical_functions(5) == Integer(1) << 32);
    CHECK(count_logical_functions(7).str() == "340282366920938463463374607431768211456");
    CHECK_THROWS_AS(count_logical_functions(0), ArgumentError);
}

TEST_CASE("enumerate_functions lists every column once") {
    const auto one = enumerate_functions(1);
    REQUIRE(one.size() == 4);
    CHECK(one[0].table.outputs == Col{0, 0});
    CHECK(one[1].table.outputs == Col{0, 1});
    CHECK(one[2].table.outputs == Col{1, 0});
    CHECK(one[3].table.outputs == Col{1, 1});
    CHECK(render_formula(one[0].formula) == "(q1 & (!q1))");
    CHECK(render_formula(one[2].formula) == "(!q1)");
    CHECK(render_formula(one[3].formula) == "((!q1) | q1)");

    for (unsigned n = 1; n <= 3; ++n) {
        const auto all = enumerate_functions(n);
        CHECK(Integer(all.size()) == count_logical_functions(n));
        std::set<Col> distinct;
        for (const auto& fn : all) {
            distinct.insert(fn.table.outputs);
            // The DNF must reproduce its column over the same atoms.
            const auto rebuilt = build_truth_table(fn.formula);
            CHECK(rebuilt.atoms == testing::atom_names(n));
            CHECK(rebuilt.outputs == fn.table.outputs);
        }
        CHECK(distinct.size() == all.size());
    }
    CHECK(render_formula(enumerate_functions(3).front().formula) == "(((q1 & (!q1)) & q2) & q3)");
    CHECK_THROWS_AS(enumerate_functions(0), ArgumentError);
    CHECK_THROWS_AS(enumerate_functions(4), ArgumentError);
}

TEST_CASE("property: f is a tautology iff !f is a contradiction") {
    testing::Gen gen(77);
    const auto atoms = testing::atom_names(4);
    for (int i = 0; i < 300; ++i) {
        const Formula f = gen.formula(atoms, 6);
        CHECK((classify(f) == Classification::Tautology) == (classify(!f) == Classification::Contradiction));
        CHECK((classify(f) == Classification::Contradiction) == (classify(!f) == Classification::Tautology));
    }
}

TEST_CASE("table rows agree with eval_classical") {
    testing::Gen gen(5);
    const auto atoms = testing::atom_names(4);
    for (int i = 0; i < 50; ++i) {
        const Formula f = gen.formula(atoms, 6);
        const auto t = build_truth_table(f);
        for (std::size_t row = 0; row < t.rows(); ++row) {
            Assignment a;
            for (std::size_t k = 0; k < t.atoms.size(); ++k) a.set(t.atoms[k], t.input(row, k));
            CHECK(eval_classical(f, a) == t.output(row));
        }
    }
}
