#include "helpers.hpp"

#include "jetpde/dsl.hpp"
#include "jetpde/run.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace jetpde;

TEST_CASE("DSL: the contact example parses to the catalog system") {
    std::string src =
        "system contact; vars x1 x2 x3; unknowns u1 u2 u3; "
        "eq d(u1;2) - x3*d(u2;2) + x3*d(u1;1) - x3^2*d(u2;1) - u3 = 0; "
        "eq d(u1;3) - x3*d(u2;3) = 0";
    auto s = parse_system(src);
    CHECK(s.name == "contact");
    CHECK(s.op == catalog("contact", 3));
}

TEST_CASE("DSL: order-0 equation and explicit third-order jet") {
    auto s = parse_system("eq u1 = 0");
    CHECK(s.op.order() == 0);
    CHECK(s.op.nrows() == 1);
    auto s2 = parse_system("vars x1 x2; unknowns u1; eq d(u1; 1 1 2)");
    CHECK(s2.op.order() == 3);
    CHECK(s2.op.coeff(0, 1, {2, 1}).constant_value() == Rational(1));
}

TEST_CASE("DSL: rational and parenthesized coefficients") {
    auto s = parse_system("vars x1; unknowns u1; eq 2/3*d(u1;1) - (x1^2 + 1)*u1 = 0");
    CHECK(s.op.coeff(0, 1, {1}).constant_value() == Rational(2, 3));
    MPoly expect = -(MPoly::variable(1, 1) * MPoly::variable(1, 1) + MPoly::constant(1, Rational(1)));
    CHECK(s.op.coeff(0, 1, {0}) == expect);
}

TEST_CASE("DSL error positions and categories") {
    using Catch::Matchers::ContainsSubstring;
    CHECK_THROWS_WITH(parse_system("vars x1; unknowns u1; eq d(u2;1)"), ContainsSubstring("undeclared unknown"));
    CHECK_THROWS_WITH(parse_system("vars x1; unknowns u1; eq u1/x1"), ContainsSubstring("non-polynomial"));
    CHECK_THROWS_WITH(parse_system("vars x1; unknowns u1; eq 5 = 0"), ContainsSubstring("without an unknown"));
    CHECK_THROWS_WITH(parse_system("vars x1; unknowns u1; eq d(u1;1) = 1"), ContainsSubstring("must be 0"));
    try {
        parse_system("vars x1;\nunknowns u1;\neq d(u1; 0)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("parse -> render -> parse is the identity") {
    std::vector<std::string> sources = {
        "system contact; vars x1 x2 x3; unknowns u1 u2 u3; "
        "eq d(u1;2) - x3*d(u2;2) + x3*d(u1;1) - x3^2*d(u2;1) - u3 = 0; eq d(u1;3) - x3*d(u2;3) = 0",
        "system k; vars x1 x2; unknowns v w; eq 2*d(v;1) = 0; eq d(v;2) + d(w;1) = 0; eq 2*d(w;2) = 0",
        "vars x1; unknowns y; eq d(y; 1 1 1) - d(y;1) = 0",
    };
    for (const auto& src : sources) {
        auto s = parse_system(src);
        auto txt = render_system(s);
        auto s2 = parse_system(txt);
        CHECK(s2.op == s.op);
        CHECK(s2.vars == s.vars);
        CHECK(s2.unknowns == s.unknowns);
        CHECK(render_system(s2) == txt);
    }
}

TEST_CASE("report serialization round-trips losslessly") {
    auto rep = run_command("cc", input_from_catalog("killing", 2), {});
    auto j = rep.to_json();
    auto back = Report::from_json(nlohmann::json::parse(rep.structured()));
    CHECK(back.to_json() == j);
    CHECK(back.command == "cc");
    CHECK(j.contains("input"));
    CHECK(j.contains("result"));
    CHECK(j.contains("certificates"));
}

TEST_CASE("run: cc on catalog killing 2") {
    auto rep = run_command("cc", input_from_catalog("killing", 2), {});
    CHECK(rep.exit_code == 0);
    CHECK(rep.result["cc"]["count"] == 1);
    CHECK(rep.result["cc"]["orders"][0] == 2);
    CHECK(rep.certificates["composition_zero"] == true);
}

TEST_CASE("run: parametrize on catalog stress_div 2 returns the Airy payload") {
    auto rep = run_command("parametrize", input_from_catalog("stress_div", 2), {});
    CHECK(rep.exit_code == 0);
    CHECK(rep.result["verdict"] == "parametrizable");
    CHECK(rep.result["potentials"] == 1);
    CHECK(rep.certificates["composition_zero"] == true);
}

TEST_CASE("run: analyze on an empty system reports the free dims table") {
    auto rep = run_command("analyze", input_from_text("vars x1 x2; unknowns u1; eq 0*u1 = 0;"), {});
    CHECK(rep.exit_code == 0);
    CHECK(rep.result["free_system"] == true);
    CHECK(rep.result["dims"][0] == 1);
    CHECK(rep.result["dims"][1] == 3);
}

TEST_CASE("run: analyze on the Killing system") {
    auto rep = run_command("analyze", input_from_catalog("killing", 2), {});
    CHECK(rep.exit_code == 0);
    CHECK(rep.result["formally_integrable"] == true);
    CHECK(rep.result["involutive_order"] == 2);
    CHECK(rep.certificates["hilbert_matches_dims"] == true);
    CHECK(rep.result["hilbert"] == "3");
}

TEST_CASE("run: characters with --prolong on the conformal system") {
    RunOptions o;
    o.prolong = 1;
    auto rep = run_command("characters", input_from_catalog("conformal_killing", 4), o);
    CHECK(rep.exit_code == 0);
    CHECK(rep.result["characters"]["dim_g_q1"] == 0);    // hat g_3 = 0
}

TEST_CASE("run: purity via the element flag") {
    RunOptions o;
    o.element = "d(u1;2)";
    auto rep = run_command("purity",
                           input_from_text("vars x1 x2; unknowns u1; eq d(u1;2 2); eq d(u1;1 2);"), o);
    CHECK(rep.exit_code == 0);
    CHECK(rep.result["torsion"] == true);
    CHECK(rep.result["r"] == 1);
}

TEST_CASE("run: macaulay on a univariate presentation") {
    auto rep = run_command(
        "macaulay", input_from_text("vars x1; unknowns y1 y2; eq d(y1;1 1) - y1 = 0; eq d(y2;1) = 0;"), {});
    CHECK(rep.exit_code == 0);
    CHECK(rep.result["min_generators"] == 1);
    CHECK(rep.result["invariant_factors"][1] == "d^3 - d");
    CHECK(rep.certificates["generators_span"] == true);
}

TEST_CASE("run: macaulay rejects irrational eigenvalues with exit 1") {
    auto rep = run_command("macaulay", input_from_text("vars x1; unknowns y; eq d(y;1 1) - 2*y = 0;"), {});
    CHECK(rep.exit_code == 1);
    CHECK(rep.result.contains("solution_basis_error"));
    CHECK(rep.result["min_generators"] == 1);    // the count itself is still available
}

TEST_CASE("run: split computes the canonical curvature split") {
    RunOptions o;
    o.n = 4;
    o.metric = "minkowski";
    o.rho = "1,0,0,0; 0,1,0,0; 0,0,1,0; 0,0,0,-1";
    auto rep = run_command("split", {}, o);
    CHECK(rep.exit_code == 0);
    CHECK(rep.certificates["trace_identity"] == true);
}

TEST_CASE("run: cosserat") {
    RunOptions o;
    o.n = 2;
    auto rep = run_command("cosserat", {}, o);
    CHECK(rep.exit_code == 0);
    CHECK(rep.certificates["parametrization_zero"] == true);
    CHECK(rep.certificates["airy_symmetric"] == true);
}

TEST_CASE("run: spencer-dims on the screw structure (Example 4.5 ledger)") {
    auto rep = run_command("spencer-dims", input_from_catalog("screw", 2), {});
    CHECK(rep.exit_code == 0);
    CHECK(rep.result["F"] == nlohmann::json({2, 0, 0}));
    CHECK(rep.result["C"] == nlohmann::json({4, 6, 2}));
}

TEST_CASE("run: unknown command and unknown catalog produce exit 1") {
    CHECK(run_command("frobnicate", input_from_catalog("killing", 2), {}).exit_code == 1);
    CHECK(run_command("cc", input_from_catalog("nope", 2), {}).exit_code == 1);
    CHECK(run_command("cc", input_from_text("vars x1; unknowns"), {}).exit_code == 1);
}

TEST_CASE("run: catalog-list names the CLI contract") {
    auto rep = run_command("catalog-list", {}, {});
    std::vector<std::string> names;
    for (const auto& e : rep.result["catalog"]) names.push_back(e["name"].get<std::string>());
    for (const char* want : {"killing", "conformal_killing", "contact", "screw", "complex",
                             "affine_line", "projective_line", "translations", "elasticity_cc",
                             "stress_div"})
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
}

TEST_CASE("reports are deterministic for a fixed seed") {
    RunOptions o;
    o.seed = 7;
    auto a = run_command("analyze", input_from_catalog("contact", 3), o);
    auto b = run_command("analyze", input_from_catalog("contact", 3), o);
    auto ja = a.to_json(), jb = b.to_json();
    ja.erase("timing_ms");
    jb.erase("timing_ms");
    CHECK(ja == jb);
}
