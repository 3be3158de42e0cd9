#include "helpers.hpp"

#include "jetpde/catalog.hpp"
#include "jetpde/cc.hpp"
#include "jetpde/involution.hpp"
#include "jetpde/parametrize.hpp"
#include "jetpde/purity.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace jetpde;
using namespace testutil;

namespace {
DiffOperator example59() {
    auto one = MPoly::constant(2, Rational(1));
    DiffOperator D(2, 1, 2);    // y22 = 0, y12 = 0
    D.add_term(0, 1, {0, 2}, one);
    D.add_term(1, 1, {1, 1}, one);
    return D;
}
}    // namespace

TEST_CASE("system_dims") {
    SECTION("Killing n=2: constant table 3") {
        JetSystem S(catalog("killing", 2));
        CHECK(S.dims(3) == std::vector<long>{3, 3, 3, 3});
    }
    SECTION("free system m=1, n=2, q=1: binomial table") {
        DiffOperator free1(2, 1, 0);
        JetSystem S(free1);
        // the zero system has order 0; dims are m*C(r+2, 2) = 1, 3, 6, 10 from order 0
        CHECK(S.dims(3) == std::vector<long>{1, 3, 6, 10});
    }
    SECTION("Example 5.9: dim R_2 = 4") {
        JetSystem S(example59());
        CHECK(S.dim_R(0) == 4);
    }
}

TEST_CASE("formal integrability") {
    SECTION("Killing n=2 is formally integrable with empty trace") {
        auto fi = check_formal_integrability(catalog("killing", 2), 3);
        CHECK(fi.formally_integrable);
        CHECK(fi.trace.empty());
    }
    SECTION("Example 5.9 is already formally integrable") {
        auto fi = check_formal_integrability(example59(), 3);
        CHECK(fi.formally_integrable);
        CHECK(fi.trace.empty());
    }
    SECTION("screw system: involutive, empty trace") {
        auto fi = check_formal_integrability(catalog("screw", 2), 3);
        CHECK(fi.formally_integrable);
        CHECK(fi.trace.empty());
        CHECK(characters(fi.completed).involutive_symbol);
    }
    SECTION("y22 = 0, y12 - y = 0 needs lower-order consequences") {
        auto one = MPoly::constant(2, Rational(1));
        DiffOperator D(2, 1, 2);
        D.add_term(0, 1, {0, 2}, one);
        D.add_term(1, 1, {1, 1}, one);
        D.add_term(1, 1, {0, 0}, -one);
        auto fi = check_formal_integrability(D, 3);
        CHECK(fi.formally_integrable);
        CHECK_FALSE(fi.trace.empty());
        CHECK(fi.no_solutions);    // completion drives the system to y = 0
        JetSystem S(fi.completed);
        CHECK(S.dim_R(0) == 0);
    }
    SECTION("completion is idempotent") {
        auto one = MPoly::constant(2, Rational(1));
        DiffOperator D(2, 1, 2);
        D.add_term(0, 1, {0, 2}, one);
        D.add_term(1, 1, {1, 1}, one);
        D.add_term(1, 1, {0, 0}, -one);
        auto fi = check_formal_integrability(D, 3);
        auto fi2 = check_formal_integrability(fi.completed, 3);
        CHECK(fi2.formally_integrable);
        CHECK(fi2.trace.empty());
    }
    SECTION("the two-equation contact system is not formally integrable as given") {
        auto fi = check_formal_integrability(catalog("contact", 3), 3);
        CHECK(fi.formally_integrable);
        CHECK(fi.trace.size() == 1);    // one adjoined first-order equation
    }
}

TEST_CASE("characters and involutivity") {
    SECTION("screw: involutive with alpha = (2, 0)") {
        auto t = characters(catalog("screw", 2));
        CHECK(t.involutive_symbol);
        CHECK(t.beta == std::vector<long>{0, 2});
        CHECK(t.alpha == std::vector<long>{2, 0});
        CHECK(t.dim_gq1 == 2);    // par(R_2) gains xi^1_11, xi^2_11
    }
    SECTION("single equation y_2 = 0") {
        DiffOperator D(2, 1, 1);
        D.add_term(0, 1, {0, 1}, MPoly::constant(2, Rational(1)));
        auto t = characters(D);
        CHECK(t.involutive_symbol);
        CHECK(t.beta == std::vector<long>{0, 1});
        CHECK(t.alpha == std::vector<long>{1, 0});
    }
    SECTION("y_1 = 0 needs a delta-regular coordinate change") {
        DiffOperator D(2, 1, 1);
        D.add_term(0, 1, {1, 0}, MPoly::constant(2, Rational(1)));
        auto t = characters(D);
        CHECK(t.involutive_symbol);
        bool identity = true;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (t.coordinate_change[i][j] != (i == j ? 1 : 0)) identity = false;
        CHECK_FALSE(identity);
    }
    SECTION("Killing n=2 at order 1 is not involutive; its prolongation is") {
        auto t = characters(catalog("killing", 2));
        CHECK_FALSE(t.involutive_symbol);
        auto inv = bring_to_involution(catalog("killing", 2));
        CHECK(inv.success);
        CHECK(inv.system.order() == 2);
        CHECK(inv.table.alpha == std::vector<long>{0, 0});    // finite type
    }
    SECTION("conformal Killing prolonged: g_3 = 0 for n = 3 and 4") {
        for (int n : {3, 4}) {
            JetSystem S(catalog("conformal_killing", n));
            CHECK(S.dim_g(2) == 0);
            auto t = characters(S.prolonged(1));
            CHECK(t.dim_gq1 == 0);    // symbol of the prolonged system at order 3
        }
    }
}

TEST_CASE("hilbert polynomials from characters") {
    SECTION("y_2 = 0: dim R_{1+r} = r + 2") {
        DiffOperator D(2, 1, 1);
        D.add_term(0, 1, {0, 1}, MPoly::constant(2, Rational(1)));
        auto t = characters(D);
        JetSystem S(D);
        auto H = hilbert_polynomial(t, S.dim_R(0));
        CHECK(H.eval(Rational(0)) == Rational(2));
        CHECK(H.degree() == 1);
        for (int r = 0; r <= 4; ++r) CHECK(H.eval(Rational(r)) == Rational(S.dim_R(r)));
    }
    SECTION("Killing n=2 completed: constant polynomial 3") {
        auto inv = bring_to_involution(catalog("killing", 2));
        JetSystem S(inv.system);
        auto H = hilbert_polynomial(inv.table, S.dim_R(0));
        CHECK(H.degree() == 0);
        CHECK(H.eval(Rational(0)) == Rational(3));
    }
    SECTION("free system m=1, n=2: C(r+3, 2) from order 1") {
        // one unknown, no equations, viewed at order 1: alpha = (1, 1)
        CharacterTable t;
        t.n = 2;
        t.m = 1;
        t.q = 1;
        t.alpha = {1, 1};
        t.beta = {0, 0};
        auto H = hilbert_polynomial(t, 3);
        for (int r = 0; r <= 5; ++r)
            CHECK(H.eval(Rational(r)) == Rational(binomial(r + 3, 2)));
    }
}

TEST_CASE("compatibility conditions") {
    SECTION("Killing n=2: one generating CC of order 2, the Saint-Venant relation") {
        auto cc = compatibility_conditions(catalog("killing", 2));
        REQUIRE(cc.generators.nrows() == 1);
        CHECK(cc.orders == std::vector<int>{2});
        CHECK_FALSE(cc.possibly_incomplete);
        CHECK(DiffOperator::rows_match_up_to_sign(cc.generators, catalog("elasticity_cc", 2)));
        CHECK(cc.generators.compose(catalog("killing", 2)).is_zero());
    }
    SECTION("gradient operator: CC are the curl rows") {
        auto grad = poincare_d(3, 0);
        auto cc = compatibility_conditions(grad);
        CHECK(cc.generators.nrows() == 3);
        CHECK(cc.orders == std::vector<int>{1, 1, 1});
        CHECK(cc.generators.compose(grad).is_zero());
        // each generator matches a curl row up to sign
        auto curl = poincare_d(3, 1);
        JetSpace js(3, 3, 1);
        RowSpan span(js.dim(), 3);
        for (int r = 0; r < 3; ++r) span.add(curl.row_vector(r, js));
        for (int r = 0; r < 3; ++r) CHECK(span.contains(cc.generators.row_vector(r, js)));
    }
    SECTION("certificate rows are recorded per order") {
        auto cc = compatibility_conditions(catalog("killing", 2));
        REQUIRE(cc.certificate.size() == (size_t)cc.s_max + 1);
        CHECK(cc.certificate[2].new_generators == 1);
        CHECK(cc.certificate[3].new_generators == 0);
    }
}

TEST_CASE("parametrization tests") {
    SECTION("stress divergence: the Airy parametrization") {
        auto pr = parametrization_test(catalog("stress_div", 2));
        CHECK(pr.verdict == ParamVerdict::Parametrizable);
        CHECK(pr.composition_zero);
        REQUIRE(pr.parametrization.nunknowns() == 1);
        auto one = MPoly::constant(2, Rational(1));
        DiffOperator airy(2, 1, 3);
        airy.add_term(0, 1, {0, 2}, one);
        airy.add_term(1, 1, {1, 1}, -one);
        airy.add_term(2, 1, {2, 0}, one);
        CHECK(DiffOperator::rows_match_up_to_sign(pr.parametrization, airy));
        CHECK(catalog("stress_div", 2).compose(pr.parametrization).is_zero());
    }
    SECTION("contact system: the generating-function parametrization") {
        auto pr = parametrization_test(catalog("contact", 3));
        CHECK(pr.verdict == ParamVerdict::Parametrizable);
        MPoly x3 = MPoly::variable(3, 3);
        auto one = MPoly::constant(3, Rational(1));
        DiffOperator expect(3, 1, 3);    // xi1 = x3 d3 phi - phi; xi2 = d3 phi; xi3 = -d2 phi - x3 d1 phi
        expect.add_term(0, 1, {0, 0, 1}, x3);
        expect.add_term(0, 1, {0, 0, 0}, -one);
        expect.add_term(1, 1, {0, 0, 1}, one);
        expect.add_term(2, 1, {0, 1, 0}, -one);
        expect.add_term(2, 1, {1, 0, 0}, -x3);
        CHECK(DiffOperator::rows_match_up_to_sign(pr.parametrization, expect));
        CHECK(catalog("contact", 3).compose(pr.parametrization).is_zero());
    }
    SECTION("curl is parametrized by the gradient") {
        auto pr = parametrization_test(poincare_d(3, 1));
        CHECK(pr.verdict == ParamVerdict::Parametrizable);
        CHECK(pr.parametrization.nunknowns() == 1);
        JetSpace js(3, 1, 1);
        RowSpan span(js.dim(), 3);
        auto grad = poincare_d(3, 0);
        for (int r = 0; r < 3; ++r) span.add(grad.row_vector(r, js));
        for (int r = 0; r < 3; ++r) CHECK(span.contains(pr.parametrization.row_vector(r, js)));
    }
    SECTION("Poincare pieces are parametrizable for n <= 3") {
        for (int n = 2; n <= 3; ++n)
            for (int r = 1; r < n; ++r) {
                auto pr = parametrization_test(poincare_d(n, r));
                CHECK(pr.verdict == ParamVerdict::Parametrizable);
            }
    }
    SECTION("a torsion system is not parametrizable") {
        DiffOperator D(2, 1, 1);    // y_1 = 0 on one unknown: y is torsion
        D.add_term(0, 1, {1, 0}, MPoly::constant(2, Rational(1)));
        auto pr = parametrization_test(D);
        CHECK(pr.verdict == ParamVerdict::NotParametrizable);
    }
}

TEST_CASE("purity classification (Example 5.9)") {
    auto S = example59();
    SECTION("z'' = y_2 lies in t_1") {
        DiffOperator z(2, 1, 1);
        z.add_term(0, 1, {0, 1}, MPoly::constant(2, Rational(1)));
        auto p = purity_classify(S, z);
        CHECK(p.torsion);
        CHECK(p.r == 1);
        CHECK(p.annihilator.nrows() == 2);
    }
    SECTION("z' = y_1 lies in t_0 but not t_1") {
        DiffOperator z(2, 1, 1);
        z.add_term(0, 1, {1, 0}, MPoly::constant(2, Rational(1)));
        auto p = purity_classify(S, z);
        CHECK(p.torsion);
        CHECK(p.r == 0);
        CHECK(p.note.find("not in t_1") != std::string::npos);
    }
    SECTION("scaling the element does not change the class") {
        DiffOperator z(2, 1, 1);
        z.add_term(0, 1, {1, 0}, MPoly::constant(2, Rational(-7, 3)));
        CHECK(purity_classify(S, z).r == 0);
    }
    SECTION("a free unknown is not torsion") {
        DiffOperator empty(2, 1, 0), y(2, 1, 1);
        y.add_term(0, 1, {0, 0}, MPoly::constant(2, Rational(1)));
        auto p = purity_classify(empty, y);
        CHECK_FALSE(p.torsion);
        CHECK(p.r == -1);
    }
}
