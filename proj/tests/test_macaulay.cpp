#include "helpers.hpp"

#include "jetpde/jetsection.hpp"
#include "jetpde/macaulay.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace jetpde;
using namespace testutil;

namespace {
const UPoly d = UPoly::x();
const UPoly one{Rational(1)};

ModulePresentation pres_a0() { return {2, {{d * d, UPoly()}, {UPoly(), d}}}; }
ModulePresentation pres_a1() { return {2, {{d * d - one, UPoly()}, {UPoly(), d}}}; }
}    // namespace

TEST_CASE("decompose: invariant factors of the worked presentations") {
    auto f0 = decompose(pres_a0());
    REQUIRE(f0.size() == 2);
    CHECK(f0[0] == d);
    CHECK(f0[1] == d * d);
    auto f1 = decompose(pres_a1());
    REQUIRE(f1.size() == 2);
    CHECK(f1[0].is_one());
    CHECK(f1[1] == d * d * d - d);
    // free module: no relations
    ModulePresentation freeP{2, {}};
    CHECK(decompose(freeP).empty());
}

TEST_CASE("min_generators: 2 for a=0, 1 for a=1, 1 for the single third-order equation") {
    CHECK(min_generators(pres_a0()) == 2);
    CHECK(min_generators(pres_a1()) == 1);
    ModulePresentation single{1, {{d * d * d - d}}};
    CHECK(min_generators(single) == 1);
    ModulePresentation notTorsion{2, {{d, UPoly()}}};
    CHECK_THROWS_AS(min_generators(notTorsion), std::invalid_argument);
}

TEST_CASE("min_generators is invariant under unimodular presentation changes") {
    auto g = rng(990);
    std::uniform_int_distribution<int> c(-2, 2);
    for (auto base : {pres_a0(), pres_a1()}) {
        long g0 = min_generators(base);
        for (int t = 0; t < 6; ++t) {
            auto M = base.rel;
            // random row op then column op with unit or d-multiples
            UPoly f{Rational(c(g))};
            UPoly fd = d.scaled(Rational(c(g)));
            for (size_t j = 0; j < M[0].size(); ++j) M[0][j] += (f + fd) * M[1][j];
            for (size_t i = 0; i < M.size(); ++i) M[i][1] += (f - fd) * M[i][0];
            CHECK(min_generators({base.m, M}) == g0);
        }
    }
}

TEST_CASE("solution_basis: the d^3 - d equation") {
    ModulePresentation single{1, {{d * d * d - d}}};
    auto sol = solution_basis(single);
    CHECK(sol.solution_dim == 3);
    REQUIRE(sol.basis.size() == 3);    // {1, e^x, e^{-x}}
    CHECK(sol.generators.size() == 1);
    // generator is ch(x) - 1 (partial-fraction normalization)
    ExpPoly chm1 = ExpPoly::term(Rational(1), UPoly(Rational(1, 2))) +
                   ExpPoly::term(Rational(-1), UPoly(Rational(1, 2))) +
                   ExpPoly::term(Rational(0), UPoly(Rational(-1)));
    CHECK(sol.generators[0][0] == chm1);
    CHECK(sol.generator_closure_rank == 3);
    CHECK(sol.generators_span);
    CHECK(chm1.str() == "ch(x) - 1");
}

TEST_CASE("solution_basis: the two-unknown presentations of Example 5.1") {
    auto s0 = solution_basis(pres_a0());
    CHECK(s0.solution_dim == 3);
    CHECK(s0.generators.size() == 2);
    CHECK(s0.generators_span);
    auto s1 = solution_basis(pres_a1());
    CHECK(s1.solution_dim == 3);
    CHECK(s1.generators.size() == 1);
    CHECK(s1.generator_closure_rank == 3);
    CHECK(s1.generators_span);
    // the paper's generator (ch(x), 1) also generates: closure rank 3
    std::vector<std::vector<ExpPoly>> paper = {{ExpPoly::term(Rational(1), UPoly(Rational(1, 2))) +
                                                    ExpPoly::term(Rational(-1), UPoly(Rational(1, 2))),
                                                ExpPoly::term(Rational(0), UPoly(Rational(1)))}};
    CHECK(closure_rank(paper) == 3);
    // every basis vector solves the original relations symbolically
    for (const auto& y : s1.basis) {
        for (const auto& row : pres_a1().rel) {
            ExpPoly acc;
            for (int k = 0; k < 2; ++k) acc += y[k].apply(row[k]);
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("solution_basis trivial and error cases") {
    ModulePresentation dy{1, {{d}}};
    auto s = solution_basis(dy);
    CHECK(s.solution_dim == 1);
    CHECK(s.basis.size() == 1);
    CHECK(s.generators.size() == 1);
    CHECK(s.generators[0][0].str() == "1");
    ModulePresentation irr{1, {{d * d - UPoly(Rational(2))}}};    // eigenvalues +-sqrt(2)
    CHECK_THROWS_WITH(solution_basis(irr), Catch::Matchers::ContainsSubstring("irrational eigenvalues"));
    ModulePresentation freeP{2, {{d, UPoly()}}};
    CHECK_THROWS_WITH(solution_basis(freeP), Catch::Matchers::ContainsSubstring("not torsion"));
}

TEST_CASE("dim of the solution space equals the factor degree sum") {
    auto g = rng(991);
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<UPoly> pool = {d, d - one, d + one, d * d - one, d * (d - one)};
    for (int t = 0; t < 8; ++t) {
        ModulePresentation P{2, {{pool[pick(g)], UPoly()}, {UPoly(), pool[pick(g)]}}};
        auto fac = decompose(P);
        long degsum = 0;
        for (const auto& f : fac) degsum += f.degree();
        auto sol = solution_basis(P);
        CHECK(sol.solution_dim == degsum);
        CHECK((long)sol.basis.size() == degsum);
        CHECK(sol.generators_span);
    }
}

TEST_CASE("spencer compatibility: truncated jets of every basis solution are spencer-closed") {
    // the solution module carries the differential structure induced by the
    // Spencer operator: for each basis solution f the section (f, f', f'', ...)
    // truncated at any order has vanishing Spencer difference
    auto sol = solution_basis(pres_a1());
    for (const auto& y : sol.basis) {
        for (int k = 0; k < 2; ++k) {
            // the module action of d agrees with honest differentiation, so
            // the jet section (f, f', f'', ...) has zero Spencer difference
            CHECK(y[k].apply(d) == y[k].derivative());
            CHECK(y[k].apply(d * d) == y[k].derivative().derivative());
        }
    }
    // cross-check with the polynomial Spencer operator on the lift of a
    // polynomial solution of d^2 y = 0: y = a + b x
    MPoly x = MPoly::variable(1, 1);
    auto lift = jet_lift({x.scaled(Rational(3)) + MPoly::constant(1, Rational(2))}, 3);
    CHECK(spencer_vanishes(lift));
}
