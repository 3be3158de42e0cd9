// Randomized property suites over seeded generators; everything is checked
// by exact equality.
#include "helpers.hpp"

#include "jetpde/catalog.hpp"
#include "jetpde/cc.hpp"
#include "jetpde/delta.hpp"
#include "jetpde/jetsection.hpp"
#include "jetpde/polyform.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace jetpde;
using namespace testutil;

TEST_CASE("property: delta o delta = 0 (random symbols)") {
    auto g = rng(2024);
    int done = 0;
    while (done < 50) {
        int n = 2 + (int)(g() % 2);
        auto D = random_operator(g, n, 1 + (int)(g() % 2), 1 + (int)(g() % 2), 1);
        JetSystem S(D);
        auto basis = symbol_basis(S, 1);
        if (basis.empty()) continue;
        int q1 = S.order() + 1;
        for (int s = 0; s + 2 <= n; ++s) {
            auto d_in = delta_matrix(n, D.nunknowns(), q1, basis, s);
            auto d_out = delta_matrix(n, D.nunknowns(), q1 - 1, full_symbol_basis(n, D.nunknowns(), q1 - 1), s + 1);
            PolyMatrix prod(d_out.rows, d_in.cols, n);
            for (int i = 0; i < d_out.rows; ++i)
                for (int j = 0; j < d_in.cols; ++j) {
                    MPoly acc(n);
                    for (int k = 0; k < d_out.cols; ++k)
                        if (!d_out.at(i, k).is_zero() && !d_in.at(k, j).is_zero())
                            acc += d_out.at(i, k) * d_in.at(k, j);
                    prod.at(i, j) = acc;
                }
            for (const auto& e : prod.e) REQUIRE(e.is_zero());
        }
        ++done;
    }
}

TEST_CASE("property: d o d = 0 on random polynomial forms") {
    auto g = rng(2025);
    for (int t = 0; t < 50; ++t) {
        int n = 2 + (int)(g() % 3);
        int deg = (int)(g() % std::max(1, n - 1));
        PolyForm w(n, deg);
        for (const auto& I : subsets_of_size(n, deg)) w.add_term(I, random_poly(g, n, 3, 3));
        REQUIRE(ext_derivative(ext_derivative(w)).is_zero());
    }
}

TEST_CASE("property: ad(ad(D)) = D") {
    auto g = rng(2026);
    for (int t = 0; t < 50; ++t) {
        auto D = random_operator(g, 2 + (int)(g() % 2), 1 + (int)(g() % 3), 1 + (int)(g() % 3),
                                 (int)(g() % 3), (t % 2) == 0);
        REQUIRE(D.adjoint().adjoint() == D);
    }
}

TEST_CASE("property: ad(D1 o D) = ad(D) o ad(D1)") {
    auto g = rng(2027);
    for (int t = 0; t < 50; ++t) {
        int n = 2;
        int mid = 1 + (int)(g() % 2);
        auto D1 = random_operator(g, n, mid, 1 + (int)(g() % 2), 1 + (int)(g() % 2), (t % 3) == 0);
        auto D = random_operator(g, n, 1 + (int)(g() % 2), mid, 1, (t % 3) == 1);
        REQUIRE(D1.compose(D).adjoint() == D.adjoint().compose(D1.adjoint()));
    }
}

TEST_CASE("property: spencer_apply(j_{q+1} f) = 0") {
    auto g = rng(2028);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + (int)(g() % 3), m = 1 + (int)(g() % 2), q = (int)(g() % 3);
        std::vector<MPoly> f;
        for (int k = 0; k < m; ++k) f.push_back(random_poly(g, n, 4, 4));
        REQUIRE(spencer_vanishes(jet_lift(f, q + 1)));
    }
}

TEST_CASE("property: compose(CC(D), D) = 0") {
    auto g = rng(2029);
    for (int t = 0; t < 50; ++t) {
        int n = 2;
        auto D = random_operator(g, n, 1 + (int)(g() % 2), 1 + (int)(g() % 2), 1, (t % 4) == 0);
        auto cc = compatibility_conditions(D, 2);
        REQUIRE(cc.generators.compose(D).is_zero());
    }
}

TEST_CASE("property: compose is associative") {
    auto g = rng(2030);
    for (int t = 0; t < 50; ++t) {
        auto P = random_operator(g, 2, 2, 2, 1, (t % 2) == 0);
        auto Q = random_operator(g, 2, 2, 2, 1, (t % 3) == 0);
        auto R = random_operator(g, 2, 1, 2, 1, false);
        REQUIRE(P.compose(Q).compose(R) == P.compose(Q.compose(R)));
    }
}
