// macaulay.hpp
// ------------
// Differential-module analysis over the univariate operator ring Q[d]:
// Smith decomposition of a presentation, minimal generator counts for the
// dual solution module, and exponential-polynomial solution bases with a
// derivative-closure generation certificate.  Eigenvalues must be rational;
// anything else is a structured error, never an approximation.
#pragma once

#include "jetpde/linalg.hpp"
#include "jetpde/smith.hpp"
#include "jetpde/upoly.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace jetpde {

struct ModulePresentation {
    int m = 0;                               // number of unknowns
    std::vector<std::vector<UPoly>> rel;     // relation rows, each of length m
};

inline std::vector<UPoly> decompose(const ModulePresentation& P) {
    return smith_form(P.rel).factors;
}

inline bool is_torsion(const ModulePresentation& P) {
    return (int)decompose(P).size() == P.m;
}

// Minimum number of generators of the solution module R = M*: the number of
// nonunit invariant factors.  By the divisibility chain every irreducible
// dividing the first nonunit factor divides all later ones, so this equals
// the maximal isotypical multiplicity over irreducibles.
inline long min_generators(const ModulePresentation& P) {
    auto fac = decompose(P);
    if ((int)fac.size() != P.m)
        throw std::invalid_argument("min_generators: module not pure/torsion - theorem inapplicable");
    long g = 0;
    for (const auto& f : fac)
        if (f.degree() >= 1) ++g;
    return g;
}

// ---------------------------------------------------------------------------
// Exponential polynomials sum_lambda p_lambda(x) e^{lambda x}.
// ---------------------------------------------------------------------------
class ExpPoly {
public:
    ExpPoly() {}
    static ExpPoly term(const Rational& lambda, const UPoly& p) {
        ExpPoly e;
        if (!p.is_zero()) e.parts_[lambda] = p;
        return e;
    }

    bool is_zero() const { return parts_.empty(); }
    const std::map<Rational, UPoly>& parts() const { return parts_; }

    ExpPoly& operator+=(const ExpPoly& o) {
        for (const auto& [l, p] : o.parts_) {
            auto [it, ins] = parts_.emplace(l, p);
            if (!ins) {
                it->second += p;
                if (it->second.is_zero()) parts_.erase(it);
            }
        }
        return *this;
    }
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { a += b; return a; }
    ExpPoly scaled(const Rational& c) const {
        ExpPoly e;
        if (c.is_zero()) return e;
        for (const auto& [l, p] : parts_) e.parts_[l] = p.scaled(c);
        return e;
    }

    ExpPoly derivative() const {    // (p e^{lx})' = (p' + l p) e^{lx}
        ExpPoly e;
        for (const auto& [l, p] : parts_) {
            UPoly q = p.derivative() + p.scaled(l);
            if (!q.is_zero()) e.parts_[l] = q;
        }
        return e;
    }

    ExpPoly apply(const UPoly& op) const {    // op(d) acting by differentiation
        ExpPoly acc;
        ExpPoly cur = *this;
        for (int i = 0; i <= op.degree(); ++i) {
            if (!op[i].is_zero()) acc += cur.scaled(op[i]);
            cur = cur.derivative();
        }
        return acc;
    }

    friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.parts_ == b.parts_; }

    // Display with conjugate exponentials combined into ch/sh.
    std::string str() const {
        if (parts_.empty()) return "0";
        std::map<Rational, UPoly> rest = parts_;
        std::ostringstream os;
        bool first = true;
        auto emit = [&](std::string piece) {
            bool neg = !piece.empty() && piece[0] == '-';
            if (neg) piece = piece.substr(1);
            if (!first) os << (neg ? " - " : " + ");
            else if (neg) os << "-";
            os << piece;
            first = false;
        };
        auto arg_of = [](const Rational& l) {
            if (l.is_one()) return std::string("x");
            if (l == Rational(-1)) return std::string("-x");
            return l.str() + "*x";
        };
        // pair lambda with -lambda
        for (auto it = rest.begin(); it != rest.end();) {
            const Rational l = it->first;
            if (l.sign() <= 0) {
                ++it;
                continue;
            }
            auto jt = rest.find(-l);
            if (jt == rest.end()) {
                ++it;
                continue;
            }
            const UPoly a = it->second, b = jt->second;
            if (a == b) {
                emit(coeff_str(a.scaled(Rational(2)), "ch(" + arg_of(l) + ")"));
                rest.erase(jt);
                it = rest.erase(it);
                continue;
            }
            if (a == -b) {
                emit(coeff_str(a.scaled(Rational(2)), "sh(" + arg_of(l) + ")"));
                rest.erase(jt);
                it = rest.erase(it);
                continue;
            }
            ++it;
        }
        for (const auto& [l, p] : rest) {
            if (l.is_zero())
                emit(p.str("x"));
            else
                emit(coeff_str(p, "exp(" + arg_of(l) + ")"));
        }
        return os.str();
    }

private:
    static std::string coeff_str(const UPoly& p, const std::string& fn) {
        if (p.degree() == 0) {
            if (p[0].is_one()) return fn;
            if (p[0] == Rational(-1)) return "-" + fn;
            return p[0].str() + "*" + fn;
        }
        return "(" + p.str("x") + ")*" + fn;
    }
    std::map<Rational, UPoly> parts_;
};

// Q-rank of the derivative closure of a set of ExpPoly vectors.
inline long closure_rank(const std::vector<std::vector<ExpPoly>>& gens, int iter_cap = 256) {
    if (gens.empty()) return 0;
    int m = (int)gens[0].size();
    // coordinates (component, lambda, power)
    std::map<std::tuple<int, Rational, int>, int> pos;
    auto vec_of = [&](const std::vector<ExpPoly>& v, bool grow) {
        std::vector<std::pair<int, Rational>> entries;
        for (int k = 0; k < m; ++k)
            for (const auto& [l, p] : v[k].parts())
                for (int j = 0; j <= p.degree(); ++j) {
                    if (p[j].is_zero()) continue;
                    auto key = std::make_tuple(k, l, j);
                    auto it = pos.find(key);
                    if (it == pos.end()) {
                        if (!grow) throw std::logic_error("closure_rank: coordinate overflow");
                        it = pos.emplace(key, (int)pos.size()).first;
                    }
                    entries.push_back({it->second, p[j]});
                }
        return entries;
    };
    // first pass: register all coordinates reachable (apply derivatives until stable)
    std::vector<std::vector<ExpPoly>> all = gens;
    for (int round = 0; round < iter_cap; ++round) {
        size_t before = pos.size();
        std::vector<std::vector<ExpPoly>> next;
        for (const auto& v : all) {
            std::vector<ExpPoly> dv(m);
            for (int k = 0; k < m; ++k) dv[k] = v[k].derivative();
            vec_of(dv, true);
            next.push_back(dv);
        }
        for (const auto& v : all) vec_of(v, true);
        all.insert(all.end(), next.begin(), next.end());
        if (pos.size() == before && round > 0) break;
        if (all.size() > 4096) break;
    }
    PolyMatrix M((int)all.size(), (int)pos.size(), 1);
    for (int r = 0; r < (int)all.size(); ++r)
        for (const auto& [c, val] : vec_of(all[r], true)) M.at(r, c) += MPoly::constant(1, val);
    return generic_rank(M);
}

struct SolutionBasis {
    std::vector<std::vector<ExpPoly>> basis;         // Q-basis of the solution space
    std::vector<std::vector<ExpPoly>> generators;    // size = min_generators
    long solution_dim = 0;
    long generator_closure_rank = 0;
    bool generators_span = false;
    std::vector<UPoly> factors;
};

inline SolutionBasis solution_basis(const ModulePresentation& P, bool with_generators = true) {
    SolutionBasis out;
    auto sf = smith_form(P.rel, true);
    if ((int)sf.factors.size() != P.m)
        throw std::invalid_argument("solution_basis: module not torsion (free directions present)");
    out.factors = sf.factors;
    int m = P.m;
    // y = V z decouples the system into d_i(z_i) = 0
    auto apply_V = [&](int slot, const ExpPoly& z) {
        std::vector<ExpPoly> y(m);
        for (int k = 0; k < m; ++k) y[k] = z.apply(sf.V[k][slot]);
        return y;
    };
    std::vector<std::map<Rational, int>> roots(m);
    for (int i = 0; i < m; ++i) {
        const UPoly& f = sf.factors[i];
        if (f.degree() == 0) continue;
        auto rs = rational_roots(f);
        if (rs.cofactor.degree() > 0)
            throw std::invalid_argument("solution_basis: irrational eigenvalues - basis not representable (factor " +
                                        rs.cofactor.str() + ")");
        roots[i] = rs.roots;
        out.solution_dim += f.degree();
        for (const auto& [l, e] : rs.roots)
            for (int j = 0; j < e; ++j)
                out.basis.push_back(apply_V(i, ExpPoly::term(l, UPoly::monomial(j, Rational(1)))));
    }
    if (with_generators) {
        for (int i = 0; i < m; ++i) {
            if (sf.factors[i].degree() == 0) continue;
            // top partial-fraction residues: r_l = 1/prod_{mu != l} (l - mu)^{e_mu}
            ExpPoly c;
            for (const auto& [l, e] : roots[i]) {
                Rational r(1);
                for (const auto& [l2, e2] : roots[i]) {
                    if (l2 == l) continue;
                    for (int t = 0; t < e2; ++t) r *= (l - l2);
                }
                c += ExpPoly::term(l, UPoly::monomial(e - 1, r.inv()));
            }
            out.generators.push_back(apply_V(i, c));
        }
        out.generator_closure_rank = closure_rank(out.generators);
        out.generators_span = (out.generator_closure_rank == out.solution_dim);
    }
    return out;
}

} // namespace jetpde
