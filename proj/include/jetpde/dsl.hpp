// dsl.hpp
// -------
// Parser and renderer for the system-description language:
//
//   system NAME ; vars V+ ; unknowns U+ ; (eq EXPR [= 0] ;)+
//
// EXPR is a +/- separated list of terms, each `[POLY *] d(U ; i1 i2 ...)`,
// `[POLY *] U`; POLY uses +, -, *, ^, integers, rationals p/q, declared vars
// and parentheses.  d(U; i1 i2 ...) applies d_{i1} d_{i2} ... to U.
// Whitespace-insensitive; errors carry line and column.
#pragma once

#include "jetpde/diffop.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace jetpde {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
          line(l), col(c) {}
};

struct SystemSource {
    std::string name = "unnamed";
    std::vector<std::string> vars;
    std::vector<std::string> unknowns;
    DiffOperator op;
};

namespace dsl {

struct Token {
    enum Kind { Ident, Int, Punct, End } kind;
    std::string text;
    int line, col;
};

inline std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Token::Kind k, std::string t, int l, int c) { out.push_back({k, std::move(t), l, c}); };
    while (i < src.size()) {
        char ch = src[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace((unsigned char)ch)) {
            ++col;
            ++i;
            continue;
        }
        if (ch == '#') {    // comment to end of line
            while (i < src.size() && src[i] != '\n') ++i;
            continue;
        }
        int tl = line, tc = col;
        if (std::isalpha((unsigned char)ch) || ch == '_') {
            std::string t;
            while (i < src.size() && (std::isalnum((unsigned char)src[i]) || src[i] == '_')) {
                t += src[i++];
                ++col;
            }
            push(Token::Ident, t, tl, tc);
            continue;
        }
        if (std::isdigit((unsigned char)ch)) {
            std::string t;
            while (i < src.size() && std::isdigit((unsigned char)src[i])) {
                t += src[i++];
                ++col;
            }
            push(Token::Int, t, tl, tc);
            continue;
        }
        static const std::string puncts = ";=+-*/^()";
        if (puncts.find(ch) != std::string::npos) {
            push(Token::Punct, std::string(1, ch), tl, tc);
            ++i;
            ++col;
            continue;
        }
        throw ParseError(line, col, std::string("unexpected character '") + ch + "'");
    }
    push(Token::End, "", line, col);
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    SystemSource parse() {
        SystemSource s;
        bool saw_unknown_decl = false;
        std::vector<std::vector<std::tuple<int, MultiIndex, MPoly>>> equations;    // (k, mu, coeff)
        std::vector<std::tuple<std::string, int, int>> pending;    // names seen before decls resolved

        while (!at_end()) {
            if (accept_ident("system")) {
                s.name = expect_ident("system name");
                expect_semi();
            } else if (accept_ident("vars")) {
                strict_vars_ = true;
                while (cur().kind == Token::Ident) s.vars.push_back(next().text);
                expect_semi();
            } else if (accept_ident("unknowns")) {
                saw_unknown_decl = true;
                while (cur().kind == Token::Ident) s.unknowns.push_back(next().text);
                expect_semi();
            } else if (accept_ident("eq")) {
                equations.push_back(parse_equation(s, saw_unknown_decl));
                if (!accept_punct(";") && !at_end()) err("expected ';' after equation");
            } else {
                err("expected 'system', 'vars', 'unknowns' or 'eq'");
            }
        }
        int n = (int)s.vars.size();
        if (n == 0) {
            s.vars = {"x1"};    // no vars declared or referenced: one formal variable
            n = 1;
        }
        int m = (int)s.unknowns.size();
        if (m == 0) err("no unknowns declared or referenced");
        DiffOperator D(n, m, (int)equations.size());
        for (int r = 0; r < (int)equations.size(); ++r)
            for (auto& [k, mu, c] : equations[r]) {
                MultiIndex mm = mu;
                mm.resize(n, 0);
                MPoly cc(n);
                for (const auto& [mono, coef] : c.terms()) {
                    Monomial mono2 = mono;
                    mono2.resize(n, 0);
                    cc.add_term(mono2, coef);
                }
                D.add_term(r, k, mm, cc);
            }
        s.op = D;
        return s;
    }

private:
    using Term = std::tuple<int, MultiIndex, MPoly>;

    std::vector<Term> parse_equation(SystemSource& s, bool strict_unknowns) {
        std::vector<Term> terms;
        int sign = 1;
        if (accept_punct("+")) sign = 1;
        else if (accept_punct("-")) sign = -1;
        for (;;) {
            auto [k, mu, c] = parse_term(s, strict_unknowns);
            terms.push_back({k, mu, sign > 0 ? c : -c});
            if (accept_punct("+")) {
                sign = 1;
                continue;
            }
            if (accept_punct("-")) {
                sign = -1;
                continue;
            }
            break;
        }
        if (accept_punct("=")) {
            const Token& t = cur();
            if (t.kind != Token::Int || t.text != "0") err("right-hand side must be 0");
            next();
        }
        return terms;
    }

    // one term: polynomial factors * at most one jet atom
    Term parse_term(SystemSource& s, bool strict_unknowns) {
        // upper bound on variables seen so far; coefficients are re-sized at the end
        MPoly coeff = MPoly::constant(max_vars(s), Rational(1));
        bool have_jet = false;
        int k = 0;
        MultiIndex mu;
        for (;;) {
            if (cur().kind == Token::Ident && cur().text == "d" && peek_is_punct(1, "(")) {
                if (have_jet) err("more than one jet factor in a term");
                next();    // d
                next();    // (
                std::string u = expect_ident("unknown name");
                k = unknown_index(s, u, strict_unknowns);
                expect_punct(";");
                std::vector<int> idx;
                while (cur().kind == Token::Int) idx.push_back(std::stoi(next().text));
                expect_punct(")");
                if (idx.empty()) err("d() needs at least one index");
                mu = MultiIndex(max_vars(s), 0);
                for (int i : idx) {
                    if (i < 1) err("derivative index must be >= 1");
                    if (i > (int)s.vars.size()) {
                        if (strict_vars_) err("derivative index exceeds declared variables");
                        while ((int)s.vars.size() < i) s.vars.push_back("x" + std::to_string(s.vars.size() + 1));
                    }
                    if ((int)mu.size() < i) mu.resize(i, 0);
                    mu[i - 1] += 1;
                }
                have_jet = true;
            } else if (cur().kind == Token::Ident) {
                std::string name = cur().text;
                int vi = var_index(s, name);
                if (vi > 0) {
                    coeff = resize(coeff, max_vars(s)) * MPoly::variable(max_vars(s), vi);
                    next();
                    maybe_power(coeff, s, vi);
                } else {
                    // an unknown: order-0 jet
                    if (have_jet) err("more than one jet factor in a term");
                    k = unknown_index(s, name, strict_unknowns);
                    next();
                    mu = MultiIndex(max_vars(s), 0);
                    have_jet = true;
                }
            } else if (cur().kind == Token::Int || (cur().kind == Token::Punct && cur().text == "(")) {
                MPoly f = parse_poly_atom(s);
                coeff = resize(coeff, max_vars(s)) * resize(f, max_vars(s));
            } else {
                err("expected a coefficient or jet factor");
            }
            if (accept_punct("*")) continue;
            if (cur().kind == Token::Punct && cur().text == "/")
                err("non-polynomial coefficient: '/' is only allowed between integers");
            break;
        }
        if (!have_jet) err("term without an unknown (system must be linear homogeneous)");
        mu.resize(max_vars(s), 0);
        return {k, mu, resize(coeff, max_vars(s))};
    }

    // integer, rational p/q, or parenthesized polynomial expression; optional ^INT
    MPoly parse_poly_atom(SystemSource& s) {
        MPoly base(max_vars(s));
        if (cur().kind == Token::Int) {
            mpz_class num(next().text);
            if (accept_punct("/")) {
                if (cur().kind != Token::Int) err("expected denominator");
                mpz_class den(next().text);
                if (den == 0) err("zero denominator");
                base = MPoly::constant(max_vars(s), Rational(num, den));
            } else {
                base = MPoly::constant(max_vars(s), Rational(num));
            }
        } else if (accept_punct("(")) {
            base = parse_poly_expr(s);
            expect_punct(")");
        } else {
            err("expected a polynomial atom");
        }
        if (accept_punct("^")) {
            if (cur().kind != Token::Int) err("expected integer exponent");
            int e = std::stoi(next().text);
            MPoly p = MPoly::constant(max_vars(s), Rational(1));
            for (int i = 0; i < e; ++i) p = resize(p, max_vars(s)) * resize(base, max_vars(s));
            return p;
        }
        return base;
    }

    MPoly parse_poly_expr(SystemSource& s) {
        MPoly acc(max_vars(s));
        int sign = accept_punct("-") ? -1 : (accept_punct("+"), 1);
        for (;;) {
            MPoly term = parse_poly_term(s);
            acc = resize(acc, max_vars(s)) + (sign > 0 ? term : -term);
            if (accept_punct("+")) {
                sign = 1;
                continue;
            }
            if (accept_punct("-")) {
                sign = -1;
                continue;
            }
            break;
        }
        return acc;
    }

    MPoly parse_poly_term(SystemSource& s) {
        MPoly acc = MPoly::constant(max_vars(s), Rational(1));
        for (;;) {
            MPoly f(max_vars(s));
            if (cur().kind == Token::Ident) {
                std::string name = cur().text;
                int vi = var_index(s, name);
                if (vi == 0) err("'" + name + "' is not a declared variable (non-polynomial coefficient?)");
                next();
                f = MPoly::variable(max_vars(s), vi);
                if (accept_punct("^")) {
                    if (cur().kind != Token::Int) err("expected integer exponent");
                    int e = std::stoi(next().text);
                    MPoly p = MPoly::constant(max_vars(s), Rational(1));
                    for (int i = 0; i < e; ++i) p *= f;
                    f = p;
                }
            } else {
                f = parse_poly_atom(s);
            }
            acc = resize(acc, max_vars(s)) * resize(f, max_vars(s));
            if (accept_punct("*")) continue;
            break;
        }
        return acc;
    }

    void maybe_power(MPoly& coeff, SystemSource& s, int vi) {
        if (accept_punct("^")) {
            if (cur().kind != Token::Int) err("expected integer exponent");
            int e = std::stoi(next().text);
            for (int i = 1; i < e; ++i) coeff = resize(coeff, max_vars(s)) * MPoly::variable(max_vars(s), vi);
        }
    }

    int max_vars(const SystemSource& s) const { return std::max(1, (int)s.vars.size()); }
    static MPoly resize(const MPoly& p, int n) {
        if (p.nvars() == n) return p;
        MPoly q(n);
        for (const auto& [m, c] : p.terms()) {
            Monomial mm = m;
            mm.resize(n, 0);
            q.add_term(mm, c);
        }
        return q;
    }

    int var_index(const SystemSource& s, const std::string& name) const {
        for (size_t i = 0; i < s.vars.size(); ++i)
            if (s.vars[i] == name) return (int)i + 1;
        return 0;
    }
    int unknown_index(SystemSource& s, const std::string& name, bool strict) {
        for (size_t i = 0; i < s.unknowns.size(); ++i)
            if (s.unknowns[i] == name) return (int)i + 1;
        if (strict) err("undeclared unknown '" + name + "'");
        if (var_index(s, name)) err("'" + name + "' is declared as a variable");
        s.unknowns.push_back(name);
        return (int)s.unknowns.size();
    }

    const Token& cur() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool at_end() const { return cur().kind == Token::End; }
    bool peek_is_punct(int ahead, const std::string& p) const {
        return toks_[pos_ + ahead].kind == Token::Punct && toks_[pos_ + ahead].text == p;
    }
    bool accept_punct(const std::string& p) {
        if (cur().kind == Token::Punct && cur().text == p) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool accept_ident(const std::string& w) {
        if (cur().kind == Token::Ident && cur().text == w) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect_punct(const std::string& p) {
        if (!accept_punct(p)) err("expected '" + p + "'");
    }
    void expect_semi() {
        if (!accept_punct(";") && !at_end()) err("expected ';'");
    }
    std::string expect_ident(const std::string& what) {
        if (cur().kind != Token::Ident) err("expected " + what);
        return next().text;
    }
    [[noreturn]] void err(const std::string& msg) const { throw ParseError(cur().line, cur().col, msg); }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    bool strict_vars_ = false;
};

} // namespace dsl

inline SystemSource parse_system(const std::string& text) { return dsl::Parser(text).parse(); }

// Canonical rendering; parse(render(s)) reproduces s exactly.
inline std::string render_system(const SystemSource& s) {
    std::ostringstream os;
    os << "system " << s.name << ";\n";
    os << "vars";
    for (const auto& v : s.vars) os << " " << v;
    os << ";\nunknowns";
    for (const auto& u : s.unknowns) os << " " << u;
    os << ";\n";
    for (int r = 0; r < s.op.nrows(); ++r) {
        os << "eq ";
        auto terms = s.op.row_terms(r);
        std::vector<std::pair<std::pair<int, MultiIndex>, MPoly>> ts(terms.begin(), terms.end());
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            int la = mi_length(a.first.second), lb = mi_length(b.first.second);
            if (la != lb) return la > lb;
            if (a.first.second != b.first.second) return a.first.second < b.first.second;
            return a.first.first < b.first.first;
        });
        bool first = true;
        for (const auto& [km, c] : ts) {
            MPoly cc = c;
            bool neg = false;
            if (cc.terms().size() == 1 && cc.leading_term().second.sign() < 0) {
                neg = true;
                cc = -cc;
            }
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            std::string jet;
            if (mi_length(km.second) == 0) {
                jet = s.unknowns[km.first - 1];
            } else {
                jet = "d(" + s.unknowns[km.first - 1] + ";";
                for (size_t i = 0; i < km.second.size(); ++i)
                    for (int e = 0; e < km.second[i]; ++e) jet += " " + std::to_string(i + 1);
                jet += ")";
            }
            bool one = cc.is_constant() && cc.constant_value().is_one();
            if (one) {
                os << jet;
            } else if (cc.is_constant() || cc.terms().size() == 1) {
                os << cc.str(s.vars) << "*" << jet;
            } else {
                os << "(" << cc.str(s.vars) << ")*" << jet;
            }
        }
        if (first) os << "0*" << s.unknowns[0];    // zero row placeholder
        os << " = 0;\n";
    }
    return os.str();
}

} // namespace jetpde
