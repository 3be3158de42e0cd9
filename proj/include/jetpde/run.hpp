// run.hpp
// -------
// Command dispatch shared by the CLI binary and the tests.  Every command
// returns a Report; exit codes are 0 (success), 2 (inconclusive within
// bounds), 1 (error).
#pragma once

#include "jetpde/catalog.hpp"
#include "jetpde/cc.hpp"
#include "jetpde/cosserat.hpp"
#include "jetpde/delta.hpp"
#include "jetpde/dsl.hpp"
#include "jetpde/involution.hpp"
#include "jetpde/macaulay.hpp"
#include "jetpde/parametrize.hpp"
#include "jetpde/purity.hpp"
#include "jetpde/report.hpp"
#include "jetpde/ricci.hpp"
#include "jetpde/sequences.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace jetpde {

struct RunOptions {
    int order_max = -1;
    int deg_max = -1;
    int r_max = 4;
    unsigned seed = 0;
    int prolong = 0;
    std::string format = "text";
    std::string element;              // purity
    int n = 0;                        // cosserat / split
    std::string metric = "euclid";    // split: euclid | minkowski
    std::string rho;                  // split: "a,b;c,d" rational rows
    std::string omega;                // split: explicit metric, same syntax
};

struct RunInput {
    bool is_catalog = false;
    std::string catalog_name;
    int catalog_n = 0;
    std::string text;      // DSL source otherwise
    std::string origin;    // provenance string for the report
};

inline RunInput input_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return {false, "", 0, ss.str(), path};
}
inline RunInput input_from_text(const std::string& text) { return {false, "", 0, text, "<inline>"}; }
inline RunInput input_from_catalog(const std::string& name, int n) {
    return {true, name, n, "", "catalog " + name + " " + std::to_string(n)};
}

namespace detail {

struct Loaded {
    SystemSource src;
    nlohmann::json meta;
};

inline Loaded load(const RunInput& in) {
    Loaded out;
    if (in.is_catalog) {
        out.src.op = catalog(in.catalog_name, in.catalog_n);
        out.src.name = in.catalog_name;
        for (int i = 1; i <= out.src.op.nvars(); ++i) out.src.vars.push_back("x" + std::to_string(i));
        for (int k = 1; k <= out.src.op.nunknowns(); ++k)
            out.src.unknowns.push_back("u" + std::to_string(k));
        out.meta["catalog"] = in.catalog_name;
        out.meta["n"] = in.catalog_n;
    } else {
        out.src = parse_system(in.text);
        out.meta["digest"] = fnv1a_digest(in.text);
    }
    out.meta["origin"] = in.origin;
    out.meta["name"] = out.src.name;
    out.meta["vars"] = out.src.vars;
    out.meta["unknowns"] = out.src.unknowns;
    out.meta["equations"] = out.src.op.nrows();
    out.meta["order"] = out.src.op.order();
    return out;
}

inline nlohmann::json characters_json(const CharacterTable& t) {
    nlohmann::json j;
    j["order"] = t.q;
    j["beta"] = t.beta;
    j["alpha"] = t.alpha;
    j["dim_g_q"] = t.dim_gq;
    j["dim_g_q1"] = t.dim_gq1;
    j["cartan_sum"] = t.cartan_sum;
    j["involutive_symbol"] = t.involutive_symbol;
    j["delta_regular"] = t.delta_regular;
    j["coordinate_change"] = t.coordinate_change;
    j["status"] = t.status;
    return j;
}

inline nlohmann::json cc_json(const CCResult& cc, const SystemSource& src,
                              const std::vector<std::string>& comp_names) {
    nlohmann::json j;
    j["generators"] = operator_rows_json(cc.generators, src.vars, comp_names);
    j["orders"] = cc.orders;
    j["count"] = cc.generators.nrows();
    j["possibly_incomplete"] = cc.possibly_incomplete;
    j["note"] = cc.note;
    j["order_max"] = cc.s_max;
    j["deg_max"] = cc.d_max;
    nlohmann::json cert = nlohmann::json::array();
    for (const auto& c : cc.certificate)
        cert.push_back({{"order", c.order},
                        {"cc_space_dim", c.cc_space_dim},
                        {"generated_dim", c.generated_dim},
                        {"new_generators", c.new_generators}});
    j["certificate"] = cert;
    return j;
}

inline std::vector<std::string> numbered(const std::string& base, int count) {
    std::vector<std::string> v;
    for (int i = 1; i <= count; ++i) v.push_back(base + std::to_string(i));
    return v;
}

inline std::vector<std::vector<Rational>> parse_matrix(const std::string& s, int n) {
    std::vector<std::vector<Rational>> M;
    std::stringstream rows(s);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<Rational> r;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            cell.erase(remove_if(cell.begin(), cell.end(), ::isspace), cell.end());
            if (!cell.empty()) r.push_back(Rational::from_string(cell));
        }
        if (!r.empty()) M.push_back(r);
    }
    if ((int)M.size() != n) throw std::runtime_error("matrix must have " + std::to_string(n) + " rows");
    for (auto& r : M)
        if ((int)r.size() != n) throw std::runtime_error("matrix rows must have " + std::to_string(n) + " entries");
    return M;
}

} // namespace detail

Report run_command(const std::string& command, const RunInput& input, const RunOptions& opts);

namespace commands {

inline void analyze(Report& rep, const detail::Loaded& L, const RunOptions& o) {
    std::ostringstream text;
    JetSystem S0(L.src.op);
    nlohmann::json dims0 = nlohmann::json::array();
    for (long d : S0.dims(o.r_max)) dims0.push_back(d);
    rep.result["dims"] = dims0;
    text << "dim R_{q+r}, r = 0.." << o.r_max << ":";
    for (long d : S0.dims(o.r_max)) text << " " << d;
    text << "\n";
    if (L.src.op.is_zero()) {
        rep.result["free_system"] = true;
        text << "free system (no equations): dim J_{q+r} table above\n";
        rep.text = text.str();
        return;
    }
    auto fi = check_formal_integrability(L.src.op, o.r_max);
    rep.result["formally_integrable"] = fi.formally_integrable;
    rep.result["no_solutions"] = fi.no_solutions;
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& st : fi.trace)
        trace.push_back({{"at_order", st.at_order},
                         {"added", operator_rows_json(st.added, L.src.vars, L.src.unknowns)}});
    rep.result["completion_trace"] = trace;
    text << "formally integrable: " << (fi.formally_integrable ? "yes" : "no")
         << (fi.undetermined ? " (undetermined within budget)" : "") << "\n";
    if (!fi.trace.empty()) {
        text << "completion adjoined " << fi.trace.size() << " step(s):\n";
        for (const auto& st : fi.trace)
            for (const auto& row : operator_rows_json(st.added, L.src.vars, L.src.unknowns))
                text << "  [order " << st.at_order << "] " << row.get<std::string>() << "\n";
    }
    if (fi.no_solutions) text << "system forces all unknowns to vanish: no solutions\n";

    auto inv = bring_to_involution(L.src.op, o.r_max, o.seed);
    rep.result["involution_reached"] = inv.success;
    rep.result["prolongations"] = inv.prolongations;
    rep.result["log"] = inv.log;
    if (!inv.success) {
        rep.exit_code = 2;
        rep.text = text.str() + "involution not reached within budget\n";
        return;
    }
    rep.result["involutive_order"] = inv.system.order();
    rep.result["characters"] = detail::characters_json(inv.table);
    text << "involutive at order " << inv.system.order() << " after " << inv.prolongations
         << " prolongation(s)\n";
    text << "beta:";
    for (long b : inv.table.beta) text << " " << b;
    text << "   alpha:";
    for (long a : inv.table.alpha) text << " " << a;
    text << "\n";
    JetSystem S(inv.system);
    auto H = hilbert_polynomial(inv.table, S.dim_R(0));
    rep.result["hilbert"] = H.str("r");
    nlohmann::json dims = nlohmann::json::array();
    bool match = true;
    for (int r = 0; r <= o.r_max; ++r) {
        long dr = S.dim_R(r);
        dims.push_back(dr);
        if (H.eval(Rational(r)) != Rational(dr)) match = false;
    }
    rep.result["dims_at_involutive_order"] = dims;
    rep.certificates["hilbert_matches_dims"] = match;
    nlohmann::json excl = nlohmann::json::array();
    for (const auto& p : S.excluded_locus()) excl.push_back(p);
    rep.certificates["excluded_locus"] = excl;
    text << "Hilbert polynomial: " << H.str("r") << (match ? "  (matches dims)" : "  (MISMATCH)") << "\n";
    rep.text = text.str();
}

inline void characters_cmd(Report& rep, const detail::Loaded& L, const RunOptions& o) {
    auto fi = check_formal_integrability(L.src.op, o.r_max);
    DiffOperator D = fi.completed;
    for (int i = 0; i < o.prolong; ++i) D = D.prolong(1);
    auto tab = characters(D, o.seed);
    rep.result["formally_integrable"] = fi.formally_integrable;
    rep.result["prolong"] = o.prolong;
    rep.result["characters"] = detail::characters_json(tab);
    std::ostringstream text;
    text << "order " << tab.q << ": beta:";
    for (long b : tab.beta) text << " " << b;
    text << "  alpha:";
    for (long a : tab.alpha) text << " " << a;
    text << "\ndim g_q = " << tab.dim_gq << ", dim g_{q+1} = " << tab.dim_gq1
         << ", Cartan sum = " << tab.cartan_sum << "\n"
         << tab.status << "\n";
    rep.text = text.str();
}

inline void cc_cmd(Report& rep, const detail::Loaded& L, const RunOptions& o) {
    auto cc = compatibility_conditions(L.src.op, o.order_max, o.deg_max);
    auto comp = detail::numbered("f", L.src.op.nrows());
    rep.result["cc"] = detail::cc_json(cc, L.src, comp);
    rep.certificates["composition_zero"] = cc.generators.compose(L.src.op).is_zero();
    rep.certificates["note"] = cc.note;
    if (cc.possibly_incomplete) rep.exit_code = 2;
    std::ostringstream text;
    text << cc.generators.nrows() << " generating compatibility condition(s), orders:";
    for (int t : cc.orders) text << " " << t;
    text << "\n";
    for (const auto& row : operator_rows_json(cc.generators, L.src.vars, comp))
        text << "  " << row.get<std::string>() << "\n";
    text << cc.note << "\n";
    rep.text = text.str();
}

inline void adjoint_cmd(Report& rep, const detail::Loaded& L) {
    auto ad = L.src.op.adjoint();
    auto lam = detail::numbered("l", L.src.op.nrows());
    rep.result["adjoint"] = operator_rows_json(ad, L.src.vars, lam);
    rep.result["rows"] = ad.nrows();
    rep.certificates["involutive_adjoint"] = (ad.adjoint() == L.src.op);
    std::ostringstream text;
    text << "formal adjoint (test functions " << lam.front() << ".." << lam.back() << "):\n";
    for (const auto& row : operator_rows_json(ad, L.src.vars, lam)) text << "  " << row.get<std::string>() << "\n";
    rep.text = text.str();
}

inline void parametrize_cmd(Report& rep, const detail::Loaded& L, const RunOptions& o) {
    auto pr = parametrization_test(L.src.op, o.order_max, o.deg_max);
    const char* verdict = pr.verdict == ParamVerdict::Parametrizable     ? "parametrizable"
                          : pr.verdict == ParamVerdict::NotParametrizable ? "not parametrizable"
                                                                          : "inconclusive within bounds";
    rep.result["verdict"] = verdict;
    auto lam = detail::numbered("l", L.src.op.nrows());
    rep.result["adjoint"] = operator_rows_json(pr.adjoint_op, L.src.vars, lam);
    auto phi = detail::numbered("phi", pr.parametrization.nunknowns());
    if (pr.verdict == ParamVerdict::Parametrizable)
        rep.result["parametrization"] = operator_rows_json(pr.parametrization, L.src.vars, phi);
    rep.result["potentials"] = pr.parametrization.nunknowns();
    rep.certificates["composition_zero"] = pr.composition_zero;
    rep.certificates["cc_of_adjoint"] = detail::cc_json(pr.cc_of_adjoint, L.src, detail::numbered("m", pr.adjoint_op.nrows()));
    rep.certificates["cc_of_candidate"] = detail::cc_json(pr.cc_of_candidate, L.src, L.src.unknowns);
    rep.certificates["note"] = pr.note;
    if (pr.verdict == ParamVerdict::Inconclusive) rep.exit_code = 2;
    std::ostringstream text;
    text << verdict << "\n";
    if (pr.verdict == ParamVerdict::Parametrizable) {
        text << "parametrization by " << pr.parametrization.nunknowns() << " potential(s):\n";
        auto rows = operator_rows_json(pr.parametrization, L.src.vars, phi);
        for (int r = 0; r < (int)rows.size(); ++r)
            text << "  " << L.src.unknowns[r] << " <- " << rows[r].get<std::string>() << "\n";
    }
    text << pr.note << "\n";
    rep.text = text.str();
}

inline void spencer_dims_cmd(Report& rep, const detail::Loaded& L, const RunOptions& o) {
    auto inv = bring_to_involution(L.src.op, o.r_max, o.seed);
    if (!inv.success) {
        rep.exit_code = 2;
        rep.text = "involution not reached within budget\n";
        rep.result["involution_reached"] = false;
        return;
    }
    JetSystem S(inv.system);
    auto d = janet_spencer_dims(S);
    rep.result["order"] = d.q;
    rep.result["dim_Rq"] = d.dim_Rq;
    rep.result["F"] = d.F;
    rep.result["C"] = d.C;
    rep.result["CE"] = d.CE;
    bool exact = true;
    for (int r = 0; r <= d.n; ++r) exact = exact && (d.CE[r] == d.C[r] + d.F[r]);
    rep.certificates["columns_exact"] = exact;
    std::ostringstream text;
    text << "Janet/Spencer bundle dimensions at involutive order " << d.q << " (dim R_q = " << d.dim_Rq
         << ")\n  r:     ";
    for (int r = 0; r <= d.n; ++r) text << r << "\t";
    text << "\n  F_r:   ";
    for (auto x : d.F) text << x << "\t";
    text << "\n  C_r:   ";
    for (auto x : d.C) text << x << "\t";
    text << "\n  C_r(E):";
    for (auto x : d.CE) text << x << "\t";
    text << "\n";
    rep.text = text.str();
}

inline void spencer_ops_cmd(Report& rep, const detail::Loaded& L, const RunOptions& o) {
    auto inv = bring_to_involution(L.src.op, o.r_max, o.seed);
    if (!inv.success) {
        rep.exit_code = 2;
        rep.text = "involution not reached within budget\n";
        return;
    }
    auto sp = spencer_operators(inv.system);
    std::vector<std::string> z = detail::numbered("z", (int)sp.parametric.size());
    nlohmann::json legend = nlohmann::json::array();
    for (size_t i = 0; i < sp.parametric.size(); ++i) {
        auto [k, mu] = sp.parametric[i];
        legend.push_back(z[i] + " = " + jet_name(k, mu, L.src.unknowns));
    }
    rep.result["finite_type"] = sp.finite_type;
    rep.result["parametric"] = legend;
    rep.result["D1"] = operator_rows_json(sp.D1, L.src.vars, z);
    rep.result["D1_rows"] = sp.D1.nrows();
    std::ostringstream text;
    text << "parametric jets of R_q: ";
    for (const auto& l : legend) text << l.get<std::string>() << "  ";
    text << "\nfirst Spencer operator D1 (" << sp.D1.nrows() << " components):\n";
    for (const auto& row : rep.result["D1"]) text << "  " << row.get<std::string>() << "\n";
    if (sp.finite_type && sp.D2.nrows() > 0) {
        std::vector<std::string> w;
        for (int a = 0; a < (int)sp.parametric.size(); ++a)
            for (int i = 1; i <= sp.D1.nvars(); ++i)
                w.push_back("w" + std::to_string(a + 1) + "_" + std::to_string(i));
        rep.result["D2"] = operator_rows_json(sp.D2, L.src.vars, w);
        rep.certificates["D2_D1_zero"] = sp.D2.compose(sp.D1).is_zero();
        text << "second Spencer operator D2 (" << sp.D2.nrows() << " components), D2 o D1 = 0: "
             << (sp.D2.compose(sp.D1).is_zero() ? "yes" : "NO") << "\n";
    }
    rep.text = text.str();
}

inline void cosserat_cmd(Report& rep, const RunOptions& o) {
    int n = o.n ? o.n : 2;
    auto c = cosserat_check(n);
    rep.result["n"] = n;
    rep.result["equations"] = operator_rows_json(c.equations, {}, c.dual_names);
    rep.certificates["structure_ok"] = c.structure_ok;
    std::ostringstream text;
    text << "Cosserat equations for n = " << n << " (adjoint of the first Spencer operator):\n";
    for (const auto& row : rep.result["equations"]) text << "  " << row.get<std::string>() << "\n";
    if (n == 2) {
        rep.result["parametrization"] = operator_rows_json(c.parametrization, {}, {"phi1", "phi2", "phi3"});
        rep.certificates["parametrization_zero"] = c.parametrization_zero;
        rep.certificates["airy_symmetric"] = c.airy_symmetric;
        rep.certificates["airy_couple_free"] = c.airy_couple_free;
        text << "three-potential parametrization residual zero: " << (c.parametrization_zero ? "yes" : "NO")
             << "\nAiry specialization: sigma12 = sigma21 " << (c.airy_symmetric ? "ok" : "FAIL")
             << ", couple stress vanishes " << (c.airy_couple_free ? "ok" : "FAIL") << "\n";
    }
    if (!c.structure_ok || (n == 2 && !(c.parametrization_zero && c.airy_symmetric && c.airy_couple_free)))
        rep.exit_code = 1;
    rep.text = text.str();
}

inline void split_cmd(Report& rep, const RunOptions& o) {
    int n = o.n ? o.n : 4;
    auto omega = o.omega.empty()
                     ? (o.metric == "minkowski" ? minkowski_metric_matrix(n) : euclid_metric_matrix(n))
                     : detail::parse_matrix(o.omega, n);
    if (o.rho.empty()) throw std::runtime_error("split: --rho is required (';'-separated rows)");
    auto rho = detail::parse_matrix(o.rho, n);
    auto st = ricci_weyl_split(omega, rho);
    rep.result["n"] = n;
    rep.result["rho_scalar"] = st.rho_scalar.str();
    nlohmann::json tau = nlohmann::json::array(), rho4 = nlohmann::json::array();
    for (int i = 0; i < n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < n; ++j) row.push_back(st.tau[i][j].str());
        tau.push_back(row);
    }
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (!st.rho4[k][l][i][j].is_zero())
                        rho4.push_back({{"k", k + 1},
                                        {"l", l + 1},
                                        {"i", i + 1},
                                        {"j", j + 1},
                                        {"value", st.rho4[k][l][i][j].str()}});
    rep.result["tau"] = tau;
    rep.result["rho4_nonzero"] = rho4;
    rep.certificates["trace_identity"] = st.trace_identity_ok;
    std::ostringstream text;
    text << "scalar rho = " << st.rho_scalar.str() << "; trace-back identity rho^r_{i,rj} = rho_ij: "
         << (st.trace_identity_ok ? "exact" : "FAIL") << "\n"
         << rho4.size() << " nonzero components rho^k_{l,ij} (i < j)\n";
    if (!st.trace_identity_ok) rep.exit_code = 1;
    rep.text = text.str();
}

inline void macaulay_cmd(Report& rep, const detail::Loaded& L) {
    const DiffOperator& D = L.src.op;
    if (D.nvars() != 1) throw std::runtime_error("macaulay: presentation must be univariate (one variable)");
    ModulePresentation P;
    P.m = D.nunknowns();
    P.rel.assign(D.nrows(), std::vector<UPoly>(P.m, UPoly()));
    for (const auto& [key, c] : D.entries()) {
        if (!c.is_constant())
            throw std::runtime_error("macaulay: coefficients must be constants over Q[d]");
        int deg = std::get<2>(key)[0];
        P.rel[std::get<0>(key)][std::get<1>(key) - 1] += UPoly::monomial(deg, c.constant_value());
    }
    auto fac = decompose(P);
    nlohmann::json fj = nlohmann::json::array();
    for (const auto& f : fac) fj.push_back(f.str());
    rep.result["invariant_factors"] = fj;
    std::ostringstream text;
    text << "invariant factors:";
    for (const auto& f : fac) text << "  " << f.str();
    text << "\n";
    bool torsion = ((int)fac.size() == P.m);
    rep.result["torsion"] = torsion;
    if (!torsion) {
        rep.result["free_rank"] = P.m - (int)fac.size();
        text << "module not torsion (free rank " << P.m - (int)fac.size()
             << "); minimal-generator theorem inapplicable\n";
        rep.text = text.str();
        return;
    }
    long g = min_generators(P);
    rep.result["min_generators"] = g;
    text << "minimum number of generators of the solution module: " << g << "\n";
    try {
        auto sol = solution_basis(P);
        nlohmann::json bj = nlohmann::json::array(), gj = nlohmann::json::array();
        for (const auto& b : sol.basis) {
            std::string s = "(";
            for (size_t k = 0; k < b.size(); ++k) s += (k ? ", " : "") + b[k].str();
            bj.push_back(s + ")");
        }
        for (const auto& gen : sol.generators) {
            std::string s = "(";
            for (size_t k = 0; k < gen.size(); ++k) s += (k ? ", " : "") + gen[k].str();
            gj.push_back(s + ")");
        }
        rep.result["solution_dim"] = sol.solution_dim;
        rep.result["basis"] = bj;
        rep.result["generators"] = gj;
        rep.certificates["generator_closure_rank"] = sol.generator_closure_rank;
        rep.certificates["generators_span"] = sol.generators_span;
        text << "solution space dimension " << sol.solution_dim << "; basis:";
        for (const auto& b : bj) text << "  " << b.get<std::string>();
        text << "\ngenerators (derivative closure rank " << sol.generator_closure_rank << "):";
        for (const auto& gen : gj) text << "  " << gen.get<std::string>();
        text << "\n";
    } catch (const std::invalid_argument& e) {
        rep.result["solution_basis_error"] = e.what();
        text << e.what() << "\n";
        rep.exit_code = 1;
    }
    rep.text = text.str();
}

inline void purity_cmd(Report& rep, const detail::Loaded& L, const RunOptions& o) {
    if (o.element.empty()) throw std::runtime_error("purity: --element EXPR is required");
    // parse the element through the DSL with the same declarations
    std::ostringstream src;
    src << "vars";
    for (const auto& v : L.src.vars) src << " " << v;
    src << "; unknowns";
    for (const auto& u : L.src.unknowns) src << " " << u;
    src << "; eq " << o.element << " = 0;";
    auto zsrc = parse_system(src.str());
    auto pr = purity_classify(L.src.op, zsrc.op, o.order_max);
    rep.result["element"] = o.element;
    rep.result["torsion"] = pr.torsion;
    rep.result["r"] = pr.r;
    rep.result["annihilator"] = operator_rows_json(pr.annihilator, L.src.vars, {"z"});
    rep.result["annihilator_orders"] = pr.ann_orders;
    if (pr.torsion && pr.r >= 0 && !pr.characters.alpha.empty())
        rep.result["characters"] = detail::characters_json(pr.characters);
    rep.result["note"] = pr.note;
    if (pr.bound_exhausted) {
        rep.exit_code = 2;
        rep.result["bound_exhausted"] = true;
    }
    std::ostringstream text;
    if (!pr.torsion)
        text << "element is not torsion\n";
    else
        text << "element lies in t_" << pr.r << "(M)\n";
    text << pr.note << "\nannihilator system on z:\n";
    for (const auto& row : rep.result["annihilator"]) text << "  " << row.get<std::string>() << "\n";
    rep.text = text.str();
}

inline void catalog_list_cmd(Report& rep) {
    nlohmann::json arr = nlohmann::json::array();
    std::ostringstream text;
    for (const auto& e : catalog_list()) {
        arr.push_back({{"name", e.name}, {"description", e.description}, {"valid_n", e.valid_n}});
        text << e.name << " (n:";
        for (int n : e.valid_n) text << " " << n;
        text << "): " << e.description << "\n";
    }
    rep.result["catalog"] = arr;
    rep.text = text.str();
}

} // namespace commands

inline Report run_command(const std::string& command, const RunInput& input, const RunOptions& opts) {
    Report rep;
    rep.command = command;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (command == "catalog-list") {
            commands::catalog_list_cmd(rep);
        } else if (command == "cosserat") {
            commands::cosserat_cmd(rep, opts);
        } else if (command == "split") {
            commands::split_cmd(rep, opts);
        } else {
            auto L = detail::load(input);
            rep.input = L.meta;
            if (command == "analyze")
                commands::analyze(rep, L, opts);
            else if (command == "characters")
                commands::characters_cmd(rep, L, opts);
            else if (command == "cc")
                commands::cc_cmd(rep, L, opts);
            else if (command == "adjoint")
                commands::adjoint_cmd(rep, L);
            else if (command == "parametrize")
                commands::parametrize_cmd(rep, L, opts);
            else if (command == "spencer-dims")
                commands::spencer_dims_cmd(rep, L, opts);
            else if (command == "spencer-ops")
                commands::spencer_ops_cmd(rep, L, opts);
            else if (command == "macaulay")
                commands::macaulay_cmd(rep, L);
            else if (command == "purity")
                commands::purity_cmd(rep, L, opts);
            else
                throw std::runtime_error("unknown command '" + command + "'");
        }
    } catch (const std::exception& e) {
        rep.exit_code = 1;
        rep.result["error"] = e.what();
        rep.text = std::string("error: ") + e.what() + "\n";
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.timing_ms = (long)std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rep;
}

} // namespace jetpde
