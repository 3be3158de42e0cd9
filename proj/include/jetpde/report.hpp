// report.hpp
// ----------
// Machine-readable command reports.  The structured format is JSON with the
// top-level keys command/input/result/certificates/timing_ms; every number
// that is not a count is an exact rational rendered "p/q".
#pragma once

#include "jetpde/diffop.hpp"

#include <json.hpp>

#include <string>

namespace jetpde {

struct Report {
    std::string command;
    nlohmann::json input = nlohmann::json::object();
    nlohmann::json result = nlohmann::json::object();
    nlohmann::json certificates = nlohmann::json::object();
    long timing_ms = 0;
    int exit_code = 0;
    std::string text;    // human-readable rendering

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["command"] = command;
        j["input"] = input;
        j["result"] = result;
        j["certificates"] = certificates;
        j["timing_ms"] = timing_ms;
        j["exit_code"] = exit_code;
        return j;
    }
    static Report from_json(const nlohmann::json& j) {
        Report r;
        r.command = j.at("command").get<std::string>();
        r.input = j.at("input");
        r.result = j.at("result");
        r.certificates = j.at("certificates");
        r.timing_ms = j.at("timing_ms").get<long>();
        r.exit_code = j.at("exit_code").get<int>();
        return r;
    }
    std::string structured() const { return to_json().dump(2) + "\n"; }
};

inline std::string fnv1a_digest(const std::string& s) {
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

// Rows of an operator rendered in the DSL term syntax.
inline nlohmann::json operator_rows_json(const DiffOperator& D, const std::vector<std::string>& vars,
                                         const std::vector<std::string>& unknowns) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < D.nrows(); ++r) {
        auto terms = D.row_terms(r);
        std::vector<std::pair<std::pair<int, MultiIndex>, MPoly>> ts(terms.begin(), terms.end());
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            int la = mi_length(a.first.second), lb = mi_length(b.first.second);
            if (la != lb) return la > lb;
            if (a.first.second != b.first.second) return a.first.second < b.first.second;
            return a.first.first < b.first.first;
        });
        std::string s;
        bool first = true;
        for (const auto& [km, c] : ts) {
            MPoly cc = c;
            bool neg = false;
            if (cc.terms().size() == 1 && cc.leading_term().second.sign() < 0) {
                neg = true;
                cc = -cc;
            }
            if (first) {
                if (neg) s += "-";
            } else {
                s += neg ? " - " : " + ";
            }
            first = false;
            std::string u = (km.first - 1 < (int)unknowns.size()) ? unknowns[km.first - 1]
                                                                  : "u" + std::to_string(km.first);
            std::string jet;
            if (mi_length(km.second) == 0) {
                jet = u;
            } else {
                jet = "d(" + u + ";";
                for (size_t i = 0; i < km.second.size(); ++i)
                    for (int e = 0; e < km.second[i]; ++e) jet += " " + std::to_string(i + 1);
                jet += ")";
            }
            bool one = cc.is_constant() && cc.constant_value().is_one();
            if (one)
                s += jet;
            else if (cc.is_constant() || cc.terms().size() == 1)
                s += cc.str(vars) + "*" + jet;
            else
                s += "(" + cc.str(vars) + ")*" + jet;
        }
        if (first) s = "0";
        rows.push_back(s + " = 0");
    }
    return rows;
}

} // namespace jetpde
