#include <sstream>

#include "json.hpp"

#include "antlyzer/analyzer.hpp"

namespace antlyzer {

namespace {

using json = nlohmann::ordered_json;

json set_to_json(const semilinear_set& s, const std::vector<std::string>& names) {
    json disjuncts = json::array();
    for (const auto& d : s.disjuncts) {
        json eq = json::array();
        json gt = json::array();
        for (const auto& c : d.constraints) {
            json row = json::array();
            for (const auto& v : c.coeffs) row.push_back(v.str());
            row.push_back(c.constant.str()); // constant last, same convention as the locus
            (c.rel == relation::eq ? eq : gt).push_back(std::move(row));
        }
        disjuncts.push_back(json{{"eq", std::move(eq)}, {"gt", std::move(gt)}});
    }
    return json{{"locus", format_locus(s, names)}, {"disjuncts", std::move(disjuncts)}};
}

json point_to_json(const std::vector<scalar>& x) {
    json a = json::array();
    for (const auto& v : x) a.push_back(v.str());
    return a;
}

std::string point_to_text(const std::vector<scalar>& x) {
    std::string s = "(";
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) s += ", ";
        s += x[i].str();
    }
    return s + ")";
}

} // namespace

std::string report_to_json(const analysis_report& r) {
    json j;
    j["verdict"] = verdict_name(r.v);
    j["domain"] = domain_name(r.domain);
    j["assumptions"] = json{{"G", r.assumption_g},
                            {"A", r.assumption_a},
                            {"H_after_power", r.assumption_h_after_power}};
    j["N"] = r.n_period > 0 ? json(r.n_period) : json(nullptr);

    json spectrum = json::array();
    for (const auto& e : r.spectrum) {
        json c;
        c["factor"] = e.factor;
        c["multiplicity"] = e.multiplicity;
        c["kind"] = e.kind;
        c["value"] = e.value ? json(*e.value) : json(nullptr);
        c["module_sq"] = e.module_sq;
        c["unity_order"] = e.unity ? json(*e.unity) : json(nullptr);
        spectrum.push_back(std::move(c));
    }
    j["spectrum"] = std::move(spectrum);

    j["ant"] = r.ant ? set_to_json(*r.ant, r.names) : json(nullptr);
    j["witness"] = r.witness ? point_to_json(*r.witness) : json(nullptr);
    j["terminating_precondition"] =
        r.terminating_precondition ? set_to_json(*r.terminating_precondition, r.names)
                                   : json(nullptr);
    j["unknown_reason"] =
        r.reason == unknown_reason::none ? json(nullptr) : json(unknown_reason_name(r.reason));
    j["stats"] = json{{"elapsed_ms", r.elapsed_ms},
                      {"disjuncts", r.ant ? r.ant->disjuncts.size() : 0},
                      {"notes", r.notes}};
    return j.dump(2);
}

std::string report_to_text(const analysis_report& r) {
    std::ostringstream out;
    out << "domain: " << domain_name(r.domain) << "\n";

    if (!r.spectrum.empty()) {
        out << "spectrum:\n";
        for (const auto& e : r.spectrum) {
            out << "  (" << e.factor << ")^" << e.multiplicity << "  [" << e.kind << "]";
            if (e.value) out << "  value=" << *e.value;
            out << "  |.|^2=" << e.module_sq;
            if (e.unity) out << "  unity_order=" << *e.unity;
            out << "\n";
        }
    }
    out << "assumptions: G=" << r.assumption_g << "  A=" << r.assumption_a
        << "  H_after_power=" << r.assumption_h_after_power << "\n";
    if (r.n_period > 0) out << "power period N: " << r.n_period << "\n";

    if (r.ant) {
        out << "asymptotic nontermination set (" << r.ant->disjuncts.size()
            << " disjuncts):\n  " << format_locus(*r.ant, r.names) << "\n";
    }
    if (r.witness) out << "witness: " << point_to_text(*r.witness) << "\n";
    if (r.terminating_precondition)
        out << "terminating precondition:\n  "
            << format_locus(*r.terminating_precondition, r.names) << "\n";
    if (r.reason != unknown_reason::none)
        out << "unknown_reason: " << unknown_reason_name(r.reason) << "\n";
    for (const auto& n : r.notes) out << "note: " << n << "\n";
    out << "elapsed: " << r.elapsed_ms << " ms\n";
    out << verdict_name(r.v) << "\n";
    return out.str();
}

} // namespace antlyzer
