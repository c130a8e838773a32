#include "szq/rule_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "szq/error.hpp"

namespace szq {

using nlohmann::json;

double round15(double x) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

namespace {

void write15(const json& j, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(2 * depth + 2), ' ');
    const std::string close(static_cast<std::size_t>(2 * depth), ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad + json(key).dump() + ": ";
            write15(value, depth + 1, out);
        }
        out += "\n" + close + "}";
    } else if (j.is_array() && !j.empty()) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ",\n";
            out += pad;
            write15(j[i], depth + 1, out);
        }
        out += "\n" + close + "]";
    } else if (j.is_number_float() && std::isfinite(j.get<double>())) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.15g", j.get<double>());
        out += buf;
        if (std::string_view(buf).find_first_of(".e") == std::string_view::npos) out += ".0";
    } else {
        out += j.dump();
    }
}

json pair(cplx z) { return json::array({round15(z.real()), round15(z.imag())}); }

cplx unpair(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error(Condition::parse, "expected a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string rule_to_json(const QuadRule& rule, const ExactnessReport* report) {
    json j;
    j["n"] = rule.n();
    j["ell"] = rule.ell;
    j["measure"] = rule.measure.to_string();
    j["tau"] = rule.tau ? pair(*rule.tau) : json(nullptr);
    j["omega"] = rule.omega ? pair(*rule.omega) : json(nullptr);
    j["m"] = rule.m;
    json nodes = json::array();
    for (const auto& p : rule.nodes)
        nodes.push_back({{"theta", round15(p.theta())}, {"re", round15(p.z().real())}, {"im", round15(p.z().imag())}});
    j["nodes"] = std::move(nodes);
    json w = json::array();
    for (double x : rule.weights) w.push_back(round15(x));
    j["weights"] = std::move(w);
    json res = json::object();
    if (report) {
        json r = json::array();
        for (double x : report->residuals) r.push_back(round15(x));
        res["moments"] = std::move(r);
        res["omega"] = report->omega_residual ? json(round15(*report->omega_residual)) : json(nullptr);
        res["bare"] = round15(report->bare_residual);
        res["first_failing_k"] = report->first_failing_k ? json(*report->first_failing_k) : json(nullptr);
        res["passed"] = report->passed;
    }
    j["residuals"] = std::move(res);
    std::string out;
    write15(j, 0, out);
    return out;
}

std::string canonical_json(const std::string& text) {
    std::string out;
    write15(json::parse(text), 0, out);
    return out;
}

QuadRule rule_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw Error(Condition::parse, std::string("rule JSON: ") + e.what());
    }
    try {
        QuadRule rule;
        rule.ell = j.at("ell").get<int>();
        rule.m = j.at("m").get<int>();
        if (j.contains("measure")) rule.measure = MeasureSpec::parse(j.at("measure").get<std::string>());
        if (j.contains("tau") && !j["tau"].is_null()) rule.tau = unpair(j["tau"]);
        if (j.contains("omega") && !j["omega"].is_null()) rule.omega = unpair(j["omega"]);
        for (const auto& node : j.at("nodes")) {
            const cplx z{node.at("re").get<double>(), node.at("im").get<double>()};
            rule.nodes.push_back(UnitPoint::from_complex(z, 1e-12));
        }
        for (const auto& w : j.at("weights")) rule.weights.push_back(w.get<double>());
        if (rule.weights.size() != rule.nodes.size() || j.at("n").get<int>() != rule.n())
            throw Error(Condition::parse, "node and weight counts disagree");
        return rule;
    } catch (const json::exception& e) {
        throw Error(Condition::parse, std::string("rule JSON: ") + e.what());
    }
}

std::string rule_to_csv(const QuadRule& rule) {
    std::ostringstream out;
    out << "theta,weight\n";
    char buf[80];
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.15g,%.15g\n", rule.nodes[i].theta(), rule.weights[i]);
        out << buf;
    }
    return out.str();
}

}  // namespace szq
