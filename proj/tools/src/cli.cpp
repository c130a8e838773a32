#include "szq/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "szq/szq.hpp"

namespace szq::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string measure = "lebesgue";
    int n = 0;
    int ell = 0;
    std::vector<std::string> prescribe;
    std::string tau;
    std::string omega;
    int grid = 4000;
    std::string out;
    std::string format = "json";
    std::string classical;
    std::optional<double> t;
    std::string rule_path;
};

// Failure carrying an exit code and a JSON body.
struct Exit {
    int code;
    json body;
};

bool is_input_condition(Condition c) {
    switch (c) {
        case Condition::input:
        case Condition::parse:
        case Condition::range:
        case Condition::domain:
        case Condition::invalid_parameter:
        case Condition::degree: return true;
        default: return false;
    }
}

json error_body(Condition c, const std::string& message) {
    return {{"condition", std::string(to_string(c))}, {"message", message}};
}

[[noreturn]] void input_error(const std::string& message) {
    throw Exit{kInputError, error_body(Condition::input, message)};
}

json pair(cplx z) { return json::array({round15(z.real()), round15(z.imag())}); }

json point(const UnitPoint& p) {
    return {{"theta", round15(p.theta())}, {"re", round15(p.z().real())}, {"im", round15(p.z().imag())}};
}

// Angle ("pi:<rational>" or radians) or "re,im" pair on the circle.
cplx parse_unit(const std::string& text, const char* what) {
    if (text.empty()) input_error(std::string("--") + what + " is required");
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.rfind("pi:", 0) == 0) return parse_angle(text).z();
    try {
        std::size_t u1 = 0, u2 = 0;
        const std::string re = text.substr(0, comma), im = text.substr(comma + 1);
        const double x = std::stod(re, &u1), y = std::stod(im, &u2);
        if (u1 != re.size() || u2 != im.size()) throw std::invalid_argument(text);
        return UnitPoint::from_complex({x, y}, 1e-12).z();
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(Condition::parse, std::string("bad --") + what + " value '" + text + "'");
    }
}

std::vector<UnitPoint> parse_alphas(const Options& o) {
    std::vector<UnitPoint> a;
    for (const auto& s : o.prescribe) a.push_back(parse_angle(s));
    return a;
}

int moment_order(const MeasureSpec& m, const Options& o) {
    if (std::holds_alternative<MomentFile>(m.kind())) return o.classical.empty() ? o.n - o.ell : o.n;
    return o.n + 1;
}

struct Problem {
    MeasureSpec measure;
    MomentSequence mu;
    SchurSequence s;
};

Problem load_problem(const Options& o, int ell) {
    if (o.n < 1) input_error("--n must be at least 1");
    if (ell < 0) input_error("--ell must be non-negative");
    Problem p{MeasureSpec::parse(o.measure), MomentSequence({1.0}), {}};
    p.mu = moments(p.measure, moment_order(p.measure, o));
    p.s = schur_from_moments(p.mu, o.n - ell);
    return p;
}

struct Resolved {
    PrescriptionResult pr;
    std::optional<ClassicalArcResult> classical;
    std::string kind;
};

Resolved resolve(const Options& o, const Problem& p) {
    const std::vector<UnitPoint> alphas = parse_alphas(o);
    const std::size_t k = alphas.size();
    const bool has_tau = !o.tau.empty();
    Resolved r;

    if (!o.classical.empty()) {
        const auto arc = p.measure.support();
        if (!arc) input_error("--classical needs a measure supported on an arc");
        ClassicalMode mode;
        if (o.classical == "lobatto") {
            if (k != 0) input_error("--classical lobatto takes no prescribed nodes");
            mode = LobattoMode{parse_unit(o.tau, "tau")};
        } else {
            if (k != 1) input_error("--classical peherstorfer needs exactly one prescribed node");
            if (has_tau) input_error("--tau is determined by the prescribed node");
            mode = PeherstorferMode{alphas[0]};
        }
        r.classical = classical_arc(p.mu, *arc, o.n, mode);
        r.pr = r.classical->prescription;
        r.pr.admissible = r.classical->admissible;
        r.kind = "classical-" + o.classical;
        return r;
    }

    const std::size_t l = static_cast<std::size_t>(o.ell);
    const bool fixed = (k == 2 * l + 1) || (o.ell == 0 && k == 1);
    if (fixed && has_tau) input_error("--tau is determined by the prescribed nodes");
    if (!fixed && !has_tau) input_error("--tau is required for this prescription");

    if (o.ell == 0 && k == 0) {
        r.pr.spec = {o.n, 0, ComplexPoly::constant(1.0), parse_unit(o.tau, "tau")};
        r.pr.spec.validate();
        r.pr.admissible = true;
        r.kind = "szego";
    } else if (o.ell == 0 && k == 1) {
        r.pr = radau(p.s, o.n, alphas[0]);
        r.kind = "radau";
    } else if (o.ell >= 1 && k == 2 * l) {
        const cplx tau = parse_unit(o.tau, "tau");
        if (o.ell == 1) {
            r.pr = lobatto2(p.s, o.n, alphas[0], alphas[1], tau, o.t);
            r.kind = "lobatto";
        } else {
            r.pr = prescribe_2l(p.s, o.n, o.ell, alphas, tau);
            r.kind = "prescribe-2l";
        }
    } else if (o.ell >= 1 && k == 2 * l + 1) {
        if (o.ell == 1) {
            r.pr = three_nodes(p.s, o.n, {alphas[0], alphas[1], alphas[2]});
            r.kind = "three-nodes";
        } else {
            r.pr = prescribe_2lp1(p.s, o.n, o.ell, alphas);
            r.kind = "prescribe-2l+1";
        }
    } else {
        input_error(std::to_string(k) + " prescribed nodes do not fit ell = " + std::to_string(o.ell));
    }
    return r;
}

json diagnostics_json(const Resolved& r) {
    const PrescriptionDiagnostics& d = r.pr.diagnostics;
    json j;
    j["prescription"] = r.kind;
    j["admissible"] = r.pr.admissible;
    j["tau"] = pair(r.pr.spec.tau);
    json f = json::array();
    for (cplx v : d.f_values) f.push_back(pair(v));
    j["f_values"] = std::move(f);
    j["condition_number"] = round15(d.condition);
    j["degenerate_case"] = d.degenerate_case;
    j["boundary"] = d.boundary;
    j["residual"] = round15(d.residual);
    json sp = json::array();
    for (cplx v : d.schur_params) sp.push_back(pair(v));
    j["schur_params"] = std::move(sp);
    if (d.tau_arc) j["tau_arc"] = {{"a", point(d.tau_arc->a())}, {"b", point(d.tau_arc->b())}};
    if (r.classical) {
        j["tau_hat"] = pair(r.classical->tau_hat);
        j["tau_hat_arc"] = {{"a", point(r.classical->tau_hat_arc.a())}, {"b", point(r.classical->tau_hat_arc.b())}};
    }
    return j;
}

[[noreturn]] void inadmissible(const Resolved& r, Condition c, const std::string& message) {
    json body = error_body(c, message);
    body["diagnostics"] = diagnostics_json(r);
    throw Exit{kInadmissible, std::move(body)};
}

std::string cmd_rule(const Options& o) {
    const int ell = o.classical.empty() ? o.ell : 1;
    const Problem p = load_problem(o, ell);
    const Resolved r = resolve(o, p);
    if (!r.pr.admissible) inadmissible(r, Condition::inadmissible, "prescription fails the Schur-Cohn test");
    QuadRule rule;
    try {
        rule = r.classical ? build_classical_rule(p.measure, p.mu, *r.classical) : build_rule(p.measure, p.mu, p.s, r.pr.spec);
    } catch (const Error& e) {
        if (is_input_condition(e.condition())) throw;
        inadmissible(r, e.condition(), e.detail());
    }
    if (o.format == "csv") return rule_to_csv(rule);
    // one extra moment exposes the bare z^{m+1} residual
    MomentSequence mu = p.mu;
    if (!std::holds_alternative<MomentFile>(p.measure.kind())) mu = moments(p.measure, rule.m + 8);
    const ExactnessReport rep = verify_exactness(rule, mu);
    return rule_to_json(rule, &rep) + "\n";
}

std::string cmd_zeros(const Options& o) {
    const int ell = o.classical.empty() ? o.ell : 1;
    const Problem p = load_problem(o, ell);
    const Resolved r = resolve(o, p);
    std::vector<UnitPoint> zs;
    if (r.classical) {
        zs = r.classical->nodes;
    } else if (r.pr.admissible) {
        zs = zeros_on_circle(r.pr.spec, p.s);
    } else {
        zs = invariant_sign_change_zeros(assemble(r.pr.spec, p.s), r.pr.spec.tau);
    }
    json j;
    j["n"] = o.n;
    j["ell"] = ell;
    j["measure"] = p.measure.to_string();
    json pc = json::array();
    for (cplx c : r.pr.spec.P.coeffs()) pc.push_back(pair(c));
    j["P"] = std::move(pc);
    json zj = json::array();
    for (const auto& z : zs) zj.push_back(point(z));
    j["zeros"] = std::move(zj);
    j["diagnostics"] = diagnostics_json(r);
    if (!r.pr.admissible) {
        json body = error_body(Condition::inadmissible, "prescription fails the Schur-Cohn test");
        body.update(j);
        throw Exit{kInadmissible, std::move(body)};
    }
    return canonical_json(j.dump()) + "\n";
}

std::string cmd_scan(const Options& o) {
    if (!o.classical.empty()) input_error("scan-tau does not take --classical");
    if (o.prescribe.size() != 2 * static_cast<std::size_t>(o.ell))
        input_error("scan-tau needs exactly 2*ell prescribed nodes");
    if (o.n < 1) input_error("--n must be at least 1");
    const MeasureSpec measure = MeasureSpec::parse(o.measure);
    const TauScan scan = scan_tau(measure, o.n, o.ell, parse_alphas(o), o.grid);
    if (o.format == "csv") {
        std::ostringstream out;
        out << "tau_theta,classification\n";
        char buf[64];
        for (std::size_t i = 0; i < scan.grid.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.15g,", scan.grid[i]);
            out << buf << to_string(scan.classes[i]) << "\n";
        }
        return out.str();
    }
    json j;
    j["n"] = o.n;
    j["ell"] = o.ell;
    j["measure"] = measure.to_string();
    j["grid"] = o.grid;
    json arcs = json::array();
    for (const auto& a : scan.arcs)
        arcs.push_back({{"begin", round15(a.begin)},
                        {"end", round15(a.end)},
                        {"begin_over_pi", round15(a.begin / std::numbers::pi)},
                        {"end_over_pi", round15(a.end / std::numbers::pi)}});
    j["arcs"] = std::move(arcs);
    std::map<std::string, int> counts;
    for (TauClass c : scan.classes) ++counts[to_string(c)];
    j["counts"] = counts;
    return canonical_json(j.dump()) + "\n";
}

std::string cmd_tau_for_omega(const Options& o) {
    if (o.prescribe.size() != 2 * static_cast<std::size_t>(o.ell))
        input_error("tau-for-omega needs exactly 2*ell prescribed nodes");
    const Problem p = load_problem(o, o.ell);
    const PrescriptionContext ctx(p.s, o.n, o.ell, parse_alphas(o));
    const TauForOmega res = tau_for_omega(ctx, parse_unit(o.omega, "omega"));
    json j;
    j["n"] = o.n;
    j["ell"] = o.ell;
    j["all_tau"] = res.all_tau;
    json taus = json::array();
    for (cplx t : res.taus)
        taus.push_back({{"tau", pair(t)}, {"theta_over_pi", round15(wrap_angle(std::arg(t)) / std::numbers::pi)}});
    j["taus"] = std::move(taus);
    return canonical_json(j.dump()) + "\n";
}

std::string cmd_verify(const Options& o) {
    std::ifstream in(o.rule_path);
    if (!in) input_error("cannot read rule file '" + o.rule_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    QuadRule rule = rule_from_json(buf.str());
    if (!o.measure.empty()) rule.measure = MeasureSpec::parse(o.measure);
    MomentSequence mu({1.0});
    try {
        mu = moments(rule.measure, rule.m + 8);
    } catch (const Error& e) {
        if (e.condition() != Condition::range) throw;
        mu = moments(rule.measure, rule.m);
    }
    const ExactnessReport rep = verify_exactness(rule, mu);
    json j = json::parse(rule_to_json(rule, &rep));
    if (!rep.passed) {
        json body = error_body(Condition::nodes_not_quadrature, "rule fails the exactness check");
        body["report"] = std::move(j["residuals"]);
        throw Exit{kInadmissible, std::move(body)};
    }
    return canonical_json(json{{"passed", true}, {"residuals", j["residuals"]}}.dump()) + "\n";
}

void add_common(CLI::App* sub, Options& o, bool prescription) {
    sub->add_option("--measure", o.measure, "lebesgue | rogers-szego:q=<f> | arc-lebesgue:a=<rad>,b=<rad> | file:<path>");
    sub->add_option("--out", o.out, "write output here instead of stdout");
    if (!prescription) return;
    sub->add_option("--n", o.n, "number of nodes")->required();
    sub->add_option("--ell", o.ell, "order deficit of the rule");
    sub->add_option("--prescribe", o.prescribe, "prescribed node angles (radians or pi:<rational>)");
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) input_error("cannot write '" + o.out + "'");
    f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Positive quadrature rules on the unit circle with prescribed nodes", "szq"};
    app.require_subcommand(1);

    auto* rule = app.add_subcommand("rule", "build a quadrature rule");
    add_common(rule, o, true);
    rule->add_option("--tau", o.tau, "invariance parameter: angle or re,im");
    rule->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
    rule->add_option("--classical", o.classical, "pin both ends of the support arc")
        ->check(CLI::IsMember({"lobatto", "peherstorfer"}));
    rule->add_option("--t", o.t, "chord parameter for the degenerate two-node case");

    auto* zeros = app.add_subcommand("zeros", "nodal polynomial, its zeros and diagnostics");
    add_common(zeros, o, true);
    zeros->add_option("--tau", o.tau, "invariance parameter: angle or re,im");
    zeros->add_option("--classical", o.classical)->check(CLI::IsMember({"lobatto", "peherstorfer"}));
    zeros->add_option("--t", o.t, "chord parameter for the degenerate two-node case");

    auto* scan = app.add_subcommand("scan-tau", "classify tau around the circle");
    add_common(scan, o, true);
    scan->add_option("--grid", o.grid, "number of grid points")->check(CLI::PositiveNumber);
    scan->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

    auto* tfo = app.add_subcommand("tau-for-omega", "invariance parameters giving a target omega");
    add_common(tfo, o, true);
    tfo->add_option("--omega", o.omega, "target: angle or re,im")->required();

    auto* verify = app.add_subcommand("verify", "check a rule JSON against the measure's moments");
    add_common(verify, o, false);
    verify->add_option("rule", o.rule_path, "rule JSON file")->required();
    o.measure.clear();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << error_body(Condition::input, e.what()).dump() << "\n";
        return kInputError;
    }
    if (o.measure.empty() && !verify->parsed()) o.measure = "lebesgue";

    try {
        std::string text;
        if (rule->parsed())
            text = cmd_rule(o);
        else if (zeros->parsed())
            text = cmd_zeros(o);
        else if (scan->parsed())
            text = cmd_scan(o);
        else if (tfo->parsed())
            text = cmd_tau_for_omega(o);
        else
            text = cmd_verify(o);
        emit(o, text, out);
        return kOk;
    } catch (const Exit& e) {
        try {
            emit(o, canonical_json(e.body.dump()) + "\n", out);
        } catch (const Exit&) {
            out << canonical_json(e.body.dump()) << "\n";
        }
        return e.code;
    } catch (const Error& e) {
        const int code = is_input_condition(e.condition()) ? kInputError : kInadmissible;
        out << canonical_json(error_body(e.condition(), e.detail()).dump()) << "\n";
        return code;
    } catch (const std::exception& e) {
        out << canonical_json(error_body(Condition::input, e.what()).dump()) << "\n";
        return kInputError;
    }
}

}  // namespace szq::cli
