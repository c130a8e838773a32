#include "szq/measures.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "szq/error.hpp"

namespace szq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void validate(const MeasureSpec::Kind& k) {
    if (const auto* rs = std::get_if<RogersSzego>(&k)) {
        if (!(rs->q > 0.0 && rs->q < 1.0))
            throw Error(Condition::invalid_parameter, "Rogers-Szego parameter q must lie in (0,1)");
    } else if (const auto* arc = std::get_if<ArcLebesgue>(&k)) {
        if (!(arc->theta_a < arc->theta_b && arc->theta_b < arc->theta_a + kTwoPi))
            throw Error(Condition::invalid_parameter, "arc endpoints need a < b < a + 2pi");
    }
}

}  // namespace

ArcSpec::ArcSpec(UnitPoint a, UnitPoint b) : a_(a), b_(b), span_(wrap_angle(b.theta() - a.theta())) {
    if (span_ == 0.0) throw Error(Condition::invalid_parameter, "arc endpoints coincide");
}

ArcSpec ArcSpec::through(cplx x, cplx c, cplx y) {
    UnitPoint px = UnitPoint::from_complex(x, 1e-9), py = UnitPoint::from_complex(y, 1e-9);
    return counterclockwise(x, c, y) ? ArcSpec(px, py) : ArcSpec(py, px);
}

bool ArcSpec::contains(cplx z, bool closed, double tol) const {
    double d = wrap_angle(std::arg(z) - a_.theta());
    if (d > kTwoPi - tol) d -= kTwoPi;
    if (closed) return d >= -tol && d <= span_ + tol;
    return d > tol && d < span_ - tol;
}

bool counterclockwise(cplx x, cplx y, cplx z) {
    double ty = wrap_angle(std::arg(y) - std::arg(x));
    double tz = wrap_angle(std::arg(z) - std::arg(x));
    return ty < tz;
}

MeasureSpec::MeasureSpec(Kind k) : kind_(std::move(k)) { validate(kind_); }

MeasureSpec MeasureSpec::parse(const std::string& text) {
    auto param = [&](const std::string& body, const std::string& key) -> std::string {
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.rfind(key + "=", 0) == 0) return item.substr(key.size() + 1);
        }
        throw Error(Condition::parse, "measure '" + text + "' lacks parameter " + key);
    };
    auto number = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            double v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw Error(Condition::parse, "bad number '" + s + "' in measure '" + text + "'");
        }
    };
    if (text == "lebesgue") return MeasureSpec(Lebesgue{});
    if (text.rfind("rogers-szego:", 0) == 0)
        return MeasureSpec(RogersSzego{number(param(text.substr(13), "q"))});
    if (text.rfind("arc-lebesgue:", 0) == 0) {
        std::string body = text.substr(13);
        return MeasureSpec(ArcLebesgue{parse_radians(param(body, "a")), parse_radians(param(body, "b"))});
    }
    if (text.rfind("file:", 0) == 0 && text.size() > 5) return MeasureSpec(MomentFile{text.substr(5)});
    throw Error(Condition::parse, "unknown measure '" + text + "'");
}

std::optional<ArcSpec> MeasureSpec::support() const {
    if (const auto* arc = std::get_if<ArcLebesgue>(&kind_))
        return ArcSpec(UnitPoint::from_angle(arc->theta_a), UnitPoint::from_angle(arc->theta_b));
    return std::nullopt;
}

std::string MeasureSpec::to_string() const {
    struct Visitor {
        std::string operator()(const Lebesgue&) const { return "lebesgue"; }
        std::string operator()(const RogersSzego& r) const { return "rogers-szego:q=" + fmt17(r.q); }
        std::string operator()(const ArcLebesgue& a) const {
            return "arc-lebesgue:a=" + fmt17(a.theta_a) + ",b=" + fmt17(a.theta_b);
        }
        std::string operator()(const MomentFile& f) const { return "file:" + f.path; }
    };
    return std::visit(Visitor{}, kind_);
}

MomentSequence moments(const MeasureSpec& spec, int n) {
    if (n < 0) throw Error(Condition::range, "moment count must be non-negative");
    std::vector<cplx> mu(static_cast<std::size_t>(n) + 1, 0.0);
    const auto& kind = spec.kind();
    if (std::holds_alternative<Lebesgue>(kind)) {
        mu[0] = 1.0;
    } else if (const auto* rs = std::get_if<RogersSzego>(&kind)) {
        for (int k = 0; k <= n; ++k) mu[k] = std::pow(rs->q, 0.5 * k * k);
    } else if (const auto* arc = std::get_if<ArcLebesgue>(&kind)) {
        // mean of e^{ik theta} over [a, b], written around the arc midpoint
        const double len = arc->theta_b - arc->theta_a;
        const double mid = 0.5 * (arc->theta_a + arc->theta_b);
        mu[0] = 1.0;
        for (int k = 1; k <= n; ++k) {
            double x = 0.5 * k * len;
            mu[k] = (std::sin(x) / x) * std::exp(cplx(0.0, k * mid));
        }
    } else {
        MomentSequence loaded = load_moments(std::get<MomentFile>(kind).path);
        if (loaded.order() < n)
            throw Error(Condition::range, "moment file supplies only " +
                                              std::to_string(loaded.order() + 1) + " moments");
        mu.assign(loaded.values().begin(), loaded.values().begin() + n + 1);
    }
    return MomentSequence(std::move(mu));
}

MomentSequence modified_hat_moments(const MomentSequence& mu, UnitPoint a, UnitPoint b, int n,
                                    const Tolerances& tol) {
    if (mu.order() < n + 1)
        throw Error(Condition::range, "modified moments need mu up to order " + std::to_string(n + 1));
    const cplx za = a.z(), zb = b.z();
    auto raw = [&](int k) { return mu(k + 1) - (za + zb) * mu(k) + za * zb * mu(k - 1); };
    const cplx r0 = raw(0);
    const cplx root = std::sqrt(std::conj(za * zb));
    cplx s = 0.0;
    for (cplx cand : {root, -root}) {
        cplx v = cand * r0;
        if (v.real() > 0.0 && std::abs(v.imag()) <= tol.hat_branch * std::abs(v) &&
            std::abs(v) > tol.hat_branch * mu.mu0()) {
            s = cand;
            break;
        }
    }
    if (s == cplx(0.0))
        throw Error(Condition::measure_not_positive,
                    "no square-root branch makes the modified measure positive");
    std::vector<cplx> out(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out[k] = s * raw(k);
    out[0] = out[0].real();
    return MomentSequence(std::move(out));
}

MomentSequence load_moments(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Condition::input, "cannot open moment file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(Condition::parse, "moment file '" + path + "': " + e.what());
    }
    if (!j.is_array() || j.empty()) throw Error(Condition::parse, "moment file must be a non-empty array");
    std::vector<cplx> mu;
    mu.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw Error(Condition::parse, "moment entries must be [re, im] pairs");
        mu.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    if (!(mu[0].real() > 0.0) || mu[0].imag() != 0.0)
        throw Error(Condition::input, "mu_0 in '" + path + "' must be real and positive");
    return MomentSequence(std::move(mu));
}

void save_moments(const std::string& path, const MomentSequence& mu) {
    nlohmann::json j = nlohmann::json::array();
    for (cplx v : mu.values()) j.push_back({v.real(), v.imag()});
    std::ofstream out(path);
    if (!out) throw Error(Condition::input, "cannot write moment file '" + path + "'");
    out << j.dump() << '\n';
}

}  // namespace szq
