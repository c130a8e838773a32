#include "szq/error.hpp"

namespace szq {

std::string_view to_string(Condition c) noexcept {
    switch (c) {
        case Condition::degree: return "degree";
        case Condition::invalid_parameter: return "invalid-parameter";
        case Condition::measure_not_positive_definite: return "measure-not-positive-definite";
        case Condition::measure_not_positive: return "measure-not-positive";
        case Condition::range: return "range";
        case Condition::domain: return "domain";
        case Condition::internal_consistency: return "internal-consistency";
        case Condition::boundary_degenerate: return "boundary-degenerate";
        case Condition::invariance: return "invariance";
        case Condition::not_representable: return "not-representable";
        case Condition::order_collapse: return "order-collapse";
        case Condition::no_solution: return "no-solution";
        case Condition::degenerate: return "degenerate";
        case Condition::condition_violation: return "condition-violation";
        case Condition::rank_deficiency: return "rank-deficiency";
        case Condition::inadmissible: return "inadmissible";
        case Condition::nodes_not_quadrature: return "nodes-not-quadrature";
        case Condition::positivity_violation: return "positivity-violation";
        case Condition::parse: return "parse";
        case Condition::input: return "input";
    }
    return "unknown";
}

Error::Error(Condition c, const std::string& detail)
    : std::runtime_error(std::string(to_string(c)) + ": " + detail), condition_(c), detail_(detail) {}

}  // namespace szq
