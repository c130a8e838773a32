#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace szq {

enum class Condition {
    degree,
    invalid_parameter,
    measure_not_positive_definite,
    measure_not_positive,
    range,
    domain,
    internal_consistency,
    boundary_degenerate,
    invariance,
    not_representable,
    order_collapse,
    no_solution,
    degenerate,
    condition_violation,
    rank_deficiency,
    inadmissible,
    nodes_not_quadrature,
    positivity_violation,
    parse,
    input,
};

std::string_view to_string(Condition c) noexcept;

class Error : public std::runtime_error {
public:
    Error(Condition c, const std::string& detail);

    Condition condition() const noexcept { return condition_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    Condition condition_;
    std::string detail_;
};

}  // namespace szq
