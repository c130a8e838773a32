#pragma once

#include <iosfwd>
#include <string>

#include "szq/quadrature.hpp"

namespace szq {

// JSON text of a rule; every double is rounded to 15 significant digits.
std::string rule_to_json(const QuadRule& rule, const ExactnessReport* report = nullptr);
QuadRule rule_from_json(const std::string& text);

// theta,weight rows with a header line.
std::string rule_to_csv(const QuadRule& rule);

double round15(double x);

// Re-renders JSON text with two-space indent and every float printed with at
// most 15 significant digits.
std::string canonical_json(const std::string& text);

}  // namespace szq
