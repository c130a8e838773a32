#pragma once

#include "szq/error.hpp"
#include "szq/measures.hpp"
#include "szq/opuc.hpp"
#include "szq/poly.hpp"
#include "szq/prescribe.hpp"
#include "szq/qpopuc.hpp"
#include "szq/quadrature.hpp"
#include "szq/rule_io.hpp"
#include "szq/tolerances.hpp"
#include "szq/unit_point.hpp"
