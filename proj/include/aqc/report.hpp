#pragma once

// Text and JSON rendering of runtime tables, correlation reports, and
// closest-product results. JSON documents carry schema_version "1" with a
// stable key order.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "aqc/entanglement.hpp"
#include "aqc/trace.hpp"

namespace aqc {

using ordered_json = nlohmann::ordered_json;

ordered_json table_to_json(const RuntimeTable& table);
ordered_json correlation_to_json(const CorrelationReport& report);
ordered_json geometric_to_json(const StateVector& state, const GeometricResult& result);

void print_table_text(std::ostream& out, const RuntimeTable& table);
void print_correlation_text(std::ostream& out, const CorrelationReport& report);

}  // namespace aqc
