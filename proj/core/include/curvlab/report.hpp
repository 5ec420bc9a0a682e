#pragma once

#include <string>

#include "curvlab/audit.hpp"

namespace curvlab {

std::string render_text(const RingSummary& ring);
std::string render_text(const CheckRecord& check);
std::string render_text(const AuditReport& report);

/// {"schema": 1, "ring": {...}, "checks": [...]}; field order is fixed.
std::string render_json(const AuditReport& report);

/// Exit status for a set of checks: 1 if any FAIL, else 0.
int exit_status(const AuditReport& report);

}  // namespace curvlab
