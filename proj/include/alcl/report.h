#ifndef ALCL_REPORT_H_
#define ALCL_REPORT_H_

#include <string>

#include "json.hpp"

#include "alcl/pipeline.h"

namespace alcl {

nlohmann::json RecordToJson(const RunRecord& record);

// Writes record.json, convergence.csv, conserved.csv and profiles.csv into
// out_dir, creating it when needed. Outputs depend only on the record.
void EmitReports(const RunRecord& record, const std::string& out_dir);

// %.17g formatting used for every CSV number.
std::string FormatNumber(double v);

}  // namespace alcl

#endif  // ALCL_REPORT_H_
