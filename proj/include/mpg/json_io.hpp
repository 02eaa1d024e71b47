#pragma once

// JSON / CSV renderings of library results. Object keys are emitted in sorted
// order (nlohmann::json default), so dumps are byte-stable.

#include <ostream>
#include <string_view>

#include <json.hpp>

#include "mpg/census.hpp"
#include "mpg/family.hpp"
#include "mpg/witness.hpp"

namespace mpg {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const FourCycle& c);
nlohmann::json to_json(const PetersenWitness& w);
nlohmann::json to_json(const ReductionTrace& t);
nlohmann::json to_json(const WitnessResult& r);
nlohmann::json to_json(const CensusReport& r);
nlohmann::json to_json(const ScanReport& r);
nlohmann::json to_json(const ZhangVerdict& v);
nlohmann::json to_json(const LowerBoundVerdict& v);
nlohmann::json to_json(const ReplaceVerdict& v);
nlohmann::json to_json(const RedrawingVerdict& v);
nlohmann::json to_json(const GkInstance& g);
nlohmann::json to_json(const GkVerdict& v);
nlohmann::json to_json(const GraphEdge& e);

/// Adds {"schema": kSchemaVersion, "version": kToolVersion} to a report.
nlohmann::json stamped(nlohmann::json report);

/// m,instance_index,c4_count,p10_count,violations
void write_scan_csv(std::ostream& os, const ScanReport& r);

}  // namespace mpg
