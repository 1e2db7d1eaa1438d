#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "varm/evalkit/curve.hpp"
#include "varm/evalkit/metrics.hpp"

namespace varm::eval {

nlohmann::json to_json(const MetricsReport& report);

// Experiment CSV. Column order is fixed:
// experiment,config_digest,seed,n,auroc,accuracy,precision,recall,f1,skipped
std::string metrics_csv_header();
std::string metrics_csv_row(const std::string& experiment, const MetricsReport& report,
                            std::uint64_t seed, std::size_t skipped);

// Learning-curve CSV. Column order is fixed:
// train_size,sampler,backend,n,auroc,accuracy,precision,recall,f1,config_digest,seed
std::string curve_csv_header();
std::string curve_csv_row(const CurvePoint& point, std::uint64_t seed);

}  // namespace varm::eval
