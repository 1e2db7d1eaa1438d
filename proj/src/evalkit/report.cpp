#include "varm/evalkit/report.hpp"

#include <cstdio>

namespace varm::eval {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string opt(const std::optional<double>& v) { return v ? num(*v) : ""; }

}  // namespace

nlohmann::json to_json(const MetricsReport& r) {
  nlohmann::json j = {{"auroc", r.auroc ? nlohmann::json(*r.auroc) : nlohmann::json(nullptr)},
                      {"accuracy", r.accuracy},
                      {"precision", r.precision},
                      {"recall", r.recall},
                      {"f1", r.f1},
                      {"n", r.n},
                      {"config_digest", r.config_digest},
                      {"precision_undefined", r.precision_undefined},
                      {"recall_undefined", r.recall_undefined}};
  return j;
}

std::string metrics_csv_header() {
  return "experiment,config_digest,seed,n,auroc,accuracy,precision,recall,f1,skipped";
}

std::string metrics_csv_row(const std::string& experiment, const MetricsReport& r,
                            std::uint64_t seed, std::size_t skipped) {
  return experiment + "," + r.config_digest + "," + std::to_string(seed) + "," +
         std::to_string(r.n) + "," + opt(r.auroc) + "," + num(r.accuracy) + "," +
         num(r.precision) + "," + num(r.recall) + "," + num(r.f1) + "," + std::to_string(skipped);
}

std::string curve_csv_header() {
  return "train_size,sampler,backend,n,auroc,accuracy,precision,recall,f1,config_digest,seed";
}

std::string curve_csv_row(const CurvePoint& p, std::uint64_t seed) {
  const auto& r = p.metrics;
  return std::to_string(p.train_size) + "," + pairforge::to_string(p.sampler) + "," +
         p.backend_id + "," + std::to_string(r.n) + "," + opt(r.auroc) + "," + num(r.accuracy) +
         "," + num(r.precision) + "," + num(r.recall) + "," + num(r.f1) + "," + r.config_digest +
         "," + std::to_string(seed);
}

}  // namespace varm::eval
