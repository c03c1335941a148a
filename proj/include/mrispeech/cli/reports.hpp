#pragma once

#include <json.hpp>

#include "mrispeech/analysis/analyze.hpp"
#include "mrispeech/denoise/config.hpp"
#include "mrispeech/denoise/pipeline.hpp"
#include "mrispeech/stats/kmeans.hpp"
#include "mrispeech/stats/welch_test.hpp"
#include "mrispeech/validation/harness.hpp"

namespace mrispeech::cli {

nlohmann::json to_json(const denoise::PipelineConfig& cfg);

/// Overlays the keys of `j` onto `base`. Unknown keys and wrongly typed
/// values raise ConfigurationError; the result is validated.
denoise::PipelineConfig pipeline_config_from_json(const nlohmann::json& j, denoise::PipelineConfig base = {});

nlohmann::json to_json(const denoise::DenoiseReport& report, const denoise::NoiseModel& model);
nlohmann::json to_json(const analysis::AnalysisConfig& cfg);
nlohmann::json to_json(const analysis::VowelAnalysis& a);
nlohmann::json to_json(const validation::ValidationReport& report);
nlohmann::json to_json(const stats::WelchTestResult& r, double p_threshold);
nlohmann::json to_json(const stats::KMeansResult& r);

}  // namespace mrispeech::cli
