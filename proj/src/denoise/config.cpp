#include "mrispeech/denoise/config.hpp"

#include <string>

#include "mrispeech/core/error.hpp"

namespace mrispeech::denoise {

void PipelineConfig::validate() const {
  auto fail = [](const std::string& what) { throw ConfigurationError("pipeline config: " + what); };
  if (!(f0_ref > 0.0)) fail("f0_ref must be positive");
  if (!(c > 1.0)) fail("c must exceed 1");
  if (!(bw > 0.0 && bw < 0.1)) fail("bw must lie in (0, 0.1)");
  if (peak_match_tol_hz && !(*peak_match_tol_hz > 0.0)) fail("peak_match_tol_hz must be positive");
  if (max_combs == 0) fail("max_combs must be at least 1");
  if (!(silent_head_s > 0.0)) fail("silent_head_s must be positive");
  if (psd_frame_len < 16 || (psd_frame_len & (psd_frame_len - 1)) != 0) fail("psd_frame_len must be a power of two >= 16");
  if (!(psd_overlap >= 0.0 && psd_overlap < 1.0)) fail("psd_overlap must lie in [0, 1)");
  if (detune_check_harmonic < 1) fail("detune_check_harmonic must be >= 1");
  if (max_comb_multiplier < 1) fail("max_comb_multiplier must be >= 1");
  if (!(response_floor_db < 0.0)) fail("response_floor_db must be negative");
  if (!(spectral_floor >= 0.0 && spectral_floor < 1.0)) fail("spectral_floor must lie in [0, 1)");
}

double PipelineConfig::match_tolerance(double bin_spacing_hz) const {
  return peak_match_tol_hz.value_or(2.0 * bin_spacing_hz);
}

}  // namespace mrispeech::denoise
