#pragma once

#include <vector>

#include "mrispeech/core/spectrum.hpp"
#include "mrispeech/denoise/config.hpp"

namespace mrispeech::denoise {

/// Harmonic combs inferred from the noise spectrum.
struct NoiseModel {
  std::vector<double> fundamentals;                    // Hz, in order of discovery
  std::vector<std::vector<SpectralPeak>> peaks_removed;  // peaks claimed by each comb
};

/// Groups detected noise peaks into harmonic combs.
///
/// The strongest remaining peak p is taken out of the pool and every other
/// pooled peak q is visited in order of increasing |loc(p) - loc(q)|. The
/// distance d is a candidate fundamental unless d < c*f0_ref. A candidate
/// is accepted when
///   - the detected peaks, claimed or not, hold four consecutive
///     multiples m*d' .. (m+3)*d' (m >= 1) forming a run through p, each
///     within tol, for some d' within tol of d (both ends of |p - q| carry
///     jitter), and
///   - d is not near a multiple of f0_ref while the unclaimed peaks also
///     hold harmonics 1..4 of f0_ref (a comb at 2*f0 is really the f0
///     comb, which the guard protects).
/// The spacing is re-estimated by least squares over the matched harmonics
/// and the run is followed up the whole peak range before every pooled
/// peak on it, or within tol of a multiple, is claimed by the comb and
/// dropped from the pool. The loop ends when the pool is empty or
/// cfg.max_combs combs were found. A comb at an integer multiple of another
/// is folded into it.
///
/// `tol` <= 0 selects cfg.peak_match_tol_hz, falling back to two bins of a
/// cfg.psd_frame_len PSD at 44.1 kHz.
NoiseModel find_harmonics(const std::vector<SpectralPeak>& peaks, const PipelineConfig& cfg,
                          double tol = 0.0);

}  // namespace mrispeech::denoise
