#include "mrispeech/denoise/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

namespace mrispeech::denoise {
namespace {

// Harmonics matched to a candidate spacing. [lo, hi] holds every spacing
// that keeps each matched peak within tol of its multiple; jitter of the
// pair that produced the candidate must not push later harmonics out.
struct Run {
  double lo = 0.0, hi = 0.0;
  std::map<long, std::size_t> matched; // harmonic number -> peak index

  // Matches harmonic m to the nearest detected peak that keeps the interval
  // non-empty. Claimed peaks still count: a partial shared by two combs
  // must not break the run of the second. `near` also demands tol of the
  // current least-squares multiple, for use once the run pins d down.
  // Peaks flagged in `skip` are not considered.
  bool add(const std::vector<SpectralPeak>& peaks, long m, double tol, bool near = false,
           const std::vector<bool>* skip = nullptr) {
    const double mm = static_cast<double>(m);
    const double target = mm * (near ? spacing(peaks) : 0.5 * (lo + hi));
    std::optional<std::size_t> best;
    double best_dist = 0.0;
    for (std::size_t i = 0; i < peaks.size(); ++i) {
      if (skip && (*skip)[i]) continue;
      const double loc = peaks[i].loc;
      if (loc < mm * lo - tol || loc > mm * hi + tol) continue;
      if (near && std::abs(loc - target) > tol) continue;
      const double dist = std::abs(loc - target);
      if (!best || dist < best_dist) {
        best = i;
        best_dist = dist;
      }
    }
    if (!best) return false;
    matched[m] = *best;
    lo = std::max(lo, (peaks[*best].loc - tol) / mm);
    hi = std::min(hi, (peaks[*best].loc + tol) / mm);
    return true;
  }

  // Least-squares spacing over the matched harmonics, kept feasible.
  double spacing(const std::vector<SpectralPeak>& peaks) const {
    double num = 0.0, den = 0.0;
    for (const auto& [m, i] : matched) {
      num += static_cast<double>(m) * peaks[i].loc;
      den += static_cast<double>(m) * static_cast<double>(m);
    }
    return std::clamp(num / den, lo, hi);
  }

  bool has_run_through(long anchor) const {
    for (long start = std::max(1L, anchor - 3); start <= anchor; ++start) {
      bool ok = true;
      for (long m = start; m < start + 4 && ok; ++m) ok = matched.count(m) > 0;
      if (ok) return true;
    }
    return false;
  }
};

// Looks for four consecutive multiples of a spacing within `slack` of
// `spacing` through peak ip. The harmonic number of ip is ambiguous when
// spacing*tol is large against the spacing; every consistent number is tried
// and the run matching the most harmonics wins.
std::optional<Run> match_run(const std::vector<SpectralPeak>& peaks, std::size_t ip, double spacing, double slack,
                             double tol, const std::vector<bool>* skip = nullptr) {
  const double loc = peaks[ip].loc;
  if (spacing <= slack) return std::nullopt;
  const long first = std::max(1L, static_cast<long>(std::ceil((loc - tol) / (spacing + slack))));
  const long last = static_cast<long>(std::floor((loc + tol) / (spacing - slack)));

  std::optional<Run> best;
  for (long hp = first; hp <= last; ++hp) {
    Run run;
    run.lo = std::max(spacing - slack, (loc - tol) / static_cast<double>(hp));
    run.hi = std::min(spacing + slack, (loc + tol) / static_cast<double>(hp));
    if (run.lo > run.hi) continue;
    run.matched[hp] = ip;
    for (long offset = 1; offset <= 3; ++offset) {
      for (long m : {hp - offset, hp + offset}) {
        if (m >= 1) run.add(peaks, m, tol, false, skip);
      }
    }
    if (run.has_run_through(hp) && (!best || run.matched.size() > best->matched.size())) best = std::move(run);
  }
  return best;
}

// Follows an accepted run across the whole peak range.
void extend_run(const std::vector<SpectralPeak>& peaks, Run& run, double tol) {
  double top = 0.0;
  for (const auto& q : peaks) top = std::max(top, q.loc);
  const long last = static_cast<long>((top + tol) / run.lo);
  for (long m = 1; m <= last; ++m) {
    if (!run.matched.count(m)) run.add(peaks, m, tol, true);
  }
}

}  // namespace

NoiseModel find_harmonics(const std::vector<SpectralPeak>& peaks, const PipelineConfig& cfg, double tol) {
  if (tol <= 0.0) tol = cfg.peak_match_tol_hz.value_or(2.0 * 44100.0 / static_cast<double>(cfg.psd_frame_len));
  const double guard = cfg.c * cfg.f0_ref;

  NoiseModel model;
  std::vector<bool> active(peaks.size(), true), claimed_by_comb(peaks.size(), false);
  auto any_active = [&] { return std::find(active.begin(), active.end(), true) != active.end(); };

  while (any_active() && model.fundamentals.size() < cfg.max_combs) {
    std::size_t ip = peaks.size();
    for (std::size_t i = 0; i < peaks.size(); ++i) {
      if (active[i] && (ip == peaks.size() || peaks[i].mag > peaks[ip].mag)) ip = i;
    }
    const SpectralPeak& p = peaks[ip];
    active[ip] = false;
    bool p_claimed = false;

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < peaks.size(); ++i) {
      if (active[i]) order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const double da = std::abs(peaks[a].loc - p.loc), db = std::abs(peaks[b].loc - p.loc);
      return da != db ? da < db : peaks[a].loc < peaks[b].loc;
    });

    for (std::size_t iq : order) {
      if (!active[iq]) continue;
      const double candidate = std::abs(p.loc - peaks[iq].loc);
      if (candidate < guard) continue;

      // |p - q| is off by the jitter of both peaks
      auto run = match_run(peaks, ip, candidate, tol, tol);
      if (!run) continue;

      // A run at j*f0_ref is the f0 structure the guard protects, seen
      // through its higher harmonics, when the peaks also hold the lowest
      // four harmonics of f0. Partials claimed by a noise comb do not count.
      const double coarse = run->spacing(peaks);
      const double j = std::round(coarse / cfg.f0_ref);
      bool subharmonic = false;
      if (j >= 2.0 && std::abs(coarse / j - cfg.f0_ref) <= tol) {
        Run f0;
        f0.lo = (coarse - tol) / j;
        f0.hi = (coarse + tol) / j;
        subharmonic = true;
        for (long m = 1; m <= 4 && subharmonic; ++m) subharmonic = f0.add(peaks, m, tol, false, &claimed_by_comb);
      }
      if (subharmonic) continue;
      extend_run(peaks, *run, tol);
      const double d = run->spacing(peaks);

      std::size_t comb = model.fundamentals.size();
      for (std::size_t k = 0; k < model.fundamentals.size(); ++k) {
        if (std::abs(model.fundamentals[k] - d) <= tol) comb = k;
      }
      if (comb == model.fundamentals.size()) {
        model.fundamentals.push_back(d);
        model.peaks_removed.emplace_back();
      }
      auto& claimed = model.peaks_removed[comb];
      if (!p_claimed) {
        claimed.push_back(p);
        claimed_by_comb[ip] = true;
        p_claimed = true;
      }
      for (std::size_t i = 0; i < peaks.size(); ++i) {
        if (!active[i]) continue;
        const long m = std::lround(peaks[i].loc / d);
        const bool on_run = std::any_of(run->matched.begin(), run->matched.end(), [&](const auto& h) { return h.second == i; });
        if (on_run || (m >= 1 && std::abs(peaks[i].loc - static_cast<double>(m) * d) <= tol)) {
          claimed.push_back(peaks[i]);
          claimed_by_comb[i] = true;
          active[i] = false;
        }
      }
      if (model.fundamentals.size() >= cfg.max_combs) break;
    }
  }

  // A comb at k*d notches nothing the comb at d does not; its peaks are the
  // leftovers of d after an earlier comb claimed part of them.
  for (std::size_t b = 0; b < model.fundamentals.size();) {
    std::size_t base = model.fundamentals.size();
    for (std::size_t a = 0; a < model.fundamentals.size(); ++a) {
      const double k = std::round(model.fundamentals[b] / model.fundamentals[a]);
      if (a != b && k >= 2.0 && std::abs(model.fundamentals[b] - k * model.fundamentals[a]) <= tol) base = a;
    }
    if (base == model.fundamentals.size()) {
      ++b;
      continue;
    }
    auto& into = model.peaks_removed[base];
    into.insert(into.end(), model.peaks_removed[b].begin(), model.peaks_removed[b].end());
    model.fundamentals.erase(model.fundamentals.begin() + static_cast<std::ptrdiff_t>(b));
    model.peaks_removed.erase(model.peaks_removed.begin() + static_cast<std::ptrdiff_t>(b));
  }
  return model;
}

}  // namespace mrispeech::denoise
