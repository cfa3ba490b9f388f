#pragma once

#include <array>
#include <cstdint>

#include "bell/detector.hpp"
#include "bell/inequality.hpp"

namespace bell {

/// One experimental run: independently chosen settings and the two observed
/// outcomes (clicks or non-detections).
struct TrialRecord {
  std::uint8_t setting_atom = 0;    // 0 = A, 1 = a
  std::uint8_t setting_photon = 0;  // 0 = B, 1 = b
  Outcome atom = Outcome::none;
  Outcome photon = Outcome::none;
};

/// Aggregated trial counts per (setting pair, outcome pair); outcome-pair
/// index = atom outcome * 3 + photon outcome.
struct CountsTable {
  std::array<std::array<std::uint64_t, 9>, kSettingPairs> counts{};
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  std::uint64_t pair_total(std::size_t pair) const;
};

/// Event-level Monte Carlo: per trial, settings are chosen uniformly and
/// independently, then the outcome pair is drawn from the behavior of
/// (state, settings, model).  Fully reproducible from the seed; generation is
/// chunked with per-chunk derived seeds so the result is independent of the
/// number of worker threads.
CountsTable run_trials(const PureState& state, const SettingsPair& settings,
                       const DetectorModel& model, std::uint64_t n, std::uint64_t seed,
                       int jobs = 1);

/// Relative-frequency estimate of a behavior with per-entry binomial standard
/// errors.  The attached DetectorModel is an effective zero-background model
/// inferred from the no-click marginals (it feeds the efficiency-dependent
/// local bounds).  Throws EmptySetting when a setting pair has no trials.
struct BehaviorEstimate {
  Behavior behavior;
  std::array<std::array<double, 9>, kSettingPairs> se{};
};

BehaviorEstimate estimate_behavior(const CountsTable& counts);

struct EstimatedReport {
  InequalityReport report;
  double se_statistic = 0.0;
};

/// Plug-in estimates of the three inequality statistics with delta-method
/// standard errors (setting pairs treated as independent multinomials; the CH
/// singles pool the two pairs that share the relevant setting).  Throws
/// NoCoincidences if a setting pair has no double clicks.
struct EstimatedReports {
  EstimatedReport ch;
  EstimatedReport chsh_conditional;
  EstimatedReport chsh_joint;
};

EstimatedReports estimate_inequalities(const CountsTable& counts);

}  // namespace bell
