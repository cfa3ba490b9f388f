#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bell/detector.hpp"
#include "bell/inequality.hpp"
#include "bell/qstate.hpp"

namespace bell {

enum class Scenario { atom_photon, symmetric };
enum class Functional { ch, chsh_conditional };

const char* scenario_name(Scenario s);
const char* functional_name(Functional f);

/// Search domain of the violation optimizer: 3 hyperspherical coordinates for
/// a normalized real amplitude 4-vector (amp11 is free, so the domain is a
/// strict superset of the make_state family) plus the 4 measurement angles.
struct SearchSpace {
  std::array<std::pair<double, double>, 7> bounds;
  static SearchSpace standard();
};

PureState state_from_params(const std::array<double, 3>& hyper);
std::array<double, 3> params_from_state(const PureState& s);

/// A reproducible witness of a violation: everything needed to rebuild the
/// behavior and recompute the margin.
struct Certificate {
  PureState state;
  SettingsPair settings;
  DetectorModel model;
  double margin = 0.0;
};

struct OptimumResult {
  std::array<double, 7> params{};
  Certificate cert;
  double statistic = 0.0;
};

/// Margin of one functional at an explicit configuration (state, angles, model).
double evaluate_margin(Functional f, const PureState& state, const SettingsPair& settings,
                       const DetectorModel& model);

/// Multi-start downhill-simplex search for the largest violation margin.
/// The start schedule (low-discrepancy points plus a few structured
/// configurations) is a pure function of `seed`, so repeated calls are
/// bitwise identical; `warm` adds one extra start point.  Returns the best
/// found even when it is <= 0.
OptimumResult maximize_violation(Functional f, const DetectorModel& model,
                                 const SearchSpace& space, std::uint64_t seed, int starts = 32,
                                 int jobs = 1,
                                 const std::optional<std::array<double, 7>>& warm = std::nullopt);

/// Configuration of a threshold bisection or a noise sweep.
struct SweepConfig {
  Scenario scenario = Scenario::atom_photon;
  Functional functional = Functional::ch;
  double beta = 0.0;
  double eta_a_fixed = 1.0;  // atom-side efficiency in the atom_photon scenario
  double lo = 0.05;          // bisection bracket for the photon efficiency
  double hi = 1.0;
  double tol = 1e-4;
  std::uint64_t seed = 1;
  int starts = 32;
  int jobs = 1;
  double violation_eps = 1e-7;   // margin above this counts as a violation
  int monotonicity_samples = 5;  // pre-bisection sanity samples
};

/// One point of a threshold or noise sweep.  x is the swept coordinate's
/// context (the fixed atom efficiency for efficiency sweeps, the photon
/// efficiency for noise sweeps); threshold is the bisected critical value.
struct ThresholdPoint {
  double x = 0.0;
  double threshold = 0.0;
  Certificate cert;
};

/// Bisection on the photon efficiency: smallest eta_B whose optimal margin
/// exceeds violation_eps, to within config.tol.  The certificate comes from
/// the last violating probe.  Throws NoViolationInRange if even eta_B =
/// config.hi shows no violation, Numerical if the sampled margins are not
/// monotone in eta_B.
ThresholdPoint find_threshold(const SweepConfig& config);

struct CurvePoint {
  double eta_b = 0.0;
  double max_beta = 0.0;
  std::optional<Certificate> cert;
  std::string error;  // empty when the point is valid
};

/// For each grid efficiency, the largest background fraction that still
/// admits a violation (bisection on beta).  Points where even beta = 0 shows
/// no violation are recorded with an error note instead of aborting the sweep.
std::vector<CurvePoint> noise_curve(const SweepConfig& config, const std::vector<double>& eta_grid);

/// Any real pure state with projective angle measurements is equivalent, up
/// to local rotations absorbed into the angles, to a make_state family member.
struct FamilyCertificate {
  double theta = 0.0;
  SettingsPair settings;
};

/// Rewrites a certificate into the family frame: make_state(theta) together
/// with the remapped angles reproduces the original behavior exactly.
FamilyCertificate to_family_frame(const PureState& state, const SettingsPair& settings);

}  // namespace bell
