#pragma once

#include <optional>

#include "bell/detector.hpp"

namespace bell {

enum class Inequality { chsh_conditional, chsh_joint, ch };

const char* inequality_name(Inequality q);

/// A Bell statistic evaluated on one behavior, with the local bound that
/// applies at the behavior's detector efficiencies.  margin > 0 flags a
/// loophole-free violation.
struct InequalityReport {
  Inequality name = Inequality::ch;
  double statistic = 0.0;
  double local_bound = 0.0;
  double margin = 0.0;  // statistic - local_bound, exactly
  std::optional<SettingsPair> settings_used;
};

/// |E(A,B)+E(A,b)+E(a,B)-E(a,b)| with correlators conditioned on double
/// clicks; local bound 2/eta_A + 2/eta_B - 2.  Throws NoCoincidences when a
/// setting pair has zero double-click mass.
InequalityReport chsh_conditional(const Behavior& behavior);

/// Same combination with no-clicks entering as outcome value 0 (no
/// conditioning); local bound 2 - 2 P(both none) read off the (A,B) table.
InequalityReport chsh_joint(const Behavior& behavior);

/// Clauser-Horne combination
///   P(+,+|A,B) + P(+,+|A,b) + P(+,+|a,B) - P(+,+|a,b) - P(atom +|A) - P(photon +|B)
/// with absolute (unconditioned) probabilities; local bound 0.
InequalityReport ch_lhs(const Behavior& behavior);

/// Closed form of the CH left-hand side for the make_state family measured
/// with both primary angles rotated by theta and both alternates at 0:
///   C^2 sin^4(theta) [ 3 nA nB - nA - nB - tan^2(theta/2) (nA + nB) ].
/// Zero-noise only; throws NoiseUnsupported when model.beta != 0.
double ch_lhs_analytic(double theta, const DetectorModel& model);

/// Smallest photon efficiency admitting a CHSH-conditional violation at a
/// given atom efficiency: eta_A / ((sqrt(2)+1) eta_A - 1).
/// Throws NoThreshold when no value in (0,1] works.
double chsh_threshold(double eta_a);

/// Same for the CH inequality: eta_A / (3 eta_A - 1).
double ch_threshold(double eta_a);

/// Upper bound on the CH left-hand side over all local models with
/// independent, setting-independent detection:
///   (3 nA nB - nA - nB) * min_sides P_detect(side = +1).
double ch_lhv_bound(const DetectorModel& model, double min_singles_detect);

}  // namespace bell
