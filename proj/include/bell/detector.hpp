#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "bell/qstate.hpp"

namespace bell {

/// Observed single-side outcome.  "none" is a real third outcome (no click),
/// not a discarded trial.
enum class Outcome : int { plus = 0, minus = 1, none = 2 };

inline constexpr std::array<Outcome, 3> kOutcomes{Outcome::plus, Outcome::minus, Outcome::none};

/// Value of an outcome when no-clicks are counted as 0.
inline double outcome_value(Outcome o) {
  return o == Outcome::plus ? 1.0 : (o == Outcome::minus ? -1.0 : 0.0);
}

/// Per-side detection efficiencies and background-noise fraction.
/// eta_a, eta_b in (0,1]; beta in [0,1].
struct DetectorModel {
  double eta_a = 1.0;
  double eta_b = 1.0;
  double beta = 0.0;

  /// Throws ModelRange if any field is outside its admissible range.
  void validate() const;
};

/// 3x3 observed-outcome matrix, indexed [atom outcome][photon outcome]
/// with the Outcome enum order (+1, -1, none).
using OutcomeMatrix = std::array<std::array<double, 3>, 3>;

/// Single-side detection channel T[observed][input] over the three outcomes.
/// Stage 1 (loss): a click survives with probability eta, else becomes none.
/// Stage 2 (background): with probability beta the record is replaced by a
/// uniformly random click, regardless of the stage-1 result.
using SideChannel = std::array<std::array<double, 3>, 3>;

SideChannel side_channel(double eta, double beta);

/// Setting-pair index order: 0=(A,B), 1=(A,b), 2=(a,B), 3=(a,b).
inline constexpr std::size_t kSettingPairs = 4;
inline constexpr std::size_t atom_setting_of(std::size_t pair) { return pair >> 1; }
inline constexpr std::size_t photon_setting_of(std::size_t pair) { return pair & 1; }

/// Full observed probability table: one 3x3 matrix per setting pair, plus the
/// detector model that produced it (needed by the efficiency-dependent local
/// bounds).  `settings` is populated when the behavior came from an explicit
/// state-and-angles construction.
struct Behavior {
  std::array<OutcomeMatrix, kSettingPairs> table{};
  DetectorModel model;
  std::optional<SettingsPair> settings;

  double mass(std::size_t pair, Outcome atom, Outcome photon) const {
    return table[pair][static_cast<std::size_t>(atom)][static_cast<std::size_t>(photon)];
  }
  /// Marginal probability of an atom-side outcome under one setting pair.
  double atom_marginal(std::size_t pair, Outcome o) const;
  /// Marginal probability of a photon-side outcome under one setting pair.
  double photon_marginal(std::size_t pair, Outcome o) const;
};

/// Pushes a lossless two-outcome joint through the two independent side
/// channels.  Output sums to 1.
OutcomeMatrix apply_detector(const IdealJoint& ideal, const DetectorModel& model);

/// Observed behavior of a state under the four setting pairs and a detector model.
Behavior make_behavior(const PureState& state, const SettingsPair& settings,
                       const DetectorModel& model);

}  // namespace bell
