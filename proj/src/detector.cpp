#include "bell/detector.hpp"

#include <cmath>

#include "bell/errors.hpp"

namespace bell {

void DetectorModel::validate() const {
  if (!(eta_a > 0.0) || eta_a > 1.0) throw ModelRange("eta_a must be in (0, 1]");
  if (!(eta_b > 0.0) || eta_b > 1.0) throw ModelRange("eta_b must be in (0, 1]");
  if (!(beta >= 0.0) || beta > 1.0) throw ModelRange("beta must be in [0, 1]");
}

SideChannel side_channel(double eta, double beta) {
  const double keep = (1.0 - beta) * eta + 0.5 * beta;
  const double flip = 0.5 * beta;
  const double lost = (1.0 - beta) * (1.0 - eta);
  SideChannel t{};
  // input click +1 / -1
  t[0][0] = keep;
  t[1][0] = flip;
  t[2][0] = lost;
  t[0][1] = flip;
  t[1][1] = keep;
  t[2][1] = lost;
  // input none: only background can produce a click
  t[0][2] = flip;
  t[1][2] = flip;
  t[2][2] = 1.0 - beta;
  return t;
}

double Behavior::atom_marginal(std::size_t pair, Outcome o) const {
  const auto& row = table[pair][static_cast<std::size_t>(o)];
  return row[0] + row[1] + row[2];
}

double Behavior::photon_marginal(std::size_t pair, Outcome o) const {
  const auto j = static_cast<std::size_t>(o);
  return table[pair][0][j] + table[pair][1][j] + table[pair][2][j];
}

OutcomeMatrix apply_detector(const IdealJoint& ideal, const DetectorModel& model) {
  model.validate();
  const SideChannel ta = side_channel(model.eta_a, model.beta);
  const SideChannel tb = side_channel(model.eta_b, model.beta);
  const double q[2][2] = {{ideal.p11, ideal.p10}, {ideal.p01, ideal.p00}};
  OutcomeMatrix out{};
  for (std::size_t oa = 0; oa < 3; ++oa) {
    for (std::size_t ob = 0; ob < 3; ++ob) {
      double v = 0.0;
      for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) v += ta[oa][x] * tb[ob][y] * q[x][y];
      out[oa][ob] = v;
    }
  }
  return out;
}

Behavior make_behavior(const PureState& state, const SettingsPair& settings,
                       const DetectorModel& model) {
  model.validate();
  Behavior b;
  b.model = model;
  b.settings = settings;
  for (std::size_t pair = 0; pair < kSettingPairs; ++pair) {
    const IdealJoint ideal = joint_probs(state, settings.atom[atom_setting_of(pair)],
                                         settings.photon[photon_setting_of(pair)]);
    b.table[pair] = apply_detector(ideal, model);
  }
  return b;
}

}  // namespace bell
