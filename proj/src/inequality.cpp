#include "bell/inequality.hpp"

#include <cmath>

#include "bell/errors.hpp"

namespace bell {

namespace {
constexpr double kSqrt2 = 1.41421356237309504880;

double coincidence_correlator(const Behavior& b, std::size_t pair) {
  const double pp = b.mass(pair, Outcome::plus, Outcome::plus);
  const double pm = b.mass(pair, Outcome::plus, Outcome::minus);
  const double mp = b.mass(pair, Outcome::minus, Outcome::plus);
  const double mm = b.mass(pair, Outcome::minus, Outcome::minus);
  const double den = pp + pm + mp + mm;
  if (!(den > 0.0))
    throw NoCoincidences("chsh_conditional: setting pair " + std::to_string(pair) +
                         " has zero double-click mass");
  return (pp + mm - pm - mp) / den;
}

double joint_correlator(const Behavior& b, std::size_t pair) {
  return b.mass(pair, Outcome::plus, Outcome::plus) + b.mass(pair, Outcome::minus, Outcome::minus) -
         b.mass(pair, Outcome::plus, Outcome::minus) - b.mass(pair, Outcome::minus, Outcome::plus);
}
}  // namespace

const char* inequality_name(Inequality q) {
  switch (q) {
    case Inequality::chsh_conditional: return "CHSH-conditional";
    case Inequality::chsh_joint: return "CHSH-joint";
    case Inequality::ch: return "CH";
  }
  return "?";
}

InequalityReport chsh_conditional(const Behavior& behavior) {
  const double s = coincidence_correlator(behavior, 0) + coincidence_correlator(behavior, 1) +
                   coincidence_correlator(behavior, 2) - coincidence_correlator(behavior, 3);
  InequalityReport r;
  r.name = Inequality::chsh_conditional;
  r.statistic = std::abs(s);
  r.local_bound = 2.0 / behavior.model.eta_a + 2.0 / behavior.model.eta_b - 2.0;
  r.margin = r.statistic - r.local_bound;
  r.settings_used = behavior.settings;
  return r;
}

InequalityReport chsh_joint(const Behavior& behavior) {
  const double s = joint_correlator(behavior, 0) + joint_correlator(behavior, 1) +
                   joint_correlator(behavior, 2) - joint_correlator(behavior, 3);
  InequalityReport r;
  r.name = Inequality::chsh_joint;
  r.statistic = std::abs(s);
  r.local_bound = 2.0 - 2.0 * behavior.mass(0, Outcome::none, Outcome::none);
  r.margin = r.statistic - r.local_bound;
  r.settings_used = behavior.settings;
  return r;
}

InequalityReport ch_lhs(const Behavior& behavior) {
  const double stat = behavior.mass(0, Outcome::plus, Outcome::plus) +
                      behavior.mass(1, Outcome::plus, Outcome::plus) +
                      behavior.mass(2, Outcome::plus, Outcome::plus) -
                      behavior.mass(3, Outcome::plus, Outcome::plus) -
                      behavior.atom_marginal(0, Outcome::plus) -
                      behavior.photon_marginal(0, Outcome::plus);
  InequalityReport r;
  r.name = Inequality::ch;
  r.statistic = stat;
  r.local_bound = 0.0;
  r.margin = stat;
  r.settings_used = behavior.settings;
  return r;
}

double ch_lhs_analytic(double theta, const DetectorModel& model) {
  model.validate();
  if (model.beta != 0.0)
    throw NoiseUnsupported("ch_lhs_analytic: closed form requires beta = 0");
  const double s = std::sin(theta);
  if (std::abs(s) < 1e-9)
    throw DegenerateState("ch_lhs_analytic: sin(theta) ~ 0 gives a product state");
  const double a = 1.0 - 2.0 * std::cos(theta);
  const double c2 = 1.0 / (a * a + 2.0 * s * s);
  const double k = c2 * s * s * s * s;
  const double eps2 = std::tan(0.5 * theta) * std::tan(0.5 * theta);
  const double na = model.eta_a;
  const double nb = model.eta_b;
  return k * (3.0 * na * nb - na - nb - eps2 * (na + nb));
}

double chsh_threshold(double eta_a) {
  const double den = (kSqrt2 + 1.0) * eta_a - 1.0;
  if (!(den > 0.0))
    throw NoThreshold("chsh_threshold: eta_a <= 1/(sqrt(2)+1), no photon efficiency suffices");
  const double t = eta_a / den;
  if (t > 1.0)
    throw NoThreshold("chsh_threshold: required photon efficiency exceeds 1");
  return t;
}

double ch_threshold(double eta_a) {
  const double den = 3.0 * eta_a - 1.0;
  if (!(den > 0.0)) throw NoThreshold("ch_threshold: eta_a <= 1/3, no photon efficiency suffices");
  const double t = eta_a / den;
  if (t > 1.0) throw NoThreshold("ch_threshold: required photon efficiency exceeds 1");
  return t;
}

double ch_lhv_bound(const DetectorModel& model, double min_singles_detect) {
  model.validate();
  return (3.0 * model.eta_a * model.eta_b - model.eta_a - model.eta_b) * min_singles_detect;
}

}  // namespace bell
