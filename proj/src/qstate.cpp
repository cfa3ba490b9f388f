#include "bell/qstate.hpp"

#include <cmath>

#include "bell/errors.hpp"

namespace bell {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

MeasAngle MeasAngle::of(double r) {
  if (!std::isfinite(r)) throw Numerical("measurement angle must be finite");
  double a = std::fmod(r, kPi);
  if (a < 0.0) a += kPi;
  if (a >= kPi) a -= kPi;  // fmod rounding at the boundary
  return MeasAngle{a};
}

double PureState::norm2() const {
  return amp00 * amp00 + amp01 * amp01 + amp10 * amp10 + amp11 * amp11;
}

PureState make_state(double theta) {
  const double s = std::sin(theta);
  if (std::abs(s) < 1e-9)
    throw DegenerateState("make_state: sin(theta) ~ 0 gives a product state");
  const double a = 1.0 - 2.0 * std::cos(theta);
  const double norm = std::sqrt(a * a + 2.0 * s * s);
  return PureState{a / norm, s / norm, s / norm, 0.0};
}

PureState normalized_state(double a00, double a01, double a10, double a11) {
  const double n2 = a00 * a00 + a01 * a01 + a10 * a10 + a11 * a11;
  if (n2 < 1e-24) throw DegenerateState("normalized_state: zero amplitude vector");
  const double inv = 1.0 / std::sqrt(n2);
  return PureState{a00 * inv, a01 * inv, a10 * inv, a11 * inv};
}

RotatedBasis rotated_basis(MeasAngle angle) {
  const double c = std::cos(angle.radians);
  const double s = std::sin(angle.radians);
  return RotatedBasis{{c, -s}, {s, c}};
}

IdealJoint joint_probs(const PureState& state, MeasAngle atom_angle, MeasAngle photon_angle) {
  const RotatedBasis ra = rotated_basis(atom_angle);
  const RotatedBasis rb = rotated_basis(photon_angle);
  const auto m = state.amps();  // m[2i+j] = <i j|psi>
  auto proj = [&m](const std::array<double, 2>& va, const std::array<double, 2>& vb) {
    const double amp = va[0] * (vb[0] * m[0] + vb[1] * m[1]) + va[1] * (vb[0] * m[2] + vb[1] * m[3]);
    return amp * amp;
  };
  IdealJoint j;
  j.p11 = proj(ra.up, rb.up);
  j.p10 = proj(ra.up, rb.down);
  j.p01 = proj(ra.down, rb.up);
  j.p00 = proj(ra.down, rb.down);
  return j;
}

double singles_prob(const PureState& state, MeasAngle angle, Side side) {
  const RotatedBasis r = rotated_basis(angle);
  const auto m = state.amps();
  if (side == Side::atom) {
    // contract the atom index with |1'>, leaving a photon-space vector
    const double w0 = r.up[0] * m[0] + r.up[1] * m[2];
    const double w1 = r.up[0] * m[1] + r.up[1] * m[3];
    return w0 * w0 + w1 * w1;
  }
  const double w0 = m[0] * r.up[0] + m[1] * r.up[1];
  const double w1 = m[2] * r.up[0] + m[3] * r.up[1];
  return w0 * w0 + w1 * w1;
}

}  // namespace bell
