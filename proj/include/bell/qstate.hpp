#pragma once

#include <array>

namespace bell {

/// One side's measurement direction, radians, canonical range [0, pi).
/// Rotated projectors are pi-periodic, so [0, pi) enumerates each observable once.
struct MeasAngle {
  double radians = 0.0;

  /// Canonicalizing constructor: reduces any finite angle into [0, pi).
  static MeasAngle of(double r);
};

/// Orthonormal measurement basis obtained by rotating the computational basis.
///   |0'> = cos(a)|0> - sin(a)|1>,  |1'> = sin(a)|0> + cos(a)|1>
struct RotatedBasis {
  std::array<double, 2> down;  // |0'>
  std::array<double, 2> up;    // |1'>
};

/// Real two-qubit pure state; amplitudes in the product basis
/// |0_a 0_b>, |0_a 1_b>, |1_a 0_b>, |1_a 1_b>.  Normalized to 1 within 1e-12.
struct PureState {
  double amp00 = 0.0;
  double amp01 = 0.0;
  double amp10 = 0.0;
  double amp11 = 0.0;

  std::array<double, 4> amps() const { return {amp00, amp01, amp10, amp11}; }
  double norm2() const;
};

/// The four local observables: two atom-side angles (A, a), two photon-side
/// angles (B, b).  Index 0 is the primary setting (A or B).
struct SettingsPair {
  std::array<MeasAngle, 2> atom;
  std::array<MeasAngle, 2> photon;
};

/// Lossless joint outcome distribution for one (atom angle, photon angle)
/// pair.  Outcome +1 on a side means projection onto that side's rotated |1>.
struct IdealJoint {
  double p11 = 0.0;  // (+1, +1)
  double p10 = 0.0;  // (+1, -1)
  double p01 = 0.0;  // (-1, +1)
  double p00 = 0.0;  // (-1, -1)

  double sum() const { return p11 + p10 + p01 + p00; }
};

enum class Side { atom, photon };

/// Builds the one-parameter family of non-maximally entangled states
///   C [ (1 - 2 cos(theta)) |00> + sin(theta) (|01> + |10>) ],
/// normalized, amp11 = 0 exactly.  Throws DegenerateState when |sin(theta)|
/// < 1e-9 (the family collapses to a product state there).
PureState make_state(double theta);

/// Normalizes an arbitrary real amplitude 4-vector into a PureState.
/// Throws DegenerateState on a (near-)zero vector.
PureState normalized_state(double a00, double a01, double a10, double a11);

RotatedBasis rotated_basis(MeasAngle angle);

/// p_xy = |(<x'_atom| (x) <y'_photon|) |psi>|^2 over the rotated bases.
IdealJoint joint_probs(const PureState& state, MeasAngle atom_angle, MeasAngle photon_angle);

/// Probability of outcome +1 on one side with the partner traced out.
double singles_prob(const PureState& state, MeasAngle angle, Side side);

}  // namespace bell
