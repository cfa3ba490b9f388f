#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "bell/detector.hpp"

namespace bell {

/// One deterministic local strategy: a fixed outcome (+1, -1 or none) for
/// each of the two settings on each side.  Strategies are allowed to predict
/// non-detection; that is exactly how local models exploit inefficiency.
struct DeterministicStrategy {
  std::array<Outcome, 2> atom;    // outcome for A, a
  std::array<Outcome, 2> photon;  // outcome for B, b
};

inline constexpr std::size_t kStrategyCount = 81;  // 3^2 atom maps x 3^2 photon maps
inline constexpr std::size_t kBehaviorDim = 36;    // 4 setting pairs x 9 outcome pairs

struct StrategyBehavior {
  DeterministicStrategy strategy;
  Behavior behavior;  // induced at perfect detection: one unit cell per setting pair
};

/// All 81 deterministic strategies with their induced behaviors, in canonical
/// lexicographic order over (A, a, B, b) outcomes (+1 < -1 < none).
/// Built once and cached; the returned reference is shared and read-only.
const std::vector<StrategyBehavior>& enumerate_strategies();

/// Flattens a behavior table to the 36-vector used by the membership LP:
/// index = pair * 9 + atom outcome * 3 + photon outcome.
std::array<double, kBehaviorDim> behavior_vector(const Behavior& b);

/// Result of the local-polytope membership test.
///
/// slack is the max-norm distance between the input and the polytope,
/// sign-coded: -distance (<= 0) when local, +separation when not.  For a
/// nonlocal input, `functional` g satisfies  g.p >= g.v + slack  for every
/// vertex v; `functional_vertex_max` is max_v g.v.  Certificates are verified
/// by direct arithmetic before being returned, never trusted from the solver.
struct LocalityVerdict {
  bool is_local = false;
  double slack = 0.0;
  std::vector<double> weights;          // size 81 when local, else empty
  std::vector<double> functional;       // size 36 when nonlocal, else empty
  double functional_vertex_max = 0.0;
};

/// Exact membership of a behavior in the convex hull of the 81 deterministic
/// strategies, decided through a linear program (distance <= tol counts as
/// inside).  Throws Numerical if the solve or the certificate check fails.
LocalityVerdict is_local(const Behavior& behavior, double tol = 1e-9);

/// Behavior of a mixture of deterministic strategies pushed through the
/// detector channels (losses thin clicks only; background can fire on any
/// record).  weights must be 81 nonnegative values summing to 1.
Behavior lhv_simulate(const std::vector<double>& weights, const DetectorModel& model);

}  // namespace bell
