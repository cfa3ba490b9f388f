#pragma once

#include <vector>

namespace bell::lp {

enum class Sense : char { le = 'L', eq = 'E' };

/// Small dense linear program in the form
///   minimize c.x   subject to   A[i].x (<= | ==) b[i],  x >= 0.
struct Problem {
  int nvars = 0;
  std::vector<std::vector<double>> rows;  // each of size nvars
  std::vector<double> rhs;
  std::vector<Sense> sense;
  std::vector<double> cost;  // size nvars

  void add_row(std::vector<double> a, Sense s, double b);
};

enum class Status { optimal, infeasible, unbounded, iteration_limit };

struct Solution {
  Status status = Status::iteration_limit;
  double objective = 0.0;
  std::vector<double> x;
};

/// Two-phase dense tableau simplex.  Dantzig pricing with a Bland fallback
/// once the iteration count passes a cycling guard.  Intended for problems
/// with at most a few hundred rows/columns.
Solution solve(const Problem& p, double eps = 1e-11, int max_iter = 50000);

}  // namespace bell::lp
