// Obstruction class, homotopy search and the constructive lifting pipeline
// along B = A<X | dX = t> for the top variable X.
#ifndef DGLIFT_LIFT_HPP
#define DGLIFT_LIFT_HPP

#include <optional>
#include <string>
#include <vector>

#include "dglift/jop.hpp"

namespace dglift {

class LiftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Obstruction {
  GradedMap h;  // j_X(d)
  bool cycle_verified = false;
};

/// h = j_X(d). Throws LiftError when d^2 != 0, when the signature is
/// degenerate or when X is not the top variable.
Obstruction obstruction(const JOperator& j, const Differential& d);

struct HomotopySearch {
  bool found = false;
  int bound = 0;
  std::size_t unknowns = 0;
  /// [d, gamma] == h, re-verified.
  std::optional<GradedMap> gamma;
};

/// Solves [d, gamma] = h for gamma of degree -|X| with entries over
/// component_monomials(|e_l| - |X| - |e_m|, D).
HomotopySearch solve_homotopy(const JOperator& j, const Differential& d, const GradedMap& h,
                              int D);

/// True when j_X(d) == [d, gamma] exactly.
bool verify_certificate(const JOperator& j, const Differential& d, const GradedMap& gamma);

struct NaiveDecision {
  bool vanishes = false;
  int bound = 0;
  Obstruction obstruction;
  std::optional<GradedMap> gamma;
};

NaiveDecision decide_naive_lift(const JOperator& j, const Differential& d, int D);

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

struct LiftResult {
  bool odd = false;
  /// N itself (even) or N + N(-|X|) (odd).
  ModulePtr module;
  Differential target;  // d or its two-fold extension
  GradedMap u;          // columns are the new basis
  Differential M;       // entries free of X
  std::vector<Check> checks;
};

LiftResult construct_lift_even(const JOperator& j, const Differential& d, const GradedMap& gamma);
LiftResult construct_lift_odd(const JOperator& j, const Differential& d, const GradedMap& gamma);
/// Dispatches on the parity of X.
LiftResult construct_lift(const JOperator& j, const Differential& d, const GradedMap& gamma);

struct LiftVerdict {
  bool pass = false;
  std::vector<Check> checks;
  /// Basis element whose column failed first.
  std::optional<std::string> column;
};

/// Checks target == u M u^{-1}, M^2 = 0 and that M has no X.
LiftVerdict verify_lift(const JOperator& j, const Differential& target, const GradedMap& u,
                        const Differential& M);

/// Data of the odd construction, exposed for tests.
struct OddLiftData {
  TwofoldExtension ext;
  GradedMap alpha;   // gamma^2 - j(gamma)
  GradedMap beta;    // (0 alpha; -1 0)
  WeakJOp gamma_op;  // j# + ad(beta - gamma#)
};

OddLiftData odd_lift_data(const JOperator& j, const Differential& d, const GradedMap& gamma);

}  // namespace dglift

#endif  // DGLIFT_LIFT_HPP
