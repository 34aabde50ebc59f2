#ifndef CW_WALKS_HPP
#define CW_WALKS_HPP

#include <string>
#include <vector>

#include "cw/polyhedron.hpp"

namespace cw {

struct WalkStep {
  Vec direction;    // a circuit
  Rational length;  // positive step length
};
using Walk = std::vector<WalkStep>;

struct StepResult {
  enum class Kind { Step, NotAStep, Unbounded };
  Kind kind;
  Rational lambda;  // 0 for NotAStep; unset for Unbounded
  Vec point;        // landing point for Step; the start point for NotAStep
};

/// Minimum ratio test along g from x. NotAStep when a tight row blocks
/// immediately (lambda = 0); Unbounded when no row increases along g.
StepResult max_step(const Polyhedron& p, const Vec& x, const Vec& g, bool validate = true);

/// (B_i^T u)(B_i^T v) >= 0 for every row i of b.
bool is_sign_compatible(const Matrix& b, const Vec& u, const Vec& v);

/// Requirement numbers follow the circuit-walk definition: 1 circuit
/// direction, 2 positive step length, 3 reachability, 4 prefix feasibility,
/// 5 maximality; 6 is pairwise sign-compatibility (only when requested).
/// Steps are replayed in order, checking 1, 2, 4, 5 per step, then 3, then 6.
struct WalkVerdict {
  bool accepted = false;
  int requirement = 0;     // violated requirement number; 0 when accepted
  std::size_t step_index = 0;
  std::string detail;
};

WalkVerdict verify_walk(const Polyhedron& p, const Vec& from, const Vec& to, const Walk& walk,
                        bool require_sign_compatible);

struct Decomposition {
  std::vector<WalkStep> steps;
  Vec difference;  // sum of length * direction over steps
};

/// Sign-compatible circuit decomposition of y − x with at most
/// dim − rank(eq) steps, built by repeatedly taking a circuit from the
/// sign-pattern face of the circuit model and the largest step that keeps the
/// remaining residual sign-compatible.
Decomposition greedy_sc_decomposition(const Polyhedron& p, const Vec& x, const Vec& y);

/// Norm selector: 1, 2, 3, ... for p-norms; kSupNorm for the sup-norm.
inline constexpr int kSupNorm = 0;

/// Exact sum of coef * radicand^(1/p) terms plus a rational part. Values of
/// walk lengths; comparisons are exact (canonical radicands, then interval
/// refinement with rational endpoints).
struct RadicalSum {
  struct Term {
    Rational coef;
    BigInt radicand;  // >= 2, free of p-th power factors
  };
  int p = 1;
  Rational rational_part{0};
  std::vector<Term> terms;  // sorted by radicand, nonzero coefs

  static RadicalSum zero(int p) { return RadicalSum{p, Rational(0), {}}; }
  static RadicalSum from_rational(int p, const Rational& r) { return RadicalSum{p, r, {}}; }
  /// coef * radicand^(1/p), canonicalized.
  static RadicalSum radical(int p, const Rational& coef, const Rational& radicand);

  RadicalSum& operator+=(const RadicalSum& other);
  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }

  /// Sign of *this − other: −1, 0, +1. Both operands must share p.
  int compare(const RadicalSum& other) const;
  bool operator==(const RadicalSum& other) const { return compare(other) == 0; }
  bool operator<(const RadicalSum& other) const { return compare(other) < 0; }

  std::string str() const;
};

/// ||length * direction||_p of one step.
RadicalSum step_norm(const WalkStep& step, int p);

/// Sum of step norms over the walk.
RadicalSum walk_length(const Walk& walk, int p);

}  // namespace cw

#endif
