#pragma once

#include <optional>
#include <vector>

#include "modpress/interval.hpp"
#include "modpress/quadratic.hpp"
#include "modpress/shift.hpp"

namespace modpress {

// sup of the tail 1/(n2 - 1/(n3 - ...)) over digit sequences >= 3; the fixed
// point of y -> 1/(3 - y).
inline constexpr double kTailSupDigits3 = 0.3819660112501052;  // (3 - sqrt5)/2

// Leading-digit factor: with digits >= 3 every value w with leading digit n
// satisfies c*n <= w <= n.
inline constexpr double kLeadingFactor = 0.8726779962499649;  // (3 + sqrt5)/6

QuadraticIrrational tail_sup_exact();       // (3 - sqrt(5))/2
QuadraticIrrational leading_factor_exact(); // (3 + sqrt(5))/6

// How the digits beyond the given word are accounted for.
enum class TailMode {
  Empty,              // no continuation: the word's own rational value
  WorstCase,          // tail ranges over [0, (3 - sqrt5)/2]; digits >= 3
  PeriodicExtension,  // cyclic extension of the word; exact quadratic value
};

struct CFValue {
  Interval value;
  std::optional<QuadraticIrrational> exact;
  bool finite_expansion = false;
};

// Encloses w = n1 - 1/(n2 - 1/(n3 - ...)), evaluated backwards from the
// deepest digit. Digits must be >= 2 (>= 3 for WorstCase).
CFValue eval_minus_cf(const Word& digits, TailMode tail);

// 2 log of the eval_minus_cf enclosure.
Interval tau_enclosure(const Word& digits, TailMode tail);

// [2 log(c n), 2 log n], the universal box for values with leading digit n.
Interval tau_leading_digit_box(int n);

struct Expansion {
  Word word;
  bool finite = false;     // the expansion terminated at an exact integer
  bool truncated = false;  // max_digits reached first
};

// Digit recurrence n = ceil(w), w <- 1/(n - w); an exact integer remainder
// ends the expansion (n = w emitted, finite flag set). Pre: w > 1.
Expansion expand_minus_cf(const QuadraticIrrational& w, int max_digits);
Expansion expand_minus_cf(double w, int max_digits);

// Certified bounds on continued-fraction tails restricted to the admissible
// continuations of a rule (optionally truncated to symbols <= max_symbol).
// y_sup bounds sup{1/w(x) : x in C_m} from above, y_inf bounds the infimum
// from below; both are safe at every refinement stage.
class TailBounds {
 public:
  // Unconstrained digits >= 3: y in [0, (3-sqrt5)/2].
  static TailBounds universal();
  static TailBounds for_rule(const TransitionRule& rule,
                             std::optional<int> max_symbol = std::nullopt);

  // Bounds for the tail that follows an occurrence of `symbol`.
  double tail_sup_after(int symbol) const;
  double tail_inf_after(int symbol) const;
  // Bounds valid after any symbol (used for lumped tail classes).
  double tail_sup_any() const { return y_any_; }

  // sup / inf of 1/w over cylinders C_m with m in (from, infinity) or
  // [from, max]; used when a digit is only known to exceed a threshold.
  double value_sup_beyond(int symbol_threshold) const;

  int alphabet_min() const { return min_; }

 private:
  TailBounds() = default;
  int min_ = 3;
  int explicit_hi_ = 3;
  std::optional<int> max_symbol_;
  std::vector<double> y_sup_;  // Y(m), index m - min_
  std::vector<double> y_inf_;  // Z(m)
  double y_any_ = kTailSupDigits3;
  std::vector<std::pair<int, int>> forbidden_;

  double y_of(int m) const;
  double z_of(int m) const;
  bool pair_ok(int a, int b) const;
  friend class TailBoundsBuilder;
};

}  // namespace modpress
