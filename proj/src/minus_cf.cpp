#include "modpress/minus_cf.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include "modpress/errors.hpp"

namespace modpress {

namespace {

using i128 = __int128;

constexpr long long kMatrixCap = 1LL << 60;

struct Mat2 {
  long long m00 = 1, m01 = 0, m10 = 0, m11 = 1;

  Mat2 digit_step(long long n) const {
    // right-multiply by [[n, -1], [1, 0]]
    auto mul = [](i128 v) {
      if (v > kMatrixCap || v < -kMatrixCap)
        throw CertificationError("digit word too deep for exact evaluation");
      return static_cast<long long>(v);
    };
    Mat2 r;
    r.m00 = mul(i128(m00) * n + m01);
    r.m01 = mul(-i128(m00));
    r.m10 = mul(i128(m10) * n + m11);
    r.m11 = mul(-i128(m10));
    return r;
  }
};

void check_digits(const Word& w, int min_digit) {
  if (w.digits.empty()) throw DomainError("empty digit word");
  for (int d : w.digits)
    if (d < min_digit) throw DomainError("digit below minimum for this tail model");
}

Interval backward_eval(const std::vector<int>& digits, const Interval& tail_y) {
  Interval y = tail_y;
  Interval w;
  for (size_t i = digits.size(); i-- > 0;) {
    double n = static_cast<double>(digits[i]);
    w = Interval{step_down(n - y.hi), step_up(n - y.lo)};
    if (w.lo <= 0) throw DomainError("backward evaluation left the positive cone");
    if (i > 0) y = iv_inv_pos(w);
  }
  return w;
}

}  // namespace

QuadraticIrrational tail_sup_exact() {
  // (3 - sqrt5)/2 = (-3 + sqrt5)/(-2)
  return QuadraticIrrational::make(-3, -2, 5);
}

QuadraticIrrational leading_factor_exact() { return QuadraticIrrational::make(3, 6, 5); }

CFValue eval_minus_cf(const Word& digits, TailMode tail) {
  CFValue out;
  switch (tail) {
    case TailMode::Empty: {
      check_digits(digits, 2);
      out.value = backward_eval(digits.digits, Interval{0.0, 0.0});
      out.finite_expansion = true;
      // exact rational value
      QuadraticIrrational w = QuadraticIrrational::rational(digits.digits.back(), 1);
      for (size_t i = digits.digits.size() - 1; i-- > 0;) {
        w = w.reciprocal().negated().translated(digits.digits[i]);
      }
      out.exact = w;
      out.value = w.to_interval();
      return out;
    }
    case TailMode::WorstCase: {
      check_digits(digits, 3);
      out.value = backward_eval(digits.digits, Interval{0.0, step_up(kTailSupDigits3)});
      return out;
    }
    case TailMode::PeriodicExtension: {
      check_digits(digits, 2);
      Mat2 m;
      for (int d : digits.digits) m = m.digit_step(d);
      if (m.m10 <= 0) throw CertificationError("degenerate digit matrix");
      auto [plus, minus] = QuadraticIrrational::mobius_fixed_points(m.m00, m.m01, m.m10, m.m11);
      if (plus.cmp_rational(1, 1) <= 0)
        throw DomainError("periodic word has value <= 1 (all-2 tail)");
      out.exact = plus;
      out.value = plus.to_interval();
      (void)minus;
      return out;
    }
  }
  throw DomainError("unknown tail mode");
}

Interval tau_enclosure(const Word& digits, TailMode tail) {
  CFValue v = eval_minus_cf(digits, tail);
  return 2.0 * iv_log(v.value);
}

Interval tau_leading_digit_box(int n) {
  if (n < 3) throw DomainError("leading digit below 3");
  double lo = 2.0 * std::log(kLeadingFactor * n);
  double hi = 2.0 * std::log(static_cast<double>(n));
  return {lo, hi};
}

Expansion expand_minus_cf(const QuadraticIrrational& w0, int max_digits) {
  if (w0.cmp_rational(1, 1) <= 0) throw DomainError("expansion requires w > 1");
  Expansion out;
  QuadraticIrrational w = w0;
  std::map<std::tuple<long long, long long, long long, bool>, int> seen;
  for (int i = 0; i < max_digits; ++i) {
    if (w.is_integer()) {
      out.word.digits.push_back(static_cast<int>(w.integer_value()));
      out.finite = true;
      return out;
    }
    auto key = std::make_tuple(w.a(), w.q(), w.d(), w.is_rational());
    auto [it, inserted] = seen.emplace(key, i);
    if (!inserted) {
      if (it->second == 0) {
        out.word.periodic = true;  // purely periodic; digits form one period
        return out;
      }
      out.truncated = true;  // eventually periodic; return the window as-is
      return out;
    }
    long long n = w.ceil();
    out.word.digits.push_back(static_cast<int>(n));
    w = w.cf_step(n);
  }
  out.truncated = true;
  return out;
}

Expansion expand_minus_cf(double w, int max_digits) {
  if (!(w > 1.0)) throw DomainError("expansion requires w > 1");
  Expansion out;
  constexpr double kIntegerSlop = 1e-9;
  for (int i = 0; i < max_digits; ++i) {
    double nearest = std::round(w);
    if (std::abs(w - nearest) < kIntegerSlop) {
      out.word.digits.push_back(static_cast<int>(nearest));
      out.finite = true;
      return out;
    }
    double n = std::ceil(w);
    out.word.digits.push_back(static_cast<int>(n));
    w = 1.0 / (n - w);
  }
  out.truncated = true;
  return out;
}

double TailBounds::y_of(int m) const {
  if (m <= explicit_hi_) return y_sup_[static_cast<size_t>(m - min_)];
  // beyond the constrained range every continuation is allowed
  return step_up(1.0 / (m - y_any_), 1);
}

double TailBounds::z_of(int m) const {
  if (max_symbol_ && m > *max_symbol_) return 0.0;
  if (m <= explicit_hi_) return y_inf_[static_cast<size_t>(m - min_)];
  return step_down(1.0 / m, 1);  // tail >= 0 gives w <= m
}

bool TailBounds::pair_ok(int a, int b) const {
  if (max_symbol_ && (a > *max_symbol_ || b > *max_symbol_)) return false;
  for (auto& [i, j] : forbidden_)
    if (i == a && j == b) return false;
  return true;
}

TailBounds TailBounds::universal() {
  TailBounds tb;
  tb.min_ = 3;
  tb.explicit_hi_ = 3;
  tb.y_sup_ = {step_up(kTailSupDigits3, 1)};
  tb.y_inf_ = {0.0};
  tb.y_any_ = step_up(kTailSupDigits3, 1);
  // universal mode: treat every pair as allowed with tail sup y_max
  tb.forbidden_.clear();
  return tb;
}

TailBounds TailBounds::for_rule(const TransitionRule& rule, std::optional<int> max_symbol) {
  if (rule.alphabet_min < 3)
    throw DomainError("tail bounds require digits >= 3");
  TailBounds tb;
  tb.min_ = rule.alphabet_min;
  tb.max_symbol_ = rule.alphabet_max;
  if (max_symbol) tb.max_symbol_ = max_symbol;
  tb.forbidden_ = rule.forbidden_pairs;
  int hi = std::max(rule.max_constrained_symbol() + 1, rule.alphabet_min + 1);
  if (tb.max_symbol_) hi = std::min(hi, *tb.max_symbol_);
  tb.explicit_hi_ = hi;
  int count = hi - tb.min_ + 1;

  // Y(m): upper bounds for sup 1/w over C_m. Start from a valid upper bound
  // and iterate the monotone map; every iterate stays valid.
  tb.y_sup_.assign(count, 0.0);
  for (int m = tb.min_; m <= hi; ++m)
    tb.y_sup_[m - tb.min_] = 1.0 / (m - 1.0);
  for (int round = 0; round < 200; ++round) {
    double y_any = 0.0;
    for (double y : tb.y_sup_) y_any = std::max(y_any, y);
    tb.y_any_ = step_up(y_any, 1);
    std::vector<double> next(count);
    for (int m = tb.min_; m <= hi; ++m) {
      double best = -1.0;
      for (int f = tb.min_; f <= hi; ++f)
        if (tb.pair_ok(m, f)) best = std::max(best, tb.y_sup_[f - tb.min_]);
      if (!tb.max_symbol_ || hi < *tb.max_symbol_) {
        // followers beyond the explicit range are unconstrained
        double beyond = step_up(1.0 / (hi + 1 - tb.y_any_), 1);
        best = std::max(best, beyond);
      }
      if (best < 0.0) {
        next[m - tb.min_] = 0.0;  // no follower at all: empty cylinder tail
        continue;
      }
      next[m - tb.min_] = step_up(1.0 / (m - best), 1);
    }
    tb.y_sup_ = next;
  }
  {
    double y_any = 0.0;
    for (double y : tb.y_sup_) y_any = std::max(y_any, y);
    tb.y_any_ = step_up(y_any, 1);
  }

  // Z(m): lower bounds for inf 1/w over C_m. Start from 0 and iterate upward;
  // every iterate is a valid lower bound.
  tb.y_inf_.assign(count, 0.0);
  if (tb.max_symbol_) {
    for (int round = 0; round < 200; ++round) {
      std::vector<double> next(count);
      for (int m = tb.min_; m <= hi; ++m) {
        double z_min = 2.0;
        for (int f = tb.min_; f <= *tb.max_symbol_; ++f) {
          if (!tb.pair_ok(m, f)) continue;
          double zf = (f <= hi) ? tb.y_inf_[f - tb.min_] : step_down(1.0 / f, 1);
          z_min = std::min(z_min, zf);
        }
        next[m - tb.min_] = z_min > 1.0 ? 0.0 : step_down(1.0 / (m - z_min), 1);
      }
      tb.y_inf_ = next;
    }
  }
  return tb;
}

double TailBounds::tail_sup_after(int symbol) const {
  double best = 0.0;
  for (int f = min_; f <= explicit_hi_; ++f)
    if (pair_ok(symbol, f)) best = std::max(best, y_of(f));
  if ((!max_symbol_ || explicit_hi_ < *max_symbol_) && pair_ok(symbol, explicit_hi_ + 1))
    best = std::max(best, y_of(explicit_hi_ + 1));
  return best;
}

double TailBounds::tail_inf_after(int symbol) const {
  if (!max_symbol_) return 0.0;
  double z_min = 2.0;
  for (int f = min_; f <= *max_symbol_; ++f) {
    if (!pair_ok(symbol, f)) continue;
    z_min = std::min(z_min, z_of(f));
  }
  return z_min > 1.0 ? 0.0 : z_min;
}

double TailBounds::value_sup_beyond(int symbol_threshold) const {
  // 1/w over cylinders C_m with m > symbol_threshold: largest at the smallest m
  return y_of(symbol_threshold + 1);
}

}  // namespace modpress
