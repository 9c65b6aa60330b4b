#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modpress/interval.hpp"

namespace modpress {

// Reduced fraction with 64-bit components, used for descriptor output.
struct Rational64 {
  long long num = 0;
  long long den = 1;

  static Rational64 make(long long n, long long d);
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Element of a real quadratic field in the normal form (a + sqrt(d)) / q with
// integer a, q, d;  q != 0, d >= 0 and q | (d - a^2). d = 0 encodes a rational
// a/q. The normal form is closed under the three elementary maps this library
// needs (translation, negated reciprocal, continued-fraction step) with d held
// fixed, so endpoint pairs of one geodesic always share the same d and admit
// exact joint comparisons. Overflow in any intermediate raises
// CertificationError; at the digit sizes used here it does not trigger.
class QuadraticIrrational {
 public:
  QuadraticIrrational() = default;

  static QuadraticIrrational rational(long long num, long long den);
  // Constructs (a + sqrt(d))/q, fixing up the divisibility invariant if
  // needed (which rescales d; prefer the factory helpers that preserve it).
  static QuadraticIrrational make(long long a, long long q, long long d);

  // Both fixed points of x = (m00 x + m01)/(m10 x + m11), larger root first
  // (requires m10 > 0). Perfect-square discriminants yield rational values.
  static std::pair<QuadraticIrrational, QuadraticIrrational> mobius_fixed_points(
      long long m00, long long m01, long long m10, long long m11);

  long long a() const { return a_; }
  long long q() const { return q_; }
  long long d() const { return d_; }

  bool is_rational() const { return root_ == 0; }
  bool is_integer() const;
  long long integer_value() const;  // pre: is_integer()

  QuadraticIrrational translated(long long k) const;  // x + k
  QuadraticIrrational negated() const;                // -x
  QuadraticIrrational reciprocal() const;             // 1/x, pre: x != 0
  QuadraticIrrational neg_reciprocal() const;         // -1/x
  QuadraticIrrational cf_step(long long n) const;     // 1/(n - x)
  QuadraticIrrational conjugate() const;              // a - sqrt(d) part

  int sign() const;                       // exact sign of the value
  int cmp_rational(long long num, long long den) const;  // sign(x - num/den)
  int cmp(const QuadraticIrrational& o) const;           // pre: same d or rational
  bool operator==(const QuadraticIrrational& o) const;

  long long floor() const;
  long long ceil() const;

  double to_double() const;
  Interval to_interval() const;  // tight two-sided double enclosure

  // Decomposition p + s*sqrt(d0) with d0 square-free (d0 = 0 for rationals).
  struct Decomposed {
    Rational64 p;
    Rational64 s;
    long long d0 = 0;
  };
  Decomposed decompose() const;

  std::string str() const;

 private:
  // value = (a_ + root_ * sqrt(d_)) / q_ with root_ in {0, 1}; root_ = 0 for
  // rationals (then d_ is ignored and kept 0).
  long long a_ = 0;
  long long q_ = 1;
  long long d_ = 0;
  int root_ = 0;
};

// Transient value (x + y*sqrt(d))/z for exact sign predicates that mix two
// field elements (e.g. products of geodesic endpoints). Arithmetic is done in
// 128-bit; gcd reduction keeps components in 64-bit range between steps.
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(long long x, long long y, long long z, long long d);
  static QuadNum of(const QuadraticIrrational& v);
  static QuadNum integer(long long n, long long d);

  QuadNum add(const QuadNum& o) const;
  QuadNum sub(const QuadNum& o) const;
  QuadNum mul(const QuadNum& o) const;
  QuadNum scale(long long k) const;
  QuadNum sub_int(long long n) const;
  int sign() const;

  long long x() const { return x_; }
  long long y() const { return y_; }
  long long z() const { return z_; }

 private:
  long long x_ = 0, y_ = 0, z_ = 1, d_ = 0;
  void reduce();
};

// floor(sqrt(n)) for n >= 0, exact.
long long isqrt64(long long n);

// Largest f with f^2 | n, so n = f^2 * (n / f^2) with square-free cofactor.
// Exact for n < 9.2e18 (trial division to 1e6 plus a perfect-square check).
long long square_part(long long n);

}  // namespace modpress
