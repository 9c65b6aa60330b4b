#include "modpress/quadratic.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "modpress/errors.hpp"

namespace modpress {

namespace {

using i128 = __int128;

constexpr long long kComponentCap = 1LL << 62;

long long checked_ll(i128 v, const char* where) {
  if (v > static_cast<i128>(kComponentCap) || v < -static_cast<i128>(kComponentCap))
    throw CertificationError(std::string("exact arithmetic overflow in ") + where);
  return static_cast<long long>(v);
}

long long gcd3(long long a, long long b, long long c) {
  return std::gcd(std::gcd(std::llabs(a), std::llabs(b)), std::llabs(c));
}

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

// sign of (x + y*sqrt(d)) for d >= 0 non-negative radicand
int sign_quad(i128 x, i128 y, long long d) {
  if (d == 0 || y == 0) return x > 0 ? 1 : (x < 0 ? -1 : 0);
  if (x >= 0 && y > 0) return 1;
  if (x <= 0 && y < 0) return -1;
  if (x == 0) return y > 0 ? 1 : -1;
  // mixed signs: compare x^2 against y^2 d
  i128 xs = x * x;
  i128 ys = y * y;
  if (ys > (i128(1) << 80) || d > (1LL << 46))
    throw CertificationError("exact arithmetic overflow in sign_quad");
  ys *= d;
  if (xs == ys) return 0;
  bool x_dominates = xs > ys;
  if (x > 0) return x_dominates ? 1 : -1;  // y < 0
  return x_dominates ? -1 : 1;             // x < 0, y > 0
}

}  // namespace

long long isqrt64(long long n) {
  if (n < 0) throw DomainError("isqrt64 of negative value");
  long long s = static_cast<long long>(std::sqrt(static_cast<long double>(n)));
  while (s > 0 && s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

long long square_part(long long n) {
  if (n <= 0) return 1;
  long long f = 1, m = n;
  while (m % 4 == 0) { m /= 4; f *= 2; }
  for (long long p = 3; p <= 1'000'000 && p * p <= m; p += 2) {
    while (m % (p * p) == 0) { m /= p * p; f *= p; }
  }
  // catches a residual perfect square; square parts whose prime factors all
  // exceed 1e6 with a non-square cofactor are not extracted (display only)
  long long s = isqrt64(m);
  if (s > 1 && s * s == m) f *= s;
  return f;
}

Rational64 Rational64::make(long long n, long long d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (d < 0) { n = -n; d = -d; }
  long long g = std::gcd(std::llabs(n), d);
  if (g > 1) { n /= g; d /= g; }
  return {n, d};
}

QuadraticIrrational QuadraticIrrational::rational(long long num, long long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  QuadraticIrrational v;
  long long g = std::gcd(std::llabs(num), std::llabs(den));
  if (g > 1) { num /= g; den /= g; }
  v.a_ = num;
  v.q_ = den;
  v.d_ = 0;
  v.root_ = 0;
  return v;
}

QuadraticIrrational QuadraticIrrational::make(long long a, long long q, long long d) {
  if (q == 0) throw DomainError("quadratic with zero denominator");
  if (d < 0) throw DomainError("negative radicand");
  long long s = isqrt64(d);
  if (s * s == d) return rational(a + s, q);
  QuadraticIrrational v;
  i128 rem = (i128(d) - i128(a) * a) % q;
  if (rem != 0) {
    // rescale so that q | d - a^2
    long long aq = std::llabs(q);
    a = checked_ll(i128(a) * aq, "make");
    d = checked_ll(i128(d) * aq * aq, "make");
    q = checked_ll(i128(q) * aq, "make");
  }
  v.a_ = a;
  v.q_ = q;
  v.d_ = d;
  v.root_ = 1;
  return v;
}

std::pair<QuadraticIrrational, QuadraticIrrational> QuadraticIrrational::mobius_fixed_points(
    long long m00, long long m01, long long m10, long long m11) {
  if (m10 <= 0) throw DomainError("mobius_fixed_points requires m10 > 0");
  i128 tr = i128(m00) - m11;
  i128 disc = tr * tr + i128(4) * m10 * m01;
  if (disc < 0) throw DomainError("no real fixed points");
  long long a = checked_ll(tr, "mobius_fixed_points");
  long long d = checked_ll(disc, "mobius_fixed_points");
  long long q = checked_ll(i128(2) * m10, "mobius_fixed_points");
  long long s = isqrt64(d);
  if (s * s == d) return {rational(a + s, q), rational(a - s, q)};
  QuadraticIrrational plus;
  plus.a_ = a;
  plus.q_ = q;
  plus.d_ = d;
  plus.root_ = 1;
  return {plus, plus.conjugate()};
}

bool QuadraticIrrational::is_integer() const { return root_ == 0 && a_ % q_ == 0; }

long long QuadraticIrrational::integer_value() const {
  if (!is_integer()) throw DomainError("not an integer");
  return a_ / q_;
}

QuadraticIrrational QuadraticIrrational::translated(long long k) const {
  QuadraticIrrational v = *this;
  v.a_ = checked_ll(i128(a_) + i128(k) * q_, "translated");
  return v;
}

QuadraticIrrational QuadraticIrrational::negated() const {
  QuadraticIrrational v = *this;
  v.q_ = -v.q_;
  if (v.root_ == 0) { v.a_ = -v.a_; v.q_ = -v.q_; }
  return v;
}

QuadraticIrrational QuadraticIrrational::reciprocal() const {
  if (root_ == 0) {
    if (a_ == 0) throw DomainError("reciprocal of zero");
    return rational(q_, a_);
  }
  QuadraticIrrational v = *this;
  i128 t = (i128(d_) - i128(a_) * a_) / q_;  // exact by invariant
  v.a_ = -a_;
  v.q_ = checked_ll(t, "reciprocal");
  return v;
}

QuadraticIrrational QuadraticIrrational::neg_reciprocal() const { return reciprocal().negated(); }

QuadraticIrrational QuadraticIrrational::cf_step(long long n) const {
  return negated().translated(n).reciprocal();
}

QuadraticIrrational QuadraticIrrational::conjugate() const {
  if (root_ == 0) return *this;
  QuadraticIrrational v = *this;
  v.a_ = -a_;
  v.q_ = -q_;
  return v;
}

int QuadraticIrrational::sign() const {
  int num = sign_quad(a_, root_, d_);
  return q_ > 0 ? num : -num;
}

int QuadraticIrrational::cmp_rational(long long num, long long den) const {
  if (den < 0) { num = -num; den = -den; }
  // (a + r sqrt(d))/q - num/den has numerator (a den - num q) + r den sqrt(d)
  // over q den; den > 0 so only sign(q) flips the result.
  i128 x = i128(a_) * den - i128(num) * q_;
  i128 y = i128(root_) * den;
  int numsign = sign_quad(x, y, d_);
  return q_ > 0 ? numsign : -numsign;
}

int QuadraticIrrational::cmp(const QuadraticIrrational& o) const {
  if (root_ == 0 && o.root_ == 0) {
    i128 lhs = i128(a_) * o.q_;
    i128 rhs = i128(o.a_) * q_;
    int flip = (q_ > 0 ? 1 : -1) * (o.q_ > 0 ? 1 : -1);
    return (lhs > rhs ? 1 : lhs < rhs ? -1 : 0) * flip;
  }
  if (o.root_ == 0) return cmp_rational(o.a_, o.q_);
  if (root_ == 0) return -o.cmp_rational(a_, q_);
  if (d_ != o.d_) throw DomainError("cmp across different quadratic fields");
  // (a1 + sqrt d)/q1 - (a2 + sqrt d)/q2 = ((a1 q2 - a2 q1) + (q2 - q1) sqrt d)/(q1 q2)
  i128 x = i128(a_) * o.q_ - i128(o.a_) * q_;
  i128 y = i128(o.q_) - q_;
  int numsign = sign_quad(x, y, d_);
  int densign = (q_ > 0 ? 1 : -1) * (o.q_ > 0 ? 1 : -1);
  return numsign * densign;
}

bool QuadraticIrrational::operator==(const QuadraticIrrational& o) const {
  if (root_ == 0 || o.root_ == 0) {
    if (root_ != o.root_) return false;
    return root_ == 0 ? (i128(a_) * o.q_ == i128(o.a_) * q_) : cmp(o) == 0;
  }
  return d_ == o.d_ && cmp(o) == 0;
}

long long QuadraticIrrational::floor() const {
  if (root_ == 0) return floor_div(a_, q_);
  long long s = isqrt64(d_);  // s < sqrt(d) < s+1, d non-square in normal form
  if (q_ > 0) return floor_div(a_ + s, q_);
  // x = -(a + sqrt d)/|q|; floor(-t) = -ceil(t) = -floor(t) - 1 for irrational t
  return -floor_div(a_ + s, -q_) - 1;
}

long long QuadraticIrrational::ceil() const {
  if (root_ == 0) return ceil_div(a_, q_);
  return floor() + 1;
}

double QuadraticIrrational::to_double() const {
  return (static_cast<double>(a_) + root_ * std::sqrt(static_cast<double>(d_))) / q_;
}

Interval QuadraticIrrational::to_interval() const {
  if (root_ == 0) {
    double v = static_cast<double>(a_) / q_;
    return {step_down(v), step_up(v)};
  }
  double s = std::sqrt(static_cast<double>(d_));
  double s_lo = step_down(s), s_hi = step_up(s);
  double n_lo = static_cast<double>(a_) + s_lo;
  double n_hi = static_cast<double>(a_) + s_hi;
  if (q_ > 0) return {step_down(n_lo / q_), step_up(n_hi / q_)};
  return {step_down(n_hi / q_), step_up(n_lo / q_)};
}

QuadraticIrrational::Decomposed QuadraticIrrational::decompose() const {
  Decomposed out;
  out.p = Rational64::make(a_, q_);
  if (root_ == 0) {
    out.s = {0, 1};
    out.d0 = 0;
    return out;
  }
  long long f = square_part(d_);
  out.d0 = d_ / (f * f);
  out.s = Rational64::make(f, q_);
  return out;
}

std::string QuadraticIrrational::str() const {
  std::ostringstream os;
  if (root_ == 0) {
    os << a_;
    if (q_ != 1) os << "/" << q_;
  } else {
    os << "(" << a_ << "+sqrt(" << d_ << "))/" << q_;
  }
  return os.str();
}

QuadNum::QuadNum(long long x, long long y, long long z, long long d)
    : x_(x), y_(y), z_(z), d_(d) {
  if (z_ == 0) throw DomainError("QuadNum with zero denominator");
  reduce();
}

QuadNum QuadNum::of(const QuadraticIrrational& v) {
  return QuadNum(v.a(), v.is_rational() ? 0 : 1, v.q(), v.d());
}

QuadNum QuadNum::integer(long long n, long long d) { return QuadNum(n, 0, 1, d); }

void QuadNum::reduce() {
  if (z_ < 0) { x_ = -x_; y_ = -y_; z_ = -z_; }
  long long g = gcd3(x_, y_, z_);
  if (g > 1) { x_ /= g; y_ /= g; z_ /= g; }
}

QuadNum QuadNum::add(const QuadNum& o) const {
  i128 x = i128(x_) * o.z_ + i128(o.x_) * z_;
  i128 y = i128(y_) * o.z_ + i128(o.y_) * z_;
  i128 z = i128(z_) * o.z_;
  QuadNum r;
  r.x_ = checked_ll(x, "QuadNum::add");
  r.y_ = checked_ll(y, "QuadNum::add");
  r.z_ = checked_ll(z, "QuadNum::add");
  r.d_ = d_;
  r.reduce();
  return r;
}

QuadNum QuadNum::sub(const QuadNum& o) const {
  QuadNum neg = o;
  neg.x_ = -neg.x_;
  neg.y_ = -neg.y_;
  return add(neg);
}

QuadNum QuadNum::mul(const QuadNum& o) const {
  if (d_ != o.d_) throw DomainError("QuadNum::mul across fields");
  i128 x = i128(x_) * o.x_ + i128(y_) * o.y_ * d_;
  i128 y = i128(x_) * o.y_ + i128(o.x_) * y_;
  i128 z = i128(z_) * o.z_;
  QuadNum r;
  r.x_ = checked_ll(x, "QuadNum::mul");
  r.y_ = checked_ll(y, "QuadNum::mul");
  r.z_ = checked_ll(z, "QuadNum::mul");
  r.d_ = d_;
  r.reduce();
  return r;
}

QuadNum QuadNum::scale(long long k) const {
  QuadNum r = *this;
  r.x_ = checked_ll(i128(x_) * k, "QuadNum::scale");
  r.y_ = checked_ll(i128(y_) * k, "QuadNum::scale");
  r.reduce();
  return r;
}

QuadNum QuadNum::sub_int(long long n) const {
  QuadNum r = *this;
  r.x_ = checked_ll(i128(x_) - i128(n) * z_, "QuadNum::sub_int");
  r.reduce();
  return r;
}

int QuadNum::sign() const { return sign_quad(x_, y_, d_); }  // z_ > 0 after reduce

}  // namespace modpress
