#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "modpress/errors.hpp"
#include "modpress/minus_cf.hpp"

using namespace modpress;

namespace {

// Oracle: positive root > 1 of w = n - 1/w, i.e. w^2 - n w + 1 = 0.
double single_digit_fixed_point(int n) {
  return (n + std::sqrt(static_cast<double>(n) * n - 4.0)) / 2.0;
}

// Deterministic admissible periodic word in the geodesic alphabet.
Word random_admissible_periodic(std::mt19937_64& rng, int max_len, int max_digit) {
  auto A = rule_a();
  for (;;) {
    std::uniform_int_distribution<int> len_d(1, max_len), dig_d(3, max_digit);
    int len = len_d(rng);
    Word w;
    w.periodic = true;
    w.digits.resize(len);
    bool ok = true;
    for (int i = 0; i < len && ok; ++i) {
      for (int tries = 0; tries < 64; ++tries) {
        w.digits[i] = dig_d(rng);
        if (i == 0 || is_allowed(A, w.digits[i - 1], w.digits[i])) break;
        if (tries == 63) ok = false;
      }
    }
    if (ok && word_admissible(A, w)) return w;
  }
}

}  // namespace

TEST_CASE("tail sup is the fixed point of y -> 1/(3 - y), exactly") {
  auto y = tail_sup_exact();
  CHECK(y.cf_step(3) == y);
  CHECK(y.to_double() == doctest::Approx(kTailSupDigits3).epsilon(1e-15));
}

TEST_CASE("periodic extension gives exact quadratic values") {
  // frozen from the oracle: w = 3 - 1/w -> (3 + sqrt5)/2
  Word all3{{3}, true};
  auto v3 = eval_minus_cf(all3, TailMode::PeriodicExtension);
  REQUIRE(v3.exact.has_value());
  CHECK(v3.exact->to_double() == doctest::Approx(2.618033988749895).epsilon(1e-15));
  CHECK(single_digit_fixed_point(3) == doctest::Approx(2.618033988749895).epsilon(1e-14));

  Word all4{{4}, true};
  auto v4 = eval_minus_cf(all4, TailMode::PeriodicExtension);
  CHECK(v4.exact->to_double() == doctest::Approx(3.7320508075688772).epsilon(1e-15));
  CHECK(single_digit_fixed_point(4) == doctest::Approx(3.7320508075688772).epsilon(1e-14));
}

TEST_CASE("worst-case tail encloses [n - ymax, n]") {
  for (int n = 3; n <= 12; ++n) {
    Word w{{n}, false};
    auto v = eval_minus_cf(w, TailMode::WorstCase);
    CHECK(v.value.lo == doctest::Approx(n - kTailSupDigits3).epsilon(1e-12));
    CHECK(v.value.hi == doctest::Approx(static_cast<double>(n)).epsilon(1e-12));
    CHECK(v.value.lo <= n - kTailSupDigits3);
    CHECK(v.value.hi >= n);
  }
}

TEST_CASE("tau of periodic words") {
  Word all3{{3}, true};
  CHECK(tau_enclosure(all3, TailMode::PeriodicExtension).mid() ==
        doctest::Approx(1.9248473002384139).epsilon(1e-12));
  Word all4{{4}, true};
  CHECK(tau_enclosure(all4, TailMode::PeriodicExtension).mid() ==
        doctest::Approx(2.6339157938496336).epsilon(1e-12));
}

TEST_CASE("expansion recurrences") {
  auto [w3, u3] = QuadraticIrrational::mobius_fixed_points(3, -1, 1, 0);
  auto e = expand_minus_cf(w3, 5);
  CHECK(e.word.periodic);
  CHECK(e.word.digits == std::vector<int>{3});
  (void)u3;

  auto e52 = expand_minus_cf(QuadraticIrrational::rational(5, 2), 4);
  CHECK(e52.finite);
  CHECK(e52.word.digits == std::vector<int>{3, 2});

  auto [w4, u4] = QuadraticIrrational::mobius_fixed_points(4, -1, 1, 0);
  auto e4 = expand_minus_cf(w4, 4);
  CHECK(e4.word.periodic);
  CHECK(e4.word.digits == std::vector<int>{4});
  (void)u4;

  CHECK_THROWS_AS(expand_minus_cf(QuadraticIrrational::rational(1, 2), 4), DomainError);
}

TEST_CASE("double expansion matches exact on easy values") {
  auto e = expand_minus_cf(2.5, 4);
  CHECK(e.finite);
  CHECK(e.word.digits == std::vector<int>{3, 2});
  auto p = expand_minus_cf(2.618033988749895, 6);
  for (int d : p.word.digits) CHECK(d == 3);
}

TEST_CASE("round trip: expansion of the exact periodic value reproduces the word") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_admissible_periodic(rng, 8, 12);
    auto v = eval_minus_cf(w, TailMode::PeriodicExtension);
    REQUIRE(v.exact.has_value());
    auto e = expand_minus_cf(*v.exact, 64);
    REQUIRE(e.word.periodic);
    // rotation-invariant: some cyclic shift of w equals the expansion period
    bool matched = false;
    size_t n = w.digits.size();
    // the expansion period may be a divisor of |w|; compare cyclic extensions
    for (size_t shift = 0; shift < n && !matched; ++shift) {
      bool ok = true;
      for (size_t i = 0; i < 3 * n; ++i) {
        int expect = w.digits[(shift + i) % n];
        int got = e.word.digits[i % e.word.digits.size()];
        if (expect != got) { ok = false; break; }
      }
      matched = ok;
    }
    CHECK(matched);
  }
}

TEST_CASE("deepening the prefix never widens the enclosure") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = random_admissible_periodic(rng, 6, 9);
    // evaluate prefixes of the cyclic extension at increasing depth
    Word prev;
    Interval last;
    for (int depth = 1; depth <= 5; ++depth) {
      Word pre;
      for (int i = 0; i < depth; ++i) pre.digits.push_back(w.digits[i % w.digits.size()]);
      auto v = eval_minus_cf(pre, TailMode::WorstCase);
      if (depth > 1) {
        CHECK(last.lo <= v.value.lo + 1e-12);
        CHECK(v.value.hi <= last.hi + 1e-12);
      }
      last = v.value;
    }
  }
}

TEST_CASE("containment in the leading-digit box") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    Word w = random_admissible_periodic(rng, 8, 12);
    w.periodic = false;
    Interval t = tau_enclosure(w, TailMode::WorstCase);
    Interval box = tau_leading_digit_box(w.digits.front());
    CHECK(t.lo >= box.lo * (1 - 5e-13) - 5e-13);
    CHECK(t.hi <= box.hi * (1 + 5e-13) + 5e-13);
  }
}

TEST_CASE("rule-aware tail bounds refine the universal ones") {
  auto A = rule_a();
  auto tb = TailBounds::for_rule(A);
  // after a 3 only digits >= 6 may follow: the tail is visibly smaller
  CHECK(tb.tail_sup_after(3) < 0.18);
  CHECK(tb.tail_sup_after(3) > 0.177);
  // after a 6 anything may follow; sup is the (6,3)-style tail, about 0.3542
  CHECK(tb.tail_sup_after(6) < 0.3553);
  CHECK(tb.tail_sup_after(6) >= 0.3542);
  CHECK(tb.tail_sup_after(6) < kTailSupDigits3);
  // universal bounds stay valid
  auto u = TailBounds::universal();
  CHECK(u.tail_sup_after(3) == doctest::Approx(kTailSupDigits3).epsilon(1e-12));
  CHECK(u.tail_inf_after(3) == 0.0);
}

TEST_CASE("truncated tail bounds bracket both sides") {
  auto A = rule_a();
  auto tb = TailBounds::for_rule(A, 8);
  // within digits <= 8 the continuation after 4 satisfies 1/w in [z, y]
  double z = tb.tail_inf_after(4), y = tb.tail_sup_after(4);
  CHECK(z > 0.0);
  CHECK(z < y);
  // oracle: deepest tail is at least 1/8 for digits <= 8
  CHECK(z >= 1.0 / 8.0 - 1e-12);
  CHECK(y <= kTailSupDigits3 + 1e-12);
}
