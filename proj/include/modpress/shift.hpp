#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "modpress/config.hpp"

namespace modpress {

// A countable 0/1 transition structure described by a finite forbidden-pair
// list over the alphabet {alphabet_min, alphabet_min + 1, ...} (optionally
// capped by alphabet_max for intrinsically finite rules). B(i,j) = 1 exactly
// when both symbols are in the alphabet and (i,j) is not forbidden.
struct TransitionRule {
  int alphabet_min = 0;
  std::optional<int> alphabet_max;
  std::vector<std::pair<int, int>> forbidden_pairs;

  // Largest symbol mentioned in a forbidden pair; rows and columns beyond it
  // are complete.
  int max_constrained_symbol() const;
  bool in_alphabet(int s) const;
};

// The coding structure for positive geodesics: alphabet {3, 4, 5, ...} with
// the five forbidden pairs (3,3), (3,4), (3,5), (4,3), (5,3).
TransitionRule rule_a();

// Full shift with no forbidden transitions.
TransitionRule full_shift_rule(int alphabet_min, std::optional<int> alphabet_max = std::nullopt);

// B(a, b); symbols below alphabet_min are a domain error, symbols above
// alphabet_max are simply outside the alphabet.
bool is_allowed(const TransitionRule& rule, int a, int b);

// Finite restriction of a TransitionRule to symbols alphabet_min..max_symbol.
class FiniteShift {
 public:
  FiniteShift(const TransitionRule& rule, int max_symbol);

  const TransitionRule& rule() const { return rule_; }
  int min_symbol() const { return min_; }
  int max_symbol() const { return max_; }
  int symbol_count() const { return max_ - min_ + 1; }
  bool allowed(int a, int b) const;
  bool irreducible() const { return irreducible_; }
  bool aperiodic() const;  // pre: irreducible

  // Strongly connected components that can carry orbits (size > 1 or with a
  // self-loop), each as a sorted symbol list.
  const std::vector<std::vector<int>>& recurrent_components() const { return recurrent_; }

 private:
  TransitionRule rule_;
  int min_;
  int max_;
  std::vector<std::uint8_t> adj_;  // row-major symbol_count x symbol_count
  bool irreducible_ = false;
  std::vector<std::vector<int>> recurrent_;

  void compute_components();
};

FiniteShift truncate(const TransitionRule& rule, int max_symbol);

// Finite digit word; `periodic` marks the infinite cyclic extension.
struct Word {
  std::vector<int> digits;
  bool periodic = false;

  bool operator==(const Word&) const = default;
};

// True when consecutive digits (and the wrap-around pair for periodic words)
// are admissible.
bool word_admissible(const TransitionRule& rule, const Word& w);

// All length-n words whose cyclic extension is admissible in the finite
// shift. Refuses with ScaleError when symbol_count^n exceeds the cap.
std::vector<Word> periodic_words(const FiniteShift& shift, int n,
                                 const Limits& limits = Limits{});

// BIP test: every alphabet symbol has an incoming and an outgoing edge to the
// candidate set. Decidable since only finitely many symbols are constrained.
bool check_bip(const TransitionRule& rule, const std::vector<int>& candidates);

}  // namespace modpress
