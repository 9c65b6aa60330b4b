#include "modpress/shift.hpp"

#include <algorithm>
#include <cmath>

#include "modpress/errors.hpp"

namespace modpress {

int TransitionRule::max_constrained_symbol() const {
  int m = alphabet_min - 1;
  for (const auto& [i, j] : forbidden_pairs) m = std::max({m, i, j});
  return m;
}

bool TransitionRule::in_alphabet(int s) const {
  return s >= alphabet_min && (!alphabet_max || s <= *alphabet_max);
}

TransitionRule rule_a() {
  TransitionRule r;
  r.alphabet_min = 3;
  r.forbidden_pairs = {{3, 3}, {3, 4}, {3, 5}, {4, 3}, {5, 3}};
  return r;
}

TransitionRule full_shift_rule(int alphabet_min, std::optional<int> alphabet_max) {
  TransitionRule r;
  r.alphabet_min = alphabet_min;
  r.alphabet_max = alphabet_max;
  return r;
}

bool is_allowed(const TransitionRule& rule, int a, int b) {
  if (a < rule.alphabet_min || b < rule.alphabet_min)
    throw DomainError("symbol below alphabet_min");
  if (!rule.in_alphabet(a) || !rule.in_alphabet(b)) return false;
  for (const auto& [i, j] : rule.forbidden_pairs)
    if (i == a && j == b) return false;
  return true;
}

FiniteShift::FiniteShift(const TransitionRule& rule, int max_symbol)
    : rule_(rule), min_(rule.alphabet_min), max_(max_symbol) {
  if (max_symbol < rule.alphabet_min) throw DomainError("truncation below alphabet_min");
  if (rule.alphabet_max && max_symbol > *rule.alphabet_max) max_ = *rule.alphabet_max;
  int n = symbol_count();
  adj_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = min_; a <= max_; ++a)
    for (int b = min_; b <= max_; ++b)
      adj_[static_cast<size_t>(a - min_) * n + (b - min_)] = is_allowed(rule_, a, b) ? 1 : 0;
  compute_components();
}

bool FiniteShift::allowed(int a, int b) const {
  if (a < min_ || a > max_ || b < min_ || b > max_) return false;
  return adj_[static_cast<size_t>(a - min_) * symbol_count() + (b - min_)] != 0;
}

void FiniteShift::compute_components() {
  // Tarjan SCC, iterative.
  int n = symbol_count();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0, comp_count = 0;

  struct Frame {
    int v;
    int next_child;
  };
  for (int start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    std::vector<Frame> call;
    call.push_back({start, 0});
    index[start] = low[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      bool descended = false;
      while (f.next_child < n) {
        int w = f.next_child++;
        if (!adj_[static_cast<size_t>(f.v) * n + w]) continue;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[f.v] = std::min(low[f.v], index[w]);
      }
      if (descended) continue;
      if (low[f.v] == index[f.v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comp_count;
        } while (w != f.v);
        ++comp_count;
      }
      int v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
    }
  }

  irreducible_ = (comp_count == 1);
  std::vector<std::vector<int>> groups(comp_count);
  for (int v = 0; v < n; ++v) groups[comp[v]].push_back(v + min_);
  for (auto& g : groups) {
    std::sort(g.begin(), g.end());
    bool carries = g.size() > 1 || allowed(g[0], g[0]);
    if (carries) recurrent_.push_back(g);
  }
}

bool FiniteShift::aperiodic() const {
  // gcd of cycle lengths via BFS levels from symbol 0 of the component.
  int n = symbol_count();
  std::vector<int> level(n, -1);
  std::vector<int> queue;
  level[0] = 0;
  queue.push_back(0);
  int g = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int w = 0; w < n; ++w) {
      if (!adj_[static_cast<size_t>(v) * n + w]) continue;
      if (level[w] == -1) {
        level[w] = level[v] + 1;
        queue.push_back(w);
      } else {
        g = std::gcd(g, std::abs(level[v] + 1 - level[w]));
      }
    }
  }
  return g == 1;
}

FiniteShift truncate(const TransitionRule& rule, int max_symbol) {
  return FiniteShift(rule, max_symbol);
}

bool word_admissible(const TransitionRule& rule, const Word& w) {
  if (w.digits.empty()) return false;
  for (int d : w.digits)
    if (!rule.in_alphabet(d)) return false;
  for (size_t i = 0; i + 1 < w.digits.size(); ++i)
    if (!is_allowed(rule, w.digits[i], w.digits[i + 1])) return false;
  if (w.periodic && !is_allowed(rule, w.digits.back(), w.digits.front())) return false;
  return true;
}

std::vector<Word> periodic_words(const FiniteShift& shift, int n, const Limits& limits) {
  if (n < 1) throw DomainError("periodic_words requires n >= 1");
  double total = std::pow(static_cast<double>(shift.symbol_count()), n);
  if (total > static_cast<double>(limits.max_enum))
    throw ScaleError("oracle scale exceeded");

  std::vector<Word> out;
  std::vector<int> cur(n);
  // DFS over admissible prefixes; check the wrap-around pair at the leaves.
  struct Rec {
    const FiniteShift& s;
    std::vector<Word>& out;
    std::vector<int>& cur;
    int n;
    void go(int depth) {
      if (depth == n) {
        if (s.allowed(cur[n - 1], cur[0])) out.push_back({cur, true});
        return;
      }
      for (int sym = s.min_symbol(); sym <= s.max_symbol(); ++sym) {
        if (depth > 0 && !s.allowed(cur[depth - 1], sym)) continue;
        cur[depth] = sym;
        go(depth + 1);
      }
    }
  } rec{shift, out, cur, n};
  rec.go(0);
  return out;
}

bool check_bip(const TransitionRule& rule, const std::vector<int>& candidates) {
  if (candidates.empty()) throw DomainError("check_bip requires nonempty candidates");
  for (int b : candidates)
    if (!rule.in_alphabet(b)) throw DomainError("candidate outside alphabet");

  // Beyond the constrained range every symbol connects both ways with any
  // candidate, so only finitely many symbols need checking.
  int hi = rule.max_constrained_symbol();
  if (rule.alphabet_max) hi = std::min(*rule.alphabet_max, std::max(hi, rule.alphabet_min));
  for (int a = rule.alphabet_min; a <= hi; ++a) {
    bool has_in = false, has_out = false;
    for (int b : candidates) {
      if (is_allowed(rule, b, a)) has_in = true;
      if (is_allowed(rule, a, b)) has_out = true;
    }
    if (!has_in || !has_out) return false;
  }
  return true;
}

}  // namespace modpress
