// Copyright 2026 The polymon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polymon/nfa.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_map>
#include <utility>

#include "polymon/error.hpp"

namespace polymon {

  namespace {
    std::atomic<std::size_t> g_dfa_cap{kDefaultDfaStateCap};

    using StateSet = std::vector<State>;

    struct StateSetHash {
      std::size_t operator()(StateSet const& s) const noexcept {
        std::size_t h = s.size();
        for (auto x : s) {
          h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
      }
    };

    struct PairHash {
      std::size_t operator()(std::pair<State, State> const& p) const noexcept {
        return (static_cast<std::size_t>(p.first) << 32) ^ p.second;
      }
    };

    // Epsilon closure of each state, sorted.
    std::vector<StateSet> epsilon_closures(Nfa const& a) {
      std::vector<StateSet> result(a.size());
      std::vector<char>     seen(a.size());
      std::vector<State>    stack;
      for (State s = 0; s < a.size(); ++s) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, s);
        seen[s] = 1;
        while (!stack.empty()) {
          State u = stack.back();
          stack.pop_back();
          result[s].push_back(u);
          for (auto const& t : a.out(u)) {
            if (t.label == kEpsilon && !seen[t.target]) {
              seen[t.target] = 1;
              stack.push_back(t.target);
            }
          }
        }
        std::sort(result[s].begin(), result[s].end());
      }
      return result;
    }

    StateSet close(StateSet const& set, std::vector<StateSet> const& clo) {
      StateSet out;
      for (auto s : set) {
        out.insert(out.end(), clo[s].begin(), clo[s].end());
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    StateSet step(Nfa const& a, StateSet const& set, Symbol x) {
      StateSet out;
      for (auto s : set) {
        for (auto const& t : a.out(s)) {
          if (t.label == x) {
            out.push_back(t.target);
          }
        }
      }
      return out;
    }

    void check_same_alphabet(Nfa const& a, Nfa const& b) {
      if (!(a.alphabet() == b.alphabet())) {
        throw InputError("automata are over different alphabets");
      }
    }

    // Copies b's states into out at offset; returns the offset.
    State embed(Nfa& out, Nfa const& b) {
      State offset = static_cast<State>(out.size());
      for (std::size_t i = 0; i < b.size(); ++i) {
        out.add_state();
      }
      for (State s = 0; s < b.size(); ++s) {
        for (auto const& t : b.out(s)) {
          out.add_edge(s + offset, t.label, t.target + offset);
        }
      }
      return offset;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Nfa
  ////////////////////////////////////////////////////////////////////////

  Nfa::Nfa(Alphabet alphabet, std::size_t states)
      : _alphabet(std::move(alphabet)), _final(states), _out(states) {
    if (states == 0) {
      throw InputError("an automaton needs at least one state");
    }
  }

  void Nfa::check_state(State s) const {
    if (s >= size()) {
      throw InputError("state " + std::to_string(s) + " out of range");
    }
  }

  State Nfa::add_state() {
    _final.push_back(0);
    _out.emplace_back();
    return static_cast<State>(_out.size() - 1);
  }

  void Nfa::set_initial(State s) {
    check_state(s);
    _initial = s;
  }

  void Nfa::set_final(State s, bool value) {
    check_state(s);
    _final[s] = value;
  }

  void Nfa::add_edge(State source, Symbol label, State target) {
    check_state(source);
    check_state(target);
    if (label != kEpsilon && !_alphabet.contains(label)) {
      throw InputError("edge label is not in the alphabet");
    }
    auto& out = _out[source];
    Transition tr{label, target};
    if (std::find(out.begin(), out.end(), tr) == out.end()) {
      out.push_back(tr);
    }
  }

  void Nfa::add_path(State source, Word const& w, State target) {
    if (w.empty()) {
      add_edge(source, kEpsilon, target);
      return;
    }
    _alphabet.check_word(w);
    State cur = source;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      State nxt = add_state();
      add_edge(cur, w[i], nxt);
      cur = nxt;
    }
    add_edge(cur, w.back(), target);
  }

  std::vector<State> Nfa::finals() const {
    std::vector<State> out;
    for (State s = 0; s < size(); ++s) {
      if (_final[s]) {
        out.push_back(s);
      }
    }
    return out;
  }

  std::vector<Nfa::Edge> Nfa::edges() const {
    std::vector<Edge> out;
    for (State s = 0; s < size(); ++s) {
      for (auto const& t : _out[s]) {
        out.push_back({s, t.label, t.target});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t Nfa::num_edges() const noexcept {
    std::size_t n = 0;
    for (auto const& v : _out) {
      n += v.size();
    }
    return n;
  }

  ////////////////////////////////////////////////////////////////////////
  // Dfa
  ////////////////////////////////////////////////////////////////////////

  Dfa::Dfa(Alphabet alphabet, std::size_t states)
      : _alphabet(std::move(alphabet)),
        _final(states),
        _table(states * _alphabet.size(), 0) {}

  bool Dfa::accepts(Word const& w) const {
    _alphabet.check_word(w);
    State s = _initial;
    for (auto x : w) {
      s = next(s, x);
    }
    return is_final(s);
  }

  Dfa Dfa::complemented() const {
    Dfa out(*this);
    for (auto& f : out._final) {
      f = !f;
    }
    return out;
  }

  Nfa Dfa::to_nfa() const {
    Nfa out(_alphabet, size());
    out.set_initial(_initial);
    for (State s = 0; s < size(); ++s) {
      out.set_final(s, is_final(s));
      for (Symbol x = 0; x < _alphabet.size(); ++x) {
        out.add_edge(s, x, next(s, x));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  std::size_t dfa_state_cap() noexcept {
    return g_dfa_cap.load(std::memory_order_relaxed);
  }

  void set_dfa_state_cap(std::size_t cap) noexcept {
    g_dfa_cap.store(cap, std::memory_order_relaxed);
  }

  bool nfa_accepts(Nfa const& a, Word const& w) {
    a.alphabet().check_word(w);
    auto     clo = epsilon_closures(a);
    StateSet cur = clo[a.initial()];
    for (auto x : w) {
      if (cur.empty()) {
        return false;
      }
      cur = close(step(a, cur, x), clo);
    }
    return std::any_of(
        cur.begin(), cur.end(), [&](State s) { return a.is_final(s); });
  }

  Dfa determinize(Nfa const& a, std::size_t cap) {
    auto const& sigma = a.alphabet();
    auto        clo   = epsilon_closures(a);

    std::unordered_map<StateSet, State, StateSetHash> index;
    std::vector<StateSet>                             subsets;
    std::vector<std::vector<State>>                   next;

    auto intern = [&](StateSet s) -> State {
      auto it = index.find(s);
      if (it != index.end()) {
        return it->second;
      }
      if (subsets.size() >= cap) {
        throw ResourceError("determinization exceeded the state cap of "
                            + std::to_string(cap));
      }
      State id = static_cast<State>(subsets.size());
      index.emplace(s, id);
      subsets.push_back(std::move(s));
      return id;
    };

    intern(clo[a.initial()]);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      std::vector<State> row(sigma.size());
      for (Symbol x = 0; x < sigma.size(); ++x) {
        row[x] = intern(close(step(a, subsets[i], x), clo));
      }
      next.push_back(std::move(row));
    }

    Dfa d(sigma, subsets.size());
    for (State s = 0; s < subsets.size(); ++s) {
      d.set_final(s,
                  std::any_of(subsets[s].begin(),
                              subsets[s].end(),
                              [&](State u) { return a.is_final(u); }));
      for (Symbol x = 0; x < sigma.size(); ++x) {
        d.set_next(s, x, next[s][x]);
      }
    }
    d.set_initial(0);
    return d;
  }

  Dfa determinize(Nfa const& a) {
    return determinize(a, dfa_state_cap());
  }

  Nfa complement_regular(Nfa const& a) {
    return determinize(a).complemented().to_nfa();
  }

  Nfa union_of(Nfa const& a, Nfa const& b) {
    check_same_alphabet(a, b);
    Nfa   out(a.alphabet(), 1);
    State oa = embed(out, a);
    State ob = embed(out, b);
    out.add_edge(0, kEpsilon, a.initial() + oa);
    out.add_edge(0, kEpsilon, b.initial() + ob);
    for (auto f : a.finals()) {
      out.set_final(f + oa);
    }
    for (auto f : b.finals()) {
      out.set_final(f + ob);
    }
    return out;
  }

  Nfa intersection(Nfa const& a, Nfa const& b) {
    check_same_alphabet(a, b);
    using Pair = std::pair<State, State>;
    std::unordered_map<Pair, State, PairHash> index;
    std::vector<Pair>                         pairs;
    Nfa                                       out(a.alphabet(), 1);

    auto intern = [&](Pair p) -> State {
      auto it = index.find(p);
      if (it != index.end()) {
        return it->second;
      }
      State id = pairs.empty() ? 0 : out.add_state();
      index.emplace(p, id);
      pairs.push_back(p);
      return id;
    };

    intern({a.initial(), b.initial()});
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [p, q] = pairs[i];
      State from  = static_cast<State>(i);
      if (a.is_final(p) && b.is_final(q)) {
        out.set_final(from);
      }
      for (auto const& ta : a.out(p)) {
        if (ta.label == kEpsilon) {
          out.add_edge(from, kEpsilon, intern({ta.target, q}));
          continue;
        }
        for (auto const& tb : b.out(q)) {
          if (tb.label == ta.label) {
            out.add_edge(from, ta.label, intern({ta.target, tb.target}));
          }
        }
      }
      for (auto const& tb : b.out(q)) {
        if (tb.label == kEpsilon) {
          out.add_edge(from, kEpsilon, intern({p, tb.target}));
        }
      }
    }
    return trim(out);
  }

  Nfa concatenation(Nfa const& a, Nfa const& b) {
    check_same_alphabet(a, b);
    Nfa   out(a);
    State ob = embed(out, b);
    for (auto f : a.finals()) {
      out.set_final(f, false);
      out.add_edge(f, kEpsilon, b.initial() + ob);
    }
    for (auto f : b.finals()) {
      out.set_final(f + ob);
    }
    return out;
  }

  Nfa star(Nfa const& a) {
    Nfa   out(a.alphabet(), 1);
    State oa = embed(out, a);
    out.set_final(0);
    out.add_edge(0, kEpsilon, a.initial() + oa);
    for (auto f : a.finals()) {
      out.add_edge(f + oa, kEpsilon, 0);
    }
    return out;
  }

  Nfa combine(Combine kind, Nfa const& a, Nfa const& b) {
    switch (kind) {
      case Combine::Union:
        return union_of(a, b);
      case Combine::Intersection:
        return intersection(a, b);
      case Combine::Concatenation:
        return concatenation(a, b);
      case Combine::Star:
        break;
    }
    throw InputError("star takes exactly one operand");
  }

  Nfa combine(Combine kind, Nfa const& a) {
    if (kind != Combine::Star) {
      throw InputError("union, intersection and concatenation take two "
                       "operands");
    }
    return star(a);
  }

  bool is_empty(Nfa const& a) {
    std::vector<char>  seen(a.size());
    std::vector<State> stack{a.initial()};
    seen[a.initial()] = 1;
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      if (a.is_final(s)) {
        return false;
      }
      for (auto const& t : a.out(s)) {
        if (!seen[t.target]) {
          seen[t.target] = 1;
          stack.push_back(t.target);
        }
      }
    }
    return true;
  }

  namespace {
    // Searches the product of two complete Dfas for a reachable pair on
    // which bad(final_a, final_b) holds.
    template <typename Pred>
    bool product_reaches(Dfa const& a, Dfa const& b, Pred bad) {
      using Pair = std::pair<State, State>;
      std::unordered_map<Pair, char, PairHash> seen;
      std::vector<Pair>                        stack{{a.initial(), b.initial()}};
      seen[stack.back()] = 1;
      while (!stack.empty()) {
        auto [p, q] = stack.back();
        stack.pop_back();
        if (bad(a.is_final(p), b.is_final(q))) {
          return true;
        }
        for (Symbol x = 0; x < a.alphabet().size(); ++x) {
          Pair nxt{a.next(p, x), b.next(q, x)};
          if (seen.emplace(nxt, 1).second) {
            stack.push_back(nxt);
          }
        }
      }
      return false;
    }
  }  // namespace

  bool equivalent(Nfa const& a, Nfa const& b) {
    check_same_alphabet(a, b);
    return !product_reaches(determinize(trim(a)),
                            determinize(trim(b)),
                            [](bool fa, bool fb) { return fa != fb; });
  }

  bool is_subset(Nfa const& a, Nfa const& b) {
    check_same_alphabet(a, b);
    return !product_reaches(determinize(trim(a)),
                            determinize(trim(b)),
                            [](bool fa, bool fb) { return fa && !fb; });
  }

  std::vector<Word> enumerate_up_to(Nfa const& a, std::size_t n) {
    Nfa const t   = trim(a);
    auto      clo = epsilon_closures(t);
    auto      accepting = [&](StateSet const& set) {
      return std::any_of(
          set.begin(), set.end(), [&](State s) { return t.is_final(s); });
    };

    std::vector<Word>                          result;
    std::vector<std::pair<Word, StateSet>> frontier{{{}, clo[t.initial()]}};
    for (std::size_t len = 0; len <= n && !frontier.empty(); ++len) {
      for (auto const& [w, set] : frontier) {
        if (accepting(set)) {
          result.push_back(w);
        }
      }
      if (len == n) {
        break;
      }
      std::vector<std::pair<Word, StateSet>> next;
      for (auto const& [w, set] : frontier) {
        for (Symbol x = 0; x < t.alphabet().size(); ++x) {
          auto s = close(step(t, set, x), clo);
          if (!s.empty()) {
            Word v = w;
            v.push_back(x);
            next.emplace_back(std::move(v), std::move(s));
          }
        }
      }
      frontier = std::move(next);
    }
    return result;
  }

  Nfa reverse(Nfa const& a) {
    Nfa   out(a.alphabet(), a.size() + 1);
    State init = static_cast<State>(a.size());
    out.set_initial(init);
    out.set_final(a.initial());
    for (auto const& e : a.edges()) {
      out.add_edge(e.target, e.label, e.source);
    }
    for (auto f : a.finals()) {
      out.add_edge(init, kEpsilon, f);
    }
    return out;
  }

  Nfa relabel(Nfa const&                                a,
              Alphabet const&                           target,
              std::map<std::string, std::string> const& mapping) {
    auto const&         src = a.alphabet();
    std::vector<Symbol> image(src.size());
    for (Symbol x = 0; x < src.size(); ++x) {
      auto it = mapping.find(src.name(x));
      if (it == mapping.end()) {
        throw InputError("relabel mapping has no image for '" + src.name(x)
                         + "'");
      }
      image[x] = target.at(it->second);
    }
    Nfa out(target, a.size());
    out.set_initial(a.initial());
    for (auto f : a.finals()) {
      out.set_final(f);
    }
    for (auto const& e : a.edges()) {
      out.add_edge(
          e.source, e.label == kEpsilon ? kEpsilon : image[e.label], e.target);
    }
    return out;
  }

  Nfa relabel(Nfa const&                                a,
              std::map<std::string, std::string> const& mapping) {
    return relabel(a, a.alphabet(), mapping);
  }

  Nfa trim(Nfa const& a) {
    std::size_t const           n = a.size();
    std::vector<char>           fwd(n), bwd(n);
    std::vector<std::vector<State>> preds(n);
    std::vector<State>          stack{a.initial()};
    fwd[a.initial()] = 1;
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (auto const& t : a.out(s)) {
        preds[t.target].push_back(s);
        if (!fwd[t.target]) {
          fwd[t.target] = 1;
          stack.push_back(t.target);
        }
      }
    }
    for (State s = 0; s < n; ++s) {
      if (fwd[s] && a.is_final(s)) {
        bwd[s] = 1;
        stack.push_back(s);
      }
    }
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (auto p : preds[s]) {
        if (!bwd[p]) {
          bwd[p] = 1;
          stack.push_back(p);
        }
      }
    }
    std::vector<State> renumber(n, kEpsilon);
    State              next = 0;
    for (State s = 0; s < n; ++s) {
      if ((fwd[s] && bwd[s]) || s == a.initial()) {
        renumber[s] = next++;
      }
    }
    Nfa out(a.alphabet(), next);
    out.set_initial(renumber[a.initial()]);
    for (State s = 0; s < n; ++s) {
      if (renumber[s] == kEpsilon) {
        continue;
      }
      out.set_final(renumber[s], a.is_final(s) && bwd[s]);
      for (auto const& t : a.out(s)) {
        if (renumber[t.target] != kEpsilon && bwd[t.target]) {
          out.add_edge(renumber[s], t.label, renumber[t.target]);
        }
      }
    }
    return out;
  }

  Nfa minimize(Nfa const& a) {
    Dfa const         d = determinize(trim(a));
    std::size_t const n = d.size();
    std::size_t const k = d.alphabet().size();

    // Moore refinement: split classes by (class, successor classes).
    std::vector<State> cls(n);
    for (State s = 0; s < n; ++s) {
      cls[s] = d.is_final(s) ? 1 : 0;
    }
    std::size_t num_classes = 0;
    while (true) {
      std::map<std::vector<State>, State> sig_index;
      std::vector<State>                  next_cls(n);
      for (State s = 0; s < n; ++s) {
        std::vector<State> sig{cls[s]};
        for (Symbol x = 0; x < k; ++x) {
          sig.push_back(cls[d.next(s, x)]);
        }
        auto [it, ins] = sig_index.emplace(std::move(sig),
                                           static_cast<State>(sig_index.size()));
        next_cls[s] = it->second;
      }
      bool stable = sig_index.size() == num_classes;
      num_classes = sig_index.size();
      cls         = std::move(next_cls);
      if (stable) {
        break;
      }
    }

    // Quotient, then keep live classes in breadth-first order.
    std::vector<State> rep(num_classes, kEpsilon);
    for (State s = 0; s < n; ++s) {
      if (rep[cls[s]] == kEpsilon) {
        rep[cls[s]] = s;
      }
    }
    std::vector<char> live(num_classes);
    for (bool grew = true; grew;) {
      grew = false;
      for (State c = 0; c < num_classes; ++c) {
        if (live[c]) {
          continue;
        }
        bool l = d.is_final(rep[c]);
        for (Symbol x = 0; x < k && !l; ++x) {
          l = live[cls[d.next(rep[c], x)]] != 0;
        }
        if (l) {
          live[c] = 1;
          grew    = true;
        }
      }
    }

    State const        start = cls[d.initial()];
    std::vector<State> number(num_classes, kEpsilon);
    std::vector<State> order{start};
    number[start] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (!live[order[i]]) {
        continue;
      }
      for (Symbol x = 0; x < k; ++x) {
        State c = cls[d.next(rep[order[i]], x)];
        if (live[c] && number[c] == kEpsilon) {
          number[c] = static_cast<State>(order.size());
          order.push_back(c);
        }
      }
    }
    Nfa out(d.alphabet(), order.size());
    out.set_initial(0);
    for (State i = 0; i < order.size(); ++i) {
      State c = order[i];
      if (!live[c]) {
        continue;
      }
      out.set_final(i, d.is_final(rep[c]));
      for (Symbol x = 0; x < k; ++x) {
        State t = cls[d.next(rep[c], x)];
        if (live[t]) {
          out.add_edge(i, x, number[t]);
        }
      }
    }
    return out;
  }

  bool is_finite(Nfa const& a) {
    Nfa const m = minimize(a);
    // minimal trimmed Dfa: the language is infinite iff there is a cycle
    std::vector<char> colour(m.size());
    std::vector<std::pair<State, std::size_t>> stack{{m.initial(), 0}};
    colour[m.initial()] = 1;
    while (!stack.empty()) {
      auto& [s, i] = stack.back();
      if (i == m.out(s).size()) {
        colour[s] = 2;
        stack.pop_back();
        continue;
      }
      State t = m.out(s)[i++].target;
      if (colour[t] == 1) {
        return false;
      }
      if (colour[t] == 0) {
        colour[t] = 1;
        stack.emplace_back(t, 0);
      }
    }
    return true;
  }

  Nfa empty_language(Alphabet const& alphabet) {
    return Nfa(alphabet, 1);
  }

  Nfa epsilon_language(Alphabet const& alphabet) {
    Nfa out(alphabet, 1);
    out.set_final(0);
    return out;
  }

  Nfa word_language(Alphabet const& alphabet, Word const& w) {
    Nfa out(alphabet, 2);
    out.set_final(1);
    out.add_path(0, w, 1);
    return out;
  }

  Nfa universal_language(Alphabet const& alphabet) {
    Nfa out(alphabet, 1);
    out.set_final(0);
    for (Symbol x = 0; x < alphabet.size(); ++x) {
      out.add_edge(0, x, 0);
    }
    return out;
  }

}  // namespace polymon
