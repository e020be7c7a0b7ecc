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
//
// Finite automata over arbitrary finite alphabets, together with the
// rational operations and exact decision procedures used by the rest of
// the library. Every operation is a pure function of its arguments.

#ifndef POLYMON_NFA_HPP_
#define POLYMON_NFA_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "polymon/alphabet.hpp"

namespace polymon {

  //! Nondeterministic automaton with a single initial state and optional
  //! epsilon edges (label kEpsilon). States are 0 .. size() - 1.
  class Nfa {
   public:
    struct Transition {
      Symbol label;
      State  target;
      auto   operator<=>(Transition const&) const = default;
    };

    struct Edge {
      State  source;
      Symbol label;
      State  target;
      auto   operator<=>(Edge const&) const = default;
    };

    explicit Nfa(Alphabet alphabet, std::size_t states = 1);

    State add_state();
    void  set_initial(State s);
    void  set_final(State s, bool value = true);
    //! Adds source -label-> target unless already present. label may be
    //! kEpsilon.
    void add_edge(State source, Symbol label, State target);
    //! Adds a chain of single-letter edges spelling w, creating fresh
    //! intermediate states; the empty word becomes one epsilon edge.
    void add_path(State source, Word const& w, State target);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::size_t size() const noexcept {
      return _out.size();
    }
    State initial() const noexcept {
      return _initial;
    }
    bool is_final(State s) const {
      return _final.at(s) != 0;
    }
    std::vector<State>          finals() const;
    std::span<Transition const> out(State s) const {
      return _out.at(s);
    }
    //! All edges, sorted.
    std::vector<Edge> edges() const;
    std::size_t       num_edges() const noexcept;

   private:
    void check_state(State s) const;

    Alphabet                             _alphabet;
    State                                _initial = 0;
    std::vector<char>                    _final;
    std::vector<std::vector<Transition>> _out;
  };

  //! Complete deterministic automaton.
  class Dfa {
   public:
    Dfa(Alphabet alphabet, std::size_t states);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::size_t size() const noexcept {
      return _final.size();
    }
    State initial() const noexcept {
      return _initial;
    }
    bool is_final(State s) const {
      return _final.at(s) != 0;
    }
    State next(State s, Symbol a) const {
      return _table[s * _alphabet.size() + a];
    }
    bool accepts(Word const& w) const;

    void set_initial(State s) {
      _initial = s;
    }
    void set_final(State s, bool value = true) {
      _final.at(s) = value;
    }
    void set_next(State s, Symbol a, State t) {
      _table.at(s * _alphabet.size() + a) = t;
    }

    //! The same automaton with all finals flipped.
    Dfa complemented() const;
    Nfa to_nfa() const;

   private:
    Alphabet           _alphabet;
    State              _initial = 0;
    std::vector<char>  _final;
    std::vector<State> _table;
  };

  inline constexpr std::size_t kDefaultDfaStateCap = 1'000'000;

  //! Process-wide cap on subset-construction states used whenever no
  //! explicit cap is passed.
  std::size_t dfa_state_cap() noexcept;
  void        set_dfa_state_cap(std::size_t cap) noexcept;

  //! Throws InputError if w uses a letter outside a.alphabet().
  bool nfa_accepts(Nfa const& a, Word const& w);

  //! Subset construction; throws ResourceError once more than cap
  //! subset-states would be needed.
  Dfa determinize(Nfa const& a, std::size_t cap);
  Dfa determinize(Nfa const& a);

  Nfa complement_regular(Nfa const& a);

  enum class Combine { Union, Intersection, Concatenation, Star };

  Nfa combine(Combine kind, Nfa const& a, Nfa const& b);
  Nfa combine(Combine kind, Nfa const& a);

  Nfa union_of(Nfa const& a, Nfa const& b);
  Nfa intersection(Nfa const& a, Nfa const& b);
  Nfa concatenation(Nfa const& a, Nfa const& b);
  Nfa star(Nfa const& a);

  bool is_empty(Nfa const& a);
  //! L(a) == L(b).
  bool equivalent(Nfa const& a, Nfa const& b);
  //! L(a) is a subset of L(b).
  bool is_subset(Nfa const& a, Nfa const& b);

  //! Accepted words of length at most n, ordered by length and then
  //! lexicographically in alphabet declaration order.
  std::vector<Word> enumerate_up_to(Nfa const& a, std::size_t n);

  Nfa reverse(Nfa const& a);
  //! Renames letters through mapping (source name -> target name). The
  //! mapping must cover every letter of a.alphabet().
  Nfa relabel(Nfa const&                                a,
              Alphabet const&                           target,
              std::map<std::string, std::string> const& mapping);
  Nfa relabel(Nfa const&                                a,
              std::map<std::string, std::string> const& mapping);

  //! Keeps only states that are reachable and co-reachable (the initial
  //! state is always kept). State order is preserved.
  Nfa trim(Nfa const& a);
  //! The trimmed minimal deterministic automaton with states numbered in
  //! breadth-first order from the initial state. Equal languages give
  //! identical results.
  Nfa minimize(Nfa const& a);

  //! True iff L(a) is finite.
  bool is_finite(Nfa const& a);

  Nfa empty_language(Alphabet const& alphabet);
  Nfa epsilon_language(Alphabet const& alphabet);
  Nfa word_language(Alphabet const& alphabet, Word const& w);
  Nfa universal_language(Alphabet const& alphabet);

}  // namespace polymon

#endif  // POLYMON_NFA_HPP_
