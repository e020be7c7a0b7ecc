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
// Valence automata over P0(X): finite automata whose edges carry a
// register word over the generators of P0(X) and an output word over an
// input alphabet. A word is accepted when some initial-to-final path
// spells it and the product of the register words lies in a rational
// target set.

#ifndef POLYMON_VALENCE_HPP_
#define POLYMON_VALENCE_HPP_

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "polymon/error.hpp"
#include "polymon/nfa.hpp"
#include "polymon/polycyclic.hpp"
#include "polymon/ratsub.hpp"

namespace polymon {

  //! An automaton over the direct product of two free monoids: the
  //! register tape (over Registers) and the output tape (over an input
  //! alphabet). Output words longer than one letter are split into chains
  //! whose later edges carry the empty register word, so every stored edge
  //! outputs at most one letter.
  template <typename Registers>
  class TapeAutomaton {
   public:
    struct Edge {
      State                 source;
      Word                  reg;
      std::optional<Symbol> output;
      State                 target;

      auto operator<=>(Edge const&) const = default;
    };

    TapeAutomaton(Registers registers, Alphabet input, std::size_t states = 1)
        : _registers(std::move(registers)),
          _input(std::move(input)),
          _final(states) {
      if (states == 0) {
        throw InputError("an automaton needs at least one state");
      }
    }

    State add_state() {
      _final.push_back(0);
      return static_cast<State>(_final.size() - 1);
    }

    void set_initial(State s) {
      check_state(s);
      _initial = s;
    }

    void set_final(State s, bool value = true) {
      check_state(s);
      _final[s] = value;
    }

    void clear_finals() {
      std::fill(_final.begin(), _final.end(), 0);
    }

    void add_edge(State source, Word reg, Word const& output, State target) {
      check_state(source);
      check_state(target);
      _registers.check_word(reg);
      _input.check_word(output);
      if (output.size() <= 1) {
        insert({source,
                std::move(reg),
                output.empty() ? std::nullopt : std::optional(output[0]),
                target});
        return;
      }
      State cur = source;
      for (std::size_t i = 0; i < output.size(); ++i) {
        State nxt = i + 1 == output.size() ? target : add_state();
        insert({cur, i == 0 ? std::move(reg) : Word{}, output[i], nxt});
        cur = nxt;
      }
    }

    Registers const& registers() const noexcept {
      return _registers;
    }
    Alphabet const& input() const noexcept {
      return _input;
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
    std::vector<State> finals() const {
      std::vector<State> out;
      for (State s = 0; s < size(); ++s) {
        if (_final[s]) {
          out.push_back(s);
        }
      }
      return out;
    }
    //! Edges in insertion order.
    std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }
    std::vector<Edge> sorted_edges() const {
      auto out = _edges;
      std::sort(out.begin(), out.end(), [](Edge const& a, Edge const& b) {
        return std::tie(a.source, a.target, a.reg, a.output)
               < std::tie(b.source, b.target, b.reg, b.output);
      });
      return out;
    }

   private:
    void check_state(State s) const {
      if (s >= size()) {
        throw InputError("state " + std::to_string(s) + " out of range");
      }
    }

    void insert(Edge e) {
      if (std::find(_edges.begin(), _edges.end(), e) == _edges.end()) {
        _edges.push_back(std::move(e));
      }
    }

    Registers         _registers;
    Alphabet          _input;
    State             _initial = 0;
    std::vector<char> _final;
    std::vector<Edge> _edges;
  };

  //! Register tape uninterpreted: a rational transducer.
  using Transducer = TapeAutomaton<Alphabet>;
  //! Register tape evaluated in P0(X).
  using ValenceAutomaton = TapeAutomaton<GeneratorAlphabet>;
  using TargetSet        = RationalSubset;

  //! A morphism from a free monoid into P0(X), given on letters.
  class GeneratorMorphism {
   public:
    //! images[i] is the generator word for source letter i.
    GeneratorMorphism(Alphabet source,
                      GeneratorAlphabet target,
                      std::vector<Word> images);
    //! Images given by name; throws InputError unless every source letter
    //! has one.
    GeneratorMorphism(Alphabet                                  source,
                      GeneratorAlphabet                         target,
                      std::map<std::string, std::string> const& images);

    static GeneratorMorphism identity(GeneratorAlphabet const& gens);

    Alphabet const& source() const noexcept {
      return _source;
    }
    GeneratorAlphabet const& target() const noexcept {
      return _target;
    }
    Word apply(Word const& w) const;

   private:
    Alphabet          _source;
    GeneratorAlphabet _target;
    std::vector<Word> _images;
  };

  //! An automaton with one register per side, both tracked independently;
  //! acceptance requires both registers to return to the identity.
  class ProductValenceAutomaton {
   public:
    struct Edge {
      State                 source;
      Word                  left;
      Word                  right;
      std::optional<Symbol> output;
      State                 target;

      auto operator<=>(Edge const&) const = default;
    };

    ProductValenceAutomaton(GeneratorAlphabet left,
                            GeneratorAlphabet right,
                            Alphabet          input,
                            std::size_t       states);

    void set_initial(State s);
    void set_final(State s, bool value = true);
    void add_edge(Edge e);

    GeneratorAlphabet const& left() const noexcept {
      return _left;
    }
    GeneratorAlphabet const& right() const noexcept {
      return _right;
    }
    Alphabet const& input() const noexcept {
      return _input;
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
    std::vector<State>       finals() const;
    std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }

   private:
    GeneratorAlphabet _left;
    GeneratorAlphabet _right;
    Alphabet          _input;
    State             _initial = 0;
    std::vector<char> _final;
    std::vector<Edge> _edges;
  };

  //! An automaton paired with its target set.
  struct TargetedAutomaton {
    ValenceAutomaton automaton;
    TargetSet        target;
  };

  //! One concatenation prefix . suffix of a decomposition; both sides use
  //! the target {1}. part indexes the split of the target and core_state
  //! the state at which the two sides meet: a state of the original
  //! automaton, or (from size() on) a point inside a register word.
  struct DecompositionPiece {
    std::size_t       part;
    State             core_state;
    TargetedAutomaton prefix;
    TargetedAutomaton suffix;
  };

  //! The accepted language as (zero_part, if any) united with all
  //! concatenations L(prefix) L(suffix).
  struct PolyDecomposition {
    std::optional<TargetedAutomaton> zero_part;
    std::vector<DecompositionPiece>  pieces;
  };

  enum class Verdict { Yes, No, Unknown };

  //! Projection onto the output tape, registers ignored.
  Nfa output_language(ValenceAutomaton const& v);

  //! Register values of the accepting paths that output exactly w.
  RationalSubset reachable_register_language(ValenceAutomaton const& v,
                                             Word const&             w);
  //! Register values of all accepting paths, outputs ignored.
  RationalSubset register_language(ValenceAutomaton const& v);

  bool accepts(ValenceAutomaton const& v, TargetSet const& t, Word const& w);
  bool language_empty(ValenceAutomaton const& v, TargetSet const& t);
  //! Accepted words of length at most n in shortlex order.
  std::vector<Word> enumerate_language(ValenceAutomaton const& v,
                                       TargetSet const&        t,
                                       std::size_t             n);

  ValenceAutomaton from_transducer(Transducer const&        tr,
                                   GeneratorMorphism const& m);
  //! Uses the generators themselves as the transducer's register alphabet
  //! and returns the identity morphism alongside.
  std::pair<Transducer, GeneratorMorphism>
  to_transducer(ValenceAutomaton const& v);

  //! Drops every edge whose register word contains z. Requires |X| = 1;
  //! throws UnsupportedError otherwise.
  ValenceAutomaton strip_zero_edges(ValenceAutomaton const& v);
  //! Automaton over v's input accepting the words read along accepting
  //! paths whose register value is zero. Requires |X| = 1.
  Nfa zero_component_automaton(ValenceAutomaton const& v);

  //! For u with sigma(u) = sigma(q p), the leftmost split u = u1 u2 with
  //! sigma(q' u1) = 1 = sigma(u2 p'); nullopt when sigma(u) != sigma(q p).
  //! q must be all pops and p all pushes.
  std::optional<std::pair<Word, Word>> factorise(GeneratorAlphabet const& gens,
                                                 Word const&              u,
                                                 Word const&              q,
                                                 Word const&              p);

  PolyDecomposition decompose(ValenceAutomaton const& v, TargetSet const& t);
  //! Words of length at most n in the language a decomposition denotes.
  std::vector<Word> enumerate_language(PolyDecomposition const& d,
                                       std::size_t              n);

  //! Automaton for L(v1) L(v2) (both with target {1}) keeping each side's
  //! register separate.
  ProductValenceAutomaton concat_product(ValenceAutomaton const& v1,
                                         ValenceAutomaton const& v2);
  //! Breadth-first search over (state, position, left, right)
  //! configurations. No when the reachable configurations are exhausted,
  //! Unknown once more than fuel configurations would be expanded.
  Verdict product_accepts_bounded(ProductValenceAutomaton const& pv,
                                  Word const&                    w,
                                  std::size_t                    fuel);

  //! The 4-state bicyclic automaton with target {qx px} accepting
  //! { a^i b^i a^j b^j : i, j >= 0 }.
  TargetedAutomaton figure1_example();
  //! The 2-state bicyclic automaton accepting { a^n b^n } with target {1}.
  TargetedAutomaton anbn_example();

  //! Length first, then lexicographic by symbol index.
  bool shortlex_less(Word const& a, Word const& b);

}  // namespace polymon

#endif  // POLYMON_VALENCE_HPP_
