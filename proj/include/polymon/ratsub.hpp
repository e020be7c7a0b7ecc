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
// Rational subsets of P0(X), stored as regular languages of canonical
// words. Every element of P0(X) has exactly one canonical word (see
// canonical_word), so set operations on subsets are plain language
// operations on their canonical automata, and equality of subsets is
// equivalence of automata.

#ifndef POLYMON_RATSUB_HPP_
#define POLYMON_RATSUB_HPP_

#include <optional>
#include <vector>

#include "polymon/nfa.hpp"
#include "polymon/polycyclic.hpp"

namespace polymon {

  class RationalSubset {
   public:
    GeneratorAlphabet const& generators() const noexcept {
      return _gens;
    }
    StackAlphabet const& stack() const noexcept {
      return _gens.stack();
    }
    //! Automaton over the generators accepting exactly the canonical words
    //! of the elements of this subset.
    Nfa const& canon() const noexcept {
      return _canon;
    }

    //! Wraps an automaton whose language is already a set of canonical
    //! words. Throws InputError if it is not.
    static RationalSubset from_canonical(GeneratorAlphabet gens, Nfa canon);

   private:
    RationalSubset(GeneratorAlphabet gens, Nfa canon)
        : _gens(std::move(gens)), _canon(std::move(canon)) {}

    friend RationalSubset normalize(GeneratorAlphabet const&, Nfa const&);
    friend RationalSubset trusted_subset(GeneratorAlphabet const&, Nfa);

    GeneratorAlphabet _gens;
    Nfa               _canon;
  };

  //! The 4-state automaton for Q_X* P_X* + {z}.
  Nfa canonical_language(GeneratorAlphabet const& gens);

  //! The subset L(g) evaluated in P0(X). g must be over gens.
  RationalSubset normalize(GeneratorAlphabet const& gens, Nfa const& g);

  RationalSubset empty_subset(GeneratorAlphabet const& gens);
  //! All of P0(X).
  RationalSubset full_subset(GeneratorAlphabet const& gens);
  //! The image of a finite set of generator words.
  RationalSubset finite_subset(GeneratorAlphabet const&  gens,
                               std::vector<Word> const& words);

  //! Whether the element represented by w lies in r.
  bool member(Word const& w, RationalSubset const& r);

  //! P0(X) minus r.
  RationalSubset complement(RationalSubset const& r);
  RationalSubset intersect(RationalSubset const& a, RationalSubset const& b);
  RationalSubset union_of(RationalSubset const& a, RationalSubset const& b);
  bool subset_equal(RationalSubset const& a, RationalSubset const& b);
  //! a is contained in b.
  bool is_subset(RationalSubset const& a, RationalSubset const& b);
  bool is_empty(RationalSubset const& r);

  bool contains_zero(RationalSubset const& r);
  //! r minus {0}.
  RationalSubset without_zero(RationalSubset const& r);

  //! A shortest canonical word of r, if r is non-empty.
  std::optional<Word> witness(RationalSubset const& r);
  //! The canonical words of r when r is finite.
  std::optional<std::vector<Word>> finite_members(RationalSubset const& r);

  //! One product Q_i P_i of a split: pops is an automaton whose language
  //! lies in Q_X*, pushes one whose language lies in P_X*. Both are over
  //! the full generator alphabet.
  struct SplitPart {
    Nfa pops;
    Nfa pushes;
  };

  struct SplitDecomposition {
    bool                   contains_zero = false;
    std::vector<SplitPart> parts;
  };

  //! Writes r as {0} (when contains_zero) together with the union of the
  //! images of the products pops . pushes. Parts with an empty side are
  //! dropped.
  SplitDecomposition split(RationalSubset const& r);

  //! Reassembles a split into the subset it denotes.
  RationalSubset assemble(GeneratorAlphabet const&  gens,
                          SplitDecomposition const& d);

}  // namespace polymon

#endif  // POLYMON_RATSUB_HPP_
