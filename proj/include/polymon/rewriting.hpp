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

#ifndef POLYMON_REWRITING_HPP_
#define POLYMON_REWRITING_HPP_

#include <optional>
#include <vector>

#include "polymon/alphabet.hpp"
#include "polymon/nfa.hpp"
#include "polymon/polycyclic.hpp"

namespace polymon {

  //! A rule lhs -> rhs with |rhs| <= 1.
  struct MonadicRule {
    Word                  lhs;
    std::optional<Symbol> rhs;

    std::size_t rhs_length() const noexcept {
      return rhs ? 1 : 0;
    }
    bool operator==(MonadicRule const&) const = default;
  };

  class MonadicSystem {
   public:
    //! Throws InputError on empty left-hand sides or letters outside the
    //! alphabet.
    MonadicSystem(Alphabet alphabet, std::vector<MonadicRule> rules);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<MonadicRule> const& rules() const noexcept {
      return _rules;
    }
    bool length_reducing() const noexcept;

   private:
    Alphabet                 _alphabet;
    std::vector<MonadicRule> _rules;
  };

  //! The seven rule families presenting P0(X) over its generators:
  //! p<x>q<x> -> eps, p<x>q<y> -> z (x != y), z q<x> -> z, p<x> z -> z,
  //! z p<x> -> z, q<x> z -> z, z z -> z.
  MonadicSystem polycyclic_system(GeneratorAlphabet const& gens);
  MonadicSystem polycyclic_system(StackAlphabet const& stack);

  //! Rewrites w to an irreducible descendant, always contracting the
  //! leftmost redex (shortest left-hand side first on ties). Throws
  //! InputError unless the system is length-reducing.
  Word reduce_word(Word const& w, MonadicSystem const& sys);

  //! An automaton for the set of all descendants of L(a), built by
  //! saturation: whenever some lhs labels a path s ~> t, an edge s -rhs-> t
  //! is added, until nothing changes.
  Nfa descendants_closure(Nfa const& a, MonadicSystem const& sys);

}  // namespace polymon

#endif  // POLYMON_REWRITING_HPP_
