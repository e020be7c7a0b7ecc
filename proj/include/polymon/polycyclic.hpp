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
// The polycyclic monoid P(X) with a zero adjoined when needed, written
// P0(X) below. Elements act on stacks (words over X, top of stack on the
// right): p<x> pushes x, q<x> pops x, and z is the empty map.

#ifndef POLYMON_POLYCYCLIC_HPP_
#define POLYMON_POLYCYCLIC_HPP_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polymon/alphabet.hpp"

namespace polymon {

  //! The set X of stack letters. Non-empty.
  class StackAlphabet : public Alphabet {
   public:
    explicit StackAlphabet(std::vector<std::string> letters);
    StackAlphabet(std::initializer_list<std::string> letters)
        : StackAlphabet(std::vector<std::string>(letters)) {}
  };

  //! The generators p<x>, q<x> (x in X) and z, in that order: symbol i is
  //! p of letter i, symbol |X| + i is q of letter i, symbol 2|X| is z.
  class GeneratorAlphabet : public Alphabet {
   public:
    enum class Kind { Push, Pop, Zero };

    explicit GeneratorAlphabet(StackAlphabet stack);

    StackAlphabet const& stack() const noexcept {
      return _stack;
    }
    std::size_t rank() const noexcept {
      return _stack.size();
    }

    Symbol push(Symbol letter) const noexcept {
      return letter;
    }
    Symbol pop(Symbol letter) const noexcept {
      return static_cast<Symbol>(rank() + letter);
    }
    Symbol zero() const noexcept {
      return static_cast<Symbol>(2 * rank());
    }
    Kind kind(Symbol g) const noexcept {
      return g < rank() ? Kind::Push
                        : (g < 2 * rank() ? Kind::Pop : Kind::Zero);
    }
    //! The stack letter moved by a push or pop generator.
    Symbol letter(Symbol g) const noexcept {
      return g < rank() ? g : static_cast<Symbol>(g - rank());
    }
    //! Swaps p<x> and q<x>; z is fixed.
    Symbol swapped(Symbol g) const noexcept;

    //! Reads an alphabet whose names are all of the form p<x>, q<x> or z
    //! and recovers X in order of first appearance.
    static GeneratorAlphabet infer(Alphabet const& names);

    //! Renaming (p<x> -> q<x>, q<x> -> p<x>, z -> z) in the form relabel()
    //! expects.
    std::map<std::string, std::string> swap_mapping() const;

   private:
    StackAlphabet _stack;
  };

  //! An element of P0(X): either zero, or the partial bijection
  //! w.pop -> w.push on stacks. Both words are over X with the stack top on
  //! the right. The representation is unique, so == is element equality.
  class Element {
   public:
    //! The identity.
    Element() = default;
    Element(Word pop, Word push) : _pop(std::move(pop)), _push(std::move(push)) {}

    static Element zero() {
      Element e;
      e._zero = true;
      return e;
    }
    static Element identity() {
      return Element();
    }

    bool is_zero() const noexcept {
      return _zero;
    }
    bool is_identity() const noexcept {
      return !_zero && _pop.empty() && _push.empty();
    }
    Word const& pop() const noexcept {
      return _pop;
    }
    Word const& push() const noexcept {
      return _push;
    }

    auto operator<=>(Element const&) const = default;

   private:
    bool _zero = false;
    Word _pop;
    Word _push;
  };

  //! Composition "first a, then b".
  Element multiply(Element const& a, Element const& b);

  //! The image of a generator word under the evaluation morphism.
  Element eval_sigma(GeneratorAlphabet const& gens, Word const& w);

  //! The unique representative of e in Q_X* P_X* + {z}: pops of the stack
  //! suffix from the top down, then pushes.
  Word canonical_word(GeneratorAlphabet const& gens, Element const& e);

  //! Applies e to the stack s; nullopt where e is undefined.
  std::optional<Word> apply_to_stack(Element const& e, Word const& s);

  //! For w all-push or all-pop: reverse the letters and swap p and q.
  //! Throws InputError on mixed words or words containing z.
  Word formal_inverse(GeneratorAlphabet const& gens, Word const& w);

  //! True iff every letter of w is a pop (resp. push) generator.
  bool is_pop_word(GeneratorAlphabet const& gens, Word const& w);
  bool is_push_word(GeneratorAlphabet const& gens, Word const& w);

  //! Human-readable "zero" or "(pop=..., push=...)".
  std::string to_string(GeneratorAlphabet const& gens, Element const& e);

}  // namespace polymon

#endif  // POLYMON_POLYCYCLIC_HPP_
