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

#include "polymon/polycyclic.hpp"

#include <algorithm>

#include "polymon/error.hpp"

namespace polymon {

  namespace {
    std::vector<std::string> generator_names(StackAlphabet const& x) {
      std::vector<std::string> names;
      for (auto const& n : x.names()) {
        names.push_back("p" + n);
      }
      for (auto const& n : x.names()) {
        names.push_back("q" + n);
      }
      names.emplace_back("z");
      return names;
    }

    bool ends_with(Word const& w, Word const& suffix) {
      return suffix.size() <= w.size()
             && std::equal(suffix.begin(), suffix.end(), w.end() - suffix.size());
    }
  }  // namespace

  StackAlphabet::StackAlphabet(std::vector<std::string> letters)
      : Alphabet(std::move(letters)) {
    if (empty()) {
      throw InputError("the stack alphabet must be non-empty");
    }
  }

  GeneratorAlphabet::GeneratorAlphabet(StackAlphabet stack)
      : Alphabet(generator_names(stack)), _stack(std::move(stack)) {}

  Symbol GeneratorAlphabet::swapped(Symbol g) const noexcept {
    switch (kind(g)) {
      case Kind::Push:
        return pop(letter(g));
      case Kind::Pop:
        return push(letter(g));
      case Kind::Zero:
        break;
    }
    return g;
  }

  GeneratorAlphabet GeneratorAlphabet::infer(Alphabet const& names) {
    std::vector<std::string> letters;
    for (auto const& n : names.names()) {
      if (n == "z") {
        continue;
      }
      if (n.size() < 2 || (n[0] != 'p' && n[0] != 'q')) {
        throw InputError("'" + n + "' is not a generator name (expected "
                         "p<x>, q<x> or z)");
      }
      auto x = n.substr(1);
      if (std::find(letters.begin(), letters.end(), x) == letters.end()) {
        letters.push_back(std::move(x));
      }
    }
    if (letters.empty()) {
      throw InputError("cannot infer a stack alphabet from a generator "
                       "alphabet without p<x> or q<x> letters");
    }
    return GeneratorAlphabet(StackAlphabet(std::move(letters)));
  }

  std::map<std::string, std::string> GeneratorAlphabet::swap_mapping() const {
    std::map<std::string, std::string> m;
    for (Symbol g = 0; g < size(); ++g) {
      m[name(g)] = name(swapped(g));
    }
    return m;
  }

  Element multiply(Element const& a, Element const& b) {
    if (a.is_zero() || b.is_zero()) {
      return Element::zero();
    }
    // a: w.s1 -> w.t1, b: w.s2 -> w.t2
    auto const& s1 = a.pop();
    auto const& t1 = a.push();
    auto const& s2 = b.pop();
    auto const& t2 = b.push();
    if (ends_with(t1, s2)) {
      Word push(t1.begin(), t1.end() - s2.size());
      push.insert(push.end(), t2.begin(), t2.end());
      return Element(s1, std::move(push));
    }
    if (ends_with(s2, t1)) {
      Word pop(s2.begin(), s2.end() - t1.size());
      pop.insert(pop.end(), s1.begin(), s1.end());
      return Element(std::move(pop), t2);
    }
    return Element::zero();
  }

  Element eval_sigma(GeneratorAlphabet const& gens, Word const& w) {
    gens.check_word(w);
    Word pop_reversed;
    Word push;
    for (auto g : w) {
      switch (gens.kind(g)) {
        case GeneratorAlphabet::Kind::Push:
          push.push_back(gens.letter(g));
          break;
        case GeneratorAlphabet::Kind::Pop:
          if (push.empty()) {
            pop_reversed.push_back(gens.letter(g));
          } else if (push.back() == gens.letter(g)) {
            push.pop_back();
          } else {
            return Element::zero();
          }
          break;
        case GeneratorAlphabet::Kind::Zero:
          return Element::zero();
      }
    }
    std::reverse(pop_reversed.begin(), pop_reversed.end());
    return Element(std::move(pop_reversed), std::move(push));
  }

  Word canonical_word(GeneratorAlphabet const& gens, Element const& e) {
    if (e.is_zero()) {
      return Word{gens.zero()};
    }
    Word w;
    for (auto it = e.pop().rbegin(); it != e.pop().rend(); ++it) {
      w.push_back(gens.pop(*it));
    }
    for (auto x : e.push()) {
      w.push_back(gens.push(x));
    }
    return w;
  }

  std::optional<Word> apply_to_stack(Element const& e, Word const& s) {
    if (e.is_zero() || !ends_with(s, e.pop())) {
      return std::nullopt;
    }
    Word out(s.begin(), s.end() - e.pop().size());
    out.insert(out.end(), e.push().begin(), e.push().end());
    return out;
  }

  bool is_pop_word(GeneratorAlphabet const& gens, Word const& w) {
    return std::all_of(w.begin(), w.end(), [&](Symbol g) {
      return gens.kind(g) == GeneratorAlphabet::Kind::Pop;
    });
  }

  bool is_push_word(GeneratorAlphabet const& gens, Word const& w) {
    return std::all_of(w.begin(), w.end(), [&](Symbol g) {
      return gens.kind(g) == GeneratorAlphabet::Kind::Push;
    });
  }

  Word formal_inverse(GeneratorAlphabet const& gens, Word const& w) {
    gens.check_word(w);
    if (!is_pop_word(gens, w) && !is_push_word(gens, w)) {
      throw InputError("formal inverse needs an all-push or all-pop word, got '"
                       + gens.format_word(w) + "'");
    }
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(gens.swapped(*it));
    }
    return out;
  }

  std::string to_string(GeneratorAlphabet const& gens, Element const& e) {
    if (e.is_zero()) {
      return "zero";
    }
    auto const& x = gens.stack();
    return "(pop=" + x.format_word(e.pop()) + ", push="
           + x.format_word(e.push()) + ")";
  }

}  // namespace polymon
