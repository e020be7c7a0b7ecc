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

#ifndef POLYMON_ALPHABET_HPP_
#define POLYMON_ALPHABET_HPP_

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace polymon {

  //! Index of a letter within its Alphabet (declaration order).
  using Symbol = std::uint32_t;
  //! Index of an automaton state.
  using State = std::uint32_t;
  //! A finite word; letters are indices into some Alphabet.
  using Word = std::vector<Symbol>;

  //! Label used for empty transitions.
  inline constexpr Symbol kEpsilon = static_cast<Symbol>(-1);

  //! The token that denotes the empty word in every text syntax.
  inline constexpr std::string_view kEpsToken = "eps";

  //! An ordered finite set of named symbols.
  //!
  //! Names are non-empty, whitespace-free, unique, and never equal to
  //! "eps". The name table is shared between copies, so an Alphabet is
  //! cheap to pass by value.
  class Alphabet {
   public:
    Alphabet();
    explicit Alphabet(std::vector<std::string> names);
    Alphabet(std::initializer_list<std::string> names)
        : Alphabet(std::vector<std::string>(names)) {}

    std::size_t size() const noexcept {
      return _impl->names.size();
    }
    bool empty() const noexcept {
      return _impl->names.empty();
    }
    std::string const& name(Symbol s) const;
    std::vector<std::string> const& names() const noexcept {
      return _impl->names;
    }
    std::optional<Symbol> find(std::string_view name) const;
    //! Throws InputError when the name is not a letter of this alphabet.
    Symbol at(std::string_view name) const;
    bool contains(Symbol s) const noexcept {
      return s < size();
    }

    //! Parses whitespace-separated letter names; "eps" tokens contribute
    //! nothing. A token that is not a name is split greedily into the
    //! longest matching names, so "aabb" reads as a a b b over {a, b}.
    Word parse_word(std::string_view text) const;
    //! Renders a word as space-separated names, or "eps" when empty.
    std::string format_word(Word const& w) const;
    //! As format_word, but letters are juxtaposed when every name is a
    //! single character.
    std::string format_word_compact(Word const& w) const;

    //! Throws InputError if some letter of w is out of range.
    void check_word(Word const& w) const;

    friend bool operator==(Alphabet const& a, Alphabet const& b) noexcept;

   private:
    struct Impl {
      std::vector<std::string>                     names;
      std::unordered_map<std::string, Symbol> index;
    };
    std::shared_ptr<Impl const> _impl;
  };

  //! True iff name is a legal letter name.
  bool valid_symbol_name(std::string_view name) noexcept;

}  // namespace polymon

#endif  // POLYMON_ALPHABET_HPP_
