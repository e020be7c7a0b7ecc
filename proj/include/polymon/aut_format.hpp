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
// The ".aut" text format, one declaration per line, '#' to end of line is
// a comment:
//
//   alphabet <name> <name> ...
//   states <n>
//   initial <state>
//   final <state> [<state> ...]
//   edge <src> <dst> <symbol-name | eps>
//
// alphabet and states must precede the other declarations.

#ifndef POLYMON_AUT_FORMAT_HPP_
#define POLYMON_AUT_FORMAT_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polymon/nfa.hpp"
#include "polymon/ratsub.hpp"

namespace polymon {

  //! Strict parser; errors are InputErrors prefixed with "line N:".
  Nfa parse_aut(std::string_view text);
  Nfa read_aut_file(std::filesystem::path const& path);

  //! Sorted, byte-stable rendering.
  std::string format_aut(Nfa const& a);

  //! The minimal canonical-word automaton of r in .aut form.
  std::string print_canonical(RationalSubset const& r);

  //! Maps an automaton whose letters are generator names onto gens (by
  //! name). Throws InputError on letters gens does not have.
  Nfa embed_generators(Nfa const& a, GeneratorAlphabet const& gens);

  //! Normalizes an automaton over generator names. The stack alphabet is
  //! inferred from the letter names unless gens is given.
  RationalSubset subset_from_automaton(
      Nfa const&                              a,
      std::optional<GeneratorAlphabet> const& gens = std::nullopt);

  //! Splits text into lines, strips '#' comments and surrounding blanks,
  //! and tokenizes; empty lines are kept as empty token lists so that line
  //! numbers stay aligned.
  std::vector<std::vector<std::string>> tokenize_lines(std::string_view text);

  //! Reads a whole file; throws InputError if it cannot be opened.
  std::string read_text_file(std::filesystem::path const& path);

}  // namespace polymon

#endif  // POLYMON_AUT_FORMAT_HPP_
