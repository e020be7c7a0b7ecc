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
// The ".vaut" text format for valence automata with rational targets:
//
//   stack <letter> ...                    # X
//   input <letter> ...                    # the input alphabet
//   states <n>
//   initial <s>
//   final <s> ...
//   edge <src> <dst> [<generator word>] <input word>
//   target inline <generator word>        # repeatable; words are united
//   target file <path.aut>                # relative to the .vaut file
//   target begin                          # embedded .aut block
//   ...
//   target end
//
// Generator and input words are whitespace-separated names, or "eps".
// Without a target declaration the target is {1}.
//
// Products of two valence automata (concat) use a sibling format with
// "stack-left", "stack-right" and edges "edge <src> <dst> [<left>]
// [<right>] <input word>"; the target is always (1, 1).

#ifndef POLYMON_VAUT_FORMAT_HPP_
#define POLYMON_VAUT_FORMAT_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "polymon/valence.hpp"

namespace polymon {

  TargetedAutomaton parse_vaut(std::string_view             text,
                               std::filesystem::path const& base_dir = ".");
  TargetedAutomaton read_vaut_file(std::filesystem::path const& path);
  //! Sorted, byte-stable rendering. Finite non-empty targets are written
  //! inline, other targets as an embedded block.
  std::string format_vaut(TargetedAutomaton const& v);

  ProductValenceAutomaton parse_product(std::string_view text);
  std::string             format_product(ProductValenceAutomaton const& pv);

}  // namespace polymon

#endif  // POLYMON_VAUT_FORMAT_HPP_
