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

#ifndef POLYMON_CLI_HPP_
#define POLYMON_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace polymon::cli {

  //! Exit statuses of run().
  inline constexpr int kYes       = 0;  // also plain success
  inline constexpr int kNo        = 1;
  inline constexpr int kBadInput  = 2;  // usage, unreadable file, parse error
  inline constexpr int kResources = 3;  // determinization cap, search fuel

  //! Runs one command. args excludes the program name. Results go to out,
  //! diagnostics to err.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace polymon::cli

#endif  // POLYMON_CLI_HPP_
