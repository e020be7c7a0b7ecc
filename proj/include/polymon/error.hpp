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

#ifndef POLYMON_ERROR_HPP_
#define POLYMON_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace polymon {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed input: unknown symbols, bad files, mismatched alphabets.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  //! A configured resource limit (e.g. the subset-construction cap) was hit.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  //! The requested construction is not defined for these arguments.
  class UnsupportedError : public Error {
   public:
    using Error::Error;
  };

}  // namespace polymon

#endif  // POLYMON_ERROR_HPP_
