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

#include "polymon/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "polymon/error.hpp"

namespace polymon {

  bool valid_symbol_name(std::string_view name) noexcept {
    if (name.empty() || name == kEpsToken) {
      return false;
    }
    return std::none_of(name.begin(), name.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    });
  }

  Alphabet::Alphabet() : _impl(std::make_shared<Impl>()) {}

  Alphabet::Alphabet(std::vector<std::string> names) {
    auto impl = std::make_shared<Impl>();
    for (auto& n : names) {
      if (!valid_symbol_name(n)) {
        throw InputError("invalid symbol name '" + n + "'");
      }
      auto [it, inserted] = impl->index.emplace(n, impl->names.size());
      if (!inserted) {
        throw InputError("duplicate symbol name '" + n + "'");
      }
      impl->names.push_back(std::move(n));
    }
    _impl = std::move(impl);
  }

  std::string const& Alphabet::name(Symbol s) const {
    if (s >= size()) {
      throw InputError("symbol index " + std::to_string(s)
                       + " out of range");
    }
    return _impl->names[s];
  }

  std::optional<Symbol> Alphabet::find(std::string_view name) const {
    auto it = _impl->index.find(std::string(name));
    if (it == _impl->index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Symbol Alphabet::at(std::string_view name) const {
    if (auto s = find(name)) {
      return *s;
    }
    throw InputError("unknown symbol '" + std::string(name) + "'");
  }

  Word Alphabet::parse_word(std::string_view text) const {
    Word               result;
    std::istringstream in{std::string(text)};
    std::string        tok;
    while (in >> tok) {
      if (tok == kEpsToken) {
        continue;
      }
      if (auto s = find(tok)) {
        result.push_back(*s);
        continue;
      }
      // greedy longest-name segmentation
      std::size_t pos = 0;
      while (pos < tok.size()) {
        std::size_t best_len = 0;
        Symbol      best     = 0;
        for (Symbol s = 0; s < size(); ++s) {
          auto const& n = _impl->names[s];
          if (n.size() > best_len && tok.compare(pos, n.size(), n) == 0) {
            best_len = n.size();
            best     = s;
          }
        }
        if (best_len == 0) {
          throw InputError("unknown symbol in '" + tok + "'");
        }
        result.push_back(best);
        pos += best_len;
      }
    }
    return result;
  }

  std::string Alphabet::format_word(Word const& w) const {
    if (w.empty()) {
      return std::string(kEpsToken);
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += name(w[i]);
    }
    return out;
  }

  std::string Alphabet::format_word_compact(Word const& w) const {
    bool single = std::all_of(names().begin(),
                              names().end(),
                              [](auto const& n) { return n.size() == 1; });
    if (!single || w.empty()) {
      return format_word(w);
    }
    std::string out;
    for (auto s : w) {
      out += name(s);
    }
    return out;
  }

  void Alphabet::check_word(Word const& w) const {
    for (auto s : w) {
      if (s >= size()) {
        throw InputError("letter index " + std::to_string(s)
                         + " is not in the alphabet");
      }
    }
  }

  bool operator==(Alphabet const& a, Alphabet const& b) noexcept {
    return a._impl == b._impl || a._impl->names == b._impl->names;
  }

}  // namespace polymon
