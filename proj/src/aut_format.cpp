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

#include "polymon/aut_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "polymon/error.hpp"

namespace polymon {

  namespace {
    [[noreturn]] void fail(std::size_t line, std::string const& msg) {
      throw InputError("line " + std::to_string(line) + ": " + msg);
    }

    std::size_t parse_count(std::string const& tok, std::size_t line) {
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        fail(line, "expected a non-negative integer, got '" + tok + "'");
      }
      return value;
    }

    State parse_state(std::string const& tok, std::size_t n, std::size_t line) {
      auto s = parse_count(tok, line);
      if (s >= n) {
        fail(line, "state " + tok + " out of range (states " + std::to_string(n)
                       + ")");
      }
      return static_cast<State>(s);
    }
  }  // namespace

  std::vector<std::vector<std::string>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream                    in{std::string(text)};
    std::string                           raw;
    while (std::getline(in, raw)) {
      if (auto hash = raw.find('#'); hash != std::string::npos) {
        raw.erase(hash);
      }
      std::istringstream       ls(raw);
      std::vector<std::string> toks;
      for (std::string t; ls >> t;) {
        toks.push_back(std::move(t));
      }
      lines.push_back(std::move(toks));
    }
    return lines;
  }

  std::string read_text_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Nfa parse_aut(std::string_view text) {
    std::optional<Alphabet>    alphabet;
    std::optional<std::size_t> states;
    std::optional<State>       initial;
    std::vector<State>         finals;
    std::vector<Nfa::Edge>     edges;

    auto const lines = tokenize_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      auto const&       toks = lines[i];
      std::size_t const line = i + 1;
      if (toks.empty()) {
        continue;
      }
      auto const& key = toks[0];
      if (key == "alphabet") {
        if (alphabet) {
          fail(line, "duplicate alphabet declaration");
        }
        try {
          alphabet.emplace(std::vector<std::string>(toks.begin() + 1, toks.end()));
        } catch (InputError const& e) {
          fail(line, e.what());
        }
        continue;
      }
      if (key == "states") {
        if (states) {
          fail(line, "duplicate states declaration");
        }
        if (toks.size() != 2) {
          fail(line, "expected 'states <n>'");
        }
        states = parse_count(toks[1], line);
        if (*states == 0) {
          fail(line, "an automaton needs at least one state");
        }
        continue;
      }
      if (key != "initial" && key != "final" && key != "edge") {
        fail(line, "unknown declaration '" + key + "'");
      }
      if (!alphabet || !states) {
        fail(line, "'" + key + "' before alphabet and states");
      }
      if (key == "initial") {
        if (initial) {
          fail(line, "duplicate initial declaration");
        }
        if (toks.size() != 2) {
          fail(line, "expected 'initial <state>'");
        }
        initial = parse_state(toks[1], *states, line);
      } else if (key == "final") {
        if (toks.size() < 2) {
          fail(line, "expected 'final <state> ...'");
        }
        for (std::size_t j = 1; j < toks.size(); ++j) {
          finals.push_back(parse_state(toks[j], *states, line));
        }
      } else {
        if (toks.size() != 4) {
          fail(line, "expected 'edge <src> <dst> <symbol|eps>'");
        }
        State  src = parse_state(toks[1], *states, line);
        State  dst = parse_state(toks[2], *states, line);
        Symbol label = kEpsilon;
        if (toks[3] != kEpsToken) {
          auto s = alphabet->find(toks[3]);
          if (!s) {
            fail(line, "unknown symbol '" + toks[3] + "'");
          }
          label = *s;
        }
        edges.push_back({src, label, dst});
      }
    }
    if (!alphabet) {
      throw InputError("missing alphabet declaration");
    }
    if (!states) {
      throw InputError("missing states declaration");
    }
    if (!initial) {
      throw InputError("missing initial declaration");
    }
    Nfa out(*alphabet, *states);
    out.set_initial(*initial);
    for (auto f : finals) {
      out.set_final(f);
    }
    for (auto const& e : edges) {
      out.add_edge(e.source, e.label, e.target);
    }
    return out;
  }

  Nfa read_aut_file(std::filesystem::path const& path) {
    try {
      return parse_aut(read_text_file(path));
    } catch (InputError const& e) {
      throw InputError(path.string() + ": " + e.what());
    }
  }

  std::string format_aut(Nfa const& a) {
    std::string out = "alphabet";
    for (auto const& n : a.alphabet().names()) {
      out += ' ';
      out += n;
    }
    out += "\nstates " + std::to_string(a.size()) + "\n";
    out += "initial " + std::to_string(a.initial()) + "\n";
    auto const finals = a.finals();
    if (!finals.empty()) {
      out += "final";
      for (auto f : finals) {
        out += ' ' + std::to_string(f);
      }
      out += '\n';
    }
    for (auto const& e : a.edges()) {
      out += "edge " + std::to_string(e.source) + ' ' + std::to_string(e.target)
             + ' '
             + (e.label == kEpsilon ? std::string(kEpsToken)
                                    : a.alphabet().name(e.label))
             + '\n';
    }
    return out;
  }

  std::string print_canonical(RationalSubset const& r) {
    return format_aut(minimize(r.canon()));
  }

  Nfa embed_generators(Nfa const& a, GeneratorAlphabet const& gens) {
    std::map<std::string, std::string> identity;
    for (auto const& n : a.alphabet().names()) {
      if (!gens.find(n)) {
        throw InputError("letter '" + n
                         + "' is not a generator of the stack alphabet");
      }
      identity[n] = n;
    }
    return relabel(a, gens, identity);
  }

  RationalSubset subset_from_automaton(
      Nfa const&                              a,
      std::optional<GeneratorAlphabet> const& gens) {
    GeneratorAlphabet g = gens ? *gens : GeneratorAlphabet::infer(a.alphabet());
    return normalize(g, embed_generators(a, g));
  }

}  // namespace polymon
