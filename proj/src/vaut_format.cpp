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

#include "polymon/vaut_format.hpp"

#include <charconv>
#include <optional>

#include "polymon/aut_format.hpp"
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

    std::string join(std::vector<std::string> const& toks, std::size_t from) {
      std::string out;
      for (std::size_t i = from; i < toks.size(); ++i) {
        if (!out.empty()) {
          out += ' ';
        }
        out += toks[i];
      }
      return out;
    }

    // Reads `count` leading "[...]" groups; returns them and the rest.
    std::pair<std::vector<std::string>, std::string>
    bracket_groups(std::string rest, std::size_t count, std::size_t line) {
      std::vector<std::string> groups;
      for (std::size_t i = 0; i < count; ++i) {
        auto start = rest.find_first_not_of(' ');
        if (start == std::string::npos || rest[start] != '[') {
          fail(line, "expected a bracketed generator word");
        }
        auto close = rest.find(']', start);
        if (close == std::string::npos) {
          fail(line, "unterminated '['");
        }
        groups.push_back(rest.substr(start + 1, close - start - 1));
        rest.erase(0, close + 1);
      }
      return {std::move(groups), std::move(rest)};
    }

    template <typename F>
    auto at_line(std::size_t line, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (InputError const& e) {
        fail(line, e.what());
      }
    }

    // Declarations common to both formats.
    struct Header {
      std::optional<std::size_t> states;
      std::optional<State>       initial;
      std::vector<State>         finals;
      std::optional<Alphabet>    input;

      State state(std::string const& tok, std::size_t line) const {
        auto s = parse_count(tok, line);
        if (s >= *states) {
          fail(line, "state " + tok + " out of range");
        }
        return static_cast<State>(s);
      }

      // Returns false if the key is not a header key.
      bool read(std::vector<std::string> const& toks,
                std::size_t                     line,
                bool                            ready) {
        auto const& key = toks[0];
        if (key == "input") {
          if (input) {
            fail(line, "duplicate input declaration");
          }
          at_line(line, [&] {
            input.emplace(std::vector<std::string>(toks.begin() + 1, toks.end()));
            return 0;
          });
        } else if (key == "states") {
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
        } else if (key == "initial" || key == "final") {
          if (!ready) {
            fail(line, "'" + key + "' before the alphabets and states");
          }
          if (key == "initial") {
            if (initial) {
              fail(line, "duplicate initial declaration");
            }
            if (toks.size() != 2) {
              fail(line, "expected 'initial <state>'");
            }
            initial = state(toks[1], line);
          } else {
            if (toks.size() < 2) {
              fail(line, "expected 'final <state> ...'");
            }
            for (std::size_t j = 1; j < toks.size(); ++j) {
              finals.push_back(state(toks[j], line));
            }
          }
        } else {
          return false;
        }
        return true;
      }

      void check_complete() const {
        if (!input) {
          throw InputError("missing input declaration");
        }
        if (!states) {
          throw InputError("missing states declaration");
        }
        if (!initial) {
          throw InputError("missing initial declaration");
        }
      }
    };

    template <typename Edge>
    std::string format_finals_and_header(std::size_t        states,
                                         State              initial,
                                         std::vector<State> finals) {
      std::string out = "states " + std::to_string(states) + "\n";
      out += "initial " + std::to_string(initial) + "\n";
      if (!finals.empty()) {
        out += "final";
        for (auto f : finals) {
          out += ' ' + std::to_string(f);
        }
        out += '\n';
      }
      return out;
    }

    std::string names_line(std::string const& key, Alphabet const& a) {
      std::string out = key;
      for (auto const& n : a.names()) {
        out += ' ' + n;
      }
      return out + '\n';
    }

    std::string output_word(Alphabet const& input, std::optional<Symbol> out) {
      return out ? input.name(*out) : std::string(kEpsToken);
    }
  }  // namespace

  TargetedAutomaton parse_vaut(std::string_view             text,
                               std::filesystem::path const& base_dir) {
    Header                           hdr;
    std::optional<GeneratorAlphabet> gens;
    struct RawEdge {
      State       src, dst;
      std::string reg, out;
      std::size_t line;
    };
    std::vector<RawEdge>          edges;
    std::vector<Word>             inline_words;
    std::vector<std::size_t>      inline_lines;
    std::optional<Nfa>            target_aut;
    std::optional<std::size_t>    target_line;

    auto const lines = tokenize_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      auto const&       toks = lines[i];
      std::size_t const line = i + 1;
      if (toks.empty()) {
        continue;
      }
      auto const& key   = toks[0];
      bool const  ready = gens && hdr.input && hdr.states;
      if (key == "stack") {
        if (gens) {
          fail(line, "duplicate stack declaration");
        }
        gens = at_line(line, [&] {
          return GeneratorAlphabet(StackAlphabet(
              std::vector<std::string>(toks.begin() + 1, toks.end())));
        });
        continue;
      }
      if (hdr.read(toks, line, ready)) {
        continue;
      }
      if (key != "edge" && key != "target") {
        fail(line, "unknown declaration '" + key + "'");
      }
      if (!ready) {
        fail(line, "'" + key + "' before stack, input and states");
      }
      if (key == "edge") {
        if (toks.size() < 4) {
          fail(line, "expected 'edge <src> <dst> [<generators>] <input>'");
        }
        State src          = hdr.state(toks[1], line);
        State dst          = hdr.state(toks[2], line);
        auto [groups, out] = bracket_groups(join(toks, 3), 1, line);
        if (out.find_first_not_of(' ') == std::string::npos) {
          fail(line, "missing input word (use eps for the empty word)");
        }
        edges.push_back({src, dst, groups[0], out, line});
        continue;
      }
      // target
      if (toks.size() < 2) {
        fail(line, "expected 'target inline|file|begin ...'");
      }
      if (toks[1] == "inline") {
        if (target_aut) {
          fail(line, "inline target mixed with an automaton target");
        }
        inline_words.push_back(
            at_line(line, [&] { return gens->parse_word(join(toks, 2)); }));
        inline_lines.push_back(line);
        target_line = line;
      } else if (toks[1] == "file" || toks[1] == "begin") {
        if (target_line) {
          fail(line, "duplicate target declaration");
        }
        target_line = line;
        if (toks[1] == "file") {
          if (toks.size() != 3) {
            fail(line, "expected 'target file <path>'");
          }
          target_aut = at_line(line, [&] {
            return read_aut_file(base_dir / toks[2]);
          });
        } else {
          std::string block;
          std::size_t j = i + 1;
          for (; j < lines.size(); ++j) {
            if (lines[j].size() == 2 && lines[j][0] == "target"
                && lines[j][1] == "end") {
              break;
            }
            block += join(lines[j], 0) + '\n';
          }
          if (j == lines.size()) {
            fail(line, "'target begin' without 'target end'");
          }
          target_aut = at_line(line, [&] { return parse_aut(block); });
          i          = j;
        }
      } else {
        fail(line, "unknown target kind '" + toks[1] + "'");
      }
    }
    if (!gens) {
      throw InputError("missing stack declaration");
    }
    hdr.check_complete();

    ValenceAutomaton v(*gens, *hdr.input, *hdr.states);
    v.set_initial(*hdr.initial);
    for (auto f : hdr.finals) {
      v.set_final(f);
    }
    for (auto const& e : edges) {
      Word reg = at_line(e.line, [&] { return gens->parse_word(e.reg); });
      Word out = at_line(e.line, [&] { return hdr.input->parse_word(e.out); });
      v.add_edge(e.src, std::move(reg), out, e.dst);
    }

    TargetSet target = finite_subset(*gens, {Word{}});
    if (target_aut) {
      target = at_line(*target_line, [&] {
        return subset_from_automaton(*target_aut, *gens);
      });
    } else if (!inline_words.empty()) {
      target = finite_subset(*gens, inline_words);
    }
    return {std::move(v), std::move(target)};
  }

  TargetedAutomaton read_vaut_file(std::filesystem::path const& path) {
    try {
      return parse_vaut(read_text_file(path), path.parent_path());
    } catch (InputError const& e) {
      throw InputError(path.string() + ": " + e.what());
    }
  }

  std::string format_vaut(TargetedAutomaton const& ta) {
    auto const& v    = ta.automaton;
    auto const& gens = v.registers();
    std::string out  = names_line("stack", gens.stack());
    out += names_line("input", v.input());
    out += format_finals_and_header<void>(v.size(), v.initial(), v.finals());
    for (auto const& e : v.sorted_edges()) {
      out += "edge " + std::to_string(e.source) + ' ' + std::to_string(e.target)
             + " [" + gens.format_word(e.reg) + "] "
             + output_word(v.input(), e.output) + '\n';
    }
    auto const members = finite_members(ta.target);
    if (members && !members->empty()) {
      for (auto const& w : *members) {
        out += "target inline " + gens.format_word(w) + '\n';
      }
    } else {
      out += "target begin\n";
      out += print_canonical(ta.target);
      out += "target end\n";
    }
    return out;
  }

  ProductValenceAutomaton parse_product(std::string_view text) {
    Header                           hdr;
    std::optional<GeneratorAlphabet> left, right;
    struct RawEdge {
      State       src, dst;
      std::string l, r, out;
      std::size_t line;
    };
    std::vector<RawEdge> edges;

    auto const lines = tokenize_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      auto const&       toks = lines[i];
      std::size_t const line = i + 1;
      if (toks.empty()) {
        continue;
      }
      auto const& key   = toks[0];
      bool const  ready = left && right && hdr.input && hdr.states;
      if (key == "stack-left" || key == "stack-right") {
        auto& slot = key == "stack-left" ? left : right;
        if (slot) {
          fail(line, "duplicate " + key + " declaration");
        }
        slot = at_line(line, [&] {
          return GeneratorAlphabet(StackAlphabet(
              std::vector<std::string>(toks.begin() + 1, toks.end())));
        });
        continue;
      }
      if (hdr.read(toks, line, ready)) {
        continue;
      }
      if (key != "edge") {
        fail(line, "unknown declaration '" + key + "'");
      }
      if (!ready) {
        fail(line, "'edge' before stacks, input and states");
      }
      if (toks.size() < 5) {
        fail(line, "expected 'edge <src> <dst> [<left>] [<right>] <input>'");
      }
      State src          = hdr.state(toks[1], line);
      State dst          = hdr.state(toks[2], line);
      auto [groups, out] = bracket_groups(join(toks, 3), 2, line);
      if (out.find_first_not_of(' ') == std::string::npos) {
        fail(line, "missing input word (use eps for the empty word)");
      }
      edges.push_back({src, dst, groups[0], groups[1], out, line});
    }
    if (!left || !right) {
      throw InputError("missing stack-left or stack-right declaration");
    }
    hdr.check_complete();

    ProductValenceAutomaton pv(*left, *right, *hdr.input, *hdr.states);
    pv.set_initial(*hdr.initial);
    for (auto f : hdr.finals) {
      pv.set_final(f);
    }
    for (auto const& e : edges) {
      Word l   = at_line(e.line, [&] { return left->parse_word(e.l); });
      Word r   = at_line(e.line, [&] { return right->parse_word(e.r); });
      Word out = at_line(e.line, [&] { return hdr.input->parse_word(e.out); });
      if (out.size() > 1) {
        fail(e.line, "product edges output at most one letter");
      }
      pv.add_edge({e.src,
                   std::move(l),
                   std::move(r),
                   out.empty() ? std::nullopt : std::optional(out[0]),
                   e.dst});
    }
    return pv;
  }

  std::string format_product(ProductValenceAutomaton const& pv) {
    std::string out = names_line("stack-left", pv.left().stack());
    out += names_line("stack-right", pv.right().stack());
    out += names_line("input", pv.input());
    out += format_finals_and_header<void>(pv.size(), pv.initial(), pv.finals());
    auto edges = pv.edges();
    std::sort(edges.begin(), edges.end(), [](auto const& a, auto const& b) {
      return std::tie(a.source, a.target, a.left, a.right, a.output)
             < std::tie(b.source, b.target, b.left, b.right, b.output);
    });
    for (auto const& e : edges) {
      out += "edge " + std::to_string(e.source) + ' ' + std::to_string(e.target)
             + " [" + pv.left().format_word(e.left) + "] ["
             + pv.right().format_word(e.right) + "] "
             + output_word(pv.input(), e.output) + '\n';
    }
    return out;
  }

}  // namespace polymon
