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

#include "polymon/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "polymon/aut_format.hpp"
#include "polymon/error.hpp"
#include "polymon/valence.hpp"
#include "polymon/vaut_format.hpp"

namespace polymon::cli {

  namespace {

    bool looks_like_generator(std::string const& tok) {
      return tok == "z"
             || (tok.size() >= 2 && (tok[0] == 'p' || tok[0] == 'q'));
    }

    // Reads .aut files over generator names and embeds them all into the
    // generator alphabet on the union of their stack letters (plus those
    // named by extra, e.g. a word given on the command line).
    std::vector<RationalSubset>
    load_subsets(std::vector<std::string> const& paths,
                 std::string const&              extra = "") {
      std::vector<Nfa>         auts;
      std::vector<std::string> names;
      auto                     note = [&](std::string const& n) {
        if (std::find(names.begin(), names.end(), n) == names.end()) {
          names.push_back(n);
        }
      };
      for (auto const& p : paths) {
        auts.push_back(read_aut_file(p));
        for (auto const& n : auts.back().alphabet().names()) {
          note(n);
        }
      }
      std::istringstream in(extra);
      for (std::string tok; in >> tok;) {
        if (tok != kEpsToken && looks_like_generator(tok)) {
          note(tok);
        }
      }
      auto const gens = GeneratorAlphabet::infer(Alphabet(names));
      std::vector<RationalSubset> out;
      for (auto const& a : auts) {
        out.push_back(subset_from_automaton(a, gens));
      }
      return out;
    }

    int verdict(std::ostream& out, bool yes) {
      out << (yes ? "yes" : "no") << '\n';
      return yes ? kYes : kNo;
    }

    bool is_unit_target(TargetSet const& t) {
      return subset_equal(t, finite_subset(t.generators(), {Word{}}));
    }

    std::string word_line(Alphabet const& a, Word const& w) {
      return w.empty() ? std::string(kEpsToken) : a.format_word_compact(w);
    }

    void apply_cap_from_environment() {
      char const* env = std::getenv("POLYMON_DFA_CAP");
      if (env == nullptr) {
        return;
      }
      std::string_view s(env);
      std::size_t      cap = 0;
      auto [ptr, ec]       = std::from_chars(s.data(), s.data() + s.size(), cap);
      if (ec != std::errc() || ptr != s.data() + s.size() || cap == 0) {
        throw InputError("POLYMON_DFA_CAP must be a positive integer, got '"
                         + std::string(s) + "'");
      }
      set_dfa_state_cap(cap);
    }

    // Restores the process-wide cap when a command finishes.
    struct CapGuard {
      std::size_t saved = dfa_state_cap();
      ~CapGuard() {
        set_dfa_state_cap(saved);
      }
    };

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Rational subsets of polycyclic monoids and valence "
                 "automata over them.",
                 "polymon"};
    app.require_subcommand(1, 1);
    app.fallthrough(false);

    std::function<int()> action;
    std::string          aut1, aut2, vaut1, vaut2, word;
    std::size_t          max_len = 0;
    std::size_t          fuel    = 100000;
    std::string          fixture;

    auto unary = [&](char const* name, char const* help,
                     std::function<int()> body) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option("aut", aut1, "automaton over generator names (.aut)")
          ->required()
          ->check(CLI::ExistingFile);
      sub->callback([&action, body] { action = body; });
      return sub;
    };
    auto binary = [&](char const* name, char const* help,
                      std::function<int()> body) {
      auto* sub = unary(name, help, std::move(body));
      sub->add_option("aut2", aut2, "second automaton (.aut)")
          ->required()
          ->check(CLI::ExistingFile);
      return sub;
    };

    unary("normalize", "print the canonical automaton of a subset", [&] {
      out << print_canonical(load_subsets({aut1})[0]);
      return kYes;
    });
    unary("member", "decide whether a generator word lies in a subset", [&] {
      auto r = load_subsets({aut1}, word)[0];
      return verdict(out, member(r.generators().parse_word(word), r));
    })->add_option("word", word, "generator word, e.g. \"pa qa\"")->required();
    unary("complement", "print the complement of a subset", [&] {
      out << print_canonical(complement(load_subsets({aut1})[0]));
      return kYes;
    });
    binary("intersect", "print the intersection of two subsets", [&] {
      auto r = load_subsets({aut1, aut2});
      out << print_canonical(intersect(r[0], r[1]));
      return kYes;
    });
    binary("union", "print the union of two subsets", [&] {
      auto r = load_subsets({aut1, aut2});
      out << print_canonical(union_of(r[0], r[1]));
      return kYes;
    });
    binary("equal", "decide whether two subsets are equal", [&] {
      auto r = load_subsets({aut1, aut2});
      return verdict(out, subset_equal(r[0], r[1]));
    });
    unary("empty", "decide whether a subset is empty", [&] {
      return verdict(out, is_empty(load_subsets({aut1})[0]));
    });
    unary("contains-zero", "decide whether a subset contains zero", [&] {
      return verdict(out, contains_zero(load_subsets({aut1})[0]));
    });
    unary("split", "write a subset as a union of pops-then-pushes products",
          [&] {
            auto d = split(load_subsets({aut1})[0]);
            out << "# contains-zero " << (d.contains_zero ? "yes" : "no")
                << '\n';
            for (std::size_t i = 0; i < d.parts.size(); ++i) {
              out << "# part " << i + 1 << " pops\n"
                  << format_aut(minimize(d.parts[i].pops));
              out << "# part " << i + 1 << " pushes\n"
                  << format_aut(minimize(d.parts[i].pushes));
            }
            return kYes;
          });

    auto vaut_sub = [&](char const* name, char const* help,
                        std::function<int()> body) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option("vaut", vaut1, "valence automaton (.vaut)")
          ->required()
          ->check(CLI::ExistingFile);
      sub->callback([&action, body] { action = body; });
      return sub;
    };

    vaut_sub("accept", "decide whether a valence automaton accepts a word", [&] {
      auto ta = read_vaut_file(vaut1);
      auto w  = ta.automaton.input().parse_word(word);
      return verdict(out, accepts(ta.automaton, ta.target, w));
    })->add_option("word", word, "input word (\"\" or eps for the empty word)")
        ->required();
    vaut_sub("enumerate", "list accepted words up to a length", [&] {
      auto ta = read_vaut_file(vaut1);
      for (auto const& w : enumerate_language(ta.automaton, ta.target, max_len)) {
        out << word_line(ta.automaton.input(), w) << '\n';
      }
      return kYes;
    })->add_option("--max-len", max_len, "length bound")->required();
    vaut_sub("decompose", "print the pieces of a target-{1} decomposition", [&] {
      auto ta = read_vaut_file(vaut1);
      auto d  = decompose(ta.automaton, ta.target);
      if (d.zero_part) {
        out << "# zero part\n" << format_vaut(*d.zero_part);
      }
      for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        auto const& p = d.pieces[i];
        auto        tag = "# piece " + std::to_string(i + 1) + " part "
                   + std::to_string(p.part + 1) + " state "
                   + std::to_string(p.core_state);
        out << tag << " prefix\n" << format_vaut(p.prefix);
        out << tag << " suffix\n" << format_vaut(p.suffix);
      }
      return kYes;
    });
    vaut_sub("zero-eliminate",
             "print the zero component and the zero-free automaton (|X| = 1)",
             [&] {
               auto ta = read_vaut_file(vaut1);
               out << "# zero component\n"
                   << format_aut(minimize(zero_component_automaton(ta.automaton)));
               out << "# stripped\n"
                   << format_vaut({strip_zero_edges(ta.automaton),
                                   without_zero(ta.target)});
               return kYes;
             });
    auto* concat = vaut_sub(
        "concat", "build the two-register product for L(v1) L(v2)", [&] {
          auto a = read_vaut_file(vaut1);
          auto b = read_vaut_file(vaut2);
          if (!is_unit_target(a.target) || !is_unit_target(b.target)) {
            throw InputError("concat needs both automata to use the target {1}");
          }
          auto pv = concat_product(a.automaton, b.automaton);
          if (word.empty()) {
            out << format_product(pv);
            return kYes;
          }
          switch (product_accepts_bounded(pv, pv.input().parse_word(word), fuel)) {
            case Verdict::Yes: return verdict(out, true);
            case Verdict::No: return verdict(out, false);
            case Verdict::Unknown: break;
          }
          out << "unknown\n";
          return kResources;
        });
    concat->add_option("vaut2", vaut2, "second valence automaton (.vaut)")
        ->required()
        ->check(CLI::ExistingFile);
    concat->add_option("--word", word,
                       "decide this word on the product instead of printing it");
    concat->add_option("--fuel", fuel, "configuration budget for --word");

    app.add_subcommand("fixture", "print a built-in example automaton")
        ->callback([&] {
          action = [&] {
            out << format_vaut(fixture == "figure1" ? figure1_example()
                                                    : anbn_example());
            return kYes;
          };
        })
        ->add_option("name", fixture, "figure1 or anbn")
        ->required()
        ->check(CLI::IsMember({"figure1", "anbn"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? kYes : kBadInput;
    }

    try {
      CapGuard guard;
      apply_cap_from_environment();
      return action();
    } catch (ResourceError const& e) {
      err << "polymon: " << e.what() << '\n';
      return kResources;
    } catch (Error const& e) {
      err << "polymon: " << e.what() << '\n';
      return kBadInput;
    }
  }

}  // namespace polymon::cli
