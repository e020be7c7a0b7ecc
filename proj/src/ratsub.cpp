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

#include "polymon/ratsub.hpp"

#include "polymon/error.hpp"
#include "polymon/rewriting.hpp"

namespace polymon {

  RationalSubset trusted_subset(GeneratorAlphabet const& gens, Nfa canon) {
    return RationalSubset(gens, std::move(canon));
  }

  namespace {
    void check_same(RationalSubset const& a, RationalSubset const& b) {
      if (!(a.generators() == b.generators())) {
        throw InputError("rational subsets over different stack alphabets");
      }
    }

    // Q_X* P_X*, two states.
    Nfa zero_free_canonical_language(GeneratorAlphabet const& gens) {
      Nfa out(gens, 2);
      out.set_final(0);
      out.set_final(1);
      for (Symbol x = 0; x < gens.rank(); ++x) {
        out.add_edge(0, gens.pop(x), 0);
        out.add_edge(0, gens.push(x), 1);
        out.add_edge(1, gens.push(x), 1);
      }
      return out;
    }

    // Copy of a restricted to edges whose label satisfies keep.
    template <typename Keep>
    Nfa restrict_edges(Nfa const& a, State initial, Keep keep) {
      Nfa out(a.alphabet(), a.size());
      out.set_initial(initial);
      for (auto const& e : a.edges()) {
        if (e.label == kEpsilon || keep(e.label)) {
          out.add_edge(e.source, e.label, e.target);
        }
      }
      return out;
    }
  }  // namespace

  RationalSubset RationalSubset::from_canonical(GeneratorAlphabet gens,
                                                Nfa               canon) {
    if (!(canon.alphabet() == gens)) {
      throw InputError("canonical automaton is not over the generators");
    }
    if (!polymon::is_subset(canon, canonical_language(gens))) {
      throw InputError("automaton accepts non-canonical words");
    }
    return RationalSubset(std::move(gens), trim(canon));
  }

  Nfa canonical_language(GeneratorAlphabet const& gens) {
    // 0: start, 1: reading pops, 2: reading pushes, 3: after z
    Nfa out(gens, 4);
    for (State s = 0; s < 4; ++s) {
      out.set_final(s);
    }
    for (Symbol x = 0; x < gens.rank(); ++x) {
      out.add_edge(0, gens.pop(x), 1);
      out.add_edge(1, gens.pop(x), 1);
      out.add_edge(0, gens.push(x), 2);
      out.add_edge(1, gens.push(x), 2);
      out.add_edge(2, gens.push(x), 2);
    }
    out.add_edge(0, gens.zero(), 3);
    return out;
  }

  RationalSubset normalize(GeneratorAlphabet const& gens, Nfa const& g) {
    if (!(g.alphabet() == gens)) {
      throw InputError("automaton is not over the generator alphabet");
    }
    Nfa closed = descendants_closure(g, polycyclic_system(gens));
    return RationalSubset(gens,
                          intersection(closed, canonical_language(gens)));
  }

  RationalSubset empty_subset(GeneratorAlphabet const& gens) {
    return trusted_subset(gens, empty_language(gens));
  }

  RationalSubset full_subset(GeneratorAlphabet const& gens) {
    return trusted_subset(gens, canonical_language(gens));
  }

  RationalSubset finite_subset(GeneratorAlphabet const&  gens,
                               std::vector<Word> const& words) {
    Nfa out(gens, 2);
    out.set_final(1);
    for (auto const& w : words) {
      out.add_path(0, canonical_word(gens, eval_sigma(gens, w)), 1);
    }
    return trusted_subset(gens, trim(out));
  }

  bool member(Word const& w, RationalSubset const& r) {
    auto const& gens = r.generators();
    return nfa_accepts(r.canon(), canonical_word(gens, eval_sigma(gens, w)));
  }

  RationalSubset complement(RationalSubset const& r) {
    auto const& gens = r.generators();
    Nfa         rest = intersection(canonical_language(gens),
                            complement_regular(r.canon()));
    return trusted_subset(gens, minimize(rest));
  }

  RationalSubset intersect(RationalSubset const& a, RationalSubset const& b) {
    check_same(a, b);
    return trusted_subset(a.generators(), intersection(a.canon(), b.canon()));
  }

  RationalSubset union_of(RationalSubset const& a, RationalSubset const& b) {
    check_same(a, b);
    return trusted_subset(a.generators(),
                          trim(polymon::union_of(a.canon(), b.canon())));
  }

  bool subset_equal(RationalSubset const& a, RationalSubset const& b) {
    check_same(a, b);
    return equivalent(a.canon(), b.canon());
  }

  bool is_subset(RationalSubset const& a, RationalSubset const& b) {
    check_same(a, b);
    return polymon::is_subset(a.canon(), b.canon());
  }

  bool is_empty(RationalSubset const& r) {
    return polymon::is_empty(r.canon());
  }

  bool contains_zero(RationalSubset const& r) {
    return nfa_accepts(r.canon(), Word{r.generators().zero()});
  }

  RationalSubset without_zero(RationalSubset const& r) {
    auto const& gens = r.generators();
    return trusted_subset(
        gens, intersection(r.canon(), zero_free_canonical_language(gens)));
  }

  std::optional<Word> witness(RationalSubset const& r) {
    Nfa const m = minimize(r.canon());
    // breadth-first over the minimal Dfa gives a shortest word
    std::vector<std::optional<Word>> path(m.size());
    std::vector<State>               queue{m.initial()};
    path[m.initial()] = Word{};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      State s = queue[i];
      if (m.is_final(s)) {
        return path[s];
      }
      for (auto const& t : m.out(s)) {
        if (!path[t.target]) {
          Word w = *path[s];
          w.push_back(t.label);
          path[t.target] = std::move(w);
          queue.push_back(t.target);
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::vector<Word>> finite_members(RationalSubset const& r) {
    if (!is_finite(r.canon())) {
      return std::nullopt;
    }
    Nfa const m = minimize(r.canon());
    return enumerate_up_to(m, m.size());
  }

  SplitDecomposition split(RationalSubset const& r) {
    auto const&        gens = r.generators();
    SplitDecomposition out;
    out.contains_zero = contains_zero(r);

    Nfa const a = minimize(
        intersection(r.canon(), zero_free_canonical_language(gens)));
    auto const is_pop = [&](Symbol g) {
      return gens.kind(g) == GeneratorAlphabet::Kind::Pop;
    };
    auto const is_push = [&](Symbol g) {
      return gens.kind(g) == GeneratorAlphabet::Kind::Push;
    };
    for (State i = 0; i < a.size(); ++i) {
      Nfa pops = restrict_edges(a, a.initial(), is_pop);
      pops.set_final(i);
      Nfa pushes = restrict_edges(a, i, is_push);
      for (auto f : a.finals()) {
        pushes.set_final(f);
      }
      pops   = trim(pops);
      pushes = trim(pushes);
      if (polymon::is_empty(pops) || polymon::is_empty(pushes)) {
        continue;
      }
      out.parts.push_back({std::move(pops), std::move(pushes)});
    }
    return out;
  }

  RationalSubset assemble(GeneratorAlphabet const&  gens,
                          SplitDecomposition const& d) {
    Nfa acc = d.contains_zero ? word_language(gens, Word{gens.zero()})
                              : empty_language(gens);
    for (auto const& part : d.parts) {
      acc = polymon::union_of(acc, concatenation(part.pops, part.pushes));
    }
    return normalize(gens, acc);
  }

}  // namespace polymon
