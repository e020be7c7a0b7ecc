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

#include "polymon/rewriting.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

#include "polymon/error.hpp"

namespace polymon {

  MonadicSystem::MonadicSystem(Alphabet alphabet, std::vector<MonadicRule> rules)
      : _alphabet(std::move(alphabet)), _rules(std::move(rules)) {
    for (auto const& r : _rules) {
      if (r.lhs.empty()) {
        throw InputError("rewriting rule with empty left-hand side");
      }
      _alphabet.check_word(r.lhs);
      if (r.rhs && !_alphabet.contains(*r.rhs)) {
        throw InputError("rewriting rule right-hand side not in alphabet");
      }
    }
  }

  bool MonadicSystem::length_reducing() const noexcept {
    return std::all_of(_rules.begin(), _rules.end(), [](auto const& r) {
      return r.rhs_length() < r.lhs.size();
    });
  }

  MonadicSystem polycyclic_system(GeneratorAlphabet const& gens) {
    std::vector<MonadicRule> rules;
    auto const               k = static_cast<Symbol>(gens.rank());
    Symbol const             z = gens.zero();
    for (Symbol x = 0; x < k; ++x) {
      rules.push_back({{gens.push(x), gens.pop(x)}, std::nullopt});
    }
    for (Symbol x = 0; x < k; ++x) {
      for (Symbol y = 0; y < k; ++y) {
        if (x != y) {
          rules.push_back({{gens.push(x), gens.pop(y)}, z});
        }
      }
    }
    for (Symbol x = 0; x < k; ++x) {
      rules.push_back({{z, gens.pop(x)}, z});
      rules.push_back({{gens.push(x), z}, z});
      rules.push_back({{z, gens.push(x)}, z});
      rules.push_back({{gens.pop(x), z}, z});
    }
    rules.push_back({{z, z}, z});
    return MonadicSystem(gens, std::move(rules));
  }

  MonadicSystem polycyclic_system(StackAlphabet const& stack) {
    return polycyclic_system(GeneratorAlphabet(stack));
  }

  Word reduce_word(Word const& w, MonadicSystem const& sys) {
    if (!sys.length_reducing()) {
      throw InputError("reduce_word needs a length-reducing system");
    }
    sys.alphabet().check_word(w);
    Word cur = w;
    while (true) {
      MonadicRule const* best     = nullptr;
      std::size_t        best_pos = 0;
      for (std::size_t pos = 0; pos < cur.size() && best == nullptr; ++pos) {
        for (auto const& r : sys.rules()) {
          if (pos + r.lhs.size() <= cur.size()
              && std::equal(r.lhs.begin(), r.lhs.end(), cur.begin() + pos)
              && (best == nullptr || r.lhs.size() < best->lhs.size())) {
            best     = &r;
            best_pos = pos;
          }
        }
      }
      if (best == nullptr) {
        return cur;
      }
      auto first = cur.begin() + best_pos;
      first      = cur.erase(first, first + best->lhs.size());
      if (best->rhs) {
        cur.insert(first, *best->rhs);
      }
    }
  }

  Nfa descendants_closure(Nfa const& a, MonadicSystem const& sys) {
    if (!(a.alphabet() == sys.alphabet())) {
      throw InputError("automaton and rewriting system use different "
                       "alphabets");
    }
    using Bits          = boost::dynamic_bitset<>;
    std::size_t const n = a.size();
    std::size_t const k = a.alphabet().size();
    std::size_t const eps = k;

    // succ[label * n + s] = targets of s under label (eps stored last)
    std::vector<Bits> succ((k + 1) * n, Bits(n));
    auto              row = [&](std::size_t label, State s) -> Bits& {
      return succ[label * n + s];
    };
    for (auto const& e : a.edges()) {
      row(e.label == kEpsilon ? eps : e.label, e.source).set(e.target);
    }

    std::vector<Bits> closure(n, Bits(n));
    auto              image = [&](Bits const& from, std::size_t label) {
      Bits out(n);
      for (auto s = from.find_first(); s != Bits::npos; s = from.find_next(s)) {
        out |= label == eps ? closure[s] : row(label, static_cast<State>(s));
      }
      return out;
    };

    bool changed = true;
    while (changed) {
      changed = false;
      // reflexive-transitive epsilon closure
      for (State s = 0; s < n; ++s) {
        closure[s].reset();
        closure[s].set(s);
      }
      for (bool grew = true; grew;) {
        grew = false;
        for (State s = 0; s < n; ++s) {
          Bits next = closure[s];
          for (auto u = closure[s].find_first(); u != Bits::npos;
               u      = closure[s].find_next(u)) {
            next |= row(eps, static_cast<State>(u));
            next |= closure[u];
          }
          if (next != closure[s]) {
            closure[s] = std::move(next);
            grew       = true;
          }
        }
      }

      for (auto const& r : sys.rules()) {
        std::size_t const label = r.rhs ? *r.rhs : eps;
        for (State s = 0; s < n; ++s) {
          Bits cur = closure[s];
          for (auto x : r.lhs) {
            if (cur.none()) {
              break;
            }
            cur = image(image(cur, x), eps);
          }
          Bits& dst = row(label, s);
          if (!cur.is_subset_of(dst)) {
            dst |= cur;
            changed = true;
          }
        }
      }
    }

    Nfa out(a.alphabet(), n);
    out.set_initial(a.initial());
    for (auto f : a.finals()) {
      out.set_final(f);
    }
    for (State s = 0; s < n; ++s) {
      for (std::size_t label = 0; label <= k; ++label) {
        Bits const& r = row(label, s);
        for (auto t = r.find_first(); t != Bits::npos; t = r.find_next(t)) {
          out.add_edge(s,
                       label == eps ? kEpsilon : static_cast<Symbol>(label),
                       static_cast<State>(t));
        }
      }
    }
    return out;
  }

}  // namespace polymon
