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

#include "polymon/valence.hpp"

#include <deque>
#include <set>
#include <tuple>

namespace polymon {

  namespace {
    void check_target(ValenceAutomaton const& v, TargetSet const& t) {
      if (!(v.registers() == t.generators())) {
        throw InputError("target set and automaton use different stack "
                         "alphabets");
      }
    }

    void require_bicyclic(ValenceAutomaton const& v, char const* what) {
      if (v.registers().rank() != 1) {
        throw UnsupportedError(std::string(what)
                               + " needs a one-letter stack alphabet (the "
                                 "zero of P(X) is not adjoined for |X| >= 2)");
      }
    }

    bool has_zero(GeneratorAlphabet const& gens, Word const& w) {
      return std::find(w.begin(), w.end(), gens.zero()) != w.end();
    }

    Word concat(Word a, Word const& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }

    TargetSet identity_target(GeneratorAlphabet const& gens) {
      return finite_subset(gens, {Word{}});
    }

    // Copies the edges of an Nfa over the generators onto a transducer as
    // register-only edges, at the given state offset.
    // Splits register words into one letter per edge so that every point
    // of a register word is a state; the output goes on the first link.
    Transducer with_single_letter_registers(Transducer const& tr) {
      Transducer out(tr.registers(), tr.input(), tr.size());
      out.set_initial(tr.initial());
      for (auto f : tr.finals()) {
        out.set_final(f);
      }
      for (auto const& e : tr.edges()) {
        Word output;
        if (e.output) {
          output.push_back(*e.output);
        }
        if (e.reg.size() <= 1) {
          out.add_edge(e.source, e.reg, output, e.target);
          continue;
        }
        State cur = e.source;
        for (std::size_t i = 0; i < e.reg.size(); ++i) {
          State nxt = i + 1 == e.reg.size() ? e.target : out.add_state();
          out.add_edge(cur, {e.reg[i]}, i == 0 ? output : Word{}, nxt);
          cur = nxt;
        }
      }
      return out;
    }

    void embed_register_nfa(Transducer& tr, Nfa const& a, State offset) {
      for (auto const& e : a.edges()) {
        Word reg;
        if (e.label != kEpsilon) {
          reg.push_back(e.label);
        }
        tr.add_edge(e.source + offset, reg, {}, e.target + offset);
      }
    }

    std::vector<Word> sorted_unique(std::vector<Word> words) {
      std::sort(words.begin(), words.end(), shortlex_less);
      words.erase(std::unique(words.begin(), words.end()), words.end());
      return words;
    }
  }  // namespace

  bool shortlex_less(Word const& a, Word const& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }

  ////////////////////////////////////////////////////////////////////////
  // GeneratorMorphism
  ////////////////////////////////////////////////////////////////////////

  GeneratorMorphism::GeneratorMorphism(Alphabet          source,
                                       GeneratorAlphabet target,
                                       std::vector<Word> images)
      : _source(std::move(source)),
        _target(std::move(target)),
        _images(std::move(images)) {
    if (_images.size() != _source.size()) {
      throw InputError("morphism must give an image for every letter");
    }
    for (auto const& w : _images) {
      _target.check_word(w);
    }
  }

  GeneratorMorphism::GeneratorMorphism(
      Alphabet                                  source,
      GeneratorAlphabet                         target,
      std::map<std::string, std::string> const& images)
      : _source(std::move(source)), _target(std::move(target)) {
    for (auto const& name : _source.names()) {
      auto it = images.find(name);
      if (it == images.end()) {
        throw InputError("morphism has no image for '" + name + "'");
      }
      _images.push_back(_target.parse_word(it->second));
    }
  }

  GeneratorMorphism GeneratorMorphism::identity(GeneratorAlphabet const& gens) {
    std::vector<Word> images;
    for (Symbol g = 0; g < gens.size(); ++g) {
      images.push_back({g});
    }
    return GeneratorMorphism(gens, gens, std::move(images));
  }

  Word GeneratorMorphism::apply(Word const& w) const {
    _source.check_word(w);
    Word out;
    for (auto x : w) {
      out.insert(out.end(), _images[x].begin(), _images[x].end());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // ProductValenceAutomaton
  ////////////////////////////////////////////////////////////////////////

  ProductValenceAutomaton::ProductValenceAutomaton(GeneratorAlphabet left,
                                                   GeneratorAlphabet right,
                                                   Alphabet          input,
                                                   std::size_t       states)
      : _left(std::move(left)),
        _right(std::move(right)),
        _input(std::move(input)),
        _final(states) {}

  void ProductValenceAutomaton::set_initial(State s) {
    if (s >= size()) {
      throw InputError("initial state out of range");
    }
    _initial = s;
  }

  void ProductValenceAutomaton::set_final(State s, bool value) {
    _final.at(s) = value;
  }

  void ProductValenceAutomaton::add_edge(Edge e) {
    if (e.source >= size() || e.target >= size()) {
      throw InputError("edge endpoint out of range");
    }
    _left.check_word(e.left);
    _right.check_word(e.right);
    if (e.output && !_input.contains(*e.output)) {
      throw InputError("edge output is not in the input alphabet");
    }
    _edges.push_back(std::move(e));
  }

  std::vector<State> ProductValenceAutomaton::finals() const {
    std::vector<State> out;
    for (State s = 0; s < size(); ++s) {
      if (_final[s]) {
        out.push_back(s);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Acceptance
  ////////////////////////////////////////////////////////////////////////

  Nfa output_language(ValenceAutomaton const& v) {
    Nfa out(v.input(), v.size());
    out.set_initial(v.initial());
    for (auto f : v.finals()) {
      out.set_final(f);
    }
    for (auto const& e : v.edges()) {
      out.add_edge(e.source, e.output.value_or(kEpsilon), e.target);
    }
    return out;
  }

  RationalSubset reachable_register_language(ValenceAutomaton const& v,
                                             Word const&             w) {
    v.input().check_word(w);
    auto const&       gens  = v.registers();
    std::size_t const width = w.size() + 1;
    auto const        at    = [&](State s, std::size_t pos) {
      return static_cast<State>(s * width + pos);
    };

    Nfa paths(gens, v.size() * width);
    paths.set_initial(at(v.initial(), 0));
    for (auto f : v.finals()) {
      paths.set_final(at(f, w.size()));
    }
    for (auto const& e : v.edges()) {
      for (std::size_t pos = 0; pos < width; ++pos) {
        if (!e.output) {
          paths.add_path(at(e.source, pos), e.reg, at(e.target, pos));
        } else if (pos < w.size() && *e.output == w[pos]) {
          paths.add_path(at(e.source, pos), e.reg, at(e.target, pos + 1));
        }
      }
    }
    return normalize(gens, trim(paths));
  }

  RationalSubset register_language(ValenceAutomaton const& v) {
    auto const& gens = v.registers();
    Nfa         paths(gens, v.size());
    paths.set_initial(v.initial());
    for (auto f : v.finals()) {
      paths.set_final(f);
    }
    for (auto const& e : v.edges()) {
      paths.add_path(e.source, e.reg, e.target);
    }
    return normalize(gens, trim(paths));
  }

  bool accepts(ValenceAutomaton const& v, TargetSet const& t, Word const& w) {
    check_target(v, t);
    return !is_empty(intersect(reachable_register_language(v, w), t));
  }

  bool language_empty(ValenceAutomaton const& v, TargetSet const& t) {
    check_target(v, t);
    return is_empty(intersect(register_language(v), t));
  }

  std::vector<Word> enumerate_language(ValenceAutomaton const& v,
                                       TargetSet const&        t,
                                       std::size_t             n) {
    check_target(v, t);
    std::vector<Word> out;
    if (is_empty(t)) {
      return out;
    }
    for (auto& w : enumerate_up_to(output_language(v), n)) {
      if (accepts(v, t, w)) {
        out.push_back(std::move(w));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Transducers
  ////////////////////////////////////////////////////////////////////////

  ValenceAutomaton from_transducer(Transducer const&        tr,
                                   GeneratorMorphism const& m) {
    if (!(tr.registers() == m.source())) {
      throw InputError("morphism source does not match the transducer's "
                       "register alphabet");
    }
    ValenceAutomaton out(m.target(), tr.input(), tr.size());
    out.set_initial(tr.initial());
    for (auto f : tr.finals()) {
      out.set_final(f);
    }
    for (auto const& e : tr.edges()) {
      Word output;
      if (e.output) {
        output.push_back(*e.output);
      }
      out.add_edge(e.source, m.apply(e.reg), output, e.target);
    }
    return out;
  }

  std::pair<Transducer, GeneratorMorphism>
  to_transducer(ValenceAutomaton const& v) {
    Alphabet const omega = v.registers();
    Transducer     tr(omega, v.input(), v.size());
    tr.set_initial(v.initial());
    for (auto f : v.finals()) {
      tr.set_final(f);
    }
    for (auto const& e : v.edges()) {
      Word output;
      if (e.output) {
        output.push_back(*e.output);
      }
      tr.add_edge(e.source, e.reg, output, e.target);
    }
    return {std::move(tr), GeneratorMorphism::identity(v.registers())};
  }

  ////////////////////////////////////////////////////////////////////////
  // Zero elimination
  ////////////////////////////////////////////////////////////////////////

  ValenceAutomaton strip_zero_edges(ValenceAutomaton const& v) {
    require_bicyclic(v, "strip_zero_edges");
    ValenceAutomaton out(v.registers(), v.input(), v.size());
    out.set_initial(v.initial());
    for (auto f : v.finals()) {
      out.set_final(f);
    }
    for (auto const& e : v.edges()) {
      if (!has_zero(v.registers(), e.reg)) {
        Word output;
        if (e.output) {
          output.push_back(*e.output);
        }
        out.add_edge(e.source, e.reg, output, e.target);
      }
    }
    return out;
  }

  Nfa zero_component_automaton(ValenceAutomaton const& v) {
    require_bicyclic(v, "zero_component_automaton");
    auto const n = static_cast<State>(v.size());
    // layer 0: no zero edge taken yet; layer 1: at least one
    Nfa c(v.input(), 2 * n);
    c.set_initial(v.initial());
    for (auto f : v.finals()) {
      c.set_final(n + f);
    }
    for (auto const& e : v.edges()) {
      Symbol label = e.output.value_or(kEpsilon);
      if (has_zero(v.registers(), e.reg)) {
        c.add_edge(e.source, label, n + e.target);
      } else {
        c.add_edge(e.source, label, e.target);
      }
      c.add_edge(n + e.source, label, n + e.target);
    }
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // Factorisation and decomposition
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::pair<Word, Word>> factorise(GeneratorAlphabet const& gens,
                                                 Word const&              u,
                                                 Word const&              q,
                                                 Word const&              p) {
    gens.check_word(u);
    if (!is_pop_word(gens, q)) {
      throw InputError("factorise: q must consist of pop generators");
    }
    if (!is_push_word(gens, p)) {
      throw InputError("factorise: p must consist of push generators");
    }
    if (eval_sigma(gens, u) != eval_sigma(gens, concat(q, p))) {
      return std::nullopt;
    }
    Word const q_inv = formal_inverse(gens, q);
    Word const p_inv = formal_inverse(gens, p);
    for (std::size_t k = 0; k <= u.size(); ++k) {
      Word u1(u.begin(), u.begin() + k);
      Word u2(u.begin() + k, u.end());
      if (eval_sigma(gens, concat(q_inv, u1)).is_identity()
          && eval_sigma(gens, concat(u2, p_inv)).is_identity()) {
        return std::make_pair(std::move(u1), std::move(u2));
      }
    }
    // unreachable when sigma(u) = sigma(qp)
    return std::nullopt;
  }

  PolyDecomposition decompose(ValenceAutomaton const& v, TargetSet const& t) {
    check_target(v, t);
    auto const&       gens = v.registers();
    PolyDecomposition out;
    if (contains_zero(t)) {
      out.zero_part
          = TargetedAutomaton{v, finite_subset(gens, {Word{gens.zero()}})};
    }

    // a split point may fall inside a register word, so the core works
    // letter by letter
    auto const [whole_edges, identity] = to_transducer(v);
    auto const rho = with_single_letter_registers(whole_edges);
    auto const one             = identity_target(gens);
    auto const swap            = gens.swap_mapping();
    auto const parts           = split(t).parts;

    for (std::size_t i = 0; i < parts.size(); ++i) {
      // A_Q recognises { (q', eps) : q in Q_i }, A_P { (p', eps) : p in P_i }
      Nfa const a_q = relabel(reverse(parts[i].pops), swap);
      Nfa const a_p = relabel(reverse(parts[i].pushes), swap);

      auto const core_offset = static_cast<State>(a_q.size());
      auto const p_offset    = static_cast<State>(core_offset + rho.size());
      Transducer b(rho.registers(), rho.input(), p_offset + a_p.size());
      b.set_initial(a_q.initial());
      embed_register_nfa(b, a_q, 0);
      for (auto const& e : rho.edges()) {
        Word output;
        if (e.output) {
          output.push_back(*e.output);
        }
        b.add_edge(e.source + core_offset, e.reg, output, e.target + core_offset);
      }
      embed_register_nfa(b, a_p, p_offset);
      for (auto f : a_q.finals()) {
        b.add_edge(f, {}, {}, rho.initial() + core_offset);
      }
      for (auto f : rho.finals()) {
        b.add_edge(f + core_offset, {}, {}, a_p.initial() + p_offset);
      }
      for (auto f : a_p.finals()) {
        b.set_final(f + p_offset);
      }

      ValenceAutomaton const whole = from_transducer(b, identity);
      for (State y = 0; y < rho.size(); ++y) {
        ValenceAutomaton prefix = whole;
        prefix.clear_finals();
        prefix.set_final(y + core_offset);
        ValenceAutomaton suffix = whole;
        suffix.set_initial(y + core_offset);
        if (language_empty(prefix, one) || language_empty(suffix, one)) {
          continue;
        }
        out.pieces.push_back({i,
                              y,
                              TargetedAutomaton{std::move(prefix), one},
                              TargetedAutomaton{std::move(suffix), one}});
      }
    }
    return out;
  }

  std::vector<Word> enumerate_language(PolyDecomposition const& d,
                                       std::size_t              n) {
    std::vector<Word> out;
    if (d.zero_part) {
      out = enumerate_language(d.zero_part->automaton, d.zero_part->target, n);
    }
    for (auto const& piece : d.pieces) {
      auto const left = enumerate_language(
          piece.prefix.automaton, piece.prefix.target, n);
      if (left.empty()) {
        continue;
      }
      auto const right = enumerate_language(
          piece.suffix.automaton, piece.suffix.target, n);
      for (auto const& a : left) {
        for (auto const& b : right) {
          if (a.size() + b.size() <= n) {
            out.push_back(concat(a, b));
          }
        }
      }
    }
    return sorted_unique(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Product registers
  ////////////////////////////////////////////////////////////////////////

  ProductValenceAutomaton concat_product(ValenceAutomaton const& v1,
                                         ValenceAutomaton const& v2) {
    if (!(v1.input() == v2.input())) {
      throw InputError("concat_product: input alphabets differ");
    }
    auto const offset = static_cast<State>(v1.size());
    ProductValenceAutomaton out(
        v1.registers(), v2.registers(), v1.input(), v1.size() + v2.size());
    out.set_initial(v1.initial());
    for (auto const& e : v1.edges()) {
      out.add_edge({e.source, e.reg, {}, e.output, e.target});
    }
    for (auto const& e : v2.edges()) {
      out.add_edge({e.source + offset, {}, e.reg, e.output, e.target + offset});
    }
    for (auto f : v1.finals()) {
      out.add_edge({f, {}, {}, std::nullopt, v2.initial() + offset});
    }
    for (auto f : v2.finals()) {
      out.set_final(f + offset);
    }
    return out;
  }

  Verdict product_accepts_bounded(ProductValenceAutomaton const& pv,
                                  Word const&                    w,
                                  std::size_t                    fuel) {
    pv.input().check_word(w);
    using Config = std::tuple<State, std::size_t, Element, Element>;

    // register word values, evaluated once per edge
    std::vector<std::pair<Element, Element>> values;
    std::vector<std::vector<std::size_t>>    leaving(pv.size());
    for (std::size_t i = 0; i < pv.edges().size(); ++i) {
      auto const& e = pv.edges()[i];
      values.emplace_back(eval_sigma(pv.left(), e.left),
                          eval_sigma(pv.right(), e.right));
      leaving[e.source].push_back(i);
    }

    std::set<Config>   seen;
    std::deque<Config> queue;
    Config             start{pv.initial(), 0, Element(), Element()};
    seen.insert(start);
    queue.push_back(start);
    std::size_t expanded = 0;
    while (!queue.empty()) {
      if (expanded == fuel) {
        return Verdict::Unknown;
      }
      ++expanded;
      auto [s, pos, left, right] = std::move(queue.front());
      queue.pop_front();
      if (pos == w.size() && pv.is_final(s) && left.is_identity()
          && right.is_identity()) {
        return Verdict::Yes;
      }
      for (auto i : leaving[s]) {
        auto const& e        = pv.edges()[i];
        std::size_t next_pos = pos;
        if (e.output) {
          if (pos == w.size() || *e.output != w[pos]) {
            continue;
          }
          ++next_pos;
        }
        // zero never returns to the identity
        Element l = multiply(left, values[i].first);
        Element r = multiply(right, values[i].second);
        if (l.is_zero() || r.is_zero()) {
          continue;
        }
        Config next{e.target, next_pos, std::move(l), std::move(r)};
        if (seen.insert(next).second) {
          queue.push_back(std::move(next));
        }
      }
    }
    return Verdict::No;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fixtures
  ////////////////////////////////////////////////////////////////////////

  TargetedAutomaton figure1_example() {
    GeneratorAlphabet const gens(StackAlphabet{"x"});
    Alphabet const          input{"a", "b"};
    Symbol const            p = gens.push(0), q = gens.pop(0);
    Symbol const            a = 0, b = 1;

    ValenceAutomaton v(gens, input, 4);
    v.set_initial(0);
    v.set_final(3);
    v.add_edge(0, {p}, {a}, 0);
    v.add_edge(1, {q}, {b}, 1);
    v.add_edge(2, {p}, {a}, 2);
    v.add_edge(3, {q}, {b}, 3);
    v.add_edge(0, {}, {}, 1);
    v.add_edge(1, {q, p}, {}, 2);
    v.add_edge(2, {}, {}, 3);
    return {std::move(v), finite_subset(gens, {Word{q, p}})};
  }

  TargetedAutomaton anbn_example() {
    GeneratorAlphabet const gens(StackAlphabet{"x"});
    Alphabet const          input{"a", "b"};
    ValenceAutomaton        v(gens, input, 2);
    v.set_initial(0);
    v.set_final(1);
    v.add_edge(0, {gens.push(0)}, {0}, 0);
    v.add_edge(0, {}, {}, 1);
    v.add_edge(1, {gens.pop(0)}, {1}, 1);
    return {std::move(v), identity_target(gens)};
  }

}  // namespace polymon
