#pragma once

// Evaluation of Sweedler-notation expressions.
//
// An expression is a list of output words. Each word is an ordered product of
// factors, and each factor names one leg of a source tensor, optionally
// decorated by S, S^{-1}, S^2 or S^{-2}. Every leg of every source is used
// exactly once. For example q_R = X^1 (x) S^{-1}(alpha X^3) X^2 is the two
// words [X1] and [S^{-1}X3, S^{-1}alpha, X2] over sources Phi and alpha.
//
// Sources are expanded in the order they were added. The partial state keeps,
// for each maximal run of already-expanded neighbouring factors, a single
// basis index; runs that become adjacent are multiplied out immediately, and
// equal states are merged. This keeps the state space close to the size of the
// partial products instead of the product of all source sizes.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qhopf/error.hpp"
#include "qhopf/structure.hpp"
#include "qhopf/tensor.hpp"
#include "qhopf/tensor_ops.hpp"

namespace qhopf {

struct Factor {
  unsigned source;
  unsigned leg;
  Map map = Map::Id;
};

struct Word {
  std::vector<Factor> factors;
  Map post = Map::Id;                // applied to the finished product
  std::optional<Vector> functional;  // pairs the word with a functional, dropping the slot

  Word() = default;
  Word(std::initializer_list<Factor> f) : factors(f) {}
  Word(std::vector<Factor> f) : factors(std::move(f)) {}  // NOLINT(google-explicit-constructor)

  Word&& then(Map m) && {
    post = m;
    return std::move(*this);
  }
  Word&& paired(Vector phi) && {
    functional = std::move(phi);
    return std::move(*this);
  }
};

class Contraction {
 public:
  explicit Contraction(const Structure& h) : h_(h) {}

  /// Registers a source; returns its id. Sources expand in registration order.
  unsigned add(TensorElement t) {
    if (t.dim() != h_.dim()) throw Error(ErrorCode::ShapeMismatch, "contraction source dimension");
    sources_.push_back(std::move(t));
    return static_cast<unsigned>(sources_.size() - 1);
  }

  unsigned add(const Vector& v) { return add(element_tensor(v)); }

  /// Sum_i e_i (x) e_i, used to quantify over basis elements.
  unsigned add_identity() { return add(identity_tensor(h_.dim())); }

  TensorElement evaluate(const std::vector<Word>& words) const;

 private:
  struct Run {
    std::size_t word;
    std::size_t begin;
    std::size_t end;  // exclusive
  };
  struct Component {
    bool old;
    std::size_t index;  // old run index, or leg
    Map map;
  };
  struct Key {
    std::vector<std::uint32_t> v;
    bool operator==(const Key& o) const { return v == o.v; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (auto x : k.v) h = (h ^ x) * 1099511628211ull;
      return h;
    }
  };
  using States = std::unordered_map<Key, Scalar, KeyHash>;

  SparseVec multiply_sparse(const SparseVec& a, const SparseVec& b, Accumulator& acc) const {
    for (const auto& [i, ci] : a)
      for (const auto& [j, cj] : b) {
        const auto& prod = h_.product(i, j);
        if (prod.empty()) continue;
        const Scalar c = ci * cj;
        for (const auto& [k, m] : prod) acc.add(k, c * m);
      }
    return acc.take();
  }

  const Structure& h_;
  std::vector<TensorElement> sources_;
};

inline TensorElement Contraction::evaluate(const std::vector<Word>& words) const {
  const std::size_t n = h_.dim();
  // Check the leg usage.
  std::vector<std::vector<int>> used(sources_.size());
  for (std::size_t s = 0; s < sources_.size(); ++s) used[s].assign(sources_[s].arity(), 0);
  for (const auto& w : words)
    for (const auto& f : w.factors) {
      if (f.source >= sources_.size() || f.leg >= sources_[f.source].arity()) {
        throw Error(ErrorCode::ShapeMismatch, "factor refers to a missing source leg");
      }
      ++used[f.source][f.leg];
    }
  for (std::size_t s = 0; s < sources_.size(); ++s)
    for (auto u : used[s])
      if (u != 1) throw Error(ErrorCode::ShapeMismatch, "every source leg must be used exactly once");

  std::vector<std::vector<bool>> done(words.size());
  for (std::size_t w = 0; w < words.size(); ++w) done[w].assign(words[w].factors.size(), false);

  auto layout = [&]() {
    std::vector<Run> runs;
    for (std::size_t w = 0; w < words.size(); ++w) {
      const auto& d = done[w];
      std::size_t p = 0;
      while (p < d.size()) {
        if (!d[p]) {
          ++p;
          continue;
        }
        std::size_t q = p;
        while (q < d.size() && d[q]) ++q;
        runs.push_back({w, p, q});
        p = q;
      }
    }
    return runs;
  };

  States states;
  states.emplace(Key{}, Scalar(1));
  std::vector<Run> runs;
  Accumulator acc(n);

  for (std::size_t s = 0; s < sources_.size(); ++s) {
    const TensorElement& src = sources_[s];
    for (std::size_t w = 0; w < words.size(); ++w)
      for (std::size_t p = 0; p < words[w].factors.size(); ++p)
        if (words[w].factors[p].source == s) done[w][p] = true;
    std::vector<Run> next = layout();

    // Component lists of the new runs.
    std::vector<std::vector<Component>> plan(next.size());
    std::vector<int> passthrough(next.size(), -1);
    for (std::size_t r = 0; r < next.size(); ++r) {
      const Run& run = next[r];
      std::size_t p = run.begin;
      while (p < run.end) {
        const Factor& f = words[run.word].factors[p];
        if (f.source == s) {
          plan[r].push_back({false, f.leg, f.map});
          ++p;
          continue;
        }
        std::size_t k = 0;
        while (!(runs[k].word == run.word && runs[k].begin == p)) ++k;
        plan[r].push_back({true, k, Map::Id});
        p = runs[k].end;
      }
      if (plan[r].size() == 1 && plan[r][0].old) passthrough[r] = static_cast<int>(plan[r][0].index);
    }

    States out;
    std::vector<SparseVec> values(next.size());
    std::vector<const SparseVec*> ptrs(next.size());
    std::vector<std::size_t> pos(next.size());
    for (const auto& [flat, tc] : src.terms()) {
      const auto legs = src.unflatten(flat);
      for (const auto& [key, sc] : states) {
        bool zero = false;
        for (std::size_t r = 0; r < next.size() && !zero; ++r) {
          if (passthrough[r] >= 0) {
            values[r] = {{key.v[passthrough[r]], Scalar(1)}};
            continue;
          }
          SparseVec cur;
          bool first = true;
          for (const auto& c : plan[r]) {
            SparseVec piece;
            if (c.old) {
              piece = {{key.v[c.index], Scalar(1)}};
            } else {
              const auto i = static_cast<std::uint32_t>(legs[c.index]);
              piece = c.map == Map::Id ? SparseVec{{i, Scalar(1)}} : h_.image(c.map, i);
            }
            if (first) {
              cur = std::move(piece);
              first = false;
            } else {
              cur = multiply_sparse(cur, piece, acc);
            }
            if (cur.empty()) break;
          }
          if (cur.empty()) zero = true;
          values[r] = std::move(cur);
        }
        if (zero) continue;
        const Scalar base = tc * sc;
        // Cartesian product over runs.
        std::fill(pos.begin(), pos.end(), 0);
        while (true) {
          Key k;
          k.v.resize(next.size());
          Scalar c = base;
          for (std::size_t r = 0; r < next.size(); ++r) {
            const auto& [idx, val] = values[r][pos[r]];
            k.v[r] = idx;
            if (!val.is_one()) c *= val;
          }
          auto [it, inserted] = out.try_emplace(std::move(k), c);
          if (!inserted) it->second += c;
          std::size_t r = next.size();
          bool finished = true;
          while (r > 0) {
            --r;
            if (++pos[r] < values[r].size()) {
              finished = false;
              break;
            }
            pos[r] = 0;
          }
          if (finished) break;
        }
      }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    states = std::move(out);
    runs = std::move(next);
  }

  // Every nonempty word is now a single run.
  std::vector<int> run_of_word(words.size(), -1);
  for (std::size_t r = 0; r < runs.size(); ++r) run_of_word[runs[r].word] = static_cast<int>(r);
  std::size_t out_arity = 0;
  for (const auto& w : words)
    if (!w.functional) ++out_arity;

  TensorBuilder b(n, out_arity);
  const SparseVec unit = h_.unit();
  std::vector<SparseVec> slot_values(words.size());
  std::vector<const SparseVec*> ptrs;
  for (const auto& [key, sc] : states) {
    Scalar coeff = sc;
    ptrs.clear();
    bool zero = false;
    for (std::size_t w = 0; w < words.size() && !zero; ++w) {
      SparseVec v = run_of_word[w] < 0 ? unit : SparseVec{{key.v[run_of_word[w]], Scalar(1)}};
      if (words[w].post != Map::Id) {
        SparseVec mapped;
        for (const auto& [i, c] : v)
          for (const auto& [k, m] : h_.image(words[w].post, i)) acc.add(k, c * m);
        v = acc.take();
      }
      if (words[w].functional) {
        Scalar pairing;
        for (const auto& [i, c] : v) pairing += c * (*words[w].functional)[i];
        if (pairing.is_zero()) zero = true;
        coeff *= pairing;
        continue;
      }
      if (v.empty()) zero = true;
      slot_values[w] = std::move(v);
      ptrs.push_back(&slot_values[w]);
    }
    if (zero) continue;
    detail::add_outer(b, n, ptrs, coeff);
  }
  return std::move(b).build();
}

/// One-shot evaluation: sources are registered in the given order.
inline TensorElement contract(const Structure& h, std::vector<TensorElement> sources, const std::vector<Word>& words) {
  Contraction c(h);
  for (auto& s : sources) c.add(std::move(s));
  return c.evaluate(words);
}

}  // namespace qhopf
