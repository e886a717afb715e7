#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tropmat/froidure_pin.hpp"

namespace tropmat {

namespace detail {

/// Monoid closure that can be extended one generator at a time: the element
/// set already closed under the old generators is swept with the new one,
/// then the frontier is closed under all generators. Equivalent to a fresh
/// closure of the extended set, without recomputing it.
class IncrementalClosure {
 public:
  IncrementalClosure(SemiringSpec spec, int n)
      : ops_(DenseOps::make(spec, n)), table_(ops_.key_space()) {
    const std::uint64_t key = ops_.encode(ops_.identity());
    table_.insert(key, 0);
    keys_.push_back(key);
  }

  std::uint64_t size() const { return keys_.size(); }

  bool contains(std::uint64_t key) const {
    return table_.find(key) != KeyIndexMap::npos;
  }

  void add_generator(std::uint64_t gen_key) {
    gens_.push_back(ops_.decode(gen_key));
    const Cells& gen = gens_.back();
    Cells product;
    const std::size_t old_size = keys_.size();
    for (std::size_t i = 0; i < old_size; ++i) {
      ops_.mul(ops_.decode(keys_[i]), gen, product);
      maybe_add(product);
    }
    for (std::size_t u = old_size; u < keys_.size(); ++u) {
      const Cells current = ops_.decode(keys_[u]);
      for (const Cells& g : gens_) {
        ops_.mul(current, g, product);
        maybe_add(product);
      }
    }
  }

 private:
  void maybe_add(const Cells& cells) {
    const std::uint64_t key = ops_.encode(cells);
    if (table_.find(key) == KeyIndexMap::npos) {
      table_.insert(key, static_cast<std::uint32_t>(keys_.size()));
      keys_.push_back(key);
    }
  }

  DenseOps ops_;
  KeyIndexMap table_;
  std::vector<std::uint64_t> keys_;
  std::vector<Cells> gens_;
};

/// Does the semigroup generated by `gens` minus the masked indices contain
/// the element with this canonical key? Enumerates with an early stop.
inline bool semigroup_contains(const GeneratorSet& gens,
                               const std::vector<bool>& excluded,
                               std::uint64_t target_key,
                               std::uint64_t element_limit) {
  GeneratorSet rest;
  rest.spec = gens.spec;
  rest.n = gens.n;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!excluded[i]) {
      rest.descriptors.push_back(gens.descriptors[i]);
      rest.matrices.push_back(gens.matrices[i]);
    }
  }
  EnumOptions options;
  options.monoid = false;
  options.keep_cayley = false;
  options.stop_key = target_key;
  options.element_limit = element_limit;
  const EnumerationResult result = enumerate(rest, options);
  if (result.stop_key_found) return true;
  if (!result.complete) {
    throw LimitExceededError(
        "element limit hit before membership could be decided");
  }
  return false;
}

}  // namespace detail

constexpr std::uint64_t kDefaultElementLimit = 50'000'000;

struct FullGenerationReport {
  std::uint64_t generated_size = 0;
  std::uint64_t expected_size = 0;
  bool full = false;
};

/// Does the set generate the whole matrix monoid over its quotient carrier?
/// The expected size is (t+2)^(n*n) by counting.
inline FullGenerationReport verify_full(
    const GeneratorSet& gens,
    std::uint64_t element_limit = kDefaultElementLimit) {
  const std::uint64_t expected = Matrix::key_space(gens.spec, gens.n);
  EnumOptions options;
  options.keep_cayley = false;
  options.element_limit = element_limit;
  const EnumerationResult result = enumerate(gens, options);
  if (!result.complete) {
    throw LimitExceededError("enumeration hit the element limit at " +
                             std::to_string(result.size()) + " elements");
  }
  return {result.size(), expected, result.size() == expected};
}

struct IrredundancyReport {
  /// redundant[g]: generator g lies in the semigroup generated by the others.
  std::vector<bool> redundant;
  bool irredundant = false;
};

/// Per-generator redundancy, using semigroup closure (the identity is not
/// adjoined for free, though it may arise as a product).
inline IrredundancyReport verify_irredundant(
    const GeneratorSet& gens,
    std::uint64_t element_limit = kDefaultElementLimit) {
  IrredundancyReport report;
  report.redundant.assign(gens.size(), false);
  std::vector<bool> excluded(gens.size(), false);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    excluded.assign(gens.size(), false);
    excluded[g] = true;
    report.redundant[g] = detail::semigroup_contains(
        gens, excluded, gens.matrices[g].encode(), element_limit);
  }
  report.irredundant =
      std::none_of(report.redundant.begin(), report.redundant.end(),
                   [](bool b) { return b; });
  return report;
}

struct ConjectureReport {
  std::uint64_t t = 0;
  std::uint64_t generator_count = 0;
  std::uint64_t formula_count = 0;
  std::uint64_t generated_size = 0;
  std::uint64_t expected_size = 0;
  bool verified = false;
};

/// Reproduce the 3x3 claim at threshold t: the displayed families number
/// (2t^3+9t^2+19t+36)/6 and generate all (t+2)^9 matrices.
inline ConjectureReport check_conjecture(
    std::uint64_t t, std::uint64_t element_limit = kDefaultElementLimit) {
  const GeneratorSet gens = min_plus_3x3_conjecture_generators(t);
  ConjectureReport report;
  report.t = t;
  report.generator_count = gens.size();
  report.formula_count = min_plus_3x3_conjecture_generator_count(t);
  report.expected_size = Matrix::key_space(gens.spec, 3);
  EnumOptions options;
  options.keep_cayley = false;
  options.element_limit = element_limit;
  const EnumerationResult result = enumerate(gens, options);
  if (!result.complete) {
    throw LimitExceededError("conjecture check hit the element limit at " +
                             std::to_string(result.size()) + " elements");
  }
  report.generated_size = result.size();
  report.verified = report.generator_count == report.formula_count &&
                    report.generated_size == report.expected_size;
  return report;
}

/// Greedily build an irredundant generating set of the full matrix monoid:
/// scan all matrices ordered by descending count of absorbing entries, then
/// ascending canonical key, adding any matrix not yet in the closure; then
/// sweep once, dropping every generator contained in the semigroup generated
/// by the rest. The result generates the full monoid and is irredundant.
inline GeneratorSet small_generating_set(
    SemiringSpec spec, int n,
    std::uint64_t element_limit = kDefaultElementLimit) {
  const std::uint64_t space = Matrix::key_space(spec, n);
  if (space > element_limit) {
    throw LimitExceededError("matrix space " + std::to_string(space) +
                             " exceeds the element limit");
  }
  const auto ops = detail::DenseOps::make(spec, n);

  std::vector<std::uint8_t> absorbs(static_cast<std::size_t>(space));
  for (std::uint64_t key = 0; key < space; ++key) {
    absorbs[static_cast<std::size_t>(key)] =
        static_cast<std::uint8_t>(ops.absorb_count(key));
  }
  std::vector<std::uint64_t> order(static_cast<std::size_t>(space));
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  std::sort(order.begin(), order.end(),
            [&absorbs](std::uint64_t a, std::uint64_t b) {
              const std::uint8_t ca = absorbs[static_cast<std::size_t>(a)];
              const std::uint8_t cb = absorbs[static_cast<std::size_t>(b)];
              return ca != cb ? ca > cb : a < b;
            });

  detail::IncrementalClosure closure(spec, n);
  std::vector<std::uint64_t> picked;
  for (const std::uint64_t key : order) {
    if (closure.size() == space) break;
    if (!closure.contains(key)) {
      closure.add_generator(key);
      picked.push_back(key);
    }
  }

  GeneratorSet greedy;
  greedy.spec = spec;
  greedy.n = n;
  for (std::size_t i = 0; i < picked.size(); ++i) {
    greedy.descriptors.push_back(Descriptor::opaque(i));
    greedy.matrices.push_back(Matrix::decode(spec, n, picked[i]));
  }

  // Sweep in reverse pick order: the late, entry-rich picks are tested (and
  // often dropped) first, which lands on smaller final sets than the forward
  // sweep on every case tried.
  std::vector<bool> removed(picked.size(), false);
  for (std::size_t step = picked.size(); step-- > 0;) {
    std::vector<bool> excluded = removed;
    excluded[step] = true;
    if (detail::semigroup_contains(greedy, excluded, picked[step],
                                   element_limit)) {
      removed[step] = true;
    }
  }

  std::vector<Matrix> survivors;
  for (std::size_t g = 0; g < picked.size(); ++g) {
    if (!removed[g]) survivors.push_back(greedy.matrices[g]);
  }
  return custom_generator_set(spec, n, std::move(survivors));
}

}  // namespace tropmat
