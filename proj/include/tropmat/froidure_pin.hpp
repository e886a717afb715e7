#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "tropmat/generators.hpp"
#include "tropmat/word.hpp"

namespace tropmat {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// key -> element index. Direct-addressed when the key space is small
/// enough to afford one slot per key, open addressing otherwise.
class KeyIndexMap {
 public:
  static constexpr std::uint32_t npos = ~std::uint32_t{0};

  explicit KeyIndexMap(std::uint64_t key_space) {
    if (key_space <= kDirectSlots) {
      direct_.assign(static_cast<std::size_t>(key_space), npos);
    } else {
      rehash(1u << 16);
    }
  }

  std::uint32_t find(std::uint64_t key) const {
    if (!direct_.empty()) return direct_[static_cast<std::size_t>(key)];
    std::size_t pos = static_cast<std::size_t>(splitmix64(key)) & mask_;
    while (vals_[pos] != npos) {
      if (hkeys_[pos] == key) return vals_[pos];
      pos = (pos + 1) & mask_;
    }
    return npos;
  }

  void insert(std::uint64_t key, std::uint32_t idx) {
    if (!direct_.empty()) {
      direct_[static_cast<std::size_t>(key)] = idx;
      return;
    }
    if ((count_ + 1) * 5 > (mask_ + 1) * 3) rehash((mask_ + 1) * 2);
    std::size_t pos = static_cast<std::size_t>(splitmix64(key)) & mask_;
    while (vals_[pos] != npos) pos = (pos + 1) & mask_;
    hkeys_[pos] = key;
    vals_[pos] = idx;
    ++count_;
  }

 private:
  static constexpr std::uint64_t kDirectSlots = std::uint64_t{1} << 27;

  void rehash(std::size_t capacity) {
    std::vector<std::uint64_t> old_keys = std::move(hkeys_);
    std::vector<std::uint32_t> old_vals = std::move(vals_);
    hkeys_.assign(capacity, 0);
    vals_.assign(capacity, npos);
    mask_ = capacity - 1;
    count_ = 0;
    for (std::size_t i = 0; i < old_vals.size(); ++i) {
      if (old_vals[i] != npos) insert(old_keys[i], old_vals[i]);
    }
  }

  std::vector<std::uint32_t> direct_;
  std::vector<std::uint64_t> hkeys_;
  std::vector<std::uint32_t> vals_;
  std::size_t mask_ = 0;
  std::size_t count_ = 0;
};

/// Flat matrix cells in a family-specific arithmetic domain chosen so the
/// inner product loop is branch-light:
///   min-plus: 0..t are payloads, t+1 absorbs (and is the fold's neutral);
///   max-plus: 0 absorbs (neutral under max), payload v is stored as v+1.
using Cells = std::array<std::uint16_t, 9>;

struct DenseOps {
  Family fam;
  int n;
  std::uint32_t t;
  std::uint64_t radix;  // t + 2

  static DenseOps make(SemiringSpec spec, int n) {
    if (!spec.is_quotient()) {
      throw SpecMismatchError("dense enumeration requires a quotient spec");
    }
    if (spec.threshold() > 65534) {
      throw RangeError("quotient threshold too large for dense enumeration");
    }
    return DenseOps{spec.family(), n,
                    static_cast<std::uint32_t>(spec.threshold()),
                    spec.threshold() + 2};
  }

  std::uint64_t key_space() const {
    return checked_pow_u64(radix, static_cast<unsigned>(n * n));
  }

  std::uint16_t arith_absorb() const {
    return fam == Family::MinPlus ? static_cast<std::uint16_t>(t + 1) : 0;
  }
  std::uint16_t arith_one() const { return fam == Family::MinPlus ? 0 : 1; }

  Cells identity() const {
    Cells out;
    out.fill(arith_absorb());
    for (int i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i * n + i)] = arith_one();
    }
    return out;
  }

  Cells from_matrix(const Matrix& m) const {
    Cells out{};
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        const Value v = m.at(r, c);
        std::uint16_t cell;
        if (fam == Family::MinPlus) {
          cell = v.is_absorb() ? static_cast<std::uint16_t>(t + 1)
                               : static_cast<std::uint16_t>(v.payload());
        } else {
          cell = v.is_absorb() ? 0
                               : static_cast<std::uint16_t>(v.payload() + 1);
        }
        out[static_cast<std::size_t>(r * n + c)] = cell;
      }
    }
    return out;
  }

  std::uint64_t encode(const Cells& cells) const {
    std::uint64_t key = 0;
    for (int idx = n * n - 1; idx >= 0; --idx) {
      const std::uint32_t cell = cells[static_cast<std::size_t>(idx)];
      std::uint64_t digit;
      if (fam == Family::MinPlus) {
        digit = cell;  // arithmetic domain equals the digit domain
      } else {
        digit = cell == 0 ? t + 1 : cell - 1;
      }
      key = key * radix + digit;
    }
    return key;
  }

  Cells decode(std::uint64_t key) const {
    Cells out{};
    for (int idx = 0; idx < n * n; ++idx) {
      const std::uint64_t digit = key % radix;
      key /= radix;
      std::uint16_t cell;
      if (fam == Family::MinPlus) {
        cell = static_cast<std::uint16_t>(digit);
      } else {
        cell = digit == t + 1 ? 0 : static_cast<std::uint16_t>(digit + 1);
      }
      out[static_cast<std::size_t>(idx)] = cell;
    }
    return out;
  }

  int absorb_count(std::uint64_t key) const {
    const std::uint64_t absorb_digit = t + 1;
    int count = 0;
    for (int idx = 0; idx < n * n; ++idx) {
      if (key % radix == absorb_digit) ++count;
      key /= radix;
    }
    return count;
  }

  void mul(const Cells& a, const Cells& b, Cells& out) const {
    if (fam == Family::MinPlus) {
      const std::uint32_t absorb = t + 1;
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          std::uint32_t best = absorb;
          for (int k = 0; k < n; ++k) {
            const std::uint32_t x = a[static_cast<std::size_t>(r * n + k)];
            const std::uint32_t y = b[static_cast<std::size_t>(k * n + c)];
            if (x == absorb || y == absorb) continue;
            std::uint32_t s = x + y;
            if (s > t) s = t;
            if (s < best) best = s;
          }
          out[static_cast<std::size_t>(r * n + c)] =
              static_cast<std::uint16_t>(best);
        }
      }
    } else {
      const std::uint32_t cap = t + 1;
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          std::uint32_t best = 0;
          for (int k = 0; k < n; ++k) {
            const std::uint32_t x = a[static_cast<std::size_t>(r * n + k)];
            const std::uint32_t y = b[static_cast<std::size_t>(k * n + c)];
            if (x == 0 || y == 0) continue;
            std::uint32_t s = x + y - 1;
            if (s > cap) s = cap;
            if (s > best) best = s;
          }
          out[static_cast<std::size_t>(r * n + c)] =
              static_cast<std::uint16_t>(best);
        }
      }
    }
  }
};

}  // namespace detail

struct EnumOptions {
  std::uint64_t element_limit = 50'000'000;
  bool keep_cayley = true;
  /// Adjoin the identity as the empty word (monoid closure); when false the
  /// generators themselves seed the enumeration (semigroup closure).
  bool monoid = true;
  /// Stop as soon as this canonical key is discovered. The result is then
  /// truncated (complete == false) with stop_key_found set.
  std::optional<std::uint64_t> stop_key;
};

/// Everything the enumeration produces: elements as canonical keys in
/// short-lex discovery order, one minimal word per element (stored as
/// prefix links), and the right Cayley graph.
class EnumerationResult {
 public:
  static constexpr std::uint32_t npos = ~std::uint32_t{0};

  GeneratorSet generators;
  std::vector<std::uint64_t> keys;
  std::vector<std::uint32_t> parent;  // element index of the word's prefix
  std::vector<std::uint32_t> letter;  // generator index of the last letter
  std::vector<std::uint32_t> cayley;  // row per processed element
  bool complete = false;
  bool stop_key_found = false;
  bool monoid = true;

  std::size_t size() const { return keys.size(); }

  Matrix matrix_at(std::size_t idx) const {
    check_index(idx);
    return Matrix::decode(generators.spec, generators.n, keys[idx]);
  }

  /// Index of the element whose product row continues from `e` by
  /// generator `g`.
  std::uint32_t cayley_at(std::size_t e, std::size_t g) const {
    if (e * generators.size() + g >= cayley.size()) {
      throw RangeError("cayley index out of range");
    }
    return cayley[e * generators.size() + g];
  }

  /// The stored short-lex minimal word of an element.
  Word word_at(std::size_t idx) const {
    check_index(idx);
    std::vector<std::uint32_t> letters;
    std::uint32_t cur = static_cast<std::uint32_t>(idx);
    while (cur != npos) {
      if (letter[cur] != npos) letters.push_back(letter[cur]);
      cur = parent[cur];
    }
    Word out;
    out.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      out.push_back(generators.descriptors[*it]);
    }
    return out;
  }

  /// Membership by canonical key; requires a complete result.
  std::optional<std::size_t> member(const Matrix& m) const {
    if (m.spec() != generators.spec || m.dim() != generators.n) {
      throw SpecMismatchError("membership query across different specs");
    }
    if (!complete) {
      throw LimitExceededError("membership requires a complete enumeration");
    }
    const std::uint64_t key = m.encode();
    auto it = std::lower_bound(
        by_key_.begin(), by_key_.end(), key,
        [this](std::uint32_t idx, std::uint64_t k) { return keys[idx] < k; });
    if (it == by_key_.end() || keys[*it] != key) return std::nullopt;
    return *it;
  }

  void build_member_index() {
    by_key_.resize(keys.size());
    for (std::uint32_t i = 0; i < by_key_.size(); ++i) by_key_[i] = i;
    std::sort(by_key_.begin(), by_key_.end(),
              [this](std::uint32_t a, std::uint32_t b) {
                return keys[a] < keys[b];
              });
  }

 private:
  void check_index(std::size_t idx) const {
    if (idx >= keys.size()) {
      throw RangeError("element index out of range");
    }
  }

  std::vector<std::uint32_t> by_key_;
};

/// Breadth-first closure of the monoid (or semigroup) generated by a set of
/// matrices over a finite quotient, producing elements in short-lex order of
/// their minimal words together with the right Cayley graph. Deterministic:
/// identical input yields identical element order and words.
inline EnumerationResult enumerate(const GeneratorSet& gens,
                                   const EnumOptions& options = {}) {
  const auto ops = detail::DenseOps::make(gens.spec, gens.n);
  const std::uint64_t space = ops.key_space();
  const std::size_t gen_count = gens.size();
  for (const Matrix& m : gens.matrices) {
    if (m.spec() != gens.spec || m.dim() != gens.n) {
      throw SpecMismatchError("generator does not match the set's spec");
    }
  }

  EnumerationResult result;
  result.generators = gens;
  result.monoid = options.monoid;

  const std::uint64_t limit =
      std::min<std::uint64_t>({options.element_limit, space, ~std::uint32_t{0} - 1});

  std::vector<detail::Cells> gen_cells(gen_count);
  for (std::size_t g = 0; g < gen_count; ++g) {
    gen_cells[g] = ops.from_matrix(gens.matrices[g]);
  }

  detail::KeyIndexMap table(space);
  bool truncated = false;

  const auto add_element = [&](std::uint64_t key, std::uint32_t par,
                               std::uint32_t let) -> std::uint32_t {
    if (result.keys.size() >= limit) {
      truncated = true;
      return EnumerationResult::npos;
    }
    const auto idx = static_cast<std::uint32_t>(result.keys.size());
    table.insert(key, idx);
    result.keys.push_back(key);
    result.parent.push_back(par);
    result.letter.push_back(let);
    if (options.stop_key && key == *options.stop_key) {
      result.stop_key_found = true;
      truncated = true;
    }
    return idx;
  };

  if (options.monoid) {
    add_element(ops.encode(ops.identity()), EnumerationResult::npos,
                EnumerationResult::npos);
  } else {
    for (std::size_t g = 0; g < gen_count && !truncated; ++g) {
      const std::uint64_t key = ops.encode(gen_cells[g]);
      if (table.find(key) == detail::KeyIndexMap::npos) {
        add_element(key, EnumerationResult::npos,
                    static_cast<std::uint32_t>(g));
      }
    }
  }

  detail::Cells product;
  std::size_t processed = 0;
  for (; processed < result.keys.size() && !truncated; ++processed) {
    const detail::Cells current = ops.decode(result.keys[processed]);
    if (options.keep_cayley) {
      result.cayley.resize((processed + 1) * gen_count);
    }
    for (std::size_t g = 0; g < gen_count; ++g) {
      ops.mul(current, gen_cells[g], product);
      const std::uint64_t key = ops.encode(product);
      std::uint32_t idx = table.find(key);
      if (idx == detail::KeyIndexMap::npos) {
        idx = add_element(key, static_cast<std::uint32_t>(processed),
                          static_cast<std::uint32_t>(g));
        if (truncated) break;
      }
      if (options.keep_cayley) {
        result.cayley[processed * gen_count + g] = idx;
      }
    }
  }

  result.complete = !truncated;
  if (result.complete) result.build_member_index();
  return result;
}

/// Test oracle for `enumerate`: the obvious fixpoint iteration
/// E <- E u E*E starting from the generators plus the identity, computed
/// with the generic matrix product. Returns the sorted canonical keys.
inline std::vector<std::uint64_t> naive_closure(const GeneratorSet& gens) {
  if (!gens.spec.is_quotient()) {
    throw SpecMismatchError("naive closure requires a quotient spec");
  }
  std::vector<Matrix> elements;
  std::unordered_set<std::uint64_t> seen;
  const auto add = [&](const Matrix& m) {
    if (seen.insert(m.encode()).second) elements.push_back(m);
  };
  add(Matrix::identity(gens.spec, gens.n));
  for (const Matrix& m : gens.matrices) add(m);

  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t current = elements.size();
    for (std::size_t i = 0; i < current; ++i) {
      for (std::size_t j = 0; j < current; ++j) {
        const Matrix p = elements[i] * elements[j];
        if (seen.insert(p.encode()).second) {
          elements.push_back(p);
          grew = true;
        }
      }
    }
  }

  std::vector<std::uint64_t> keys(seen.begin(), seen.end());
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace tropmat
