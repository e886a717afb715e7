#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tropmat/errors.hpp"
#include "tropmat/semiring.hpp"

namespace tropmat {

namespace detail {

/// base^exp with overflow detection; RangeError when the result does not fit.
inline std::uint64_t checked_pow_u64(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) {
      throw RangeError("power exceeds 64-bit range");
    }
  }
  return out;
}

inline void split_rows(std::string_view text, char sep,
                       std::vector<std::string_view>& out) {
  out.clear();
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

inline void split_tokens(std::string_view text,
                         std::vector<std::string_view>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
}

}  // namespace detail

/// A square matrix (n = 2 or 3) over a fixed semiring, with the tropical
/// matrix product. Matrices are immutable values in practice: every
/// operation returns a fresh matrix.
///
/// Equality demands an identical spec; comparing across specs throws rather
/// than returning false.
class Matrix {
 public:
  Matrix(SemiringSpec spec, int n) : spec_(spec), n_(check_dim(n)) {
    entries_.fill(spec.zero());
  }

  static Matrix identity(SemiringSpec spec, int n) {
    Matrix out(spec, n);
    for (int i = 0; i < n; ++i) out.at(i, i) = spec.one();
    return out;
  }

  static Matrix from_entries(SemiringSpec spec, int n,
                             std::initializer_list<Value> row_major) {
    Matrix out(spec, n);
    if (static_cast<int>(row_major.size()) != n * n) {
      throw RangeError("entry list does not match dimension");
    }
    int idx = 0;
    for (Value v : row_major) {
      if (!spec.valid(v)) {
        throw RangeError("entry invalid under spec " + spec.name());
      }
      out.entries_[static_cast<std::size_t>(idx++)] = v;
    }
    return out;
  }

  SemiringSpec spec() const { return spec_; }
  int dim() const { return n_; }

  Value at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r * n_ + c)];
  }
  Value& at(int r, int c) {
    return entries_[static_cast<std::size_t>(r * n_ + c)];
  }
  Value operator()(int r, int c) const { return at(r, c); }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.spec_ != y.spec_ || x.n_ != y.n_) {
      throw SpecMismatchError("matrix product across different specs");
    }
    const SemiringSpec s = x.spec_;
    Matrix out(s, x.n_);
    for (int r = 0; r < x.n_; ++r) {
      for (int c = 0; c < x.n_; ++c) {
        Value acc = s.zero();
        for (int k = 0; k < x.n_; ++k) {
          acc = s.add(acc, s.mul(x.at(r, k), y.at(k, c)));
        }
        out.at(r, c) = acc;
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    if (x.spec_ != y.spec_ || x.n_ != y.n_) {
      throw SpecMismatchError("matrix comparison across different specs");
    }
    return x.entries_ == y.entries_;
  }

  /// Total number of matrices over a finite quotient carrier:
  /// (t+2)^(n*n). RangeError when not a quotient or out of 64-bit range.
  static std::uint64_t key_space(SemiringSpec spec, int n) {
    check_dim(n);
    if (!spec.is_quotient()) {
      throw SpecMismatchError("canonical keys require a quotient spec");
    }
    return detail::checked_pow_u64(spec.carrier_size(),
                                   static_cast<unsigned>(n * n));
  }

  /// Canonical dense key: base-(t+2) digits in row-major order, least
  /// significant digit first, with the absorbing element as digit t+1.
  std::uint64_t encode() const {
    key_space(spec_, n_);  // validates spec kind and 64-bit fit
    const std::uint64_t t = spec_.threshold();
    const std::uint64_t radix = t + 2;
    std::uint64_t key = 0;
    for (int idx = n_ * n_ - 1; idx >= 0; --idx) {
      const Value v = entries_[static_cast<std::size_t>(idx)];
      const std::uint64_t digit = v.is_absorb() ? t + 1 : v.payload();
      key = key * radix + digit;
    }
    return key;
  }

  static Matrix decode(SemiringSpec spec, int n, std::uint64_t key) {
    const std::uint64_t space = key_space(spec, n);
    if (key >= space) {
      throw RangeError("matrix key " + std::to_string(key) +
                       " out of range (space " + std::to_string(space) + ")");
    }
    const std::uint64_t t = spec.threshold();
    const std::uint64_t radix = t + 2;
    Matrix out(spec, n);
    for (int idx = 0; idx < n * n; ++idx) {
      const std::uint64_t digit = key % radix;
      key /= radix;
      out.entries_[static_cast<std::size_t>(idx)] =
          digit == t + 1 ? Value::absorb() : Value::finite(digit);
    }
    return out;
  }

  /// Text form: rows separated by ";", entries by whitespace, value tokens
  /// per the semiring ("inf 2; 3 inf").
  static Matrix parse(SemiringSpec spec, int n, std::string_view text) {
    check_dim(n);
    std::vector<std::string_view> rows;
    std::vector<std::string_view> tokens;
    detail::split_rows(text, ';', rows);
    if (static_cast<int>(rows.size()) != n) {
      throw ParseError("expected " + std::to_string(n) + " rows, got " +
                       std::to_string(rows.size()));
    }
    Matrix out(spec, n);
    for (int r = 0; r < n; ++r) {
      detail::split_tokens(rows[static_cast<std::size_t>(r)], tokens);
      if (static_cast<int>(tokens.size()) != n) {
        throw ParseError("row " + std::to_string(r + 1) + " has " +
                         std::to_string(tokens.size()) + " entries, expected " +
                         std::to_string(n));
      }
      for (int c = 0; c < n; ++c) {
        out.at(r, c) = spec.parse(tokens[static_cast<std::size_t>(c)]);
      }
    }
    return out;
  }

  std::string str() const {
    std::string out;
    for (int r = 0; r < n_; ++r) {
      if (r > 0) out += "; ";
      for (int c = 0; c < n_; ++c) {
        if (c > 0) out += ' ';
        out += spec_.format(at(r, c));
      }
    }
    return out;
  }

 private:
  static int check_dim(int n) {
    if (n != 2 && n != 3) {
      throw RangeError("matrix dimension must be 2 or 3");
    }
    return n;
  }

  SemiringSpec spec_;
  int n_;
  std::array<Value, 9> entries_;
};

/// Entrywise quotient map: clamp payloads of a same-family infinite-spec
/// matrix into the quotient carrier.
inline Matrix reduced(SemiringSpec quotient_spec, const Matrix& m) {
  if (!quotient_spec.is_quotient() ||
      quotient_spec.family() != m.spec().family()) {
    throw SpecMismatchError("reduction requires a quotient of the same family");
  }
  Matrix out(quotient_spec, m.dim());
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      out.at(r, c) = quotient_spec.reduce(m.at(r, c));
    }
  }
  return out;
}

}  // namespace tropmat
