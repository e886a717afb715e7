#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tropmat/errors.hpp"
#include "tropmat/matrix.hpp"

namespace tropmat {

/// A named generator: one of the 2x2 min-plus letters (A_i, B, C), the 2x2
/// max-plus letters (X_i, Y, Z, W_jk), one of the nine 3x3 min-plus families,
/// or an opaque user-supplied matrix.
class Descriptor {
 public:
  enum class Kind : std::uint8_t {
    MinA,
    MinB,
    MinC,
    MaxX,
    MaxY,
    MaxZ,
    MaxW,
    Conj3,
    Opaque,
  };

  static Descriptor min_a(Value subscript) {
    Descriptor d(Kind::MinA);
    d.sub_ = subscript;
    return d;
  }
  static Descriptor min_b() { return Descriptor(Kind::MinB); }
  static Descriptor min_c() { return Descriptor(Kind::MinC); }

  static Descriptor max_x(Value subscript) {
    Descriptor d(Kind::MaxX);
    d.sub_ = subscript;
    return d;
  }
  static Descriptor max_y() { return Descriptor(Kind::MaxY); }
  static Descriptor max_z() { return Descriptor(Kind::MaxZ); }

  static Descriptor max_w(std::uint64_t j, std::uint64_t k) {
    if (j == 0 || j > k) {
      throw RangeError("W generator requires 0 < j <= k");
    }
    Descriptor d(Kind::MaxW);
    d.p1_ = j;
    d.p2_ = k;
    return d;
  }

  /// family 1..9 of the 3x3 conjecture; parameter arity per family:
  /// 1-4 none, 5-6 (i), 7-8 (i, j), 9 (i, j, k).
  static Descriptor conj3(int family, std::uint64_t i = 0, std::uint64_t j = 0,
                          std::uint64_t k = 0) {
    if (family < 1 || family > 9) {
      throw RangeError("conjecture family index must be 1..9");
    }
    switch (family) {
      case 7:
        if (i < 1 || j < 1 || j > i) {
          throw RangeError("family 7 requires 1 <= j <= i");
        }
        break;
      case 8:
        if (j < 1) throw RangeError("family 8 requires j >= 1");
        break;
      case 9:
        if (i < 1 || j < i || k < 1 || k >= j) {
          throw RangeError("family 9 requires 1 <= i <= j and 1 <= k <= j-1");
        }
        break;
      default:
        break;
    }
    Descriptor d(Kind::Conj3);
    d.family_ = static_cast<std::uint8_t>(family);
    d.p1_ = i;
    d.p2_ = j;
    d.p3_ = k;
    return d;
  }

  static Descriptor opaque(std::uint64_t index) {
    Descriptor d(Kind::Opaque);
    d.p1_ = index;
    return d;
  }

  Kind kind() const { return kind_; }
  Value subscript() const { return sub_; }
  std::uint64_t param1() const { return p1_; }
  std::uint64_t param2() const { return p2_; }
  std::uint64_t param3() const { return p3_; }
  int family() const { return family_; }

  friend bool operator==(const Descriptor&, const Descriptor&) = default;

  std::string token() const {
    switch (kind_) {
      case Kind::MinA:
        return sub_.is_absorb() ? "Ainf" : "A" + std::to_string(sub_.payload());
      case Kind::MinB: return "B";
      case Kind::MinC: return "C";
      case Kind::MaxX:
        return sub_.is_absorb() ? "X-inf"
                                : "X" + std::to_string(sub_.payload());
      case Kind::MaxY: return "Y";
      case Kind::MaxZ: return "Z";
      case Kind::MaxW:
        return "W(" + std::to_string(p1_) + "," + std::to_string(p2_) + ")";
      case Kind::Conj3: {
        std::string out = "G" + std::to_string(family_);
        if (family_ >= 5) {
          out += "(" + std::to_string(p1_);
          if (family_ >= 7) out += "," + std::to_string(p2_);
          if (family_ == 9) out += "," + std::to_string(p3_);
          out += ")";
        }
        return out;
      }
      case Kind::Opaque:
        return "Opaque(" + std::to_string(p1_) + ")";
    }
    return "?";
  }

  /// The matrix this descriptor names, realised under the given spec.
  /// Literal display constants saturate under a quotient (so B is the
  /// identity at t=0); parameters beyond the threshold are an error.
  Matrix realize(SemiringSpec spec, int n) const {
    const Value z = spec.zero();
    const Value o = spec.one();
    switch (kind_) {
      case Kind::MinA:
      case Kind::MinB:
      case Kind::MinC:
        require(spec, Family::MinPlus, n, 2);
        break;
      case Kind::MaxX:
      case Kind::MaxY:
      case Kind::MaxZ:
      case Kind::MaxW:
        require(spec, Family::MaxPlus, n, 2);
        break;
      case Kind::Conj3:
        require(spec, Family::MinPlus, n, 3);
        break;
      case Kind::Opaque:
        throw RangeError("opaque descriptor has no intrinsic matrix");
    }
    switch (kind_) {
      case Kind::MinA:
      case Kind::MaxX:
        return Matrix::from_entries(spec, 2, {param(spec, sub_), o, o, z});
      case Kind::MinB:
      case Kind::MaxY:
        return Matrix::from_entries(spec, 2, {lit(spec, 1), z, z, o});
      case Kind::MinC:
      case Kind::MaxZ:
        return Matrix::from_entries(spec, 2, {z, z, z, o});
      case Kind::MaxW:
        return Matrix::from_entries(
            spec, 2, {o, fin(spec, p1_), fin(spec, p2_), o});
      case Kind::Conj3: {
        const Value i = fin(spec, p1_);
        const Value j = fin(spec, p2_);
        const Value k = fin(spec, p3_);
        switch (family_) {
          case 1:
            return Matrix::from_entries(spec, 3, {z, z, o, o, z, z, z, o, z});
          case 2:
            return Matrix::from_entries(spec, 3, {z, z, o, z, o, z, o, z, z});
          case 3:
            return Matrix::from_entries(spec, 3, {z, z, z, z, o, z, z, z, o});
          case 4:
            return Matrix::from_entries(
                spec, 3, {lit(spec, 1), z, z, z, o, z, z, z, o});
          case 5:
            return Matrix::from_entries(spec, 3, {o, i, z, z, o, z, z, z, o});
          case 6:
            return Matrix::from_entries(spec, 3, {o, i, z, z, o, i, i, z, o});
          case 7:
            return Matrix::from_entries(spec, 3, {z, o, o, o, z, i, o, j, z});
          case 8:
            return Matrix::from_entries(spec, 3, {o, z, o, i, o, z, z, j, o});
          case 9:
            return Matrix::from_entries(spec, 3, {o, i, z, z, o, j, k, z, o});
        }
        throw RangeError("unreachable family");
      }
      default:
        throw RangeError("unreachable kind");
    }
  }

 private:
  explicit Descriptor(Kind kind) : kind_(kind) {}

  static void require(SemiringSpec spec, Family fam, int n, int expected_n) {
    if (spec.family() != fam) {
      throw SpecMismatchError("descriptor family does not match spec " +
                              spec.name());
    }
    if (n != expected_n) {
      throw SpecMismatchError("descriptor dimension mismatch");
    }
  }

  // A literal display constant: saturates under a quotient.
  static Value lit(SemiringSpec spec, std::uint64_t v) {
    return spec.is_quotient() ? spec.reduce(Value::finite(v))
                              : Value::finite(v);
  }

  // A finite parameter: must already lie inside the carrier.
  static Value fin(SemiringSpec spec, std::uint64_t v) {
    if (spec.is_quotient() && v > spec.threshold()) {
      throw RangeError("generator parameter " + std::to_string(v) +
                       " exceeds threshold " +
                       std::to_string(spec.threshold()));
    }
    return Value::finite(v);
  }

  // A subscript that may also be the absorbing element.
  static Value param(SemiringSpec spec, Value v) {
    if (v.is_absorb()) return v;
    return fin(spec, v.payload());
  }

  Kind kind_;
  Value sub_ = Value::absorb();
  std::uint64_t p1_ = 0;
  std::uint64_t p2_ = 0;
  std::uint64_t p3_ = 0;
  std::uint8_t family_ = 0;
};

/// An ordered generating set: descriptors and their realised matrices over
/// one spec. Order is the canonical order used for short-lex words.
struct GeneratorSet {
  SemiringSpec spec = SemiringSpec::min_plus();
  int n = 2;
  std::vector<Descriptor> descriptors;
  std::vector<Matrix> matrices;

  std::size_t size() const { return matrices.size(); }

  void push(Descriptor d) {
    matrices.push_back(d.realize(spec, n));
    descriptors.push_back(std::move(d));
  }
};

/// A_0..A_t, A_inf, B, C over the min-plus quotient at t; t+4 matrices.
inline GeneratorSet min_plus_2x2_generators(std::uint64_t t) {
  GeneratorSet out;
  out.spec = SemiringSpec::min_plus(t);
  out.n = 2;
  for (std::uint64_t i = 0; i <= t; ++i) {
    out.push(Descriptor::min_a(Value::finite(i)));
  }
  out.push(Descriptor::min_a(Value::absorb()));
  out.push(Descriptor::min_b());
  out.push(Descriptor::min_c());
  return out;
}

inline std::uint64_t min_plus_2x2_generator_count(std::uint64_t t) {
  return t + 4;
}

/// X_-inf, X_0..X_t, Y, Z, W_jk (0 < j <= k <= t) over the max-plus quotient;
/// (t^2+3t+8)/2 matrices.
inline GeneratorSet max_plus_2x2_generators(std::uint64_t t) {
  GeneratorSet out;
  out.spec = SemiringSpec::max_plus(t);
  out.n = 2;
  out.push(Descriptor::max_x(Value::absorb()));
  for (std::uint64_t i = 0; i <= t; ++i) {
    out.push(Descriptor::max_x(Value::finite(i)));
  }
  out.push(Descriptor::max_y());
  out.push(Descriptor::max_z());
  for (std::uint64_t j = 1; j <= t; ++j) {
    for (std::uint64_t k = j; k <= t; ++k) {
      out.push(Descriptor::max_w(j, k));
    }
  }
  return out;
}

inline std::uint64_t max_plus_2x2_generator_count(std::uint64_t t) {
  return (t * t + 3 * t + 8) / 2;
}

/// The nine displayed 3x3 min-plus families with their exact parameter
/// ranges; (2t^3+9t^2+19t+36)/6 matrices.
inline GeneratorSet min_plus_3x3_conjecture_generators(std::uint64_t t) {
  GeneratorSet out;
  out.spec = SemiringSpec::min_plus(t);
  out.n = 3;
  for (int f = 1; f <= 4; ++f) out.push(Descriptor::conj3(f));
  for (std::uint64_t i = 0; i <= t; ++i) out.push(Descriptor::conj3(5, i));
  for (std::uint64_t i = 0; i <= t; ++i) out.push(Descriptor::conj3(6, i));
  for (std::uint64_t i = 1; i <= t; ++i) {
    for (std::uint64_t j = 1; j <= i; ++j) out.push(Descriptor::conj3(7, i, j));
  }
  for (std::uint64_t i = 0; i <= t; ++i) {
    for (std::uint64_t j = 1; j <= t; ++j) out.push(Descriptor::conj3(8, i, j));
  }
  for (std::uint64_t i = 1; i <= t; ++i) {
    for (std::uint64_t j = i; j <= t; ++j) {
      for (std::uint64_t k = 1; k + 1 <= j; ++k) {
        out.push(Descriptor::conj3(9, i, j, k));
      }
    }
  }
  return out;
}

inline std::uint64_t min_plus_3x3_conjecture_generator_count(std::uint64_t t) {
  return (2 * t * t * t + 9 * t * t + 19 * t + 36) / 6;
}

/// Wrap user-supplied matrices as an opaque generating set.
inline GeneratorSet custom_generator_set(SemiringSpec spec, int n,
                                         std::vector<Matrix> matrices) {
  GeneratorSet out;
  out.spec = spec;
  out.n = n;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const Matrix& m = matrices[i];
    if (m.spec() != spec || m.dim() != n) {
      throw SpecMismatchError("generator " + std::to_string(i) +
                              " does not match the set's spec");
    }
    out.descriptors.push_back(Descriptor::opaque(i));
  }
  out.matrices = std::move(matrices);
  return out;
}

}  // namespace tropmat
