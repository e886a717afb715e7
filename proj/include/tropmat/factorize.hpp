#pragma once

#include <cstdint>
#include <utility>

#include "tropmat/word.hpp"

namespace tropmat {

namespace detail {

inline void append(Word& w, const Word& tail) {
  w.insert(w.end(), tail.begin(), tail.end());
}

inline void repeat(Word& w, const Descriptor& d, std::uint64_t count) {
  for (std::uint64_t i = 0; i < count; ++i) w.push_back(d);
}

/// Cancel adjacent pairs of the involutive swap letter (A_inf / X_-inf);
/// everything else is left untouched.
inline Word cancel_swaps(const Word& in, const Descriptor& swap) {
  Word out;
  out.reserve(in.size());
  for (const Descriptor& d : in) {
    if (!out.empty() && d == swap && out.back() == swap) {
      out.pop_back();
    } else {
      out.push_back(d);
    }
  }
  return out;
}

/// Case analysis shared by both families. The letter set is abstracted as:
///   swap   - the row/column transposition (A_inf / X_-inf)
///   shift  - adds one to the first row or column (B / Y)
///   kill   - annihilates the first row or column (C / Z)
///   diag v - (v 0; 0 absorb)  (A_v / X_v)
/// The min-plus and max-plus proofs use the identical word shapes on these
/// letters; only the diagonal closer differs (A_i A_j vs W_jk), supplied by
/// the family-specific callable.
template <typename DiagCloser, typename ZeroRowCloser>
class TwoByTwoFactorizer {
 public:
  TwoByTwoFactorizer(SemiringSpec spec, Descriptor swap, Descriptor shift,
                     Descriptor kill, Descriptor (*diag)(Value),
                     DiagCloser diag_closer, ZeroRowCloser zero_row_closer)
      : spec_(spec),
        swap_(std::move(swap)),
        shift_(std::move(shift)),
        kill_(std::move(kill)),
        diag_(diag),
        diag_closer_(std::move(diag_closer)),
        zero_row_closer_(std::move(zero_row_closer)) {}

  Word run(const Matrix& m) const {
    if (m == Matrix::identity(spec_, 2)) return {};
    Word raw = factor(m);
    return cancel_swaps(raw, swap_);
  }

  Word factor(const Matrix& m) const {
    int absorbs = 0;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        if (m.at(r, c).is_absorb()) ++absorbs;
      }
    }
    return absorbs == 0 ? finite_case(m) : absorbing_case(m, absorbs);
  }

 private:
  // All-absorbing and three-absorbing matrices:
  //   (z z; z v) = kill swap diag_v swap kill.
  // Two absorbing entries in a column, row, or on a diagonal, and a single
  // absorbing entry, via the three one-absorbing-pattern identities; swaps
  // conjugate the pattern into place.
  Word absorbing_case(const Matrix& m, int absorbs) const {
    Word w;
    if (absorbs == 4) {
      w = {kill_, swap_, diag_(Value::absorb()), swap_, kill_};
      return w;
    }
    if (absorbs == 3) {
      int fr = 0, fc = 0;
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          if (m.at(r, c).is_finite()) {
            fr = r;
            fc = c;
          }
        }
      }
      if (fr == 0) w.push_back(swap_);
      append(w, {kill_, swap_, diag_(m.at(fr, fc)), swap_, kill_});
      if (fc == 0) w.push_back(swap_);
      return w;
    }
    if (absorbs == 2) {
      const bool a00 = m.at(0, 0).is_absorb();
      const bool a01 = m.at(0, 1).is_absorb();
      const bool a10 = m.at(1, 0).is_absorb();
      const bool a11 = m.at(1, 1).is_absorb();
      if (a00 && a10) {  // absorbing column: (z i; z j) = shift^i swap diag_j swap kill
        return column_pattern(m.at(0, 1).payload(), m.at(1, 1));
      }
      if (a01 && a11) {
        w = column_pattern(m.at(0, 0).payload(), m.at(1, 0));
        w.push_back(swap_);
        return w;
      }
      if (a00 && a01) {  // absorbing row: (z z; i j) = kill swap diag_j swap shift^i
        return row_pattern(m.at(1, 0).payload(), m.at(1, 1));
      }
      if (a10 && a11) {
        w.push_back(swap_);
        append(w, row_pattern(m.at(0, 0).payload(), m.at(0, 1)));
        return w;
      }
      if (a00 && a11) {  // (z i; j z) = shift^i swap shift^j
        repeat(w, shift_, m.at(0, 1).payload());
        w.push_back(swap_);
        repeat(w, shift_, m.at(1, 0).payload());
        return w;
      }
      // anti-diagonal (i z; z j): a row swap gives (z j; i z)
      w.push_back(swap_);
      repeat(w, shift_, m.at(1, 1).payload());
      w.push_back(swap_);
      repeat(w, shift_, m.at(0, 0).payload());
      return w;
    }
    // exactly one absorbing entry: move it to (0,0), then
    // (z i; j k) = shift^i swap diag_k swap shift^j
    int ar = 0, ac = 0;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        if (m.at(r, c).is_absorb()) {
          ar = r;
          ac = c;
        }
      }
    }
    const auto base = [&](int r, int c) {
      return m.at(ar == 1 ? 1 - r : r, ac == 1 ? 1 - c : c);
    };
    if (ar == 1) w.push_back(swap_);
    repeat(w, shift_, base(0, 1).payload());
    append(w, {swap_, diag_(base(1, 1)), swap_});
    repeat(w, shift_, base(1, 0).payload());
    if (ac == 1) w.push_back(swap_);
    return w;
  }

  Word column_pattern(std::uint64_t i, Value j) const {
    Word w;
    repeat(w, shift_, i);
    append(w, {swap_, diag_(j), swap_, kill_});
    return w;
  }

  Word row_pattern(std::uint64_t i, Value j) const {
    Word w = {kill_, swap_, diag_(j), swap_};
    repeat(w, shift_, i);
    return w;
  }

  // All entries finite. Normalise the minimum to (0,0); then
  //   (a b; c d) = (0 0; d-b c-a) shift^b swap shift^a      if b <= d
  //   (a b; c d) = (b-d 0; 0 c-a) shift^d swap shift^a      if b > d
  // and close the remaining matrix with the family's closers.
  Word finite_case(const Matrix& m) const {
    int mr = 0, mc = 0;
    std::uint64_t best = m.at(0, 0).payload();
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        if (m.at(r, c).payload() < best) {
          best = m.at(r, c).payload();
          mr = r;
          mc = c;
        }
      }
    }
    const auto e = [&](int r, int c) {
      return m.at(mr == 1 ? 1 - r : r, mc == 1 ? 1 - c : c).payload();
    };
    const std::uint64_t a = e(0, 0);
    const std::uint64_t b = e(0, 1);
    const std::uint64_t c = e(1, 0);
    const std::uint64_t d = e(1, 1);

    Word w;
    if (mr == 1) w.push_back(swap_);
    if (b <= d) {
      append(w, zero_row_closer_(d - b, c - a));
      repeat(w, shift_, b);
    } else {
      append(w, diag_closer_(b - d, c - a));
      w.push_back(swap_);
      repeat(w, shift_, d);
    }
    w.push_back(swap_);
    repeat(w, shift_, a);
    if (mc == 1) w.push_back(swap_);
    return w;
  }

  SemiringSpec spec_;
  Descriptor swap_;
  Descriptor shift_;
  Descriptor kill_;
  Descriptor (*diag_)(Value);
  DiagCloser diag_closer_;       // word for (0 i; j 0), finite i, j
  ZeroRowCloser zero_row_closer_;  // word for (0 0; i j), finite i, j
};

}  // namespace detail

/// Factor a 2x2 min-plus matrix (infinite or quotient spec) into a word over
/// the letters A_i, B, C whose product is the matrix. Total: every matrix
/// has a factorization. Emitted words are not minimal-length; their length
/// is at most 16 + (sum of finite entries).
inline Word factor_min_plus2(const Matrix& m) {
  if (m.spec().family() != Family::MinPlus || m.dim() != 2) {
    throw SpecMismatchError("factor_min_plus2 requires a 2x2 min-plus matrix");
  }
  const Descriptor swap = Descriptor::min_a(Value::absorb());

  // (0 i; j 0) = A_i A_j when i >= j, else conjugated by swaps.
  const auto diag_closer = [swap](std::uint64_t i, std::uint64_t j) -> Word {
    if (i >= j) {
      return {Descriptor::min_a(Value::finite(i)),
              Descriptor::min_a(Value::finite(j))};
    }
    return {swap, Descriptor::min_a(Value::finite(j)),
            Descriptor::min_a(Value::finite(i)), swap};
  };

  // (0 0; i j) = A_inf B^j A_inf A_0 A_{i-j} when i >= j, else one more
  // column swap.
  const auto zero_row_closer = [swap](std::uint64_t i,
                                      std::uint64_t j) -> Word {
    const bool flipped = i < j;
    if (flipped) std::swap(i, j);
    Word w = {swap};
    detail::repeat(w, Descriptor::min_b(), j);
    detail::append(w, {swap, Descriptor::min_a(Value::finite(0)),
                       Descriptor::min_a(Value::finite(i - j))});
    if (flipped) w.push_back(swap);
    return w;
  };

  const detail::TwoByTwoFactorizer factorizer(
      m.spec(), swap, Descriptor::min_b(), Descriptor::min_c(),
      [](Value v) { return Descriptor::min_a(v); }, diag_closer,
      zero_row_closer);
  return factorizer.run(m);
}

/// Factor a 2x2 max-plus matrix into a word over X_i, Y, Z, W_jk. The W
/// letter always respects 0 < j <= k: a transposed closer is emitted
/// conjugated by swaps, and zero-valued off-diagonals reroute through the
/// zero-row case.
inline Word factor_max_plus2(const Matrix& m) {
  if (m.spec().family() != Family::MaxPlus || m.dim() != 2) {
    throw SpecMismatchError("factor_max_plus2 requires a 2x2 max-plus matrix");
  }
  const SemiringSpec spec = m.spec();
  const Descriptor swap = Descriptor::max_x(Value::absorb());

  // Recursive helper declared up front: the zero-row closer factors its two
  // leftover pieces through the absorbing-entry cases.
  struct Closers {
    SemiringSpec spec;
    Descriptor swap;

    // (0 0; i j), finite i, j:
    //   i >= j: X_-inf Y^j (i-j 0; 0 0)
    //           with (i-j 0; 0 0) = (0 0; -inf 0)(i-j -inf; 0 0),
    //   i < j:  one more column swap.
    Word zero_row(std::uint64_t i, std::uint64_t j) const {
      const bool flipped = i < j;
      if (flipped) std::swap(i, j);
      const Value z = Value::absorb();
      const Value o = Value::finite(0);
      Word w = {swap};
      detail::repeat(w, Descriptor::max_y(), j);
      detail::append(w, factor_max_plus2(Matrix::from_entries(
                            spec, 2, {o, o, z, o})));
      detail::append(w, factor_max_plus2(Matrix::from_entries(
                            spec, 2, {Value::finite(i - j), z, o, o})));
      if (flipped) w.push_back(swap);
      return w;
    }

    // (0 i; j 0), finite i, j.
    Word diag(std::uint64_t i, std::uint64_t j) const {
      if (i == 0) return zero_row(j, 0);  // (0 0; j 0)
      if (j == 0) {                       // (0 i; 0 0) = X_-inf (0 0; 0 i)
        Word w = {swap};
        detail::append(w, zero_row(0, i));
        return w;
      }
      if (i <= j) return {Descriptor::max_w(i, j)};
      return {swap, Descriptor::max_w(j, i), swap};
    }
  };
  const Closers closers{spec, swap};

  const detail::TwoByTwoFactorizer factorizer(
      spec, swap, Descriptor::max_y(), Descriptor::max_z(),
      [](Value v) { return Descriptor::max_x(v); },
      [&closers](std::uint64_t i, std::uint64_t j) {
        return closers.diag(i, j);
      },
      [&closers](std::uint64_t i, std::uint64_t j) {
        return closers.zero_row(i, j);
      });
  return factorizer.run(m);
}

/// Dispatch on the matrix's family.
inline Word factor2(const Matrix& m) {
  return m.spec().family() == Family::MinPlus ? factor_min_plus2(m)
                                              : factor_max_plus2(m);
}

}  // namespace tropmat
