#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "tropmat/errors.hpp"

namespace tropmat {

enum class Family : std::uint8_t { MinPlus, MaxPlus, Boolean };

/// One element of a tropical (or boolean) semiring: either a natural-number
/// payload or the absorbing element of the family (+inf for min-plus, -inf
/// for max-plus, 0 in the boolean tables).
///
/// The absorbing element is the semiring zero; payload 0 is the semiring one.
/// In the boolean family the internal payload 0 corresponds to the native 1.
class Value {
 public:
  constexpr Value() : raw_(kAbsorbRaw) {}

  static constexpr Value absorb() { return Value(kAbsorbRaw); }

  static constexpr Value finite(std::uint64_t payload) {
    if (payload == kAbsorbRaw) {
      throw RangeError("payload too large for a finite value");
    }
    return Value(payload);
  }

  constexpr bool is_absorb() const { return raw_ == kAbsorbRaw; }
  constexpr bool is_finite() const { return raw_ != kAbsorbRaw; }

  constexpr std::uint64_t payload() const {
    if (is_absorb()) {
      throw RangeError("absorbing element has no payload");
    }
    return raw_;
  }

  friend constexpr bool operator==(Value, Value) = default;

  // Raw accessor for hashing/serialisation internals.
  constexpr std::uint64_t raw() const { return raw_; }

 private:
  static constexpr std::uint64_t kAbsorbRaw = ~std::uint64_t{0};

  constexpr explicit Value(std::uint64_t raw) : raw_(raw) {}

  std::uint64_t raw_;
};

/// Which semiring: the family (min-plus, max-plus, boolean) and whether the
/// carrier is infinite (naturals plus the absorbing element) or the finite
/// quotient that identifies t with t+1, realised by saturating addition.
class SemiringSpec {
 public:
  static constexpr SemiringSpec min_plus() {
    return SemiringSpec(Family::MinPlus, false, 0);
  }
  static constexpr SemiringSpec min_plus(std::uint64_t t) {
    return SemiringSpec(Family::MinPlus, true, t);
  }
  static constexpr SemiringSpec max_plus() {
    return SemiringSpec(Family::MaxPlus, false, 0);
  }
  static constexpr SemiringSpec max_plus(std::uint64_t t) {
    return SemiringSpec(Family::MaxPlus, true, t);
  }
  static constexpr SemiringSpec boolean() {
    return SemiringSpec(Family::Boolean, false, 0);
  }

  constexpr Family family() const { return family_; }
  constexpr bool is_quotient() const { return quotient_; }
  constexpr bool is_finite() const {
    return quotient_ || family_ == Family::Boolean;
  }

  constexpr std::uint64_t threshold() const {
    if (!quotient_) {
      throw RangeError("spec has no quotient threshold");
    }
    return threshold_;
  }

  /// Number of elements of a finite carrier: t+2 for a quotient, 2 for the
  /// boolean semiring.
  constexpr std::uint64_t carrier_size() const {
    if (family_ == Family::Boolean) return 2;
    if (!quotient_) {
      throw RangeError("infinite semiring has no carrier size");
    }
    if (threshold_ > ~std::uint64_t{0} - 2) {
      throw RangeError("carrier size exceeds 64-bit range");
    }
    return threshold_ + 2;
  }

  constexpr Value zero() const { return Value::absorb(); }
  constexpr Value one() const { return Value::finite(0); }

  constexpr bool valid(Value v) const {
    if (v.is_absorb()) return true;
    if (family_ == Family::Boolean) return v.payload() == 0;
    if (quotient_) return v.payload() <= threshold_;
    return true;
  }

  /// Semiring addition: min/max/or per family; the absorbing element is
  /// neutral.
  constexpr Value add(Value a, Value b) const {
    if (a.is_absorb()) return b;
    if (b.is_absorb()) return a;
    switch (family_) {
      case Family::MinPlus:
        return Value::finite(a.payload() < b.payload() ? a.payload()
                                                       : b.payload());
      case Family::MaxPlus:
        return Value::finite(a.payload() > b.payload() ? a.payload()
                                                       : b.payload());
      case Family::Boolean:
        return a;  // both are the native 1
    }
    throw RangeError("unreachable family");
  }

  /// Semiring multiplication: numeric addition (saturating at t under a
  /// quotient) or boolean and; the absorbing element annihilates.
  constexpr Value mul(Value a, Value b) const {
    if (a.is_absorb() || b.is_absorb()) return Value::absorb();
    if (family_ == Family::Boolean) return Value::finite(0);
    const std::uint64_t pa = a.payload();
    const std::uint64_t pb = b.payload();
    if (quotient_) {
      return Value::finite(pa >= threshold_ || pb >= threshold_ - pa
                               ? threshold_
                               : pa + pb);
    }
    std::uint64_t sum = 0;
    if (__builtin_add_overflow(pa, pb, &sum) || sum == ~std::uint64_t{0}) {
      throw OverflowError("tropical product exceeds 64-bit payload range");
    }
    return Value::finite(sum);
  }

  /// Quotient map from the infinite family: clamp finite payloads at t.
  constexpr Value reduce(Value v) const {
    if (!quotient_) {
      throw RangeError("reduce requires a quotient spec");
    }
    if (v.is_absorb()) return v;
    return Value::finite(v.payload() < threshold_ ? v.payload() : threshold_);
  }

  /// Tokens: decimal naturals, "inf" (min-plus only), "-inf" (max-plus only).
  Value parse(std::string_view token) const {
    if (token == "inf") {
      if (family_ != Family::MinPlus) {
        throw ParseError("\"inf\" is only valid in the min-plus family");
      }
      return Value::absorb();
    }
    if (token == "-inf") {
      if (family_ != Family::MaxPlus) {
        throw ParseError("\"-inf\" is only valid in the max-plus family");
      }
      return Value::absorb();
    }
    std::uint64_t payload = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, payload);
    if (ec != std::errc() || ptr != last || token.empty()) {
      throw ParseError("bad value token \"" + std::string(token) + "\"");
    }
    if (payload == ~std::uint64_t{0}) {
      throw ParseError("value token out of payload range");
    }
    if (family_ == Family::Boolean) {
      if (payload > 1) {
        throw ParseError("boolean value must be 0 or 1");
      }
      return payload == 0 ? Value::absorb() : Value::finite(0);
    }
    if (quotient_ && payload > threshold_) {
      throw ParseError("value " + std::to_string(payload) +
                       " exceeds quotient threshold " +
                       std::to_string(threshold_));
    }
    return Value::finite(payload);
  }

  std::string format(Value v) const {
    if (family_ == Family::Boolean) return v.is_absorb() ? "0" : "1";
    if (v.is_absorb()) return family_ == Family::MinPlus ? "inf" : "-inf";
    return std::to_string(v.payload());
  }

  std::string name() const {
    std::string out;
    switch (family_) {
      case Family::MinPlus: out = "min-plus"; break;
      case Family::MaxPlus: out = "max-plus"; break;
      case Family::Boolean: return "boolean";
    }
    if (quotient_) {
      out += "(t=" + std::to_string(threshold_) + ")";
    } else {
      out += "(inf)";
    }
    return out;
  }

  friend constexpr bool operator==(SemiringSpec, SemiringSpec) = default;

 private:
  constexpr SemiringSpec(Family family, bool quotient, std::uint64_t t)
      : family_(family), quotient_(quotient), threshold_(t) {}

  Family family_;
  bool quotient_;
  std::uint64_t threshold_;
};

}  // namespace tropmat
