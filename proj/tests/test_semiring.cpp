#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "tropmat/semiring.hpp"

using namespace tropmat;

namespace {

std::vector<Value> carrier(SemiringSpec spec) {
  std::vector<Value> out = {Value::absorb()};
  if (spec.family() == Family::Boolean) {
    out.push_back(Value::finite(0));
    return out;
  }
  for (std::uint64_t p = 0; p <= spec.threshold(); ++p) {
    out.push_back(Value::finite(p));
  }
  return out;
}

std::vector<SemiringSpec> finite_specs(std::uint64_t max_t) {
  std::vector<SemiringSpec> out;
  for (std::uint64_t t = 0; t <= max_t; ++t) {
    out.push_back(SemiringSpec::min_plus(t));
    out.push_back(SemiringSpec::max_plus(t));
  }
  out.push_back(SemiringSpec::boolean());
  return out;
}

}  // namespace

TEST_CASE("addition follows the family") {
  const auto q3 = SemiringSpec::min_plus(3);
  CHECK(q3.add(Value::finite(2), Value::finite(3)) == Value::finite(2));

  const auto maxinf = SemiringSpec::max_plus();
  CHECK(maxinf.add(Value::absorb(), Value::finite(5)) == Value::finite(5));

  const auto boole = SemiringSpec::boolean();
  CHECK(boole.add(boole.one(), boole.one()) == boole.one());
  CHECK(boole.add(boole.zero(), boole.zero()) == boole.zero());
  CHECK(boole.add(boole.zero(), boole.one()) == boole.one());
}

TEST_CASE("multiplication saturates and absorbs") {
  const auto q3 = SemiringSpec::min_plus(3);
  CHECK(q3.mul(Value::finite(2), Value::finite(2)) == Value::finite(3));

  const auto mq3 = SemiringSpec::max_plus(3);
  CHECK(mq3.mul(Value::absorb(), Value::finite(2)) == Value::absorb());

  const auto inf = SemiringSpec::min_plus();
  CHECK(inf.mul(Value::finite(0), Value::finite(7)) == Value::finite(7));

  const auto boole = SemiringSpec::boolean();
  CHECK(boole.mul(boole.one(), boole.one()) == boole.one());
  CHECK(boole.mul(boole.zero(), boole.one()) == boole.zero());
}

TEST_CASE("infinite-extent multiplication overflows loudly") {
  const auto inf = SemiringSpec::min_plus();
  const Value huge = Value::finite(~std::uint64_t{0} - 1);
  CHECK_THROWS_AS(inf.mul(huge, Value::finite(1)), OverflowError);
  CHECK_THROWS_AS(inf.mul(huge, huge), OverflowError);
  CHECK(inf.mul(huge, Value::finite(0)) == huge);
}

TEST_CASE("zero and one per family") {
  CHECK(SemiringSpec::min_plus().zero().is_absorb());
  CHECK(SemiringSpec::min_plus().format(SemiringSpec::min_plus().zero()) ==
        "inf");
  CHECK(SemiringSpec::max_plus(2).one() == Value::finite(0));
  CHECK(SemiringSpec::boolean().format(SemiringSpec::boolean().one()) == "1");
  CHECK(SemiringSpec::boolean().format(SemiringSpec::boolean().zero()) == "0");
}

TEST_CASE("token parsing and formatting") {
  const auto q3 = SemiringSpec::min_plus(3);
  CHECK(q3.parse("inf").is_absorb());
  CHECK(q3.parse("3") == Value::finite(3));
  CHECK_THROWS_AS(q3.parse("4"), ParseError);
  CHECK_THROWS_AS(q3.parse("-inf"), ParseError);
  CHECK_THROWS_AS(q3.parse("abc"), ParseError);
  CHECK_THROWS_AS(q3.parse(""), ParseError);
  CHECK_THROWS_AS(q3.parse("2x"), ParseError);

  const auto mq3 = SemiringSpec::max_plus(3);
  CHECK(mq3.parse("-inf").is_absorb());
  CHECK_THROWS_AS(mq3.parse("4"), ParseError);
  CHECK_THROWS_AS(mq3.parse("inf"), ParseError);

  const auto inf = SemiringSpec::min_plus();
  CHECK(inf.parse("17") == Value::finite(17));

  const auto boole = SemiringSpec::boolean();
  CHECK(boole.parse("0") == boole.zero());
  CHECK(boole.parse("1") == boole.one());
  CHECK_THROWS_AS(boole.parse("2"), ParseError);
  CHECK_THROWS_AS(boole.parse("inf"), ParseError);

  for (const auto spec : finite_specs(3)) {
    for (const Value v : carrier(spec)) {
      CHECK(spec.parse(spec.format(v)) == v);
    }
  }
}

TEST_CASE("semiring axioms hold exhaustively for t <= 4 and boolean") {
  for (const auto spec : finite_specs(4)) {
    CAPTURE(spec.name());
    const auto elems = carrier(spec);
    const Value zero = spec.zero();
    const Value one = spec.one();
    for (const Value a : elems) {
      CHECK(spec.add(a, zero) == a);
      CHECK(spec.add(zero, a) == a);
      CHECK(spec.mul(a, one) == a);
      CHECK(spec.mul(one, a) == a);
      CHECK(spec.mul(a, zero) == zero);
      CHECK(spec.mul(zero, a) == zero);
      for (const Value b : elems) {
        CHECK(spec.add(a, b) == spec.add(b, a));
        for (const Value c : elems) {
          CHECK(spec.add(spec.add(a, b), c) == spec.add(a, spec.add(b, c)));
          CHECK(spec.mul(spec.mul(a, b), c) == spec.mul(a, spec.mul(b, c)));
          CHECK(spec.mul(a, spec.add(b, c)) ==
                spec.add(spec.mul(a, b), spec.mul(a, c)));
          CHECK(spec.mul(spec.add(a, b), c) ==
                spec.add(spec.mul(a, c), spec.mul(b, c)));
        }
      }
    }
  }
}

TEST_CASE("quotient map is a homomorphism") {
  for (const Family fam : {Family::MinPlus, Family::MaxPlus}) {
    const auto inf = fam == Family::MinPlus ? SemiringSpec::min_plus()
                                            : SemiringSpec::max_plus();
    for (std::uint64_t t : {0, 1, 2, 3, 5}) {
      const auto q = fam == Family::MinPlus ? SemiringSpec::min_plus(t)
                                            : SemiringSpec::max_plus(t);
      for (std::uint64_t a = 0; a <= 100; ++a) {
        for (std::uint64_t b = 0; b <= 100; ++b) {
          const Value va = Value::finite(a);
          const Value vb = Value::finite(b);
          CHECK(q.mul(q.reduce(va), q.reduce(vb)) == q.reduce(inf.mul(va, vb)));
          CHECK(q.add(q.reduce(va), q.reduce(vb)) == q.reduce(inf.add(va, vb)));
        }
      }
      CHECK(q.reduce(Value::absorb()).is_absorb());
      CHECK(q.mul(q.reduce(Value::absorb()), q.reduce(Value::finite(7))) ==
            q.reduce(inf.mul(Value::absorb(), Value::finite(7))));
    }
  }
}

TEST_CASE("min-plus at t=0 is the boolean semiring") {
  const auto q0 = SemiringSpec::min_plus(0);
  const auto boole = SemiringSpec::boolean();
  // absorbing -> 0, payload 0 -> 1; same underlying encoding on both sides.
  const auto phi = [](Value v) { return v; };
  for (const Value a : {Value::absorb(), Value::finite(0)}) {
    for (const Value b : {Value::absorb(), Value::finite(0)}) {
      CHECK(phi(q0.add(a, b)) == boole.add(phi(a), phi(b)));
      CHECK(phi(q0.mul(a, b)) == boole.mul(phi(a), phi(b)));
    }
  }
  CHECK(boole.format(phi(q0.zero())) == "0");
  CHECK(boole.format(phi(q0.one())) == "1");
}

TEST_CASE("validity under a spec") {
  const auto q2 = SemiringSpec::max_plus(2);
  CHECK(q2.valid(Value::absorb()));
  CHECK(q2.valid(Value::finite(2)));
  CHECK_FALSE(q2.valid(Value::finite(3)));
  CHECK(SemiringSpec::boolean().valid(Value::finite(0)));
  CHECK_FALSE(SemiringSpec::boolean().valid(Value::finite(1)));
  CHECK(SemiringSpec::min_plus().valid(Value::finite(1'000'000)));
}

TEST_CASE("carrier sizes") {
  CHECK(SemiringSpec::min_plus(0).carrier_size() == 2);
  CHECK(SemiringSpec::max_plus(3).carrier_size() == 5);
  CHECK(SemiringSpec::boolean().carrier_size() == 2);
  CHECK_THROWS_AS(SemiringSpec::min_plus().carrier_size(), RangeError);
}
