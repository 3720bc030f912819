#include <doctest.h>

#include "support.hpp"
#include "tautsys/json_io.hpp"
#include "tautsys/polyalg.hpp"

using namespace tautsys;

namespace {

LaurentPoly z(std::uint32_t i, std::size_t n = 4) { return LaurentPoly::variable(n, i); }

LaurentPoly p34() { return z(0) * z(3) - z(1) * z(2); }

}  // namespace

TEST_CASE("exponent vectors are canonical") {
  const ExpVec a = ExpVec::from_entries({{3, 2}, {1, 1}, {3, -2}});
  CHECK(a == ExpVec::unit(1));
  CHECK(a.support_size() == 1);
  CHECK(ExpVec::from_dense(std::vector<std::int64_t>{0, 2, 0, -1}).extent() == 4);
  CHECK((ExpVec::unit(2, 3) - ExpVec::unit(2, 3)).empty());
  CHECK(ExpVec::unit(0).scaled(-3)[0] == -3);
  CHECK(ExpVec::unit(1, 2).total() == 2);
}

TEST_CASE("exponent order is lexicographic on dense vectors") {
  const auto d = [](std::vector<std::int64_t> v) { return ExpVec::from_dense(v); };
  CHECK(d({-1, 0}) < d({0, 0}));
  CHECK(d({0, -1}) < d({0, 0}));
  CHECK(d({0, 5}) < d({1, 0}));
  CHECK(d({1, 0, 0}) > d({0, 9, 9}));
}

TEST_CASE("difference of squares") {
  const LaurentPoly plus = z(0) * z(3) + z(1) * z(2);
  LaurentPoly expected(4);
  expected.add_term(ExpVec::from_dense(std::vector<std::int64_t>{2, 0, 0, 2}), 1);
  expected.add_term(ExpVec::from_dense(std::vector<std::int64_t>{0, 2, 2, 0}), -1);
  CHECK(p34() * plus == expected);
  CHECK(p34() * LaurentPoly::constant(4, 1) == p34());
}

TEST_CASE("square of p34") {
  const LaurentPoly sq = p34().pow(2);
  CHECK(sq.size() == 3);
  CHECK(sq.coefficient(ExpVec::from_dense(std::vector<std::int64_t>{1, 1, 1, 1})) == -2);
  CHECK(sq.coefficient(ExpVec::from_dense(std::vector<std::int64_t>{2, 0, 0, 2})) == 1);
  CHECK(sq.coefficient(ExpVec::from_dense(std::vector<std::int64_t>{0, 2, 2, 0})) == 1);
}

TEST_CASE("powers and constant terms") {
  const LaurentPoly t = LaurentPoly::variable(1, 0);
  const LaurentPoly s = t + LaurentPoly::monomial(1, ExpVec::unit(0, -1));
  CHECK(s.pow(0) == LaurentPoly::constant(1, 1));
  CHECK(s.pow(1) == s);
  const LaurentPoly sq = s.pow(2);
  CHECK(sq.size() == 3);
  CHECK(sq.constant_term() == 2);
  CHECK(sq.coefficient(ExpVec::unit(0, -2)) == 1);
  CHECK((t * t + t).constant_term() == 0);
}

TEST_CASE("constant term of p34 squared over z1 z2 z3 z4") {
  const ExpVec all = ExpVec::from_dense(std::vector<std::int64_t>{1, 1, 1, 1});
  CHECK(p34().pow(2).shifted(all.scaled(-1)).constant_term() == -2);
  CHECK(product_coefficient(p34(), p34(), all) == -2);
}

TEST_CASE("multiplication is commutative, associative and distributive") {
  oracle::RandomOps gen(5, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = gen.poly(), b = gen.poly(), c = gen.poly();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("product coefficient agrees with the full product") {
  oracle::RandomOps gen(9, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = gen.poly(5, 3), b = gen.poly(5, 3).shifted(ExpVec::unit(1, -2));
    const LaurentPoly prod = a * b;
    for (const auto& [e, c] : prod.terms()) CHECK(product_coefficient(a, b, e) == c);
    CHECK(product_coefficient(a, b, ExpVec::unit(0, 40)) == 0);
  }
}

TEST_CASE("constant term of positive times negative part is a convolution") {
  oracle::RandomOps gen(13, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly pos = gen.poly(4, 3) * LaurentPoly::variable(2, 0);
    LaurentPoly neg(2);
    const LaurentPoly source = gen.poly(4, 3);
    for (const auto& [e, c] : source.terms()) neg.add_term(e.scaled(-1) - ExpVec::unit(0), c);
    Rat expected = 0;
    for (const auto& [e, c] : pos.terms()) expected += c * neg.coefficient(e.scaled(-1));
    CHECK((pos * neg).constant_term() == expected);
  }
}

TEST_CASE("derivative and evaluation") {
  const LaurentPoly f = z(0, 2).pow(3) * z(1, 2) + LaurentPoly::monomial(2, ExpVec::unit(1, -1), 2);
  const LaurentPoly df = f.derivative(0);
  CHECK(df.coefficient(ExpVec::from_dense(std::vector<std::int64_t>{2, 1})) == 3);
  CHECK(f.derivative(1).coefficient(ExpVec::unit(1, -2)) == -2);
  const std::vector<Rat> at{2, Rat(1, 2)};
  CHECK(f.evaluate(at) == Rat(4) + Rat(4));
}

TEST_CASE("polynomial JSON round-trips") {
  const LaurentPoly f = p34().pow(2) * Rat(3, 7);
  const Json j = poly_to_json(f);
  CHECK(j["vars"] == 4);
  CHECK(poly_from_json(j) == f);
  CHECK(canonical_dump(poly_to_json(poly_from_json(j))) == canonical_dump(j));
}
