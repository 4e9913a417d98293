#include <doctest.h>

#include "wiltonlab/realspec.hpp"

#include "oracle_constants.hpp"

#include <string>
#include <vector>

using namespace wiltonlab;

TEST_CASE("rational parse, reduction and round-trip") {
  auto s = parse_real("13/29");
  CHECK(s.kind == spec_kind::rational);
  CHECK(s.num == 13);
  CHECK(s.den == 29);
  CHECK(format_real(s) == "13/29");
  CHECK(approx_double(s) == doctest::Approx(13.0 / 29.0).epsilon(1e-15));

  // non-canonical input reduces
  CHECK(format_real(parse_real("4/8")) == "1/2");
  // the right endpoint is representable
  CHECK(parse_real("1").is_one());
  CHECK(parse_real("1/1").is_one());
  CHECK(parse_real("1.0").is_one());
}

TEST_CASE("decimal inputs become exact fractions") {
  auto s = parse_real("0.375");
  CHECK(s.num == 3);
  CHECK(s.den == 8);
  CHECK(format_real(parse_real("0.5")) == "1/2");
}

TEST_CASE("dyadic parse and round-trip") {
  auto s = parse_real("0xDEADBEEF/2^64");
  CHECK(s.kind == spec_kind::dyadic);
  CHECK(s.width == 64);
  CHECK(s.num == 0xDEADBEEFull);
  CHECK(format_real(s) == "0xDEADBEEF/2^64");

  auto t = parse_real("0x1/2^2");  // x = 1/4
  CHECK(approx_double(t) == 0.25);

  // decimal bits are accepted too
  CHECK(parse_real("3/2^2").kind == spec_kind::dyadic);
}

TEST_CASE("dyadic seed draws are deterministic and in range") {
  auto a = parse_real("dyadic:12345");
  auto b = parse_real("dyadic:12345");
  auto c = parse_real("dyadic:12346");
  CHECK(a.kind == spec_kind::dyadic);
  CHECK(a.width == 64);
  CHECK(a.num == b.num);
  CHECK(a.num != c.num);
  CHECK(a.num > 0);
  double x = approx_double(a);
  CHECK(x > 0.0);
  CHECK(x < 1.0);
}

TEST_CASE("continued fraction parse and round-trip") {
  auto s = parse_real("[0;2,4,3]");
  CHECK(s.kind == spec_kind::cf_terminating);
  CHECK(s.num == 13);  // [0;2,4,3] = 13/29
  CHECK(s.den == 29);
  CHECK(format_real(s) == "[0;2,4,3]");

  auto g = parse_real("[0;(1)]");
  CHECK(g.kind == spec_kind::cf_periodic);
  CHECK(format_real(g) == "[0;(1)]");
  CHECK(approx_double(g) == doctest::Approx(oracle::golden_frac).epsilon(1e-15));

  auto m = parse_real("[0;2,(1,2)]");
  CHECK(format_real(m) == "[0;2,(1,2)]");
  // [0;2,(1,2)]: y = [0;(1,2)] satisfies y = 1/(1+1/(2+y)) -> y = (sqrt(3)-1)
  // and x = 1/(2+y) = 1/(1+sqrt(3)) = (sqrt(3)-1)/2
  CHECK(approx_double(m) ==
        doctest::Approx((std::sqrt(3.0) - 1.0) / 2.0).epsilon(1e-14));

  // sqrt(2)-1 = [0;(2)]
  CHECK(approx_double(parse_real("[0;(2)]")) ==
        doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("whitespace is tolerated") {
  CHECK(parse_real(" 13 / 29 ").num == 13);
  CHECK(parse_real("[0; 2, 4, 3]").den == 29);
}

TEST_CASE("parse errors vs domain errors") {
  // unparseable -> parse_error
  CHECK_THROWS_AS(parse_real("not-a-number"), parse_error);
  CHECK_THROWS_AS(parse_real(""), parse_error);
  CHECK_THROWS_AS(parse_real("13//29"), parse_error);
  CHECK_THROWS_AS(parse_real("0x/2^64"), parse_error);
  CHECK_THROWS_AS(parse_real("[0;2,4"), parse_error);
  CHECK_THROWS_AS(parse_real("[0;(1,]"), parse_error);
  CHECK_THROWS_AS(parse_real("[0;(1),2]"), parse_error);
  CHECK_THROWS_AS(parse_real("1.2.3"), parse_error);

  // well-formed but out of (0,1] -> domain_error
  CHECK_THROWS_AS(parse_real("7/5"), domain_error);
  CHECK_THROWS_AS(parse_real("0/3"), domain_error);
  CHECK_THROWS_AS(parse_real("0"), domain_error);
  CHECK_THROWS_AS(parse_real("2"), domain_error);
  CHECK_THROWS_AS(parse_real("1.5"), domain_error);
  CHECK_THROWS_AS(parse_real("[1;2,3]"), domain_error);
  CHECK_THROWS_AS(parse_real("[0;2,0,3]"), domain_error);
  CHECK_THROWS_AS(parse_real("0x0/2^8"), domain_error);
  CHECK_THROWS_AS(parse_real("256/2^8"), domain_error);
}

TEST_CASE("gauss map is exact on rationals") {
  // alpha(7/10) = {10/7} = 3/7
  auto a = gauss_map(parse_real("7/10"));
  CHECK(a.num == 3);
  CHECK(a.den == 7);

  // 1/2 -> exact zero
  CHECK(gauss_map(parse_real("1/2")).is_zero());

  // dyadic input becomes a plain rational
  auto d = gauss_map(parse_real("0x3/2^2"));  // {4/3} = 1/3
  CHECK(d.num == 1);
  CHECK(d.den == 3);

  CHECK_THROWS_AS(gauss_map(parse_real("1")), domain_error);
}

TEST_CASE("gauss map shifts continued fractions") {
  auto s = gauss_map(parse_real("[0;2,4,3]"));
  CHECK(format_real(s) == "[0;4,3]");
  CHECK(s.num == 3);
  CHECK(s.den == 13);

  // golden section is the fixed point
  auto g = gauss_map(parse_real("[0;(1)]"));
  CHECK(format_real(g) == "[0;(1)]");

  // prefix consumed first, then the cycle rotates
  auto m = gauss_map(parse_real("[0;2,(1,2)]"));
  CHECK(format_real(m) == "[0;(1,2)]");
  CHECK(format_real(gauss_map(m)) == "[0;(2,1)]");

  // terminating single coefficient hits zero
  CHECK(gauss_map(parse_real("[0;5]")).is_zero());
}
