#include <doctest.h>

#include "dsfuse/numbers.hpp"

using dsfuse::format_fixed;
using dsfuse::format_real;
using dsfuse::parse_real;
using dsfuse::round_significant;

TEST_CASE("parse_real accepts full-string decimals only") {
  CHECK(parse_real("0.4") == 0.4);
  CHECK(parse_real("-2.5e3") == -2500.0);
  CHECK(parse_real("+0.25") == 0.25);
  CHECK(parse_real("1") == 1.0);

  CHECK_FALSE(parse_real("").has_value());
  CHECK_FALSE(parse_real("0.4x").has_value());
  CHECK_FALSE(parse_real("four").has_value());
  CHECK_FALSE(parse_real("nan").has_value());
  CHECK_FALSE(parse_real("inf").has_value());
  CHECK_FALSE(parse_real(" 0.4").has_value());
}

TEST_CASE("format_real writes plain decimals at 12 significant digits") {
  CHECK(format_real(0.2) == "0.2");
  CHECK(format_real(0.775) == "0.775");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(0.0) == "0");
  CHECK(format_real(-0.125) == "-0.125");
  // exponent forms are expanded
  CHECK(format_real(1e-5) == "0.00001");
  CHECK(format_real(2.5e-10) == "0.00000000025");
  CHECK(format_real(1.5e11) == "150000000000");
  // 12 significant digits, then trimmed
  CHECK(format_real(1.0 / 3.0) == "0.333333333333");
  CHECK(format_real(2.0 / 3.0) == "0.666666666667");
  // values that round to 1 at 12 digits
  CHECK(format_real(0.99999999999999989) == "1");
}

TEST_CASE("format_fixed always writes 12 decimal places") {
  CHECK(format_fixed(0.775) == "0.775000000000");
  CHECK(format_fixed(0.8875) == "0.887500000000");
  CHECK(format_fixed(0.0) == "0.000000000000");
  CHECK(format_fixed(1.0) == "1.000000000000");
}

TEST_CASE("round_significant is idempotent and round-trips format_real") {
  const double values[] = {0.2, 0.775, 1.0 / 3.0, 0.99999999999999989, 0.0};
  for (const double v : values) {
    const double rounded = round_significant(v);
    CHECK(round_significant(rounded) == rounded);
    CHECK(parse_real(format_real(v)) == rounded);
  }
}
