#include <doctest.h>

#include <dedekind/errors.hpp>
#include <dedekind/int_matrix.hpp>

using namespace dedekind;

TEST_CASE("construction and shape checks") {
    CHECK_THROWS_AS(IntMatrix(0, 3), DimensionError);
    CHECK_THROWS_AS(IntMatrix(2, 0), DimensionError);
    IntMatrix m(2, 3);
    CHECK(m.is_zero());
    CHECK_FALSE(m.is_square());
    CHECK_THROWS_AS(IntMatrix::from_rows({{Int(1)}, {Int(1), Int(2)}}), DimensionError);
}

TEST_CASE("product, transpose, hcat") {
    IntMatrix a = IntMatrix::from_rows({{Int(1), Int(2)}, {Int(3), Int(4)}});
    IntMatrix b = IntMatrix::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}});
    CHECK(a * b == IntMatrix::from_rows({{Int(2), Int(1)}, {Int(4), Int(3)}}));
    CHECK(a.transposed().transposed() == a);
    IntMatrix c = IntMatrix::hcat(a, b);
    CHECK(c.cols() == 4);
    CHECK(c(1, 2) == 1);
    CHECK_THROWS_AS(a * IntMatrix(3, 2), DimensionError);
}

TEST_CASE("text dump round trip") {
    IntMatrix a = IntMatrix::from_rows({{Int(-12), Int(0)}, {Int(7), Int("123456789012345678901")}});
    CHECK(a.to_text() == "-12 0\n7 123456789012345678901\n");
    CHECK(IntMatrix::from_text(a.to_text()) == a);
    CHECK_THROWS_AS(IntMatrix::from_text(""), ParseError);
    CHECK_THROWS_AS(IntMatrix::from_text("1 x\n"), ParseError);
}

TEST_CASE("reduced_mod uses floor semantics") {
    IntMatrix a = IntMatrix::from_rows({{Int(-1), Int(7)}});
    IntMatrix r = a.reduced_mod(Int(5));
    CHECK(r(0, 0) == 4);
    CHECK(r(0, 1) == 2);
}
