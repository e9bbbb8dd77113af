// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "rramc/errors.hpp"
#include "rramc/geometry.hpp"

using namespace rramc;

TEST_CASE("geometry derivation") {
  MemoryGeometry g = validate_geometry(64, 64, 8);
  CHECK(g.rows == 64);
  CHECK(g.cols == 64);
  CHECK(g.word_bits == 8);
  CHECK(g.col_bits == 3);
  CHECK(g.row_bits == 6);
  CHECK(g.words_per_row() == 8);
  CHECK(g.word_count() == 512);
  CHECK(g.capacity_bits() == 4096);

  g = validate_geometry(32, 32, 4);
  CHECK(g.col_bits == 3);
  CHECK(g.row_bits == 5);

  g = validate_geometry(2, 2, 1);
  CHECK(g.col_bits == 1);
  CHECK(g.row_bits == 1);
}

TEST_CASE("geometry rejects bad shapes") {
  auto kind_of = [](std::uint64_t m, std::uint64_t n, std::uint64_t b) {
    try {
      validate_geometry(m, n, b);
    } catch (const GeometryError& e) {
      return e.kind();
    }
    FAIL("expected GeometryError");
    return GeometryError::Kind::NonPowerOfTwo;
  };
  CHECK(kind_of(63, 64, 8) == GeometryError::Kind::NonPowerOfTwo);
  CHECK(kind_of(1, 64, 8) == GeometryError::Kind::NonPowerOfTwo);
  CHECK(kind_of(0, 64, 8) == GeometryError::Kind::NonPowerOfTwo);
  CHECK(kind_of(64, 64, 3) == GeometryError::Kind::InvalidWordWidth);
  CHECK(kind_of(64, 64, 0) == GeometryError::Kind::InvalidWordWidth);
  CHECK(kind_of(64, 48, 8) == GeometryError::Kind::InvalidColumnCount);
  CHECK(kind_of(64, 8, 8) == GeometryError::Kind::InvalidColumnCount);
  CHECK(kind_of(64, 24, 8) == GeometryError::Kind::InvalidColumnCount);
}

TEST_CASE("stress addresses") {
  MemoryGeometry g = validate_geometry(64, 64, 8);
  CHECK(worst_case_write_address(g) == WordAddress{6, 63});
  CHECK(worst_case_read_address(g) == WordAddress{7, 63});

  g = validate_geometry(2, 2, 1);
  CHECK(worst_case_write_address(g) == WordAddress{0, 1});
  CHECK(worst_case_read_address(g) == WordAddress{1, 1});
}

TEST_CASE("bit-to-column mapping") {
  MemoryGeometry g = validate_geometry(32, 32, 4);
  CHECK(g.column_of(0, 0) == 0);
  CHECK(g.column_of(0, 3) == 3);
  CHECK(g.column_of(7, 0) == 28);
  CHECK(g.column_of(7, 3) == 31);
}

TEST_CASE("geometry properties over a sweep") {
  for (std::uint32_t y = 1; y <= 8; ++y) {
    for (std::uint32_t x = 1; x <= 5; ++x) {
      for (std::uint32_t bl = 0; bl <= 4; ++bl) {
        const std::uint64_t m = 1ull << y;
        const std::uint64_t b = 1ull << bl;
        const std::uint64_t n = b << x;
        MemoryGeometry g = validate_geometry(m, n, b);
        CHECK(g.capacity_bits() == m * n);
        CHECK(g.word_count() * g.word_bits == g.capacity_bits());
        CHECK((1u << g.col_bits) == g.words_per_row());
        CHECK((1u << g.row_bits) == g.rows);
        const WordAddress w = worst_case_write_address(g);
        const WordAddress r = worst_case_read_address(g);
        CHECK(w.x + 1 == r.x);
        CHECK(w.y == r.y);
        CHECK(r.x < g.words_per_row());
        CHECK(r.y < g.rows);
        // Last column of the read-stress word is the last array column.
        CHECK(g.column_of(r.x, g.word_bits - 1) == g.cols - 1);
      }
    }
  }
}
