// SPDX-License-Identifier: Apache-2.0
#include "rramc/geometry.hpp"

#include <bit>
#include <string>

#include "rramc/errors.hpp"

namespace rramc {

namespace {

bool is_pow2(std::uint64_t v) { return v != 0 && std::has_single_bit(v); }

std::uint32_t log2_of(std::uint64_t v) {
  return static_cast<std::uint32_t>(std::bit_width(v) - 1);
}

}  // namespace

MemoryGeometry validate_geometry(std::uint64_t m, std::uint64_t n,
                                 std::uint64_t b) {
  if (m < 2 || !is_pow2(m)) {
    throw GeometryError(GeometryError::Kind::NonPowerOfTwo,
                        "M must be a power of two >= 2, got " +
                            std::to_string(m));
  }
  if (b < 1 || !is_pow2(b)) {
    throw GeometryError(GeometryError::Kind::InvalidWordWidth,
                        "B must be a power of two >= 1, got " +
                            std::to_string(b));
  }
  if (n < 2 * b || n % b != 0 || !is_pow2(n / b)) {
    throw GeometryError(GeometryError::Kind::InvalidColumnCount,
                        "N must be B times a power of two >= 2, got N=" +
                            std::to_string(n) + " B=" + std::to_string(b));
  }
  // Keep addresses well inside 32 bits; real arrays are far smaller anyway.
  if (m > (1u << 20)) {
    throw GeometryError(GeometryError::Kind::NonPowerOfTwo,
                        "M out of supported range (max 2^20)");
  }
  if (n > (1u << 20)) {
    throw GeometryError(GeometryError::Kind::InvalidColumnCount,
                        "N out of supported range (max 2^20)");
  }
  MemoryGeometry g;
  g.rows = static_cast<std::uint32_t>(m);
  g.cols = static_cast<std::uint32_t>(n);
  g.word_bits = static_cast<std::uint32_t>(b);
  g.col_bits = log2_of(n / b);
  g.row_bits = log2_of(m);
  return g;
}

WordAddress worst_case_write_address(const MemoryGeometry& g) {
  return {(1u << g.col_bits) - 2u, g.rows - 1u};
}

WordAddress worst_case_read_address(const MemoryGeometry& g) {
  return {(1u << g.col_bits) - 1u, g.rows - 1u};
}

}  // namespace rramc
