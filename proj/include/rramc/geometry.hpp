// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace rramc {

/// Validated array organization.
///
/// The array stores M x N bits organized as B-bit words.  A word address is
/// the pair (x, y): y selects one of the M rows, x one of the N/B words in
/// that row.  Bit b of word (x, y) lives in column x*B + b, with bit 0 the
/// least significant (rightmost in the usual binary rendering).
struct MemoryGeometry {
  std::uint32_t rows = 0;       // M
  std::uint32_t cols = 0;       // N
  std::uint32_t word_bits = 0;  // B
  std::uint32_t col_bits = 0;   // X: width of the word (column) address
  std::uint32_t row_bits = 0;   // Y: width of the row address

  std::uint32_t words_per_row() const { return cols / word_bits; }
  std::uint64_t word_count() const {
    return static_cast<std::uint64_t>(words_per_row()) * rows;
  }
  std::uint64_t capacity_bits() const {
    return static_cast<std::uint64_t>(rows) * cols;
  }
  std::uint32_t column_of(std::uint32_t x, std::uint32_t bit) const {
    return x * word_bits + bit;
  }

  bool operator==(const MemoryGeometry&) const = default;
};

/// Zero-based word address: x picks the word within a row, y the row.
struct WordAddress {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  bool operator==(const WordAddress&) const = default;
};

/// Checks (M, N, B) and derives the address widths.
///
/// Throws GeometryError if M is not a power of two >= 2, B is not a power of
/// two >= 1, or N is not B times a power of two >= 2.
MemoryGeometry validate_geometry(std::uint64_t m, std::uint64_t n,
                                 std::uint64_t b);

/// Write-stress target: next-to-last word of the top row, (2^X - 2, 2^Y - 1).
WordAddress worst_case_write_address(const MemoryGeometry& g);

/// Read-stress target: last word of the top row, (2^X - 1, 2^Y - 1).
WordAddress worst_case_read_address(const MemoryGeometry& g);

}  // namespace rramc
