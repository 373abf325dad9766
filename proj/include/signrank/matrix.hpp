#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace signrank {

class BooleanMatrix;

/// Dense matrix with entries in {+1, -1}.
///
/// Entries are stored row-major as int8, and every row is mirrored as a
/// packed bit vector (bit j set iff entry j is +1) for the combinatorial
/// routines. Instances are immutable once constructed.
class SignMatrix {
 public:
  SignMatrix(std::size_t rows, std::size_t cols, std::vector<std::int8_t> entries);

  static SignMatrix filled(std::size_t rows, std::size_t cols, int value);
  static SignMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  int operator()(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * cols_ + c];
  }
  bool positive(std::size_t r, std::size_t c) const noexcept {
    return (bits_[r * words_ + (c >> 6)] >> (c & 63)) & 1u;
  }

  std::span<const std::int8_t> row(std::size_t r) const noexcept {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const std::uint64_t> row_bits(std::size_t r) const noexcept {
    return {bits_.data() + r * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }
  const std::vector<std::int8_t>& entries() const noexcept { return entries_; }

  /// Number of columns in which rows a and b differ.
  std::size_t row_distance(std::size_t a, std::size_t b) const noexcept;
  bool rows_equal(std::size_t a, std::size_t b) const noexcept;

  SignMatrix select_rows(std::span<const std::size_t> rows) const;
  SignMatrix select_cols(std::span<const std::size_t> cols) const;

  bool operator==(const SignMatrix& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::int8_t> entries_;
  std::vector<std::uint64_t> bits_;
};

/// Dense 0/1 matrix; the boolean view B of a sign matrix S = 2B - J.
class BooleanMatrix {
 public:
  BooleanMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> entries);

  /// The all-ones matrix J.
  static BooleanMatrix ones(std::size_t rows, std::size_t cols);
  static BooleanMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  int operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
  const std::vector<std::uint8_t>& entries() const noexcept { return entries_; }
  std::size_t count_ones() const noexcept;

  bool operator==(const BooleanMatrix& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> entries_;
};

struct RegularityInfo {
  bool is_row_regular = false;
  bool is_col_regular = false;
  /// Present iff the matrix is square and every row and column has exactly
  /// this many ones.
  std::optional<std::size_t> degree;
};

/// Parses the '+'/'-' text format. Blank lines and lines starting with '#'
/// are skipped. Throws InputError with a line number on malformed input.
SignMatrix parse_sign_matrix(std::istream& in);
SignMatrix parse_sign_matrix(std::string_view text);

/// Inverse of parse_sign_matrix; one line per row, newline-terminated.
std::string to_text(const SignMatrix& s, bool with_header = false);

BooleanMatrix to_boolean(const SignMatrix& s);
SignMatrix to_signed(const BooleanMatrix& b);

RegularityInfo regularity(const BooleanMatrix& b);
inline RegularityInfo regularity(const SignMatrix& s) { return regularity(to_boolean(s)); }

/// Removes repeated rows, keeping the first occurrence of each.
SignMatrix distinct_rows(const SignMatrix& s);
bool has_distinct_rows(const SignMatrix& s);

Eigen::MatrixXd to_real(const SignMatrix& s);
Eigen::MatrixXd to_real(const BooleanMatrix& b);

}  // namespace signrank
