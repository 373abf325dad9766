#include "signrank/matrix.hpp"

#include <bit>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "signrank/errors.hpp"

namespace signrank {

namespace {

std::string row_key(const SignMatrix& s, std::size_t r) {
  auto bits = s.row_bits(r);
  return std::string(reinterpret_cast<const char*>(bits.data()), bits.size() * sizeof(std::uint64_t));
}

}  // namespace

SignMatrix::SignMatrix(std::size_t rows, std::size_t cols, std::vector<std::int8_t> entries)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw InputError("sign matrix must have at least one row and one column");
  }
  if (entries_.size() != rows_ * cols_) {
    throw InputError("sign matrix entry count does not match its shape");
  }
  bits_.assign(rows_ * words_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto v = entries_[r * cols_ + c];
      if (v == 1) {
        bits_[r * words_ + (c >> 6)] |= std::uint64_t{1} << (c & 63);
      } else if (v != -1) {
        throw InputError("sign matrix entries must be +1 or -1");
      }
    }
  }
}

SignMatrix SignMatrix::filled(std::size_t rows, std::size_t cols, int value) {
  return SignMatrix(rows, cols, std::vector<std::int8_t>(rows * cols, static_cast<std::int8_t>(value)));
}

SignMatrix SignMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw InputError("sign matrix must have at least one row");
  const std::size_t cols = rows.front().size();
  std::vector<std::int8_t> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw InputError("ragged rows");
    for (int v : row) entries.push_back(static_cast<std::int8_t>(v));
  }
  return SignMatrix(rows.size(), cols, std::move(entries));
}

std::size_t SignMatrix::row_distance(std::size_t a, std::size_t b) const noexcept {
  std::size_t d = 0;
  const auto* x = bits_.data() + a * words_;
  const auto* y = bits_.data() + b * words_;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(x[w] ^ y[w]);
  return d;
}

bool SignMatrix::rows_equal(std::size_t a, std::size_t b) const noexcept {
  const auto* x = bits_.data() + a * words_;
  const auto* y = bits_.data() + b * words_;
  for (std::size_t w = 0; w < words_; ++w) {
    if (x[w] != y[w]) return false;
  }
  return true;
}

SignMatrix SignMatrix::select_rows(std::span<const std::size_t> rows) const {
  std::vector<std::int8_t> out;
  out.reserve(rows.size() * cols_);
  for (auto r : rows) {
    if (r >= rows_) throw InputError("row index out of range");
    auto src = row(r);
    out.insert(out.end(), src.begin(), src.end());
  }
  return SignMatrix(rows.size(), cols_, std::move(out));
}

SignMatrix SignMatrix::select_cols(std::span<const std::size_t> cols) const {
  for (auto c : cols) {
    if (c >= cols_) throw InputError("column index out of range");
  }
  std::vector<std::int8_t> out;
  out.reserve(rows_ * cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (auto c : cols) out.push_back(entries_[r * cols_ + c]);
  }
  return SignMatrix(rows_, cols.size(), std::move(out));
}

BooleanMatrix::BooleanMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw InputError("boolean matrix must have at least one row and one column");
  }
  if (entries_.size() != rows_ * cols_) {
    throw InputError("boolean matrix entry count does not match its shape");
  }
  for (auto v : entries_) {
    if (v > 1) throw InputError("boolean matrix entries must be 0 or 1");
  }
}

BooleanMatrix BooleanMatrix::ones(std::size_t rows, std::size_t cols) {
  return BooleanMatrix(rows, cols, std::vector<std::uint8_t>(rows * cols, 1));
}

BooleanMatrix BooleanMatrix::identity(std::size_t n) {
  std::vector<std::uint8_t> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return BooleanMatrix(n, n, std::move(e));
}

std::size_t BooleanMatrix::count_ones() const noexcept {
  std::size_t n = 0;
  for (auto v : entries_) n += v;
  return n;
}

SignMatrix parse_sign_matrix(std::istream& in) {
  std::vector<std::int8_t> entries;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (line.empty() || line.front() == '#') continue;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char ch = line[i];
      if (ch == '+') {
        entries.push_back(1);
      } else if (ch == '-') {
        entries.push_back(-1);
      } else {
        std::ostringstream msg;
        msg << "line " << line_no << ": illegal character '" << ch << "' at column " << (i + 1);
        throw InputError(msg.str());
      }
    }
    if (rows == 0) {
      cols = line.size();
    } else if (line.size() != cols) {
      std::ostringstream msg;
      msg << "line " << line_no << ": expected " << cols << " entries, found " << line.size();
      throw InputError(msg.str());
    }
    ++rows;
  }
  if (rows == 0) throw InputError("empty matrix input");
  return SignMatrix(rows, cols, std::move(entries));
}

SignMatrix parse_sign_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_sign_matrix(in);
}

std::string to_text(const SignMatrix& s, bool with_header) {
  std::string out;
  out.reserve(s.rows() * (s.cols() + 1) + 32);
  if (with_header) {
    out += "# rows=" + std::to_string(s.rows()) + " cols=" + std::to_string(s.cols()) + "\n";
  }
  for (std::size_t r = 0; r < s.rows(); ++r) {
    for (auto v : s.row(r)) out.push_back(v > 0 ? '+' : '-');
    out.push_back('\n');
  }
  return out;
}

BooleanMatrix to_boolean(const SignMatrix& s) {
  std::vector<std::uint8_t> e;
  e.reserve(s.entries().size());
  for (auto v : s.entries()) e.push_back(static_cast<std::uint8_t>((v + 1) / 2));
  return BooleanMatrix(s.rows(), s.cols(), std::move(e));
}

SignMatrix to_signed(const BooleanMatrix& b) {
  std::vector<std::int8_t> e;
  e.reserve(b.entries().size());
  for (auto v : b.entries()) e.push_back(static_cast<std::int8_t>(2 * v - 1));
  return SignMatrix(b.rows(), b.cols(), std::move(e));
}

RegularityInfo regularity(const BooleanMatrix& b) {
  std::vector<std::size_t> row_sum(b.rows(), 0);
  std::vector<std::size_t> col_sum(b.cols(), 0);
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      row_sum[r] += b(r, c);
      col_sum[c] += b(r, c);
    }
  }
  auto all_equal = [](const std::vector<std::size_t>& v) {
    for (auto x : v) {
      if (x != v.front()) return false;
    }
    return true;
  };
  RegularityInfo info;
  info.is_row_regular = all_equal(row_sum);
  info.is_col_regular = all_equal(col_sum);
  if (b.rows() == b.cols() && info.is_row_regular && info.is_col_regular &&
      row_sum.front() == col_sum.front()) {
    info.degree = row_sum.front();
  }
  return info;
}

SignMatrix distinct_rows(const SignMatrix& s) {
  std::unordered_set<std::string> seen;
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < s.rows(); ++r) {
    if (seen.insert(row_key(s, r)).second) keep.push_back(r);
  }
  if (keep.size() == s.rows()) return s;
  return s.select_rows(keep);
}

bool has_distinct_rows(const SignMatrix& s) {
  std::unordered_set<std::string> seen;
  for (std::size_t r = 0; r < s.rows(); ++r) {
    if (!seen.insert(row_key(s, r)).second) return false;
  }
  return true;
}

Eigen::MatrixXd to_real(const SignMatrix& s) {
  Eigen::MatrixXd m(s.rows(), s.cols());
  for (std::size_t r = 0; r < s.rows(); ++r) {
    for (std::size_t c = 0; c < s.cols(); ++c) m(r, c) = s(r, c);
  }
  return m;
}

Eigen::MatrixXd to_real(const BooleanMatrix& b) {
  Eigen::MatrixXd m(b.rows(), b.cols());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, c) = b(r, c);
  }
  return m;
}

}  // namespace signrank
