#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "fq.hpp"

namespace catlim {

// Dense matrix over F_q, row-major. Dimensions may be zero; a 0xN or Nx0
// matrix is a legitimate (empty) linear map.
class Mat {
 public:
  Mat() = default;
  Mat(Fq field, int rows, int cols)
      : field_(field), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
    require(rows >= 0 && cols >= 0, Errc::invalid_argument, "negative matrix dimension");
  }

  static Mat identity(Fq field, int n) {
    Mat m(field, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Mat from_rows(Fq field, std::initializer_list<std::initializer_list<int>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    Mat m(field, r, c);
    int i = 0;
    for (const auto& row : rows) {
      require(static_cast<int>(row.size()) == c, Errc::invalid_argument, "ragged matrix rows");
      int j = 0;
      for (int v : row) m(i, j++) = static_cast<std::uint8_t>(((v % field.q) + field.q) % field.q);
      ++i;
    }
    return m;
  }

  // Column vector from entries.
  static Mat column(Fq field, const std::vector<std::uint8_t>& entries) {
    Mat m(field, static_cast<int>(entries.size()), 1);
    for (int i = 0; i < m.rows(); ++i) m(i, 0) = static_cast<std::uint8_t>(entries[i] % field.q);
    return m;
  }

  Fq field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint8_t operator()(int r, int c) const { return a_[idx(r, c)]; }
  std::uint8_t& operator()(int r, int c) { return a_[idx(r, c)]; }

  bool operator==(const Mat& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_zero() const {
    for (std::uint8_t v : a_)
      if (v != 0) return false;
    return true;
  }

  const std::vector<std::uint8_t>& flat() const { return a_; }

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  Fq field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> a_;
};

Mat mul(const Mat& a, const Mat& b);
Mat add(const Mat& a, const Mat& b);
Mat scaled(const Mat& a, std::uint8_t k);
Mat transpose(const Mat& a);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

// Reduced row echelon form; pivot columns (ascending) appended to *pivots.
Mat rref(Mat a, std::vector<int>* pivots = nullptr);
int rank(const Mat& a);

// Columns form the canonical kernel basis (one per free column of rref,
// ascending). Kernel of a 0xN matrix is all of F^N.
Mat kernel_basis(const Mat& a);

// A solution X of A*X = B, free variables set to zero; nullopt if
// inconsistent. Unique when A has full column rank.
std::optional<Mat> solve(const Mat& a, const Mat& b);

std::optional<Mat> inverse(const Mat& a);
bool is_invertible(const Mat& a);

}  // namespace catlim
