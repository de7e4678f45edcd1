#include "matrix.hpp"

namespace catlim {

namespace {

void check_same_field(const Mat& a, const Mat& b) {
  require(a.field() == b.field(), Errc::type_mismatch, "matrices over different fields");
}

}  // namespace

Mat mul(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  require(a.cols() == b.rows(), Errc::type_mismatch, "matrix product dimension mismatch");
  Fq f = a.field();
  Mat c(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      std::uint8_t aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  return c;
}

Mat add(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  require(a.rows() == b.rows() && a.cols() == b.cols(), Errc::type_mismatch,
          "matrix sum dimension mismatch");
  Fq f = a.field();
  Mat c(f, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  return c;
}

Mat scaled(const Mat& a, std::uint8_t k) {
  Fq f = a.field();
  Mat c(f, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = f.mul(a(i, j), static_cast<std::uint8_t>(k % f.q));
  return c;
}

Mat transpose(const Mat& a) {
  Mat t(a.field(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Mat hstack(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  require(a.rows() == b.rows(), Errc::type_mismatch, "hstack row mismatch");
  Mat c(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

Mat vstack(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  require(a.cols() == b.cols(), Errc::type_mismatch, "vstack column mismatch");
  Mat c(a.field(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

Mat rref(Mat a, std::vector<int>* pivots) {
  Fq f = a.field();
  int lead = 0;
  for (int col = 0; col < a.cols() && lead < a.rows(); ++col) {
    int pivot = -1;
    for (int r = lead; r < a.rows(); ++r)
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(lead, j));
    std::uint8_t inv = f.inv(a(lead, col));
    for (int j = 0; j < a.cols(); ++j) a(lead, j) = f.mul(a(lead, j), inv);
    for (int r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, col) == 0) continue;
      std::uint8_t factor = a(r, col);
      for (int j = 0; j < a.cols(); ++j)
        a(r, j) = f.sub(a(r, j), f.mul(factor, a(lead, j)));
    }
    if (pivots) pivots->push_back(col);
    ++lead;
  }
  return a;
}

int rank(const Mat& a) {
  std::vector<int> pivots;
  rref(a, &pivots);
  return static_cast<int>(pivots.size());
}

Mat kernel_basis(const Mat& a) {
  std::vector<int> pivots;
  Mat r = rref(a, &pivots);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<int> free_cols;
  for (int c = 0; c < a.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

  Fq f = a.field();
  Mat basis(f, a.cols(), static_cast<int>(free_cols.size()));
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    int fc = free_cols[static_cast<std::size_t>(k)];
    basis(fc, k) = 1;
    // pivot row i has its pivot in pivots[i]; solve pivot entry against the
    // free column's coefficient
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
      basis(pivots[static_cast<std::size_t>(i)], k) = f.neg(r(i, fc));
  }
  return basis;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  require(a.rows() == b.rows(), Errc::type_mismatch, "solve: row mismatch");
  std::vector<int> pivots;
  Mat r = rref(hstack(a, b), &pivots);
  // Any pivot landing in the b-block marks an inconsistent system.
  for (int p : pivots)
    if (p >= a.cols()) return std::nullopt;
  Mat x(a.field(), a.cols(), b.cols());
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
    for (int j = 0; j < b.cols(); ++j)
      x(pivots[static_cast<std::size_t>(i)], j) = r(i, a.cols() + j);
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, Mat::identity(a.field(), a.rows()));
}

bool is_invertible(const Mat& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

}  // namespace catlim
