#include "gsemi/fp.hpp"

#include <sstream>
#include <stdexcept>

namespace gsemi {

std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t base = a % p, acc = 1 % p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("fp_inv: zero is not invertible");
  return fp_pow(a % p, p - 2, p);
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Mat::Mat(int rows, int cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_(static_cast<std::size_t>(rows) * cols, 0) {}

Mat Mat::identity(int n, std::uint32_t p) {
  Mat m(n, n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void Mat::set(int r, int c, std::uint32_t v) {
  a_[static_cast<std::size_t>(r) * cols_ + c] = v % p_;
}

bool Mat::is_zero() const {
  for (auto v : a_)
    if (v) return false;
  return true;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r(rows_, cols_, p_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp_add(a_[i], o.a_[i], p_);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r(rows_, cols_, p_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp_sub(a_[i], o.a_[i], p_);
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: shape mismatch");
  Mat r(rows_, o.cols_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      std::uint64_t aik = at(i, k);
      if (!aik) continue;
      for (int j = 0; j < o.cols_; ++j) {
        std::uint64_t v = r.at(i, j) + aik * o.at(k, j) % p_;
        r.a_[static_cast<std::size_t>(i) * o.cols_ + j] =
            static_cast<std::uint32_t>(v >= p_ ? v - p_ : v);
      }
    }
  return r;
}

Mat Mat::scaled(std::uint32_t c) const {
  Mat r(rows_, cols_, p_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp_mul(a_[i], c, p_);
  return r;
}

Mat Mat::negated() const { return scaled(p_ - 1); }

Mat Mat::transposed() const {
  Mat r(cols_, rows_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

void Mat::paste(int r, int c, const Mat& block) {
  for (int i = 0; i < block.rows(); ++i)
    for (int j = 0; j < block.cols(); ++j) set(r + i, c + j, block.at(i, j));
}

Mat Mat::slice(int r0, int r1, int c0, int c1) const {
  Mat r(r1 - r0, c1 - c0, p_);
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j) r.set(i - r0, j - c0, at(i, j));
  return r;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 < cols_ ? " " : "");
    os << (i + 1 < rows_ ? "\n" : "]");
  }
  return os.str();
}

Mat hstack(const Mat& a, const Mat& b) {
  Mat r(a.rows(), a.cols() + b.cols(), a.prime());
  r.paste(0, 0, a);
  r.paste(0, a.cols(), b);
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  Mat r(a.rows() + b.rows(), a.cols(), a.prime());
  r.paste(0, 0, a);
  r.paste(a.rows(), 0, b);
  return r;
}

namespace {

// Row-reduces `m` in place, returns the pivot column of each pivot row.
std::vector<int> rref(Mat& m) {
  std::uint32_t p = m.prime();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) {
        auto t = m.at(row, j);
        m.set(row, j, m.at(piv, j));
        m.set(piv, j, t);
      }
    std::uint32_t inv = fp_inv(m.at(row, col), p);
    for (int j = col; j < m.cols(); ++j) m.set(row, j, fp_mul(m.at(row, j), inv, p));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      std::uint32_t f = m.at(i, col);
      if (!f) continue;
      for (int j = col; j < m.cols(); ++j)
        m.set(i, j, fp_sub(m.at(i, j), fp_mul(f, m.at(row, j), p), p));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

Mat kernel_basis(const Mat& a) {
  Mat m = a;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat basis(a.cols(), static_cast<int>(free_cols.size()), a.prime());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.set(fc, static_cast<int>(k), 1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis.set(pivots[r], static_cast<int>(k), fp_neg(m.at(static_cast<int>(r), fc), a.prime()));
  }
  return basis;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  Mat m = hstack(a, b);
  std::vector<int> pivots = rref(m);
  // A pivot in the augmented block means the system is inconsistent.
  for (int c : pivots)
    if (c >= a.cols()) return std::nullopt;
  Mat x(a.cols(), b.cols(), a.prime());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < b.cols(); ++j)
      x.set(pivots[r], j, m.at(static_cast<int>(r), a.cols() + j));
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto x = solve(a, Mat::identity(a.rows(), a.prime()));
  if (!x) return std::nullopt;
  if (!(a * *x == Mat::identity(a.rows(), a.prime()))) return std::nullopt;
  return x;
}

bool is_invertible(const Mat& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

std::uint32_t Rng::below(std::uint32_t n) {
  return n == 0 ? 0 : static_cast<std::uint32_t>(eng_() % n);
}

}  // namespace gsemi
