#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gsemi {

// Dense matrices over F_p. Everything in this project is desk-scale, so the
// implementation is plain Gaussian elimination with no attempt at sparsity.
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols, std::uint32_t p);

  static Mat identity(int n, std::uint32_t p);
  static Mat zero(int rows, int cols, std::uint32_t p) { return Mat(rows, cols, p); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }

  std::uint32_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, std::uint32_t v);

  bool is_zero() const;
  bool operator==(const Mat& o) const = default;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(std::uint32_t c) const;
  Mat negated() const;
  Mat transposed() const;

  // Pastes `block` with top-left corner at (r, c).
  void paste(int r, int c, const Mat& block);
  Mat slice(int r0, int r1, int c0, int c1) const;

  std::string to_string() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> a_;
};

std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p);
std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint32_t n);

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

int rank(Mat m);
// Columns form a basis of {x : a x = 0}.
Mat kernel_basis(const Mat& a);
// One solution x of a x = b (free variables set to zero), if consistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);
std::optional<Mat> inverse(const Mat& a);
bool is_invertible(const Mat& a);

// Deterministic RNG used for all sampling in the oracle.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint32_t below(std::uint32_t n);                 // uniform in [0, n)
  std::uint32_t fp_element(std::uint32_t p) { return below(p); }
  std::uint64_t raw() { return eng_(); }

private:
  std::mt19937_64 eng_;
};

}  // namespace gsemi
