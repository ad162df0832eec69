#include "idem/matrix.hpp"

#include "idem/error.hpp"

#include <utility>

namespace idem {

void require_same_semiring(const Semiring& a, const Semiring& b) {
  if (!(a == b)) fail(ErrorKind::SemiringMismatch, a.name() + " vs " + b.name());
}

namespace {

std::string shape_str(const DenseMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

DenseMatrix::DenseMatrix(Semiring s, std::size_t rows, std::size_t cols, std::vector<Element> data)
    : semiring_(std::move(s)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows_ == 0 || cols_ == 0) fail(ErrorKind::ShapeMismatch, "matrix dimensions must be positive");
  if (data_.size() != rows_ * cols_)
    fail(ErrorKind::ShapeMismatch, "matrix data length does not match its shape");
  for (const Element& e : data_) semiring_.require(e);
}

DenseMatrix DenseMatrix::zero(const Semiring& s, std::size_t rows, std::size_t cols) {
  return DenseMatrix(s, rows, cols, std::vector<Element>(rows * cols, s.zero()));
}

DenseMatrix DenseMatrix::identity(const Semiring& s, std::size_t n) {
  std::vector<Element> data(n * n, s.zero());
  for (std::size_t i = 0; i < n; ++i) data[i * n + i] = s.one();
  return DenseMatrix(s, n, n, std::move(data));
}

DenseMatrix DenseMatrix::with(std::size_t i, std::size_t j, Element value) const {
  if (i >= rows_ || j >= cols_) fail(ErrorKind::ShapeMismatch, "index out of range");
  std::vector<Element> data = data_;
  data[i * cols_ + j] = std::move(value);
  return DenseMatrix(semiring_, rows_, cols_, std::move(data));
}

DenseMatrix DenseMatrix::retag(const Semiring& s) const { return DenseMatrix(s, rows_, cols_, data_); }

DenseVector::DenseVector(Semiring s, std::vector<Element> data)
    : semiring_(std::move(s)), data_(std::move(data)) {
  if (data_.empty()) fail(ErrorKind::ShapeMismatch, "vector length must be positive");
  for (const Element& e : data_) semiring_.require(e);
}

DenseVector DenseVector::zero(const Semiring& s, std::size_t n) {
  return DenseVector(s, std::vector<Element>(n, s.zero()));
}

DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_semiring(a.semiring(), b.semiring());
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorKind::ShapeMismatch, "mat_add " + shape_str(a) + " + " + shape_str(b));
  const Semiring& s = a.semiring();
  std::vector<Element> out;
  out.reserve(a.data().size());
  for (std::size_t i = 0; i < a.data().size(); ++i) out.push_back(s.add(a.data()[i], b.data()[i]));
  return DenseMatrix(s, a.rows(), a.cols(), std::move(out));
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_semiring(a.semiring(), b.semiring());
  if (a.cols() != b.rows())
    fail(ErrorKind::ShapeMismatch, "mat_mul " + shape_str(a) + " * " + shape_str(b));
  const Semiring& s = a.semiring();
  std::vector<Element> out;
  out.reserve(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Element acc = s.zero();
      for (std::size_t k = 0; k < a.cols(); ++k) acc = s.add(acc, s.mul(a(i, k), b(k, j)));
      out.push_back(std::move(acc));
    }
  }
  return DenseMatrix(s, a.rows(), b.cols(), std::move(out));
}

DenseMatrix mat_pow(const DenseMatrix& a, unsigned k) {
  if (!a.square()) fail(ErrorKind::ShapeMismatch, "mat_pow needs a square matrix");
  DenseMatrix result = DenseMatrix::identity(a.semiring(), a.rows());
  DenseMatrix base = a;
  while (k > 0) {
    if (k & 1u) result = mat_mul(result, base);
    k >>= 1u;
    if (k > 0) base = mat_mul(base, base);
  }
  return result;
}

DenseVector vec_add(const DenseVector& x, const DenseVector& y) {
  require_same_semiring(x.semiring(), y.semiring());
  if (x.size() != y.size()) fail(ErrorKind::ShapeMismatch, "vector lengths differ");
  std::vector<Element> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x.semiring().add(x[i], y[i]));
  return DenseVector(x.semiring(), std::move(out));
}

Element dot(const DenseVector& x, const DenseVector& y) {
  require_same_semiring(x.semiring(), y.semiring());
  if (x.size() != y.size()) fail(ErrorKind::ShapeMismatch, "vector lengths differ");
  const Semiring& s = x.semiring();
  Element acc = s.zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = s.add(acc, s.mul(x[i], y[i]));
  return acc;
}

DenseVector scale(const Element& lambda, const DenseVector& v) {
  const Semiring& s = v.semiring();
  s.require(lambda);
  std::vector<Element> out;
  out.reserve(v.size());
  for (const Element& e : v.data()) out.push_back(s.mul(lambda, e));
  return DenseVector(s, std::move(out));
}

DenseVector mat_vec(const DenseMatrix& a, const DenseVector& x) {
  require_same_semiring(a.semiring(), x.semiring());
  if (a.cols() != x.size()) fail(ErrorKind::ShapeMismatch, "mat_vec shape mismatch");
  const Semiring& s = a.semiring();
  std::vector<Element> out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Element acc = s.zero();
    for (std::size_t k = 0; k < a.cols(); ++k) acc = s.add(acc, s.mul(a(i, k), x[k]));
    out.push_back(std::move(acc));
  }
  return DenseVector(s, std::move(out));
}

bool equivalent(const DenseMatrix& a, const DenseMatrix& b) {
  if (!(a.semiring() == b.semiring()) || a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    if (!a.semiring().equivalent(a.data()[i], b.data()[i])) return false;
  return true;
}

}  // namespace idem
