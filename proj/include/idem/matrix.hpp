#pragma once

#include "idem/semiring.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace idem {

/// Row-major rectangular matrix over one semiring. Entries are validated
/// against the carrier at construction.
class DenseMatrix {
 public:
  /// Throws ShapeMismatch if data.size() != rows*cols or a dimension is
  /// zero, CarrierMismatch for a foreign entry.
  DenseMatrix(Semiring s, std::size_t rows, std::size_t cols, std::vector<Element> data);

  /// rows×cols filled with 𝟘.
  static DenseMatrix zero(const Semiring& s, std::size_t rows, std::size_t cols);
  /// n×n with 𝟙 on the diagonal and 𝟘 elsewhere.
  static DenseMatrix identity(const Semiring& s, std::size_t n);

  const Semiring& semiring() const { return semiring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Element> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  const std::vector<Element>& data() const { return data_; }

  /// Copy with entry (i, j) replaced; validates the new entry.
  DenseMatrix with(std::size_t i, std::size_t j, Element value) const;

  /// Same entries reinterpreted under another signature (CarrierMismatch if
  /// any entry does not belong to it).
  DenseMatrix retag(const Semiring& s) const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  Semiring semiring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// Element of the free semimodule Sⁿ.
class DenseVector {
 public:
  DenseVector(Semiring s, std::vector<Element> data);

  static DenseVector zero(const Semiring& s, std::size_t n);

  const Semiring& semiring() const { return semiring_; }
  std::size_t size() const { return data_.size(); }
  const Element& operator[](std::size_t i) const { return data_[i]; }
  const std::vector<Element>& data() const { return data_; }

  friend bool operator==(const DenseVector&, const DenseVector&) = default;

 private:
  Semiring semiring_;
  std::vector<Element> data_;
};

DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b);

/// (AB)_ij = ⊕_k a_ik ⊙ b_kj, accumulated from 𝟘 in ascending k.
DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);

/// A^k by repeated squaring; A⁰ = E.
DenseMatrix mat_pow(const DenseMatrix& a, unsigned k);

DenseVector vec_add(const DenseVector& x, const DenseVector& y);

/// ⊕_i x_i ⊙ y_i.
Element dot(const DenseVector& x, const DenseVector& y);

/// λ ⊙ v entrywise.
DenseVector scale(const Element& lambda, const DenseVector& v);

DenseVector mat_vec(const DenseMatrix& a, const DenseVector& x);

/// Entries compared with Semiring::equivalent.
bool equivalent(const DenseMatrix& a, const DenseMatrix& b);

void require_same_semiring(const Semiring& a, const Semiring& b);

}  // namespace idem
