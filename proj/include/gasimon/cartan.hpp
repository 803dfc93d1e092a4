#pragma once

#include <vector>

#include "gasimon/function_table.hpp"
#include "gasimon/gaussian_int.hpp"
#include "gasimon/multivector.hpp"

namespace gasimon {

/// Square matrix of dimension 2^N over Gaussian integers, row-major.
class DenseMatrix {
public:
  DenseMatrix(int width, bool identity = false);

  int width() const { return width_; }
  int dim() const { return dim_; }

  const GaussianInt& at(int r, int c) const { return entries_[index(r, c)]; }
  GaussianInt& at(int r, int c) { return entries_[index(r, c)]; }

  bool operator==(const DenseMatrix& other) const = default;

  /// Rows of comma-separated complex tokens, one row per line.
  std::string str() const;
  static DenseMatrix parse(std::string_view text);

private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * dim_ + c;
  }

  int width_;
  int dim_;
  std::vector<GaussianInt> entries_;
};

/// Exact product; throws DimError on mismatched dimensions.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

/// Sum of the diagonal.
GaussianInt trace(const DenseMatrix& a);

/// Tr(a * b) without materializing the product.
GaussianInt trace_of_product(const DenseMatrix& a, const DenseMatrix& b);

/// Independent dense oracle for the blade engine: blades realized as
/// Kronecker products of Pauli factors, coefficients recovered by traces.
/// Matrices are dense and exact; cost grows as 4^(n+m), so widths are
/// gated by `limit` (default 8, hard cap 12).
class CartanBackend {
public:
  static constexpr int kDefaultLimit = 8;
  static constexpr int kHardLimit = 12;

  explicit CartanBackend(int limit = kDefaultLimit);

  int limit() const { return limit_; }

  /// Generator i of the width-N algebra, 1-based: the first N of the 2N
  /// ladder generators, sigma_3 type for odd i and sigma_2 type for even.
  /// Squares to identity and is traceless.
  DenseMatrix generator_matrix(int i, int width) const;

  /// Ordered product of generator_matrix over the set positions of X,
  /// ascending; the all-zero index gives the identity.
  DenseMatrix blade_matrix(const BitString& x) const;

  /// Sum of coeff * blade_matrix(key) over all terms.
  DenseMatrix multivector_to_matrix(const Multivector& m) const;

  /// Coefficient of e_X inside the multivector represented by `a`:
  /// sign(grade) / 2^N * Tr(blade_matrix(X) * a). Throws
  /// NotMultivectorError when the division is inexact or an imaginary
  /// residue remains.
  Coefficient coefficient_from_matrix(const DenseMatrix& a, const BitString& x) const;

  /// Full extraction over all 2^width blades, zeros pruned.
  Multivector matrix_to_multivector(const DenseMatrix& a, int width) const;

  /// Pipeline through the matrix representation: the oracle output
  /// U_f E_n e_0 is built at the blade level (the gate itself has no
  /// matrix form), converted to a matrix, multiplied by F_n's matrix,
  /// and extracted back.
  Multivector run_pipeline_matrix(const FunctionTable& f) const;

private:
  void check_width(int width) const;

  int limit_;
};

}  // namespace gasimon
