#pragma once

#include <gmpxx.h>

#include <vector>

#include "dsq/graph.hpp"
#include "dsq/poly.hpp"

namespace dsq {

enum class MatrixKind { adjacency, degree, laplacian, symmetric };

// dense symmetric integer matrix; construction validates the kind's shape
class IntSymMatrix {
  public:
    IntSymMatrix(int n, std::vector<mpz_class> entries, MatrixKind kind);

    int order() const { return n_; }
    MatrixKind kind() const { return kind_; }
    const mpz_class& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    mpz_class trace() const;

  private:
    int n_;
    std::vector<mpz_class> a_;
    MatrixKind kind_;
};

IntSymMatrix matrix_of(const Graph& g, MatrixKind kind);

// traces of matrix powers; result[k] = tr(M^k) for k = 1..kmax, result[0] = n
std::vector<mpz_class> power_traces(const IntSymMatrix& m, int kmax);

// exact determinant by fraction-free elimination (machine-word fast path
// with overflow detection, arbitrary precision fallback)
mpz_class determinant(const IntSymMatrix& m);

// exact monic det(xI - M): evaluated at x = 0..n, then interpolated
IntPolynomial char_poly(const IntSymMatrix& m);

}  // namespace dsq
