#pragma once

#include <vector>

#include "dsq/matrix.hpp"

namespace dsq {

struct SpectrumFloat {
    std::vector<double> values;  // descending
    double tol;
};

// cyclic Jacobi rotations until every off-diagonal magnitude drops below tol;
// throws if a bounded sweep count is exceeded or the eigenvalue sum drifts
// from the trace by more than n*tol
SpectrumFloat eigenvalues_float(const IntSymMatrix& m, double tol = 1e-12);

}  // namespace dsq
