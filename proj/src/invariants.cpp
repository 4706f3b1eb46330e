#include "dsq/invariants.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "dsq/jacobi.hpp"
#include "dsq/matrix.hpp"

namespace dsq {

BasicInvariants derive_basic_invariants(const IntPolynomial& p) {
    if (!p.is_monic()) throw std::invalid_argument("not a characteristic polynomial");
    int n = p.degree();
    if (n < 1 || p.c[0] != 0) throw std::invalid_argument("zero is not a root");
    auto sums = power_sums_from_coeffs(p, 1);
    if (sums[1] % 2 != 0) throw std::invalid_argument("odd trace cannot come from a Laplacian");
    BasicInvariants inv;
    inv.n = n;
    inv.m = sums[1] / 2;
    int c = 0;
    while (c < static_cast<int>(p.c.size()) && p.c[c] == 0) ++c;
    inv.components = c;
    if (c == 1) {
        mpz_class low = abs(p.c[1]);
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), low.get_mpz_t(), mpz_class(n).get_mpz_t());
        if (r != 0) throw std::invalid_argument("nonzero-root product not divisible by the order");
        inv.spanning_trees = q;
    } else {
        inv.spanning_trees = 0;
    }
    return inv;
}

DegreeMoments degree_moment_sums(const IntPolynomial& p, const mpz_class& triangles) {
    if (triangles < 0) throw std::invalid_argument("negative triangle count");
    auto inv = derive_basic_invariants(p);
    auto sums = power_sums_from_coeffs(p, 3);
    DegreeMoments dm;
    dm.triangles = triangles;
    dm.s1 = sums[1];
    dm.s2 = sums[2] - 2 * inv.m;
    dm.s3 = sums[3] + 6 * triangles - 3 * dm.s2;
    if (dm.s2 < 0 || dm.s3 < 0) throw std::invalid_argument("derived degree moment is negative");
    return dm;
}

std::vector<DegreeDistribution> solve_degree_distribution(const mpz_class& n, const mpz_class& m,
                                                          const mpz_class& s2, const mpz_class& s3,
                                                          int dmax, bool allow_isolated) {
    if (dmax < 1 || dmax > 5) throw std::invalid_argument("dmax must be between 1 and 5");
    if (n < 0 || m < 0 || s2 < 0 || s3 < 0) throw std::invalid_argument("negative input");
    if (!n.fits_slong_p() || !m.fits_slong_p() || !s2.fits_slong_p() || !s3.fits_slong_p())
        throw std::invalid_argument("inputs beyond supported scale");
    long long N = n.get_si(), M = m.get_si(), S2 = s2.get_si(), S3 = s3.get_si();

    std::vector<DegreeDistribution> out;
    std::array<long long, 6> c{};
    // fix counts for degrees dmax down to 2, then degree 1 is forced by the
    // edge equation and degree 0 by the order equation
    std::function<void(int, long long, long long, long long)> rec =
        [&](int d, long long used, long long sq, long long cb) {
            if (d == 1) {
                long long twice = 2 * M;
                for (int i = 2; i <= 5; ++i) twice -= i * c[i];
                if (twice < 0) return;
                long long n1 = twice;
                long long n0 = N - used - n1;
                if (n0 < 0 || (n0 > 0 && !allow_isolated)) return;
                if (sq + n1 != S2 || cb + n1 != S3) return;
                c[1] = n1;
                c[0] = n0;
                out.push_back(DegreeDistribution{c});
                c[1] = c[0] = 0;
                return;
            }
            long long dd = d, limit_n = N - used;
            long long lim = limit_n;
            if (sq < S2) lim = std::min(lim, (S2 - sq) / (dd * dd));
            for (long long k = 0; k <= lim; ++k) {
                c[d] = k;
                long long nsq = sq + k * dd * dd, ncb = cb + k * dd * dd * dd;
                if (nsq <= S2 && ncb <= S3) rec(d - 1, used + k, nsq, ncb);
            }
            c[d] = 0;
        };
    rec(dmax, 0, 0, 0);
    return out;
}

BoundsReport check_spectral_bounds(const Graph& g, double tol) {
    if (g.size() == 0) throw std::invalid_argument("bounds need at least one edge");
    BoundsReport rep;
    rep.lower = g.max_degree();
    rep.upper = 0;
    for (auto [u, v] : g.edges())
        rep.upper = std::max<long long>(rep.upper, g.degree(u) + g.degree(v));
    auto spec = eigenvalues_float(matrix_of(g, MatrixKind::laplacian));
    rep.mu1 = spec.values.front();
    rep.ok = (static_cast<double>(rep.lower) < rep.mu1 + tol) &&
             (rep.mu1 <= static_cast<double>(rep.upper) + tol);
    return rep;
}

mpz_class spanning_trees_by_cofactor(const Graph& g) {
    int n = g.order();
    if (n == 0) throw std::invalid_argument("empty graph");
    if (n == 1) return 1;
    auto lap = matrix_of(g, MatrixKind::laplacian);
    std::vector<mpz_class> minor(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            minor[static_cast<std::size_t>(i - 1) * (n - 1) + (j - 1)] = lap.at(i, j);
    return determinant(IntSymMatrix(n - 1, std::move(minor), MatrixKind::symmetric));
}

IntPolynomial complement_spectrum(const IntPolynomial& p, int n) {
    if (!p.is_monic() || p.degree() != n) throw std::invalid_argument("polynomial degree mismatch");
    IntPolynomial q = quotient_by_x_power(p, 1);  // throws when zero is not a root
    // q(n - x), then restore the zero root
    IntPolynomial r = shift_argument(reflect(q), mpz_class(-n));
    if (n % 2 == 0) r = scale(r, -1);  // (-1)^(n-1)
    IntPolynomial out = times_x_power(r, 1);
    if (!out.is_monic() || out.degree() != n)
        throw std::logic_error("complement polynomial not monic");
    return out;
}

}  // namespace dsq
