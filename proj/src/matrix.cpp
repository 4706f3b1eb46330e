#include "dsq/matrix.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

namespace dsq {

IntSymMatrix::IntSymMatrix(int n, std::vector<mpz_class> entries, MatrixKind kind)
    : n_(n), a_(std::move(entries)), kind_(kind) {
    if (n < 0 || a_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("entry count does not match dimension");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i)) throw std::invalid_argument("matrix not symmetric");
    if (kind == MatrixKind::adjacency) {
        for (int i = 0; i < n; ++i) {
            if (at(i, i) != 0) throw std::invalid_argument("adjacency diagonal must vanish");
            for (int j = 0; j < n; ++j)
                if (at(i, j) < 0 || at(i, j) > 1)
                    throw std::invalid_argument("adjacency entries must be 0 or 1");
        }
    }
    if (kind == MatrixKind::degree) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j ? at(i, j) != 0 : at(i, i) < 0)
                    throw std::invalid_argument("degree matrix must be nonnegative diagonal");
    }
    if (kind == MatrixKind::laplacian) {
        for (int i = 0; i < n; ++i) {
            if (at(i, i) < 0) throw std::invalid_argument("laplacian diagonal must be nonnegative");
            mpz_class row = 0;
            for (int j = 0; j < n; ++j) row += at(i, j);
            if (row != 0) throw std::invalid_argument("laplacian rows must sum to zero");
        }
    }
}

mpz_class IntSymMatrix::trace() const {
    mpz_class t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

IntSymMatrix matrix_of(const Graph& g, MatrixKind kind) {
    if (kind == MatrixKind::symmetric)
        throw std::invalid_argument("graphs map to adjacency, degree or laplacian matrices");
    int n = g.order();
    std::vector<mpz_class> a(static_cast<std::size_t>(n) * n, 0);
    auto put = [&](int i, int j, long v) { a[static_cast<std::size_t>(i) * n + j] = v; };
    for (int v = 0; v < n; ++v) {
        if (kind != MatrixKind::adjacency) put(v, v, g.degree(v));
        if (kind != MatrixKind::degree)
            for (int w : g.neighbors(v)) put(v, w, kind == MatrixKind::adjacency ? 1 : -1);
    }
    return IntSymMatrix(n, std::move(a), kind);
}

std::vector<mpz_class> power_traces(const IntSymMatrix& m, int kmax) {
    if (kmax < 1) throw std::invalid_argument("kmax must be at least 1");
    int n = m.order();
    std::vector<mpz_class> traces(kmax + 1);
    traces[0] = n;
    std::vector<mpz_class> cur(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cur[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
    auto tr = [&](const std::vector<mpz_class>& a) {
        mpz_class t = 0;
        for (int i = 0; i < n; ++i) t += a[static_cast<std::size_t>(i) * n + i];
        return t;
    };
    traces[1] = tr(cur);
    std::vector<mpz_class> next(static_cast<std::size_t>(n) * n);
    for (int k = 2; k <= kmax; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                mpz_class acc = 0;
                for (int l = 0; l < n; ++l)
                    acc += cur[static_cast<std::size_t>(i) * n + l] * m.at(l, j);
                next[static_cast<std::size_t>(i) * n + j] = acc;
            }
        cur.swap(next);
        traces[k] = tr(cur);
    }
    return traces;
}

namespace {

using int128 = __int128;

// fraction-free elimination over machine words; nullopt on overflow
std::optional<int128> bareiss_small(std::vector<int128> a, int n) {
    if (n == 0) return int128{1};
    int sign = 1;
    int128 prev = 1;
    auto at = [&](int i, int j) -> int128& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p == -1) return int128{0};
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                int128 x, y;
                if (__builtin_mul_overflow(at(i, j), at(k, k), &x)) return std::nullopt;
                if (__builtin_mul_overflow(at(i, k), at(k, j), &y)) return std::nullopt;
                if (__builtin_sub_overflow(x, y, &x)) return std::nullopt;
                at(i, j) = x / prev;
            }
        prev = at(k, k);
    }
    int128 d = at(n - 1, n - 1);
    return sign > 0 ? d : -d;
}

mpz_class bareiss_big(std::vector<mpz_class> a, int n) {
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p == -1) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class x = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
        prev = at(k, k);
    }
    return sign > 0 ? at(n - 1, n - 1) : mpz_class(-at(n - 1, n - 1));
}

mpz_class to_mpz(int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class r = (hi << 64) + static_cast<unsigned long>(u & ~0ULL);
    return neg ? mpz_class(-r) : r;
}

// det(shift*I - M) exactly
mpz_class shifted_det(const IntSymMatrix& m, long shift) {
    int n = m.order();
    bool small = true;
    std::vector<int128> sa;
    sa.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n && small; ++i)
        for (int j = 0; j < n; ++j) {
            const mpz_class& e = m.at(i, j);
            if (!e.fits_slong_p()) {
                small = false;
                break;
            }
            long v = (i == j ? shift - e.get_si() : -e.get_si());
            sa.push_back(v);
        }
    if (small) {
        auto d = bareiss_small(std::move(sa), n);
        if (d) return to_mpz(*d);
    }
    std::vector<mpz_class> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * n + j] =
                (i == j ? mpz_class(shift - m.at(i, j)) : mpz_class(-m.at(i, j)));
    return bareiss_big(std::move(a), n);
}

}  // namespace

mpz_class determinant(const IntSymMatrix& m) {
    int n = m.order();
    std::vector<mpz_class> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
    bool small = true;
    std::vector<int128> sa;
    sa.reserve(a.size());
    for (auto& e : a) {
        if (!e.fits_slong_p()) {
            small = false;
            break;
        }
        sa.push_back(e.get_si());
    }
    if (small) {
        auto d = bareiss_small(std::move(sa), n);
        if (d) return to_mpz(*d);
    }
    return bareiss_big(std::move(a), n);
}

IntPolynomial char_poly(const IntSymMatrix& m) {
    int n = m.order();
    if (n == 0) return poly_constant(1);
    // values of det(xI - M) at x = 0..n
    std::vector<mpz_class> val(n + 1);
    for (int k = 0; k <= n; ++k) val[k] = shifted_det(m, k);
    // forward differences give the coefficients in the falling-factorial basis
    std::vector<mpz_class> diff = val;
    std::vector<mpq_class> coeff;  // monomial basis, rational during assembly
    coeff.assign(n + 1, mpq_class(0));
    std::vector<mpz_class> basis{1};  // product of (x - j), j < k
    mpz_class kfact = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            kfact *= k;
            for (int i = 0; i + k <= n; ++i) diff[i] = diff[i + 1] - diff[i];
            // basis *= (x - (k-1))
            basis.push_back(0);
            for (int i = static_cast<int>(basis.size()) - 1; i > 0; --i)
                basis[i] = basis[i - 1] - (k - 1) * basis[i];
            basis[0] *= -(k - 1);
        }
        mpq_class c(diff[0], kfact);
        c.canonicalize();
        for (std::size_t i = 0; i < basis.size(); ++i) coeff[i] += c * basis[i];
    }
    IntPolynomial p;
    p.c.assign(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        if (coeff[i].get_den() != 1)
            throw std::logic_error("interpolation produced a non-integer coefficient");
        p.c[i] = coeff[i].get_num();
    }
    if (!p.is_monic() || p.degree() != n)
        throw std::logic_error("characteristic polynomial not monic of full degree");
    return p;
}

}  // namespace dsq
