#include "dsq/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace dsq {

namespace {

void normalize(std::vector<mpz_class>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPolynomial::to_string() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& k = c[i];
        if (k == 0) continue;
        mpz_class a = abs(k);
        if (first) {
            if (k < 0) os << "-";
            first = false;
        } else {
            os << (k < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

IntPolynomial poly_constant(const mpz_class& v) {
    IntPolynomial p;
    if (v != 0) p.c.push_back(v);
    return p;
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.c.empty() || b.c.empty()) return {};
    IntPolynomial r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    normalize(r.c);
    return r;
}

IntPolynomial scale(const IntPolynomial& p, const mpz_class& k) {
    IntPolynomial r;
    if (k == 0) return r;
    r.c.reserve(p.c.size());
    for (auto& v : p.c) r.c.push_back(v * k);
    return r;
}

IntPolynomial shift_argument(const IntPolynomial& p, const mpz_class& a) {
    IntPolynomial r = p;
    int n = r.degree();
    for (int k = 0; k < n; ++k)
        for (int j = n - 1; j >= k; --j) r.c[j] += a * r.c[j + 1];
    return r;
}

IntPolynomial reflect(const IntPolynomial& p) {
    IntPolynomial r = p;
    for (std::size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
    return r;
}

IntPolynomial times_x_power(const IntPolynomial& p, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    if (p.c.empty()) return {};
    IntPolynomial r;
    r.c.assign(p.c.size() + k, 0);
    for (std::size_t i = 0; i < p.c.size(); ++i) r.c[i + k] = p.c[i];
    return r;
}

IntPolynomial quotient_by_x_power(const IntPolynomial& p, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    if (static_cast<int>(p.c.size()) < k) throw std::invalid_argument("degree too low");
    for (int i = 0; i < k; ++i)
        if (p.c[i] != 0) throw std::invalid_argument("zero is not a root of that multiplicity");
    IntPolynomial r;
    r.c.assign(p.c.begin() + k, p.c.end());
    return r;
}

std::vector<mpz_class> power_sums_from_coeffs(const IntPolynomial& p, int kmax) {
    if (!p.is_monic()) throw std::invalid_argument("polynomial not monic");
    if (kmax < 0) throw std::invalid_argument("negative kmax");
    int n = p.degree();
    // e[i] = i-th elementary symmetric function of the roots
    std::vector<mpz_class> e(n + 1);
    for (int i = 0; i <= n; ++i) {
        e[i] = p.c[n - i];
        if (i % 2) e[i] = -e[i];
    }
    std::vector<mpz_class> ps(kmax + 1);
    ps[0] = n;
    for (int k = 1; k <= kmax; ++k) {
        mpz_class acc = 0;
        for (int i = 1; i < k; ++i) {
            if (i > n) break;
            mpz_class term = e[i] * ps[k - i];
            acc += (i % 2) ? term : -term;
        }
        if (k <= n) {
            mpz_class term = k * e[k];
            acc += (k % 2) ? term : -term;
        }
        ps[k] = acc;
    }
    return ps;
}

IntPolynomial coeffs_from_power_sums(const std::vector<mpz_class>& sums, int n) {
    if (static_cast<int>(sums.size()) < n + 1)
        throw std::invalid_argument("need power sums up to the degree");
    std::vector<mpz_class> e(n + 1);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        mpz_class acc = 0;
        for (int i = 1; i <= k; ++i) {
            mpz_class term = e[k - i] * sums[i];
            acc += (i % 2) ? term : -term;
        }
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), mpz_class(k).get_mpz_t());
        if (r != 0) throw std::invalid_argument("power sums are not those of an integer polynomial");
        e[k] = q;
    }
    IntPolynomial p;
    p.c.assign(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        p.c[n - i] = e[i];
        if (i % 2) p.c[n - i] = -p.c[n - i];
    }
    return p;
}

}  // namespace dsq
