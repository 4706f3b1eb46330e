#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dsq {

// coefficients ascending: c[i] multiplies x^i; normalized so c.back() != 0
// (the zero polynomial is the empty vector)
struct IntPolynomial {
    std::vector<mpz_class> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    mpz_class evaluate(const mpz_class& x) const;
    std::string to_string() const;

    bool operator==(const IntPolynomial&) const = default;
};

IntPolynomial poly_constant(const mpz_class& v);

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial scale(const IntPolynomial& p, const mpz_class& k);

// p(x + a)
IntPolynomial shift_argument(const IntPolynomial& p, const mpz_class& a);
// p(-x)
IntPolynomial reflect(const IntPolynomial& p);
// p * x^k
IntPolynomial times_x_power(const IntPolynomial& p, int k);
// p / x^k; throws unless the k lowest coefficients vanish
IntPolynomial quotient_by_x_power(const IntPolynomial& p, int k);

// power sums p_0..p_kmax of the roots of a monic polynomial; p_0 = degree
std::vector<mpz_class> power_sums_from_coeffs(const IntPolynomial& p, int kmax);

// monic degree-n polynomial whose root power sums are sums[1..n]; the
// divisions demanded by the recurrence must be exact (throws otherwise)
IntPolynomial coeffs_from_power_sums(const std::vector<mpz_class>& sums, int n);

}  // namespace dsq
