#pragma once

// Exact arithmetic helpers on top of GMP: canonical rationals, fraction
// strings, Bareiss fraction-free determinants and exact matrix inversion.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lozenge {

using BigInt = mpz_class;
using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize on its own.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den) {
    return make_rational(BigInt(num), BigInt(den));
}

inline std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p/q", plain integers, and decimal strings like "-0.5".
Rational rational_from_string(const std::string& s);

inline double to_double(const Rational& q) { return q.get_d(); }

inline BigInt factorial(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// Rising factorial a(a+1)...(a+m-1) over integers.
inline BigInt pochhammer_int(const BigInt& a, unsigned m) {
    BigInt p = 1;
    for (unsigned t = 0; t < m; ++t) p *= a + static_cast<long>(t);
    return p;
}

// Rising factorial over rationals, (y)_0 = 1.
inline Rational pochhammer(const Rational& y, unsigned m) {
    Rational p = 1;
    for (unsigned t = 0; t < m; ++t) p *= y + static_cast<long>(t);
    return p;
}

// Determinant by Bareiss fraction-free elimination. Rational rows are first
// scaled to integers (scale factors divided back out), so intermediate
// entries stay single-division integers.
BigInt det_bareiss_int(std::vector<std::vector<BigInt>> m);
Rational det_bareiss(const std::vector<std::vector<Rational>>& m);

// Exact inverse by Gauss-Jordan over the rationals. Throws on singular.
std::vector<std::vector<Rational>> invert_rational_matrix(
    std::vector<std::vector<Rational>> m);

// Solve m * x = rhs exactly. Throws on singular.
std::vector<Rational> solve_rational_system(std::vector<std::vector<Rational>> m,
                                            std::vector<Rational> rhs);

struct IntSolveResult {
    std::vector<Rational> x;
    BigInt det;  // signed determinant of m
};

// Exact solve of an integer system by fraction-free (Bareiss) forward
// elimination plus rational back-substitution; one pass yields both the
// solution and the determinant.
IntSolveResult solve_int_system(std::vector<std::vector<BigInt>> m, std::vector<BigInt> rhs);

}  // namespace lozenge
