#include "lozenge/rational.hpp"

#include <cstddef>

namespace lozenge {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        return make_rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits == "-" || digits.empty())
            throw std::invalid_argument("bad decimal: " + s);
        BigInt num(digits);
        BigInt den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        return make_rational(num, den);
    }
    return Rational(BigInt(s));
}

BigInt det_bareiss_int(std::vector<std::vector<BigInt>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    for (auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");

    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : BigInt(-m[n - 1][n - 1]);
}

Rational det_bareiss(const std::vector<std::vector<Rational>>& m) {
    const size_t n = m.size();
    if (n == 0) return Rational(1);

    // Clear denominators row by row, remembering the scale.
    std::vector<std::vector<BigInt>> im(n, std::vector<BigInt>(n));
    BigInt scale = 1;
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("determinant of non-square matrix");
        BigInt l = 1;
        for (size_t j = 0; j < n; ++j) {
            BigInt g;
            mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), m[i][j].get_den().get_mpz_t());
            l = g;
        }
        for (size_t j = 0; j < n; ++j) {
            im[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
        }
        scale *= l;
    }
    return make_rational(det_bareiss_int(std::move(im)), scale);
}

std::vector<std::vector<Rational>> invert_rational_matrix(std::vector<std::vector<Rational>> m) {
    const size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("inverse of non-square matrix");
        inv[i][i] = 1;
    }
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        std::swap(m[k], m[p]);
        std::swap(inv[k], inv[p]);
        Rational piv = m[k][k];
        for (size_t j = 0; j < n; ++j) {
            m[k][j] /= piv;
            inv[k][j] /= piv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0) continue;
            Rational f = m[i][k];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

IntSolveResult solve_int_system(std::vector<std::vector<BigInt>> m, std::vector<BigInt> rhs) {
    const size_t n = m.size();
    if (rhs.size() != n) throw std::invalid_argument("solve: size mismatch");
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("solve: non-square matrix");
        m[i].push_back(rhs[i]);
    }
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) throw std::domain_error("singular system");
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j <= n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    if (m[n - 1][n - 1] == 0) throw std::domain_error("singular system");

    IntSolveResult res;
    res.det = sign > 0 ? m[n - 1][n - 1] : BigInt(-m[n - 1][n - 1]);
    res.x.assign(n, Rational(0));
    for (size_t i = n; i-- > 0;) {
        Rational acc(m[i][n]);
        for (size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * res.x[j];
        acc /= Rational(m[i][i]);
        res.x[i] = acc;
    }
    return res;
}

std::vector<Rational> solve_rational_system(std::vector<std::vector<Rational>> m,
                                            std::vector<Rational> rhs) {
    const size_t n = m.size();
    if (rhs.size() != n) throw std::invalid_argument("solve: size mismatch");
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) throw std::domain_error("singular system");
        std::swap(m[k], m[p]);
        std::swap(rhs[k], rhs[p]);
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
            rhs[i] -= f * rhs[k];
        }
    }
    std::vector<Rational> x(n, Rational(0));
    for (size_t i = n; i-- > 0;) {
        Rational acc = rhs[i];
        for (size_t j = i + 1; j < n; ++j) acc -= m[i][j] * x[j];
        x[i] = acc / m[i][i];
    }
    return x;
}

}  // namespace lozenge
