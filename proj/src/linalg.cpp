#include "semireflex/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace semireflex {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Floor division with positive divisor.
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

// Fraction-free (Bareiss) forward elimination into row echelon form.
// Returns the rank; records pivot columns and the sign of the row permutation.
int bareiss_forward(IntMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr, int* sign = nullptr) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Int prev = 1;
    int s = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m.at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            m.swap_rows(p, r);
            s = -s;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int num = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
                assert(num % prev == 0);
                m.at(i, j) = num / prev;
            }
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    if (sign) *sign = s;
    return static_cast<int>(r);
}

// Clears denominators row by row; preserves rank and solution sets of A x = b
// when b is carried as an extra column.
IntMatrix clear_denominators(const RatMatrix& a) {
    IntMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Int scale = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) scale = lcm(scale, denominator(a.at(i, j)));
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& e = a.at(i, j);
            m.at(i, j) = numerator(e) * (scale / denominator(e));
        }
    }
    return m;
}

}  // namespace

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw dimension_error("dot: length mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw dimension_error("dot: length mismatch");
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Rational dot(const IntVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw dimension_error("dot: length mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += Rational(a[i]) * b[i];
    return acc;
}

RatVector to_rational(const IntVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

std::optional<RatVector> solve_linear_system(const RatMatrix& a, const RatVector& b) {
    const std::size_t d = a.rows();
    if (a.cols() != d) throw dimension_error("solve_linear_system: matrix not square");
    if (b.size() != d) throw dimension_error("solve_linear_system: rhs length mismatch");

    RatMatrix aug(d, d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, d) = b[i];
    }
    IntMatrix m = clear_denominators(aug);
    std::vector<std::size_t> pivots;
    bareiss_forward(m, &pivots);
    // Nonsingular iff every one of the first d columns carries a pivot.
    if (pivots.size() != d || pivots.back() != d - 1) return std::nullopt;

    RatVector x(d);
    for (std::size_t ii = d; ii-- > 0;) {
        Rational acc(m.at(ii, d));
        for (std::size_t j = ii + 1; j < d; ++j) acc -= Rational(m.at(ii, j)) * x[j];
        x[ii] = acc / Rational(m.at(ii, ii));
    }
    return x;
}

int rank(const RatMatrix& a) {
    IntMatrix m = clear_denominators(a);
    return bareiss_forward(m);
}

int rank(const IntMatrix& a) {
    IntMatrix m = a;
    return bareiss_forward(m);
}

Int determinant(const IntMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw dimension_error("determinant: matrix not square");
    if (n == 0) return 1;
    IntMatrix m = a;
    int sign = 1;
    int r = bareiss_forward(m, nullptr, &sign);
    if (static_cast<std::size_t>(r) < n) return 0;
    return sign * m.at(n - 1, n - 1);
}

HnfResult hermite_normal_form(const IntMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(rows);

    const auto subtract = [&](std::size_t i, std::size_t r, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < cols; ++j) h.at(i, j) -= q * h.at(r, j);
        for (std::size_t j = 0; j < rows; ++j) u.at(i, j) -= q * u.at(r, j);
    };
    const auto negate_row = [&](std::size_t r) {
        for (std::size_t j = 0; j < cols; ++j) h.at(r, j) = -h.at(r, j);
        for (std::size_t j = 0; j < rows; ++j) u.at(r, j) = -u.at(r, j);
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        bool any = false;
        for (std::size_t i = r; i < rows && !any; ++i) any = h.at(i, c) != 0;
        if (!any) continue;

        // Euclidean sweep: bring the column gcd into row r, zero the rest.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (h.at(i, c) == 0) continue;
                if (best == rows || abs(h.at(i, c)) < abs(h.at(best, c))) best = i;
            }
            if (best != r) {
                h.swap_rows(best, r);
                u.swap_rows(best, r);
            }
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (h.at(i, c) == 0) continue;
                subtract(i, r, h.at(i, c) / h.at(r, c));
                if (h.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(r, c) < 0) negate_row(r);
        for (std::size_t i = 0; i < r; ++i) subtract(i, r, floor_div(h.at(i, c), h.at(r, c)));
        ++r;
    }
    return {std::move(h), std::move(u)};
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
    const std::size_t n = u.rows();
    if (u.cols() != n) throw dimension_error("unimodular_inverse: matrix not square");
    Int det = determinant(u);
    if (det != 1 && det != -1) throw error("unimodular_inverse: determinant is not +-1");

    RatMatrix ru(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ru.at(i, j) = Rational(u.at(i, j));
    IntMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RatVector e(n, Rational(0));
        e[j] = 1;
        auto col = solve_linear_system(ru, e);
        if (!col) throw error("unimodular_inverse: singular matrix");
        for (std::size_t i = 0; i < n; ++i) {
            if (!is_integer((*col)[i])) throw error("unimodular_inverse: non-integer inverse entry");
            inv.at(i, j) = numerator((*col)[i]);
        }
    }
    return inv;
}

IntVector primitive_integer_vector(const RatVector& v) {
    if (is_zero(v)) throw error("primitive_integer_vector: zero vector");
    Int scale = 1;
    for (const Rational& e : v) scale = lcm(scale, denominator(e));
    IntVector out(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = numerator(v[i]) * (scale / denominator(v[i]));
        g = gcd(g, abs(out[i]));
    }
    for (Int& e : out) e /= g;
    return out;
}

IntVector primitive_integer_vector(const IntVector& v) {
    if (is_zero(v)) throw error("primitive_integer_vector: zero vector");
    Int g = 0;
    for (const Int& e : v) g = gcd(g, abs(e));
    IntVector out = v;
    for (Int& e : out) e /= g;
    return out;
}

}  // namespace semireflex
