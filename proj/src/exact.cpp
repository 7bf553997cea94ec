#include "contactcalc/exact.hpp"

#include <limits>
#include <sstream>
#include <utility>

#include "contactcalc/errors.hpp"

namespace contactcalc {

Rational::Rational(std::int64_t value) : value_(Integer(std::to_string(value))) {}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DataError("rational with zero denominator");
    value_ = mpq_class(num, den);
    canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(Integer(std::to_string(num)), Integer(std::to_string(den))) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) { canonicalize(); }

void Rational::canonicalize() { value_.canonicalize(); }

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw DataError("expected an integer, got " + str());
    const Integer& n = value_.get_num();
    if (!n.fits_slong_p()) throw DataError("integer out of range: " + str());
    return static_cast<std::int64_t>(n.get_si());
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DataError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("matrix entry count " + std::to_string(entries_.size()) +
                             " does not match " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
    }
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Integer> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionError("ragged matrix literal");
        for (std::int64_t v : row) entries.emplace_back(std::to_string(v));
    }
    return IntMatrix(r, c, std::move(entries));
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace exact {

Integer det(const IntMatrix& m) {
    if (!m.is_square()) {
        throw DimensionError("determinant of a " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) return Integer(1);

    std::vector<Integer> a = m.entries();
    auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };

    int sign = 1;
    Integer prev_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return Integer(0);
            for (std::size_t c = k; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                // Sylvester's identity guarantees exact division.
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
                at(i, j) = std::move(v);
            }
            at(i, k) = 0;
        }
        prev_pivot = at(k, k);
    }
    Integer result = at(n - 1, n - 1);
    return sign < 0 ? Integer(-result) : result;
}

std::vector<Rational> solve(const IntMatrix& m, std::span<const Integer> b) {
    if (!m.is_square()) throw DimensionError("solve needs a square matrix");
    const std::size_t n = m.rows();
    if (b.size() != n) {
        throw DimensionError("right-hand side has length " + std::to_string(b.size()) +
                             ", expected " + std::to_string(n));
    }

    // Augmented [m | b] over Q.
    const std::size_t w = n + 1;
    std::vector<Rational> a;
    a.reserve(n * w);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a.emplace_back(m(r, c));
        a.emplace_back(b[r]);
    }
    auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * w + c]; };

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrixError("matrix is singular (det = 0)");
        if (pivot != k) {
            for (std::size_t c = k; c < w; ++c) std::swap(at(k, c), at(pivot, c));
        }
        const Rational inv = Rational(1) / at(k, k);
        for (std::size_t c = k; c < w; ++c) at(k, c) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || at(i, k).is_zero()) continue;
            const Rational factor = at(i, k);
            for (std::size_t c = k; c < w; ++c) at(i, c) -= factor * at(k, c);
        }
    }

    std::vector<Rational> x;
    x.reserve(n);
    for (std::size_t r = 0; r < n; ++r) x.push_back(at(r, n));
    return x;
}

Rational inner_product(std::span<const Integer> a, std::span<const Rational> x) {
    if (a.size() != x.size()) {
        throw DimensionError("inner product of vectors with lengths " +
                             std::to_string(a.size()) + " and " + std::to_string(x.size()));
    }
    Rational sum;
    for (std::size_t i = 0; i < a.size(); ++i) sum += Rational(a[i]) * x[i];
    return sum;
}

std::vector<Rational> multiply(const IntMatrix& m, std::span<const Rational> x) {
    if (x.size() != m.cols()) throw DimensionError("matrix-vector length mismatch");
    std::vector<Rational> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += Rational(m(r, c)) * x[c];
    }
    return out;
}

}  // namespace exact

}  // namespace contactcalc
