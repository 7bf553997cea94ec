#pragma once

/*
 * Exact arithmetic used throughout the library.
 *
 * Integer is GMP's mpz_class. Rational wraps mpq_class and keeps it
 * canonical at all times (lowest terms, positive denominator, zero as 0/1),
 * so equality and hashing can work on the stored representation directly.
 *
 * IntMatrix is a small dense row-major matrix of Integers. Determinants use
 * fraction-free (Bareiss) elimination; linear solves run Gaussian elimination
 * over Rational with the first nonzero pivot in row order.
 */

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace contactcalc {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(const Integer& value);
    Rational(const Integer& num, const Integer& den);
    Rational(std::int64_t num, std::int64_t den);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    // Throws DataError when the value is not integral or does not fit.
    std::int64_t to_int64() const;
    Integer floor() const;
    Integer ceil() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);  // DataError on division by zero

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    // "p" for integers, "p/q" otherwise.
    std::string str() const;

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value);
    void canonicalize();

    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Integer>& entries() const { return entries_; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    std::string str() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Integer> entries_;
};

namespace exact {

Integer det(const IntMatrix& m);

// Exact solution of m * x = b. Throws SingularMatrixError when det(m) = 0.
std::vector<Rational> solve(const IntMatrix& m, std::span<const Integer> b);

Rational inner_product(std::span<const Integer> a, std::span<const Rational> x);

// m * x with exact arithmetic, used to back-substitute solve() results.
std::vector<Rational> multiply(const IntMatrix& m, std::span<const Rational> x);

}  // namespace exact

}  // namespace contactcalc
