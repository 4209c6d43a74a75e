#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "mckay/rational.hpp"

namespace mckay {

// Exact matrix over Q, row-major storage.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RationalMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-() const;
    RationalMatrix transpose() const;
    bool operator==(const RationalMatrix& rhs) const = default;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    // Fraction-free (Bareiss) Gaussian elimination with exact pivoting on
    // the first nonzero entry; denominators are cleared up front so the
    // elimination runs on integers. Errors: "singular", "not square".
    RationalMatrix inverse() const;
    Rational determinant() const;

    // Copy with row/column `k` removed.
    RationalMatrix minor_without(size_t k) const;

    bool is_zero() const;

    // Line-oriented text form: "matrix <rows> <cols>" then one row of
    // whitespace-separated rationals per line. '#' starts a comment.
    std::string to_text() const;
    static RationalMatrix from_text(const std::string& text);

private:
    size_t rows_, cols_;
    std::vector<Rational> entries_;
};

}  // namespace mckay
