#include "mckay/rational_matrix.hpp"

#include <sstream>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

// lcm of entry denominators; 1 for an already-integral matrix.
Integer denominator_lcm(const std::vector<Rational>& entries) {
    Integer l = 1;
    for (const auto& q : entries) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        l = l / g * q.get_den();
    }
    return l;
}

// Forward Bareiss elimination on an augmented integer matrix
// [n x (n + ncols_aug)]. Pivots on the first nonzero entry in each
// column, swapping rows as needed. Returns det(left block).
Integer bareiss_forward(std::vector<std::vector<Integer>>& m, size_t n) {
    Integer prev_pivot = 1;
    int sign = 1;
    const size_t width = m.empty() ? 0 : m[0].size();
    for (size_t k = 0; k < n; ++k) {
        size_t pivot_row = k;
        while (pivot_row < n && m[pivot_row][k] == 0) ++pivot_row;
        if (pivot_row == n) throw semantic_error("singular");
        if (pivot_row != k) {
            std::swap(m[pivot_row], m[k]);
            sign = -sign;
        }
        const Integer pivot = m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < width; ++j)
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / prev_pivot;
            m[i][k] = 0;
        }
        prev_pivot = pivot;
    }
    return sign < 0 ? Integer(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

}  // namespace

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw internal_error("ragged matrix initializer");
        for (long v : row) entries_.emplace_back(v);
    }
}

RationalMatrix RationalMatrix::identity(size_t n) {
    RationalMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw internal_error("matrix product shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw internal_error("matrix sum shape mismatch");
    RationalMatrix out = *this;
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix out(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw internal_error("matrix apply shape mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw semantic_error("not square");
    const size_t n = rows_;
    if (n == 0) return *this;

    const Integer scale = denominator_lcm(entries_);
    // Augmented [scale*M | I] with integer entries.
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            Rational v = at(i, j) * Rational(scale);
            m[i][j] = v.get_num();
        }
        m[i][n + i] = 1;
    }
    bareiss_forward(m, n);

    // Back substitution; inv(M) = scale * inv(scale*M).
    RationalMatrix inv(n, n);
    for (size_t col = 0; col < n; ++col) {
        for (size_t i = n; i-- > 0;) {
            Rational sum = Rational(m[i][n + col]);
            for (size_t j = i + 1; j < n; ++j) sum -= Rational(m[i][j]) * inv.at(j, col);
            inv.at(i, col) = sum / Rational(m[i][i]);
        }
    }
    for (auto& e : inv.entries_) e *= Rational(scale);
    return inv;
}

Rational RationalMatrix::determinant() const {
    if (rows_ != cols_) throw semantic_error("not square");
    const size_t n = rows_;
    if (n == 0) return Rational(1);

    const Integer scale = denominator_lcm(entries_);
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational v = at(i, j) * Rational(scale);
            m[i][j] = v.get_num();
        }
    Integer det_scaled;
    try {
        det_scaled = bareiss_forward(m, n);
    } catch (const McKayError&) {
        return Rational(0);  // forward pass only aborts on exact singularity
    }
    Integer denom;
    mpz_pow_ui(denom.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(n));
    return make_rational(det_scaled, denom);
}

RationalMatrix RationalMatrix::minor_without(size_t k) const {
    if (rows_ <= 1 || cols_ <= 1) throw internal_error("minor of degenerate matrix");
    RationalMatrix out(rows_ - 1, cols_ - 1);
    for (size_t i = 0, oi = 0; i < rows_; ++i) {
        if (i == k) continue;
        for (size_t j = 0, oj = 0; j < cols_; ++j) {
            if (j == k) continue;
            out.at(oi, oj) = at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

bool RationalMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

std::string RationalMatrix::to_text() const {
    std::ostringstream out;
    out << "matrix " << rows_ << " " << cols_ << "\n";
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j)
            out << (j ? " " : "") << rational_to_string(at(i, j));
        out << "\n";
    }
    return out.str();
}

RationalMatrix RationalMatrix::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        while (ls >> tok) tokens.push_back(tok);
    }
    if (tokens.size() < 3 || tokens[0] != "matrix")
        throw parse_error("expected 'matrix <rows> <cols>' header");
    size_t rows = 0, cols = 0;
    try {
        rows = std::stoul(tokens[1]);
        cols = std::stoul(tokens[2]);
    } catch (const std::exception&) {
        throw parse_error("bad matrix dimensions");
    }
    if (tokens.size() != 3 + rows * cols)
        throw parse_error("matrix entry count mismatch");
    RationalMatrix m(rows, cols);
    for (size_t i = 0; i < rows * cols; ++i)
        m.entries_[i] = rational_from_string(tokens[3 + i]);
    return m;
}

}  // namespace mckay
