#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "conelift/errors.hpp"

namespace conelift {

namespace detail {
inline void check_prime_field(int q) {
    if (q != 2 && q != 3) throw InputError("field: q must be 2 or 3, got " + std::to_string(q));
}
} // namespace detail

/// Scalar in the prime field F_q, q in {2, 3}.
class FieldElement {
  public:
    FieldElement(int value, int q) : v_(0), q_(uint8_t(q)) {
        detail::check_prime_field(q);
        if (value < 0 || value >= q)
            throw InputError("field: element " + std::to_string(value) + " outside F_" + std::to_string(q));
        v_ = uint8_t(value);
    }

    int value() const { return v_; }
    int q() const { return q_; }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        a.match(b);
        return FieldElement((a.v_ + b.v_) % a.q_, a.q_);
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        a.match(b);
        return FieldElement((a.v_ * b.v_) % a.q_, a.q_);
    }
    FieldElement operator-() const { return FieldElement((q_ - v_) % q_, q_); }
    friend FieldElement operator-(FieldElement a, FieldElement b) { return a + (-b); }

    friend bool operator==(FieldElement a, FieldElement b) { return a.q_ == b.q_ && a.v_ == b.v_; }
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

  private:
    uint8_t v_, q_;
    void match(FieldElement other) const {
        if (q_ != other.q_) throw InputError("field: mixed F_" + std::to_string(q_) + " and F_" + std::to_string(other.q_));
    }
};

/// Vector over F_q; entries stored as raw residues.
struct FieldVector {
    int q;
    std::vector<uint8_t> v;

    FieldVector(int q_, std::vector<uint8_t> v_) : q(q_), v(std::move(v_)) {
        detail::check_prime_field(q);
        for (uint8_t x : v)
            if (x >= q) throw InputError("field vector: entry outside F_" + std::to_string(q));
    }
    static FieldVector zero(int q_, int n) { return FieldVector(q_, std::vector<uint8_t>(size_t(n), 0)); }

    int size() const { return int(v.size()); }
    friend bool operator==(const FieldVector& a, const FieldVector& b) { return a.q == b.q && a.v == b.v; }
    friend bool operator<(const FieldVector& a, const FieldVector& b) { return a.v < b.v; }
};

/// Dense matrix over F_q, q in {2, 3}. Rows may be zero (a checkless code);
/// column count is positive.
class FieldMatrix {
  public:
    FieldMatrix(int q, int rows, int cols) : q_(q), rows_(rows), cols_(cols), e_(size_t(rows) * cols, 0) {
        detail::check_prime_field(q);
        if (rows < 0 || cols <= 0) throw InputError("matrix: bad dimensions");
    }

    static FieldMatrix from_rows(int q, const std::vector<std::vector<int>>& rows) {
        if (rows.empty()) throw InputError("matrix: from_rows needs at least one row");
        FieldMatrix h(q, int(rows.size()), int(rows[0].size()));
        for (int r = 0; r < h.rows_; ++r) {
            if (int(rows[r].size()) != h.cols_) throw InputError("matrix: ragged rows");
            for (int c = 0; c < h.cols_; ++c) h.set(r, c, rows[r][c]);
        }
        return h;
    }

    int q() const { return q_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint8_t operator()(int r, int c) const { return e_[size_t(r) * cols_ + c]; }
    FieldElement at(int r, int c) const { return FieldElement((*this)(r, c), q_); }

    void set(int r, int c, int value) {
        if (value < 0 || value >= q_)
            throw InputError("matrix: entry " + std::to_string(value) + " outside F_" + std::to_string(q_));
        e_[size_t(r) * cols_ + c] = uint8_t(value);
    }

    /// The single row j as a 1 x n matrix.
    FieldMatrix row(int j) const {
        FieldMatrix out(q_, 1, cols_);
        for (int c = 0; c < cols_; ++c) out.set(0, c, (*this)(j, c));
        return out;
    }

    /// Column indices i with H(j, i) != 0, ascending.
    std::vector<int> row_support(int j) const {
        std::vector<int> s;
        for (int c = 0; c < cols_; ++c)
            if ((*this)(j, c) != 0) s.push_back(c);
        return s;
    }

    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
        return a.q_ == b.q_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const FieldMatrix& a, const FieldMatrix& b) { return !(a == b); }

  private:
    int q_, rows_, cols_;
    std::vector<uint8_t> e_;
};

/// H * c over F_q. Throws on dimension or field mismatch.
inline FieldVector syndrome(const FieldMatrix& h, const FieldVector& c) {
    if (c.q != h.q()) throw InputError("syndrome: vector over F_" + std::to_string(c.q) + ", matrix over F_" + std::to_string(h.q()));
    if (c.size() != h.cols()) throw InputError("syndrome: length " + std::to_string(c.size()) + " vs " + std::to_string(h.cols()) + " columns");
    FieldVector s = FieldVector::zero(h.q(), h.rows());
    for (int r = 0; r < h.rows(); ++r) {
        int acc = 0;
        for (int i = 0; i < h.cols(); ++i) acc += h(r, i) * c.v[i];
        s.v[r] = uint8_t(acc % h.q());
    }
    return s;
}

inline bool is_codeword(const FieldMatrix& h, const FieldVector& c) {
    FieldVector s = syndrome(h, c);
    for (uint8_t x : s.v)
        if (x != 0) return false;
    return true;
}

inline constexpr uint64_t default_enumeration_bound = 531441; // 3^12

/// All codewords of the kernel of h, by exhaustive scan of F_q^n in
/// lexicographic order. Requires q^n <= bound.
inline std::vector<FieldVector> enumerate_codewords(const FieldMatrix& h, uint64_t bound = default_enumeration_bound) {
    uint64_t total = 1;
    for (int i = 0; i < h.cols(); ++i) {
        total *= uint64_t(h.q());
        if (total > bound)
            throw BudgetError("enumerate_codewords: q^n exceeds bound " + std::to_string(bound));
    }
    std::vector<FieldVector> out;
    FieldVector c = FieldVector::zero(h.q(), h.cols());
    for (uint64_t k = 0; k < total; ++k) {
        if (is_codeword(h, c)) out.push_back(c);
        for (int i = h.cols() - 1; i >= 0; --i) { // odometer, last coordinate fastest
            if (++c.v[i] < h.q()) break;
            c.v[i] = 0;
        }
    }
    return out;
}

/// Row echelon rank of h over F_q.
inline int gf_rank(const FieldMatrix& h) {
    int q = h.q(), m = h.rows(), n = h.cols();
    std::vector<std::vector<int>> a(m, std::vector<int>(n));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) a[r][c] = h(r, c);
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int piv = -1;
        for (int r = rank; r < m; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        int inv = (q == 3 && a[rank][col] == 2) ? 2 : 1; // 2 is its own inverse mod 3
        for (int c = col; c < n; ++c) a[rank][c] = a[rank][c] * inv % q;
        for (int r = 0; r < m; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            int f = a[r][col];
            for (int c = col; c < n; ++c) a[r][c] = (a[r][c] + (q - f) * a[rank][c]) % q;
        }
        ++rank;
    }
    return rank;
}

/// Basis of the right kernel of h over F_q (vectors of length cols()).
inline std::vector<FieldVector> gf_nullspace(const FieldMatrix& h) {
    int q = h.q(), m = h.rows(), n = h.cols();
    std::vector<std::vector<int>> a(m, std::vector<int>(n));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) a[r][c] = h(r, c);
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int piv = -1;
        for (int r = rank; r < m; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        int inv = (q == 3 && a[rank][col] == 2) ? 2 : 1;
        for (int c = col; c < n; ++c) a[rank][c] = a[rank][c] * inv % q;
        for (int r = 0; r < m; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            int f = a[r][col];
            for (int c = col; c < n; ++c) a[r][c] = (a[r][c] + (q - f) * a[rank][c]) % q;
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<FieldVector> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        FieldVector b = FieldVector::zero(q, n);
        b.v[free] = 1;
        for (int r = 0; r < rank; ++r) {
            // pivot variable = -a[r][free] so that row r dots to zero
            int val = a[r][free];
            b.v[pivot_col[r]] = uint8_t((q - val) % q);
        }
        basis.push_back(b);
    }
    return basis;
}

/// Residues of the integer product H * v mod `modulus`, with H read as an
/// integer matrix. Entries of v may be any integers; residues are in [0, modulus).
inline std::vector<long long> integer_syndrome_mod(const FieldMatrix& h, std::span<const long long> v, long long modulus) {
    if (modulus <= 0) throw InputError("integer syndrome: modulus must be positive");
    if (int(v.size()) != h.cols()) throw InputError("integer syndrome: length mismatch");
    std::vector<long long> out(size_t(h.rows()), 0);
    for (int r = 0; r < h.rows(); ++r) {
        long long acc = 0;
        for (int i = 0; i < h.cols(); ++i) acc += (long long)h(r, i) * v[i];
        long long residue = acc % modulus;
        if (residue < 0) residue += modulus;
        out[size_t(r)] = residue;
    }
    return out;
}

} // namespace conelift
