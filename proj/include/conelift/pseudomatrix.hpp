#pragma once

#include <vector>

#include "conelift/errors.hpp"
#include "conelift/field.hpp"
#include "conelift/rational.hpp"

namespace conelift {

/// Unscaled symbol-count matrix of a cover labeling: entry (alpha, i) counts
/// the copies of variable i labeled with the nonzero symbol alpha. Shape is
/// (q-1) x n with nonnegative integer entries.
class PseudoMatrix {
  public:
    PseudoMatrix(int q, int n) : q_(q), n_(n), c_(size_t(q - 1) * n, 0) {
        detail::check_prime_field(q);
        if (n <= 0) throw InputError("pseudocodeword matrix: bad length");
    }

    /// Rows listed by symbol: rows.size() must be q-1.
    static PseudoMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
        if (rows.size() != 1 && rows.size() != 2)
            throw InputError("pseudocodeword matrix: expected 1 or 2 rows");
        PseudoMatrix f(int(rows.size()) + 1, rows.empty() ? 0 : int(rows[0].size()));
        for (size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != rows[0].size()) throw InputError("pseudocodeword matrix: ragged rows");
            for (size_t i = 0; i < rows[r].size(); ++i) {
                if (rows[r][i] < 0) throw InputError("pseudocodeword matrix: negative count");
                f.set(int(r) + 1, int(i), rows[r][i]);
            }
        }
        return f;
    }

    int q() const { return q_; }
    int cols() const { return n_; }
    int symbol_rows() const { return q_ - 1; }

    /// Count for symbol alpha in {1, .., q-1} at coordinate i.
    long long count(int alpha, int i) const { return c_[size_t(alpha - 1) * n_ + i]; }
    void set(int alpha, int i, long long v) { c_[size_t(alpha - 1) * n_ + i] = v; }
    void add(int alpha, int i, long long d) { c_[size_t(alpha - 1) * n_ + i] += d; }

    /// Sum over all symbols at coordinate i (copies with a nonzero label).
    long long column_sum(int i) const {
        long long s = 0;
        for (int a = 1; a < q_; ++a) s += count(a, i);
        return s;
    }

    long long max_column_sum() const {
        long long m = 0;
        for (int i = 0; i < n_; ++i)
            if (column_sum(i) > m) m = column_sum(i);
        return m;
    }

    bool is_zero() const {
        for (long long x : c_)
            if (x != 0) return false;
        return true;
    }

    /// Coordinates F_1 + 2*F_2 (just F_1 for q = 2), as integers.
    std::vector<long long> weighted_columns() const {
        std::vector<long long> v(size_t(n_), 0);
        for (int i = 0; i < n_; ++i)
            for (int a = 1; a < q_; ++a) v[size_t(i)] += a * count(a, i);
        return v;
    }

    RationalMatrix to_rational() const {
        RationalMatrix z(q_ - 1, n_);
        for (int a = 1; a < q_; ++a)
            for (int i = 0; i < n_; ++i) z(a - 1, i) = Rational(count(a, i));
        return z;
    }

    friend bool operator==(const PseudoMatrix& a, const PseudoMatrix& b) {
        return a.q_ == b.q_ && a.n_ == b.n_ && a.c_ == b.c_;
    }
    friend bool operator!=(const PseudoMatrix& a, const PseudoMatrix& b) { return !(a == b); }
    friend bool operator<(const PseudoMatrix& a, const PseudoMatrix& b) {
        if (a.q_ != b.q_) return a.q_ < b.q_;
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.c_ < b.c_;
    }

  private:
    int q_, n_;
    std::vector<long long> c_; // row-major, row r = symbol r+1
};

/// Compact text form, e.g. "[[2,2,2,2],[2,2,0,0]]".
inline std::string matrix_text(const PseudoMatrix& f) {
    std::string s = "[";
    for (int a = 1; a < f.q(); ++a) {
        s += (a > 1 ? ",[" : "[");
        for (int i = 0; i < f.cols(); ++i) s += (i ? "," : "") + std::to_string(f.count(a, i));
        s += "]";
    }
    return s + "]";
}

/// (1/M) * F as exact rationals.
inline RationalMatrix normalize(const PseudoMatrix& f, int m) {
    if (m <= 0) throw InputError("normalize: cover degree must be positive");
    return f.to_rational().scaled(Rational(1, m));
}

/// Residues of H * (F_1 + 2 F_2) mod 3 (or H * F_1 mod 2), with H read as an
/// integer matrix over {0, .., q-1}.
inline std::vector<long long> modular_syndrome(const FieldMatrix& h, const PseudoMatrix& f) {
    if (h.q() != f.q()) throw InputError("modular syndrome: field mismatch");
    if (h.cols() != f.cols()) throw InputError("modular syndrome: length mismatch");
    std::vector<long long> v = f.weighted_columns();
    return integer_syndrome_mod(h, v, h.q());
}

inline bool modular_condition(const FieldMatrix& h, const PseudoMatrix& f) {
    for (long long r : modular_syndrome(h, f))
        if (r != 0) return false;
    return true;
}

/// Restriction of modular_syndrome to one row of h.
inline long long modular_syndrome_row(const FieldMatrix& h, int j, const PseudoMatrix& f) {
    return modular_syndrome(h.row(j), f)[0];
}

} // namespace conelift
