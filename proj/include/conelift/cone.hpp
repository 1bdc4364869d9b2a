#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "conelift/errors.hpp"
#include "conelift/field.hpp"
#include "conelift/pseudomatrix.hpp"
#include "conelift/rational.hpp"

namespace conelift {

enum class IneqKind {
    BinarySupport, // f_l <= sum of the other support coordinates
    SingleOne,     // 2 f_l^(s) + f_l^(2s) bounded by the doubled opposite-symbol sum
    SingleTwo,     // same with the two symbols exchanged
    PairOne,       // f_k^(s_k) + f_l^(s_l) bounded by the remaining support mass
    PairTwo,       // same with the two symbols exchanged
    Nonnegativity,
};

inline const char* kind_name(IneqKind k) {
    switch (k) {
        case IneqKind::BinarySupport: return "binary-support";
        case IneqKind::SingleOne: return "single-type-one";
        case IneqKind::SingleTwo: return "single-type-two";
        case IneqKind::PairOne: return "pair-type-one";
        case IneqKind::PairTwo: return "pair-type-two";
        case IneqKind::Nonnegativity: return "nonnegativity";
    }
    return "?";
}

/// One linear inequality sum(coeff * f) >= 0 over the count matrix entries.
/// Tagged with its origin: base row, kind, and the coordinate(s) it bounds.
struct ConeInequality {
    int q = 3;
    int n = 0;
    int row = -1;                  // base row index; -1 for nonnegativity
    IneqKind kind = IneqKind::Nonnegativity;
    std::vector<int> indices;      // bounded coordinate(s): {l} or {k, l}; {i} for nonnegativity
    int alpha = 0;                 // bounded symbol, nonnegativity only
    std::vector<long long> coeff;  // (q-1) x n row-major, row r = symbol r+1

    long long& c(int symbol, int i) { return coeff[size_t(symbol - 1) * n + i]; }
    long long c(int symbol, int i) const { return coeff[size_t(symbol - 1) * n + i]; }

    /// Slack at F; nonnegative exactly when F satisfies the inequality.
    long long evaluate(const PseudoMatrix& f) const {
        if (f.q() != q || f.cols() != n) throw InputError("inequality: shape mismatch");
        long long s = 0;
        for (int a = 1; a < q; ++a)
            for (int i = 0; i < n; ++i) s += c(a, i) * f.count(a, i);
        return s;
    }

    Rational evaluate(const RationalMatrix& f) const {
        if (f.rows() != q - 1 || f.cols() != n) throw InputError("inequality: shape mismatch");
        Rational s;
        for (int a = 1; a < q; ++a)
            for (int i = 0; i < n; ++i)
                if (c(a, i) != 0) s = s + f(a - 1, i) * Rational(c(a, i));
        return s;
    }
};

/// Full inequality description of the fundamental cone of a parity-check
/// matrix: all support inequalities in generation order (row ascending, kind
/// ascending, indices ascending), then the nonnegativity constraints.
struct ConeSystem {
    FieldMatrix h;
    std::vector<ConeInequality> inequalities;

    size_t nontrivial_count() const {
        size_t k = 0;
        for (const auto& iq : inequalities)
            if (iq.kind != IneqKind::Nonnegativity) ++k;
        return k;
    }
};

namespace detail {

// The other nonzero symbol: 2s reduced mod 3 (1 <-> 2).
inline int dbl(int s) { return 2 * s % 3; }

inline ConeInequality blank(int q, int n, int row, IneqKind kind, std::vector<int> idx) {
    ConeInequality iq;
    iq.q = q;
    iq.n = n;
    iq.row = row;
    iq.kind = kind;
    iq.indices = std::move(idx);
    iq.coeff.assign(size_t(q - 1) * n, 0);
    return iq;
}

inline ConeInequality make_binary_support(const FieldMatrix& h, int j, int ell) {
    ConeInequality iq = blank(2, h.cols(), j, IneqKind::BinarySupport, {ell});
    for (int i : h.row_support(j))
        iq.c(1, i) += (i == ell) ? -1 : 1;
    return iq;
}

// type 1 bounds 2 f_l^(s_l) + f_l^(2 s_l); type 2 exchanges the symbols.
inline ConeInequality make_single(const FieldMatrix& h, int j, int ell, int type) {
    ConeInequality iq = blank(3, h.cols(), j, type == 1 ? IneqKind::SingleOne : IneqKind::SingleTwo, {ell});
    for (int i : h.row_support(j)) {
        int s = h(j, i);
        int heavy = (type == 1) ? s : dbl(s); // symbol carrying coefficient 2 on the bounded side
        if (i == ell) {
            iq.c(heavy, i) -= 2;
            iq.c(dbl(heavy), i) -= 1;
        } else {
            iq.c(dbl(heavy), i) += 2;
            iq.c(heavy, i) += 1;
        }
    }
    return iq;
}

// type 1 bounds f_k^(s_k) + f_l^(s_l); type 2 exchanges the symbols.
inline ConeInequality make_pair(const FieldMatrix& h, int j, int k, int ell, int type) {
    ConeInequality iq = blank(3, h.cols(), j, type == 1 ? IneqKind::PairOne : IneqKind::PairTwo, {k, ell});
    for (int i : h.row_support(j)) {
        int s = h(j, i);
        int sym = (type == 1) ? s : dbl(s);
        if (i != k && i != ell) iq.c(sym, i) += 2;
        iq.c(dbl(sym), i) += 1;
        if (i == k || i == ell) iq.c(sym, i) -= 1;
    }
    return iq;
}

inline ConeInequality make_nonneg(int q, int n, int i, int alpha) {
    ConeInequality iq = blank(q, n, -1, IneqKind::Nonnegativity, {i});
    iq.alpha = alpha;
    iq.c(alpha, i) = 1;
    return iq;
}

} // namespace detail

/// Fundamental-cone system for a binary parity-check matrix: one support
/// inequality per (row, support coordinate) plus n nonnegativity constraints.
inline ConeSystem enumerate_k2(const FieldMatrix& h) {
    if (h.q() != 2) throw InputError("binary cone: matrix must be over F_2");
    ConeSystem sys{h, {}};
    for (int j = 0; j < h.rows(); ++j)
        for (int ell : h.row_support(j))
            sys.inequalities.push_back(detail::make_binary_support(h, j, ell));
    for (int i = 0; i < h.cols(); ++i)
        sys.inequalities.push_back(detail::make_nonneg(2, h.cols(), i, 1));
    return sys;
}

/// Fundamental-cone system for a ternary parity-check matrix: per row, both
/// single-coordinate kinds for every support coordinate and both pair kinds
/// for every unordered support pair, plus 2n nonnegativity constraints.
inline ConeSystem enumerate_k3(const FieldMatrix& h) {
    if (h.q() != 3) throw InputError("ternary cone: matrix must be over F_3");
    ConeSystem sys{h, {}};
    for (int j = 0; j < h.rows(); ++j) {
        std::vector<int> supp = h.row_support(j);
        for (int type = 1; type <= 2; ++type)
            for (int ell : supp) sys.inequalities.push_back(detail::make_single(h, j, ell, type));
        for (int type = 1; type <= 2; ++type)
            for (size_t a = 0; a < supp.size(); ++a)
                for (size_t b = a + 1; b < supp.size(); ++b)
                    sys.inequalities.push_back(detail::make_pair(h, j, supp[a], supp[b], type));
    }
    for (int i = 0; i < h.cols(); ++i)
        for (int alpha = 1; alpha <= 2; ++alpha)
            sys.inequalities.push_back(detail::make_nonneg(3, h.cols(), i, alpha));
    return sys;
}

inline ConeSystem enumerate_cone(const FieldMatrix& h) {
    return h.q() == 2 ? enumerate_k2(h) : enumerate_k3(h);
}

struct MembershipResult {
    bool member = true;
    std::vector<ConeInequality> violated;
};

template <class Mat>
inline MembershipResult cone_membership_impl(const ConeSystem& sys, const Mat& f) {
    MembershipResult res;
    for (const ConeInequality& iq : sys.inequalities) {
        auto slack = iq.evaluate(f);
        if (slack < decltype(slack)(0)) {
            res.member = false;
            res.violated.push_back(iq);
        }
    }
    return res;
}

/// Allocation-free membership test against a prebuilt system.
inline bool satisfies_all(const ConeSystem& sys, const PseudoMatrix& f) {
    for (const ConeInequality& iq : sys.inequalities)
        if (iq.evaluate(f) < 0) return false;
    return true;
}

inline MembershipResult cone_membership(const FieldMatrix& h, const PseudoMatrix& f) {
    return cone_membership_impl(enumerate_cone(h), f);
}
inline MembershipResult cone_membership(const FieldMatrix& h, const RationalMatrix& f) {
    return cone_membership_impl(enumerate_cone(h), f);
}
inline bool in_cone(const FieldMatrix& h, const PseudoMatrix& f) {
    return cone_membership(h, f).member;
}

/// Membership tested row by row; the cone of H is the intersection of the
/// single-row cones.
inline bool member_by_rows(const FieldMatrix& h, const PseudoMatrix& f) {
    for (int j = 0; j < h.rows(); ++j)
        if (!cone_membership(h.row(j), f).member) return false;
    return true;
}

/// Row symbol map: exchanges the two count rows at every coordinate where the
/// row entry is 2. An involution that maps the cone of a single row onto the
/// cone of its support-normalized row.
inline PseudoMatrix psi_map(const FieldMatrix& h_row, const PseudoMatrix& f) {
    if (h_row.q() != 3 || h_row.rows() != 1) throw InputError("symbol map: needs a single ternary row");
    if (f.q() != 3 || f.cols() != h_row.cols()) throw InputError("symbol map: shape mismatch");
    PseudoMatrix out = f;
    for (int i = 0; i < h_row.cols(); ++i)
        if (h_row(0, i) == 2) {
            out.set(1, i, f.count(2, i));
            out.set(2, i, f.count(1, i));
        }
    return out;
}

/// The {0,1} row with the same support.
inline FieldMatrix support_normalize(const FieldMatrix& h_row) {
    if (h_row.rows() != 1) throw InputError("support normalize: needs a single row");
    FieldMatrix out(h_row.q(), 1, h_row.cols());
    for (int i = 0; i < h_row.cols(); ++i)
        if (h_row(0, i) != 0) out.set(0, i, 1);
    return out;
}

/// Critical structure of F against one ternary row: the coordinates and
/// unordered pairs whose support inequality holds with slack strictly below 3
/// while the named counts are still positive.
struct CriticalReport {
    std::vector<std::pair<int, int>> coordinates;    // (coordinate, type), type in {1, 2}
    std::vector<std::pair<int, int>> pairs_type_one; // k < l
    std::vector<std::pair<int, int>> pairs_type_two;

    bool empty() const { return coordinates.empty() && pairs_type_one.empty() && pairs_type_two.empty(); }

    /// Distinct critical coordinates, ascending (types collapsed).
    std::vector<int> coordinate_set() const {
        std::vector<int> s;
        for (auto [c, t] : coordinates)
            if (s.empty() || s.back() != c) s.push_back(c);
        return s;
    }
};

inline CriticalReport critical_analysis(const FieldMatrix& h_row, const PseudoMatrix& f) {
    if (h_row.q() != 3 || h_row.rows() != 1) throw InputError("critical analysis: needs a single ternary row");
    if (f.q() != 3 || f.cols() != h_row.cols()) throw InputError("critical analysis: shape mismatch");
    CriticalReport rep;
    std::vector<int> supp = h_row.row_support(0);
    for (int ell : supp)
        for (int type = 1; type <= 2; ++type) {
            if (f.column_sum(ell) < 1) continue;
            long long slack = detail::make_single(h_row, 0, ell, type).evaluate(f);
            if (slack < 3) rep.coordinates.push_back({ell, type});
        }
    for (size_t a = 0; a < supp.size(); ++a)
        for (size_t b = a + 1; b < supp.size(); ++b) {
            int k = supp[a], ell = supp[b];
            for (int type = 1; type <= 2; ++type) {
                int sk = h_row(0, k), sl = h_row(0, ell);
                int symk = (type == 1) ? sk : detail::dbl(sk);
                int syml = (type == 1) ? sl : detail::dbl(sl);
                if (f.count(symk, k) < 1 || f.count(syml, ell) < 1) continue;
                long long slack = detail::make_pair(h_row, 0, k, ell, type).evaluate(f);
                if (slack < 3) (type == 1 ? rep.pairs_type_one : rep.pairs_type_two).push_back({k, ell});
            }
        }
    return rep;
}

struct CriticalSlack {
    ConeInequality inequality;
    long long slack;
};

/// Slack of every critical inequality of F against one ternary row.
/// Requires F in the row's cone with a vanishing mod-3 row syndrome; each
/// listed slack is then exactly zero.
inline std::vector<CriticalSlack> critical_slacks(const FieldMatrix& h_row, const PseudoMatrix& f) {
    if (!cone_membership(h_row, f).member)
        throw DomainError("critical slacks: F is outside the row cone");
    if (modular_syndrome(h_row, f)[0] != 0)
        throw DomainError("critical slacks: row syndrome is nonzero mod 3");
    CriticalReport rep = critical_analysis(h_row, f);
    std::vector<CriticalSlack> out;
    for (auto [ell, type] : rep.coordinates) {
        ConeInequality iq = detail::make_single(h_row, 0, ell, type);
        out.push_back({iq, iq.evaluate(f)});
    }
    for (auto [k, ell] : rep.pairs_type_one) {
        ConeInequality iq = detail::make_pair(h_row, 0, k, ell, 1);
        out.push_back({iq, iq.evaluate(f)});
    }
    for (auto [k, ell] : rep.pairs_type_two) {
        ConeInequality iq = detail::make_pair(h_row, 0, k, ell, 2);
        out.push_back({iq, iq.evaluate(f)});
    }
    return out;
}

/// Renders an inequality in display form, "bounded side <= bounding side",
/// with 1-based coordinates. Multi-term groups are parenthesized.
inline std::string inequality_text(const FieldMatrix& h, const ConeInequality& iq) {
    auto term2 = [](int i, int sym) { return "f_" + std::to_string(i + 1) + "^(" + std::to_string(sym) + ")"; };
    auto term1 = [](int i) { return "f_" + std::to_string(i + 1); };
    auto group = [](const std::vector<std::string>& terms, bool doubled) -> std::string {
        if (terms.empty()) return "";
        std::string body;
        for (size_t k = 0; k < terms.size(); ++k) body += (k ? " + " : "") + terms[k];
        if (terms.size() > 1) body = "(" + body + ")";
        return doubled ? "2 " + body : body;
    };
    auto join = [](const std::vector<std::string>& parts) -> std::string {
        std::string s;
        for (const auto& p : parts)
            if (!p.empty()) s += (s.empty() ? "" : " + ") + p;
        return s.empty() ? "0" : s;
    };

    if (iq.kind == IneqKind::Nonnegativity)
        return (iq.q == 2 ? term1(iq.indices[0]) : term2(iq.indices[0], iq.alpha)) + " >= 0";

    std::vector<int> supp = h.row_support(iq.row);
    if (iq.kind == IneqKind::BinarySupport) {
        int ell = iq.indices[0];
        std::vector<std::string> rest;
        for (int i : supp)
            if (i != ell) rest.push_back(term1(i));
        return term1(ell) + " <= " + join({group(rest, false)});
    }
    if (iq.kind == IneqKind::SingleOne || iq.kind == IneqKind::SingleTwo) {
        int ell = iq.indices[0];
        int type = iq.kind == IneqKind::SingleOne ? 1 : 2;
        int heavy = (type == 1) ? h(iq.row, ell) : detail::dbl(h(iq.row, ell));
        std::string lhs = "2 " + term2(ell, heavy) + " + " + term2(ell, detail::dbl(heavy));
        std::vector<std::string> doubled, single;
        for (int i : supp) {
            if (i == ell) continue;
            int s = (type == 1) ? h(iq.row, i) : detail::dbl(h(iq.row, i));
            doubled.push_back(term2(i, detail::dbl(s)));
            single.push_back(term2(i, s));
        }
        return lhs + " <= " + join({group(doubled, true), group(single, false)});
    }
    // pair kinds
    int k = iq.indices[0], ell = iq.indices[1];
    int type = iq.kind == IneqKind::PairOne ? 1 : 2;
    auto sym = [&](int i) { return type == 1 ? int(h(iq.row, i)) : detail::dbl(h(iq.row, i)); };
    std::string lhs = term2(k, sym(k)) + " + " + term2(ell, sym(ell));
    std::vector<std::string> doubled, single;
    for (int i : supp) {
        if (i != k && i != ell) doubled.push_back(term2(i, sym(i)));
        single.push_back(term2(i, detail::dbl(sym(i))));
    }
    return lhs + " <= " + join({group(doubled, true), group(single, false)});
}

} // namespace conelift
