#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "conelift/cone.hpp"
#include "conelift/errors.hpp"
#include "conelift/field.hpp"
#include "conelift/pseudomatrix.hpp"
#include "conelift/rational.hpp"
#include "conelift/tanner.hpp"

namespace conelift {

/// Triple decomposition of a one-symbol count vector: index sets whose
/// multiplicities reproduce the counts, each of size divisible by 3.
struct SetDecomposition {
    int symbol = 0;                     // the consumed symbol row (1 or 2); 0 when empty
    std::vector<std::vector<int>> sets; // each ascending, three distinct indices
};

/// Greedy triple decomposition: repeatedly remove one unit from the three
/// largest remaining support columns (ties by lowest index).
///
/// Requires: h_s a {0,1} ternary row; F in the row cone with exactly one
/// nonzero symbol row; no mass outside the support; total mass divisible by 3.
inline SetDecomposition decompose_one_type(const FieldMatrix& h_s, const PseudoMatrix& f) {
    if (h_s.q() != 3 || h_s.rows() != 1) throw InputError("decompose: needs a single ternary row");
    for (int i = 0; i < h_s.cols(); ++i)
        if (h_s(0, i) > 1) throw InputError("decompose: row must have {0,1} entries");
    if (f.q() != 3 || f.cols() != h_s.cols()) throw InputError("decompose: shape mismatch");

    long long mass1 = 0, mass2 = 0;
    for (int i = 0; i < f.cols(); ++i) {
        mass1 += f.count(1, i);
        mass2 += f.count(2, i);
    }
    if (mass1 > 0 && mass2 > 0) throw DomainError("decompose: both symbol rows carry mass");
    if (mass1 == 0 && mass2 == 0) return {};
    int beta = mass1 > 0 ? 1 : 2;

    std::vector<int> supp = h_s.row_support(0);
    std::vector<bool> in_supp(size_t(h_s.cols()), false);
    for (int i : supp) in_supp[size_t(i)] = true;
    long long total = 0;
    for (int i = 0; i < f.cols(); ++i) {
        if (!in_supp[size_t(i)] && f.column_sum(i) != 0)
            throw DomainError("decompose: mass outside the row support");
        total += f.count(beta, i);
    }
    if (total % 3 != 0) throw DomainError("decompose: total mass not divisible by 3");
    if (!cone_membership(h_s, f).member) throw DomainError("decompose: F outside the row cone");

    std::vector<long long> g(size_t(h_s.cols()), 0);
    for (int i : supp) g[size_t(i)] = f.count(beta, i);
    SetDecomposition dec;
    dec.symbol = beta;
    while (total > 0) {
        std::vector<int> live;
        for (int i : supp)
            if (g[size_t(i)] > 0) live.push_back(i);
        if (live.size() < 3)
            throw DomainError("decompose: fewer than 3 distinct nonzero columns remain (cone violation)");
        std::sort(live.begin(), live.end(),
                  [&](int a, int b) { return g[size_t(a)] != g[size_t(b)] ? g[size_t(a)] > g[size_t(b)] : a < b; });
        std::vector<int> triple{live[0], live[1], live[2]};
        std::sort(triple.begin(), triple.end());
        for (int i : triple) --g[size_t(i)];
        total -= 3;
        dec.sets.push_back(std::move(triple));
    }
    return dec;
}

/// One step of the lifting construction, for trace reproduction.
struct LiftStepRecord {
    enum class Kind { Stage2Pair, Stage3Triple, Stage4Fill };
    Kind kind;
    int base_row;                  // base matrix row this step was built for
    std::vector<int> coords;       // stage 2: {k, l}; stage 3: {l1, l2, l3}; stage 4: {i}
    std::vector<int> copies;       // variable copy indices touched, parallel to coords (stage 4: all filled copies)
    std::vector<int> check_copies; // stage 2/3: the one check copy; stage 4: parallel to copies
    int symbol;                    // stage 3: the consumed symbol; 0 otherwise
    CriticalReport criticality;    // stage 2: report computed before the step
    PseudoMatrix f_after;          // working count matrix after the step
};

inline const char* step_kind_name(LiftStepRecord::Kind k) {
    switch (k) {
        case LiftStepRecord::Kind::Stage2Pair: return "stage2-pair";
        case LiftStepRecord::Kind::Stage3Triple: return "stage3-triple";
        case LiftStepRecord::Kind::Stage4Fill: return "stage4-fill";
    }
    return "?";
}

struct LiftOptions {
    /// Stage-2 choice override: entry t forces the pair (k, l) taken at step t,
    /// validated against the admissible set. Steps beyond the list use the
    /// default rule (lexicographically smallest admissible pair).
    std::vector<std::pair<int, int>> preferred_pairs;
};

struct LiftResult {
    CoverLabeling labeling;
    int degree;               // M
    long long max_column_sum; // M'
    std::vector<LiftStepRecord> trace;

    const CoverGraph& cover() const { return labeling.cover(); }
};

namespace detail {

inline int lift_degree(long long max_column_sum) {
    return max_column_sum >= 1 ? int(3 * max_column_sum - 2) : 1;
}

inline void throw_with_trace(const std::string& what, const std::vector<LiftStepRecord>& trace) {
    std::string msg = what + " after " + std::to_string(trace.size()) + " steps";
    throw DomainError(msg);
}

// Internal consistency check after every reduction step.
inline void assert_stage_invariant(const FieldMatrix& h_s, const PseudoMatrix& g, const char* where) {
    if (!cone_membership(h_s, g).member)
        throw std::logic_error(std::string(where) + ": working matrix left the cone");
    if (modular_syndrome(h_s, g)[0] != 0)
        throw std::logic_error(std::string(where) + ": working matrix broke the mod-3 condition");
}

} // namespace detail

/// Builds a cover labeling realizing F against a single {0,1} ternary row.
///
/// Stage 2 pairs one symbol-1 unit at k with one symbol-2 unit at l, where
/// (k, l) must cover every critical coordinate, k every type-one critical
/// pair, and l every type-two critical pair. Stage 3 consumes the surviving
/// symbol in triples of the three largest entries. Stage 4 completes every
/// check copy to full degree with zero-labeled variable copies via a
/// per-column perfect matching. Degree M = 3M' - 2 (M' = largest column sum;
/// M = 1 for the zero matrix).
inline LiftResult lift_single_row(const FieldMatrix& h_s, const PseudoMatrix& f, const LiftOptions& opt = {}) {
    if (h_s.q() != 3 || h_s.rows() != 1) throw InputError("lift: needs a single ternary row");
    for (int i = 0; i < h_s.cols(); ++i)
        if (h_s(0, i) > 1) throw InputError("lift: row must have {0,1} entries (support-normalize first)");
    if (f.q() != 3 || f.cols() != h_s.cols()) throw InputError("lift: shape mismatch");
    {
        MembershipResult mem = cone_membership(h_s, f);
        if (!mem.member)
            throw DomainError("lift: F outside the row cone, violates " +
                              inequality_text(h_s, mem.violated.front()));
        if (modular_syndrome(h_s, f)[0] != 0)
            throw DomainError("lift: mod-3 syndrome is nonzero");
    }

    const int n = h_s.cols();
    const long long mp = f.max_column_sum();
    const int m = detail::lift_degree(mp);
    std::vector<int> supp = h_s.row_support(0);
    std::vector<bool> in_supp(size_t(n), false);
    for (int i : supp) in_supp[size_t(i)] = true;

    std::vector<std::vector<uint8_t>> labels(size_t(n), std::vector<uint8_t>(size_t(m), 0));
    PseudoMatrix g = f;
    // Columns outside the support take their labels immediately, on the
    // lowest-index copies; they own no edges. Their counts stay in the
    // working matrix (every reduction reads the support only), so trace
    // snapshots show them untouched.
    for (int i = 0; i < n; ++i) {
        if (in_supp[size_t(i)]) continue;
        int mu = 0;
        for (int alpha = 1; alpha <= 2; ++alpha)
            for (long long t = 0; t < f.count(alpha, i); ++t) labels[size_t(i)][size_t(mu++)] = uint8_t(alpha);
    }

    std::vector<CoverEdge> edges;
    std::vector<std::vector<bool>> connected(size_t(m), std::vector<bool>(size_t(n), false));
    std::vector<LiftStepRecord> trace;

    auto symbol_total = [&](int alpha) {
        long long t = 0;
        for (int i : supp) t += g.count(alpha, i);
        return t;
    };
    auto free_check_copy = [&](const std::vector<int>& cols) {
        for (int nu = 0; nu < m; ++nu) {
            bool ok = true;
            for (int i : cols)
                if (connected[size_t(nu)][size_t(i)]) { ok = false; break; }
            if (ok) return nu;
        }
        return -1;
    };
    auto attach = [&](int i, int mu, int nu) {
        edges.push_back({i, mu, 0, nu, 1});
        connected[size_t(nu)][size_t(i)] = true;
    };

    // Stage 2: both symbols still alive on the support.
    size_t step_idx = 0;
    while (symbol_total(1) > 0 && symbol_total(2) > 0) {
        CriticalReport crit = critical_analysis(h_s, g);
        std::vector<int> sc = crit.coordinate_set();
        std::vector<std::pair<int, int>> admissible;
        for (int k : supp) {
            if (g.count(1, k) < 1) continue;
            for (int ell : supp) {
                if (ell == k || g.count(2, ell) < 1) continue;
                bool ok = true;
                for (int c : sc)
                    if (c != k && c != ell) { ok = false; break; }
                if (ok)
                    for (auto [a, b] : crit.pairs_type_one)
                        if (a != k && b != k) { ok = false; break; }
                if (ok)
                    for (auto [a, b] : crit.pairs_type_two)
                        if (a != ell && b != ell) { ok = false; break; }
                if (ok) admissible.push_back({k, ell});
            }
        }
        if (admissible.empty())
            detail::throw_with_trace("lift: stage 2 has no admissible pair", trace);
        std::pair<int, int> chosen = admissible.front(); // support loops ascend, so this is lex smallest
        if (step_idx < opt.preferred_pairs.size()) {
            auto want = opt.preferred_pairs[step_idx];
            if (std::find(admissible.begin(), admissible.end(), want) == admissible.end())
                throw DomainError("lift: override pair (" + std::to_string(want.first + 1) + "," +
                                  std::to_string(want.second + 1) + ") is not admissible at step " +
                                  std::to_string(step_idx + 1));
            chosen = want;
        }
        auto [k, ell] = chosen;
        int mu_k = int(g.column_sum(k)) - 1, mu_l = int(g.column_sum(ell)) - 1; // consume from the top copy
        labels[size_t(k)][size_t(mu_k)] = 1;
        labels[size_t(ell)][size_t(mu_l)] = 2;
        g.add(1, k, -1);
        g.add(2, ell, -1);
        int nu = free_check_copy({k, ell});
        if (nu < 0) throw std::logic_error("lift: stage 2 found no free check copy");
        attach(k, mu_k, nu);
        attach(ell, mu_l, nu);
        detail::assert_stage_invariant(h_s, g, "lift stage 2");
        trace.push_back({LiftStepRecord::Kind::Stage2Pair, 0, {k, ell}, {mu_k, mu_l}, {nu}, 0, crit, g});
        ++step_idx;
    }
    if (step_idx < opt.preferred_pairs.size())
        throw InputError("lift: more override pairs than stage-2 steps");

    // Stage 3: exactly one symbol may retain mass.
    long long t1 = symbol_total(1), t2 = symbol_total(2);
    if (t1 > 0 && t2 > 0) throw std::logic_error("lift: both symbols alive after stage 2");
    int beta = t1 > 0 ? 1 : (t2 > 0 ? 2 : 0);
    while (beta != 0 && symbol_total(beta) > 0) {
        std::vector<int> live;
        for (int i : supp)
            if (g.count(beta, i) > 0) live.push_back(i);
        if (live.size() < 3)
            detail::throw_with_trace("lift: stage 3 found fewer than 3 nonzero columns (cone violation)", trace);
        std::sort(live.begin(), live.end(), [&](int a, int b) {
            return g.count(beta, a) != g.count(beta, b) ? g.count(beta, a) > g.count(beta, b) : a < b;
        });
        std::vector<int> triple{live[0], live[1], live[2]};
        std::vector<int> copies;
        for (int i : triple) {
            int mu = int(g.column_sum(i)) - 1;
            labels[size_t(i)][size_t(mu)] = uint8_t(beta);
            g.add(beta, i, -1);
            copies.push_back(mu);
        }
        int nu = free_check_copy(triple);
        if (nu < 0) throw std::logic_error("lift: stage 3 found no free check copy");
        for (size_t t = 0; t < triple.size(); ++t) attach(triple[t], copies[t], nu);
        detail::assert_stage_invariant(h_s, g, "lift stage 3");
        trace.push_back({LiftStepRecord::Kind::Stage3Triple, 0, triple, copies, {nu}, beta, {}, g});
    }

    // Stage 4: per column, match the zero-labeled copies to the check copies
    // still missing a neighbor there (augmenting-path search; the candidate
    // graph is complete, so the matching always completes).
    for (int i : supp) {
        std::vector<int> var_free, check_free;
        for (int mu = 0; mu < m; ++mu)
            if (labels[size_t(i)][size_t(mu)] == 0) var_free.push_back(mu);
        for (int nu = 0; nu < m; ++nu)
            if (!connected[size_t(nu)][size_t(i)]) check_free.push_back(nu);
        if (var_free.size() != check_free.size())
            throw std::logic_error("lift: stage 4 free-copy counts disagree");
        std::vector<int> match(check_free.size(), -1); // check slot -> var slot
        for (size_t s = 0; s < var_free.size(); ++s) {
            std::vector<bool> seen(check_free.size(), false);
            // Kuhn's augmenting search; every pair is admissible here.
            std::function<bool(size_t)> augment = [&](size_t v) -> bool {
                for (size_t c = 0; c < check_free.size(); ++c) {
                    if (seen[c]) continue;
                    seen[c] = true;
                    if (match[c] < 0 || augment(size_t(match[c]))) {
                        match[c] = int(v);
                        return true;
                    }
                }
                return false;
            };
            if (!augment(s)) throw std::logic_error("lift: stage 4 matching failed");
        }
        std::vector<int> copies, nus;
        for (size_t c = 0; c < check_free.size(); ++c) {
            attach(i, var_free[size_t(match[c])], check_free[c]);
            copies.push_back(var_free[size_t(match[c])]);
            nus.push_back(check_free[c]);
        }
        if (!copies.empty())
            trace.push_back({LiftStepRecord::Kind::Stage4Fill, 0, {i}, copies, nus, 0, {}, g});
    }

    CoverGraph cover(TannerGraph(h_s), m, std::move(edges));
    CoverLabeling labeling(std::move(cover), std::move(labels));
    if (!is_valid_cover(labeling.cover())) throw std::logic_error("lift: built an invalid cover");
    if (auto bad = parity_violation(labeling)) throw std::logic_error("lift: parity failure, " + *bad);
    if (pseudocodeword_matrix(labeling) != f) throw std::logic_error("lift: labeling does not realize F");
    return LiftResult{std::move(labeling), m, mp, std::move(trace)};
}

namespace detail {

/// Copy permutation sorting one column's labels ascending (stable).
/// Returns pi with pi[old_copy] = new_copy.
inline std::vector<int> sort_permutation(const std::vector<uint8_t>& column) {
    std::vector<int> order(column.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return column[size_t(a)] < column[size_t(b)]; });
    std::vector<int> pi(column.size());
    for (size_t nu = 0; nu < order.size(); ++nu) pi[size_t(order[nu])] = int(nu);
    return pi;
}

} // namespace detail

/// Lifts F against a full ternary parity-check matrix: each row is reduced to
/// its {0,1} support row through the symbol map, lifted on its own, mapped
/// back, and the per-row covers are merged after sorting each variable
/// column's labels (all rows share the same sorted labels, namely F's counts).
inline LiftResult lift_full(const FieldMatrix& h, const PseudoMatrix& f, const LiftOptions& opt = {}) {
    if (h.q() != 3) throw InputError("lift: matrix must be over F_3");
    if (f.q() != 3 || f.cols() != h.cols()) throw InputError("lift: shape mismatch");
    {
        MembershipResult mem = cone_membership(h, f);
        if (!mem.member)
            throw DomainError("lift: F outside the cone, violates " + inequality_text(h, mem.violated.front()));
        std::vector<long long> syn = modular_syndrome(h, f);
        for (int j = 0; j < h.rows(); ++j)
            if (syn[size_t(j)] != 0)
                throw DomainError("lift: mod-3 syndrome is " + std::to_string(syn[size_t(j)]) +
                                  " at row " + std::to_string(j + 1));
    }

    const int n = h.cols();
    const long long mp = f.max_column_sum();
    const int m = detail::lift_degree(mp);

    // Canonical labels: each column ascending, 0s then 1s then 2s.
    std::vector<std::vector<uint8_t>> canonical(size_t(n), std::vector<uint8_t>(size_t(m), 0));
    for (int i = 0; i < n; ++i) {
        int mu = m - int(f.column_sum(i));
        for (int alpha = 1; alpha <= 2; ++alpha)
            for (long long t = 0; t < f.count(alpha, i); ++t) canonical[size_t(i)][size_t(mu++)] = uint8_t(alpha);
    }

    std::vector<CoverEdge> merged;
    std::vector<LiftStepRecord> trace;
    for (int j = 0; j < h.rows(); ++j) {
        FieldMatrix h_j = h.row(j);
        LiftResult r = lift_single_row(support_normalize(h_j), psi_map(h_j, f), opt);
        if (r.degree != m) throw std::logic_error("lift: row cover degree mismatch");
        // Undo the symbol map on the labels, then sort each column.
        std::vector<std::vector<uint8_t>> row_labels = r.labeling.labels();
        for (int i = 0; i < n; ++i)
            if (h(j, i) == 2)
                for (int mu = 0; mu < m; ++mu) {
                    uint8_t& x = row_labels[size_t(i)][size_t(mu)];
                    if (x != 0) x = uint8_t(3 - x);
                }
        std::vector<std::vector<int>> pi(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            pi[size_t(i)] = detail::sort_permutation(row_labels[size_t(i)]);
            std::vector<uint8_t> sorted(static_cast<size_t>(m));
            for (int mu = 0; mu < m; ++mu) sorted[size_t(pi[size_t(i)][size_t(mu)])] = row_labels[size_t(i)][size_t(mu)];
            if (sorted != canonical[size_t(i)])
                throw std::logic_error("lift: row labels disagree with F's counts");
        }
        for (const CoverEdge& e : r.cover().edges())
            merged.push_back({e.var, pi[size_t(e.var)][size_t(e.var_copy)], j, e.check_copy, h(j, e.var)});
        for (LiftStepRecord rec : r.trace) {
            rec.base_row = j;
            trace.push_back(std::move(rec));
        }
    }

    CoverGraph cover(TannerGraph(h), m, std::move(merged));
    CoverLabeling labeling(std::move(cover), canonical);
    if (!is_valid_cover(labeling.cover())) throw std::logic_error("lift: merged cover is invalid");
    if (auto bad = parity_violation(labeling)) throw std::logic_error("lift: merged parity failure, " + *bad);
    if (pseudocodeword_matrix(labeling) != f) throw std::logic_error("lift: merged labeling does not realize F");
    return LiftResult{std::move(labeling), m, mp, std::move(trace)};
}

struct ConePointScaling {
    Rational c;
    PseudoMatrix f;
};

/// Exact scaling witness for cone density: for rational Z in the cone,
/// returns F = qd'Z (d' the common denominator, q the field size) and
/// c = 1/(qd'), so that c F = Z exactly and F meets the modular condition
/// because every weighted column is a multiple of q.
inline ConePointScaling approximate_cone_point(const FieldMatrix& h, const RationalMatrix& z, const Rational& eps) {
    if (z.rows() != h.q() - 1 || z.cols() != h.cols()) throw InputError("cone point: shape mismatch");
    if (!(eps > Rational(0))) throw InputError("cone point: epsilon must be positive");
    if (!cone_membership(h, z).member) throw DomainError("cone point: Z is outside the cone");

    long long d = common_denominator(z);
    long long factor = h.q() * d;
    PseudoMatrix f(h.q(), h.cols());
    for (int a = 1; a < h.q(); ++a)
        for (int i = 0; i < h.cols(); ++i) {
            Rational scaled = z(a - 1, i) * Rational(factor);
            if (!scaled.is_integer()) throw std::logic_error("cone point: scaling did not clear denominators");
            f.set(a, i, scaled.num());
        }
    Rational c(1, factor);
    if (!(f.to_rational().scaled(c) == z)) throw std::logic_error("cone point: c*F differs from Z");
    if (!cone_membership(h, f).member || !modular_condition(h, f))
        throw std::logic_error("cone point: witness fails the pseudocodeword conditions");
    return {c, f};
}

} // namespace conelift
