#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "conelift/cone.hpp"
#include "conelift/errors.hpp"
#include "conelift/field.hpp"
#include "conelift/lift.hpp"
#include "conelift/pseudomatrix.hpp"
#include "conelift/tanner.hpp"

namespace conelift {

struct OracleOptions {
    double budget = 1e8;      // bound on codeword/candidate evaluations
    bool canonicalize = true; // fix one edge per component to the identity permutation
    uint64_t seed = 0;        // recorded in reports; drives any pool generation upstream
};

namespace detail {

// Component id per base edge, from union-find over the Tanner graph vertices.
inline std::vector<int> edge_components(const TannerGraph& g) {
    int n = g.n_vars(), m = g.n_checks();
    std::vector<int> parent(size_t(n + m));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
        return x;
    };
    for (const TannerEdge& e : g.edges()) parent[size_t(find(e.var))] = find(n + e.check);
    std::vector<int> comp;
    for (const TannerEdge& e : g.edges()) comp.push_back(find(e.var));
    return comp;
}

inline double enumeration_cost(int m_degree, size_t n_edges, int q, int n_vars) {
    double fact = 1;
    for (int t = 2; t <= m_degree; ++t) fact *= t;
    return std::pow(fact, double(n_edges)) * std::pow(double(q), double(m_degree) * n_vars);
}

} // namespace detail

/// Exact set of count matrices realizable on some degree-M cover of H's
/// Tanner graph: iterates every per-edge permutation assignment (modulo
/// check-copy relabeling when canonicalization is on) and every codeword of
/// each lifted code, walked through the kernel basis.
inline std::set<PseudoMatrix> enumerate_pseudocodeword_matrices(const FieldMatrix& h, int m_degree,
                                                                const OracleOptions& opt = {},
                                                                long long* evaluations = nullptr) {
    if (m_degree <= 0) throw InputError("enumerate: cover degree must be positive");
    TannerGraph base(h);
    double cost = detail::enumeration_cost(m_degree, base.edges().size(), h.q(), h.cols());
    if (cost > opt.budget)
        throw BudgetError("enumerate: (M!)^edges * q^(Mn) = " + std::to_string(cost) +
                          " exceeds budget " + std::to_string(opt.budget));

    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(static_cast<size_t>(m_degree));
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }

    // Fixing one edge per connected component to the identity loses no count
    // matrix: check copies can be relabeled freely and labels live on
    // variable copies.
    size_t n_edges = base.edges().size();
    std::vector<bool> fixed(n_edges, false);
    if (opt.canonicalize) {
        std::vector<int> comp = detail::edge_components(base);
        std::set<int> seen;
        for (size_t e = 0; e < n_edges; ++e)
            if (seen.insert(comp[e]).second) fixed[e] = true;
    }

    std::set<PseudoMatrix> result;
    long long evals = 0;
    std::vector<size_t> digit(n_edges, 0);
    while (true) {
        EdgePermMap assignment;
        for (size_t e = 0; e < n_edges; ++e) {
            const TannerEdge& te = base.edges()[e];
            assignment[{te.check, te.var}] = perms[digit[e]];
        }
        CoverGraph cover = CoverGraph::from_permutations(base, m_degree, assignment);
        FieldMatrix lifted = lifted_parity_matrix(cover);
        std::vector<FieldVector> basis = gf_nullspace(lifted);
        int len = lifted.cols(), q = h.q();
        std::vector<uint8_t> cw(size_t(len), 0);
        std::vector<uint8_t> coeff(basis.size(), 0);
        auto record = [&]() {
            PseudoMatrix f(q, h.cols());
            for (int i = 0; i < h.cols(); ++i)
                for (int mu = 0; mu < m_degree; ++mu) {
                    uint8_t a = cw[size_t(i * m_degree + mu)];
                    if (a != 0) f.add(a, i, 1);
                }
            result.insert(std::move(f));
            // Compare as doubles: budgets above the long long range must not wrap.
            if (double(++evals) > opt.budget)
                throw BudgetError("enumerate: evaluation count exceeded budget");
        };
        record();
        size_t t = 0;
        while (t < coeff.size()) {
            // Every digit change, including a wrap from q-1 to 0, adds the
            // basis vector once: -(q-1) = 1 mod q.
            for (int c = 0; c < len; ++c) cw[size_t(c)] = uint8_t((cw[size_t(c)] + basis[t].v[size_t(c)]) % q);
            if (coeff[t] == q - 1) {
                coeff[t] = 0;
                ++t;
                continue;
            }
            ++coeff[t];
            record();
            t = 0;
        }

        // Advance the permutation odometer over the non-fixed edges.
        size_t e = 0;
        while (e < n_edges && (fixed[e] || digit[e] + 1 == perms.size())) {
            if (!fixed[e]) digit[e] = 0;
            ++e;
        }
        if (e == n_edges) break;
        ++digit[e];
    }
    if (evaluations) *evaluations += evals;
    return result;
}

struct TheoremReport {
    std::string theorem;
    FieldMatrix h;
    int parameter = 0;   // M_max for necessity, entry bound for sufficiency
    long long checked = 0;
    long long secondary = 0; // necessity: codeword evaluations; sufficiency: successful realizations
    std::vector<std::string> violations;
    uint64_t seed = 0;

    bool passed() const { return violations.empty(); }
};

/// Necessity direction: every count matrix realized by a cover of degree
/// <= m_max satisfies cone membership and the modular syndrome condition.
inline TheoremReport check_necessity(const FieldMatrix& h, int m_max, const OracleOptions& opt = {}) {
    TheoremReport rep{std::to_string(h.q()) + "-necessity", h, m_max, 0, 0, {}, opt.seed};
    ConeSystem sys = enumerate_cone(h);
    for (int m = 1; m <= m_max; ++m) {
        std::set<PseudoMatrix> found = enumerate_pseudocodeword_matrices(h, m, opt, &rep.secondary);
        for (const PseudoMatrix& f : found) {
            ++rep.checked;
            bool cone_ok = satisfies_all(sys, f);
            bool mod_ok = modular_condition(h, f);
            if (!cone_ok || !mod_ok)
                rep.violations.push_back("M=" + std::to_string(m) + " F=" + matrix_text(f) +
                                         (cone_ok ? " breaks the modular condition" : " leaves the cone"));
        }
    }
    return rep;
}

/// Binary constructive realization: builds a cover labeling for any F
/// satisfying the binary cone and mod-2 conditions. Per row, repeatedly pairs
/// the two largest residual counts on one fresh check copy (degree 2M' - 1
/// always suffices); rows merge on canonically sorted column labels.
inline CoverLabeling realize_binary(const FieldMatrix& h, const PseudoMatrix& f) {
    if (h.q() != 2) throw InputError("binary realization: matrix must be over F_2");
    if (f.q() != 2 || f.cols() != h.cols()) throw InputError("binary realization: shape mismatch");
    {
        MembershipResult mem = cone_membership(h, f);
        if (!mem.member)
            throw DomainError("binary realization: F outside the cone, violates " +
                              inequality_text(h, mem.violated.front()));
        std::vector<long long> syn = modular_syndrome(h, f);
        for (int j = 0; j < h.rows(); ++j)
            if (syn[size_t(j)] != 0)
                throw DomainError("binary realization: mod-2 syndrome is 1 at row " + std::to_string(j + 1));
    }
    const int n = h.cols();
    const long long mp = f.max_column_sum();
    const int m = mp >= 1 ? int(2 * mp - 1) : 1;

    std::vector<std::vector<uint8_t>> canonical(size_t(n), std::vector<uint8_t>(size_t(m), 0));
    for (int i = 0; i < n; ++i)
        for (int mu = m - int(f.count(1, i)); mu < m; ++mu) canonical[size_t(i)][size_t(mu)] = 1;

    std::vector<CoverEdge> merged;
    for (int j = 0; j < h.rows(); ++j) {
        std::vector<int> supp = h.row_support(j);
        ConeSystem row_sys = enumerate_k2(h.row(j));
        PseudoMatrix g(2, n);
        long long total = 0;
        for (int i : supp) {
            g.set(1, i, f.count(1, i));
            total += f.count(1, i);
        }
        std::vector<std::vector<bool>> connected(size_t(m), std::vector<bool>(size_t(n), false));
        std::vector<std::pair<std::pair<int, int>, int>> row_edges; // ((var, construction copy), check copy)
        while (total > 0) {
            std::vector<int> live;
            for (int i : supp)
                if (g.count(1, i) > 0) live.push_back(i);
            if (live.size() < 2) throw std::logic_error("binary realization: lone positive column");
            std::sort(live.begin(), live.end(), [&](int a, int b) {
                return g.count(1, a) != g.count(1, b) ? g.count(1, a) > g.count(1, b) : a < b;
            });
            int a = live[0], b = live[1];
            int mu_a = int(g.count(1, a)) - 1, mu_b = int(g.count(1, b)) - 1;
            g.add(1, a, -1);
            g.add(1, b, -1);
            total -= 2;
            int nu = -1;
            for (int t = 0; t < m; ++t)
                if (!connected[size_t(t)][size_t(a)] && !connected[size_t(t)][size_t(b)]) { nu = t; break; }
            if (nu < 0) throw std::logic_error("binary realization: no free check copy");
            connected[size_t(nu)][size_t(a)] = connected[size_t(nu)][size_t(b)] = true;
            row_edges.push_back({{a, mu_a}, nu});
            row_edges.push_back({{b, mu_b}, nu});
            if (!satisfies_all(row_sys, g))
                throw std::logic_error("binary realization: working vector left the cone");
        }
        for (int i : supp) { // complete each check copy with zero-labeled copies
            int fi = int(f.count(1, i));
            std::vector<int> check_free;
            for (int nu = 0; nu < m; ++nu)
                if (!connected[size_t(nu)][size_t(i)]) check_free.push_back(nu);
            if (int(check_free.size()) != m - fi) throw std::logic_error("binary realization: fill count mismatch");
            for (size_t t = 0; t < check_free.size(); ++t) row_edges.push_back({{i, fi + int(t)}, check_free[t]});
        }
        // Construction puts the ones on copies 0..f_i-1; canonical order puts
        // them on top. Remap copies accordingly.
        for (auto [vc, nu] : row_edges) {
            auto [i, mu] = vc;
            int fi = int(f.count(1, i));
            int new_mu = mu < fi ? (m - fi) + mu : mu - fi;
            merged.push_back({i, new_mu, j, nu, 1});
        }
    }
    CoverLabeling labeling(CoverGraph(TannerGraph(h), m, std::move(merged)), canonical);
    if (!is_valid_cover(labeling.cover())) throw std::logic_error("binary realization: invalid cover");
    if (auto bad = parity_violation(labeling)) throw std::logic_error("binary realization: " + *bad);
    if (pseudocodeword_matrix(labeling) != f) throw std::logic_error("binary realization: counts disagree");
    return labeling;
}

/// Sufficiency direction: every integer F with entries <= entry_bound that
/// satisfies the cone and modular conditions is realized constructively
/// (ternary lift, or the binary pairing construction) and verified.
inline TheoremReport check_sufficiency(const FieldMatrix& h, int entry_bound, const OracleOptions& opt = {}) {
    if (entry_bound < 0) throw InputError("sufficiency: entry bound must be nonnegative");
    TheoremReport rep{std::to_string(h.q()) + "-sufficiency", h, entry_bound, 0, 0, {}, opt.seed};
    int cells = (h.q() - 1) * h.cols();
    double cand = std::pow(double(entry_bound + 1), double(cells));
    if (cand > opt.budget)
        throw BudgetError("sufficiency: " + std::to_string(cand) + " candidates exceed budget " +
                          std::to_string(opt.budget));
    ConeSystem sys = enumerate_cone(h);
    PseudoMatrix f(h.q(), h.cols());
    std::vector<int> digit(size_t(cells), 0);
    while (true) {
        ++rep.checked;
        if (satisfies_all(sys, f) && modular_condition(h, f)) {
            try {
                if (h.q() == 3)
                    lift_full(h, f); // realizes F or throws
                else
                    realize_binary(h, f);
                ++rep.secondary;
            } catch (const std::exception& e) {
                rep.violations.push_back("F=" + matrix_text(f) + ": " + e.what());
            }
        }
        size_t t = 0;
        while (t < digit.size() && digit[t] == entry_bound) {
            digit[t] = 0;
            f.set(int(t) % (h.q() - 1) + 1, int(t) / (h.q() - 1), 0);
            ++t;
        }
        if (t == digit.size()) break;
        ++digit[t];
        f.set(int(t) % (h.q() - 1) + 1, int(t) / (h.q() - 1), digit[t]);
    }
    return rep;
}

struct LemmaCheck {
    std::string name;
    long long checked = 0;
    std::vector<std::string> failures;
};

struct LemmaReport {
    uint64_t seed = 0;
    int entry_bound = 4;
    std::vector<LemmaCheck> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.failures.empty()) return false;
        return true;
    }
    long long total_checked() const {
        long long t = 0;
        for (const auto& c : checks) t += c.checked;
        return t;
    }
};

/// Exhaustive small-scale verification of the structural lemmas over a pool
/// of matrices: row-intersection equality of the cone, the symbol-map
/// membership equivalence and involution, triple-decomposition validity, and
/// the zero-slack property of critical inequalities. Binary pool members get
/// tiny both-direction theorem checks instead.
inline LemmaReport check_lemma_battery(const std::vector<FieldMatrix>& pool, const OracleOptions& opt = {},
                                       int entry_bound = 4) {
    LemmaReport rep;
    rep.seed = opt.seed;
    rep.entry_bound = entry_bound;
    LemmaCheck intersection{"cone-row-intersection", 0, {}}, equivalence{"symbol-map-equivalence", 0, {}},
        involution{"symbol-map-involution", 0, {}}, decomposition{"triple-decomposition", 0, {}},
        zero_slack{"critical-zero-slack", 0, {}}, binary{"binary-theorem", 0, {}};

    for (const FieldMatrix& h : pool) {
        if (h.q() == 2) {
            TheoremReport nec = check_necessity(h, 2, opt);
            TheoremReport suf = check_sufficiency(h, 2, opt);
            binary.checked += nec.checked + suf.checked;
            for (const auto& v : nec.violations) binary.failures.push_back("necessity: " + v);
            for (const auto& v : suf.violations) binary.failures.push_back("sufficiency: " + v);
            continue;
        }
        const int n = h.cols();
        const int cells = 2 * n;
        double cand = std::pow(double(entry_bound + 1), double(cells));
        if (cand > opt.budget) throw BudgetError("lemma battery: candidate grid exceeds budget");

        ConeSystem full_sys = enumerate_k3(h);
        std::vector<FieldMatrix> rows, hs_rows;
        std::vector<ConeSystem> row_sys, hs_sys;
        for (int j = 0; j < h.rows(); ++j) {
            rows.push_back(h.row(j));
            hs_rows.push_back(support_normalize(rows.back()));
            row_sys.push_back(enumerate_k3(rows.back()));
            hs_sys.push_back(enumerate_k3(hs_rows.back()));
        }

        PseudoMatrix f(3, n);
        std::vector<int> digit(size_t(cells), 0);
        while (true) {
            bool full_member = satisfies_all(full_sys, f);
            bool all_rows = true;
            for (int j = 0; j < h.rows() && all_rows; ++j) all_rows = satisfies_all(row_sys[size_t(j)], f);
            ++intersection.checked;
            if (full_member != all_rows)
                intersection.failures.push_back("F=" + matrix_text(f) + " disagrees with the row intersection");

            for (int j = 0; j < h.rows(); ++j) {
                PseudoMatrix fhat = psi_map(rows[size_t(j)], f);
                ++involution.checked;
                if (psi_map(rows[size_t(j)], fhat) != f)
                    involution.failures.push_back("row " + std::to_string(j + 1) + " F=" + matrix_text(f));
                ++equivalence.checked;
                if (satisfies_all(row_sys[size_t(j)], f) != satisfies_all(hs_sys[size_t(j)], fhat))
                    equivalence.failures.push_back("row " + std::to_string(j + 1) + " F=" + matrix_text(f));

                // Triple decomposition applies to one-symbol mass concentrated
                // on the support of the normalized row.
                bool single_type = true;
                long long mass = 0;
                int symbol = 0;
                for (int a = 1; a <= 2 && single_type; ++a) {
                    long long s = 0;
                    for (int i = 0; i < n; ++i) s += f.count(a, i);
                    if (s > 0) {
                        if (symbol != 0) single_type = false;
                        symbol = a;
                        mass = s;
                    }
                }
                if (single_type && symbol != 0 && mass % 3 == 0) {
                    bool on_support = true;
                    for (int i = 0; i < n && on_support; ++i)
                        if (hs_rows[size_t(j)](0, i) == 0 && f.column_sum(i) != 0) on_support = false;
                    if (on_support && satisfies_all(hs_sys[size_t(j)], f)) {
                        ++decomposition.checked;
                        try {
                            SetDecomposition dec = decompose_one_type(hs_rows[size_t(j)], f);
                            std::vector<long long> mult(size_t(n), 0);
                            for (const auto& s : dec.sets) {
                                if (s.size() != 3 || s[0] == s[1] || s[1] == s[2])
                                    throw std::logic_error("set is not three distinct indices");
                                for (int i : s) ++mult[size_t(i)];
                            }
                            for (int i = 0; i < n; ++i)
                                if (mult[size_t(i)] != f.count(symbol, i))
                                    throw std::logic_error("multiplicity mismatch");
                        } catch (const std::exception& e) {
                            decomposition.failures.push_back("row " + std::to_string(j + 1) + " F=" +
                                                             matrix_text(f) + ": " + e.what());
                        }
                    }
                }

                if (satisfies_all(row_sys[size_t(j)], f) && modular_syndrome_row(h, j, f) == 0) {
                    ++zero_slack.checked;
                    for (const CriticalSlack& cs : critical_slacks(rows[size_t(j)], f))
                        if (cs.slack != 0)
                            zero_slack.failures.push_back("row " + std::to_string(j + 1) + " F=" +
                                                          matrix_text(f) + " slack " + std::to_string(cs.slack));
                }
            }

            size_t t = 0;
            while (t < digit.size() && digit[t] == entry_bound) {
                digit[t] = 0;
                f.set(int(t) % 2 + 1, int(t) / 2, 0);
                ++t;
            }
            if (t == digit.size()) break;
            ++digit[t];
            f.set(int(t) % 2 + 1, int(t) / 2, digit[t]);
        }
    }
    rep.checks = {intersection, equivalence, involution, decomposition, zero_slack, binary};
    return rep;
}

/// Uniform random parity-check matrix with no all-zero rows.
inline FieldMatrix random_matrix(int q, int rows, int cols, std::mt19937_64& rng) {
    FieldMatrix h(q, rows, cols);
    std::uniform_int_distribution<int> dist(0, q - 1);
    for (int r = 0; r < rows; ++r) {
        bool nonzero = false;
        while (!nonzero) {
            for (int c = 0; c < cols; ++c) {
                int v = dist(rng);
                h.set(r, c, v);
                if (v != 0) nonzero = true;
            }
        }
    }
    return h;
}

} // namespace conelift
