#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conelift/errors.hpp"
#include "conelift/field.hpp"
#include "conelift/pseudomatrix.hpp"

namespace conelift {

/// Edge of a Tanner graph: check vertex `check`, variable vertex `var`,
/// labeled by the parity-check entry H(check, var) != 0.
struct TannerEdge {
    int check;
    int var;
    uint8_t label;
};

/// Bipartite Tanner graph of a parity-check matrix. One variable vertex per
/// column, one check vertex per row, one labeled edge per nonzero entry.
class TannerGraph {
  public:
    explicit TannerGraph(FieldMatrix h) : h_(std::move(h)) {
        for (int j = 0; j < h_.rows(); ++j)
            for (int i = 0; i < h_.cols(); ++i)
                if (h_(j, i) != 0) edges_.push_back({j, i, h_(j, i)});
    }

    const FieldMatrix& parity_matrix() const { return h_; }
    int n_vars() const { return h_.cols(); }
    int n_checks() const { return h_.rows(); }
    const std::vector<TannerEdge>& edges() const { return edges_; }

    /// Neighbors of check j as (variable, label) pairs, ascending by variable.
    std::vector<std::pair<int, uint8_t>> check_neighbors(int j) const {
        std::vector<std::pair<int, uint8_t>> out;
        for (int i = 0; i < h_.cols(); ++i)
            if (h_(j, i) != 0) out.push_back({i, h_(j, i)});
        return out;
    }

  private:
    FieldMatrix h_;
    std::vector<TannerEdge> edges_; // row-major order
};

/// Edge of an M-cover: connects variable copy (var, var_copy) to check copy
/// (check, check_copy); carries the base edge's label.
struct CoverEdge {
    int var;
    int var_copy;
    int check;
    int check_copy;
    uint8_t label;

    friend bool operator==(const CoverEdge& a, const CoverEdge& b) {
        return a.var == b.var && a.var_copy == b.var_copy && a.check == b.check &&
               a.check_copy == b.check_copy && a.label == b.label;
    }
    friend bool operator<(const CoverEdge& a, const CoverEdge& b) {
        return std::tie(a.check, a.var, a.var_copy, a.check_copy, a.label) <
               std::tie(b.check, b.var, b.var_copy, b.check_copy, b.label);
    }
};

/// Permutation assignment for building covers: (check j, var i) -> one-line
/// permutation sigma of {0, .., M-1}; variable copy mu attaches to check copy
/// sigma[mu].
using EdgePermMap = std::map<std::pair<int, int>, std::vector<int>>;

/// Degree-M cover of a Tanner graph, stored as an explicit edge list so that
/// malformed covers remain representable for validity checking.
class CoverGraph {
  public:
    CoverGraph(TannerGraph base, int m, std::vector<CoverEdge> edges)
        : base_(std::move(base)), m_(m), edges_(std::move(edges)) {
        if (m <= 0) throw InputError("cover: degree must be positive");
    }

    /// Builds the cover determined by one permutation per base edge.
    /// Throws InputError on a missing or extra permutation, or on an
    /// assignment that is not a permutation of {0, .., M-1}.
    static CoverGraph from_permutations(const TannerGraph& base, int m, const EdgePermMap& perms) {
        if (m <= 0) throw InputError("cover: degree must be positive");
        size_t used = 0;
        std::vector<CoverEdge> edges;
        for (const TannerEdge& e : base.edges()) {
            auto it = perms.find({e.check, e.var});
            if (it == perms.end())
                throw InputError("cover: missing permutation for edge (" + std::to_string(e.check + 1) +
                                 "," + std::to_string(e.var + 1) + ")");
            const std::vector<int>& sigma = it->second;
            if (int(sigma.size()) != m) throw InputError("cover: permutation length differs from degree");
            std::vector<bool> seen(size_t(m), false);
            for (int image : sigma) {
                if (image < 0 || image >= m || seen[size_t(image)])
                    throw InputError("cover: assignment for edge (" + std::to_string(e.check + 1) + "," +
                                     std::to_string(e.var + 1) + ") is not a permutation");
                seen[size_t(image)] = true;
            }
            for (int mu = 0; mu < m; ++mu)
                edges.push_back({e.var, mu, e.check, sigma[size_t(mu)], e.label});
            ++used;
        }
        if (used != perms.size()) throw InputError("cover: permutation given for a non-edge");
        return CoverGraph(base, m, std::move(edges));
    }

    const TannerGraph& base() const { return base_; }
    int degree() const { return m_; }
    const std::vector<CoverEdge>& edges() const { return edges_; }

    /// Recovers the permutation map of a structurally valid cover.
    EdgePermMap permutations() const {
        EdgePermMap perms;
        for (const TannerEdge& e : base_.edges())
            perms[{e.check, e.var}] = std::vector<int>(size_t(m_), -1);
        for (const CoverEdge& e : edges_) {
            auto it = perms.find({e.check, e.var});
            if (it == perms.end() || e.var_copy < 0 || e.var_copy >= m_)
                throw InputError("cover: edge list does not project onto the base graph");
            it->second[size_t(e.var_copy)] = e.check_copy;
        }
        for (const auto& [key, sigma] : perms)
            for (int nu : sigma)
                if (nu < 0)
                    throw InputError("cover: base edge (" + std::to_string(key.first + 1) + "," +
                                     std::to_string(key.second + 1) + ") is not fully covered");
        return perms;
    }

  private:
    TannerGraph base_;
    int m_;
    std::vector<CoverEdge> edges_;
};

/// Structural validity: every edge projects to a base edge with the right
/// label, and over each base edge the cover restricts to a perfect matching
/// between the M variable copies and the M check copies. Returns a
/// description of the first violated rule, or nullopt for a valid cover.
inline std::optional<std::string> cover_violation(const CoverGraph& cover) {
    const TannerGraph& base = cover.base();
    const FieldMatrix& h = base.parity_matrix();
    int m = cover.degree();
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> by_edge;
    for (const CoverEdge& e : cover.edges()) {
        if (e.check < 0 || e.check >= h.rows() || e.var < 0 || e.var >= h.cols())
            return "edge references a vertex outside the base graph";
        if (h(e.check, e.var) == 0)
            return "edge (" + std::to_string(e.check + 1) + "," + std::to_string(e.var + 1) +
                   ") does not project onto a base edge";
        if (e.label != h(e.check, e.var))
            return "edge (" + std::to_string(e.check + 1) + "," + std::to_string(e.var + 1) +
                   ") label differs from the base entry";
        if (e.var_copy < 0 || e.var_copy >= m || e.check_copy < 0 || e.check_copy >= m)
            return "edge copy index outside {1, .., M}";
        by_edge[{e.check, e.var}].push_back({e.var_copy, e.check_copy});
    }
    for (const TannerEdge& e : base.edges()) {
        auto it = by_edge.find({e.check, e.var});
        std::string name = "(" + std::to_string(e.check + 1) + "," + std::to_string(e.var + 1) + ")";
        if (it == by_edge.end() || int(it->second.size()) != m)
            return "base edge " + name + " is not covered by exactly M cover edges";
        std::vector<bool> var_seen(size_t(m), false), check_seen(size_t(m), false);
        for (auto [mu, nu] : it->second) {
            if (var_seen[size_t(mu)]) return "base edge " + name + ": variable copy used twice";
            if (check_seen[size_t(nu)]) return "base edge " + name + ": check copy used twice";
            var_seen[size_t(mu)] = true;
            check_seen[size_t(nu)] = true;
        }
    }
    return std::nullopt;
}

inline bool is_valid_cover(const CoverGraph& cover) { return !cover_violation(cover).has_value(); }

/// Parity-check matrix of the cover graph: Mm x Mn over the same field, with
/// block row (j, nu) and block column (i, mu) holding H(j, i) exactly when the
/// cover joins variable copy (i, mu) to check copy (j, nu).
inline FieldMatrix lifted_parity_matrix(const CoverGraph& cover) {
    const FieldMatrix& h = cover.base().parity_matrix();
    int m = cover.degree();
    FieldMatrix lifted(h.q(), h.rows() * m, h.cols() * m);
    for (const CoverEdge& e : cover.edges())
        lifted.set(e.check * m + e.check_copy, e.var * m + e.var_copy, e.label);
    return lifted;
}

/// A cover together with a symbol assignment on its variable copies.
class CoverLabeling {
  public:
    CoverLabeling(CoverGraph cover, std::vector<std::vector<uint8_t>> labels)
        : cover_(std::move(cover)), labels_(std::move(labels)) {
        const FieldMatrix& h = cover_.base().parity_matrix();
        if (int(labels_.size()) != h.cols()) throw InputError("labeling: one label row per variable required");
        for (const auto& row : labels_) {
            if (int(row.size()) != cover_.degree()) throw InputError("labeling: one label per copy required");
            for (uint8_t x : row)
                if (x >= h.q()) throw InputError("labeling: label outside the field");
        }
    }

    const CoverGraph& cover() const { return cover_; }
    int degree() const { return cover_.degree(); }
    uint8_t label(int var, int copy) const { return labels_[size_t(var)][size_t(copy)]; }
    const std::vector<std::vector<uint8_t>>& labels() const { return labels_; }

    /// Flattens to the vector (p_{1,1}, .., p_{1,M}, p_{2,1}, .., p_{n,M}).
    FieldVector concatenated() const {
        const FieldMatrix& h = cover_.base().parity_matrix();
        FieldVector p = FieldVector::zero(h.q(), h.cols() * cover_.degree());
        for (int i = 0; i < h.cols(); ++i)
            for (int mu = 0; mu < cover_.degree(); ++mu)
                p.v[size_t(i * cover_.degree() + mu)] = labels_[size_t(i)][size_t(mu)];
        return p;
    }

  private:
    CoverGraph cover_;
    std::vector<std::vector<uint8_t>> labels_;
};

/// First parity failure of a labeling on its cover: a check copy whose
/// incident labels, weighted by edge labels, do not sum to zero in F_q.
/// Assumes a structurally valid cover; reports nullopt when all checks pass.
inline std::optional<std::string> parity_violation(const CoverLabeling& labeling) {
    const CoverGraph& cover = labeling.cover();
    const FieldMatrix& h = cover.base().parity_matrix();
    int m = cover.degree();
    std::vector<int> acc(size_t(h.rows()) * m, 0);
    for (const CoverEdge& e : cover.edges())
        acc[size_t(e.check) * m + e.check_copy] += int(e.label) * labeling.label(e.var, e.var_copy);
    for (int j = 0; j < h.rows(); ++j)
        for (int nu = 0; nu < m; ++nu) {
            int r = acc[size_t(j) * m + nu] % h.q();
            if (r != 0)
                return "check copy (" + std::to_string(j + 1) + "," + std::to_string(nu + 1) +
                       ") has parity " + std::to_string(r);
        }
    return std::nullopt;
}

/// True when the cover is structurally valid and the labeling satisfies every
/// check copy; equivalently, the concatenated vector lies in the kernel of
/// the lifted parity-check matrix.
inline bool verify_pseudocodeword(const CoverLabeling& labeling) {
    if (!is_valid_cover(labeling.cover())) return false;
    return !parity_violation(labeling).has_value();
}

/// Symbol counts per variable: entry (alpha, i) counts copies of variable i
/// labeled alpha.
inline PseudoMatrix pseudocodeword_matrix(const CoverLabeling& labeling) {
    const FieldMatrix& h = labeling.cover().base().parity_matrix();
    PseudoMatrix f(h.q(), h.cols());
    for (int i = 0; i < h.cols(); ++i)
        for (int mu = 0; mu < labeling.degree(); ++mu) {
            uint8_t a = labeling.label(i, mu);
            if (a != 0) f.add(a, i, 1);
        }
    return f;
}

} // namespace conelift
