#pragma once

#include <optional>
#include <string>

#include "conelift/field.hpp"
#include "conelift/pseudomatrix.hpp"
#include "conelift/tanner.hpp"

namespace conelift::fixtures {

/// The running 4-column, 2-row ternary parity-check matrix.
inline const FieldMatrix& paper_4_2() {
    static const FieldMatrix h = FieldMatrix::from_rows(3, {{1, 2, 2, 1}, {2, 0, 1, 2}});
    return h;
}

/// Count matrix of the shipped degree-4 cover labeling.
inline const PseudoMatrix& paper_f() {
    static const PseudoMatrix f = PseudoMatrix::from_rows({{2, 2, 2, 2}, {2, 2, 0, 0}});
    return f;
}

/// Support-normalized second row of paper_4_2.
inline const FieldMatrix& paper_hs() {
    static const FieldMatrix h = FieldMatrix::from_rows(3, {{1, 0, 1, 1}});
    return h;
}

/// Symbol-mapped paper_f against the second row of paper_4_2.
inline const PseudoMatrix& paper_fhat() {
    static const PseudoMatrix f = PseudoMatrix::from_rows({{2, 2, 2, 0}, {2, 2, 0, 2}});
    return f;
}

/// The shipped degree-4 cover of paper_4_2 with its pseudocodeword labeling:
/// permutation (3,4,1,2) on edges (1,1), (1,3), (2,1), (2,4), identity on the
/// rest, and the labeling whose counts give paper_f.
inline CoverLabeling paper_cover_16() {
    const std::vector<int> shift{2, 3, 0, 1}; // one-line form of (3,4,1,2), 0-based
    const std::vector<int> ident{0, 1, 2, 3};
    EdgePermMap perms;
    perms[{0, 0}] = shift;
    perms[{0, 1}] = ident;
    perms[{0, 2}] = shift;
    perms[{0, 3}] = ident;
    perms[{1, 0}] = shift;
    perms[{1, 2}] = ident;
    perms[{1, 3}] = shift;
    CoverGraph cover = CoverGraph::from_permutations(TannerGraph(paper_4_2()), 4, perms);
    std::vector<std::vector<uint8_t>> labels{
        {1, 1, 2, 2}, {1, 1, 2, 2}, {0, 0, 1, 1}, {0, 0, 1, 1}};
    return CoverLabeling(std::move(cover), std::move(labels));
}

/// Lifted parity-check matrix of the shipped cover, frozen literal: one row
/// per check copy (2 checks x 4 copies), one column per variable copy.
inline const FieldMatrix& paper_htilde() {
    static const FieldMatrix h = FieldMatrix::from_rows(3, {
        {0, 0, 1, 0, 2, 0, 0, 0, 0, 0, 2, 0, 1, 0, 0, 0},
        {0, 0, 0, 1, 0, 2, 0, 0, 0, 0, 0, 2, 0, 1, 0, 0},
        {1, 0, 0, 0, 0, 0, 2, 0, 2, 0, 0, 0, 0, 0, 1, 0},
        {0, 1, 0, 0, 0, 0, 0, 2, 0, 2, 0, 0, 0, 0, 0, 1},
        {0, 0, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 2, 0},
        {0, 0, 0, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 2},
        {2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0},
        {0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 0},
    });
    return h;
}

/// The labeling of paper_cover_16 flattened to one vector.
inline const std::vector<int>& paper_p() {
    static const std::vector<int> p{1, 1, 2, 2, 1, 1, 2, 2, 0, 0, 1, 1, 0, 0, 1, 1};
    return p;
}

inline std::optional<FieldMatrix> find_matrix(const std::string& name) {
    if (name == "paper-4-2") return paper_4_2();
    if (name == "paper-hs") return paper_hs();
    return std::nullopt;
}

inline std::optional<PseudoMatrix> find_pseudomatrix(const std::string& name) {
    if (name == "paper-f") return paper_f();
    if (name == "paper-fhat") return paper_fhat();
    return std::nullopt;
}

inline std::optional<CoverLabeling> find_cover(const std::string& name) {
    if (name == "paper-cover-16") return paper_cover_16();
    return std::nullopt;
}

} // namespace conelift::fixtures
