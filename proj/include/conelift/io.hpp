#pragma once

/// JSON and DOT serialization: parity-check matrices, pseudocodeword count
/// matrices (integer or rational), labeled covers, lift traces, cone
/// systems, and oracle reports.
///
/// Readers are tolerant where a later stage gives better diagnostics: a
/// cover file with a non-bijective copy assignment parses fine and fails
/// in cover_violation with the violated structural rule named. Shape and
/// value errors that leave no meaningful object to build throw InputError.

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cone.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "lift.hpp"
#include "oracle.hpp"
#include "pseudomatrix.hpp"
#include "rational.hpp"
#include "tanner.hpp"

namespace conelift {

using Json = nlohmann::json;

inline Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << text;
    if (!out) throw InputError("write failed: " + path);
}

// ---------------------------------------------------------------- matrices

inline Json matrix_to_json(const FieldMatrix& h) {
    Json entries = Json::array();
    for (int j = 0; j < h.rows(); ++j) {
        Json row = Json::array();
        for (int i = 0; i < h.cols(); ++i) row.push_back(h(j, i));
        entries.push_back(std::move(row));
    }
    return Json{{"q", h.q()}, {"rows", h.rows()}, {"cols", h.cols()}, {"entries", entries}};
}

inline FieldMatrix matrix_from_json(const Json& doc) {
    if (!doc.is_object()) throw InputError("matrix: expected a JSON object");
    if (!doc.contains("q") || !doc.contains("entries"))
        throw InputError("matrix: needs \"q\" and \"entries\"");
    if (!doc["q"].is_number_integer()) throw InputError("matrix: \"q\" must be an integer");
    int q = doc["q"].get<int>();
    const Json& entries = doc["entries"];
    if (!entries.is_array() || entries.empty())
        throw InputError("matrix: \"entries\" must be a non-empty array of rows");
    std::vector<std::vector<int>> rows;
    for (const Json& row : entries) {
        if (!row.is_array()) throw InputError("matrix: each row must be an array");
        std::vector<int> r;
        for (const Json& cell : row) {
            if (!cell.is_number_integer()) throw InputError("matrix: entries must be integers");
            r.push_back(cell.get<int>());
        }
        rows.push_back(std::move(r));
    }
    if (doc.contains("rows") &&
        (!doc["rows"].is_number_integer() || doc["rows"].get<long long>() != (long long)rows.size()))
        throw InputError("matrix: \"rows\" disagrees with the entry array");
    if (doc.contains("cols") &&
        (!doc["cols"].is_number_integer() || doc["cols"].get<long long>() != (long long)rows[0].size()))
        throw InputError("matrix: \"cols\" disagrees with the entry array");
    return FieldMatrix::from_rows(q, rows);
}

// --------------------------------------------------- pseudocodeword points

/// A possibly fractional candidate point: q and the (q-1) x n entry matrix.
struct RationalPoint {
    int q = 0;
    RationalMatrix entries;
};

namespace detail {

inline Rational rational_cell(const Json& cell) {
    if (cell.is_number_integer()) return Rational(cell.get<long long>());
    if (cell.is_string()) return Rational::parse(cell.get<std::string>());
    if (cell.is_number_float())
        throw InputError("count matrix: write fractions as strings like \"1/3\", not floats");
    throw InputError("count matrix: entries must be integers or fraction strings");
}

inline std::vector<std::vector<Rational>> rational_rows(const Json& entries) {
    if (!entries.is_array() || entries.empty())
        throw InputError("count matrix: expected a non-empty array");
    std::vector<std::vector<Rational>> rows;
    if (entries[0].is_array()) {
        for (const Json& row : entries) {
            if (!row.is_array()) throw InputError("count matrix: mixed nesting");
            std::vector<Rational> r;
            for (const Json& cell : row) r.push_back(rational_cell(cell));
            if (!rows.empty() && r.size() != rows[0].size())
                throw InputError("count matrix: ragged rows");
            rows.push_back(std::move(r));
        }
    } else {
        std::vector<Rational> r;
        for (const Json& cell : entries) r.push_back(rational_cell(cell));
        rows.push_back(std::move(r));
    }
    if (rows[0].empty()) throw InputError("count matrix: empty row");
    return rows;
}

}  // namespace detail

/// Accepts {"q": .., "entries": [[..]]}, a bare array of rows (q inferred
/// as rows + 1), or a flat array (one binary row). Entries are integers or
/// "p/q" fraction strings.
inline RationalPoint pseudomatrix_from_json(const Json& doc) {
    const Json* entries = &doc;
    int declared_q = 0;
    if (doc.is_object()) {
        if (!doc.contains("entries")) throw InputError("count matrix: needs \"entries\"");
        entries = &doc["entries"];
        if (doc.contains("q")) {
            if (!doc["q"].is_number_integer()) throw InputError("count matrix: \"q\" must be an integer");
            declared_q = doc["q"].get<int>();
        }
    }
    std::vector<std::vector<Rational>> rows = detail::rational_rows(*entries);
    int q = int(rows.size()) + 1;
    if (declared_q != 0 && declared_q != q)
        throw InputError("count matrix: \"q\" expects " + std::to_string(declared_q - 1) +
                         " rows, found " + std::to_string(rows.size()));
    detail::check_prime_field(q);
    RationalMatrix z(int(rows.size()), int(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t i = 0; i < rows[r].size(); ++i) z(int(r), int(i)) = rows[r][i];
    return RationalPoint{q, std::move(z)};
}

/// Integral nonnegative point -> count matrix; DomainError otherwise.
inline PseudoMatrix to_pseudomatrix(const RationalPoint& p) {
    std::vector<std::vector<long long>> rows(size_t(p.entries.rows()));
    for (int r = 0; r < p.entries.rows(); ++r)
        for (int i = 0; i < p.entries.cols(); ++i) {
            const Rational& v = p.entries(r, i);
            if (v.den() != 1)
                throw DomainError("count matrix has a fractional entry " + v.str() +
                                  "; integer counts required");
            if (v.num() < 0) throw DomainError("count matrix has a negative entry");
            rows[size_t(r)].push_back(v.num());
        }
    return PseudoMatrix::from_rows(rows);
}

inline Json pseudomatrix_to_json(const PseudoMatrix& f) {
    Json entries = Json::array();
    for (int a = 1; a < f.q(); ++a) {
        Json row = Json::array();
        for (int i = 0; i < f.cols(); ++i) row.push_back(f.count(a, i));
        entries.push_back(std::move(row));
    }
    return Json{{"q", f.q()}, {"entries", entries}};
}

// ------------------------------------------------------------------ covers

/// A cover graph bundled with its vertex labeling (zeros when the file
/// carries none).
struct LabeledCover {
    CoverGraph cover;
    CoverLabeling labeling;
};

inline Json cover_to_json(const CoverLabeling& labeling) {
    const CoverGraph& cover = labeling.cover();
    Json perms = Json::object();
    for (const auto& [edge, sigma] : cover.permutations()) {
        std::string key = std::to_string(edge.first + 1) + "," + std::to_string(edge.second + 1);
        Json arr = Json::array();
        for (int nu : sigma) arr.push_back(nu + 1);
        perms[key] = std::move(arr);
    }
    Json labels = Json::array();
    for (const auto& row : labeling.labels()) {
        Json arr = Json::array();
        for (uint8_t x : row) arr.push_back(int(x));
        labels.push_back(std::move(arr));
    }
    return Json{{"M", cover.degree()},
                {"base", matrix_to_json(cover.base().parity_matrix())},
                {"perms", perms},
                {"labels", labels}};
}

/// Reads {"M", "base", "perms", "labels"}. Keys in "perms" are 1-based
/// "j,i" pairs and copy images are 1-based. A non-bijective assignment is
/// accepted here so that cover_violation can name the broken rule; values
/// outside 1..M, assignments on zero entries of the base matrix, and
/// malformed labels are rejected outright.
inline LabeledCover cover_from_json(const Json& doc) {
    if (!doc.is_object()) throw InputError("cover: expected a JSON object");
    for (const char* key : {"M", "base", "perms"})
        if (!doc.contains(key)) throw InputError(std::string("cover: needs \"") + key + "\"");
    if (!doc["M"].is_number_integer() || doc["M"].get<int>() <= 0)
        throw InputError("cover: \"M\" must be a positive integer");
    int m = doc["M"].get<int>();
    FieldMatrix h = matrix_from_json(doc["base"]);
    TannerGraph base(h);

    if (!doc["perms"].is_object()) throw InputError("cover: \"perms\" must be an object");
    std::vector<CoverEdge> edges;
    for (const auto& [key, value] : doc["perms"].items()) {
        size_t comma = key.find(',');
        int j = 0, i = 0;
        try {
            if (comma == std::string::npos) throw std::invalid_argument(key);
            j = std::stoi(key.substr(0, comma));
            i = std::stoi(key.substr(comma + 1));
        } catch (const std::exception&) {
            throw InputError("cover: bad edge key \"" + key + "\", expected \"j,i\"");
        }
        if (j < 1 || j > h.rows() || i < 1 || i > h.cols())
            throw InputError("cover: edge key \"" + key + "\" outside the base matrix");
        if (h(j - 1, i - 1) == 0)
            throw InputError("cover: assignment for \"" + key + "\" but the base entry is zero");
        if (!value.is_array() || int(value.size()) != m)
            throw InputError("cover: assignment for \"" + key + "\" must list M copy images");
        for (int mu = 0; mu < m; ++mu) {
            const Json& cell = value[size_t(mu)];
            if (!cell.is_number_integer())
                throw InputError("cover: copy images must be integers");
            int nu = cell.get<int>();
            if (nu < 1 || nu > m)
                throw InputError("cover: copy image " + std::to_string(nu) + " outside 1.." +
                                 std::to_string(m));
            edges.push_back({i - 1, mu, j - 1, nu - 1, h(j - 1, i - 1)});
        }
    }
    CoverGraph cover(base, m, std::move(edges));

    std::vector<std::vector<uint8_t>> labels(size_t(h.cols()), std::vector<uint8_t>(size_t(m), 0));
    if (doc.contains("labels") && !doc["labels"].is_null()) {
        const Json& rows = doc["labels"];
        if (!rows.is_array() || int(rows.size()) != h.cols())
            throw InputError("cover: \"labels\" must hold one array per variable");
        for (int i = 0; i < h.cols(); ++i) {
            const Json& row = rows[size_t(i)];
            if (!row.is_array() || int(row.size()) != m)
                throw InputError("cover: each label row must list M values");
            for (int mu = 0; mu < m; ++mu) {
                const Json& cell = row[size_t(mu)];
                if (!cell.is_number_integer()) throw InputError("cover: labels must be integers");
                long long x = cell.get<long long>();
                if (x < 0 || x >= h.q())
                    throw InputError("cover: label " + std::to_string(x) + " outside the field");
                labels[size_t(i)][size_t(mu)] = uint8_t(x);
            }
        }
    }
    CoverLabeling labeling(cover, std::move(labels));
    return LabeledCover{std::move(cover), std::move(labeling)};
}

// ------------------------------------------------------------- lift traces

inline Json critical_to_json(const CriticalReport& rep) {
    Json coords = Json::array();
    for (auto [c, t] : rep.coordinates) coords.push_back(Json::array({c + 1, t}));
    Json p1 = Json::array();
    for (auto [k, l] : rep.pairs_type_one) p1.push_back(Json::array({k + 1, l + 1}));
    Json p2 = Json::array();
    for (auto [k, l] : rep.pairs_type_two) p2.push_back(Json::array({k + 1, l + 1}));
    return Json{{"coordinates", coords}, {"pairs_type_one", p1}, {"pairs_type_two", p2}};
}

inline Json trace_to_json(const std::vector<LiftStepRecord>& trace) {
    Json arr = Json::array();
    for (const LiftStepRecord& step : trace) {
        Json coords = Json::array();
        for (int c : step.coords) coords.push_back(c + 1);
        Json copies = Json::array();
        for (int mu : step.copies) copies.push_back(mu + 1);
        Json checks = Json::array();
        for (int nu : step.check_copies) checks.push_back(nu + 1);
        Json f_after = Json::array();
        for (int a = 1; a < step.f_after.q(); ++a) {
            Json row = Json::array();
            for (int i = 0; i < step.f_after.cols(); ++i) row.push_back(step.f_after.count(a, i));
            f_after.push_back(std::move(row));
        }
        arr.push_back(Json{{"kind", step_kind_name(step.kind)},
                           {"row", step.base_row + 1},
                           {"coords", coords},
                           {"copies", copies},
                           {"check_copies", checks},
                           {"symbol", step.symbol},
                           {"critical", critical_to_json(step.criticality)},
                           {"f_after", f_after}});
    }
    return arr;
}

inline Json lift_result_to_json(const LiftResult& result) {
    Json doc = cover_to_json(result.labeling);
    doc["trace"] = trace_to_json(result.trace);
    return doc;
}

// ------------------------------------------------------------ cone systems

inline Json inequality_to_json(const FieldMatrix& h, const ConeInequality& ineq) {
    Json idx = Json::array();
    for (int i : ineq.indices) idx.push_back(i + 1);
    Json coeff = Json::array();
    for (int a = 1; a < ineq.q; ++a) {
        Json row = Json::array();
        for (int i = 0; i < ineq.n; ++i) row.push_back(ineq.c(a, i));
        coeff.push_back(std::move(row));
    }
    Json doc{{"kind", kind_name(ineq.kind)},
             {"indices", idx},
             {"symbol", ineq.alpha},
             {"coefficients", coeff},
             {"text", inequality_text(h, ineq)}};
    doc["row"] = ineq.row >= 0 ? Json(ineq.row + 1) : Json(nullptr);
    return doc;
}

inline Json cone_to_json(const ConeSystem& system) {
    Json arr = Json::array();
    for (const ConeInequality& ineq : system.inequalities)
        arr.push_back(inequality_to_json(system.h, ineq));
    return Json{{"q", system.h.q()},
                {"n", system.h.cols()},
                {"H", matrix_to_json(system.h)},
                {"nontrivial", system.nontrivial_count()},
                {"inequalities", arr}};
}

inline std::string cone_to_text(const ConeSystem& system) {
    std::ostringstream out;
    for (const ConeInequality& ineq : system.inequalities)
        out << inequality_text(system.h, ineq) << "\n";
    return out.str();
}

// ----------------------------------------------------------------- reports

inline Json report_to_json(const TheoremReport& report) {
    bool necessity = report.theorem.find("necessity") != std::string::npos;
    Json doc{{"theorem", report.theorem}, {"H", matrix_to_json(report.h)}};
    doc[necessity ? "M_max" : "entry_bound"] = report.parameter;
    doc["checked"] = report.checked;
    doc[necessity ? "evaluations" : "realized"] = report.secondary;
    doc["violations"] = report.violations;
    doc["seed"] = report.seed;
    return doc;
}

inline Json report_to_json(const LemmaReport& report) {
    Json checks = Json::array();
    for (const LemmaCheck& c : report.checks)
        checks.push_back(Json{{"name", c.name}, {"checked", c.checked}, {"failures", c.failures}});
    return Json{{"seed", report.seed},
                {"entry_bound", report.entry_bound},
                {"checked", report.total_checked()},
                {"passed", report.passed()},
                {"checks", checks}};
}

// --------------------------------------------------------------------- DOT

/// Variable copies as labeled circles, check copies as squares; edge
/// annotations carry the base matrix coefficient.
inline std::string to_dot(const CoverLabeling& labeling) {
    const CoverGraph& cover = labeling.cover();
    const FieldMatrix& h = cover.base().parity_matrix();
    int m = cover.degree();
    std::ostringstream out;
    out << "graph cover {\n";
    for (int i = 0; i < h.cols(); ++i)
        for (int mu = 0; mu < m; ++mu)
            out << "  u_" << i + 1 << "_" << mu + 1 << " [shape=circle, label=\"u[" << i + 1
                << "," << mu + 1 << "]=" << int(labeling.label(i, mu)) << "\"];\n";
    for (int j = 0; j < h.rows(); ++j)
        for (int nu = 0; nu < m; ++nu)
            out << "  v_" << j + 1 << "_" << nu + 1 << " [shape=box, label=\"v[" << j + 1 << ","
                << nu + 1 << "]\"];\n";
    for (const CoverEdge& e : cover.edges())
        out << "  u_" << e.var + 1 << "_" << e.var_copy + 1 << " -- v_" << e.check + 1 << "_"
            << e.check_copy + 1 << " [label=\"" << int(e.label) << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace conelift
