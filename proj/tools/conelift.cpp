// Command-line front end: cone listings, pseudocodeword verdicts, cover
// construction and verification, brute-force enumeration, and the
// characterization-theorem oracles.
//
// Exit codes: 0 success, 1 domain failure (verdict no, theorem violation,
// invalid cover), 2 input error, 3 budget exceeded.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <conelift/conelift.hpp>

namespace {

using namespace conelift;

FieldMatrix load_matrix(const std::string& arg) {
    if (std::optional<FieldMatrix> m = fixtures::find_matrix(arg)) return *m;
    return matrix_from_json(read_json_file(arg));
}

RationalPoint load_point(const std::string& arg) {
    if (std::optional<PseudoMatrix> f = fixtures::find_pseudomatrix(arg))
        return RationalPoint{f->q(), f->to_rational()};
    return pseudomatrix_from_json(read_json_file(arg));
}

CoverLabeling load_cover(const std::string& arg) {
    if (std::optional<CoverLabeling> c = fixtures::find_cover(arg)) return *c;
    return cover_from_json(read_json_file(arg)).labeling;
}

std::string rational_matrix_text(const RationalMatrix& z) {
    std::string out = "[";
    for (int r = 0; r < z.rows(); ++r) {
        out += r ? ",[" : "[";
        for (int i = 0; i < z.cols(); ++i) {
            if (i) out += ",";
            out += z(r, i).str();
        }
        out += "]";
    }
    return out + "]";
}

int run_gen_cone(const std::string& matrix_arg, const std::string& format) {
    ConeSystem sys = enumerate_cone(load_matrix(matrix_arg));
    if (format == "json")
        std::cout << cone_to_json(sys).dump(2) << "\n";
    else
        std::cout << cone_to_text(sys);
    return 0;
}

int run_check(const std::string& matrix_arg, const std::string& point_arg,
              const std::string& format) {
    FieldMatrix h = load_matrix(matrix_arg);
    RationalPoint point = load_point(point_arg);
    if (point.q != h.q()) throw InputError("check: field sizes of the two inputs differ");
    MembershipResult membership = cone_membership(h, point.entries);

    bool integral = point.entries.is_integral();
    std::optional<PseudoMatrix> f;
    std::vector<long long> residues;
    bool verdict = false;
    if (integral) {
        f = to_pseudomatrix(point);
        residues = modular_syndrome(h, *f);
        bool zero = true;
        for (long long r : residues) zero = zero && r == 0;
        verdict = membership.member && zero;
    }

    if (format == "json") {
        Json doc{{"cone_membership", membership.member}};
        if (!membership.member) doc["cone_violation"] = inequality_text(h, membership.violated.front());
        if (integral) {
            doc["modular_syndrome"] = residues;
            doc["pseudocodeword"] = verdict;
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "cone membership: " << (membership.member ? "yes" : "no") << "\n";
        if (!membership.member)
            std::cout << "cone violation: " << inequality_text(h, membership.violated.front()) << "\n";
        if (integral) {
            std::cout << "modular syndrome: (";
            for (size_t j = 0; j < residues.size(); ++j)
                std::cout << (j ? ", " : "") << residues[j];
            std::cout << ")\n";
            std::cout << "pseudocodeword: " << (verdict ? "yes" : "no") << "\n";
        }
    }
    return (integral ? verdict : membership.member) ? 0 : 1;
}

int run_lift(const std::string& matrix_arg, const std::string& point_arg, bool trace,
             const std::string& out_path, const std::string& format) {
    FieldMatrix h = load_matrix(matrix_arg);
    PseudoMatrix f = to_pseudomatrix(load_point(point_arg));
    LiftResult result = lift_full(h, f);

    if (trace) {
        std::cout << "max column sum " << result.max_column_sum << ", cover degree "
                  << result.degree << "\n";
        for (size_t t = 0; t < result.trace.size(); ++t) {
            const LiftStepRecord& step = result.trace[t];
            std::cout << "step " << t + 1 << " (row " << step.base_row + 1 << "): "
                      << step_kind_name(step.kind);
            if (step.kind == LiftStepRecord::Kind::Stage3Triple)
                std::cout << " symbol " << step.symbol;
            std::cout << " coords (";
            for (size_t k = 0; k < step.coords.size(); ++k)
                std::cout << (k ? "," : "") << step.coords[k] + 1;
            std::cout << ")\n  F = " << matrix_text(step.f_after) << "\n";
        }
    }
    Json doc = lift_result_to_json(result);
    std::string text = format == "json" ? doc.dump(2) : doc.dump();
    if (!out_path.empty()) {
        write_text_file(out_path, text + "\n");
        std::cout << "cover written to " << out_path << "\n";
    } else if (!trace) {
        std::cout << text << "\n";
    }
    return 0;
}

int run_verify(const std::string& cover_arg, const std::string& dot_path,
               const std::string& format) {
    CoverLabeling labeling = load_cover(cover_arg);
    if (!dot_path.empty()) write_text_file(dot_path, to_dot(labeling));

    std::optional<std::string> structural = cover_violation(labeling.cover());
    std::optional<std::string> parity =
        structural ? std::nullopt : parity_violation(labeling);
    bool valid = !structural && !parity;
    PseudoMatrix f = pseudocodeword_matrix(labeling);

    if (format == "json") {
        Json doc{{"valid", valid},
                 {"structural_violation", structural ? Json(*structural) : Json(nullptr)},
                 {"parity_violation", parity ? Json(*parity) : Json(nullptr)},
                 {"F", pseudomatrix_to_json(f)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        if (structural) std::cout << "invalid cover: " << *structural << "\n";
        if (parity) std::cout << "parity failure: " << *parity << "\n";
        if (valid) std::cout << "cover: valid\n";
        std::cout << "pseudocodeword matrix: " << matrix_text(f) << "\n";
    }
    return valid ? 0 : 1;
}

int run_enumerate(const std::string& matrix_arg, int degree, bool no_canonical,
                  const OracleOptions& base_opt, const std::string& format) {
    FieldMatrix h = load_matrix(matrix_arg);
    OracleOptions opt = base_opt;
    opt.canonicalize = !no_canonical;
    long long evaluations = 0;
    std::set<PseudoMatrix> found = enumerate_pseudocodeword_matrices(h, degree, opt, &evaluations);
    if (format == "json") {
        Json matrices = Json::array();
        for (const PseudoMatrix& f : found) matrices.push_back(pseudomatrix_to_json(f)["entries"]);
        Json doc{{"degree", degree},
                 {"count", found.size()},
                 {"evaluations", evaluations},
                 {"matrices", matrices}};
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const PseudoMatrix& f : found) std::cout << matrix_text(f) << "\n";
        std::cout << found.size() << " matrices at degree " << degree << "\n";
    }
    return 0;
}

int run_theorems(const std::string& matrix_arg, std::optional<int> necessity,
                 std::optional<int> sufficiency, const OracleOptions& opt,
                 const std::string& format) {
    FieldMatrix h = load_matrix(matrix_arg);
    if (necessity.has_value() == sufficiency.has_value())
        throw InputError("theorems: pass exactly one of --necessity M or --sufficiency B");
    TheoremReport report = necessity ? check_necessity(h, *necessity, opt)
                                     : check_sufficiency(h, *sufficiency, opt);
    if (format == "json") {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << "theorem: " << report.theorem << "\n"
                  << "checked: " << report.checked << "\n"
                  << "violations: " << report.violations.size() << "\n";
        for (const std::string& v : report.violations) std::cout << "  " << v << "\n";
        std::cout << (report.passed() ? "PASS" : "FAIL") << "\n";
    }
    return report.passed() ? 0 : 1;
}

int run_approx(const std::string& matrix_arg, const std::string& point_arg,
               const std::string& epsilon, const std::string& format) {
    FieldMatrix h = load_matrix(matrix_arg);
    RationalPoint point = load_point(point_arg);
    if (point.q != h.q()) throw InputError("approx: field sizes of the two inputs differ");
    ConePointScaling scaling = approximate_cone_point(h, point.entries, Rational::parse(epsilon));
    if (format == "json") {
        Json doc{{"c", scaling.c.str()},
                 {"F", pseudomatrix_to_json(scaling.f)},
                 {"exact", true}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "c = " << scaling.c.str() << "\n"
                  << "F = " << matrix_text(scaling.f) << "\n"
                  << "c * F = " << rational_matrix_text(scaling.f.to_rational().scaled(scaling.c))
                  << " (exact)\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-cover pseudocodeword toolkit for ternary and binary linear codes"};
    app.require_subcommand(1);

    uint64_t seed = 0;
    double budget = 1e8;
    std::string format = "text";
    app.add_option("--seed", seed, "seed for randomized oracle pools");
    app.add_option("--budget", budget, "enumeration budget (state count)");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string gen_matrix;
    CLI::App* gen = app.add_subcommand("gen-cone", "print the fundamental-cone inequalities");
    gen->add_option("matrix", gen_matrix, "matrix file or fixture name")->required();

    std::string check_matrix, check_point;
    CLI::App* check = app.add_subcommand("check", "cone membership and pseudocodeword verdict");
    check->add_option("matrix", check_matrix, "matrix file or fixture name")->required();
    check->add_option("counts", check_point, "count matrix file or fixture name")->required();

    std::string lift_matrix, lift_point, lift_out;
    bool lift_trace = false;
    CLI::App* lift = app.add_subcommand("lift", "construct a cover realizing a count matrix");
    lift->add_option("matrix", lift_matrix, "matrix file or fixture name")->required();
    lift->add_option("counts", lift_point, "count matrix file or fixture name")->required();
    lift->add_flag("--trace", lift_trace, "print the count matrix after every reduction step");
    lift->add_option("--out", lift_out, "write the cover JSON to this file");

    std::string verify_cover, verify_dot;
    CLI::App* verify = app.add_subcommand("verify", "validate a cover file and extract its count matrix");
    verify->add_option("cover", verify_cover, "cover file or fixture name")->required();
    verify->add_option("--dot", verify_dot, "write a DOT rendering to this file");

    std::string enum_matrix;
    int enum_degree = 1;
    bool enum_no_canonical = false;
    CLI::App* enumerate = app.add_subcommand("enumerate", "all count matrices of covers of one degree");
    enumerate->add_option("matrix", enum_matrix, "matrix file or fixture name")->required();
    enumerate->add_option("--degree", enum_degree, "cover degree M")->required();
    enumerate->add_flag("--no-canonical", enum_no_canonical,
                        "enumerate every assignment instead of one per equivalence class");

    std::string thm_matrix;
    std::optional<int> thm_necessity, thm_sufficiency;
    CLI::App* theorems = app.add_subcommand("theorems", "brute-force characterization checks");
    theorems->add_option("matrix", thm_matrix, "matrix file or fixture name")->required();
    theorems->add_option("--necessity", thm_necessity,
                         "check count matrices of all covers of degree <= M");
    theorems->add_option("--sufficiency", thm_sufficiency,
                         "realize every qualifying matrix with entries <= B");

    std::string approx_matrix, approx_point, approx_eps = "1";
    CLI::App* approx = app.add_subcommand("approx", "scaled integer witness for a rational cone point");
    approx->add_option("matrix", approx_matrix, "matrix file or fixture name")->required();
    approx->add_option("point", approx_point, "rational count matrix file")->required();
    approx->add_option("--epsilon", approx_eps, "approximation tolerance (rational)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    OracleOptions opt;
    opt.seed = seed;
    opt.budget = budget;

    try {
        if (gen->parsed()) return run_gen_cone(gen_matrix, format);
        if (check->parsed()) return run_check(check_matrix, check_point, format);
        if (lift->parsed()) return run_lift(lift_matrix, lift_point, lift_trace, lift_out, format);
        if (verify->parsed()) return run_verify(verify_cover, verify_dot, format);
        if (enumerate->parsed())
            return run_enumerate(enum_matrix, enum_degree, enum_no_canonical, opt, format);
        if (theorems->parsed())
            return run_theorems(thm_matrix, thm_necessity, thm_sufficiency, opt, format);
        if (approx->parsed()) return run_approx(approx_matrix, approx_point, approx_eps, format);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
