#include <cstdio>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <conelift/fixtures.hpp>
#include <conelift/io.hpp>

using namespace conelift;

namespace {

Json reparse(const Json& doc) { return parse_json_text(doc.dump()); }

}  // namespace

TEST_CASE("parity-check matrices round-trip through JSON") {
    const FieldMatrix& h = fixtures::paper_4_2();
    Json doc = matrix_to_json(h);

    CHECK(doc["q"] == 3);
    CHECK(doc["rows"] == 2);
    CHECK(doc["cols"] == 4);
    CHECK(doc["entries"] == Json::parse("[[1,2,2,1],[2,0,1,2]]"));
    CHECK(matrix_from_json(reparse(doc)) == h);

    FieldMatrix hb = FieldMatrix::from_rows(2, {{1, 1, 1, 0}, {0, 1, 1, 1}});
    CHECK(matrix_from_json(reparse(matrix_to_json(hb))) == hb);
}

TEST_CASE("matrix parsing rejects malformed documents") {
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1,2]]")), InputError);  // not an object
    CHECK_THROWS_AS(matrix_from_json(Json::parse("{\"q\": 3}")), InputError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("{\"entries\": [[1]]}")), InputError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("{\"q\": \"3\", \"entries\": [[1]]}")), InputError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("{\"q\": 3, \"entries\": []}")), InputError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("{\"q\": 3, \"entries\": [1, 2]}")), InputError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("{\"q\": 3, \"entries\": [[1, 0.5]]}")), InputError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("{\"q\": 3, \"entries\": [[1, 2]], \"rows\": 2}")), InputError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("{\"q\": 3, \"entries\": [[1, 2]], \"cols\": 3}")), InputError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("{\"q\": 3, \"entries\": [[1, 2]], \"rows\": \"2\"}")), InputError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("{\"q\": 3, \"entries\": [[1, 5]]}")), InputError);  // entry >= q
    CHECK_THROWS_AS(matrix_from_json(Json::parse("{\"q\": 4, \"entries\": [[1, 2]]}")), InputError);  // q not 2 or 3
}

TEST_CASE("count matrices accept three input shapes") {
    SECTION("a full object with q") {
        RationalPoint p = pseudomatrix_from_json(Json::parse("{\"q\": 3, \"entries\": [[2,2,2,2],[2,2,0,0]]}"));
        CHECK(p.q == 3);
        CHECK(to_pseudomatrix(p) == fixtures::paper_f());
    }

    SECTION("a bare array of rows infers q") {
        RationalPoint p = pseudomatrix_from_json(Json::parse("[[2,2,2,2],[2,2,0,0]]"));
        CHECK(p.q == 3);
        CHECK(to_pseudomatrix(p) == fixtures::paper_f());
    }

    SECTION("a flat array is one binary row") {
        RationalPoint p = pseudomatrix_from_json(Json::parse("[2, 1, 1, 0]"));
        CHECK(p.q == 2);
        CHECK(p.entries.rows() == 1);
        CHECK(p.entries(0, 0) == Rational(2));
    }

    SECTION("fraction strings parse exactly") {
        RationalPoint p = pseudomatrix_from_json(Json::parse("[[\"1/2\", \"2/4\", 1, 0]]"));
        CHECK(p.entries(0, 0) == Rational(1, 2));
        CHECK(p.entries(0, 1) == Rational(1, 2));
        CHECK(p.entries(0, 2) == Rational(1));
    }
}

TEST_CASE("count matrix parsing rejects malformed documents") {
    CHECK_THROWS_AS(pseudomatrix_from_json(Json::parse("{\"q\": 3}")), InputError);
    CHECK_THROWS_AS(pseudomatrix_from_json(Json::parse("[[0.5, 1]]")), InputError);  // floats
    CHECK_THROWS_AS(pseudomatrix_from_json(Json::parse("[[1, 2], [1]]")), InputError);  // ragged
    CHECK_THROWS_AS(pseudomatrix_from_json(Json::parse("[[1, 2], 3]")), InputError);  // mixed nesting
    CHECK_THROWS_AS(pseudomatrix_from_json(Json::parse("[]")), InputError);
    CHECK_THROWS_AS(pseudomatrix_from_json(Json::parse("[[]]")), InputError);
    CHECK_THROWS_AS(pseudomatrix_from_json(Json::parse("[[true]]")), InputError);
    CHECK_THROWS_AS(pseudomatrix_from_json(Json::parse("[[\"1/0\"]]")), InputError);  // zero denominator
    CHECK_THROWS_AS(pseudomatrix_from_json(Json::parse("{\"q\": 2, \"entries\": [[1],[1]]}")), InputError);
    CHECK_THROWS_AS(pseudomatrix_from_json(Json::parse("[[1],[1],[1]]")), InputError);  // would need q = 4
}

TEST_CASE("integer conversion guards fractional and negative entries") {
    RationalPoint frac = pseudomatrix_from_json(Json::parse("[[\"1/2\", 0, 0]]"));
    try {
        to_pseudomatrix(frac);
        FAIL("expected a domain error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("1/2") != std::string::npos);
    }

    RationalPoint neg = pseudomatrix_from_json(Json::parse("[[\"-1\", 0, 0]]"));
    CHECK_THROWS_AS(to_pseudomatrix(neg), DomainError);

    Json doc = pseudomatrix_to_json(fixtures::paper_f());
    CHECK(doc["q"] == 3);
    CHECK(to_pseudomatrix(pseudomatrix_from_json(reparse(doc))) == fixtures::paper_f());
}

TEST_CASE("labeled covers round-trip through JSON") {
    CoverLabeling original = fixtures::paper_cover_16();
    Json doc = cover_to_json(original);

    CHECK(doc["M"] == 4);
    CHECK(doc["perms"].size() == 7);  // one entry per nonzero base cell
    CHECK(doc["perms"]["1,1"] == Json::parse("[3,4,1,2]"));
    CHECK(doc["perms"]["1,2"] == Json::parse("[1,2,3,4]"));

    LabeledCover lc = cover_from_json(reparse(doc));
    CHECK(!cover_violation(lc.cover).has_value());
    CHECK(verify_pseudocodeword(lc.labeling));
    CHECK(pseudocodeword_matrix(lc.labeling) == fixtures::paper_f());
    CHECK(lifted_parity_matrix(lc.cover) == fixtures::paper_htilde());
    CHECK(lc.labeling.labels() == original.labels());
}

TEST_CASE("a cover file without labels reads as the zero labeling") {
    Json doc = cover_to_json(fixtures::paper_cover_16());
    doc.erase("labels");
    LabeledCover lc = cover_from_json(reparse(doc));
    CHECK(!cover_violation(lc.cover).has_value());
    CHECK(pseudocodeword_matrix(lc.labeling).is_zero());
}

TEST_CASE("non-bijective assignments parse and fail structural validation") {
    Json doc = cover_to_json(fixtures::paper_cover_16());
    doc["perms"]["1,1"] = Json::parse("[3,3,1,2]");  // copy 3 used twice, 4 never
    LabeledCover lc = cover_from_json(reparse(doc));
    CHECK(cover_violation(lc.cover).has_value());
    CHECK(!is_valid_cover(lc.cover));
}

TEST_CASE("cover parsing rejects malformed documents") {
    Json good = cover_to_json(fixtures::paper_cover_16());

    auto mutate = [&](auto&& f) {
        Json doc = good;
        f(doc);
        return doc;
    };

    CHECK_THROWS_AS(cover_from_json(Json::parse("[]")), InputError);
    CHECK_THROWS_AS(cover_from_json(mutate([](Json& d) { d.erase("M"); })), InputError);
    CHECK_THROWS_AS(cover_from_json(mutate([](Json& d) { d.erase("base"); })), InputError);
    CHECK_THROWS_AS(cover_from_json(mutate([](Json& d) { d.erase("perms"); })), InputError);
    CHECK_THROWS_AS(cover_from_json(mutate([](Json& d) { d["M"] = 0; })), InputError);
    CHECK_THROWS_AS(cover_from_json(mutate([](Json& d) { d["M"] = "4"; })), InputError);
    CHECK_THROWS_AS(cover_from_json(mutate([](Json& d) { d["perms"] = Json::array(); })), InputError);

    // edge keys
    CHECK_THROWS_AS(cover_from_json(mutate([](Json& d) { d["perms"]["nonsense"] = Json::parse("[1,2,3,4]"); })),
                    InputError);
    CHECK_THROWS_AS(cover_from_json(mutate([](Json& d) { d["perms"]["3,1"] = Json::parse("[1,2,3,4]"); })),
                    InputError);  // row outside the base matrix
    CHECK_THROWS_AS(cover_from_json(mutate([](Json& d) { d["perms"]["2,2"] = Json::parse("[1,2,3,4]"); })),
                    InputError);  // base entry is zero

    // copy images
    CHECK_THROWS_AS(cover_from_json(mutate([](Json& d) { d["perms"]["1,1"] = Json::parse("[1,2,3]"); })),
                    InputError);
    CHECK_THROWS_AS(cover_from_json(mutate([](Json& d) { d["perms"]["1,1"] = Json::parse("[0,2,3,4]"); })),
                    InputError);
    CHECK_THROWS_AS(cover_from_json(mutate([](Json& d) { d["perms"]["1,1"] = Json::parse("[5,2,3,4]"); })),
                    InputError);
    CHECK_THROWS_AS(cover_from_json(mutate([](Json& d) { d["perms"]["1,1"] = Json::parse("[1.5,2,3,4]"); })),
                    InputError);

    // labels
    CHECK_THROWS_AS(cover_from_json(mutate([](Json& d) { d["labels"] = Json::parse("[[1,1,2,2]]"); })),
                    InputError);
    CHECK_THROWS_AS(cover_from_json(mutate([](Json& d) { d["labels"][0] = Json::parse("[1,1]"); })),
                    InputError);
    CHECK_THROWS_AS(cover_from_json(mutate([](Json& d) { d["labels"][0][0] = 3; })), InputError);
    CHECK_THROWS_AS(cover_from_json(mutate([](Json& d) { d["labels"][0][0] = -1; })), InputError);
}

TEST_CASE("lift results serialize with their reduction trace") {
    LiftOptions opt;
    opt.preferred_pairs = {{2, 0}, {2, 0}, {0, 3}, {0, 3}};
    LiftResult r = lift_single_row(fixtures::paper_hs(), fixtures::paper_fhat(), opt);
    Json doc = lift_result_to_json(r);

    CHECK(doc["M"] == 10);
    REQUIRE(doc.contains("trace"));
    REQUIRE(doc["trace"].size() == 7);

    const Json& first = doc["trace"][0];
    CHECK(first["kind"] == "stage2-pair");
    CHECK(first["row"] == 1);
    CHECK(first["coords"] == Json::parse("[3,1]"));
    CHECK(first["copies"] == Json::parse("[2,4]"));
    CHECK(first["check_copies"] == Json::parse("[1]"));
    CHECK(first["symbol"] == 0);
    CHECK(first["f_after"] == Json::parse("[[2,2,1,0],[1,2,0,2]]"));
    CHECK(first["critical"]["coordinates"] == Json::parse("[[1,1],[1,2]]"));
    CHECK(first["critical"]["pairs_type_one"] == Json::parse("[[1,3]]"));
    CHECK(first["critical"]["pairs_type_two"] == Json::parse("[[1,4]]"));

    CHECK(doc["trace"][4]["kind"] == "stage4-fill");
    CHECK(doc["trace"][4]["coords"] == Json::parse("[1]"));

    // The cover part reloads into the same labeling.
    LabeledCover lc = cover_from_json(reparse(doc));
    CHECK(verify_pseudocodeword(lc.labeling));
    CHECK(pseudocodeword_matrix(lc.labeling) == fixtures::paper_fhat());
}

TEST_CASE("cone systems serialize to JSON and line-per-inequality text") {
    ConeSystem sys = enumerate_cone(fixtures::paper_4_2());
    Json doc = cone_to_json(sys);

    CHECK(doc["q"] == 3);
    CHECK(doc["n"] == 4);
    CHECK(doc["nontrivial"] == 32);
    REQUIRE(doc["inequalities"].size() == 40);
    for (const Json& ineq : doc["inequalities"]) {
        CHECK(ineq.contains("kind"));
        CHECK(ineq.contains("indices"));
        CHECK(ineq.contains("coefficients"));
        CHECK(ineq.contains("text"));
        CHECK(ineq.contains("row"));
    }

    std::string text = cone_to_text(sys);
    size_t lines = 0;
    for (char ch : text)
        if (ch == '\n') ++lines;
    CHECK(lines == 40);

    std::string binary_text = cone_to_text(enumerate_cone(FieldMatrix::from_rows(2, {{1, 1, 1}})));
    CHECK(binary_text.find("f_1 <= (f_2 + f_3)") != std::string::npos);
    CHECK(binary_text.find("f_1 >= 0") != std::string::npos);
}

TEST_CASE("theorem and lemma reports serialize their outcomes") {
    TheoremReport nec = check_necessity(fixtures::paper_4_2(), 1);
    Json nec_doc = report_to_json(nec);
    CHECK(nec_doc["theorem"] == "3-necessity");
    CHECK(nec_doc["M_max"] == 1);
    CHECK(nec_doc["checked"] == 9);
    CHECK(nec_doc.contains("evaluations"));
    CHECK(nec_doc["violations"] == Json::array());

    TheoremReport suf = check_sufficiency(fixtures::paper_hs(), 1);
    Json suf_doc = report_to_json(suf);
    CHECK(suf_doc["theorem"] == "3-sufficiency");
    CHECK(suf_doc["entry_bound"] == 1);
    CHECK(suf_doc["checked"] == 256);
    CHECK(suf_doc.contains("realized"));

    LemmaReport lem = check_lemma_battery({FieldMatrix::from_rows(2, {{1, 1, 1}})}, {}, 1);
    Json lem_doc = report_to_json(lem);
    CHECK(lem_doc["passed"] == true);
    CHECK(lem_doc["entry_bound"] == 1);
    REQUIRE(lem_doc["checks"].size() == 6);
    CHECK(lem_doc["checks"][0]["name"] == "cone-row-intersection");
    CHECK(lem_doc["checks"][5]["name"] == "binary-theorem");
}

TEST_CASE("DOT output names copies, shapes, and edge coefficients") {
    std::string dot = to_dot(fixtures::paper_cover_16());
    CHECK(dot.find("graph cover {") == 0);
    CHECK(dot.find("u_1_1 [shape=circle, label=\"u[1,1]=1\"]") != std::string::npos);
    CHECK(dot.find("v_1_1 [shape=box, label=\"v[1,1]\"]") != std::string::npos);
    CHECK(dot.find("u_1_1 -- v_1_3 [label=\"1\"]") != std::string::npos);  // sigma maps copy 1 to 3
    CHECK(dot.find("u_2_1 -- v_1_1 [label=\"2\"]") != std::string::npos);  // identity edge, coefficient 2
    CHECK(dot.rfind("}\n") == dot.size() - 2);
}

TEST_CASE("JSON text and file helpers report their failures") {
    try {
        parse_json_text("{\"a\": ");
        FAIL("expected an input error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("malformed JSON") != std::string::npos);
    }

    CHECK_THROWS_AS(read_json_file("/nonexistent/path/x.json"), InputError);
    CHECK_THROWS_AS(write_text_file("/nonexistent/dir/x.json", "{}"), InputError);

    std::string path = "io_roundtrip_tmp.json";
    write_text_file(path, matrix_to_json(fixtures::paper_4_2()).dump());
    CHECK(matrix_from_json(read_json_file(path)) == fixtures::paper_4_2());
    std::remove(path.c_str());
}

TEST_CASE("shipped fixture files match the embedded fixtures") {
    const std::string dir = std::string(CONELIFT_FIXTURE_DIR) + "/";

    CHECK(matrix_from_json(read_json_file(dir + "paper-4-2.json")) == fixtures::paper_4_2());
    CHECK(matrix_from_json(read_json_file(dir + "paper-hs.json")) == fixtures::paper_hs());
    CHECK(to_pseudomatrix(pseudomatrix_from_json(read_json_file(dir + "paper-f.json"))) ==
          fixtures::paper_f());
    CHECK(to_pseudomatrix(pseudomatrix_from_json(read_json_file(dir + "paper-fhat.json"))) ==
          fixtures::paper_fhat());

    LabeledCover shipped = cover_from_json(read_json_file(dir + "paper-cover-16.json"));
    CoverLabeling embedded = fixtures::paper_cover_16();
    CHECK(shipped.cover.degree() == embedded.cover().degree());
    CHECK(lifted_parity_matrix(shipped.cover) == lifted_parity_matrix(embedded.cover()));
    CHECK(shipped.labeling.labels() == embedded.labels());

    FieldMatrix binary = matrix_from_json(read_json_file(dir + "binary-2x4.json"));
    CHECK(binary.q() == 2);
    CHECK(binary == FieldMatrix::from_rows(2, {{1, 1, 1, 0}, {0, 1, 1, 1}}));
}
