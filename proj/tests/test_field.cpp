#include <algorithm>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include <conelift/field.hpp>
#include <conelift/fixtures.hpp>

using namespace conelift;

TEST_CASE("field element arithmetic in F3") {
    FieldElement a(2, 3), b(2, 3), c(1, 3);
    CHECK((a + b).value() == 1);
    CHECK((a * b).value() == 1);
    CHECK((-c).value() == 2);
    CHECK((c - a).value() == 2);
    CHECK(a == b);
    CHECK(a != c);
    CHECK_THROWS_AS(FieldElement(3, 3), InputError);
    CHECK_THROWS_AS(FieldElement(-1, 2), InputError);
    CHECK_THROWS_AS(FieldElement(1, 5), InputError);
    CHECK_THROWS_AS(FieldElement(1, 2) + FieldElement(1, 3), InputError);
}

TEST_CASE("field matrix shape and access") {
    FieldMatrix h = fixtures::paper_4_2();
    CHECK(h.q() == 3);
    CHECK(h.rows() == 2);
    CHECK(h.cols() == 4);
    CHECK(h(0, 1) == 2);
    CHECK(h(1, 1) == 0);
    CHECK(h.at(1, 0) == FieldElement(2, 3));
    CHECK(h.row_support(0) == std::vector<int>{0, 1, 2, 3});
    CHECK(h.row_support(1) == std::vector<int>{0, 2, 3});

    FieldMatrix r = h.row(1);
    CHECK(r.rows() == 1);
    CHECK(r(0, 0) == 2);
    CHECK(r(0, 3) == 2);

    CHECK_THROWS_AS(FieldMatrix::from_rows(3, {{1, 3}}), InputError);
    CHECK_THROWS_AS(FieldMatrix::from_rows(2, {{1, 2}}), InputError);
    CHECK_THROWS_AS(FieldMatrix::from_rows(3, {{1, 2}, {1}}), InputError);
    CHECK_NOTHROW(FieldMatrix(3, 0, 4));
    CHECK_THROWS_AS(FieldMatrix(3, 1, 0), InputError);
}

TEST_CASE("syndrome of the worked ternary code") {
    FieldMatrix h = fixtures::paper_4_2();
    FieldVector c(3, {1, 0, 2, 1});
    CHECK(syndrome(h, c) == FieldVector::zero(3, 2));
    CHECK(is_codeword(h, c));

    FieldVector d(3, {1, 0, 2, 2});
    CHECK(syndrome(h, d) == FieldVector(3, {1, 2}));
    CHECK(!is_codeword(h, d));

    CHECK_THROWS_AS(syndrome(h, FieldVector(3, {1, 0, 2})), InputError);
    CHECK_THROWS_AS(syndrome(h, FieldVector(2, {1, 0, 1, 1})), InputError);
}

TEST_CASE("codeword enumeration of the worked ternary code") {
    std::vector<FieldVector> words = enumerate_codewords(fixtures::paper_4_2());
    std::sort(words.begin(), words.end());
    std::vector<FieldVector> expected{
        FieldVector(3, {0, 0, 0, 0}), FieldVector(3, {0, 0, 1, 1}), FieldVector(3, {0, 0, 2, 2}),
        FieldVector(3, {1, 0, 0, 2}), FieldVector(3, {1, 0, 1, 0}), FieldVector(3, {1, 0, 2, 1}),
        FieldVector(3, {2, 0, 0, 1}), FieldVector(3, {2, 0, 1, 2}), FieldVector(3, {2, 0, 2, 0})};
    REQUIRE(words.size() == 9);
    CHECK(words == expected);
}

TEST_CASE("codeword enumeration of a small binary code") {
    FieldMatrix h = FieldMatrix::from_rows(2, {{1, 1, 1, 0}, {0, 1, 1, 1}});
    std::vector<FieldVector> words = enumerate_codewords(h);
    std::sort(words.begin(), words.end());
    std::vector<FieldVector> expected{FieldVector(2, {0, 0, 0, 0}), FieldVector(2, {0, 1, 1, 0}),
                                      FieldVector(2, {1, 0, 1, 1}), FieldVector(2, {1, 1, 0, 1})};
    CHECK(words == expected);
}

TEST_CASE("codeword enumeration respects its bound") {
    FieldMatrix wide(3, 1, 13);
    CHECK_THROWS_AS(enumerate_codewords(wide), BudgetError);
    // A checkless code: every vector qualifies.
    CHECK(enumerate_codewords(FieldMatrix(3, 0, 2)).size() == 9);
    CHECK_THROWS_AS(enumerate_codewords(FieldMatrix(3, 0, 2), 8), BudgetError);
}

TEST_CASE("rank of the worked matrices") {
    CHECK(gf_rank(fixtures::paper_4_2()) == 2);
    CHECK(gf_rank(fixtures::paper_hs()) == 1);
    CHECK(gf_rank(FieldMatrix(3, 2, 4)) == 0);
    CHECK(gf_rank(FieldMatrix::from_rows(3, {{1, 2}, {2, 1}})) == 1);
    CHECK(gf_rank(FieldMatrix::from_rows(2, {{1, 1, 1, 0}, {0, 1, 1, 1}})) == 2);
}

TEST_CASE("nullspace basis spans exactly the code") {
    FieldMatrix h = fixtures::paper_4_2();
    std::vector<FieldVector> basis = gf_nullspace(h);
    REQUIRE(basis.size() == 2);
    for (const FieldVector& b : basis) CHECK(is_codeword(h, b));

    // Walk the whole span and compare against the scan-based enumeration.
    std::set<FieldVector> span;
    for (int s = 0; s < 9; ++s) {
        FieldVector w = FieldVector::zero(3, 4);
        int c0 = s % 3, c1 = s / 3;
        for (int i = 0; i < 4; ++i)
            w.v[size_t(i)] = uint8_t((c0 * basis[0].v[size_t(i)] + c1 * basis[1].v[size_t(i)]) % 3);
        span.insert(w);
    }
    CHECK(span.size() == 9);
    std::vector<FieldVector> words = enumerate_codewords(h);
    CHECK(span == std::set<FieldVector>(words.begin(), words.end()));
}

TEST_CASE("nullspace of a full-rank square matrix is trivial") {
    FieldMatrix h = FieldMatrix::from_rows(3, {{1, 1}, {1, 2}});
    CHECK(gf_rank(h) == 2);
    CHECK(gf_nullspace(h).empty());
}

TEST_CASE("integer syndrome with residues reduced into range") {
    FieldMatrix h = fixtures::paper_4_2();
    std::vector<long long> w{6, 6, 2, 2};
    CHECK(integer_syndrome_mod(h, w, 3) == std::vector<long long>{0, 0});

    std::vector<long long> v{1, 0, 0, 0};
    CHECK(integer_syndrome_mod(h, v, 3) == std::vector<long long>{1, 2});

    std::vector<long long> neg{-1, 0, 0, 0};
    CHECK(integer_syndrome_mod(h, neg, 3) == std::vector<long long>{2, 1});
}
