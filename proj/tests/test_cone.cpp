#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <conelift/cone.hpp>
#include <conelift/fixtures.hpp>

using namespace conelift;

namespace {

std::set<std::string> texts(const ConeSystem& sys, int row, IneqKind a, IneqKind b) {
    std::set<std::string> out;
    for (const ConeInequality& iq : sys.inequalities)
        if (iq.row == row && (iq.kind == a || iq.kind == b))
            out.insert(inequality_text(sys.h, iq));
    return out;
}

}  // namespace

TEST_CASE("ternary cone of the worked code has 32 nontrivial inequalities") {
    ConeSystem sys = enumerate_cone(fixtures::paper_4_2());
    CHECK(sys.nontrivial_count() == 32);
    CHECK(sys.inequalities.size() == 40);  // plus 2n nonnegativity rows

    // Per row: 2|I_j| single + 2 C(|I_j|, 2) pair inequalities.
    size_t row1 = 0, row2 = 0;
    for (const ConeInequality& iq : sys.inequalities) {
        if (iq.row == 0) ++row1;
        if (iq.row == 1) ++row2;
    }
    CHECK(row1 == 2 * 4 + 2 * 6);
    CHECK(row2 == 2 * 3 + 2 * 3);
}

TEST_CASE("row-2 single inequalities match the worked listing") {
    ConeSystem sys = enumerate_cone(fixtures::paper_4_2());
    std::set<std::string> expected{
        "2 f_1^(2) + f_1^(1) <= 2 (f_3^(2) + f_4^(1)) + (f_3^(1) + f_4^(2))",
        "2 f_1^(1) + f_1^(2) <= 2 (f_3^(1) + f_4^(2)) + (f_3^(2) + f_4^(1))",
        "2 f_3^(1) + f_3^(2) <= 2 (f_1^(1) + f_4^(1)) + (f_1^(2) + f_4^(2))",
        "2 f_3^(2) + f_3^(1) <= 2 (f_1^(2) + f_4^(2)) + (f_1^(1) + f_4^(1))",
        "2 f_4^(2) + f_4^(1) <= 2 (f_1^(1) + f_3^(2)) + (f_1^(2) + f_3^(1))",
        "2 f_4^(1) + f_4^(2) <= 2 (f_1^(2) + f_3^(1)) + (f_1^(1) + f_3^(2))"};
    CHECK(texts(sys, 1, IneqKind::SingleOne, IneqKind::SingleTwo) == expected);
}

TEST_CASE("row-2 pair inequalities match the worked listing") {
    ConeSystem sys = enumerate_cone(fixtures::paper_4_2());
    std::set<std::string> expected{
        "f_1^(2) + f_3^(1) <= 2 f_4^(2) + (f_1^(1) + f_3^(2) + f_4^(1))",
        "f_1^(1) + f_3^(2) <= 2 f_4^(1) + (f_1^(2) + f_3^(1) + f_4^(2))",
        "f_1^(2) + f_4^(2) <= 2 f_3^(1) + (f_1^(1) + f_3^(2) + f_4^(1))",
        "f_1^(1) + f_4^(1) <= 2 f_3^(2) + (f_1^(2) + f_3^(1) + f_4^(2))",
        "f_3^(1) + f_4^(2) <= 2 f_1^(2) + (f_1^(1) + f_3^(2) + f_4^(1))",
        "f_3^(2) + f_4^(1) <= 2 f_1^(1) + (f_1^(2) + f_3^(1) + f_4^(2))"};
    CHECK(texts(sys, 1, IneqKind::PairOne, IneqKind::PairTwo) == expected);
}

TEST_CASE("the worked pseudocodeword matrix satisfies all 32 inequalities") {
    FieldMatrix h = fixtures::paper_4_2();
    PseudoMatrix f = fixtures::paper_f();
    ConeSystem sys = enumerate_cone(h);
    CHECK(satisfies_all(sys, f));
    MembershipResult res = cone_membership(h, f);
    CHECK(res.member);
    CHECK(res.violated.empty());
    CHECK(in_cone(h, f));
    CHECK(member_by_rows(h, f));
}

TEST_CASE("membership violation reports the binding inequality") {
    FieldMatrix h = fixtures::paper_4_2();
    PseudoMatrix f = PseudoMatrix::from_rows({{3, 0, 0, 0}, {0, 0, 0, 0}});
    MembershipResult res = cone_membership(h, f);
    REQUIRE(!res.member);
    REQUIRE(!res.violated.empty());
    const ConeInequality& first = res.violated.front();
    CHECK(first.kind == IneqKind::SingleOne);
    CHECK(first.row == 0);
    CHECK(first.indices == std::vector<int>{0});
    CHECK(first.evaluate(f) == -6);
    CHECK(!member_by_rows(h, f));
}

TEST_CASE("membership agrees between row and full systems") {
    FieldMatrix h = fixtures::paper_4_2();
    std::vector<PseudoMatrix> samples{
        fixtures::paper_f(),
        PseudoMatrix::from_rows({{0, 0, 0, 0}, {0, 0, 0, 0}}),
        PseudoMatrix::from_rows({{1, 1, 1, 1}, {1, 1, 1, 1}}),
        PseudoMatrix::from_rows({{3, 0, 0, 0}, {0, 0, 0, 0}}),
        PseudoMatrix::from_rows({{2, 0, 1, 0}, {0, 1, 0, 2}}),
    };
    for (const PseudoMatrix& f : samples)
        CHECK(in_cone(h, f) == member_by_rows(h, f));
}

TEST_CASE("binary cone follows the support rule") {
    FieldMatrix h = FieldMatrix::from_rows(2, {{1, 1, 1, 0}, {0, 1, 1, 1}});
    ConeSystem sys = enumerate_cone(h);
    CHECK(sys.nontrivial_count() == 6);
    CHECK(sys.inequalities.size() == 10);  // plus n nonnegativity rows

    CHECK(in_cone(h, PseudoMatrix::from_rows({{2, 1, 1, 0}})));
    CHECK(in_cone(h, PseudoMatrix::from_rows({{0, 0, 0, 0}})));
    CHECK(!in_cone(h, PseudoMatrix::from_rows({{3, 1, 1, 0}})));
    CHECK(!in_cone(h, PseudoMatrix::from_rows({{0, 0, 1, 0}})));

    for (const ConeInequality& iq : sys.inequalities)
        if (iq.kind == IneqKind::BinarySupport && iq.row == 0 && iq.indices == std::vector<int>{0})
            CHECK(inequality_text(h, iq) == "f_1 <= (f_2 + f_3)");
}

TEST_CASE("rational membership matches the integer path under scaling") {
    FieldMatrix h = fixtures::paper_4_2();
    RationalMatrix z = fixtures::paper_f().to_rational().scaled(Rational(1, 4));
    CHECK(cone_membership(h, z).member);

    RationalMatrix bad(2, 4);
    bad(0, 0) = Rational(3, 4);
    CHECK(!cone_membership(h, bad).member);
}

TEST_CASE("symbol map reproduces the worked example and is an involution") {
    FieldMatrix row2 = fixtures::paper_4_2().row(1);
    PseudoMatrix f = fixtures::paper_f();
    PseudoMatrix fhat = psi_map(row2, f);
    CHECK(fhat == fixtures::paper_fhat());
    CHECK(fhat == PseudoMatrix::from_rows({{2, 2, 2, 0}, {2, 2, 0, 2}}));
    CHECK(psi_map(row2, fhat) == f);

    FieldMatrix ones = FieldMatrix::from_rows(3, {{1, 0, 1, 1}});
    CHECK(psi_map(ones, f) == f);  // no entries equal to 2, nothing swaps
}

TEST_CASE("symbol map preserves row-cone membership") {
    FieldMatrix row2 = fixtures::paper_4_2().row(1);
    FieldMatrix hs = support_normalize(row2);
    std::vector<PseudoMatrix> samples{
        fixtures::paper_f(),
        PseudoMatrix::from_rows({{0, 0, 0, 0}, {0, 0, 0, 0}}),
        PseudoMatrix::from_rows({{1, 0, 1, 0}, {0, 0, 0, 1}}),
        PseudoMatrix::from_rows({{5, 0, 0, 0}, {0, 0, 0, 0}}),
        PseudoMatrix::from_rows({{2, 7, 1, 1}, {0, 3, 0, 2}}),
    };
    for (const PseudoMatrix& f : samples)
        CHECK(in_cone(row2, f) == in_cone(hs, psi_map(row2, f)));
}

TEST_CASE("support normalization flattens a ternary row to its indicator") {
    CHECK(support_normalize(fixtures::paper_4_2().row(1)) == fixtures::paper_hs());
    CHECK(support_normalize(fixtures::paper_4_2().row(0)) ==
          FieldMatrix::from_rows(3, {{1, 1, 1, 1}}));
    CHECK_THROWS_AS(support_normalize(fixtures::paper_4_2()), InputError);
}

TEST_CASE("critical analysis of the worked single-row instance") {
    CriticalReport rep = critical_analysis(fixtures::paper_hs(), fixtures::paper_fhat());
    CHECK(rep.coordinates == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(rep.pairs_type_one == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(rep.pairs_type_two == std::vector<std::pair<int, int>>{{0, 3}});
    CHECK(!rep.empty());
    CHECK(rep.coordinate_set() == std::vector<int>{0});
}

TEST_CASE("zero matrix has no critical structure") {
    PseudoMatrix zero(3, 4);
    CriticalReport rep = critical_analysis(fixtures::paper_hs(), zero);
    CHECK(rep.empty());
    CHECK(rep.coordinate_set().empty());
}

TEST_CASE("critical inequalities are tight under the membership preconditions") {
    std::vector<CriticalSlack> slacks =
        critical_slacks(fixtures::paper_hs(), fixtures::paper_fhat());
    REQUIRE(slacks.size() == 4);
    for (const CriticalSlack& s : slacks) CHECK(s.slack == 0);
}

TEST_CASE("critical slack preconditions are enforced") {
    FieldMatrix hs = fixtures::paper_hs();
    CHECK_THROWS_AS(critical_slacks(hs, PseudoMatrix::from_rows({{9, 0, 0, 0}, {0, 0, 0, 0}})),
                    DomainError);
    // In the cone but with a nonzero row syndrome.
    PseudoMatrix f = PseudoMatrix::from_rows({{1, 0, 1, 1}, {1, 0, 1, 0}});
    REQUIRE(in_cone(hs, f));
    REQUIRE(modular_syndrome(hs, f)[0] != 0);
    CHECK_THROWS_AS(critical_slacks(hs, f), DomainError);
}

TEST_CASE("nonnegativity rendering") {
    ConeSystem ternary = enumerate_cone(fixtures::paper_4_2());
    std::set<std::string> nonneg;
    for (const ConeInequality& iq : ternary.inequalities)
        if (iq.kind == IneqKind::Nonnegativity) nonneg.insert(inequality_text(ternary.h, iq));
    CHECK(nonneg.count("f_1^(1) >= 0") == 1);
    CHECK(nonneg.count("f_4^(2) >= 0") == 1);
    CHECK(nonneg.size() == 8);

    ConeSystem binary = enumerate_cone(FieldMatrix::from_rows(2, {{1, 1, 1}}));
    std::set<std::string> bn;
    for (const ConeInequality& iq : binary.inequalities)
        if (iq.kind == IneqKind::Nonnegativity) bn.insert(inequality_text(binary.h, iq));
    CHECK(bn == std::set<std::string>{"f_1 >= 0", "f_2 >= 0", "f_3 >= 0"});
}

TEST_CASE("kind names are stable") {
    CHECK(std::string(kind_name(IneqKind::BinarySupport)) == "binary-support");
    CHECK(std::string(kind_name(IneqKind::SingleOne)) == "single-type-one");
    CHECK(std::string(kind_name(IneqKind::SingleTwo)) == "single-type-two");
    CHECK(std::string(kind_name(IneqKind::PairOne)) == "pair-type-one");
    CHECK(std::string(kind_name(IneqKind::PairTwo)) == "pair-type-two");
    CHECK(std::string(kind_name(IneqKind::Nonnegativity)) == "nonnegativity");
}
