#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <vector>

#include "tablut/counting.hpp"
#include "tablut/enumeration.hpp"

using namespace tablut;
using namespace tablut::counting;

namespace {

// Pascal's triangle, kept apart from the factorial route used by the module.
BigCount binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<BigCount> row(n + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i; j > 0; --j) row[j] += row[j - 1];
  return row[k];
}

// Placing w whites among `region` cells, then b blacks among the remaining
// region cells plus the 16 camp cells, counts the same configurations as the
// sum over c of the camp-split products.
BigCount camp_split_closed_form(unsigned region, unsigned b_min, unsigned b_max) {
  BigCount sum = 0;
  for (unsigned b = b_min; b <= b_max; ++b)
    for (unsigned w = 0; w <= 8; ++w) sum += binomial(region, w) * binomial(region - w + 16, b);
  return sum;
}

BigCount plain_closed_form(unsigned region, unsigned b_min, unsigned b_max) {
  BigCount sum = 0;
  for (unsigned b = b_min; b <= b_max; ++b)
    for (unsigned w = 0; w <= 8; ++w) sum += binomial(region, w) * binomial(region - w, b);
  return sum;
}

BigCount big(const char* digits) { return BigCount(digits); }

}  // namespace

TEST_CASE("multinomial examples") {
  CHECK(multinomial(3, {1, 1, 1}) == 6);
  CHECK(multinomial(80, {0, 0, 80}) == 1);
  CHECK(multinomial(12, {3, 4, 5}) == 27720);
  std::vector<Coord> region;
  for (int i = 0; i < 12; ++i) region.push_back(Coord::from_index(i));
  CHECK(multinomial(12, {3, 4, 5}) == enumeration::enumerate_placements(region, 3, 4));
  CHECK_THROWS_AS(multinomial(5, {1, 1}), CountingError);
  CHECK_THROWS_AS(multinomial(5, {3, 3}), CountingError);
}

TEST_CASE("multinomial invariants") {
  for (unsigned n = 0; n <= 64; ++n) {
    CHECK(multinomial(n, {n}) == 1);
    BigCount sum = 0;
    for (unsigned k = 0; k <= n; ++k) {
      sum += multinomial(n, {k, n - k});
      REQUIRE(multinomial(n, {k, n - k}) == binomial(n, k));
    }
    REQUIRE(sum == BigCount(1) << n);
  }
  std::vector<unsigned> parts = {2, 3, 5, 7};
  const BigCount ref = multinomial(17, parts);
  std::sort(parts.begin(), parts.end());
  do {
    REQUIRE(multinomial(17, parts) == ref);
  } while (std::next_permutation(parts.begin(), parts.end()));
}

TEST_CASE("naive bound") {
  const BigCount v = ub_naive();
  CHECK(v % 2 == 0);
  BigCount three20 = 1;
  for (int i = 0; i < 20; ++i) three20 *= 3;
  CHECK(v == (BigCount(1) << 17) * three20 * (BigCount(1) << 88));
  CHECK(v == big("141440778841410474143624665261815556472832"));
  CHECK(display(v) == "1.4e41");
  CHECK(matches(v, published_value(Term::Naive)));
}

TEST_CASE("region sizes follow from the cell classes") {
  const RegionSizes r = region_sizes();
  CHECK(r.all_but_castle == 80);
  CHECK(r.all_but_castle_king == 79);
  CHECK(r.non_camp == 64);
  CHECK(r.non_camp_king == 63);
  CHECK(r.escape == 62);
  CHECK(r.castle_capture == 60);
  CHECK(r.castle_adjacent_capture == 60);
  CHECK(r.camp_capture == 62);
  CHECK(r.ordinary_capture == 61);
}

TEST_CASE("summation helpers match closed forms") {
  for (unsigned region : {60U, 61U, 62U, 63U, 64U}) {
    CAPTURE(region);
    CHECK(camp_split_sum(region, 0, 16) == camp_split_closed_form(region, 0, 16));
    CHECK(camp_split_sum(region, 1, 12) == camp_split_closed_form(region, 1, 12));
  }
  CHECK(plain_sum(80, 1, 16) == plain_closed_form(80, 1, 16));
  CHECK(plain_sum(79, 1, 16) == plain_closed_form(79, 1, 16));
}

// Exact values were computed independently with arbitrary-precision integer
// arithmetic outside this code base and frozen here.
TEST_CASE("exact bound terms") {
  CHECK(ub_term(Term::NoEndV1) == big("6096405542257313008648679261"));
  CHECK(ub_term(Term::NoEndCastle) == big("30313248887018321011379867"));
  CHECK(ub_term(Term::NoEndNoCastle) == big("917576000369514086068284388"));
  CHECK(ub_term(Term::NoEndRefined) == big("947889249256532407079664255"));
  CHECK(ub_term(Term::Alpha) == big("203208853237"));
  CHECK(ub_term(Term::Beta) == big("228207007117729462830447728"));
  CHECK(ub_term(Term::Gamma) == big("28473508057241538423256"));
  CHECK(ub_term(Term::Delta) == big("505571024180850074037344"));
  CHECK(ub_term(Term::Epsilon) == big("80234626852410989076948320"));
  CHECK(ub_term(Term::Zeta) == big("41019808636966473872687808"));
  CHECK(ub_term(Term::End) == big("349995487139345220601397693"));
  CHECK(ub_term(Term::Total) == big("1297884736395877627681061948"));
}

TEST_CASE("two-digit displays") {
  CHECK(display(ub_term(Term::NoEndV1)) == "6.1e27");
  CHECK(display(ub_term(Term::NoEndCastle)) == "3.0e25");
  CHECK(display(ub_term(Term::NoEndNoCastle)) == "9.2e26");
  CHECK(display(ub_term(Term::NoEndRefined)) == "9.5e26");
  CHECK(display(ub_term(Term::Alpha)) == "2.0e11");
  CHECK(display(ub_term(Term::Beta)) == "2.3e26");
  CHECK(display(ub_term(Term::Gamma)) == "2.8e22");
  CHECK(display(ub_term(Term::Delta)) == "5.1e23");
  CHECK(display(ub_term(Term::Epsilon)) == "8.0e25");
  CHECK(display(ub_term(Term::Zeta)) == "4.1e25");
}

TEST_CASE("alpha is the b = 0 slice of the camp-split sums") {
  const RegionSizes r = region_sizes();
  CHECK(ub_term(Term::Alpha) == camp_split_sum(r.non_camp, 0, 0) + 44 * camp_split_sum(r.non_camp_king, 0, 0));
}

TEST_CASE("rounding is half to even") {
  CHECK(round_significant(125, 2).mantissa == "12");
  CHECK(round_significant(135, 2).mantissa == "14");
  CHECK(round_significant(1251, 2).mantissa == "13");
  CHECK(round_significant(1249, 2).mantissa == "12");
  const PrintedValue carry = round_significant(995, 2);
  CHECK(carry.mantissa == "10");
  CHECK(carry.exponent == 3);
  CHECK(display(7) == "7.0e0");
  CHECK(display(0) == "0.0e0");
  CHECK(round_significant(BigCount("30313248887018321011379867"), 1).mantissa == "3");
}

TEST_CASE("matching against printed values") {
  CHECK(matches(BigCount("30313248887018321011379867"), {"3", 25}));
  CHECK_FALSE(matches(BigCount("30313248887018321011379867"), {"31", 25}));
  CHECK(matches(BigCount("141440778841410474143624665261815556472832"), {"", 41}));
  CHECK_FALSE(matches(BigCount("14144077884141047414362466526181555647283"), {"", 41}));
  CHECK(published_value(Term::Total).text() == "1.4e27");
  CHECK(published_value(Term::NoEndCastle).text() == "3e25");
  CHECK(published_value(Term::Naive).text() == "~1e41");
}

TEST_CASE("term names") {
  CHECK(kAllTerms.size() == 13);
  for (Term t : kAllTerms) CHECK(term_from_name(name(t)) == t);
  CHECK_THROWS_AS(term_from_name("omega"), CountingError);
}

TEST_CASE("bounds report") {
  const auto t0 = std::chrono::steady_clock::now();
  const BoundsReport r = bounds_report();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 1.0);
  REQUIRE(r.entries.size() == 13);

  CHECK(r.at(Term::End).exact == r.at(Term::Alpha).exact + r.at(Term::Beta).exact + r.at(Term::Gamma).exact +
                                     r.at(Term::Delta).exact + r.at(Term::Epsilon).exact + r.at(Term::Zeta).exact);
  CHECK(r.at(Term::Total).exact == r.at(Term::NoEndRefined).exact + r.at(Term::End).exact);
  CHECK(r.at(Term::NoEndRefined).exact == r.at(Term::NoEndCastle).exact + r.at(Term::NoEndNoCastle).exact);

  CHECK(r.at(Term::NoEndRefined).exact <= r.at(Term::NoEndV1).exact);
  CHECK(r.at(Term::NoEndV1).exact <= r.at(Term::Naive).exact);

  for (const auto& e : r.entries) {
    CHECK(e.exact == ub_term(e.term));
    CHECK(e.display == display(e.exact));
  }
  CHECK(r.at(Term::NoEndRefined).display == "9.5e26");
}
