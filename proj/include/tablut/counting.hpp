#pragma once

#include <array>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tablut::counting {

using BigCount = boost::multiprecision::cpp_int;

class CountingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// n! / (parts[0]! * parts[1]! * ...). Throws when the parts do not sum to n.
BigCount multinomial(unsigned n, std::span<const unsigned> parts);
BigCount multinomial(unsigned n, std::initializer_list<unsigned> parts);

// Sum over b in [b_min, b_max], w in [0, 8] and c in [0, min(b, 16)] of
//   C(16, c) * P_region^(b - c, w, region - b - w + c)
// i.e. c blacks inside the 16 camp cells and the remaining pieces spread over
// a non-camp region of `region` cells.
BigCount camp_split_sum(unsigned region, unsigned b_min, unsigned b_max);

// Same without the camp split: blacks and whites share one region.
BigCount plain_sum(unsigned region, unsigned b_min, unsigned b_max);

enum class Term {
  Naive,
  NoEndV1,
  NoEndCastle,
  NoEndNoCastle,
  NoEndRefined,
  Alpha,
  Beta,
  Gamma,
  Delta,
  Epsilon,
  Zeta,
  End,
  Total,
};

inline constexpr std::array kAllTerms = {
    Term::Naive, Term::NoEndV1, Term::NoEndCastle, Term::NoEndNoCastle, Term::NoEndRefined,
    Term::Alpha, Term::Beta,    Term::Gamma,       Term::Delta,         Term::Epsilon,
    Term::Zeta,  Term::End,     Term::Total,
};

std::string_view name(Term t);
// Throws CountingError for an unknown name.
Term term_from_name(std::string_view name);

BigCount ub_naive();
BigCount ub_term(Term t);

// A value as printed in the literature: significant digits plus a decimal
// exponent. An empty mantissa means only the order of magnitude was given
// ("~10^41").
struct PrintedValue {
  std::string mantissa;  // digits only, e.g. "61" for 6.1
  int exponent = 0;

  std::string text() const;
};

PrintedValue published_value(Term t);

// Rounds to `digits` significant digits, half to even.
PrintedValue round_significant(const BigCount& v, int digits);

// "1.4e27"
std::string display(const BigCount& v, int digits = 2);

// True when `v` rounds to `printed` at the precision `printed` carries, or
// shares its order of magnitude when no mantissa was printed.
bool matches(const BigCount& v, const PrintedValue& printed);

struct BoundsEntry {
  Term term;
  BigCount exact;
  std::string display;
  PrintedValue published;
  bool matches_published = false;
};

struct BoundsReport {
  std::vector<BoundsEntry> entries;  // in kAllTerms order

  const BoundsEntry& at(Term t) const;
};

BoundsReport bounds_report();

// Region sizes used by the terms, derived from the board's cell classes.
struct RegionSizes {
  unsigned all_but_castle;       // 80
  unsigned all_but_castle_king;  // 79
  unsigned non_camp;             // 64
  unsigned non_camp_king;        // 63
  unsigned escape;               // 62
  unsigned castle_capture;       // 60
  unsigned castle_adjacent_capture;  // 60
  unsigned camp_capture;         // 62
  unsigned ordinary_capture;     // 61
};

RegionSizes region_sizes();

}  // namespace tablut::counting
