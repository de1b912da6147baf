#include "tablut/counting.hpp"

#include <algorithm>
#include <numeric>

#include "tablut/coord.hpp"

namespace tablut::counting {

namespace {

constexpr unsigned kMaxFactorial = kNumCells;
constexpr unsigned kCampCells = 16;
constexpr unsigned kMaxWhite = 8;
constexpr unsigned kMaxBlack = 16;

const std::vector<BigCount>& factorials() {
  static const std::vector<BigCount> table = [] {
    std::vector<BigCount> f(kMaxFactorial + 1);
    f[0] = 1;
    for (unsigned i = 1; i <= kMaxFactorial; ++i) f[i] = f[i - 1] * i;
    return f;
  }();
  return table;
}

BigCount factorial(unsigned n) {
  if (n <= kMaxFactorial) return factorials()[n];
  BigCount f = factorials()[kMaxFactorial];
  for (unsigned i = kMaxFactorial + 1; i <= n; ++i) f *= i;
  return f;
}

// Cells that can hold the king in a non-final state other than the castle,
// i.e. the plain cells.
unsigned king_cells_off_castle() { return static_cast<unsigned>(class_count(CellClass::Plain)); }

BigCount pow(unsigned base, unsigned exp) {
  BigCount r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

BigCount multinomial(unsigned n, std::span<const unsigned> parts) {
  const unsigned long long total = std::accumulate(parts.begin(), parts.end(), 0ULL);
  if (total != n)
    throw CountingError("multinomial: parts sum to " + std::to_string(total) + ", expected " + std::to_string(n));
  BigCount r = factorial(n);
  for (unsigned k : parts) r /= factorial(k);
  return r;
}

BigCount multinomial(unsigned n, std::initializer_list<unsigned> parts) {
  return multinomial(n, std::span<const unsigned>(parts.begin(), parts.size()));
}

BigCount camp_split_sum(unsigned region, unsigned b_min, unsigned b_max) {
  BigCount sum = 0;
  for (unsigned b = b_min; b <= b_max; ++b) {
    for (unsigned w = 0; w <= kMaxWhite; ++w) {
      for (unsigned c = 0; c <= std::min(b, kCampCells); ++c) {
        const unsigned outside = b - c;
        if (outside + w > region) continue;
        sum += multinomial(kCampCells, {c, kCampCells - c}) *
               multinomial(region, {outside, w, region - outside - w});
      }
    }
  }
  return sum;
}

BigCount plain_sum(unsigned region, unsigned b_min, unsigned b_max) {
  BigCount sum = 0;
  for (unsigned b = b_min; b <= b_max; ++b)
    for (unsigned w = 0; w <= kMaxWhite && b + w <= region; ++w) sum += multinomial(region, {b, w, region - b - w});
  return sum;
}

RegionSizes region_sizes() {
  const auto camps = static_cast<unsigned>(class_count(CellClass::Camp));
  const auto castle = static_cast<unsigned>(class_count(CellClass::Castle));
  RegionSizes r{};
  r.all_but_castle = kNumCells - castle;
  r.all_but_castle_king = r.all_but_castle - 1;
  r.non_camp = kNumCells - camps - castle;
  r.non_camp_king = r.non_camp - 1;
  // King on an escape; the cell it came through stays empty.
  r.escape = r.non_camp_king - 1;
  // King on the castle, which is already outside the non-camp region; four
  // capturers are fixed.
  r.castle_capture = r.non_camp - 4;
  // King next to the castle with three capturers fixed.
  r.castle_adjacent_capture = r.non_camp_king - 3;
  // King next to a camp, one capturer fixed.
  r.camp_capture = r.non_camp_king - 1;
  // King elsewhere, two capturers fixed.
  r.ordinary_capture = r.non_camp_king - 2;
  return r;
}

std::string_view name(Term t) {
  switch (t) {
    case Term::Naive: return "naive";
    case Term::NoEndV1: return "no_end_v1";
    case Term::NoEndCastle: return "no_end_castle";
    case Term::NoEndNoCastle: return "no_end_no_castle";
    case Term::NoEndRefined: return "no_end_refined";
    case Term::Alpha: return "alpha";
    case Term::Beta: return "beta";
    case Term::Gamma: return "gamma";
    case Term::Delta: return "delta";
    case Term::Epsilon: return "epsilon";
    case Term::Zeta: return "zeta";
    case Term::End: return "end";
    case Term::Total: return "total";
  }
  return "?";
}

Term term_from_name(std::string_view n) {
  for (Term t : kAllTerms)
    if (name(t) == n) return t;
  throw CountingError("unknown bound term '" + std::string(n) + "'");
}

BigCount ub_naive() {
  // Castle: king or empty. Camps: black or empty. Escapes and corners: black,
  // white or empty. Plain cells: any piece or empty.
  const auto edge = static_cast<unsigned>(class_count(CellClass::Escape) + class_count(CellClass::Corner));
  return pow(2, static_cast<unsigned>(class_count(CellClass::Castle))) *
         pow(2, static_cast<unsigned>(class_count(CellClass::Camp))) * pow(3, edge) *
         pow(4, static_cast<unsigned>(class_count(CellClass::Plain)));
}

BigCount ub_term(Term t) {
  const RegionSizes r = region_sizes();
  const unsigned king_cells = king_cells_off_castle();
  switch (t) {
    case Term::Naive:
      return ub_naive();
    case Term::NoEndV1:
      return plain_sum(r.all_but_castle, 1, kMaxBlack) + king_cells * plain_sum(r.all_but_castle_king, 1, kMaxBlack);
    case Term::NoEndCastle:
      return camp_split_sum(r.non_camp, 1, kMaxBlack);
    case Term::NoEndNoCastle:
      return king_cells * camp_split_sum(r.non_camp_king, 1, kMaxBlack);
    case Term::NoEndRefined:
      return ub_term(Term::NoEndCastle) + ub_term(Term::NoEndNoCastle);
    case Term::Alpha: {
      // No blacks left: only whites over the non-camp cells, king in or out
      // of the castle.
      BigCount sum = 0;
      for (unsigned w = 0; w <= kMaxWhite; ++w)
        sum += multinomial(r.non_camp, {w, r.non_camp - w}) +
               king_cells * multinomial(r.non_camp_king, {w, r.non_camp_king - w});
      return sum;
    }
    case Term::Beta:
      return static_cast<unsigned>(class_count(CellClass::Escape)) * camp_split_sum(r.escape, 1, kMaxBlack);
    case Term::Gamma:
      return camp_split_sum(r.castle_capture, 0, kMaxBlack - 4);
    case Term::Delta:
      // 4 cells next to the castle.
      return 4 * camp_split_sum(r.castle_adjacent_capture, 0, kMaxBlack - 3);
    case Term::Epsilon:
      // 12 cells next to a camp: 8 with two possible capturer cells, 4 with one.
      return 20 * camp_split_sum(r.camp_capture, 0, kMaxBlack - 1);
    case Term::Zeta:
      // 28 remaining king cells, each with two capturing pairs.
      return 56 * camp_split_sum(r.ordinary_capture, 0, kMaxBlack - 2);
    case Term::End: {
      BigCount sum = 0;
      for (Term s : {Term::Alpha, Term::Beta, Term::Gamma, Term::Delta, Term::Epsilon, Term::Zeta})
        sum += ub_term(s);
      return sum;
    }
    case Term::Total:
      return ub_term(Term::NoEndRefined) + ub_term(Term::End);
  }
  throw CountingError("unknown bound term");
}

std::string PrintedValue::text() const {
  if (mantissa.empty()) return "~1e" + std::to_string(exponent);
  std::string s(1, mantissa[0]);
  if (mantissa.size() > 1) s += "." + mantissa.substr(1);
  return s + "e" + std::to_string(exponent);
}

PrintedValue published_value(Term t) {
  switch (t) {
    case Term::Naive: return {"", 41};
    case Term::NoEndV1: return {"61", 27};
    case Term::NoEndCastle: return {"3", 25};
    case Term::NoEndNoCastle: return {"92", 26};
    case Term::NoEndRefined: return {"95", 26};
    case Term::Alpha: return {"20", 11};
    case Term::Beta: return {"23", 26};
    case Term::Gamma: return {"28", 22};
    case Term::Delta: return {"51", 23};
    case Term::Epsilon: return {"80", 25};
    case Term::Zeta: return {"16", 26};
    case Term::End: return {"46", 26};
    case Term::Total: return {"14", 27};
  }
  throw CountingError("unknown bound term");
}

PrintedValue round_significant(const BigCount& v, int digits) {
  if (digits < 1) throw CountingError("round_significant: digits must be positive");
  if (v < 0) throw CountingError("round_significant: negative value");
  const std::string s = v.str();
  const int len = static_cast<int>(s.size());
  if (v == 0) return {std::string(static_cast<std::size_t>(digits), '0'), 0};
  if (len <= digits) return {s + std::string(static_cast<std::size_t>(digits - len), '0'), len - 1};

  BigCount div = 1;
  for (int i = 0; i < len - digits; ++i) div *= 10;
  BigCount q = v / div;
  const BigCount rem2 = 2 * (v % div);
  if (rem2 > div || (rem2 == div && (q % 2) == 1)) ++q;
  int exponent = len - 1;
  std::string m = q.str();
  if (static_cast<int>(m.size()) > digits) {
    m.pop_back();
    ++exponent;
  }
  return {m, exponent};
}

std::string display(const BigCount& v, int digits) { return round_significant(v, digits).text(); }

bool matches(const BigCount& v, const PrintedValue& printed) {
  if (printed.mantissa.empty()) {
    if (v <= 0) return false;
    return static_cast<int>(v.str().size()) - 1 == printed.exponent;
  }
  const PrintedValue r = round_significant(v, static_cast<int>(printed.mantissa.size()));
  return r.mantissa == printed.mantissa && r.exponent == printed.exponent;
}

const BoundsEntry& BoundsReport::at(Term t) const {
  for (const auto& e : entries)
    if (e.term == t) return e;
  throw CountingError("term missing from report");
}

BoundsReport bounds_report() {
  BoundsReport report;
  std::vector<BigCount> exact(kAllTerms.size());
  auto slot = [&](Term t) -> BigCount& { return exact[static_cast<std::size_t>(t)]; };
  for (Term t : {Term::Naive, Term::NoEndV1, Term::NoEndCastle, Term::NoEndNoCastle, Term::Alpha, Term::Beta,
                 Term::Gamma, Term::Delta, Term::Epsilon, Term::Zeta})
    slot(t) = ub_term(t);
  slot(Term::NoEndRefined) = slot(Term::NoEndCastle) + slot(Term::NoEndNoCastle);
  slot(Term::End) = slot(Term::Alpha) + slot(Term::Beta) + slot(Term::Gamma) + slot(Term::Delta) +
                    slot(Term::Epsilon) + slot(Term::Zeta);
  slot(Term::Total) = slot(Term::NoEndRefined) + slot(Term::End);

  for (Term t : kAllTerms) {
    BoundsEntry e{t, slot(t), display(slot(t)), published_value(t), false};
    e.matches_published = matches(e.exact, e.published);
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace tablut::counting
