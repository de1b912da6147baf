#include "tablut/enumeration.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

#include "tablut/tbn.hpp"
#include "tablut/transform.hpp"

namespace tablut::enumeration {

namespace {

void place_markers(std::size_t cell, std::size_t cells, unsigned blacks, unsigned whites, std::uint64_t& count) {
  if (blacks == 0 && whites == 0) {
    ++count;
    return;
  }
  if (cell == cells) return;
  place_markers(cell + 1, cells, blacks, whites, count);  // leave empty
  if (blacks > 0) place_markers(cell + 1, cells, blacks - 1, whites, count);
  if (whites > 0) place_markers(cell + 1, cells, blacks, whites - 1, count);
}

std::vector<Coord> neighbors(Coord c) {
  std::vector<Coord> out;
  constexpr int df[4] = {0, 1, 0, -1};
  constexpr int dr[4] = {1, 0, -1, 0};
  for (int d = 0; d < 4; ++d)
    if (Coord::on_board(c.file + df[d], c.rank + dr[d])) out.push_back({c.file + df[d], c.rank + dr[d]});
  return out;
}

// Cells the king can stand on, starting from the castle on an otherwise empty
// board. Game-ending cells are recorded but not expanded.
std::set<Coord> king_reachable_cells() {
  std::set<Coord> seen{kCastle};
  std::vector<Coord> queue{kCastle};
  while (!queue.empty()) {
    const Coord at = queue.back();
    queue.pop_back();
    Board b;
    b.place(at, Piece::King);
    const Position p(b, Player::White);
    if (outcome(p).terminal()) continue;
    std::vector<Move> moves;
    engine::generate_moves(b, Player::White, moves);
    for (const Move& m : moves)
      if (seen.insert(m.to).second) queue.push_back(m.to);
  }
  return seen;
}

// A lone king is an immediate win for nobody unless it stands on a game-ending
// cell; a far black soldier keeps the elimination rule out of the way.
bool king_cell_is_final(Coord c) {
  Board b;
  b.place(c, Piece::King);
  b.place(c == Coord{4, 0} ? Coord{4, 8} : Coord{4, 0}, Piece::BlackSoldier);
  return outcome(Position(b, Player::White)).terminal();
}

}  // namespace

BigCount enumerate_placements(std::span<const Coord> region, unsigned blacks, unsigned whites) {
  if (region.size() > kMaxPlacementRegion)
    throw EnumerationError("enumerate_placements: region of " + std::to_string(region.size()) +
                           " cells exceeds the cap of " + std::to_string(kMaxPlacementRegion));
  std::set<Coord> distinct(region.begin(), region.end());
  if (distinct.size() != region.size()) throw EnumerationError("enumerate_placements: repeated cell in region");
  if (blacks + whites > region.size()) return 0;
  std::uint64_t count = 0;
  place_markers(0, region.size(), blacks, whites, count);
  return count;
}

std::vector<std::vector<Coord>> minimal_capture_sets(Coord king) {
  std::vector<Coord> candidates;
  for (Coord n : neighbors(king))
    if (classify(n) != CellClass::Castle) candidates.push_back(n);
  const unsigned subsets = 1U << candidates.size();
  std::vector<bool> surrounded(subsets);
  for (unsigned mask = 0; mask < subsets; ++mask) {
    Board b;
    b.place(king, Piece::King);
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (mask & (1U << i)) b.place(candidates[i], Piece::BlackSoldier);
    surrounded[mask] = king_surrounded(b, king);
  }
  std::vector<std::vector<Coord>> out;
  for (unsigned mask = 0; mask < subsets; ++mask) {
    if (!surrounded[mask]) continue;
    bool minimal = true;
    for (unsigned sub = (mask - 1) & mask; minimal && sub != mask; sub = (sub - 1) & mask) {
      if (surrounded[sub]) minimal = false;
      if (sub == 0) break;
    }
    if (!minimal) continue;
    std::vector<Coord> set;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (mask & (1U << i)) set.push_back(candidates[i]);
    std::sort(set.begin(), set.end());
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GeometryReport derive_geometry() {
  GeometryReport g;
  for (int i = 0; i < kNumCells; ++i)
    if (classify(Coord::from_index(i)) == CellClass::Escape) ++g.escape_cells;

  for (Coord c : king_reachable_cells()) {
    if (king_cell_is_final(c)) continue;
    ++g.king_cells_total;
    if (classify(c) == CellClass::Castle) continue;
    ++g.king_cells_non_castle;

    const auto around = neighbors(c);
    const auto touches = [&](CellClass cls) {
      return std::any_of(around.begin(), around.end(), [&](Coord n) { return classify(n) == cls; });
    };
    const auto configs = static_cast<int>(minimal_capture_sets(c).size());
    if (touches(CellClass::Castle)) {
      ++g.castle_adjacent_cells;
    } else if (touches(CellClass::Camp)) {
      ++g.camp_adjacent_king_cells;
      g.camp_capture_configs += configs;
    } else {
      ++g.ordinary_capture_cells;
      g.ordinary_capture_configs += configs;
    }
  }
  return g;
}

Position canonicalize(const Position& p) {
  Board best = p.board();
  std::string best_text = format_tbn(best, p.to_move());
  for (Transform t : Transform::all()) {
    Board b = apply_transform(p.board(), t);
    std::string text = format_tbn(b, p.to_move());
    if (text < best_text) {
      best_text = std::move(text);
      best = std::move(b);
    }
  }
  return Position(std::move(best), p.to_move());
}

int orbit_size(const Position& p) {
  std::set<Board> images;
  for (Transform t : Transform::all()) images.insert(apply_transform(p.board(), t));
  return static_cast<int>(images.size());
}

BudgetExceeded::BudgetExceeded(std::size_t visited, std::size_t frontier, int depth)
    : std::runtime_error("reachable_count: budget exceeded at depth " + std::to_string(depth) + " with " +
                         std::to_string(visited) + " states visited and a frontier of " +
                         std::to_string(frontier)),
      visited_(visited),
      frontier_(frontier),
      depth_(depth) {}

std::uint64_t reachable_count(const Position& p, int depth, bool canonical, std::size_t budget) {
  const auto key_of = [&](const Position& q) { return canonical ? canonicalize(q).key() : q.key(); };
  std::unordered_set<StateKey> visited{key_of(p)};
  std::vector<Position> frontier{p};
  std::vector<Move> moves;
  for (int ply = 0; ply < depth && !frontier.empty(); ++ply) {
    std::vector<Position> next;
    for (const Position& q : frontier) {
      if (outcome(q).terminal()) continue;
      if (auto why = audit_non_terminal(q); !why.empty())
        throw InvariantViolation("reachable_count: " + format_tbn(q) + ": " + why);
      moves.clear();
      engine::generate_moves(q.board(), q.to_move(), moves);
      for (const Move& m : moves) {
        MoveResult r = engine::apply_unchecked(q, m);
        if (!visited.insert(key_of(r.next)).second) continue;
        if (visited.size() > budget) throw BudgetExceeded(visited.size(), next.size() + 1, ply + 1);
        next.push_back(std::move(r.next));
      }
    }
    frontier = std::move(next);
  }
  for (const Position& q : frontier)
    if (!outcome(q).terminal())
      if (auto why = audit_non_terminal(q); !why.empty())
        throw InvariantViolation("reachable_count: " + format_tbn(q) + ": " + why);
  return visited.size();
}

std::string audit_non_terminal(const Position& p) {
  const Board& b = p.board();
  if (b.blacks().test(kCastle) || b.whites().test(kCastle)) return "soldier on the castle";
  const auto king = b.king();
  if (!king) return "king missing";
  const CellClass cls = classify(*king);
  if (cls != CellClass::Castle && cls != CellClass::Plain)
    return "king on " + std::string(to_string(cls)) + " cell " + to_string(*king);
  if (b.black_count() < 1) return "no black soldier left";
  return {};
}

std::string audit_terminal(const Position& p, const Outcome& o) {
  const Board& b = p.board();
  const auto king = b.king();
  const bool escaped = king && classify(*king) == CellClass::Escape;
  const bool captured = !king;
  const bool repeated = p.repeated();
  if (int(escaped) + int(captured) + int(repeated) > 1) return "more than one of escape/capture/repetition holds";

  const Player side = p.to_move();
  const OutcomeKind other_wins = side == Player::White ? OutcomeKind::BlackWin : OutcomeKind::WhiteWin;
  Outcome expected;
  if (escaped)
    expected = {OutcomeKind::WhiteWin, OutcomeReason::Escape};
  else if (captured)
    expected = {OutcomeKind::BlackWin, OutcomeReason::KingCaptured};
  else if (repeated)
    expected = {OutcomeKind::Draw, OutcomeReason::Repetition};
  else if (b.pieces_of(side).empty())
    expected = {other_wins, OutcomeReason::OpponentEliminated};
  else if (!engine::has_any_move(b, side))
    expected = {other_wins, OutcomeReason::OpponentImmobile};
  if (!expected.terminal()) return "reported " + to_string(o) + " but no end condition holds";
  if (expected != o) return "reported " + to_string(o) + " but position implies " + to_string(expected);
  return {};
}

Outcome PlayoutTrace::final_outcome() const {
  return steps.empty() ? outcome(start) : steps.back().outcome;
}

PlayoutTrace random_playout(const Position& p, std::uint64_t seed, std::size_t max_plies) {
  PlayoutTrace trace{p, {}};
  std::mt19937_64 rng(seed);
  Position at = p;
  while (trace.steps.size() < max_plies && !outcome(at).terminal()) {
    const auto moves = legal_moves(at);
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    const Move m = moves[pick(rng)];
    MoveResult r = engine::apply_unchecked(at, m);
    at = r.next;
    trace.steps.push_back({m, std::move(r.captured), std::move(r.next), r.outcome});
    if (r.outcome.terminal()) break;
  }
  return trace;
}

}  // namespace tablut::enumeration
