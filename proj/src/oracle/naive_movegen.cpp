#include "tablut/oracle/naive_movegen.hpp"

#include <algorithm>

namespace tablut::oracle {

namespace {

bool owned_by(const Board& b, Coord c, Player side) {
  const auto piece = b.at(c);
  return piece && owner(*piece) == side;
}

bool may_enter(const Board& b, Coord from, Coord cell) {
  if (b.at(cell)) return false;
  switch (classify(cell)) {
    case CellClass::Castle:
      return false;
    case CellClass::Camp:
      return camp_group(from) >= 0 && camp_group(from) == camp_group(cell);
    default:
      return true;
  }
}

bool reachable(const Board& b, Coord from, Coord to) {
  if (from == to) return false;
  if (from.file != to.file && from.rank != to.rank) return false;
  const int lo_f = std::min(from.file, to.file), hi_f = std::max(from.file, to.file);
  const int lo_r = std::min(from.rank, to.rank), hi_r = std::max(from.rank, to.rank);
  for (int f = lo_f; f <= hi_f; ++f)
    for (int r = lo_r; r <= hi_r; ++r) {
      const Coord c{f, r};
      if (c != from && !may_enter(b, from, c)) return false;
    }
  return true;
}

}  // namespace

std::vector<Move> naive_moves(const Board& board, Player side) {
  std::vector<Move> out;
  for (int fi = 0; fi < kNumCells; ++fi) {
    const Coord from = Coord::from_index(fi);
    if (!owned_by(board, from, side)) continue;
    for (int ti = 0; ti < kNumCells; ++ti) {
      const Coord to = Coord::from_index(ti);
      if (reachable(board, from, to)) out.push_back({from, to});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// An ongoing successor with no naive moves contributes nothing here, while
// the engine would have scored it as an immobility win; such a disagreement
// shows up as a count mismatch.
std::uint64_t expand(const Position& p, int depth) {
  const auto moves = naive_moves(p.board(), p.to_move());
  if (depth == 1) return moves.size();
  std::uint64_t nodes = 0;
  for (const Move& m : moves) {
    const MoveResult r = engine::apply_unchecked(p, m);
    nodes += r.outcome.terminal() ? 1 : expand(r.next, depth - 1);
  }
  return nodes;
}

}  // namespace

std::uint64_t naive_perft(const Position& p, int depth) {
  if (depth == 0 || outcome(p).terminal()) return 1;
  return expand(p, depth);
}

}  // namespace tablut::oracle
