#include "tablut/rules.hpp"

#include <algorithm>
#include <array>

namespace tablut {

namespace {

// North, east, south, west; opposite direction is d ^ 2.
constexpr std::array<int, 4> kDFile = {0, 1, 0, -1};
constexpr std::array<int, 4> kDRank = {1, 0, -1, 0};

struct Tables {
  std::array<std::array<std::int8_t, 4>, kNumCells> neighbor{};
  std::array<CellClass, kNumCells> cls{};
  std::array<std::int8_t, kNumCells> camp{};
  // Cells a piece starting in camp group g-1 may never enter (g = 0 for
  // pieces outside any camp): the castle plus every other camp.
  std::array<Bitboard, 5> barrier{};
  Bitboard citadel;
  Bitboard castle_adjacent;
  Bitboard camp_adjacent;
};

const Tables& tables() {
  static const Tables t = [] {
    Tables t;
    for (int i = 0; i < kNumCells; ++i) {
      const Coord c = Coord::from_index(i);
      t.cls[i] = classify(c);
      t.camp[i] = static_cast<std::int8_t>(camp_group(c));
      for (int d = 0; d < 4; ++d) {
        const int f = c.file + kDFile[d];
        const int r = c.rank + kDRank[d];
        t.neighbor[i][d] = static_cast<std::int8_t>(Coord::on_board(f, r) ? Coord{f, r}.index() : -1);
      }
      if (t.cls[i] == CellClass::Castle || t.cls[i] == CellClass::Camp) t.citadel.set(i);
    }
    for (int g = 0; g < 5; ++g) {
      t.barrier[g].set(kCastle.index());
      for (int i = 0; i < kNumCells; ++i)
        if (t.camp[i] >= 0 && t.camp[i] != g - 1) t.barrier[g].set(i);
    }
    for (int i = 0; i < kNumCells; ++i) {
      for (int d = 0; d < 4; ++d) {
        const int n = t.neighbor[i][d];
        if (n < 0) continue;
        if (t.cls[n] == CellClass::Castle) t.castle_adjacent.set(i);
        if (t.cls[n] == CellClass::Camp) t.camp_adjacent.set(i);
      }
    }
    // The king capture cases below assume no cell touches both.
    if (!(t.castle_adjacent & t.camp_adjacent).empty())
      throw std::logic_error("geometry: a cell is adjacent to both castle and a camp");
    return t;
  }();
  return t;
}

const Bitboard& barrier_for(int from) {
  const Tables& t = tables();
  return t.barrier[t.camp[from] + 1];
}

bool is_anvil_for(const Board& b, Player mover, int cell) {
  if (tables().citadel.test(cell)) return true;
  if (mover == Player::Black) return b.blacks().test(cell);
  return b.whites().test(cell) || b.king() == Coord::from_index(cell);
}

// King on `king` after a black piece arrived on `mover`, `dir` pointing from
// the mover to the king.
bool king_captured_by(const Board& b, int king, int dir) {
  const Tables& t = tables();
  const auto black = [&](int cell) { return cell >= 0 && b.blacks().test(cell); };
  if (t.cls[king] == CellClass::Castle) {
    for (int d = 0; d < 4; ++d)
      if (!black(t.neighbor[king][d])) return false;
    return true;
  }
  if (t.castle_adjacent.test(king)) {
    for (int d = 0; d < 4; ++d) {
      const int n = t.neighbor[king][d];
      if (t.cls[n] != CellClass::Castle && !black(n)) return false;
    }
    return true;
  }
  const int beyond = t.neighbor[king][dir];
  if (beyond < 0) return false;
  if (t.camp_adjacent.test(king)) return t.cls[beyond] == CellClass::Camp;
  return black(beyond);
}

std::vector<Coord> captures_after(const Board& after, Player mover, Coord to) {
  const Tables& t = tables();
  std::vector<Coord> out;
  const int ti = to.index();
  const auto king = after.king();
  for (int d = 0; d < 4; ++d) {
    const int x = t.neighbor[ti][d];
    if (x < 0) continue;
    if (mover == Player::Black && king && king->index() == x) {
      if (king_captured_by(after, x, d)) out.push_back(Coord::from_index(x));
      continue;
    }
    const Bitboard& enemies = mover == Player::White ? after.blacks() : after.whites();
    if (!enemies.test(x)) continue;
    if (t.cls[x] == CellClass::Camp) continue;  // soldiers inside a camp are immune
    const int beyond = t.neighbor[x][d];
    if (beyond >= 0 && is_anvil_for(after, mover, beyond)) out.push_back(Coord::from_index(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void validate(const Position& p, const Move& m) {
  if (m.from == m.to) throw RulesError(RulesErrorKind::NullMove, "null move");
  if (m.from.file != m.to.file && m.from.rank != m.to.rank)
    throw RulesError(RulesErrorKind::NotStraight, "move " + to_string(m) + " is not along a line");
  if (!is_legal(p, m)) throw RulesError(RulesErrorKind::IllegalMove, "illegal move " + to_string(m));
}

void require_ongoing(const Position& p) {
  if (outcome(p).terminal()) throw RulesError(RulesErrorKind::GameOver, "game over");
}

}  // namespace

std::string to_string(const Move& m) { return to_string(m.from) + "-" + to_string(m.to); }

Move parse_move(std::string_view text) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos)
    throw RulesError(RulesErrorKind::Malformed, "malformed move '" + std::string(text) + "'");
  const auto from = parse_coord(text.substr(0, dash));
  const auto to = parse_coord(text.substr(dash + 1));
  if (!from) throw RulesError(RulesErrorKind::Malformed, "bad square '" + std::string(text.substr(0, dash)) + "'");
  if (!to) throw RulesError(RulesErrorKind::Malformed, "bad square '" + std::string(text.substr(dash + 1)) + "'");
  if (*from == *to) throw RulesError(RulesErrorKind::NullMove, "null move");
  if (from->file != to->file && from->rank != to->rank)
    throw RulesError(RulesErrorKind::NotStraight, "move '" + std::string(text) + "' is not along a line");
  return {*from, *to};
}

std::string to_string(const Outcome& o) {
  std::string who;
  switch (o.kind) {
    case OutcomeKind::Ongoing: return "ongoing";
    case OutcomeKind::WhiteWin: who = "white wins"; break;
    case OutcomeKind::BlackWin: who = "black wins"; break;
    case OutcomeKind::Draw: who = "draw"; break;
  }
  switch (o.reason) {
    case OutcomeReason::None: return who;
    case OutcomeReason::Escape: return who + ": escape";
    case OutcomeReason::KingCaptured: return who + ": king captured";
    case OutcomeReason::Repetition: return who + ": repetition";
    case OutcomeReason::OpponentImmobile: return who + ": opponent immobile";
    case OutcomeReason::OpponentEliminated: return who + ": opponent eliminated";
  }
  return who;
}

namespace engine {

void generate_moves(const Board& board, Player side, std::vector<Move>& out) {
  const Tables& t = tables();
  // Iterate origins in (file, rank) order and emit each origin's targets in
  // (file, rank) order too, so the output is sorted without a sort pass.
  const Bitboard own = board.pieces_of(side);
  std::array<int, 8> buf{};
  for (int f = 0; f < kBoardSize; ++f) {
    for (int r = 0; r < kBoardSize; ++r) {
      const Coord from{f, r};
      const int fi = from.index();
      if (!own.test(fi)) continue;
      const Bitboard stop = board.occupancy() | barrier_for(fi);
      auto walk = [&](int dir, auto&& emit) {
        for (int n = t.neighbor[fi][dir]; n >= 0 && !stop.test(n); n = t.neighbor[n][dir]) emit(n);
      };
      // West and south rays are walked near to far, so emit them reversed.
      for (int dir : {3, 2}) {
        int len = 0;
        walk(dir, [&](int n) { buf[len++] = n; });
        while (len > 0) out.push_back({from, Coord::from_index(buf[--len])});
      }
      walk(0, [&](int n) { out.push_back({from, Coord::from_index(n)}); });
      walk(1, [&](int n) { out.push_back({from, Coord::from_index(n)}); });
    }
  }
}

bool has_any_move(const Board& board, Player side) {
  const Tables& t = tables();
  bool found = false;
  board.pieces_of(side).for_each([&](int fi) {
    if (found) return;
    const Bitboard stop = board.occupancy() | barrier_for(fi);
    for (int d = 0; d < 4 && !found; ++d) {
      const int n = t.neighbor[fi][d];
      if (n >= 0 && !stop.test(n)) found = true;
    }
  });
  return found;
}

std::vector<Coord> captures(const Board& before, const Move& m) {
  const auto piece = before.at(m.from);
  if (!piece) return {};
  Board after = before;
  after.relocate(m.from, m.to);
  return captures_after(after, owner(*piece), m.to);
}

MoveResult apply_unchecked(const Position& p, const Move& m) {
  const Player mover = p.to_move();
  Board board = p.board();
  const Piece piece = *board.at(m.from);
  board.relocate(m.from, m.to);
  std::vector<Coord> captured = captures_after(board, mover, m.to);
  bool king_taken = false;
  for (Coord c : captured) {
    if (board.at(c) == Piece::King) king_taken = true;
    board.remove(c);
  }

  const auto win = [&](OutcomeReason why) {
    return Outcome{mover == Player::White ? OutcomeKind::WhiteWin : OutcomeKind::BlackWin, why};
  };
  const Player next_side = opponent(mover);

  if (piece == Piece::King && tables().cls[m.to.index()] == CellClass::Escape)
    return {p.successor(std::move(board), false), std::move(captured), win(OutcomeReason::Escape)};
  if (king_taken)
    return {p.successor(std::move(board), false), std::move(captured), win(OutcomeReason::KingCaptured)};
  if (p.has_seen(StateKey{board, next_side}))
    return {p.successor(std::move(board), true), std::move(captured),
            Outcome{OutcomeKind::Draw, OutcomeReason::Repetition}};

  Outcome result = Outcome::ongoing();
  if (board.pieces_of(next_side).empty())
    result = win(OutcomeReason::OpponentEliminated);
  else if (!has_any_move(board, next_side))
    result = win(OutcomeReason::OpponentImmobile);
  return {p.successor(std::move(board), false), std::move(captured), result};
}

}  // namespace engine

std::vector<Move> legal_moves(const Position& p) {
  require_ongoing(p);
  std::vector<Move> out;
  out.reserve(128);
  engine::generate_moves(p.board(), p.to_move(), out);
  return out;
}

bool is_legal(const Position& p, const Move& m) {
  const Board& b = p.board();
  if (m.from == m.to) return false;
  if (m.from.file != m.to.file && m.from.rank != m.to.rank) return false;
  const int fi = m.from.index();
  if (!b.pieces_of(p.to_move()).test(fi)) return false;
  const Bitboard stop = b.occupancy() | barrier_for(fi);
  const int df = (m.to.file > m.from.file) - (m.to.file < m.from.file);
  const int dr = (m.to.rank > m.from.rank) - (m.to.rank < m.from.rank);
  Coord c = m.from;
  do {
    c = Coord{c.file + df, c.rank + dr};
    if (stop.test(c)) return false;
  } while (c != m.to);
  return true;
}

std::vector<Coord> captures_of(const Position& p, const Move& m) {
  require_ongoing(p);
  validate(p, m);
  return engine::captures(p.board(), m);
}

MoveResult apply_move(const Position& p, const Move& m) {
  require_ongoing(p);
  validate(p, m);
  return engine::apply_unchecked(p, m);
}

Outcome outcome(const Position& p) {
  const Board& b = p.board();
  const auto king = b.king();
  if (!king) return {OutcomeKind::BlackWin, OutcomeReason::KingCaptured};
  if (classify(*king) == CellClass::Escape) return {OutcomeKind::WhiteWin, OutcomeReason::Escape};
  if (p.repeated()) return {OutcomeKind::Draw, OutcomeReason::Repetition};
  const Player side = p.to_move();
  const OutcomeKind other_wins = side == Player::White ? OutcomeKind::BlackWin : OutcomeKind::WhiteWin;
  if (b.pieces_of(side).empty()) return {other_wins, OutcomeReason::OpponentEliminated};
  if (!engine::has_any_move(b, side)) return {other_wins, OutcomeReason::OpponentImmobile};
  return Outcome::ongoing();
}

bool king_surrounded(const Board& board, Coord king) {
  const Tables& t = tables();
  const int k = king.index();
  const auto black = [&](int cell) { return cell >= 0 && board.blacks().test(cell); };
  if (t.cls[k] == CellClass::Castle) {
    for (int d = 0; d < 4; ++d)
      if (!black(t.neighbor[k][d])) return false;
    return true;
  }
  if (t.castle_adjacent.test(k)) {
    for (int d = 0; d < 4; ++d) {
      const int n = t.neighbor[k][d];
      if (t.cls[n] != CellClass::Castle && !black(n)) return false;
    }
    return true;
  }
  if (t.camp_adjacent.test(k)) {
    for (int d = 0; d < 4; ++d) {
      const int n = t.neighbor[k][d];
      if (n >= 0 && t.cls[n] == CellClass::Camp && black(t.neighbor[k][d ^ 2])) return true;
    }
    return false;
  }
  for (int d = 0; d < 2; ++d)
    if (black(t.neighbor[k][d]) && black(t.neighbor[k][d ^ 2])) return true;
  return false;
}

}  // namespace tablut
