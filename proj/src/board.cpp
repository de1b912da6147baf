#include "tablut/board.hpp"

#include <array>
#include <stdexcept>

namespace tablut {

namespace {

struct Geometry {
  std::array<CellClass, kNumCells> cls{};
  std::array<std::int8_t, kNumCells> camp{};
  std::array<int, kNumCellClasses> counts{};
};

// Each camp is three edge cells plus the cell one step inward from the middle.
constexpr std::array<std::array<Coord, 4>, 4> kCamps = {{
    {{{3, 0}, {4, 0}, {5, 0}, {4, 1}}},  // d1 e1 f1 e2
    {{{3, 8}, {4, 8}, {5, 8}, {4, 7}}},  // d9 e9 f9 e8
    {{{0, 3}, {0, 4}, {0, 5}, {1, 4}}},  // a4 a5 a6 b5
    {{{8, 3}, {8, 4}, {8, 5}, {7, 4}}},  // i4 i5 i6 h5
}};

Geometry build_geometry() {
  Geometry g;
  g.camp.fill(-1);
  for (int i = 0; i < kNumCells; ++i) {
    const Coord c = Coord::from_index(i);
    const bool edge_f = c.file == 0 || c.file == kBoardSize - 1;
    const bool edge_r = c.rank == 0 || c.rank == kBoardSize - 1;
    if (edge_f && edge_r)
      g.cls[i] = CellClass::Corner;
    else if (edge_f || edge_r)
      g.cls[i] = CellClass::Escape;
    else
      g.cls[i] = CellClass::Plain;
  }
  for (int group = 0; group < 4; ++group) {
    for (Coord c : kCamps[group]) {
      g.cls[c.index()] = CellClass::Camp;
      g.camp[c.index()] = static_cast<std::int8_t>(group);
    }
  }
  g.cls[kCastle.index()] = CellClass::Castle;
  for (CellClass cls : g.cls) ++g.counts[static_cast<int>(cls)];
  return g;
}

const Geometry& geometry() {
  static const Geometry g = build_geometry();
  return g;
}

}  // namespace

std::string to_string(Coord c) {
  return {static_cast<char>('a' + c.file), static_cast<char>('1' + c.rank)};
}

std::optional<Coord> parse_coord(std::string_view text) {
  if (text.size() != 2) return std::nullopt;
  const int f = text[0] - 'a';
  const int r = text[1] - '1';
  if (!Coord::on_board(f, r)) return std::nullopt;
  return Coord{f, r};
}

std::string_view to_string(CellClass cls) {
  switch (cls) {
    case CellClass::Castle: return "castle";
    case CellClass::Camp: return "camp";
    case CellClass::Escape: return "escape";
    case CellClass::Corner: return "corner";
    case CellClass::Plain: return "plain";
  }
  return "?";
}

CellClass classify(Coord c) { return geometry().cls[c.index()]; }

int camp_group(Coord c) { return geometry().camp[c.index()]; }

int class_count(CellClass cls) { return geometry().counts[static_cast<int>(cls)]; }

std::string_view to_string(Player p) { return p == Player::White ? "white" : "black"; }

std::optional<Piece> Board::at(Coord c) const {
  if (blacks_.test(c)) return Piece::BlackSoldier;
  if (whites_.test(c)) return Piece::WhiteSoldier;
  if (king_ == c.index()) return Piece::King;
  return std::nullopt;
}

void Board::place(Coord c, Piece p) {
  if (occupied_.test(c)) throw BoardError("cell " + to_string(c) + " is already occupied");
  switch (p) {
    case Piece::BlackSoldier:
    case Piece::WhiteSoldier:
      if (c == kCastle) throw BoardError("a soldier cannot stand on the castle");
      (p == Piece::BlackSoldier ? blacks_ : whites_).set(c);
      break;
    case Piece::King:
      if (king_ >= 0) throw BoardError("board already has a king");
      king_ = static_cast<std::int8_t>(c.index());
      break;
  }
  occupied_.set(c);
}

void Board::remove(Coord c) {
  blacks_.reset(c);
  whites_.reset(c);
  if (king_ == c.index()) king_ = -1;
  occupied_.reset(c);
}

void Board::relocate(Coord from, Coord to) {
  const auto piece = at(from);
  if (!piece) throw BoardError("no piece on " + to_string(from));
  remove(from);
  place(to, *piece);
}

std::optional<Coord> Board::king() const {
  if (king_ < 0) return std::nullopt;
  return Coord::from_index(king_);
}

Bitboard Board::pieces_of(Player p) const {
  if (p == Player::Black) return blacks_;
  Bitboard b = whites_;
  if (king_ >= 0) b.set(static_cast<int>(king_));
  return b;
}

std::uint64_t hash_value(const StateKey& key) {
  // splitmix64 finalizer over the two occupancy words, the king and the side.
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  const Board& b = key.board;
  std::uint64_t h = mix(b.blacks().lo());
  h = mix(h ^ b.blacks().hi());
  h = mix(h ^ b.whites().lo());
  h = mix(h ^ b.whites().hi());
  const auto k = b.king();
  h = mix(h ^ static_cast<std::uint64_t>(k ? k->index() + 1 : 0));
  return mix(h ^ static_cast<std::uint64_t>(key.to_move));
}

struct Position::HistoryNode {
  StateKey key;
  std::uint64_t hash;
  int pieces;
  std::size_t depth;
  std::shared_ptr<const HistoryNode> parent;
};

Position::Position(Board board, Player to_move) : key_{std::move(board), to_move} {
  history_ = std::make_shared<const HistoryNode>(
      HistoryNode{key_, hash_value(key_), key_.board.piece_count(), 1, nullptr});
}

std::size_t Position::seen_count() const { return history_->depth; }

bool Position::has_seen(const StateKey& key) const {
  const std::uint64_t h = hash_value(key);
  const int pieces = key.board.piece_count();
  // Piece counts never increase along a game, so older entries with more
  // pieces than `key` cannot match.
  for (const HistoryNode* n = history_.get(); n != nullptr && n->pieces <= pieces; n = n->parent.get()) {
    if (n->hash == h && n->pieces == pieces && n->key == key) return true;
  }
  return false;
}

Position Position::successor(Board board, bool repeated) const {
  Position next;
  next.key_ = StateKey{std::move(board), opponent(key_.to_move)};
  next.repeated_ = repeated;
  if (repeated) {
    next.history_ = history_;
  } else {
    next.history_ = std::make_shared<const HistoryNode>(HistoryNode{
        next.key_, hash_value(next.key_), next.key_.board.piece_count(), history_->depth + 1, history_});
  }
  return next;
}

Position initial_position() {
  Board b;
  b.place(kCastle, Piece::King);
  for (int d = 1; d <= 2; ++d) {
    b.place({4, 4 + d}, Piece::WhiteSoldier);
    b.place({4, 4 - d}, Piece::WhiteSoldier);
    b.place({4 + d, 4}, Piece::WhiteSoldier);
    b.place({4 - d, 4}, Piece::WhiteSoldier);
  }
  for (int i = 0; i < kNumCells; ++i) {
    const Coord c = Coord::from_index(i);
    if (classify(c) == CellClass::Camp) b.place(c, Piece::BlackSoldier);
  }
  return Position(std::move(b), Player::White);
}

}  // namespace tablut
