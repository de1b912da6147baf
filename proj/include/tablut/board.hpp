#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "tablut/bitboard.hpp"
#include "tablut/coord.hpp"

namespace tablut {

enum class Piece : std::uint8_t { BlackSoldier, WhiteSoldier, King };
enum class Player : std::uint8_t { White, Black };

inline constexpr int kMaxBlackSoldiers = 16;
inline constexpr int kMaxWhiteSoldiers = 8;

constexpr Player owner(Piece p) { return p == Piece::BlackSoldier ? Player::Black : Player::White; }
constexpr Player opponent(Player p) { return p == Player::White ? Player::Black : Player::White; }

std::string_view to_string(Player p);

// Raised when a mutation would break a board invariant.
class BoardError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Piece placement. At most one piece per cell, at most one king, and no
// soldier on the castle. Soldier counts are capped only by the parser; the
// board itself accepts any count so test fixtures stay easy to build.
class Board {
 public:
  Board() = default;

  std::optional<Piece> at(Coord c) const;
  bool occupied(Coord c) const { return occupied_.test(c); }
  bool occupied(int i) const { return occupied_.test(i); }

  void place(Coord c, Piece p);
  void remove(Coord c);
  // Moves whatever stands on `from` to the empty cell `to`.
  void relocate(Coord from, Coord to);

  const Bitboard& blacks() const { return blacks_; }
  const Bitboard& whites() const { return whites_; }
  const Bitboard& occupancy() const { return occupied_; }
  std::optional<Coord> king() const;

  int black_count() const { return blacks_.count(); }
  int white_soldier_count() const { return whites_.count(); }
  int piece_count() const { return occupied_.count(); }

  // Pieces that belong to `p`, king included for White.
  Bitboard pieces_of(Player p) const;

  friend bool operator==(const Board&, const Board&) = default;
  friend auto operator<=>(const Board&, const Board&) = default;

 private:
  Bitboard blacks_;
  Bitboard whites_;
  Bitboard occupied_;
  std::int8_t king_ = -1;
};

struct StateKey {
  Board board;
  Player to_move = Player::White;

  friend bool operator==(const StateKey&, const StateKey&) = default;
  friend auto operator<=>(const StateKey&, const StateKey&) = default;
};

std::uint64_t hash_value(const StateKey& key);

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const { return hash_value(k); }
};

// Immutable game state: placement, side to move and the set of state keys
// seen since the game (or the parsed fragment) started. Equality compares the
// state key only; history is deliberately not part of a position's identity.
class Position {
 public:
  Position(Board board, Player to_move);

  const Board& board() const { return key_.board; }
  Player to_move() const { return key_.to_move; }
  const StateKey& key() const { return key_; }

  // Number of distinct keys in the history, this position's own key included.
  std::size_t seen_count() const;
  bool has_seen(const StateKey& key) const;
  // True when this position was reached by repeating an earlier state.
  bool repeated() const { return repeated_; }

  // Successor sharing this position's history. When `repeated` is set the
  // history is left unchanged since the key is already a member.
  Position successor(Board board, bool repeated) const;

  friend bool operator==(const Position& a, const Position& b) { return a.key_ == b.key_; }

 private:
  struct HistoryNode;

  Position() = default;

  StateKey key_;
  std::shared_ptr<const HistoryNode> history_;
  bool repeated_ = false;
};

Position initial_position();

}  // namespace tablut

template <>
struct std::hash<tablut::StateKey> : tablut::StateKeyHash {};
