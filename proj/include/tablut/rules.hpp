#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tablut/board.hpp"
#include "tablut/coord.hpp"

namespace tablut {

struct Move {
  Coord from;
  Coord to;

  friend constexpr auto operator<=>(const Move&, const Move&) = default;
  friend constexpr bool operator==(const Move&, const Move&) = default;
};

std::string to_string(const Move& m);

enum class RulesErrorKind { GameOver, NullMove, NotStraight, IllegalMove, Malformed };

class RulesError : public std::invalid_argument {
 public:
  RulesError(RulesErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  RulesErrorKind kind() const { return kind_; }

 private:
  RulesErrorKind kind_;
};

// Parses "e8-e3". Checks shape only (null move, straight line), not legality.
Move parse_move(std::string_view text);

enum class OutcomeKind { Ongoing, WhiteWin, BlackWin, Draw };

enum class OutcomeReason {
  None,
  Escape,
  KingCaptured,
  Repetition,
  OpponentImmobile,
  OpponentEliminated,
};

struct Outcome {
  OutcomeKind kind = OutcomeKind::Ongoing;
  OutcomeReason reason = OutcomeReason::None;

  static constexpr Outcome ongoing() { return {}; }
  bool terminal() const { return kind != OutcomeKind::Ongoing; }

  friend constexpr bool operator==(const Outcome&, const Outcome&) = default;
};

// "ongoing", "white wins: escape", "draw: repetition", ...
std::string to_string(const Outcome& o);

struct MoveResult {
  Position next;
  std::vector<Coord> captured;  // ascending, at most 3
  Outcome outcome;
};

// Legal moves sorted by (from, to). Throws RulesError(GameOver) when the
// position is terminal.
std::vector<Move> legal_moves(const Position& p);

bool is_legal(const Position& p, const Move& m);

// Opposing pieces captured by m. Throws RulesError when m is not legal.
std::vector<Coord> captures_of(const Position& p, const Move& m);

MoveResult apply_move(const Position& p, const Move& m);

Outcome outcome(const Position& p);

// Static surround test for a king standing on `king`. Used to derive the
// capture configurations; the move-time capture additionally requires the
// arriving piece to be part of the surround.
bool king_surrounded(const Board& board, Coord king);

// The engine internals below skip legality and terminal checks. They exist for
// the perft and playout drivers which already know both.
namespace engine {

void generate_moves(const Board& board, Player side, std::vector<Move>& out);
bool has_any_move(const Board& board, Player side);
std::vector<Coord> captures(const Board& before, const Move& m);
MoveResult apply_unchecked(const Position& p, const Move& m);

}  // namespace engine

}  // namespace tablut
