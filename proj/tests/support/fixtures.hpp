#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "tablut/enumeration.hpp"
#include "tablut/rules.hpp"
#include "tablut/tbn.hpp"

namespace tablut::testing {

inline Coord at(const char* text) { return *parse_coord(text); }
inline Move mv(const char* text) { return parse_move(text); }

// Board with an arbitrary mix of up to 16 blacks, 8 whites and an optional
// king, placed uniformly over the cells the board invariants allow.
inline Board random_board(std::mt19937_64& rng, bool with_king = true) {
  std::vector<int> cells;
  for (int i = 0; i < kNumCells; ++i) cells.push_back(i);
  std::shuffle(cells.begin(), cells.end(), rng);
  std::uniform_int_distribution<int> nb(0, kMaxBlackSoldiers);
  std::uniform_int_distribution<int> nw(0, kMaxWhiteSoldiers);
  const int blacks = nb(rng);
  const int whites = nw(rng);
  Board b;
  std::size_t next = 0;
  if (with_king) b.place(Coord::from_index(cells[next++]), Piece::King);
  auto place_soldiers = [&](int count, Piece piece) {
    while (count > 0 && next < cells.size()) {
      const Coord c = Coord::from_index(cells[next++]);
      if (c == kCastle) continue;
      b.place(c, piece);
      --count;
    }
  };
  place_soldiers(blacks, Piece::BlackSoldier);
  place_soldiers(whites, Piece::WhiteSoldier);
  return b;
}

inline Position random_position(std::mt19937_64& rng) {
  std::bernoulli_distribution king(0.9);
  std::bernoulli_distribution white(0.5);
  return Position(random_board(rng, king(rng)), white(rng) ? Player::White : Player::Black);
}

// Non-terminal positions reached by random play from the start, 8 to 40
// plies in.
inline std::vector<Position> midgame_positions(std::size_t count, std::uint64_t seed) {
  std::vector<Position> out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> plies(8, 40);
  while (out.size() < count) {
    const auto trace = enumeration::random_playout(initial_position(), rng(), plies(rng));
    if (trace.steps.empty() || trace.final_outcome().terminal()) continue;
    out.push_back(trace.steps.back().position);
  }
  return out;
}

inline std::vector<Move> sorted(std::vector<Move> moves) {
  std::sort(moves.begin(), moves.end());
  return moves;
}

}  // namespace tablut::testing

namespace tablut::testing {

struct Placement {
  const char* cell;
  char piece;  // 'B', 'W' or 'K'
};

inline Position position_of(std::initializer_list<Placement> pieces, Player to_move) {
  Board b;
  for (const auto& [cell, piece] : pieces)
    b.place(at(cell), piece == 'B' ? Piece::BlackSoldier : piece == 'W' ? Piece::WhiteSoldier : Piece::King);
  return Position(std::move(b), to_move);
}

}  // namespace tablut::testing
