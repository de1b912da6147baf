#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tablut/board.hpp"

namespace tablut {

// Tablut Board Notation: nine '/'-separated rank fields, rank 9 first, using
// 'B', 'W', 'K' and digits 1..9 for maximal runs of empty cells, followed by a
// single space and 'w' or 'b'.
//
//   3BBB3/4B4/4W4/B3W3B/BBWWKWWBB/B3W3B/4W4/4B4/3BBB3 w

enum class TbnErrorKind { Malformed, TwoKings, SoldierOnCastle, TooManyBlack, TooManyWhite };

class TbnError : public std::invalid_argument {
 public:
  TbnError(TbnErrorKind kind, std::string token, const std::string& what)
      : std::invalid_argument(what), kind_(kind), token_(std::move(token)) {}

  TbnErrorKind kind() const { return kind_; }
  // The offending piece of input.
  const std::string& token() const { return token_; }

 private:
  TbnErrorKind kind_;
  std::string token_;
};

std::string format_tbn(const Board& board, Player to_move);
std::string format_tbn(const Position& p);

// The returned position has a fresh history seeded with itself.
Position parse_tbn(std::string_view text);

}  // namespace tablut
