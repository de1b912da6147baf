#include "tablut/tbn.hpp"

#include <cctype>

namespace tablut {

namespace {

char piece_char(Piece p) {
  switch (p) {
    case Piece::BlackSoldier: return 'B';
    case Piece::WhiteSoldier: return 'W';
    case Piece::King: return 'K';
  }
  return '?';
}

[[noreturn]] void fail(TbnErrorKind kind, std::string token, const std::string& msg) {
  throw TbnError(kind, token, "tbn: " + msg + " at '" + token + "'");
}

}  // namespace

std::string format_tbn(const Board& board, Player to_move) {
  std::string out;
  out.reserve(96);
  for (int r = kBoardSize - 1; r >= 0; --r) {
    int run = 0;
    for (int f = 0; f < kBoardSize; ++f) {
      const auto piece = board.at({f, r});
      if (!piece) {
        ++run;
        continue;
      }
      if (run > 0) out.push_back(static_cast<char>('0' + run));
      run = 0;
      out.push_back(piece_char(*piece));
    }
    if (run > 0) out.push_back(static_cast<char>('0' + run));
    if (r > 0) out.push_back('/');
  }
  out.push_back(' ');
  out.push_back(to_move == Player::White ? 'w' : 'b');
  return out;
}

std::string format_tbn(const Position& p) { return format_tbn(p.board(), p.to_move()); }

Position parse_tbn(std::string_view text) {
  const auto space = text.find(' ');
  if (space == std::string_view::npos) fail(TbnErrorKind::Malformed, std::string(text), "missing side to move");
  const std::string_view placement = text.substr(0, space);
  const std::string_view side = text.substr(space + 1);

  Player to_move;
  if (side == "w")
    to_move = Player::White;
  else if (side == "b")
    to_move = Player::Black;
  else
    fail(TbnErrorKind::Malformed, std::string(side), "side to move must be 'w' or 'b'");

  Board board;
  int rank = kBoardSize - 1;
  std::size_t field_start = 0;
  for (std::size_t pos = 0; pos <= placement.size(); ++pos) {
    if (pos < placement.size() && placement[pos] != '/') continue;
    const std::string_view field = placement.substr(field_start, pos - field_start);
    const std::string token(field);
    if (rank < 0) fail(TbnErrorKind::Malformed, token, "more than 9 ranks");

    int file = 0;
    bool prev_digit = false;
    for (char ch : field) {
      if (ch >= '1' && ch <= '9') {
        if (prev_digit) fail(TbnErrorKind::Malformed, token, "empty run not maximal");
        file += ch - '0';
        prev_digit = true;
        if (file > kBoardSize) fail(TbnErrorKind::Malformed, token, "rank longer than 9 cells");
        continue;
      }
      prev_digit = false;
      if (file >= kBoardSize) fail(TbnErrorKind::Malformed, token, "rank longer than 9 cells");
      const Coord c{file, rank};
      switch (ch) {
        case 'B':
        case 'W':
          if (c == kCastle) fail(TbnErrorKind::SoldierOnCastle, token, "soldier on the castle");
          board.place(c, ch == 'B' ? Piece::BlackSoldier : Piece::WhiteSoldier);
          break;
        case 'K':
          if (board.king()) fail(TbnErrorKind::TwoKings, token, "two kings");
          board.place(c, Piece::King);
          break;
        default:
          fail(TbnErrorKind::Malformed, token, std::string("unexpected character '") + ch + "'");
      }
      ++file;
    }
    if (file != kBoardSize) fail(TbnErrorKind::Malformed, token, "rank shorter than 9 cells");
    --rank;
    field_start = pos + 1;
  }
  if (rank != -1) fail(TbnErrorKind::Malformed, std::string(placement), "expected 9 ranks");
  if (board.black_count() > kMaxBlackSoldiers)
    fail(TbnErrorKind::TooManyBlack, std::string(placement), "more than 16 black soldiers");
  if (board.white_soldier_count() > kMaxWhiteSoldiers)
    fail(TbnErrorKind::TooManyWhite, std::string(placement), "more than 8 white soldiers");
  return Position(std::move(board), to_move);
}

}  // namespace tablut
