#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tablut {

inline constexpr int kBoardSize = 9;
inline constexpr int kNumCells = kBoardSize * kBoardSize;

// A board cell. Files a..i map to 0..8 left to right, ranks 1..9 to 0..8
// bottom to top. Ordering is (file, rank), which agrees with the ordering of
// the text form ("a1" < "a2" < ... < "i9").
struct Coord {
  std::int8_t file = 0;
  std::int8_t rank = 0;

  constexpr Coord() = default;
  constexpr Coord(int f, int r)
      : file(static_cast<std::int8_t>(f)), rank(static_cast<std::int8_t>(r)) {}

  static constexpr Coord from_index(int index) { return {index % kBoardSize, index / kBoardSize}; }
  constexpr int index() const { return rank * kBoardSize + file; }

  static constexpr bool on_board(int f, int r) {
    return f >= 0 && f < kBoardSize && r >= 0 && r < kBoardSize;
  }

  friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
  friend constexpr bool operator==(const Coord&, const Coord&) = default;
};

std::string to_string(Coord c);
std::optional<Coord> parse_coord(std::string_view text);

enum class CellClass : std::uint8_t { Castle, Camp, Escape, Corner, Plain };

inline constexpr int kNumCellClasses = 5;

std::string_view to_string(CellClass cls);

CellClass classify(Coord c);

// Camp group 0..3 for camp cells, -1 otherwise. Cells in the same group form
// one T-shaped camp.
int camp_group(Coord c);

inline bool is_citadel(Coord c) {
  const CellClass cls = classify(c);
  return cls == CellClass::Castle || cls == CellClass::Camp;
}

int class_count(CellClass cls);

inline constexpr Coord kCastle{4, 4};

}  // namespace tablut
