#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "tablut/board.hpp"
#include "tablut/coord.hpp"

namespace tablut {

struct Move;

// One of the 8 symmetries of the square board. Ids 0..3 are rotations by
// id*90 degrees counter-clockwise; ids 4..7 apply a left-right mirror first,
// then the same rotation.
class Transform {
 public:
  constexpr Transform() = default;
  static constexpr Transform from_id(int id) { return Transform(static_cast<std::uint8_t>(id & 7)); }

  static constexpr Transform identity() { return from_id(0); }
  static constexpr Transform rotate90() { return from_id(1); }
  static constexpr Transform rotate180() { return from_id(2); }
  static constexpr Transform rotate270() { return from_id(3); }
  static constexpr Transform mirror_files() { return from_id(4); }

  static const std::array<Transform, 8>& all();

  constexpr int id() const { return id_; }
  std::string_view name() const;

  Coord apply(Coord c) const;
  // (*this) after `first`: apply `first`, then this.
  Transform after(Transform first) const;
  Transform inverse() const;

  friend constexpr bool operator==(Transform, Transform) = default;

 private:
  constexpr explicit Transform(std::uint8_t id) : id_(id) {}
  std::uint8_t id_ = 0;
};

Board apply_transform(const Board& b, Transform t);
// The result starts a fresh history seeded with itself.
Position apply_transform(const Position& p, Transform t);
Move apply_transform(const Move& m, Transform t);

}  // namespace tablut
