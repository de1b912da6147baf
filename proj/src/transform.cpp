#include "tablut/transform.hpp"

#include "tablut/rules.hpp"

namespace tablut {

namespace {

constexpr int kCenter = kBoardSize / 2;

Coord map_coord(int id, Coord c) {
  int x = c.file - kCenter;
  int y = c.rank - kCenter;
  if (id & 4) x = -x;
  for (int k = 0; k < (id & 3); ++k) {
    const int t = x;
    x = -y;
    y = t;
  }
  return {x + kCenter, y + kCenter};
}

// Group tables computed once from the action on cells.
struct Tables {
  std::array<std::array<Coord, kNumCells>, 8> image{};
  std::array<std::array<std::uint8_t, 8>, 8> compose{};  // compose[u][t] = u after t
  std::array<std::uint8_t, 8> inverse{};
};

const Tables& tables() {
  static const Tables tbl = [] {
    Tables t;
    for (int id = 0; id < 8; ++id)
      for (int i = 0; i < kNumCells; ++i) t.image[id][i] = map_coord(id, Coord::from_index(i));
    // Two cells off every symmetry axis pin down the group element.
    const Coord probe_a{1, 0};
    const Coord probe_b{0, 2};
    for (int u = 0; u < 8; ++u) {
      for (int s = 0; s < 8; ++s) {
        const Coord ia = t.image[u][t.image[s][probe_a.index()].index()];
        const Coord ib = t.image[u][t.image[s][probe_b.index()].index()];
        for (int r = 0; r < 8; ++r) {
          if (t.image[r][probe_a.index()] == ia && t.image[r][probe_b.index()] == ib) {
            t.compose[u][s] = static_cast<std::uint8_t>(r);
            break;
          }
        }
      }
    }
    for (int u = 0; u < 8; ++u)
      for (int s = 0; s < 8; ++s)
        if (t.compose[u][s] == 0) t.inverse[u] = static_cast<std::uint8_t>(s);
    return t;
  }();
  return tbl;
}

}  // namespace

const std::array<Transform, 8>& Transform::all() {
  static const std::array<Transform, 8> ts = {from_id(0), from_id(1), from_id(2), from_id(3),
                                              from_id(4), from_id(5), from_id(6), from_id(7)};
  return ts;
}

std::string_view Transform::name() const {
  static constexpr std::array<std::string_view, 8> names = {
      "identity", "rotate90", "rotate180", "rotate270",
      "mirror",   "mirror+rotate90", "mirror+rotate180", "mirror+rotate270"};
  return names[id_];
}

Coord Transform::apply(Coord c) const { return tables().image[id_][c.index()]; }

Transform Transform::after(Transform first) const { return from_id(tables().compose[id_][first.id_]); }

Transform Transform::inverse() const { return from_id(tables().inverse[id_]); }

Board apply_transform(const Board& b, Transform t) {
  Board out;
  b.occupancy().for_each([&](int i) {
    const Coord c = Coord::from_index(i);
    out.place(t.apply(c), *b.at(c));
  });
  return out;
}

Position apply_transform(const Position& p, Transform t) {
  return Position(apply_transform(p.board(), t), p.to_move());
}

Move apply_transform(const Move& m, Transform t) { return {t.apply(m.from), t.apply(m.to)}; }

}  // namespace tablut
