#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "tablut/board.hpp"
#include "tablut/counting.hpp"
#include "tablut/rules.hpp"

namespace tablut::enumeration {

using counting::BigCount;

inline constexpr std::size_t kMaxPlacementRegion = 14;
inline constexpr int kMaxPerftDepth = 6;
inline constexpr std::size_t kDefaultReachableBudget = 5'000'000;

class EnumerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Counts assignments of `blacks` black and `whites` white markers to distinct
// cells of `region` by walking every assignment. Region size is capped at
// kMaxPlacementRegion.
BigCount enumerate_placements(std::span<const Coord> region, unsigned blacks, unsigned whites);

struct GeometryReport {
  int king_cells_total = 0;
  int king_cells_non_castle = 0;
  int castle_adjacent_cells = 0;
  int camp_adjacent_king_cells = 0;
  int camp_capture_configs = 0;
  int ordinary_capture_cells = 0;
  int ordinary_capture_configs = 0;
  int escape_cells = 0;
};

GeometryReport derive_geometry();

// Minimal sets of black-occupied cells that surround a king standing on
// `king`, found by trying every subset of its neighbours against
// king_surrounded().
std::vector<std::vector<Coord>> minimal_capture_sets(Coord king);

// Move sequences of exactly `depth` plies; a game-ending move is a leaf and is
// not expanded. A terminal root counts as a single leaf. `workers` > 1 splits
// the root moves across threads; the result does not depend on it.
std::uint64_t perft(const Position& p, int depth, unsigned workers = 1);

Position canonicalize(const Position& p);

// Distinct placements of the 8 transforms of p.
int orbit_size(const Position& p);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t visited, std::size_t frontier, int depth);
  std::size_t visited() const { return visited_; }
  std::size_t frontier() const { return frontier_; }
  int depth() const { return depth_; }

 private:
  std::size_t visited_;
  std::size_t frontier_;
  int depth_;
};

// Thrown when a visited non-terminal state breaks a reachability invariant.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Distinct state keys (placement + side to move) reachable within `depth`
// plies, optionally identified up to symmetry.
std::uint64_t reachable_count(const Position& p, int depth, bool canonical,
                              std::size_t budget = kDefaultReachableBudget);

struct PlayoutStep {
  Move move;
  std::vector<Coord> captured;
  Position position;  // after the move
  Outcome outcome;
};

struct PlayoutTrace {
  Position start;
  std::vector<PlayoutStep> steps;

  Outcome final_outcome() const;
};

PlayoutTrace random_playout(const Position& p, std::uint64_t seed, std::size_t max_plies);

// Empty when the position satisfies the non-terminal reachability invariants;
// otherwise a description of the first violation.
std::string audit_non_terminal(const Position& p);
// Empty when `o` is the outcome implied by the position's standing conditions.
std::string audit_terminal(const Position& p, const Outcome& o);

}  // namespace tablut::enumeration
