#pragma once

#include <cstdint>
#include <vector>

#include "tablut/board.hpp"
#include "tablut/rules.hpp"

// Reference move generator for cross-checking the engine. It tests every
// (from, to) pair of cells directly against the movement rule, using only
// classify() and camp_group(); nothing is shared with the engine's ray tables.
namespace tablut::oracle {

std::vector<Move> naive_moves(const Board& board, Player side);

// perft with the same leaf conventions as enumeration::perft, but expanding
// nodes with naive_moves. Successor positions still come from the engine's
// apply step.
std::uint64_t naive_perft(const Position& p, int depth);

}  // namespace tablut::oracle
