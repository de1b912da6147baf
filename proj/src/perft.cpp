#include <thread>

#include "tablut/enumeration.hpp"

namespace tablut::enumeration {

namespace {

std::uint64_t perft_from(const Position& p, int depth) {
  std::vector<Move> moves;
  moves.reserve(128);
  engine::generate_moves(p.board(), p.to_move(), moves);
  if (depth == 1) return moves.size();
  std::uint64_t nodes = 0;
  for (const Move& m : moves) {
    const MoveResult r = engine::apply_unchecked(p, m);
    nodes += r.outcome.terminal() ? 1 : perft_from(r.next, depth - 1);
  }
  return nodes;
}

}  // namespace

std::uint64_t perft(const Position& p, int depth, unsigned workers) {
  if (depth < 0 || depth > kMaxPerftDepth)
    throw EnumerationError("perft: depth " + std::to_string(depth) + " outside 0.." + std::to_string(kMaxPerftDepth));
  if (depth == 0 || outcome(p).terminal()) return 1;
  if (workers <= 1 || depth == 1) return perft_from(p, depth);

  std::vector<Move> moves;
  engine::generate_moves(p.board(), p.to_move(), moves);
  std::vector<std::uint64_t> partial(workers, 0);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < moves.size(); i += workers) {
          const MoveResult r = engine::apply_unchecked(p, moves[i]);
          partial[w] += r.outcome.terminal() ? 1 : perft_from(r.next, depth - 1);
        }
      });
    }
  }
  std::uint64_t total = 0;
  for (auto n : partial) total += n;
  return total;
}

}  // namespace tablut::enumeration
