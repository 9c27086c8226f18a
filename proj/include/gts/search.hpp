#pragma once

#include <chrono>
#include <optional>

#include "gts/game.hpp"
#include "gts/types.hpp"

namespace gts {

/// (alpha, beta) bounds. Defaults to the full window.
struct SearchWindow {
    Score alpha = kNegInf;
    Score beta = kPosInf;
};

struct OrderingStrategy {
    enum class Kind { None, Reorder, Beam };

    Kind kind = Kind::None;
    int beam_width = 0;  // meaningful for Beam only

    static OrderingStrategy none() { return {}; }
    static OrderingStrategy reorder() { return {Kind::Reorder, 0}; }
    static OrderingStrategy beam(int width) { return {Kind::Beam, width}; }

    bool operator==(const OrderingStrategy&) const = default;
};

struct SearchResult {
    Score value = 0;
    std::optional<Move> best_move;            // absent iff terminal or depth 0
    std::uint64_t nodes_visited = 0;          // search invocations, root included
    std::uint64_t cutoffs = 0;                // beta <= alpha breaks that skipped children
    std::chrono::nanoseconds elapsed{0};
};

/// Equality on everything except the timing.
bool same_outcome(const SearchResult& a, const SearchResult& b);

/// Exhaustive depth-limited minimax. Root tie-break: lowest move id.
SearchResult minimax(const GameState& state, int depth);

/// Fail-soft alpha-beta. With the full window the value equals the minimax
/// value. Children pass through the ordering strategy at every interior
/// node. Throws InvalidWindow when alpha >= beta, InvalidWidth for a beam
/// width < 1.
SearchResult alphabeta(const GameState& state, int depth,
                       SearchWindow window = {},
                       const OrderingStrategy& ordering = {});

namespace detail {

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t cutoffs = 0;
};

/// Recursive fail-soft engine shared by the sequential and parallel searches.
Score alphabeta_rec(const GameState& state, int depth, Score alpha, Score beta,
                    const OrderingStrategy& ordering, SearchStats& stats);

/// Per-root-child record. `exact` means the return landed strictly inside
/// the window used, i.e. it is the child's true value.
struct RootChildRecord {
    int order_index = 0;
    Move move;
    Score value = 0;
    bool exact = false;
    Score alpha_used = kNegInf;
    Score beta_used = kPosInf;
};

/// Folds child records into the root value and best move. Best move: the
/// child earliest in exploration order whose exact value equals the best
/// exact value; when nothing is exact (narrow-window fail), the earliest
/// child attaining the accumulated fail-soft value.
struct RootAggregate {
    Score value = 0;
    std::optional<Move> best_move;
};
RootAggregate aggregate_root(const std::vector<RootChildRecord>& records,
                             bool maximizing);

}  // namespace detail

}  // namespace gts
