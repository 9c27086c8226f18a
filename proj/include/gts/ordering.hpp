#pragma once

#include "gts/game.hpp"
#include "gts/search.hpp"

namespace gts {

struct OrderedChildren {
    std::vector<Move> moves;  // exploration order
    bool truncated = false;   // beam filtering dropped at least one child
};

/// Sorts moves by the one-ply static score of the successor: descending for
/// a Maximizer node, ascending for a Minimizer node. Stable, so ties keep
/// the canonical (ascending id) order. Precondition: moves == legal_moves(state).
OrderedChildren reorder(const GameState& state, std::vector<Move> moves);

/// reorder, then keep the first min(width, n) moves. Throws InvalidWidth
/// when width < 1.
OrderedChildren beam_filter(const GameState& state, std::vector<Move> moves, int width);

/// legal_moves(state) passed through the given strategy.
OrderedChildren ordered_children(const GameState& state, const OrderingStrategy& strategy);

}  // namespace gts
