#include <algorithm>

#include "gts/ordering.hpp"

namespace gts {

OrderedChildren reorder(const GameState& state, std::vector<Move> moves) {
    std::vector<std::pair<Score, Move>> scored;
    scored.reserve(moves.size());
    for (const auto& m : moves)
        scored.emplace_back(state.apply_unchecked(m).evaluate(), m);
    const bool descending = state.to_move() == Player::Maximizer;
    std::stable_sort(scored.begin(), scored.end(),
                     [descending](const auto& a, const auto& b) {
                         return descending ? a.first > b.first : a.first < b.first;
                     });
    OrderedChildren out;
    out.moves.reserve(scored.size());
    for (auto& [score, m] : scored) out.moves.push_back(m);
    return out;
}

OrderedChildren beam_filter(const GameState& state, std::vector<Move> moves, int width) {
    if (width < 1) throw InvalidWidth("beam width must be >= 1");
    OrderedChildren out = reorder(state, std::move(moves));
    if (static_cast<std::size_t>(width) < out.moves.size()) {
        out.moves.resize(static_cast<std::size_t>(width));
        out.truncated = true;
    }
    return out;
}

OrderedChildren ordered_children(const GameState& state, const OrderingStrategy& strategy) {
    switch (strategy.kind) {
        case OrderingStrategy::Kind::Reorder:
            return reorder(state, state.legal_moves());
        case OrderingStrategy::Kind::Beam:
            return beam_filter(state, state.legal_moves(), strategy.beam_width);
        case OrderingStrategy::Kind::None:
        default:
            return OrderedChildren{state.legal_moves(), false};
    }
}

}  // namespace gts
