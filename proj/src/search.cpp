#include <algorithm>

#include "gts/config.hpp"
#include "gts/ordering.hpp"
#include "gts/parallel.hpp"
#include "gts/search.hpp"

namespace gts {

bool same_outcome(const SearchResult& a, const SearchResult& b) {
    return a.value == b.value && a.best_move == b.best_move &&
           a.nodes_visited == b.nodes_visited && a.cutoffs == b.cutoffs;
}

namespace detail {

Score alphabeta_rec(const GameState& state, int depth, Score alpha, Score beta,
                    const OrderingStrategy& ordering, SearchStats& stats) {
    ++stats.nodes;
    if (depth == 0 || state.is_terminal()) return state.evaluate();
    OrderedChildren children = ordered_children(state, ordering);
    const std::size_t n = children.moves.size();
    if (state.to_move() == Player::Maximizer) {
        Score value = kNegInf;
        for (std::size_t i = 0; i < n; ++i) {
            value = std::max(value, alphabeta_rec(state.apply_unchecked(children.moves[i]),
                                                  depth - 1, alpha, beta, ordering, stats));
            alpha = std::max(alpha, value);
            if (beta <= alpha) {
                if (i + 1 < n) ++stats.cutoffs;
                break;
            }
        }
        return value;
    }
    Score value = kPosInf;
    for (std::size_t i = 0; i < n; ++i) {
        value = std::min(value, alphabeta_rec(state.apply_unchecked(children.moves[i]),
                                              depth - 1, alpha, beta, ordering, stats));
        beta = std::min(beta, value);
        if (beta <= alpha) {
            if (i + 1 < n) ++stats.cutoffs;
            break;
        }
    }
    return value;
}

RootAggregate aggregate_root(const std::vector<RootChildRecord>& records, bool maximizing) {
    RootAggregate out;
    out.value = maximizing ? kNegInf : kPosInf;
    for (const auto& r : records)
        out.value = maximizing ? std::max(out.value, r.value) : std::min(out.value, r.value);

    // Prefer exact returns: an exact value is the child's true value, a
    // fail-soft bound equal to the best value does not certify optimality.
    Score best_exact = maximizing ? kNegInf : kPosInf;
    bool have_exact = false;
    for (const auto& r : records) {
        if (!r.exact) continue;
        if (!have_exact || (maximizing ? r.value > best_exact : r.value < best_exact)) {
            best_exact = r.value;
            have_exact = true;
            out.best_move = r.move;
        }
    }
    if (!have_exact) {
        for (const auto& r : records) {
            if (r.value == out.value) {
                out.best_move = r.move;
                break;
            }
        }
    }
    return out;
}

namespace {

Score minimax_rec(const GameState& state, int depth, SearchStats& stats) {
    ++stats.nodes;
    if (depth == 0 || state.is_terminal()) return state.evaluate();
    const bool maximizing = state.to_move() == Player::Maximizer;
    Score value = maximizing ? kNegInf : kPosInf;
    for (const auto& m : state.legal_moves()) {
        Score v = minimax_rec(state.apply_unchecked(m), depth - 1, stats);
        value = maximizing ? std::max(value, v) : std::min(value, v);
    }
    return value;
}

}  // namespace
}  // namespace detail

SearchResult minimax(const GameState& state, int depth) {
    const auto start = std::chrono::steady_clock::now();
    detail::SearchStats stats;
    SearchResult result;
    ++stats.nodes;  // the root invocation
    if (depth == 0 || state.is_terminal()) {
        result.value = state.evaluate();
    } else {
        const bool maximizing = state.to_move() == Player::Maximizer;
        Score value = maximizing ? kNegInf : kPosInf;
        for (const auto& m : state.legal_moves()) {
            Score v = detail::minimax_rec(state.apply_unchecked(m), depth - 1, stats);
            if (maximizing ? v > value : v < value) {
                value = v;
                result.best_move = m;  // strict improvement: lowest id wins ties
            }
        }
        result.value = value;
    }
    result.nodes_visited = stats.nodes;
    result.cutoffs = 0;
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

SearchResult alphabeta(const GameState& state, int depth, SearchWindow window,
                       const OrderingStrategy& ordering) {
    if (window.alpha >= window.beta)
        throw InvalidWindow("alpha must be strictly below beta");
    const auto start = std::chrono::steady_clock::now();
    detail::SearchStats stats;
    SearchResult result;
    ++stats.nodes;
    if (depth == 0 || state.is_terminal()) {
        result.value = state.evaluate();
    } else {
        OrderedChildren children = ordered_children(state, ordering);
        const std::size_t n = children.moves.size();
        std::vector<detail::RootChildRecord> records;
        records.reserve(n);
        const bool maximizing = state.to_move() == Player::Maximizer;
        Score alpha = window.alpha;
        Score beta = window.beta;
        Score value = maximizing ? kNegInf : kPosInf;
        for (std::size_t i = 0; i < n; ++i) {
            const Move& m = children.moves[i];
            Score v = detail::alphabeta_rec(state.apply_unchecked(m), depth - 1, alpha,
                                            beta, ordering, stats);
            records.push_back({static_cast<int>(i), m, v, v > alpha && v < beta,
                               alpha, beta});
            if (maximizing) {
                value = std::max(value, v);
                alpha = std::max(alpha, value);
            } else {
                value = std::min(value, v);
                beta = std::min(beta, value);
            }
            if (beta <= alpha) {
                if (i + 1 < n) ++stats.cutoffs;
                break;
            }
        }
        auto agg = detail::aggregate_root(records, maximizing);
        result.value = agg.value;
        result.best_move = agg.best_move;
    }
    result.nodes_visited = stats.nodes;
    result.cutoffs = stats.cutoffs;
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

SearchResult search(const GameState& state, const SearchConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    SearchResult result;
    switch (config.algo) {
        case Algorithm::Minimax:
            result = minimax(state, config.depth);
            break;
        case Algorithm::AlphaBeta:
            result = alphabeta(state, config.depth, SearchWindow{}, config.ordering);
            break;
        case Algorithm::Parallel:
            result = parallel_root_split(state, config.depth, config);
            break;
    }
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

}  // namespace gts
