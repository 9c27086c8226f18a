#pragma once

#include <cstdint>
#include <string>

#include "gts/game.hpp"
#include "gts/search.hpp"

namespace gts {

enum class Algorithm { Minimax, AlphaBeta, Parallel };

enum class WindowMode { Isolated, Shared };

struct GameSpec {
    enum class Kind { Chess, TicTacToe, Synthetic };

    Kind kind = Kind::Chess;
    int board_size = 8;
    SyntheticTreeParams synthetic;
    std::string position_file;  // chess only; overrides the initial placement
    std::string position_text;  // loaded file contents

    bool operator==(const GameSpec&) const = default;
};

struct SearchConfig {
    Algorithm algo = Algorithm::AlphaBeta;
    GameSpec game;
    int depth = 1;
    OrderingStrategy ordering;
    WindowMode window_mode = WindowMode::Isolated;
    int workers = 1;
    std::uint64_t seed = 0;
    int repeats = 3;

    /// Throws InvalidParams on violated invariants (workers > 1 outside
    /// Parallel, beam width < 1, minimax with an ordering strategy, ...).
    void validate() const;

    bool operator==(const SearchConfig&) const = default;
};

/// Builds the configured start state; reads the position file when set.
GameState build_state(const GameSpec& spec);

std::string to_string(Algorithm a);
std::string to_string(WindowMode m);
std::string to_string(const OrderingStrategy& o);
std::string to_string(const GameSpec& g);

/// Dispatches to minimax, alphabeta, or parallel_root_split and times the
/// dispatched call.
SearchResult search(const GameState& state, const SearchConfig& config);

}  // namespace gts
