#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gts {

/// Evaluation score. Centipawn-like units for chess, raw leaf values for
/// synthetic trees, {-1, 0, +1} for tic-tac-toe terminals.
using Score = std::int64_t;

/// Sentinel window bounds. Reserved: evaluation never produces them.
inline constexpr Score kNegInf = -(Score{1} << 40);
inline constexpr Score kPosInf = Score{1} << 40;

enum class Player : std::uint8_t { Maximizer, Minimizer };

constexpr Player opponent(Player p) noexcept {
    return p == Player::Maximizer ? Player::Minimizer : Player::Maximizer;
}

struct IllegalMove : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidWindow : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidWidth : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyRoot : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TerminalRoot : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gts
