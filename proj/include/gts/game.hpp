#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gts/types.hpp"

namespace gts {

// ---------------------------------------------------------------------------
// Moves

struct ChessMove {
    std::uint8_t from = 0;  // rank * size + file, rank 0 = Maximizer back rank
    std::uint8_t to = 0;
    bool promotion = false;  // pawn reaches the last rank, becomes a queen

    bool operator==(const ChessMove&) const = default;
};

struct TttMove {
    std::uint8_t cell = 0;  // row-major 0..8

    bool operator==(const TttMove&) const = default;
};

struct SyntheticMove {
    std::uint8_t child = 0;

    bool operator==(const SyntheticMove&) const = default;
};

/// A move paired with its ordinal position in the parent state's canonical
/// move list. The id is what tie-breaking rules refer to.
struct Move {
    int id = 0;
    std::variant<ChessMove, TttMove, SyntheticMove> payload;

    bool operator==(const Move&) const = default;
};

// ---------------------------------------------------------------------------
// Synthetic trees

/// Parameters of a deterministic uniform tree. Leaf values are a pure
/// function of (seed, path): hashing the path with splitmix64 and mapping
/// into [leaf_lo, leaf_hi]. An explicit leaf table (row-major by path)
/// overrides the seeded values; used to pin down hand-built fixtures.
struct SyntheticTreeParams {
    int branching = 2;
    int depth = 0;
    std::uint64_t seed = 0;
    Score leaf_lo = 0;
    Score leaf_hi = 100;
    std::shared_ptr<const std::vector<Score>> explicit_leaves;

    bool operator==(const SyntheticTreeParams& o) const {
        return branching == o.branching && depth == o.depth && seed == o.seed &&
               leaf_lo == o.leaf_lo && leaf_hi == o.leaf_hi &&
               explicit_leaves == o.explicit_leaves;
    }
};

inline constexpr int kMaxSyntheticDepth = 32;
inline constexpr int kMaxSyntheticBranching = 255;

// ---------------------------------------------------------------------------
// Positions

/// N x N board, rank-major. Positive piece codes belong to the Maximizer.
struct ChessBoard {
    int size = 8;
    std::array<std::int8_t, 64> squares{};  // first size*size entries in use

    bool operator==(const ChessBoard&) const = default;
};

enum ChessPiece : std::int8_t {
    kEmpty = 0,
    kPawn = 1,
    kKnight = 2,
    kBishop = 3,
    kRook = 4,
    kQueen = 5,
    kKing = 6,
};

struct TttBoard {
    // +1 Maximizer mark, -1 Minimizer mark, 0 empty; row-major.
    std::array<std::int8_t, 9> cells{};

    bool operator==(const TttBoard&) const = default;
};

struct SyntheticNode {
    SyntheticTreeParams params;
    std::array<std::uint8_t, kMaxSyntheticDepth> path{};
    int path_len = 0;

    bool operator==(const SyntheticNode& o) const {
        if (!(params == o.params) || path_len != o.path_len) return false;
        for (int i = 0; i < path_len; ++i)
            if (path[i] != o.path[i]) return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// GameState

/// Immutable position in one of the three supported games. Value semantics:
/// applying a move returns a new state, the original is never touched.
class GameState {
public:
    /// Initial placement for board sizes 4, 5, 6, 8. Throws InvalidParams
    /// for other sizes.
    static GameState chess_initial(int board_size);

    /// Parses the rank-per-line text format (top rank first, uppercase =
    /// Maximizer, '.' = empty, final line "max" or "min").
    static GameState chess_from_text(std::string_view text);

    static GameState tictactoe_initial();

    /// Root of a deterministic uniform tree. Throws InvalidParams when
    /// branching < 1, lo > hi, or the params exceed the supported limits.
    static GameState make_synthetic(const SyntheticTreeParams& params);

    Player to_move() const noexcept { return to_move_; }
    int ply() const noexcept { return ply_; }

    /// True iff the game has ended here: no legal moves, a captured king,
    /// a completed tic-tac-toe line or full board, or synthetic depth
    /// exhausted.
    bool is_terminal() const;

    /// Static evaluation from the Maximizer's viewpoint: chess material sum,
    /// tic-tac-toe +1/-1/0, synthetic leaf value (0 at interior nodes).
    Score evaluate() const;

    /// All legal moves in canonical order (chess: ascending from-square,
    /// then to-square, then promotion flag; others: index order). Empty
    /// iff the state is terminal.
    std::vector<Move> legal_moves() const;

    /// Successor state; flips the player to move and increments ply.
    /// Throws IllegalMove when the move is not legal here.
    GameState apply_move(const Move& m) const;

    /// Same as apply_move without legality validation. Precondition: m came
    /// from legal_moves() of this exact state.
    GameState apply_unchecked(const Move& m) const;

    /// Rank-per-line rendering of a chess position (the --position file
    /// format). Tic-tac-toe renders as a 3-line grid, synthetic as a
    /// parameter summary.
    std::string to_text() const;

    bool is_chess() const noexcept { return std::holds_alternative<ChessBoard>(position_); }
    bool is_tictactoe() const noexcept { return std::holds_alternative<TttBoard>(position_); }
    bool is_synthetic() const noexcept { return std::holds_alternative<SyntheticNode>(position_); }

    const ChessBoard& chess_board() const { return std::get<ChessBoard>(position_); }
    const TttBoard& ttt_board() const { return std::get<TttBoard>(position_); }
    const SyntheticNode& synthetic_node() const { return std::get<SyntheticNode>(position_); }

    bool operator==(const GameState&) const = default;

private:
    GameState() = default;

    std::variant<ChessBoard, TttBoard, SyntheticNode> position_;
    Player to_move_ = Player::Maximizer;
    int ply_ = 0;
};

// ---------------------------------------------------------------------------
// Game-specific helpers (implemented per game, used by GameState dispatch)

namespace chess {

struct ParsedPosition {
    ChessBoard board;
    Player to_move;
};

ChessBoard initial_board(int board_size);
ParsedPosition parse_text(std::string_view text);
std::string to_text(const ChessBoard& b, Player to_move);
std::vector<Move> legal_moves(const ChessBoard& b, Player side);
bool has_any_move(const ChessBoard& b, Player side);
bool king_missing(const ChessBoard& b);
Score material(const ChessBoard& b);
void apply(ChessBoard& b, Player side, const ChessMove& m);
bool is_pseudo_legal(const ChessBoard& b, Player side, const ChessMove& m);

/// "e2e4"-style serialization; promotions get a trailing 'q'.
std::string format_move(const ChessBoard& b, const ChessMove& m);

}  // namespace chess

namespace ttt {

std::vector<Move> legal_moves(const TttBoard& b);
Score line_score(const TttBoard& b);  // +1 / -1 / 0
bool board_full(const TttBoard& b);
std::string to_text(const TttBoard& b, Player to_move);

}  // namespace ttt

namespace synthetic {

/// Leaf value drawn from [lo, hi] by hashing (seed, path) with splitmix64.
Score leaf_value(const SyntheticTreeParams& p, const std::uint8_t* path, int len);
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace synthetic

/// Move serialization used by reports: chess "e2e4", tic-tac-toe and
/// synthetic the decimal cell/child index.
std::string format_move(const GameState& state, const Move& m);

}  // namespace gts
