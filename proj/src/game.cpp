#include <sstream>

#include "gts/game.hpp"

namespace gts {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > cap / (base == 0 ? 1 : base)) return cap + 1;
        v *= base;
    }
    return v;
}

}  // namespace

GameState GameState::chess_initial(int board_size) {
    GameState s;
    s.position_ = chess::initial_board(board_size);
    s.to_move_ = Player::Maximizer;
    return s;
}

GameState GameState::chess_from_text(std::string_view text) {
    auto parsed = chess::parse_text(text);
    GameState s;
    s.position_ = parsed.board;
    s.to_move_ = parsed.to_move;
    return s;
}

GameState GameState::tictactoe_initial() {
    GameState s;
    s.position_ = TttBoard{};
    s.to_move_ = Player::Maximizer;
    return s;
}

GameState GameState::make_synthetic(const SyntheticTreeParams& params) {
    if (params.branching < 1)
        throw InvalidParams("synthetic branching must be >= 1");
    if (params.branching > kMaxSyntheticBranching)
        throw InvalidParams("synthetic branching must be <= " +
                            std::to_string(kMaxSyntheticBranching));
    if (params.depth < 0 || params.depth > kMaxSyntheticDepth)
        throw InvalidParams("synthetic depth must be in 0.." +
                            std::to_string(kMaxSyntheticDepth));
    if (params.leaf_lo > params.leaf_hi)
        throw InvalidParams("synthetic leaf range is empty (lo > hi)");
    if (params.leaf_lo <= kNegInf || params.leaf_hi >= kPosInf)
        throw InvalidParams("synthetic leaf range collides with the score sentinels");
    if (params.explicit_leaves) {
        std::uint64_t want = checked_pow(static_cast<std::uint64_t>(params.branching),
                                         params.depth, std::uint64_t{1} << 32);
        if (params.explicit_leaves->size() != want)
            throw InvalidParams("explicit leaf table size does not match branching^depth");
    }
    GameState s;
    SyntheticNode node;
    node.params = params;
    s.position_ = node;
    s.to_move_ = Player::Maximizer;
    return s;
}

bool GameState::is_terminal() const {
    if (const auto* b = std::get_if<ChessBoard>(&position_))
        return chess::king_missing(*b) || !chess::has_any_move(*b, to_move_);
    if (const auto* b = std::get_if<TttBoard>(&position_))
        return ttt::line_score(*b) != 0 || ttt::board_full(*b);
    const auto& n = std::get<SyntheticNode>(position_);
    return n.path_len == n.params.depth;
}

Score GameState::evaluate() const {
    if (const auto* b = std::get_if<ChessBoard>(&position_)) return chess::material(*b);
    if (const auto* b = std::get_if<TttBoard>(&position_)) return ttt::line_score(*b);
    const auto& n = std::get<SyntheticNode>(position_);
    if (n.path_len != n.params.depth) return 0;
    return synthetic::leaf_value(n.params, n.path.data(), n.path_len);
}

std::vector<Move> GameState::legal_moves() const {
    if (const auto* b = std::get_if<ChessBoard>(&position_))
        return chess::legal_moves(*b, to_move_);
    if (const auto* b = std::get_if<TttBoard>(&position_)) return ttt::legal_moves(*b);
    const auto& n = std::get<SyntheticNode>(position_);
    std::vector<Move> out;
    if (n.path_len == n.params.depth) return out;
    out.reserve(n.params.branching);
    for (int c = 0; c < n.params.branching; ++c)
        out.push_back(Move{c, SyntheticMove{static_cast<std::uint8_t>(c)}});
    return out;
}

GameState GameState::apply_unchecked(const Move& m) const {
    GameState next = *this;
    next.to_move_ = opponent(to_move_);
    next.ply_ = ply_ + 1;
    if (auto* b = std::get_if<ChessBoard>(&next.position_)) {
        chess::apply(*b, to_move_, std::get<ChessMove>(m.payload));
    } else if (auto* b = std::get_if<TttBoard>(&next.position_)) {
        const auto& tm = std::get<TttMove>(m.payload);
        b->cells[tm.cell] = to_move_ == Player::Maximizer ? 1 : -1;
    } else {
        auto& n = std::get<SyntheticNode>(next.position_);
        n.path[n.path_len++] = std::get<SyntheticMove>(m.payload).child;
    }
    return next;
}

GameState GameState::apply_move(const Move& m) const {
    if (m.id < 0) throw IllegalMove("move id must be non-negative");
    if (const auto* b = std::get_if<ChessBoard>(&position_)) {
        const auto* cm = std::get_if<ChessMove>(&m.payload);
        if (!cm || !chess::is_pseudo_legal(*b, to_move_, *cm))
            throw IllegalMove("illegal chess move" +
                              (cm ? " " + chess::format_move(*b, *cm) : std::string()));
    } else if (const auto* b = std::get_if<TttBoard>(&position_)) {
        const auto* tm = std::get_if<TttMove>(&m.payload);
        if (!tm || tm->cell >= 9 || b->cells[tm->cell] != 0 || ttt::line_score(*b) != 0)
            throw IllegalMove("illegal tic-tac-toe move");
    } else {
        const auto& n = std::get<SyntheticNode>(position_);
        const auto* sm = std::get_if<SyntheticMove>(&m.payload);
        if (!sm || n.path_len >= n.params.depth || sm->child >= n.params.branching)
            throw IllegalMove("illegal synthetic-tree move");
    }
    return apply_unchecked(m);
}

std::string GameState::to_text() const {
    if (const auto* b = std::get_if<ChessBoard>(&position_))
        return chess::to_text(*b, to_move_);
    if (const auto* b = std::get_if<TttBoard>(&position_))
        return ttt::to_text(*b, to_move_);
    const auto& n = std::get<SyntheticNode>(position_);
    std::ostringstream os;
    os << "synthetic(b=" << n.params.branching << ";d=" << n.params.depth
       << ";seed=" << n.params.seed << ";leaf=" << n.params.leaf_lo << ":"
       << n.params.leaf_hi << ";path=";
    for (int i = 0; i < n.path_len; ++i) {
        if (i) os << ".";
        os << static_cast<int>(n.path[i]);
    }
    os << ")";
    return os.str();
}

std::string format_move(const GameState& state, const Move& m) {
    if (state.is_chess())
        return chess::format_move(state.chess_board(), std::get<ChessMove>(m.payload));
    if (state.is_tictactoe())
        return std::to_string(std::get<TttMove>(m.payload).cell);
    return std::to_string(std::get<SyntheticMove>(m.payload).child);
}

}  // namespace gts
