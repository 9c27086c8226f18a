#include "gts/game.hpp"

namespace gts::ttt {

namespace {

constexpr int kLines[8][3] = {
    {0, 1, 2}, {3, 4, 5}, {6, 7, 8},  // rows
    {0, 3, 6}, {1, 4, 7}, {2, 5, 8},  // columns
    {0, 4, 8}, {2, 4, 6},             // diagonals
};

}  // namespace

Score line_score(const TttBoard& b) {
    for (const auto& line : kLines) {
        std::int8_t a = b.cells[line[0]];
        if (a != 0 && a == b.cells[line[1]] && a == b.cells[line[2]]) return a;
    }
    return 0;
}

bool board_full(const TttBoard& b) {
    for (std::int8_t c : b.cells)
        if (c == 0) return false;
    return true;
}

std::vector<Move> legal_moves(const TttBoard& b) {
    std::vector<Move> out;
    if (line_score(b) != 0) return out;
    out.reserve(9);
    int id = 0;
    for (std::uint8_t cell = 0; cell < 9; ++cell)
        if (b.cells[cell] == 0) out.push_back(Move{id++, TttMove{cell}});
    return out;
}

std::string to_text(const TttBoard& b, Player to_move) {
    std::string out;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            std::int8_t v = b.cells[r * 3 + c];
            out += v > 0 ? 'X' : v < 0 ? 'O' : '.';
        }
        out += '\n';
    }
    out += to_move == Player::Maximizer ? "max" : "min";
    out += '\n';
    return out;
}

}  // namespace gts::ttt
