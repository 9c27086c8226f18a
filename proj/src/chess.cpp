#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "gts/game.hpp"

namespace gts::chess {

namespace {

// Simplified rules: no castling, no en passant, queen-only promotion, the
// game ends when a king is captured. Pawns double-step from their home rank
// on the 8x8 board only.

constexpr int kPieceValue[7] = {0, 100, 300, 300, 500, 900, 20000};

constexpr int kKnightSteps[8][2] = {{-2, -1}, {-2, 1}, {-1, -2}, {-1, 2},
                                    {1, -2},  {1, 2},  {2, -1},  {2, 1}};
constexpr int kKingSteps[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                  {0, 1},   {1, -1}, {1, 0},  {1, 1}};
constexpr int kBishopRays[4][2] = {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
constexpr int kRookRays[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};

int sign_of(Player side) { return side == Player::Maximizer ? 1 : -1; }

bool on_board(int size, int r, int f) {
    return r >= 0 && r < size && f >= 0 && f < size;
}

char piece_char(std::int8_t p) {
    static constexpr char names[7] = {'.', 'P', 'N', 'B', 'R', 'Q', 'K'};
    char c = names[std::abs(p)];
    return p < 0 ? static_cast<char>(std::tolower(c)) : c;
}

std::int8_t piece_from_char(char c) {
    const bool lower = std::islower(static_cast<unsigned char>(c));
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'P': return lower ? -kPawn : kPawn;
        case 'N': return lower ? -kKnight : kKnight;
        case 'B': return lower ? -kBishop : kBishop;
        case 'R': return lower ? -kRook : kRook;
        case 'Q': return lower ? -kQueen : kQueen;
        case 'K': return lower ? -kKing : kKing;
        default: throw InvalidParams(std::string("unknown piece character '") + c + "'");
    }
}

std::vector<std::int8_t> back_rank(int size) {
    switch (size) {
        case 4: return {kKnight, kBishop, kQueen, kKing};
        case 5: return {kRook, kKnight, kBishop, kQueen, kKing};  // Gardner
        case 6: return {kRook, kKnight, kBishop, kQueen, kKing, kRook};
        case 8:
            return {kRook, kKnight, kBishop, kQueen,
                    kKing, kBishop, kKnight, kRook};
        default:
            throw InvalidParams("unsupported chess board size " + std::to_string(size) +
                                " (supported: 4, 5, 6, 8)");
    }
}

bool double_step_allowed(int size) { return size == 8; }

int home_rank(int size, Player side) {
    return side == Player::Maximizer ? 1 : size - 2;
}

int last_rank(int size, Player side) {
    return side == Player::Maximizer ? size - 1 : 0;
}

template <typename Sink>
void gen_from_square(const ChessBoard& b, Player side, int r, int f, Sink&& emit) {
    const int size = b.size;
    const int me = sign_of(side);
    const std::int8_t piece = b.squares[r * size + f];
    if (piece == 0 || (piece > 0) != (me > 0)) return;
    const int from = r * size + f;

    auto try_step = [&](int tr, int tf) {
        if (!on_board(size, tr, tf)) return;
        std::int8_t target = b.squares[tr * size + tf];
        if (target != 0 && (target > 0) == (me > 0)) return;
        emit(ChessMove{static_cast<std::uint8_t>(from),
                       static_cast<std::uint8_t>(tr * size + tf), false});
    };
    auto slide = [&](const int rays[][2], int nrays) {
        for (int i = 0; i < nrays; ++i) {
            int tr = r + rays[i][0], tf = f + rays[i][1];
            while (on_board(size, tr, tf)) {
                std::int8_t target = b.squares[tr * size + tf];
                if (target == 0) {
                    emit(ChessMove{static_cast<std::uint8_t>(from),
                                   static_cast<std::uint8_t>(tr * size + tf), false});
                } else {
                    if ((target > 0) != (me > 0))
                        emit(ChessMove{static_cast<std::uint8_t>(from),
                                       static_cast<std::uint8_t>(tr * size + tf), false});
                    break;
                }
                tr += rays[i][0];
                tf += rays[i][1];
            }
        }
    };

    switch (std::abs(piece)) {
        case kPawn: {
            const int dir = me;
            const int promo_rank = last_rank(size, side);
            auto emit_pawn = [&](int tr, int tf) {
                emit(ChessMove{static_cast<std::uint8_t>(from),
                               static_cast<std::uint8_t>(tr * size + tf),
                               tr == promo_rank});
            };
            int tr = r + dir;
            if (on_board(size, tr, f) && b.squares[tr * size + f] == 0) {
                emit_pawn(tr, f);
                int tr2 = r + 2 * dir;
                if (double_step_allowed(size) && r == home_rank(size, side) &&
                    on_board(size, tr2, f) && b.squares[tr2 * size + f] == 0) {
                    emit_pawn(tr2, f);
                }
            }
            for (int df : {-1, 1}) {
                int tf = f + df;
                if (!on_board(size, tr, tf)) continue;
                std::int8_t target = b.squares[tr * size + tf];
                if (target != 0 && (target > 0) != (me > 0)) emit_pawn(tr, tf);
            }
            break;
        }
        case kKnight:
            for (auto& s : kKnightSteps) try_step(r + s[0], f + s[1]);
            break;
        case kBishop:
            slide(kBishopRays, 4);
            break;
        case kRook:
            slide(kRookRays, 4);
            break;
        case kQueen:
            slide(kBishopRays, 4);
            slide(kRookRays, 4);
            break;
        case kKing:
            for (auto& s : kKingSteps) try_step(r + s[0], f + s[1]);
            break;
        default:
            break;
    }
}

}  // namespace

ChessBoard initial_board(int board_size) {
    auto rank = back_rank(board_size);
    ChessBoard b;
    b.size = board_size;
    b.squares.fill(0);
    for (int f = 0; f < board_size; ++f) {
        b.squares[0 * board_size + f] = rank[f];
        b.squares[1 * board_size + f] = kPawn;
        b.squares[(board_size - 2) * board_size + f] = static_cast<std::int8_t>(-kPawn);
        b.squares[(board_size - 1) * board_size + f] = static_cast<std::int8_t>(-rank[f]);
    }
    return b;
}

std::vector<Move> legal_moves(const ChessBoard& b, Player side) {
    std::vector<ChessMove> raw;
    raw.reserve(48);
    if (!king_missing(b)) {
        for (int r = 0; r < b.size; ++r)
            for (int f = 0; f < b.size; ++f)
                gen_from_square(b, side, r, f, [&](ChessMove m) { raw.push_back(m); });
    }
    std::sort(raw.begin(), raw.end(), [](const ChessMove& a, const ChessMove& c) {
        if (a.from != c.from) return a.from < c.from;
        if (a.to != c.to) return a.to < c.to;
        return a.promotion < c.promotion;
    });
    std::vector<Move> out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
        out.push_back(Move{static_cast<int>(i), raw[i]});
    return out;
}

bool has_any_move(const ChessBoard& b, Player side) {
    if (king_missing(b)) return false;
    for (int r = 0; r < b.size; ++r) {
        for (int f = 0; f < b.size; ++f) {
            bool found = false;
            gen_from_square(b, side, r, f, [&](ChessMove) { found = true; });
            if (found) return true;
        }
    }
    return false;
}

bool king_missing(const ChessBoard& b) {
    bool max_king = false, min_king = false;
    const int n = b.size * b.size;
    for (int i = 0; i < n; ++i) {
        if (b.squares[i] == kKing) max_king = true;
        if (b.squares[i] == -kKing) min_king = true;
    }
    return !max_king || !min_king;
}

Score material(const ChessBoard& b) {
    Score total = 0;
    const int n = b.size * b.size;
    for (int i = 0; i < n; ++i) {
        std::int8_t p = b.squares[i];
        if (p > 0)
            total += kPieceValue[p];
        else if (p < 0)
            total -= kPieceValue[-p];
    }
    return total;
}

void apply(ChessBoard& b, Player side, const ChessMove& m) {
    std::int8_t piece = b.squares[m.from];
    b.squares[m.from] = 0;
    b.squares[m.to] = m.promotion
                          ? static_cast<std::int8_t>(sign_of(side) * kQueen)
                          : piece;
}

bool is_pseudo_legal(const ChessBoard& b, Player side, const ChessMove& m) {
    const int n = b.size * b.size;
    if (m.from >= n || m.to >= n) return false;
    std::int8_t piece = b.squares[m.from];
    if (piece == 0 || (piece > 0) != (side == Player::Maximizer)) return false;
    if (king_missing(b)) return false;
    bool found = false;
    gen_from_square(b, side, m.from / b.size, m.from % b.size, [&](ChessMove cand) {
        if (cand == m) found = true;
    });
    return found;
}

std::string to_text(const ChessBoard& b, Player to_move) {
    std::string out;
    for (int r = b.size - 1; r >= 0; --r) {
        for (int f = 0; f < b.size; ++f) out += piece_char(b.squares[r * b.size + f]);
        out += '\n';
    }
    out += to_move == Player::Maximizer ? "max" : "min";
    out += '\n';
    return out;
}

ParsedPosition parse_text(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty()) lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    if (lines.size() < 3) throw InvalidParams("position text too short");

    std::string side_line = lines.back();
    lines.pop_back();
    Player side;
    if (side_line == "max")
        side = Player::Maximizer;
    else if (side_line == "min")
        side = Player::Minimizer;
    else
        throw InvalidParams("side-to-move line must be 'max' or 'min', got '" + side_line + "'");

    const int size = static_cast<int>(lines.size());
    if (size < 2 || size > 8)
        throw InvalidParams("board size " + std::to_string(size) + " out of range 2..8");
    ChessBoard b;
    b.size = size;
    b.squares.fill(0);
    for (int i = 0; i < size; ++i) {
        const std::string& line = lines[i];  // first line = top rank
        if (static_cast<int>(line.size()) != size)
            throw InvalidParams("rank line length " + std::to_string(line.size()) +
                                " does not match board size " + std::to_string(size));
        const int r = size - 1 - i;
        for (int f = 0; f < size; ++f) {
            char c = line[f];
            b.squares[r * size + f] = c == '.' ? std::int8_t{0} : piece_from_char(c);
        }
    }
    return ParsedPosition{b, side};
}

std::string format_move(const ChessBoard& b, const ChessMove& m) {
    auto square = [&](int sq) {
        std::string s;
        s += static_cast<char>('a' + sq % b.size);
        s += static_cast<char>('1' + sq / b.size);
        return s;
    };
    std::string out = square(m.from) + square(m.to);
    if (m.promotion) out += 'q';
    return out;
}

}  // namespace gts::chess
