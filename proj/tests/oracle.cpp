#include "oracle.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace oracle {

using gts::GameState;
using gts::Player;
using gts::Score;

MinimaxOutcome minimax(const GameState& state, int depth) {
    MinimaxOutcome out;
    out.nodes = 1;
    if (depth == 0 || state.is_terminal()) {
        out.value = state.evaluate();
        return out;
    }
    const bool maximizing = state.to_move() == Player::Maximizer;
    Score best = maximizing ? gts::kNegInf : gts::kPosInf;
    for (const auto& m : state.legal_moves()) {
        MinimaxOutcome sub = minimax(state.apply_move(m), depth - 1);
        out.nodes += sub.nodes;
        best = maximizing ? std::max(best, sub.value) : std::min(best, sub.value);
    }
    out.value = best;
    return out;
}

// ---------------------------------------------------------------------------
// Text-level chess enumeration. Row 0 is the top line of the text (the
// Minimizer back rank); uppercase pieces advance toward row 0.

namespace {

struct TextBoard {
    std::vector<std::string> rows;
    bool max_to_move = true;
    int n = 0;
};

TextBoard parse(const std::string& text) {
    TextBoard tb;
    std::string cur;
    std::vector<std::string> lines;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty()) lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    if (lines.size() < 2) throw std::runtime_error("oracle: bad position text");
    tb.max_to_move = lines.back() == "max";
    lines.pop_back();
    tb.rows = lines;
    tb.n = static_cast<int>(lines.size());
    return tb;
}

bool mine(char c, bool max_side) {
    if (c == '.') return false;
    return max_side ? std::isupper(static_cast<unsigned char>(c))
                    : std::islower(static_cast<unsigned char>(c));
}

bool enemy(char c, bool max_side) {
    if (c == '.') return false;
    return !mine(c, max_side);
}

std::string cell_name(const TextBoard& tb, int row, int col) {
    std::string s;
    s += static_cast<char>('a' + col);
    s += static_cast<char>('0' + (tb.n - row));
    return s;
}

struct TextMove {
    int fr, fc, tr, tc;
    bool promo;
};

std::vector<TextMove> enumerate(const TextBoard& tb) {
    std::vector<TextMove> out;
    const int n = tb.n;
    bool has_K = false, has_k = false;
    for (const auto& row : tb.rows)
        for (char c : row) {
            if (c == 'K') has_K = true;
            if (c == 'k') has_k = true;
        }
    if (!has_K || !has_k) return out;

    const bool maxs = tb.max_to_move;
    auto at = [&](int r, int c) { return tb.rows[r][c]; };
    auto inside = [&](int r, int c) { return r >= 0 && r < n && c >= 0 && c < n; };

    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            char p = at(r, c);
            if (!mine(p, maxs)) continue;
            char u = static_cast<char>(std::toupper(static_cast<unsigned char>(p)));
            auto push = [&](int tr, int tc, bool promo = false) {
                out.push_back(TextMove{r, c, tr, tc, promo});
            };
            auto step_to = [&](int tr, int tc) {
                if (inside(tr, tc) && !mine(at(tr, tc), maxs)) push(tr, tc);
            };
            auto ray = [&](int dr, int dc) {
                int tr = r + dr, tc = c + dc;
                while (inside(tr, tc)) {
                    if (mine(at(tr, tc), maxs)) break;
                    push(tr, tc);
                    if (enemy(at(tr, tc), maxs)) break;
                    tr += dr;
                    tc += dc;
                }
            };
            if (u == 'P') {
                int dir = maxs ? -1 : 1;  // uppercase advances toward row 0
                int promo_row = maxs ? 0 : n - 1;
                int home_row = maxs ? n - 2 : 1;
                if (inside(r + dir, c) && at(r + dir, c) == '.') {
                    push(r + dir, c, r + dir == promo_row);
                    if (n == 8 && r == home_row && at(r + 2 * dir, c) == '.')
                        push(r + 2 * dir, c, false);
                }
                for (int dc : {-1, 1}) {
                    int tr = r + dir, tc = c + dc;
                    if (inside(tr, tc) && enemy(at(tr, tc), maxs))
                        push(tr, tc, tr == promo_row);
                }
            } else if (u == 'N') {
                for (auto [dr, dc] : {std::pair{-2, -1}, {-2, 1}, {-1, -2}, {-1, 2},
                                      {1, -2}, {1, 2}, {2, -1}, {2, 1}})
                    step_to(r + dr, c + dc);
            } else if (u == 'K') {
                for (int dr = -1; dr <= 1; ++dr)
                    for (int dc = -1; dc <= 1; ++dc)
                        if (dr || dc) step_to(r + dr, c + dc);
            } else if (u == 'B' || u == 'Q') {
                ray(-1, -1);
                ray(-1, 1);
                ray(1, -1);
                ray(1, 1);
                if (u == 'Q') {
                    ray(-1, 0);
                    ray(1, 0);
                    ray(0, -1);
                    ray(0, 1);
                }
            } else if (u == 'R') {
                ray(-1, 0);
                ray(1, 0);
                ray(0, -1);
                ray(0, 1);
            }
        }
    }
    return out;
}

TextBoard apply(const TextBoard& tb, const TextMove& m) {
    TextBoard next = tb;
    char p = next.rows[m.fr][m.fc];
    next.rows[m.fr][m.fc] = '.';
    if (m.promo)
        next.rows[m.tr][m.tc] = tb.max_to_move ? 'Q' : 'q';
    else
        next.rows[m.tr][m.tc] = p;
    next.max_to_move = !tb.max_to_move;
    return next;
}

std::uint64_t perft(const TextBoard& tb, int depth) {
    if (depth == 0) return 1;
    std::uint64_t total = 0;
    for (const auto& m : enumerate(tb)) total += perft(apply(tb, m), depth - 1);
    return total;
}

}  // namespace

std::vector<std::string> chess_moves_from_text(const std::string& text) {
    TextBoard tb = parse(text);
    std::vector<std::string> out;
    for (const auto& m : enumerate(tb)) {
        std::string s = cell_name(tb, m.fr, m.fc) + cell_name(tb, m.tr, m.tc);
        if (m.promo) s += 'q';
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t chess_perft_from_text(const std::string& text, int depth) {
    return perft(parse(text), depth);
}

// ---------------------------------------------------------------------------

gts::Score synthetic_leaf(std::uint64_t seed, const std::vector<int>& path,
                          gts::Score lo, gts::Score hi) {
    auto mix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    std::uint64_t h = mix(seed);
    for (int step : path) h = mix(h ^ (static_cast<std::uint64_t>(step) + 1));
    return lo + static_cast<Score>(h % (static_cast<std::uint64_t>(hi - lo) + 1));
}

// ---------------------------------------------------------------------------
// Visit counts of fail-soft alpha-beta on a best-first uniform tree with
// distinct values.
//   exact(h):  full evaluation of a node: best child exactly, siblings refuted
//   refute(h): one-sided search that stops after its first child disproves it
//   prove(h):  one-sided search that must walk all children to bound the node

namespace {

std::uint64_t refute_visits(int b, int h);

std::uint64_t prove_visits(int b, int h) {
    if (h == 0) return 1;
    return 1 + static_cast<std::uint64_t>(b) * refute_visits(b, h - 1);
}

std::uint64_t refute_visits(int b, int h) {
    if (h == 0) return 1;
    return 1 + prove_visits(b, h - 1);
}

}  // namespace

std::uint64_t perfect_order_visits(int branching, int depth) {
    if (depth == 0) return 1;
    return 1 + perfect_order_visits(branching, depth - 1) +
           static_cast<std::uint64_t>(branching - 1) * refute_visits(branching, depth - 1);
}

// ---------------------------------------------------------------------------

namespace {

struct SubTree {
    std::vector<Score> leaves;
    Score value;
};

SubTree build_best_first(int b, int h, bool maximizing, std::vector<Score>& pool) {
    if (h == 0) {
        Score v = pool.back();
        pool.pop_back();
        return {{v}, v};
    }
    std::vector<SubTree> kids;
    kids.reserve(b);
    for (int i = 0; i < b; ++i) kids.push_back(build_best_first(b, h - 1, !maximizing, pool));
    std::sort(kids.begin(), kids.end(), [&](const SubTree& x, const SubTree& y) {
        return maximizing ? x.value > y.value : x.value < y.value;
    });
    SubTree out;
    out.value = kids.front().value;
    for (const auto& k : kids)
        out.leaves.insert(out.leaves.end(), k.leaves.begin(), k.leaves.end());
    return out;
}

}  // namespace

std::vector<Score> best_first_leaves(int branching, int depth, std::mt19937_64& rng) {
    std::uint64_t count = 1;
    for (int i = 0; i < depth; ++i) count *= static_cast<std::uint64_t>(branching);
    std::vector<Score> pool(count);
    std::iota(pool.begin(), pool.end(), Score{1});
    std::shuffle(pool.begin(), pool.end(), rng);
    return build_best_first(branching, depth, true, pool).leaves;
}

GameState random_ttt_position(std::mt19937_64& rng, int moves) {
    GameState s = GameState::tictactoe_initial();
    for (int i = 0; i < moves; ++i) {
        if (s.is_terminal()) break;
        auto ms = s.legal_moves();
        std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
        s = s.apply_move(ms[pick(rng)]);
    }
    return s;
}

}  // namespace oracle
