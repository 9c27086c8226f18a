#include <memory>
#include <random>

#include "doctest.h"
#include "gts/config.hpp"
#include "gts/search.hpp"
#include "oracle.hpp"

using namespace gts;

namespace {

// The worked 3x3x... example: rows of leaves under each root child.
GameState example_tree() {
    auto leaves = std::make_shared<std::vector<Score>>(
        std::vector<Score>{3, 12, 8, 2, 4, 6, 14, 5, 2});
    return GameState::make_synthetic({3, 2, 0, 0, 100, leaves});
}

GameState seeded_tree(int b, int d, std::uint64_t seed, Score lo = 0, Score hi = 100) {
    return GameState::make_synthetic({b, d, seed, lo, hi, nullptr});
}

}  // namespace

TEST_CASE("depth zero returns the static evaluation") {
    GameState s = example_tree();
    SearchResult mm = minimax(s, 0);
    CHECK(mm.value == 0);  // interior nodes evaluate to zero
    CHECK_FALSE(mm.best_move.has_value());
    CHECK(mm.nodes_visited == 1);
    SearchResult ab = alphabeta(s, 0);
    CHECK(ab.value == 0);
    CHECK_FALSE(ab.best_move.has_value());
    CHECK(ab.nodes_visited == 1);
    CHECK(ab.cutoffs == 0);
}

TEST_CASE("minimax on the worked example") {
    GameState s = example_tree();
    SearchResult r = minimax(s, 2);
    CHECK(r.value == 3);
    REQUIRE(r.best_move.has_value());
    CHECK(r.best_move->id == 0);
    CHECK(r.nodes_visited == 13);  // 1 root + 3 interior + 9 leaves
    CHECK(r.cutoffs == 0);
    auto o = oracle::minimax(s, 2);
    CHECK(o.value == r.value);
    CHECK(o.nodes == r.nodes_visited);
}

TEST_CASE("alpha-beta prunes the worked example") {
    GameState s = example_tree();
    SearchResult r = alphabeta(s, 2);
    CHECK(r.value == 3);
    REQUIRE(r.best_move.has_value());
    CHECK(r.best_move->id == 0);
    CHECK(r.nodes_visited == 11);  // leaves 4 and 6 cut after leaf 2
    CHECK(r.cutoffs == 1);
}

TEST_CASE("narrow windows return sound fail-soft bounds") {
    GameState s = example_tree();
    SearchResult r = alphabeta(s, 2, SearchWindow{10, 11});
    CHECK(r.value <= 10);  // true value 3 fails low
    CHECK_THROWS_AS(alphabeta(s, 2, SearchWindow{5, 5}), InvalidWindow);
    CHECK_THROWS_AS(alphabeta(s, 2, SearchWindow{7, 3}), InvalidWindow);
}

TEST_CASE("fail-soft bound property against the minimax oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        int b = 2 + static_cast<int>(rng() % 3);
        int d = 2 + static_cast<int>(rng() % 3);
        GameState s = seeded_tree(b, d, rng(), -40, 40);
        Score truth = oracle::minimax(s, d).value;
        Score a = -45 + static_cast<Score>(rng() % 91);
        Score w = 1 + static_cast<Score>(rng() % 20);
        SearchResult r = alphabeta(s, d, SearchWindow{a, a + w});
        if (truth > a && truth < a + w)
            CHECK(r.value == truth);
        else if (truth <= a)
            CHECK(r.value <= a);
        else
            CHECK(r.value >= a + w);
    }
}

TEST_CASE("alpha-beta equals minimax with the full window") {
    std::mt19937_64 rng(7);
    int trees = 0;
    for (int b = 2; b <= 5; ++b) {
        for (int d = 2; d <= 6; ++d) {
            for (int i = 0; i < 10; ++i) {
                // Narrow ranges produce heavy ties, wide ranges none.
                Score hi = (i % 2 == 0) ? 5 : 1000;
                GameState s = seeded_tree(b, d, rng(), 0, hi);
                SearchResult mm = minimax(s, d);
                SearchResult ab = alphabeta(s, d);
                CHECK(ab.value == mm.value);
                CHECK(ab.nodes_visited <= mm.nodes_visited);
                CHECK(mm.cutoffs == 0);
                CHECK(mm.value == oracle::minimax(s, d).value);
                CHECK(mm.nodes_visited == oracle::minimax(s, d).nodes);
                ++trees;
            }
        }
    }
    CHECK(trees == 200);
}

TEST_CASE("alpha-beta equals minimax on tic-tac-toe positions") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        GameState s = oracle::random_ttt_position(rng, static_cast<int>(rng() % 7));
        int depth = 1 + static_cast<int>(rng() % 5);
        SearchResult mm = minimax(s, depth);
        SearchResult ab = alphabeta(s, depth);
        CHECK(ab.value == mm.value);
        CHECK(ab.nodes_visited <= mm.nodes_visited);
    }
}

TEST_CASE("perfect play tic-tac-toe is a draw") {
    GameState s = GameState::tictactoe_initial();
    SearchResult full = minimax(s, 9);
    CHECK(full.value == 0);
    CHECK(full.value == oracle::minimax(s, 9).value);
    CHECK(alphabeta(s, 9).value == 0);
}

TEST_CASE("terminal states yield no best move") {
    GameState s = GameState::tictactoe_initial();
    // Fill to a finished game.
    std::mt19937_64 rng(1);
    while (!s.is_terminal()) {
        auto ms = s.legal_moves();
        s = s.apply_move(ms[rng() % ms.size()]);
    }
    SearchResult r = alphabeta(s, 4);
    CHECK_FALSE(r.best_move.has_value());
    CHECK(r.nodes_visited == 1);
    CHECK(minimax(s, 4).best_move == std::nullopt);
}

TEST_CASE("search results are bit-identical across runs") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        GameState s = seeded_tree(3, 4, rng(), 0, 8);
        CHECK(same_outcome(minimax(s, 4), minimax(s, 4)));
        CHECK(same_outcome(alphabeta(s, 4), alphabeta(s, 4)));
    }
}

TEST_CASE("best-first ordered trees hit the minimal visit count") {
    std::mt19937_64 rng(31337);
    for (int b = 2; b <= 3; ++b) {
        for (int d = 1; d <= 4; ++d) {
            for (int rep = 0; rep < 5; ++rep) {
                auto leaves = std::make_shared<std::vector<Score>>(
                    oracle::best_first_leaves(b, d, rng));
                GameState s = GameState::make_synthetic(
                    {b, d, 0, 0, static_cast<Score>(leaves->size() + 1), leaves});
                SearchResult r = alphabeta(s, d);
                CHECK(r.nodes_visited == oracle::perfect_order_visits(b, d));
                CHECK(r.value == oracle::minimax(s, d).value);
            }
        }
    }
}

TEST_CASE("search dispatches per the configured algorithm") {
    GameState s = seeded_tree(4, 4, 12345, 0, 50);
    SearchConfig cfg;
    cfg.game.kind = GameSpec::Kind::Synthetic;
    cfg.game.synthetic = s.synthetic_node().params;

    cfg.algo = Algorithm::Minimax;
    cfg.depth = 0;
    CHECK(same_outcome(search(s, cfg), minimax(s, 0)));  // depth-zero pass-through
    cfg.algo = Algorithm::Parallel;
    CHECK_THROWS_AS(search(s, cfg), InvalidParams);

    cfg.depth = 4;
    cfg.algo = Algorithm::Minimax;
    SearchResult mm = search(s, cfg);
    CHECK(same_outcome(mm, minimax(s, 4)));

    cfg.algo = Algorithm::AlphaBeta;
    SearchResult ab = search(s, cfg);
    CHECK(same_outcome(ab, alphabeta(s, 4)));
    CHECK(ab.value == mm.value);

    cfg.algo = Algorithm::Parallel;
    cfg.workers = 1;
    cfg.window_mode = WindowMode::Shared;
    SearchResult par = search(s, cfg);
    CHECK(par.value == ab.value);
    CHECK(par.best_move == ab.best_move);

    cfg.algo = Algorithm::Minimax;
    cfg.workers = 4;
    CHECK_THROWS_AS(search(s, cfg), InvalidParams);
}
