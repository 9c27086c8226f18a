#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "gts/cli.hpp"

namespace gts {

namespace {

std::pair<Score, Score> parse_leaf_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("--leaf-range expects LO:HI, got '" + text + "'");
    try {
        Score lo = std::stoll(text.substr(0, colon));
        Score hi = std::stoll(text.substr(colon + 1));
        return {lo, hi};
    } catch (const std::exception&) {
        throw UsageError("--leaf-range expects integers LO:HI, got '" + text + "'");
    }
}

SearchConfig baseline_for(const SearchConfig& cfg) {
    SearchConfig base = cfg;
    if (cfg.algo == Algorithm::Parallel) {
        base.algo = Algorithm::AlphaBeta;
        base.workers = 1;
        return base;
    }
    if (cfg.ordering.kind == OrderingStrategy::Kind::Beam) {
        base.ordering = OrderingStrategy::reorder();
        return base;
    }
    if (cfg.ordering.kind == OrderingStrategy::Kind::Reorder) {
        base.ordering = OrderingStrategy::none();
        return base;
    }
    if (cfg.algo == Algorithm::AlphaBeta) {
        base.algo = Algorithm::Minimax;
        return base;
    }
    throw UsageError("--compare has no baseline for a plain minimax config");
}

}  // namespace

CliOptions parse_cli(const std::vector<std::string>& argv) {
    CLI::App app{"game-tree search benchmark harness"};
    app.name("gts-bench");

    std::string game;
    int board_size = 8;
    int branching = 2;
    int tree_depth = 4;
    std::string leaf_range = "0:100";
    int depth = 0;
    std::string algo;
    std::string ordering = "none";
    int beam_width = 0;
    std::string window = "isolated";
    int threads = 1;
    std::uint64_t seed = 0;
    int repeats = 3;
    std::string position_file;
    std::string format = "human";
    bool compare = false;

    auto* game_opt = app.add_option("--game", game, "chess | ttt | synthetic")
                         ->check(CLI::IsMember({"chess", "ttt", "synthetic"}));
    auto* board_opt = app.add_option("--board-size", board_size, "chess board size (4, 5, 6, 8)");
    auto* branching_opt = app.add_option("--branching", branching, "synthetic branching factor");
    auto* tree_depth_opt = app.add_option("--tree-depth", tree_depth, "synthetic tree depth");
    auto* leaf_opt = app.add_option("--leaf-range", leaf_range, "synthetic leaf values LO:HI");
    app.add_option("--depth", depth, "search depth (plies)")->required();
    app.add_option("--algo", algo, "minimax | alphabeta | parallel")
        ->check(CLI::IsMember({"minimax", "alphabeta", "parallel"}))
        ->required();
    app.add_option("--ordering", ordering, "none | reorder | beam")
        ->check(CLI::IsMember({"none", "reorder", "beam"}));
    auto* beam_opt = app.add_option("--beam-width", beam_width, "children kept per node (beam)");
    auto* window_opt = app.add_option("--window", window, "isolated | shared (parallel)")
                           ->check(CLI::IsMember({"isolated", "shared"}));
    auto* threads_opt = app.add_option("--threads", threads, "parallel worker count");
    app.add_option("--seed", seed, "synthetic tree seed");
    app.add_option("--repeats", repeats, "timed repeats per config");
    auto* position_opt = app.add_option("--position", position_file, "chess position file");
    app.add_option("--format", format, "csv | human")
        ->check(CLI::IsMember({"csv", "human"}));
    app.add_flag("--compare", compare, "also run the paired baseline config");

    std::vector<std::string> args(argv.rbegin(), argv.rend());  // CLI11 wants reversed
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        CliOptions out;
        out.show_help = true;
        out.help_text = app.help();
        return out;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (!*game_opt) {
        if (*position_opt)
            game = "chess";
        else
            throw UsageError("--game is required (or pass --position for chess)");
    }

    SearchConfig cfg;
    cfg.depth = depth;
    cfg.seed = seed;
    cfg.repeats = repeats;
    cfg.workers = threads;

    if (algo == "minimax")
        cfg.algo = Algorithm::Minimax;
    else if (algo == "alphabeta")
        cfg.algo = Algorithm::AlphaBeta;
    else
        cfg.algo = Algorithm::Parallel;

    if (ordering == "none") {
        cfg.ordering = OrderingStrategy::none();
    } else if (ordering == "reorder") {
        cfg.ordering = OrderingStrategy::reorder();
    } else {
        if (!*beam_opt) throw UsageError("--ordering beam requires --beam-width");
        cfg.ordering = OrderingStrategy::beam(beam_width);
    }
    if (*beam_opt && ordering != "beam")
        throw UsageError("--beam-width only applies with --ordering beam");
    if (*beam_opt && beam_width < 1) throw UsageError("--beam-width must be >= 1");

    cfg.window_mode = window == "shared" ? WindowMode::Shared : WindowMode::Isolated;
    if (*window_opt && cfg.algo != Algorithm::Parallel)
        throw UsageError("--window only applies with --algo parallel");
    if (*threads_opt && cfg.algo != Algorithm::Parallel)
        throw UsageError("--threads only applies with --algo parallel");
    if (threads < 1) throw UsageError("--threads must be >= 1");
    if (depth < 1) throw UsageError("--depth must be >= 1");
    if (repeats < 1) throw UsageError("--repeats must be >= 1");

    if (game == "chess") {
        cfg.game.kind = GameSpec::Kind::Chess;
        if (*position_opt) {
            std::ifstream in(position_file);
            if (!in) throw IoError("cannot read position file '" + position_file + "'");
            std::ostringstream text;
            text << in.rdbuf();
            cfg.game.position_file = position_file;
            cfg.game.position_text = text.str();
            cfg.game.board_size =
                GameState::chess_from_text(cfg.game.position_text).chess_board().size;
            if (*board_opt && board_size != cfg.game.board_size)
                throw UsageError("--board-size disagrees with the position file");
        } else {
            cfg.game.board_size = board_size;
            if (board_size != 4 && board_size != 5 && board_size != 6 && board_size != 8)
                throw UsageError("--board-size must be one of 4, 5, 6, 8");
        }
    } else {
        if (*board_opt) throw UsageError("--board-size only applies with --game chess");
        if (*position_opt) throw UsageError("--position only applies with --game chess");
        if (game == "ttt") {
            cfg.game.kind = GameSpec::Kind::TicTacToe;
        } else {
            cfg.game.kind = GameSpec::Kind::Synthetic;
            auto [lo, hi] = parse_leaf_range(leaf_range);
            if (lo > hi) throw UsageError("--leaf-range is empty (LO > HI)");
            if (branching < 1) throw UsageError("--branching must be >= 1");
            if (tree_depth < 0) throw UsageError("--tree-depth must be >= 0");
            cfg.game.synthetic =
                SyntheticTreeParams{branching, tree_depth, seed, lo, hi, nullptr};
        }
    }
    if ((*branching_opt || *tree_depth_opt || *leaf_opt) && game != "synthetic")
        throw UsageError("--branching/--tree-depth/--leaf-range only apply with --game synthetic");

    try {
        cfg.validate();
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }

    CliOptions out;
    out.format = format == "csv" ? ReportFormat::Csv : ReportFormat::Human;
    out.configs.push_back(cfg);
    if (compare) {
        SearchConfig base = baseline_for(cfg);
        base.validate();
        out.configs.push_back(base);
    }
    return out;
}

}  // namespace gts
