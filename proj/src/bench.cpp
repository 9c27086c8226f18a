#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "gts/bench.hpp"
#include "gts/csv.hpp"
#include "gts/parallel.hpp"

namespace gts {

// ---------------------------------------------------------------------------
// SearchConfig / GameSpec plumbing

void SearchConfig::validate() const {
    if (depth < 0) throw InvalidParams("depth must be >= 0");
    if (algo == Algorithm::Parallel && depth < 1)
        throw InvalidParams("parallel search needs depth >= 1");
    if (workers < 1) throw InvalidParams("workers must be >= 1");
    if (workers > 1 && algo != Algorithm::Parallel)
        throw InvalidParams("workers > 1 requires the parallel algorithm");
    if (repeats < 1) throw InvalidParams("repeats must be >= 1");
    if (ordering.kind == OrderingStrategy::Kind::Beam && ordering.beam_width < 1)
        throw InvalidWidth("beam width must be >= 1");
    if (algo == Algorithm::Minimax && ordering.kind != OrderingStrategy::Kind::None)
        throw InvalidParams("minimax ignores child ordering; use ordering=none");
    if (game.kind == GameSpec::Kind::Synthetic) {
        if (game.synthetic.branching < 1)
            throw InvalidParams("synthetic branching must be >= 1");
        if (game.synthetic.leaf_lo > game.synthetic.leaf_hi)
            throw InvalidParams("synthetic leaf range is empty (lo > hi)");
    }
}

GameState build_state(const GameSpec& spec) {
    switch (spec.kind) {
        case GameSpec::Kind::Chess:
            if (!spec.position_text.empty())
                return GameState::chess_from_text(spec.position_text);
            return GameState::chess_initial(spec.board_size);
        case GameSpec::Kind::TicTacToe:
            return GameState::tictactoe_initial();
        case GameSpec::Kind::Synthetic:
        default:
            return GameState::make_synthetic(spec.synthetic);
    }
}

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::Minimax: return "minimax";
        case Algorithm::AlphaBeta: return "alphabeta";
        case Algorithm::Parallel: default: return "parallel";
    }
}

std::string to_string(WindowMode m) {
    return m == WindowMode::Isolated ? "isolated" : "shared";
}

std::string to_string(const OrderingStrategy& o) {
    switch (o.kind) {
        case OrderingStrategy::Kind::None: return "none";
        case OrderingStrategy::Kind::Reorder: return "reorder";
        case OrderingStrategy::Kind::Beam: default:
            return "beam(" + std::to_string(o.beam_width) + ")";
    }
}

std::string to_string(const GameSpec& g) {
    switch (g.kind) {
        case GameSpec::Kind::Chess: return "chess";
        case GameSpec::Kind::TicTacToe: return "ttt";
        case GameSpec::Kind::Synthetic: default: {
            std::ostringstream os;
            os << "synthetic(b=" << g.synthetic.branching << ";d=" << g.synthetic.depth
               << ";leaf=" << g.synthetic.leaf_lo << ":" << g.synthetic.leaf_hi << ")";
            return os.str();
        }
    }
}

// ---------------------------------------------------------------------------
// Measurement

namespace {

double to_ms(std::chrono::nanoseconds ns) {
    return std::chrono::duration<double, std::milli>(ns).count();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n % 2 == 1) return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Two configs describe the same workload when only the algorithm side
// differs: identical game, depth, and seed.
bool same_instance(const SearchConfig& a, const SearchConfig& b) {
    return a.game == b.game && a.depth == b.depth && a.seed == b.seed;
}

std::string config_label(const SearchConfig& c) {
    std::string label = to_string(c.algo) + "/" + to_string(c.game) + "/depth=" +
                        std::to_string(c.depth) + "/ordering=" + to_string(c.ordering);
    if (c.algo == Algorithm::Parallel)
        label += "/" + to_string(c.window_mode) + "/workers=" + std::to_string(c.workers);
    return label;
}

}  // namespace

double compute_speedup(std::span<const double> baseline, std::span<const double> candidate) {
    if (baseline.empty() || candidate.empty())
        throw InvalidInput("speedup needs at least one duration on each side");
    for (double d : baseline)
        if (!(d > 0.0)) throw InvalidInput("baseline durations must be positive");
    for (double d : candidate)
        if (!(d > 0.0)) throw InvalidInput("candidate durations must be positive");
    return median({baseline.begin(), baseline.end()}) /
           median({candidate.begin(), candidate.end()});
}

BenchReport run_matrix(const std::vector<SearchConfig>& configs) {
    if (configs.empty()) throw InvalidInput("run_matrix needs at least one config");
    BenchReport report;
    report.configs = configs;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const SearchConfig& cfg = configs[i];
        try {
            cfg.validate();
            GameState root = build_state(cfg.game);
            bool first = true;
            int run = 0;
            while (run < cfg.repeats) {
                SearchResult r = search(root, cfg);
                if (first) {
                    first = false;
                    // Fast configs get one untimed warm-up before the
                    // measured repeats.
                    if (to_ms(r.elapsed) < 100.0) continue;
                }
                report.rows.push_back({i, ++run, r});
            }
        } catch (const std::exception& e) {
            throw std::runtime_error("config " + std::to_string(i + 1) + " (" +
                                     config_label(cfg) + ") failed: " + e.what());
        }
    }

    std::vector<std::vector<double>> elapsed(configs.size());
    std::vector<std::uint64_t> first_nodes(configs.size(), 0);
    std::vector<bool> seen(configs.size(), false);
    for (const auto& row : report.rows) {
        // Clock-resolution floor keeps the ratios finite.
        elapsed[row.config_index].push_back(std::max(to_ms(row.result.elapsed), 1e-6));
        if (!seen[row.config_index]) {
            seen[row.config_index] = true;
            first_nodes[row.config_index] = row.result.nodes_visited;
        }
    }
    for (std::size_t i = 0; i < configs.size(); ++i) {
        for (std::size_t j = i + 1; j < configs.size(); ++j) {
            if (!same_instance(configs[i], configs[j])) continue;
            // Speedup ratios need at least three timed repeats per side.
            if (elapsed[i].size() >= 3 && elapsed[j].size() >= 3)
                report.speedups.push_back(
                    {i, j, compute_speedup(elapsed[j], elapsed[i])});
            report.node_comparisons.push_back({i, j, first_nodes[i], first_nodes[j]});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Emission

namespace {

std::vector<std::string> csv_row(const BenchReport& report, const BenchRow& row,
                                 const GameState& root) {
    const SearchConfig& cfg = report.configs[row.config_index];
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << to_ms(row.result.elapsed);
    return {
        to_string(cfg.algo),
        to_string(cfg.game),
        cfg.game.kind == GameSpec::Kind::Chess ? std::to_string(cfg.game.board_size)
                                               : std::string(),
        std::to_string(cfg.depth),
        cfg.ordering.kind == OrderingStrategy::Kind::None      ? "none"
        : cfg.ordering.kind == OrderingStrategy::Kind::Reorder ? "reorder"
                                                               : "beam",
        cfg.ordering.kind == OrderingStrategy::Kind::Beam
            ? std::to_string(cfg.ordering.beam_width)
            : std::string(),
        to_string(cfg.window_mode),
        std::to_string(cfg.workers),
        std::to_string(cfg.seed),
        std::to_string(row.run),
        std::to_string(row.result.value),
        row.result.best_move ? format_move(root, *row.result.best_move) : std::string(),
        std::to_string(row.result.nodes_visited),
        std::to_string(row.result.cutoffs),
        ms.str(),
    };
}

void emit_csv(const BenchReport& report, std::ostream& out) {
    out << kCsvHeader << "\n";
    std::map<std::size_t, GameState> roots;
    for (const auto& row : report.rows) {
        auto it = roots.find(row.config_index);
        if (it == roots.end())
            it = roots.emplace(row.config_index,
                               build_state(report.configs[row.config_index].game))
                     .first;
        out << csv_join(csv_row(report, row, it->second)) << "\n";
    }
}

void emit_human(const BenchReport& report, std::ostream& out) {
    std::map<std::size_t, GameState> roots;
    std::size_t label_width = 13;
    for (std::size_t i = 0; i < report.configs.size(); ++i) {
        roots.emplace(i, build_state(report.configs[i].game));
        label_width = std::max(label_width, config_label(report.configs[i]).size() + 2);
    }

    out << "runs\n";
    out << "  " << std::left << std::setw(4) << "cfg"
        << std::setw(static_cast<int>(label_width)) << "configuration" << std::setw(5)
        << "run" << std::setw(12) << "value" << std::setw(10) << "best" << std::setw(12)
        << "nodes" << std::setw(10) << "cutoffs" << "elapsed_ms\n";
    for (const auto& row : report.rows) {
        const SearchResult& r = row.result;
        out << "  " << std::left << std::setw(4) << row.config_index + 1
            << std::setw(static_cast<int>(label_width))
            << config_label(report.configs[row.config_index]) << std::setw(5) << row.run
            << std::setw(12) << r.value << std::setw(10)
            << (r.best_move ? format_move(roots.at(row.config_index), *r.best_move) : "-")
            << std::setw(12) << r.nodes_visited << std::setw(10) << r.cutoffs << std::fixed
            << std::setprecision(3) << to_ms(r.elapsed) << "\n";
    }
    if (!report.speedups.empty()) {
        out << "\nspeedups (median elapsed, candidate vs baseline)\n";
        for (const auto& s : report.speedups) {
            out << "  cfg " << s.candidate + 1 << " over cfg " << s.baseline + 1 << ": "
                << std::fixed << std::setprecision(2) << s.ratio << "x  ["
                << config_label(report.configs[s.candidate]) << " vs "
                << config_label(report.configs[s.baseline]) << "]\n";
        }
    }
    if (!report.node_comparisons.empty()) {
        out << "\nvisited nodes (first run)\n";
        for (const auto& n : report.node_comparisons) {
            out << "  cfg " << n.a + 1 << ": " << n.nodes_a << "  vs  cfg " << n.b + 1
                << ": " << n.nodes_b << "\n";
        }
    }
}

}  // namespace

void emit_report(const BenchReport& report, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::Csv)
        emit_csv(report, out);
    else
        emit_human(report, out);
    out.flush();
    if (!out) throw IoError("failed to write the report");
}

}  // namespace gts
