#pragma once

#include <iosfwd>
#include <span>

#include "gts/config.hpp"

namespace gts {

struct BenchRow {
    std::size_t config_index = 0;
    int run = 1;  // 1-based
    SearchResult result;
};

/// speedup of `candidate` over `baseline` = median(baseline) / median(candidate).
struct SpeedupEntry {
    std::size_t candidate = 0;
    std::size_t baseline = 0;
    double ratio = 0.0;
};

struct NodeComparison {
    std::size_t a = 0;
    std::size_t b = 0;
    std::uint64_t nodes_a = 0;
    std::uint64_t nodes_b = 0;
};

struct BenchReport {
    std::vector<SearchConfig> configs;
    std::vector<BenchRow> rows;
    std::vector<SpeedupEntry> speedups;
    std::vector<NodeComparison> node_comparisons;
};

/// median(baseline) / median(candidate), both in the same unit. Throws
/// InvalidInput on an empty list or a non-positive duration.
double compute_speedup(std::span<const double> baseline, std::span<const double> candidate);

/// Runs every config `repeats` times, one timed search at a time, and
/// derives speedup/node tables for configs sharing the same instance
/// (game, depth, seed). A short first run (< 100 ms) is treated as warm-up
/// and re-measured.
BenchReport run_matrix(const std::vector<SearchConfig>& configs);

enum class ReportFormat { Csv, Human };

/// CSV: fixed header, one row per run. Human: aligned tables plus the
/// derived comparisons. Throws IoError when the stream fails.
void emit_report(const BenchReport& report, ReportFormat format, std::ostream& out);

inline constexpr const char* kCsvHeader =
    "algo,game,board_size,depth,ordering,beam_width,window_mode,workers,seed,"
    "run,value,best_move,nodes,cutoffs,elapsed_ms";

}  // namespace gts
