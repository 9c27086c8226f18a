#pragma once

#include "gts/config.hpp"
#include "gts/search.hpp"

namespace gts {

/// One inner list per worker; round-robin by position in the ordered list.
struct ClusterAssignment {
    std::vector<std::vector<Move>> clusters;
};

/// Splits the ordered root children over min(worker_count, n) clusters,
/// move i going to cluster i mod k. Cluster sizes differ by at most one.
/// Throws EmptyRoot when moves is empty.
ClusterAssignment partition_children(const std::vector<Move>& moves, int worker_count);

/// Diagnostics from one parallel search, for tests and reporting.
struct ParallelTrace {
    struct Child {
        int order_index = 0;
        Move move;
        Score value = 0;
        bool exact = false;
        Score alpha_used = kNegInf;
        Score beta_used = kPosInf;
        int worker = 0;
        std::uint64_t nodes = 0;
        std::uint64_t cutoffs = 0;
    };
    struct Worker {
        std::uint64_t nodes = 0;
        std::uint64_t cutoffs = 0;
    };
    std::vector<Child> children;   // ordered-child order
    std::vector<Worker> workers;
    std::uint64_t root_nodes = 0;      // the root invocation itself
    std::uint64_t resolve_nodes = 0;   // tie-resolution re-searches (Shared)
    std::uint64_t resolve_cutoffs = 0;
};

/// Root splitting: the ordered (possibly beam-filtered) root children are
/// partitioned into clusters, each searched sequentially by one worker at
/// depth-1. Isolated mode gives every child the full window; Shared mode
/// tightens each child's window with the globally best completed value.
/// The result matches sequential alphabeta with the same ordering exactly
/// (value and best move). Throws TerminalRoot on a terminal state.
SearchResult parallel_root_split(const GameState& state, int depth,
                                 const SearchConfig& config,
                                 ParallelTrace* trace = nullptr);

}  // namespace gts
