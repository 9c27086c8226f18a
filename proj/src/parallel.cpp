#include <atomic>
#include <thread>

#include "gts/ordering.hpp"
#include "gts/parallel.hpp"

namespace gts {

ClusterAssignment partition_children(const std::vector<Move>& moves, int worker_count) {
    if (moves.empty()) throw EmptyRoot("cannot partition an empty child list");
    if (worker_count < 1) throw InvalidParams("worker count must be >= 1");
    const std::size_t k =
        std::min(static_cast<std::size_t>(worker_count), moves.size());
    ClusterAssignment out;
    out.clusters.resize(k);
    for (std::size_t i = 0; i < moves.size(); ++i)
        out.clusters[i % k].push_back(moves[i]);
    return out;
}

namespace {

// Monotone best-so-far shared between workers. Only completed exact child
// values get published, so the stored value is always a true child value.
class SharedBest {
public:
    explicit SharedBest(bool maximizing)
        : maximizing_(maximizing), value_(maximizing ? kNegInf : kPosInf) {}

    Score load() const { return value_.load(std::memory_order_acquire); }

    void publish(Score v) {
        Score cur = value_.load(std::memory_order_relaxed);
        while (maximizing_ ? v > cur : v < cur) {
            if (value_.compare_exchange_weak(cur, v, std::memory_order_acq_rel))
                return;
        }
    }

private:
    bool maximizing_;
    std::atomic<Score> value_;
};

}  // namespace

SearchResult parallel_root_split(const GameState& state, int depth,
                                 const SearchConfig& config, ParallelTrace* trace) {
    if (state.is_terminal()) throw TerminalRoot("root state is terminal");
    if (depth < 1) throw InvalidParams("parallel search needs depth >= 1");
    if (config.workers < 1) throw InvalidParams("worker count must be >= 1");

    const auto start = std::chrono::steady_clock::now();
    OrderedChildren children = ordered_children(state, config.ordering);
    ClusterAssignment clusters = partition_children(children.moves, config.workers);
    const std::size_t k = clusters.clusters.size();
    const bool maximizing = state.to_move() == Player::Maximizer;
    const bool shared = config.window_mode == WindowMode::Shared;

    struct ChildSlot {
        detail::RootChildRecord record;
        int worker = 0;
        std::uint64_t nodes = 0;
        std::uint64_t cutoffs = 0;
    };
    std::vector<ChildSlot> slots(children.moves.size());
    std::vector<ParallelTrace::Worker> worker_totals(k);
    SharedBest best(maximizing);

    auto run_cluster = [&](std::size_t w) {
        detail::SearchStats totals;
        // Cluster c holds ordered children c, c+k, c+2k, ...
        for (std::size_t i = w; i < children.moves.size(); i += k) {
            const Move& m = children.moves[i];
            Score alpha = kNegInf;
            Score beta = kPosInf;
            if (shared) {
                Score v = best.load();
                if (maximizing && v != kNegInf) alpha = v;
                if (!maximizing && v != kPosInf) beta = v;
            }
            detail::SearchStats st;
            Score value = detail::alphabeta_rec(state.apply_unchecked(m), depth - 1,
                                                alpha, beta, config.ordering, st);
            const bool exact = value > alpha && value < beta;
            if (shared && exact) best.publish(value);
            ChildSlot& slot = slots[i];
            slot.record = {static_cast<int>(i), m, value, exact, alpha, beta};
            slot.worker = static_cast<int>(w);
            slot.nodes = st.nodes;
            slot.cutoffs = st.cutoffs;
            totals.nodes += st.nodes;
            totals.cutoffs += st.cutoffs;
        }
        worker_totals[w] = {totals.nodes, totals.cutoffs};
    };

    if (k == 1) {
        run_cluster(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(k);
        for (std::size_t w = 0; w < k; ++w) pool.emplace_back(run_cluster, w);
        for (auto& t : pool) t.join();
    }

    std::vector<detail::RootChildRecord> records;
    records.reserve(slots.size());
    for (const auto& s : slots) records.push_back(s.record);

    // Shared windows can leave an early child with a fail-soft bound equal
    // to the best value; whether its true value ties is undecidable from the
    // bound alone. Re-search those children with a one-point window so the
    // chosen move matches the sequential search exactly.
    detail::SearchStats resolve;
    if (shared) {
        Score best_value = maximizing ? kNegInf : kPosInf;
        for (const auto& r : records)
            best_value = maximizing ? std::max(best_value, r.value)
                                    : std::min(best_value, r.value);
        for (auto& r : records) {
            if (r.exact && r.value == best_value) break;  // earlier ties resolved
            if (!r.exact && r.value == best_value) {
                Score v = detail::alphabeta_rec(state.apply_unchecked(r.move), depth - 1,
                                                best_value - 1, best_value + 1,
                                                config.ordering, resolve);
                if (v == best_value) {
                    r.exact = true;
                    r.alpha_used = best_value - 1;
                    r.beta_used = best_value + 1;
                    break;
                }
                r.value = v;  // certified off the tie; keep the sound bound
            }
        }
    }

    auto agg = detail::aggregate_root(records, maximizing);
    SearchResult result;
    result.value = agg.value;
    result.best_move = agg.best_move;
    result.nodes_visited = 1 + resolve.nodes;  // the root visit plus resolution work
    result.cutoffs = resolve.cutoffs;
    for (const auto& wt : worker_totals) {
        result.nodes_visited += wt.nodes;
        result.cutoffs += wt.cutoffs;
    }
    result.elapsed = std::chrono::steady_clock::now() - start;

    if (trace) {
        trace->children.clear();
        for (const auto& s : slots)
            trace->children.push_back({s.record.order_index, s.record.move,
                                       s.record.value, s.record.exact,
                                       s.record.alpha_used, s.record.beta_used,
                                       s.worker, s.nodes, s.cutoffs});
        trace->workers = worker_totals;
        trace->root_nodes = 1;
        trace->resolve_nodes = resolve.nodes;
        trace->resolve_cutoffs = resolve.cutoffs;
    }
    return result;
}

}  // namespace gts
