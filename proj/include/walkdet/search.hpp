#ifndef WALKDET_SEARCH_HPP
#define WALKDET_SEARCH_HPP

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <walkdet/enumerate.hpp>
#include <walkdet/graph.hpp>
#include <walkdet/graph6.hpp>
#include <walkdet/walk.hpp>

namespace walkdet {

// Runs fn(i) for i in [0, count) on `workers` threads, handing each result
// to emit(i, result) in input order whatever the completion order, so the
// output is identical for any worker count. The reorder buffer holds at most
// the results that have finished ahead of the emission cursor.
template <typename Fn, typename Emit>
void parallel_ordered(std::size_t count, unsigned workers, Fn&& fn, Emit&& emit) {
  using Result = decltype(fn(std::size_t{0}));
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) emit(i, fn(i));
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mtx;
  std::map<std::size_t, Result> buffer;
  std::size_t cursor = 0;
  std::exception_ptr error;

  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      {
        std::lock_guard lock(mtx);
        if (error) return;
      }
      try {
        Result r = fn(i);
        std::lock_guard lock(mtx);
        buffer.emplace(i, std::move(r));
        while (!buffer.empty() && buffer.begin()->first == cursor) {
          emit(cursor, std::move(buffer.begin()->second));
          buffer.erase(buffer.begin());
          ++cursor;
        }
      } catch (...) {
        std::lock_guard lock(mtx);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  pool.reserve(spawn);
  for (unsigned w = 0; w < spawn; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

struct SearchConfig {
  std::size_t min_order = 2;
  std::size_t max_order = 6;
  enum class RootPolicy { all_roots, orbit_reps };
  RootPolicy root_policy = RootPolicy::all_roots;
  unsigned workers = 1;
  bool include_rejects = false;  // also emit failing candidates, fully evaluated
  bool recheck_on_f6 = true;     // end-to-end recheck of each found preserver
  std::uint32_t seed = 0;        // selects the F_6 member used by the recheck
};

struct SearchResult {
  std::string graph6;
  std::size_t root = 0;  // 0-based
  std::size_t order = 0;
  PreserverReport report;
  double millis = 0.0;  // wall time of this candidate; excluded from stdout formats
};

struct SearchSummary {
  struct PerOrder {
    std::size_t order = 0;
    std::size_t candidates = 0;
    std::size_t preservers = 0;
  };
  std::vector<PerOrder> per_order;
  std::size_t candidates = 0;
  std::size_t preservers = 0;
  // The appendix-style tallies: rooted isomorphism classes (root counted up
  // to the automorphism group of H) and underlying graphs with at least one
  // preserving root.
  std::size_t rooted_classes = 0;
  std::size_t underlying_graphs = 0;
};

namespace detail {

struct Candidate {
  Graph graph;
  std::size_t root;
};

inline std::vector<Candidate> preserver_candidates(const std::vector<Graph>& graphs,
                                                   SearchConfig::RootPolicy policy) {
  std::vector<Candidate> out;
  for (const Graph& g : graphs) {
    if (policy == SearchConfig::RootPolicy::orbit_reps) {
      for (const std::size_t v : automorphism_orbit_reps(g)) out.push_back({g, v});
    } else {
      for (std::size_t v = 0; v < g.order(); ++v) out.push_back({g, v});
    }
  }
  return out;
}

inline void fill_class_tallies(const std::vector<SearchResult>& results,
                               const std::vector<Graph>& graphs_by_result,
                               SearchSummary& summary) {
  std::set<std::pair<std::string, std::size_t>> rooted;
  std::set<std::string> underlying;
  std::map<std::string, std::vector<std::size_t>> orbit_cache;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].report.is_preserver) continue;
    auto [it, inserted] = orbit_cache.try_emplace(results[i].graph6);
    if (inserted) it->second = automorphism_orbit_map(graphs_by_result[i]);
    rooted.emplace(results[i].graph6, it->second[results[i].root]);
    underlying.insert(results[i].graph6);
  }
  summary.rooted_classes = rooted.size();
  summary.underlying_graphs = underlying.size();
}

}  // namespace detail

// Runs preserver_check over every (H, root) candidate. Deterministic: the
// result list depends only on the candidate list and flags, never on the
// worker count. With recheck_on_f6, each found preserver H^(v) is applied to
// one F_6 member G and the product's F-membership recomputed; a failure
// would contradict the preserver condition and aborts the search loudly.
inline std::vector<SearchResult> run_preserver_search(
    const std::vector<detail::Candidate>& candidates, const SearchConfig& cfg,
    SearchSummary* summary = nullptr) {
  const unsigned workers = cfg.workers < 1 ? 1u : cfg.workers;
  std::vector<SearchResult> kept;
  std::vector<Graph> kept_graphs;  // parallel to `kept`, for the tally pass

  auto evaluate = [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchResult r;
    r.graph6 = emit_graph6(candidates[i].graph);
    r.root = candidates[i].root;
    r.order = candidates[i].graph.order();
    r.report = preserver_check(RootedGraph(candidates[i].graph, candidates[i].root),
                               /*short_circuit=*/!cfg.include_rejects);
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                   .count();
    return r;
  };

  std::map<std::size_t, SearchSummary::PerOrder> per_order;
  parallel_ordered(candidates.size(), workers, evaluate, [&](std::size_t i, SearchResult r) {
    auto& line = per_order[r.order];
    line.order = r.order;
    line.candidates += 1;
    if (r.report.is_preserver) line.preservers += 1;
    if (r.report.is_preserver || cfg.include_rejects) {
      kept_graphs.push_back(candidates[i].graph);
      kept.push_back(std::move(r));
    }
  });

  if (cfg.recheck_on_f6) {
    std::optional<Graph> probe;
    for (const SearchResult& r : kept) {
      if (!r.report.is_preserver) continue;
      if (!probe) {
        std::vector<Graph> members;
        for (const Graph& g : enumerate_graphs(6))
          if (f_membership(g)) members.push_back(g);
        if (members.empty()) throw std::logic_error("run_preserver_search: no F_6 member found");
        std::mt19937 rng(cfg.seed);
        probe = members[rng() % members.size()];
      }
      dgs_family_step(*probe, RootedGraph(parse_graph6(r.graph6), r.root));
    }
  }

  if (summary) {
    SearchSummary s;
    for (const auto& [order, line] : per_order) {
      s.per_order.push_back(line);
      s.candidates += line.candidates;
      s.preservers += line.preservers;
    }
    detail::fill_class_tallies(kept, kept_graphs, s);
    *summary = std::move(s);
  }
  return kept;
}

// Exhaustive search over the built-in enumeration, orders
// [min_order, max_order], every isomorphism class.
inline std::vector<SearchResult> search_preservers(const SearchConfig& cfg,
                                                   SearchSummary* summary = nullptr) {
  if (cfg.min_order < 2)
    throw std::invalid_argument("search_preservers: preserver search starts at order 2");
  if (cfg.min_order > cfg.max_order)
    throw std::invalid_argument("search_preservers: empty order range");
  std::vector<Graph> graphs;
  for (std::size_t m = cfg.min_order; m <= cfg.max_order; ++m)
    for (Graph& g : enumerate_graphs(m)) graphs.push_back(std::move(g));
  return run_preserver_search(detail::preserver_candidates(graphs, cfg.root_policy), cfg,
                              summary);
}

// Same search over externally supplied graphs (e.g. a graph6 stream from a
// generator), in input order.
inline std::vector<SearchResult> search_preservers_in(const std::vector<Graph>& graphs,
                                                      const SearchConfig& cfg,
                                                      SearchSummary* summary = nullptr) {
  for (const Graph& g : graphs)
    if (g.order() < 2)
      throw std::invalid_argument("search_preservers_in: preserver search starts at order 2");
  return run_preserver_search(detail::preserver_candidates(graphs, cfg.root_policy), cfg,
                              summary);
}

struct FMembersReport {
  std::vector<Graph> members;
  std::vector<FMembership> certificates;
  std::string note;
};

// Every isomorphism-class representative of F_n from the built-in
// enumeration. Odd n yields an empty result with an explanatory note rather
// than an error.
inline FMembersReport find_f_members(std::size_t n) {
  FMembersReport r;
  if (n % 2 != 0) {
    r.note = "F_n is empty for odd n: det A(G) is even when n is odd";
    return r;
  }
  if (n < 1 || n > 7) {
    throw std::invalid_argument(
        "find_f_members: built-in enumeration covers orders up to 7 (n = 6 in practice); "
        "feed larger orders as a graph6 stream");
  }
  for (const Graph& g : enumerate_graphs(n)) {
    FMembership cert = f_report(g);
    if (cert.member) {
      r.members.push_back(g);
      r.certificates.push_back(std::move(cert));
    }
  }
  return r;
}

inline FMembersReport filter_f_members(const std::vector<Graph>& graphs) {
  FMembersReport r;
  for (const Graph& g : graphs) {
    FMembership cert = f_report(g);
    if (cert.member) {
      r.members.push_back(g);
      r.certificates.push_back(std::move(cert));
    }
  }
  return r;
}

struct FamilyStage {
  Graph graph;
  FMembership certificate;
};

struct FamilyReport {
  std::vector<FamilyStage> stages;  // stage 0 is the seed
  bool completed = false;
  std::string diagnostic;
};

// Iterated construction G, G o H_1, (G o H_1) o H_2, ... with the preservers
// applied cyclically. Every stage's F-membership is recomputed from scratch;
// a certification failure stops the chain and is reported, not swallowed.
inline FamilyReport build_dgs_family(const Graph& seed,
                                     const std::vector<RootedGraph>& preservers,
                                     std::size_t steps) {
  if (steps > 0 && preservers.empty())
    throw std::invalid_argument("build_dgs_family: no preservers given");
  FMembership seed_cert = f_report(seed);
  if (!seed_cert.member)
    throw std::invalid_argument("build_dgs_family: the seed graph is not in F");
  for (const RootedGraph& h : preservers)
    if (!preserver_check(h).is_preserver)
      throw std::invalid_argument("build_dgs_family: a listed rooted graph fails the preserver "
                                  "conditions");

  FamilyReport report;
  report.stages.push_back({seed, std::move(seed_cert)});
  for (std::size_t step = 0; step < steps; ++step) {
    try {
      FamilyStep next = dgs_family_step(report.stages.back().graph,
                                        preservers[step % preservers.size()]);
      report.stages.push_back({std::move(next.product), std::move(next.certificate)});
    } catch (const std::runtime_error& e) {
      report.diagnostic = e.what();
      return report;
    }
  }
  report.completed = true;
  return report;
}

struct SweepRow {
  std::string graph6;
  BigInt lhs_abs;  // |det W_A(G o H)|, computed directly
  BigInt rhs_abs;  // |det A(G)|^{floor(m/2)} * |det W_A(G)|^m
  bool equal = false;
};

struct SweepReport {
  std::size_t exponent = 0;  // floor(m/2)
  std::vector<SweepRow> rows;
  bool all_equal = false;
};

// Compares det W_A(G o H^(v)) against the conjectured closed form for every
// sample G. For a preserver with h = +-lambda^{floor(m/2)} the equality is a
// consequence of the product formula; the sweep both checks that consistency
// and hunts for exponent counterexamples.
inline SweepReport conjecture_sweep(const RootedGraph& h, const std::vector<Graph>& samples) {
  const PreserverReport pr = preserver_check(h);
  if (!pr.is_preserver)
    throw std::invalid_argument("conjecture_sweep: the rooted graph fails the preserver "
                                "conditions");
  SweepReport report;
  report.exponent = h.graph.order() / 2;
  report.all_equal = true;
  const MatrixKind kind = MatrixKind::adjacency();
  for (const Graph& g : samples) {
    SweepRow row;
    row.graph6 = emit_graph6(g);
    const IntMatrix a = matrix_of(g, kind).matrix;
    row.lhs_abs = abs_big(walk_det_raw(matrix_of(rooted_product(g, h), kind).matrix));
    row.rhs_abs = pow_big(abs_big(det_bareiss(a)), report.exponent) *
                  pow_big(abs_big(walk_det_raw(a)),
                          static_cast<unsigned long>(h.graph.order()));
    row.equal = row.lhs_abs == row.rhs_abs;
    report.all_equal = report.all_equal && row.equal;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace walkdet

#endif  // WALKDET_SEARCH_HPP
