#include "uht/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

namespace uht {

namespace {

// Rotation systems over a fixed dart numbering: end (edge #i, side s) is 2i+s.
class Enumerator {
 public:
  Enumerator(const Multigraph& g, const std::set<VertexId>& w, const RotationSystem& fixed) {
    std::map<EdgeId, int> index;
    for (const auto& [e, ed] : g.edges()) {
      index[e] = static_cast<int>(edge_ids_.size());
      edge_ids_.push_back(e);
    }
    auto dart = [&](EdgeEnd end) { return 2 * index.at(end.edge) + end.side; };
    succ_.assign(2 * edge_ids_.size(), -1);
    for (VertexId v : g.vertices()) {
      auto ends = g.ends_at(v);
      if (ends.empty()) {
        ++isolated_;
        continue;
      }
      if (w.contains(v)) {
        const Cycle& cycle = fixed.at(v);
        std::vector<EdgeEnd> sorted = cycle;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != ends) throw Error(ErrorCode::NotSubgraph, "fixed rotation does not match graph");
        std::vector<int> darts;
        for (EdgeEnd end : cycle) darts.push_back(dart(end));
        link(darts);
        continue;
      }
      Free f{v, {}};
      for (EdgeEnd end : ends) f.darts.push_back(dart(end));
      free_.push_back(std::move(f));
    }
    const auto comps = connected_components(g);
    target_faces_ = static_cast<long>(2 * comps.size()) - static_cast<long>(g.vertex_count()) +
                    static_cast<long>(g.edge_count()) - static_cast<long>(isolated_);
  }

  struct Free {
    VertexId v;
    std::vector<int> darts;  // first one stays put
  };

  std::vector<Free>& free_vertices() { return free_; }

  void link(const std::vector<int>& darts) {
    for (std::size_t i = 0; i < darts.size(); ++i) succ_[darts[i]] = darts[(i + 1) % darts.size()];
  }

  long faces() {
    const std::size_t n = succ_.size();
    seen_.assign(n, 0);
    long count = 0;
    for (std::size_t start = 0; start < n; ++start) {
      if (seen_[start]) continue;
      ++count;
      for (int d = static_cast<int>(start); !seen_[d]; d = succ_[d ^ 1]) seen_[d] = 1;
    }
    return count;
  }

  /// Genus of the current assignment; components summed.
  int genus_now() { return static_cast<int>((target_faces_ - faces()) / 2); }

  RotationSystem rotation(const Multigraph& g) const {
    RotationSystem r;
    for (VertexId v : g.vertices()) {
      auto ends = g.ends_at(v);
      Cycle cycle;
      if (!ends.empty()) {
        auto to_end = [&](int d) { return EdgeEnd{edge_ids_[d / 2], static_cast<std::uint8_t>(d % 2)}; };
        const EdgeEnd first = ends.front();
        int start = -1;
        for (std::size_t i = 0; i < succ_.size(); ++i)
          if (to_end(static_cast<int>(i)) == first) start = static_cast<int>(i);
        int d = start;
        do {
          cycle.push_back(to_end(d));
          d = succ_[d];
        } while (d != start);
      }
      r.set(v, std::move(cycle));
    }
    return r;
  }

  /// Visit every assignment of the free vertices from `level` down, calling
  /// `visit` after each; stops early when visit returns true.
  template <class Visit>
  bool run(std::size_t level, std::atomic<bool>& stop, Visit&& visit) {
    if (level == free_.size()) return visit();
    Free& f = free_[level];
    std::vector<int>& darts = f.darts;
    if (darts.size() <= 1) {
      link(darts);
      return run(level + 1, stop, visit);
    }
    std::sort(darts.begin() + 1, darts.end());
    do {
      if (stop.load(std::memory_order_relaxed)) return true;
      link(darts);
      if (run(level + 1, stop, visit)) return true;
    } while (std::next_permutation(darts.begin() + 1, darts.end()));
    return false;
  }

 private:
  std::vector<EdgeId> edge_ids_;
  std::vector<int> succ_;
  std::vector<char> seen_;
  std::vector<Free> free_;
  std::size_t isolated_ = 0;
  long target_faces_ = 0;
};

double factorial(std::size_t n) {
  double out = 1;
  for (std::size_t k = 2; k <= n; ++k) out *= static_cast<double>(k);
  return out;
}

void check_budget(const Multigraph& g, const std::set<VertexId>& frozen, const OracleOptions& options,
                  OracleStats* stats) {
  const double space = rotation_count(g, frozen);
  if (stats) stats->space = space;
  if (space > options.budget)
    throw Error(ErrorCode::BudgetExceeded,
                "search space of " + std::to_string(space) + " rotation systems exceeds budget");
}

// Runs `visit(enumerator)` over every assignment, splitting the first free
// vertex with more than one order across threads. Visitors must be safe to
// call concurrently. Returns true if some visit asked to stop.
template <class Visit>
bool enumerate(const Multigraph& g, const std::set<VertexId>& w, const RotationSystem& fixed,
               unsigned threads, std::uint64_t& count, Visit visit) {
  Enumerator base(g, w, fixed);
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> visited{0};

  std::size_t split = base.free_vertices().size();
  for (std::size_t i = 0; i < base.free_vertices().size(); ++i)
    if (base.free_vertices()[i].darts.size() > 2) {
      split = i;
      break;
    }
  if (threads <= 1 || split == base.free_vertices().size()) {
    std::uint64_t local = 0;
    bool stopped = base.run(0, stop, [&] {
      ++local;
      return visit(base);
    });
    count = local;
    return stopped;
  }

  // Lower levels are fixed to their first order; the split vertex's orders
  // are dealt round-robin.
  std::vector<std::vector<int>> orders;
  {
    auto darts = base.free_vertices()[split].darts;
    std::sort(darts.begin() + 1, darts.end());
    do orders.push_back(darts);
    while (std::next_permutation(darts.begin() + 1, darts.end()));
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      Enumerator mine = base;
      auto& frees = mine.free_vertices();
      // Levels before the split have a single order each.
      for (std::size_t i = 0; i < split; ++i) mine.link(frees[i].darts);
      std::uint64_t local = 0;
      for (std::size_t k = t; k < orders.size() && !stop.load(); k += threads) {
        mine.link(orders[k]);
        bool found = mine.run(split + 1, stop, [&] {
          ++local;
          return visit(mine);
        });
        if (found) stop.store(true);
      }
      visited += local;
    });
  }
  for (auto& th : pool) th.join();
  count = visited.load();
  return stop.load();
}

}  // namespace

double rotation_count(const Multigraph& g, const std::set<VertexId>& frozen) {
  double out = 1;
  for (VertexId v : g.vertices()) {
    if (frozen.contains(v)) continue;
    const std::size_t deg = g.degree(v);
    if (deg > 1) out *= factorial(deg - 1);
  }
  return out;
}

int min_genus(const Multigraph& g, const OracleOptions& options, OracleStats* stats) {
  check_budget(g, {}, options, stats);
  std::atomic<int> best{std::numeric_limits<int>::max()};
  std::uint64_t count = 0;
  enumerate(g, {}, {}, options.threads, count, [&](Enumerator& en) {
    const int gen = en.genus_now();
    int seen = best.load();
    while (gen < seen && !best.compare_exchange_weak(seen, gen)) {
    }
    return gen == 0;
  });
  if (stats) stats->enumerated = count;
  return best.load();
}

std::optional<RotationSystem> find_embedding_with_rotations(const Multigraph& g,
                                                            const std::set<VertexId>& w,
                                                            const RotationSystem& fixed,
                                                            const OracleOptions& options,
                                                            OracleStats* stats) {
  for (VertexId v : w)
    if (!g.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "W vertex not in graph");
  check_budget(g, w, options, stats);
  std::optional<RotationSystem> witness;
  std::mutex guard;
  std::uint64_t count = 0;
  enumerate(g, w, fixed, options.threads, count, [&](Enumerator& en) {
    if (en.genus_now() != 0) return false;
    std::lock_guard lock(guard);
    if (!witness) witness = en.rotation(g);
    return true;
  });
  if (stats) stats->enumerated = count;
  return witness;
}

bool exists_embedding_with_rotations(const Multigraph& g, const std::set<VertexId>& w,
                                     const RotationSystem& fixed, const OracleOptions& options,
                                     OracleStats* stats) {
  return find_embedding_with_rotations(g, w, fixed, options, stats).has_value();
}

std::optional<RotationSystem> sample_planar_rotation(const Multigraph& g, std::uint64_t seed,
                                                     const OracleOptions& options) {
  check_budget(g, {}, options, nullptr);
  std::mt19937_64 rng(seed);
  std::optional<RotationSystem> chosen;
  std::uint64_t seen = 0;
  std::uint64_t count = 0;
  enumerate(g, {}, {}, 1, count, [&](Enumerator& en) {
    if (en.genus_now() != 0) return false;
    ++seen;
    if (std::uniform_int_distribution<std::uint64_t>(1, seen)(rng) == 1) chosen = en.rotation(g);
    return false;
  });
  return chosen;
}

RotationSystem random_rotation(const Multigraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RotationSystem r;
  for (VertexId v : g.vertices()) {
    Cycle cycle = g.ends_at(v);
    std::shuffle(cycle.begin(), cycle.end(), rng);
    r.set(v, std::move(cycle));
  }
  return r;
}

}  // namespace uht
