#include <algorithm>
#include <map>
#include <mutex>

#include <omp.h>

#include "tutte/error.hpp"
#include "tutte/tutte.hpp"

namespace tutte {

TutteCache::Key TutteCache::key_of(const MultiGraph& block) {
  Key key;
  key.reserve(block.edge_count() + 1);
  key.push_back(block.vertex_count());
  for (auto [a, b] : edge_signature(block)) {
    key.push_back((std::uint64_t{a} << 32) | b);
  }
  return key;
}

std::size_t TutteCache::KeyHash::operator()(const Key& k) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t v : k) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::optional<BivarPoly> TutteCache::find(const Key& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void TutteCache::insert(Key key, const BivarPoly& value) {
  std::unique_lock lock(mutex_);
  table_.try_emplace(std::move(key), value);
}

std::size_t TutteCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void TutteCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
  hits_ = 0;
  misses_ = 0;
}

namespace {

class DelconSolver {
 public:
  DelconSolver(TutteCache& cache, const DelconOptions& options)
      : cache_(cache), options_(options) {}

  // g must be connected.
  BivarPoly solve(const MultiGraph& g, unsigned depth) {
    if (g.edge_count() == 0) return BivarPoly(1);
    BivarPoly product(1);
    for (const auto& block : blocks(g)) product = product * solve_block(block, depth);
    return product;
  }

 private:
  BivarPoly solve_block(const MultiGraph& block, unsigned depth) {
    if (block.edge_count() == 1) {
      return block.edges().front().is_loop() ? BivarPoly::y() : BivarPoly::x();
    }
    auto key = TutteCache::key_of(block);
    if (auto hit = cache_.find(key)) return *hit;

    // A block with two or more edges is loopless and bridgeless.
    const EdgeId e = branch_edge(block);
    const MultiGraph deleted = block.delete_edge(e);
    const MultiGraph contracted = block.contract_edge(e);
    BivarPoly result;
    if (options_.parallel && depth < options_.task_depth && omp_in_parallel()) {
      BivarPoly del;
#pragma omp task shared(del, deleted) firstprivate(depth)
      del = solve(deleted, depth + 1);
      BivarPoly con = solve(contracted, depth + 1);
#pragma omp taskwait
      result = del + con;
    } else {
      result = solve(deleted, depth + 1) + solve(contracted, depth + 1);
    }
    cache_.insert(std::move(key), result);
    return result;
  }

  EdgeId branch_edge(const MultiGraph& block) const {
    if (options_.branch == BranchRule::first_in_id_order) return 0;
    std::map<std::pair<VertexId, VertexId>, std::size_t> multiplicity;
    for (const auto& e : block.edges()) ++multiplicity[{std::min(e.a, e.b), std::max(e.a, e.b)}];
    EdgeId best = 0;
    std::size_t best_count = 0;
    for (EdgeId id = 0; id < block.edge_count(); ++id) {
      const auto& e = block.edges()[id];
      const std::size_t c = multiplicity[{std::min(e.a, e.b), std::max(e.a, e.b)}];
      if (c > best_count) {
        best = id;
        best_count = c;
      }
    }
    return best;
  }

  TutteCache& cache_;
  const DelconOptions& options_;
};

}  // namespace

BivarPoly tutte_delcon(const MultiGraph& g, TutteCache& cache, const DelconOptions& options) {
  if (!g.is_connected()) throw Disconnected("deletion-contraction requires a connected graph");
  DelconSolver solver(cache, options);
  if (!options.parallel || omp_in_parallel()) return solver.solve(g, 0);
  BivarPoly result;
#pragma omp parallel
#pragma omp single
  result = solver.solve(g, 0);
  return result;
}

BivarPoly tutte_delcon(const MultiGraph& g, const DelconOptions& options) {
  TutteCache cache;
  return tutte_delcon(g, cache, options);
}

}  // namespace tutte
