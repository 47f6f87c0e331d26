#include "gph/homotopy.hpp"

#include "gph/constructions.hpp"
#include "gph/error.hpp"
#include "gph/search.hpp"
#include "gph/spectral.hpp"
#include "gph/witt.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

namespace gph {

HomotopySignature signature(const Graph& graph) {
  return {reversed_char_poly(adjacency_matrix(graph))};
}

bool homotopy_equivalent(const Graph& x, const Graph& y) {
  const bool by_polynomial = signature(x) == signature(y);
  const std::size_t bound = std::max(x.node_count(), y.node_count());
  const bool by_census = cycle_counts(x, bound) == cycle_counts(y, bound);
  if (by_polynomial != by_census) {
    throw InternalInconsistency("det(I - uA) comparison and cycle-count comparison disagree");
  }
  return by_polynomial;
}

Integer hom_count_bounded(const Graph& x, const Graph& y, std::size_t bound) {
  if (bound == 0) throw InvalidInput("hom count needs a bound >= 1");
  const auto source = from_graph(x);
  const auto target_ghost = cycle_counts(y, bound);
  Integer count = 1;
  for (std::size_t n = 1; n <= bound; ++n) {
    const Integer orbits = source.witt(n);
    if (orbits == 0) continue;
    if (orbits > std::numeric_limits<unsigned>::max()) {
      throw InvalidInput("orbit count too large to exponentiate");
    }
    count *= boost::multiprecision::pow(target_ghost[n - 1], orbits.convert_to<unsigned>());
  }
  return count;
}

Integer derived_components(const Graph& graph, std::size_t bound) {
  if (bound == 0) throw InvalidInput("derived components need a bound >= 1");
  const auto witt = from_graph(graph).witt_upto(bound);
  return std::accumulate(witt.begin(), witt.end(), Integer(0));
}

bool SignatureBucket::has_nonisomorphic_pair() const {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!isomorphic[i][j]) return true;
    }
  }
  return false;
}

std::vector<ExploreMember> builtin_family() {
  std::vector<std::string> names = {"empty", "dot", "arrow", "figure-eight", "cross", "uc4"};
  for (int n = 1; n <= 5; ++n) names.push_back("cycle:" + std::to_string(n));
  for (int n = 2; n <= 4; ++n) names.push_back("path:" + std::to_string(n));
  for (int n = 3; n <= 4; ++n) names.push_back("bouquet:" + std::to_string(n));
  std::vector<ExploreMember> family;
  for (const auto& name : names) family.push_back({name, named_graph(name)});
  return family;
}

namespace {

using Matrix = std::vector<std::size_t>;  // row-major k x k arc multiplicities

Matrix permuted(const Matrix& m, std::size_t k, const std::vector<std::size_t>& perm) {
  Matrix out(m.size());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out[perm[i] * k + perm[j]] = m[i * k + j];
  }
  return out;
}

bool is_canonical(const Matrix& m, std::size_t k) {
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (permuted(m, k, perm) < m) return false;
  }
  return true;
}

Graph graph_of(const Matrix& m, std::size_t k) {
  std::vector<std::string> nodes;
  for (std::size_t i = 0; i < k; ++i) nodes.push_back(std::to_string(i));
  std::vector<ArcSpec> arcs;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t t = 0; t < m[i * k + j]; ++t) {
        std::string id = "(" + nodes[i] + "," + nodes[j] + ")";
        if (t > 0) id += "#" + std::to_string(t);
        arcs.push_back({id, nodes[i], nodes[j]});
      }
    }
  }
  return Graph(std::move(nodes), std::move(arcs));
}

// Every k x k multiplicity matrix with entry sum <= max_arcs, in
// lexicographic order, keeping the least of each permutation class.
void enumerate_canonical(std::size_t k, std::size_t max_arcs, SearchBudget& budget,
                         std::vector<ExploreMember>& out) {
  Matrix m(k * k, 0);
  std::size_t used = 0;
  auto recurse = [&](auto&& self, std::size_t cell) -> void {
    if (cell == m.size()) {
      budget.charge();
      if (is_canonical(m, k)) {
        std::string name = "k" + std::to_string(k) + "[";
        for (std::size_t i = 0; i < m.size(); ++i) {
          name += (i == 0 ? "" : ",") + std::to_string(m[i]);
        }
        out.push_back({name + "]", graph_of(m, k)});
      }
      return;
    }
    for (std::size_t v = 0; used + v <= max_arcs; ++v) {
      m[cell] = v;
      used += v;
      self(self, cell + 1);
      used -= v;
    }
    m[cell] = 0;
  };
  recurse(recurse, 0);
}

template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(count, 1));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

ExploreReport explore(const ExploreOptions& options) {
  SearchBudget budget(options.search_budget);
  std::vector<ExploreMember> candidates;
  if (options.exhaustive) {
    for (std::size_t k = 0; k <= options.max_nodes; ++k) {
      enumerate_canonical(k, options.max_arcs, budget, candidates);
    }
  } else {
    for (auto& member : builtin_family()) {
      if (member.graph.node_count() <= options.max_nodes &&
          member.graph.arc_count() <= options.max_arcs) {
        candidates.push_back(std::move(member));
      }
    }
  }

  std::vector<HomotopySignature> signatures(candidates.size());
  parallel_for(candidates.size(), options.workers,
               [&](std::size_t i) { signatures[i] = signature(candidates[i].graph); });

  std::map<std::string, std::vector<std::size_t>> by_signature;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    by_signature[signatures[i].to_string()].push_back(i);
  }

  ExploreReport report;
  report.graphs_examined = candidates.size();
  for (const auto& [text, indices] : by_signature) {
    SignatureBucket bucket;
    bucket.signature = signatures[indices.front()];
    for (std::size_t i : indices) bucket.members.push_back(candidates[i]);
    const std::size_t n = bucket.members.size();
    bucket.isomorphic.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      bucket.isomorphic[i][i] = true;
      for (std::size_t j = i + 1; j < n; ++j) {
        // Exhaustive candidates are distinct isomorphism classes already.
        bool iso = !options.exhaustive &&
                   find_isomorphism(bucket.members[i].graph, bucket.members[j].graph, budget)
                       .has_value();
        bucket.isomorphic[i][j] = bucket.isomorphic[j][i] = iso;
      }
    }
    report.buckets.push_back(std::move(bucket));
  }
  return report;
}

}  // namespace gph
