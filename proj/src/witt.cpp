#include "gph/witt.hpp"

#include "gph/error.hpp"
#include "gph/spectral.hpp"

#include <mutex>
#include <optional>

namespace gph {

int mobius(std::size_t n) {
  if (n == 0) throw InvalidInput("mobius is defined for n >= 1");
  static std::mutex mutex;
  static std::vector<int> memo{0, 1};
  {
    std::lock_guard lock(mutex);
    if (n < memo.size() && memo[n] != 2) return memo[n];
  }
  int mu = 1;
  std::size_t m = n;
  for (std::size_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) {
      mu = 0;
      break;
    }
    mu = -mu;
  }
  if (mu != 0 && m > 1) mu = -mu;
  std::lock_guard lock(mutex);
  if (memo.size() <= n) memo.resize(n + 1, 2);  // 2 marks "not computed"
  memo[n] = mu;
  return mu;
}

Integer ghost_to_witt(std::span<const Integer> ghost, std::size_t n) {
  if (n == 0 || ghost.size() < n) throw InvalidInput("ghost sequence must cover 1..n");
  Integer sum = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = mobius(n / d);
    if (mu != 0) sum += mu * ghost[d - 1];
  }
  if (sum % n != 0) {
    throw NotRealizable("sum_{d|" + std::to_string(n) + "} mu(n/d) c_d = " + sum.str() +
                        " is not divisible by " + std::to_string(n));
  }
  Integer s = sum / n;
  if (s < 0) {
    throw NotRealizable("Witt coordinate s_" + std::to_string(n) + " = " + s.str() +
                        " is negative");
  }
  return s;
}

Integer witt_to_ghost(std::span<const Integer> witt, std::size_t n) {
  if (n == 0 || witt.size() < n) throw InvalidInput("Witt vector must cover 1..n");
  Integer c = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0) c += d * witt[d - 1];
  }
  return c;
}

struct AlmostFiniteZSet::State {
  GhostSource source;
  std::string provenance;
  std::mutex mutex;
  std::vector<std::optional<Integer>> ghost;  // index n-1
  std::vector<std::optional<Integer>> witt;
};

AlmostFiniteZSet::AlmostFiniteZSet(std::shared_ptr<State> state) : state_(std::move(state)) {}

AlmostFiniteZSet::AlmostFiniteZSet()
    : AlmostFiniteZSet(from_ghost([](std::size_t) { return Integer(0); }, "zero")) {}

AlmostFiniteZSet AlmostFiniteZSet::from_ghost(GhostSource ghost, std::string provenance) {
  auto state = std::make_shared<State>();
  state->source = std::move(ghost);
  state->provenance = std::move(provenance);
  return AlmostFiniteZSet(std::move(state));
}

AlmostFiniteZSet AlmostFiniteZSet::from_orbits(const std::map<std::size_t, Integer>& counts) {
  for (const auto& [n, s] : counts) {
    if (n == 0) throw InvalidInput("orbit sizes start at 1");
    if (s < 0) throw InvalidInput("orbit counts must be nonnegative");
  }
  std::string provenance = "orbits{";
  for (const auto& [n, s] : counts) {
    if (provenance.back() != '{') provenance += ",";
    provenance += std::to_string(n) + ":" + s.str();
  }
  provenance += "}";
  return from_ghost(
      [counts](std::size_t n) {
        Integer c = 0;
        for (const auto& [d, s] : counts) {
          if (d > n) break;
          if (n % d == 0) c += d * s;
        }
        return c;
      },
      std::move(provenance));
}

const std::string& AlmostFiniteZSet::provenance() const { return state_->provenance; }

Integer AlmostFiniteZSet::ghost(std::size_t n) const {
  if (n == 0) throw InvalidInput("ghost components are indexed from 1");
  // The source only touches other instances, so holding this lock is safe.
  std::lock_guard lock(state_->mutex);
  auto& memo = state_->ghost;
  if (memo.size() < n) memo.resize(n);
  if (!memo[n - 1]) memo[n - 1] = state_->source(n);
  return *memo[n - 1];
}

Integer AlmostFiniteZSet::witt(std::size_t n) const {
  if (n == 0) throw InvalidInput("Witt coordinates are indexed from 1");
  {
    std::lock_guard lock(state_->mutex);
    if (state_->witt.size() >= n && state_->witt[n - 1]) return *state_->witt[n - 1];
  }
  Integer s = ghost_to_witt(ghost_upto(n), n);
  std::lock_guard lock(state_->mutex);
  if (state_->witt.size() < n) state_->witt.resize(n);
  state_->witt[n - 1] = s;
  return s;
}

std::vector<Integer> AlmostFiniteZSet::ghost_upto(std::size_t n) const {
  std::vector<Integer> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) out.push_back(ghost(k));
  return out;
}

std::vector<Integer> AlmostFiniteZSet::witt_upto(std::size_t n) const {
  std::vector<Integer> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) out.push_back(witt(k));
  return out;
}

namespace {

// Traces of successive powers, extended on demand.
class CycleCensus {
 public:
  explicit CycleCensus(const Graph& graph) : a_(adjacency_matrix(graph)), power_(a_.order()) {
    for (std::size_t i = 0; i < a_.order(); ++i) power_(i, i) = 1;
  }

  Integer operator()(std::size_t n) {
    while (traces_.size() < n) {
      power_ = power_ * a_;
      traces_.push_back(power_.trace());
    }
    return traces_[n - 1];
  }

 private:
  AdjacencyMatrix a_;
  AdjacencyMatrix power_;
  std::vector<Integer> traces_;
};

}  // namespace

AlmostFiniteZSet from_graph(const Graph& graph) {
  // Guarded by the owning instance's lock, the only caller.
  auto census = std::make_shared<CycleCensus>(graph);
  return AlmostFiniteZSet::from_ghost([census](std::size_t n) { return (*census)(n); },
                                      "graph(" + std::to_string(graph.node_count()) + " nodes, " +
                                          std::to_string(graph.arc_count()) + " arcs)");
}

AlmostFiniteZSet burnside_add(const AlmostFiniteZSet& s, const AlmostFiniteZSet& t) {
  return AlmostFiniteZSet::from_ghost([s, t](std::size_t n) { return s.ghost(n) + t.ghost(n); },
                                      "(" + s.provenance() + " + " + t.provenance() + ")");
}

AlmostFiniteZSet burnside_mul(const AlmostFiniteZSet& s, const AlmostFiniteZSet& t) {
  return AlmostFiniteZSet::from_ghost([s, t](std::size_t n) { return s.ghost(n) * t.ghost(n); },
                                      "(" + s.provenance() + " * " + t.provenance() + ")");
}

std::vector<Integer> zeta_product_form(const AlmostFiniteZSet& s, std::size_t order) {
  std::vector<Integer> series(order + 1, 0);
  series[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    const Integer exponent = s.witt(n);
    if (exponent == 0) continue;
    // (1 - u^n)^(-e) = sum_k binom(e + k - 1, k) u^(nk)
    std::vector<Integer> factor(order + 1, 0);
    Integer binom = 1;
    for (std::size_t k = 0; n * k <= order; ++k) {
      factor[n * k] = binom;
      binom = binom * (exponent + k) / (k + 1);
    }
    std::vector<Integer> product(order + 1, 0);
    for (std::size_t i = 0; i <= order; ++i) {
      if (series[i] == 0) continue;
      for (std::size_t j = 0; i + j <= order; ++j) product[i + j] += series[i] * factor[j];
    }
    series = std::move(product);
  }
  return series;
}

}  // namespace gph
