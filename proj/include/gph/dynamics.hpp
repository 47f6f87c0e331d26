#pragma once

#include "gph/graph.hpp"
#include "gph/graph_json.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gph {

// A finite set with an endofunction sigma. Elements are kept in id order
// and sigma is stored by index.
class FinNSet {
 public:
  FinNSet() = default;
  // Throws InvalidInput on duplicate ids or when sigma is not total.
  FinNSet(std::vector<std::string> elements, const std::map<std::string, std::string>& sigma);
  // Index form: sigma[i] is the image of elements()[i]; elements must be sorted.
  static FinNSet from_indices(std::vector<std::string> elements, std::vector<std::size_t> sigma);

  std::size_t size() const { return elements_.size(); }
  std::span<const std::string> elements() const { return elements_; }
  std::span<const std::size_t> sigma() const { return sigma_; }
  std::size_t sigma(std::size_t x) const { return sigma_[x]; }
  const std::string& id(std::size_t x) const { return elements_[x]; }
  std::size_t index(const std::string& id) const;

  // sigma^n(x) = x for some 1 <= n <= size().
  bool is_periodic(std::size_t x) const;
  bool is_bijective() const;

  bool operator==(const FinNSet&) const = default;

 private:
  std::vector<std::string> elements_;
  std::vector<std::size_t> sigma_;
};

// A FinNSet whose sigma is a bijection.
class FinZSet {
 public:
  FinZSet() = default;
  // Throws InvalidInput when sigma is not bijective.
  explicit FinZSet(FinNSet set);

  const FinNSet& as_nset() const { return set_; }
  std::size_t size() const { return set_.size(); }

  // Number of orbits of each length: result[n] = s_n, result[0] = 0.
  std::vector<std::size_t> orbit_counts() const;

  bool operator==(const FinZSet&) const = default;

 private:
  FinNSet set_;
};

// An equivariant map of N-sets: sigma' ∘ f = f ∘ sigma.
class NSetMap {
 public:
  NSetMap(FinNSet source, FinNSet target, std::vector<std::size_t> map);
  static NSetMap from_ids(FinNSet source, FinNSet target,
                          const std::map<std::string, std::string>& map);

  const FinNSet& source() const { return source_; }
  const FinNSet& target() const { return target_; }
  std::size_t operator()(std::size_t x) const { return map_[x]; }
  std::span<const std::size_t> map() const { return map_; }

 private:
  FinNSet source_;
  FinNSet target_;
  std::vector<std::size_t> map_;
};

// The Cayley graph G(S): nodes = arcs = S, arc x runs from sigma(x) to x.
Graph cayley_graph(const FinNSet& set);

// The inverse of cayley_graph on N-graphs: sigma(x) = source of the unique
// arc entering x. Throws NotAnNGraph if some node has indegree != 1.
FinNSet graph_to_nset(const Graph& graph);

// G(f): the node map and the arc map are both f.
GraphMorphism cayley_morphism(const NSetMap& map);

// The periodic elements, with sigma restricted.
FinZSet periodic_part(const FinNSet& set);

struct NSetMapFlags {
  bool acyclic;     // up to the bound used
  std::size_t acyclic_bound;
  bool surjecting;
  bool whiskering;
};

// acyclic: f restricts to bijections on n-periodic points for n <= bound
// (default max(|S|,|T|), which covers every period of a finite N-set).
// surjecting: f maps sigma^-1(x) onto sigma^-1(f(x)) for every x.
// whiskering: f injective, and every y outside the image reaches it under
// some sigma^n with n <= |T|.
NSetMapFlags classify_nset_map(const NSetMap& map, std::optional<std::size_t> bound = {});

// For maps of Z-sets: true iff f is a bijection on periodic parts.
// Throws InvalidInput if either side is not a Z-set.
bool zset_is_acyclic(const NSetMap& map);

struct Fibrancy {
  bool fibrant;
  bool cofibrant;
};

// fibrant iff sigma is surjective; cofibrant iff every trajectory is finite.
Fibrancy nset_fibrancy(const FinNSet& set);

Json to_json(const FinNSet& set);
Json to_json(const NSetMap& map);
FinNSet nset_from_json(const Json& json, const std::string& where = "$");
FinZSet zset_from_json(const Json& json, const std::string& where = "$");
NSetMap nset_map_from_json(const Json& json, const std::string& where = "$");

}  // namespace gph
