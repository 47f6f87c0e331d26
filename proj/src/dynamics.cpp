#include "gph/dynamics.hpp"

#include "gph/error.hpp"

#include <algorithm>
#include <set>

namespace gph {

FinNSet::FinNSet(std::vector<std::string> elements,
                 const std::map<std::string, std::string>& sigma) {
  std::sort(elements.begin(), elements.end());
  if (auto dup = std::adjacent_find(elements.begin(), elements.end()); dup != elements.end()) {
    throw InvalidInput("duplicate element id '" + *dup + "'");
  }
  elements_ = std::move(elements);
  sigma_.resize(elements_.size());
  std::vector<bool> seen(elements_.size());
  for (const auto& [from, to] : sigma) {
    std::size_t x = index(from);
    sigma_[x] = index(to);
    seen[x] = true;
  }
  for (std::size_t x = 0; x < seen.size(); ++x) {
    if (!seen[x]) throw InvalidInput("sigma is not defined on '" + elements_[x] + "'");
  }
}

FinNSet FinNSet::from_indices(std::vector<std::string> elements, std::vector<std::size_t> sigma) {
  if (!std::is_sorted(elements.begin(), elements.end()) ||
      std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw InvalidInput("element ids must be sorted and distinct");
  }
  if (sigma.size() != elements.size()) throw InvalidInput("sigma is not total");
  for (std::size_t y : sigma) {
    if (y >= elements.size()) throw InvalidInput("sigma leaves the set");
  }
  FinNSet set;
  set.elements_ = std::move(elements);
  set.sigma_ = std::move(sigma);
  return set;
}

std::size_t FinNSet::index(const std::string& id) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), id);
  if (it == elements_.end() || *it != id) throw InvalidInput("unknown element '" + id + "'");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool FinNSet::is_periodic(std::size_t x) const {
  std::size_t y = x;
  for (std::size_t n = 1; n <= size(); ++n) {
    y = sigma_[y];
    if (y == x) return true;
  }
  return false;
}

bool FinNSet::is_bijective() const {
  std::vector<bool> hit(size());
  for (std::size_t y : sigma_) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

FinZSet::FinZSet(FinNSet set) : set_(std::move(set)) {
  if (!set_.is_bijective()) throw InvalidInput("sigma is not a bijection");
}

std::vector<std::size_t> FinZSet::orbit_counts() const {
  std::vector<std::size_t> counts(size() + 1, 0);
  std::vector<bool> seen(size());
  for (std::size_t x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    std::size_t length = 0;
    for (std::size_t y = x; !seen[y]; y = set_.sigma(y)) {
      seen[y] = true;
      ++length;
    }
    ++counts[length];
  }
  return counts;
}

NSetMap::NSetMap(FinNSet source, FinNSet target, std::vector<std::size_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_.size()) throw InvalidInput("map is not total on the source");
  for (std::size_t y : map_) {
    if (y >= target_.size()) throw InvalidInput("map leaves the target");
  }
  for (std::size_t x = 0; x < map_.size(); ++x) {
    if (target_.sigma(map_[x]) != map_[source_.sigma(x)]) {
      throw InvalidInput("map does not commute with sigma at '" + source_.id(x) + "'");
    }
  }
}

NSetMap NSetMap::from_ids(FinNSet source, FinNSet target,
                          const std::map<std::string, std::string>& map) {
  std::vector<std::size_t> indices(source.size());
  std::vector<bool> seen(source.size());
  for (const auto& [from, to] : map) {
    std::size_t x = source.index(from);
    indices[x] = target.index(to);
    seen[x] = true;
  }
  for (std::size_t x = 0; x < seen.size(); ++x) {
    if (!seen[x]) throw InvalidInput("map is not defined on '" + source.id(x) + "'");
  }
  return NSetMap(std::move(source), std::move(target), std::move(indices));
}

Graph cayley_graph(const FinNSet& set) {
  std::vector<std::string> nodes(set.elements().begin(), set.elements().end());
  std::vector<ArcSpec> arcs;
  for (std::size_t x = 0; x < set.size(); ++x) {
    arcs.push_back({set.id(x), set.id(set.sigma(x)), set.id(x)});
  }
  return Graph(std::move(nodes), std::move(arcs));
}

FinNSet graph_to_nset(const Graph& graph) {
  std::vector<std::size_t> sigma(graph.node_count());
  for (std::size_t v = 0; v < graph.node_count(); ++v) {
    if (graph.indegree(v) != 1) {
      throw NotAnNGraph("node '" + graph.node_id(v) + "' has indegree " +
                        std::to_string(graph.indegree(v)) + ", expected 1");
    }
    sigma[v] = graph.arc(graph.in_arcs(v).front()).src;
  }
  return FinNSet::from_indices(std::vector(graph.nodes().begin(), graph.nodes().end()),
                               std::move(sigma));
}

GraphMorphism cayley_morphism(const NSetMap& map) {
  Graph source = cayley_graph(map.source());
  Graph target = cayley_graph(map.target());
  std::vector<std::size_t> images(map.map().begin(), map.map().end());
  // In a Cayley graph arc x and node x share an id, hence an index.
  return GraphMorphism(std::move(source), std::move(target), images, images);
}

FinZSet periodic_part(const FinNSet& set) {
  std::vector<std::size_t> kept;
  for (std::size_t x = 0; x < set.size(); ++x) {
    if (set.is_periodic(x)) kept.push_back(x);
  }
  std::vector<std::string> ids;
  std::vector<std::size_t> position(set.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    ids.push_back(set.id(kept[i]));
    position[kept[i]] = i;
  }
  std::vector<std::size_t> sigma;
  for (std::size_t x : kept) sigma.push_back(position[set.sigma(x)]);
  return FinZSet(FinNSet::from_indices(std::move(ids), std::move(sigma)));
}

namespace {

std::vector<std::size_t> iterate(const FinNSet& set, std::size_t n) {
  std::vector<std::size_t> out(set.size());
  for (std::size_t x = 0; x < set.size(); ++x) {
    std::size_t y = x;
    for (std::size_t k = 0; k < n; ++k) y = set.sigma(y);
    out[x] = y;
  }
  return out;
}

}  // namespace

NSetMapFlags classify_nset_map(const NSetMap& f, std::optional<std::size_t> bound) {
  const FinNSet& s = f.source();
  const FinNSet& t = f.target();
  NSetMapFlags flags{};
  flags.acyclic_bound = bound.value_or(std::max<std::size_t>({s.size(), t.size(), 1}));

  flags.acyclic = true;
  for (std::size_t n = 1; n <= flags.acyclic_bound && flags.acyclic; ++n) {
    auto sn = iterate(s, n);
    auto tn = iterate(t, n);
    std::vector<std::size_t> hits(t.size(), 0);
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (sn[x] == x) ++hits[f(x)];
    }
    for (std::size_t y = 0; y < t.size(); ++y) {
      if ((tn[y] == y && hits[y] != 1) || (tn[y] != y && hits[y] != 0)) flags.acyclic = false;
    }
  }

  // Preimages under sigma, for the fibres sigma^-1(x).
  std::vector<std::vector<std::size_t>> s_pre(s.size()), t_pre(t.size());
  for (std::size_t x = 0; x < s.size(); ++x) s_pre[s.sigma(x)].push_back(x);
  for (std::size_t y = 0; y < t.size(); ++y) t_pre[t.sigma(y)].push_back(y);
  flags.surjecting = true;
  for (std::size_t x = 0; x < s.size() && flags.surjecting; ++x) {
    std::set<std::size_t> image;
    for (std::size_t p : s_pre[x]) image.insert(f(p));
    flags.surjecting = image.size() == t_pre[f(x)].size();
  }

  std::vector<bool> in_image(t.size());
  flags.whiskering = true;
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (in_image[f(x)]) flags.whiskering = false;
    in_image[f(x)] = true;
  }
  for (std::size_t y = 0; y < t.size() && flags.whiskering; ++y) {
    std::size_t z = y;
    bool reached = in_image[z];
    for (std::size_t n = 1; n <= t.size() && !reached; ++n) {
      z = t.sigma(z);
      reached = in_image[z];
    }
    flags.whiskering = reached;
  }
  return flags;
}

bool zset_is_acyclic(const NSetMap& f) {
  if (!f.source().is_bijective() || !f.target().is_bijective()) {
    throw InvalidInput("zset_is_acyclic needs maps between Z-sets");
  }
  std::vector<std::size_t> hits(f.target().size(), 0);
  for (std::size_t x = 0; x < f.source().size(); ++x) {
    if (f.source().is_periodic(x)) ++hits[f(x)];
  }
  for (std::size_t y = 0; y < f.target().size(); ++y) {
    if (f.target().is_periodic(y) != (hits[y] == 1) || hits[y] > 1) return false;
  }
  return true;
}

Fibrancy nset_fibrancy(const FinNSet& set) {
  std::vector<bool> hit(set.size());
  for (std::size_t y : set.sigma()) hit[y] = true;
  bool fibrant = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });

  // A trajectory is finite iff it revisits an element within size() steps.
  bool cofibrant = true;
  for (std::size_t x = 0; x < set.size() && cofibrant; ++x) {
    std::vector<bool> seen(set.size());
    std::size_t y = x;
    std::size_t steps = 0;
    while (!seen[y] && steps <= set.size()) {
      seen[y] = true;
      y = set.sigma(y);
      ++steps;
    }
    cofibrant = seen[y];
  }
  return {fibrant, cofibrant};
}

Json to_json(const FinNSet& set) {
  Json elements = Json::array();
  Json sigma = Json::object();
  for (std::size_t x = 0; x < set.size(); ++x) {
    elements.push_back(set.id(x));
    sigma[set.id(x)] = set.id(set.sigma(x));
  }
  return Json{{"elements", std::move(elements)}, {"sigma", std::move(sigma)}};
}

Json to_json(const NSetMap& map) {
  Json images = Json::object();
  for (std::size_t x = 0; x < map.source().size(); ++x) {
    images[map.source().id(x)] = map.target().id(map(x));
  }
  return Json{
      {"source", to_json(map.source())}, {"target", to_json(map.target())}, {"map", images}};
}

namespace {

std::map<std::string, std::string> read_string_map(const Json& json, const std::string& where) {
  if (!json.is_object()) throw InvalidInput(where + ": expected an object");
  std::map<std::string, std::string> out;
  for (const auto& item : json.items()) {
    if (!item.value().is_string()) {
      throw InvalidInput(where + "." + item.key() + ": expected a string");
    }
    out[item.key()] = item.value().get<std::string>();
  }
  return out;
}

}  // namespace

FinNSet nset_from_json(const Json& json, const std::string& where) {
  check_fields(json, {"elements", "sigma"}, where);
  const Json& elements_json = json.at("elements");
  if (!elements_json.is_array()) throw InvalidInput(where + ".elements: expected an array");
  std::vector<std::string> elements;
  for (std::size_t i = 0; i < elements_json.size(); ++i) {
    if (!elements_json[i].is_string()) {
      throw InvalidInput(where + ".elements[" + std::to_string(i) + "]: expected a string");
    }
    elements.push_back(elements_json[i].get<std::string>());
  }
  auto sigma = read_string_map(json.at("sigma"), where + ".sigma");
  try {
    return FinNSet(std::move(elements), sigma);
  } catch (const InvalidInput& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

FinZSet zset_from_json(const Json& json, const std::string& where) {
  FinNSet set = nset_from_json(json, where);
  try {
    return FinZSet(std::move(set));
  } catch (const InvalidInput& e) {
    throw InvalidInput(where + ".sigma: " + e.what());
  }
}

NSetMap nset_map_from_json(const Json& json, const std::string& where) {
  check_fields(json, {"source", "target", "map"}, where);
  FinNSet source = nset_from_json(json.at("source"), where + ".source");
  FinNSet target = nset_from_json(json.at("target"), where + ".target");
  auto map = read_string_map(json.at("map"), where + ".map");
  try {
    return NSetMap::from_ids(std::move(source), std::move(target), map);
  } catch (const InvalidInput& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

}  // namespace gph
