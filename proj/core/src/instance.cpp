#include "optrepair/instance.hpp"

#include <algorithm>

#include "optrepair/errors.hpp"

namespace optrepair {

std::optional<std::uint32_t> IndexedHypergraph::vertex_of(FactId f) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), f);
  if (it == vertices.end() || *it != f) return std::nullopt;
  return static_cast<std::uint32_t>(it - vertices.begin());
}

struct Instance::Data {
  Database db;
  std::vector<UniversalConstraint> constraints;
  Schema schema;
  Universe universe;
  std::vector<Cube> cubes;
  std::vector<std::vector<FactId>> conflicts;
  IndexedHypergraph hypergraph;
};

Instance::Instance() : Instance(Database{}, {}) {}

Instance::Instance(Database db, std::vector<UniversalConstraint> constraints,
                   const Schema& schema) {
  auto d = std::make_shared<Data>();
  d->schema = schema;
  declare(d->schema, db);
  declare(d->schema, constraints);
  d->db = std::move(db);
  d->constraints = std::move(constraints);
  d->universe = Universe(d->db, d->schema);
  d->cubes = ground_cubes(d->universe, d->constraints);

  auto primes = prime_implicants(prune_dead(d->universe, d->cubes));
  const Universe& u = d->universe;
  for (const auto& cube : primes) {
    bool inside = std::all_of(cube.begin(), cube.end(),
                              [&](PLit l) { return u.in_db(plit_fact(l)) == plit_positive(l); });
    if (!inside) continue;
    std::vector<FactId> ids;
    for (PLit l : cube) ids.push_back(plit_fact(l));
    d->conflicts.push_back(std::move(ids));
  }
  std::sort(d->conflicts.begin(), d->conflicts.end());

  auto& h = d->hypergraph;
  for (const auto& c : d->conflicts) h.vertices.insert(h.vertices.end(), c.begin(), c.end());
  std::sort(h.vertices.begin(), h.vertices.end());
  h.vertices.erase(std::unique(h.vertices.begin(), h.vertices.end()), h.vertices.end());
  h.incident.resize(h.vertices.size());
  for (const auto& c : d->conflicts) {
    std::vector<std::uint32_t> e;
    for (FactId f : c) e.push_back(*h.vertex_of(f));
    for (auto v : e) h.incident[v].push_back(static_cast<std::uint32_t>(h.edges.size()));
    h.edges.push_back(std::move(e));
  }
  data_ = std::move(d);
}

const Database& Instance::db() const { return data_->db; }
const std::vector<UniversalConstraint>& Instance::constraints() const { return data_->constraints; }
const Schema& Instance::schema() const { return data_->schema; }
const Universe& Instance::universe() const { return data_->universe; }
const std::vector<Cube>& Instance::cubes() const { return data_->cubes; }
const std::vector<std::vector<FactId>>& Instance::conflict_ids() const { return data_->conflicts; }
const IndexedHypergraph& Instance::hypergraph() const { return data_->hypergraph; }

LiteralSet Instance::literals_of(const std::vector<FactId>& ids) const {
  LiteralSet out;
  for (FactId f : ids) out.insert(data_->universe.literal(f));
  return out;
}

Database Instance::repair_of(const VertexSet& kept) const {
  Database out = data_->db;
  const auto& h = data_->hypergraph;
  for (std::size_t v = 0; v < h.size(); ++v) {
    if (kept[v]) continue;
    FactId f = h.vertices[v];
    if (data_->universe.in_db(f))
      out.erase(data_->universe.fact(f));
    else
      out.insert(data_->universe.fact(f));
  }
  return out;
}

VertexSet Instance::agreement_on_vertices(const Database& candidate) const {
  const auto& h = data_->hypergraph;
  VertexSet out(h.size());
  for (std::size_t v = 0; v < h.size(); ++v) {
    FactId f = h.vertices[v];
    out[v] = static_cast<bool>(candidate.count(data_->universe.fact(f))) == data_->universe.in_db(f);
  }
  return out;
}

void Instance::check_candidate(const Database& candidate) const {
  for (const auto& f : candidate)
    if (!data_->universe.find(f))
      throw InputError("candidate repair contains a fact outside the fact universe");
}

}  // namespace optrepair
