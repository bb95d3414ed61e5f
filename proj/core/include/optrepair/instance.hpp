#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "optrepair/model.hpp"
#include "optrepair/propositional.hpp"
#include "optrepair/universe.hpp"

namespace optrepair {

// Conflict hypergraph with vertices numbered 0..k-1 (in canonical literal
// order). Edges are sorted lists of vertex numbers.
struct IndexedHypergraph {
  std::vector<FactId> vertices;
  std::vector<std::vector<std::uint32_t>> edges;
  std::vector<std::vector<std::uint32_t>> incident;  // per vertex: edge numbers

  std::size_t size() const { return vertices.size(); }
  std::optional<std::uint32_t> vertex_of(FactId f) const;
};

// Membership mask over hypergraph vertices.
using VertexSet = std::vector<bool>;

// A database with its universal constraints, plus everything derived from the
// pair: fact universe, ground cubes and the conflicts. Immutable and cheap to
// copy.
class Instance {
 public:
  Instance();
  // The schema is extended with every predicate used by `db` and `constraints`;
  // conflicting arities raise InputError.
  Instance(Database db, std::vector<UniversalConstraint> constraints, const Schema& schema = {});

  const Database& db() const;
  const std::vector<UniversalConstraint>& constraints() const;
  const Schema& schema() const;
  const Universe& universe() const;
  const std::vector<Cube>& cubes() const;
  // Conflicts as sorted fact-id lists (each id stands for its Lits^S_D literal).
  const std::vector<std::vector<FactId>>& conflict_ids() const;
  const IndexedHypergraph& hypergraph() const;

  LiteralSet literals_of(const std::vector<FactId>& ids) const;
  // Candidate repair keeping the literals in `kept` plus every literal outside
  // the hypergraph.
  Database repair_of(const VertexSet& kept) const;
  // Vertices on which `candidate` agrees with the database.
  VertexSet agreement_on_vertices(const Database& candidate) const;
  // Throws InputError if `candidate` has a fact outside Facts^S_D.
  void check_candidate(const Database& candidate) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

}  // namespace optrepair
