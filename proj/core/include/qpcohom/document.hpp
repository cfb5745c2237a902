#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpcohom/geometry.hpp"
#include "qpcohom/potential.hpp"
#include "qpcohom/theorems.hpp"

namespace qpc {

// Parsed input file. Either algebraic ([quiver] with [relations] and/or
// [potential]) or geometric ([surface] + [triangulation]).
struct InputDocument {
  std::optional<Quiver> quiver;  // as declared, before any extension
  bool has_relations = false;
  std::vector<Relation> relations;
  // Potential over the declared quiver, or over its relation extension when
  // relations are present.
  std::optional<Potential> potential;
  std::optional<TameClass> declared;
  std::optional<Triangulation> triangulation;

  bool is_geometric() const { return triangulation.has_value(); }
  // Relation extension when relations are given, else the declared QP.
  QP qp() const;
};

// Throws InputError with the offending line and token.
InputDocument parse_document(std::string_view text);
InputDocument load_document(const std::string& path);

}  // namespace qpc
