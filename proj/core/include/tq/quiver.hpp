#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tq/matrix.hpp"

namespace tq {

struct Arrow {
  std::string name;
  int src = 0;
  int tgt = 0;
};

// A finite quiver. Loops and multiple arrows are allowed.
class Quiver {
 public:
  int add_vertex(const std::string& name);
  int add_arrow(const std::string& name, int src, int tgt);
  int add_arrow(const std::string& name, const std::string& src, const std::string& tgt);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex(int v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::optional<int> find_vertex(const std::string& name) const;
  std::optional<int> find_arrow(const std::string& name) const;
  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;

  std::vector<int> out_arrows(int v) const;
  std::vector<int> in_arrows(int v) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vindex_;
  std::map<std::string, int> aindex_;
};

// Arrows are listed in traversal order: arrows[0] leaves src.
struct Path {
  int src = 0;
  int tgt = 0;
  std::vector<int> arrows;

  std::size_t length() const { return arrows.size(); }
  static Path identity(int v) { return {v, v, {}}; }
  friend bool operator==(const Path&, const Path&) = default;
};

Path make_path(const Quiver& q, const std::vector<int>& arrows);
std::string path_str(const Quiver& q, const Path& p);

// A k-linear combination of parallel paths, read as "= 0".
struct Relation {
  std::vector<std::pair<Scalar, Path>> terms;
};

void validate_relation(const Quiver& q, const Relation& r);

bool is_acyclic(const Quiver& q);
// Finite quivers: strongly locally finite iff acyclic.
inline bool is_strongly_locally_finite(const Quiver& q) { return is_acyclic(q); }
std::vector<int> topological_order(const Quiver& q);

// All paths x -> y of length <= max_len ordered by (length, arrow names).
std::vector<Path> enumerate_paths(const Quiver& q, int x, int y, std::size_t max_len);

// Basis of hom(x, y) in the path category modulo the ideal of the relations.
struct HomPaths {
  std::size_t dimension = 0;
  std::vector<Path> paths;            // every path x -> y
  std::vector<std::size_t> basis;     // indices into paths
  Matrix reduction;                   // dimension x paths.size(): coordinates of each path

  std::vector<Scalar> coordinates(const Path& p) const;
  std::optional<std::size_t> path_index(const Path& p) const;
};

HomPaths hom_basis_paths(const Quiver& q, const std::vector<Relation>& rels, int x, int y);

// paths[x][y]: every path x -> y, ordered as in enumerate_paths.
using PathTable = std::vector<std::vector<std::vector<Path>>>;
PathTable all_paths(const Quiver& q);
HomPaths hom_basis_paths(const Quiver& q, const std::vector<Relation>& rels, const PathTable& table, int x,
                         int y);

}  // namespace tq
