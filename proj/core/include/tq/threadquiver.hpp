#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tq/category.hpp"
#include "tq/poset.hpp"
#include "tq/quiver.hpp"

namespace tq {

struct ThreadArrow {
  std::string name;
  std::string src;
  std::string tgt;
  LinearOrderExpr label;
};

struct StandardArrow {
  std::string name;
  std::string src;
  std::string tgt;
};

// A relation over arrow names; each path lists names in traversal order.
struct NamedRelation {
  std::vector<std::pair<Scalar, std::vector<std::string>>> terms;
};

struct ThreadQuiver {
  std::vector<std::string> vertices;
  std::vector<StandardArrow> standard;
  std::vector<ThreadArrow> threads;
  std::vector<NamedRelation> relations;

  // Throws DuplicateName, UnknownVertex, NestedThreadLabel, InvalidArgument.
  void validate() const;
  bool has_name(const std::string& n) const;
};

bool operator==(const ThreadQuiver& a, const ThreadQuiver& b);

// A finite slice of kQ: quiver with relations, boundary marks and embeddings.
struct Window {
  Quiver quiver;
  std::vector<Relation> relations;
  std::vector<bool> boundary;               // per window vertex
  std::vector<std::uint8_t> cuts;           // CutFlag bits per window vertex
  std::vector<int> embed_r;                 // thread-quiver vertex -> window vertex
  std::vector<std::vector<int>> embed_t;    // per thread arrow: chain element -> window vertex
  std::vector<FiniteChain> chains;          // per thread arrow
  std::vector<std::vector<int>> chain_arrows;  // per thread arrow: consecutive window arrows
  int depth = 0;

  // Built on first use and shared by copies.
  CategoryPtr category() const;
  std::vector<int> interior() const;

 private:
  mutable CategoryPtr cached_;
};

// Plain window over a quiver with relations (no threads).
Window make_window(const Quiver& q, const std::vector<Relation>& rels, std::vector<std::uint8_t> cuts = {});

Quiver underlying_quiver(const ThreadQuiver& tq);
// Relations of the underlying quiver (thread arrows read as plain arrows).
std::vector<Relation> underlying_relations(const ThreadQuiver& tq, const Quiver& q);

ThreadQuiver normalize(const ThreadQuiver& tq);
Window expand(const ThreadQuiver& tq, int depth);

// Vertex bijection w1 -> w2 or nullopt. Throws TooLarge above 60 vertices.
std::optional<std::vector<int>> window_iso(const Window& w1, const Window& w2);

inline constexpr int kWindowIsoLimit = 60;

}  // namespace tq
