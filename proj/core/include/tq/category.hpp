#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tq/matrix.hpp"
#include "tq/quiver.hpp"

namespace tq {

// A word is a composable sequence of generator indices in traversal order.
using Word = std::vector<int>;
// A linear combination of words.
using Expr = std::vector<std::pair<Scalar, Word>>;
using Vec = std::vector<Scalar>;

// Boundary flags of a truncation window: which neighbours of an object were cut away.
enum CutFlag : std::uint8_t { kCutBefore = 1, kCutAfter = 2 };

struct Generator {
  std::string name;
  int src = 0;
  int tgt = 0;
  Vec coords;  // in hom(src, tgt)
};

// A Hom-finite k-linear category with finitely many indecomposable objects and
// no oriented cycles: hom(x, x) = k for every object.
//
// hom(x, y) carries a fixed basis; composition is stored as structure
// constants. Every basis element has an expression in the generators, so a
// representation is determined by its generator matrices.
class Category : public std::enable_shared_from_this<Category> {
 public:
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int x) const { return names_.at(x); }
  const std::vector<std::string>& names() const { return names_; }
  int index(const std::string& name) const;
  bool is_boundary(int x) const { return cuts_.at(x) != 0; }
  bool cut_before(int x) const { return cuts_.at(x) & kCutBefore; }
  bool cut_after(int x) const { return cuts_.at(x) & kCutAfter; }
  const std::vector<std::uint8_t>& cuts() const { return cuts_; }

  std::size_t dim(int x, int y) const { return dims_[x * size() + y]; }
  const Expr& basis_expr(int x, int y, std::size_t i) const { return exprs_[x * size() + y].at(i); }

  const std::vector<Generator>& generators() const { return gens_; }
  std::vector<int> gens_out(int x) const;
  std::vector<int> gens_in(int x) const;

  // g in hom(y, z), f in hom(x, y) -> g o f in hom(x, z)
  Vec compose(int x, int y, int z, const Vec& g, const Vec& f) const;
  Vec identity(int /*x*/) const { return Vec{Scalar(1)}; }
  Vec zero(int x, int y) const { return Vec(dim(x, y), Scalar(0)); }
  Vec unit(int x, int y, std::size_t i) const;

  const std::vector<int>& topological_order() const { return topo_; }

  std::shared_ptr<const Category> opposite() const;

  // Full subcategory on the given objects (kept in the given order).
  std::shared_ptr<const Category> full_subcategory(const std::vector<int>& objects) const;

  // Builders.
  static std::shared_ptr<const Category> from_quiver(const Quiver& q, const std::vector<Relation>& rels,
                                                     const std::vector<std::uint8_t>& cuts = {});

 private:
  Category() = default;
  static std::shared_ptr<Category> make() { return std::shared_ptr<Category>(new Category()); }
  void init_storage(std::vector<std::string> names);
  std::uint64_t key(int x, int y, int z) const {
    return (static_cast<std::uint64_t>(x) * size() + y) * size() + z;
  }
  const Matrix* mult(int x, int y, int z) const;
  void compute_topological_order();
  void derive_expressions();

  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<std::uint8_t> cuts_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<Expr>> exprs_;
  std::vector<Generator> gens_;
  // key(x,y,z) -> matrix dim(x,z) x (dim(y,z) * dim(x,y)); column i*dim(x,y)+j is e_i o e_j
  std::unordered_map<std::uint64_t, Matrix> mult_;
  std::vector<int> topo_;

  mutable std::mutex op_mutex_;
  mutable std::weak_ptr<const Category> op_weak_;
  mutable std::shared_ptr<const Category> op_strong_;
};

using CategoryPtr = std::shared_ptr<const Category>;

// Formal direct sum of indecomposable objects (with repetition).
using ObjectSum = std::vector<int>;

std::string sum_str(const Category& c, const ObjectSum& s);

// A morphism between formal sums: entry (i, j) lies in hom(src[j], tgt[i]).
struct VarietyMor {
  ObjectSum src;
  ObjectSum tgt;
  std::vector<std::vector<Vec>> entries;  // [i][j]

  static VarietyMor zero(const Category& c, ObjectSum src, ObjectSum tgt);
  static VarietyMor identity(const Category& c, const ObjectSum& s);
};

VarietyMor compose(const Category& c, const VarietyMor& g, const VarietyMor& f);
// f: src -> tgt of the opposite of `into`, read as tgt -> src of `into`.
VarietyMor opposite_mor(const Category& into, const VarietyMor& f);

}  // namespace tq
