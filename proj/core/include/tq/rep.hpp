#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "tq/category.hpp"
#include "tq/matrix.hpp"

namespace tq {

// A finitely generated right module over a category: one space per object and
// one matrix per generator g: x -> y, of shape dims[x] x dims[y] (acting M(y) -> M(x)).
struct Rep {
  CategoryPtr cat;
  std::vector<std::size_t> dims;
  std::vector<Matrix> gens;

  static Rep zero(CategoryPtr c);

  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  // M(h) for h in hom(x, y), a dims[x] x dims[y] matrix.
  Matrix act(int x, int y, const Vec& h) const;
  // Relations hold and shapes match.
  bool is_valid() const;
};

// M(e_i) for every basis element of every hom space; index [x * n + y][i].
struct ActionTable {
  int n = 0;
  std::vector<std::vector<Matrix>> basis;

  const std::vector<Matrix>& at(int x, int y) const { return basis[x * n + y]; }
  Matrix act(int x, int y, const Vec& h, std::size_t rows, std::size_t cols) const;
};

ActionTable actions(const Rep& m);

struct RepMap {
  std::vector<Matrix> comp;  // comp[v]: N(v) x M(v)

  static RepMap zero(const Rep& m, const Rep& n);
  static RepMap identity(const Rep& m);
  bool is_zero() const;
};

RepMap compose(const RepMap& g, const RepMap& f);
RepMap operator+(const RepMap& a, const RepMap& b);
RepMap operator*(const Scalar& s, const RepMap& a);
bool is_natural(const Rep& m, const Rep& n, const RepMap& f);

enum class ModuleKind { Projective, Injective, Simple };

Rep std_module(CategoryPtr c, int v, ModuleKind kind);
Rep direct_sum(const std::vector<Rep>& parts);
// Injections and projections of a direct sum.
RepMap sum_injection(const std::vector<Rep>& parts, std::size_t k);
RepMap sum_projection(const std::vector<Rep>& parts, std::size_t k);

// P(s) = sum of P(s_j); I(s) likewise.
Rep proj_sum(CategoryPtr c, const ObjectSum& s);
Rep inj_sum(CategoryPtr c, const ObjectSum& s);
// The induced maps P(src) -> P(tgt) and I(src) -> I(tgt).
RepMap varmor_to_projmap(const Category& c, const VarietyMor& f);
RepMap varmor_to_injmap(const Category& c, const VarietyMor& f);
// Inverse of varmor_to_projmap (Yoneda).
VarietyMor projmap_to_varmor(const Category& c, const ObjectSum& src, const ObjectSum& tgt, const RepMap& f);

struct HomSpace {
  std::size_t dimension = 0;
  std::vector<RepMap> basis;
};

// Throws WindowMismatch when the categories differ.
HomSpace hom_basis(const Rep& m, const Rep& n);
std::size_t hom_dim(const Rep& m, const Rep& n);
// Equations N(g) phi_y = phi_x M(g). Unknown (r, s) of phi_v is column
// offsets[v] + r * m.dims[v] + s.
Matrix naturality_matrix(const Rep& m, const Rep& n, std::vector<std::size_t>* offsets = nullptr);

struct Factorization {
  Rep kernel;
  RepMap kernel_incl;   // kernel -> M
  Rep image;
  RepMap image_proj;    // M -> image
  RepMap image_incl;    // image -> N
  Rep cokernel;
  RepMap cokernel_proj; // N -> cokernel
};

Factorization map_factor(const Rep& m, const Rep& n, const RepMap& f);
// Only the kernel part, cheaper.
std::pair<Rep, RepMap> kernel(const Rep& m, const Rep& n, const RepMap& f);
std::pair<Rep, RepMap> cokernel(const Rep& m, const Rep& n, const RepMap& f);

// D M over the opposite category: spaces dualized, matrices transposed.
Rep dualize(const Rep& m);
RepMap dualize(const RepMap& f);

// Random entries in [-range, range].
Scalar random_scalar(std::mt19937_64& rng, int range = 3);
VarietyMor random_varmor(const Category& c, const ObjectSum& src, const ObjectSum& tgt, std::mt19937_64& rng,
                         double density = 0.7);
ObjectSum random_sum(const Category& c, std::mt19937_64& rng, std::size_t max_terms,
                     const std::vector<int>& pool = {});
// The cokernel of a random map between random sums of projectives.
Rep random_rep(CategoryPtr c, std::mt19937_64& rng, std::size_t max_terms = 3, const std::vector<int>& pool = {});

// Equal dimension vectors and equal hom dimensions from every P(v) and S(v).
bool probe_equivalent(const Rep& a, const Rep& b);

// Fitting decomposition into indecomposables. Throws EndNotSplit.
std::vector<Rep> decompose(const Rep& m, std::mt19937_64* shuffle = nullptr);
// The vertex when m is isomorphic to some P(v).
std::optional<int> as_std_projective(const Rep& m);
std::optional<int> as_std_injective(const Rep& m);

}  // namespace tq
