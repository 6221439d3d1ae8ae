#pragma once

#include <optional>
#include <vector>

#include "tq/rep.hpp"

namespace tq {

// P(terms) -> M, minimal.
struct Cover {
  ObjectSum terms;
  RepMap map;
};

std::vector<std::size_t> top_dims(const Rep& m);
std::vector<std::size_t> socle_dims(const Rep& m);
Cover projective_cover(const Rep& m);
// M -> I(terms), minimal.
Cover injective_envelope(const Rep& m);

// A bounded complex of sums of standard projectives (or injectives), written
// through morphisms of the category: diffs[k] is terms[k] -> terms[k + 1],
// the term terms[k] sitting in degree lowest + k.
struct ObjectComplex {
  CategoryPtr cat;
  int lowest = 0;
  std::vector<ObjectSum> terms;
  std::vector<VarietyMor> diffs;

  int highest() const { return lowest + static_cast<int>(terms.size()) - 1; }
  const ObjectSum* at(int degree) const;
};

// A bounded complex of representations; diffs[k]: terms[k] -> terms[k + 1].
struct Complex {
  CategoryPtr cat;
  int lowest = 0;
  std::vector<Rep> terms;
  std::vector<RepMap> diffs;
  // Set when every term is a sum of standard projectives by construction.
  std::optional<ObjectComplex> certificate;

  static Complex single(const Rep& m, int degree = 0);
  int highest() const { return lowest + static_cast<int>(terms.size()) - 1; }
  const Rep* at(int degree) const;
  bool is_complex() const;  // consecutive differentials compose to zero
};

Complex proj_realization(const ObjectComplex& x);
Complex inj_realization(const ObjectComplex& x);

enum class BoundaryPolicy { Ignore, Reject };

// Minimal projective resolution 0 -> P_L -> ... -> P_0 -> M -> 0.
struct ProjResolution {
  CategoryPtr cat;
  std::vector<ObjectSum> terms;   // P_0 .. P_L
  std::vector<VarietyMor> diffs;  // diffs[i]: P_{i+1} -> P_i
  RepMap augmentation;            // P(P_0) -> M

  int length() const { return terms.empty() ? -1 : static_cast<int>(terms.size()) - 1; }
  bool touches_boundary() const;
  // Degrees -L .. 0.
  ObjectComplex complex() const;
};

// Minimal injective resolution 0 -> M -> I^0 -> ... -> I^L -> 0.
struct InjResolution {
  CategoryPtr cat;
  std::vector<ObjectSum> terms;   // I^0 .. I^L
  std::vector<VarietyMor> diffs;  // diffs[i]: I^i -> I^{i+1}
  RepMap coaugmentation;          // M -> I(I^0)

  int length() const { return terms.empty() ? -1 : static_cast<int>(terms.size()) - 1; }
  bool touches_boundary() const;
  // Degrees 0 .. L.
  ObjectComplex complex() const;
};

// Throws ExceedsBound when the length passes max_len; BoundaryContaminated
// under Reject when a term sits at a boundary object.
ProjResolution projective_resolution(const Rep& m, int max_len, BoundaryPolicy policy = BoundaryPolicy::Ignore);
InjResolution injective_resolution(const Rep& m, int max_len, BoundaryPolicy policy = BoundaryPolicy::Ignore);

int projective_dimension(const Rep& m, int max_len);
int injective_dimension(const Rep& m, int max_len);

// P1 -> P0 -> M -> 0 (or 0 -> M -> I0 -> I1) together with a faithfulness
// verdict: whether the same terms come out in every larger window.
struct Presentation {
  ObjectSum first;
  ObjectSum second;
  bool faithful = true;
};

Presentation projective_presentation(const Rep& m);
Presentation injective_copresentation(const Rep& m);

// H^n of the total hom complex Hom(X, Y).
std::size_t derived_hom_dim(const ObjectComplex& x, const Complex& y, int n);
// H^n for lo <= n <= hi, sharing the differential ranks.
std::vector<std::size_t> derived_hom_dims(const ObjectComplex& x, const Complex& y, int lo, int hi);
std::size_t derived_hom_dim(const Rep& x, const Rep& y, int n, int max_len,
                            BoundaryPolicy policy = BoundaryPolicy::Ignore);

std::size_t ext_dim(int i, const Rep& m, const Rep& n, int max_len, BoundaryPolicy policy = BoundaryPolicy::Ignore);

}  // namespace tq
