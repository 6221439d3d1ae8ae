#pragma once

#include <string>
#include <vector>

#include "tq/report.hpp"
#include "tq/resolution.hpp"
#include "tq/threadquiver.hpp"

namespace tq {

enum class PseudoSide { Kernel, Cokernel };

struct Pseudo {
  ObjectSum object;
  VarietyMor map;             // object -> f.src (kernel) or f.tgt -> object (cokernel)
  bool contaminated = false;  // the object meets the window boundary
};

// Throws NotRepresentable when the kernel (cokernel) is not a sum of standard
// projectives (injectives).
Pseudo pseudo(CategoryPtr c, const VarietyMor& f, PseudoSide side);

// P(v) -> I(v) termwise. The Complex overload needs a certificate.
Complex nakayama(const ObjectComplex& x);
Complex nakayama(const Complex& c);

// Nakayama image of the minimal projective resolution. Throws ExceedsBound,
// BoundaryContaminated.
Complex serre_image(const Rep& m, int max_len);

// Hom(X, Y[n]) where X is certified or a single representation.
std::size_t derived_hom_dim(const Complex& x, const Complex& y, int n, int max_len);

struct Probe {
  std::string name;
  Rep rep;
};

// P(v), S(v) (and optionally I(v)) for every non-boundary object.
std::vector<Probe> interior_probes(CategoryPtr c, bool projectives = true, bool simples = true,
                                   bool injectives = false);

// dim Hom(X, Y[n]) = dim Hom(Y, SX[-n]) for all probe pairs and lo <= n <= hi,
// plus finite projective and injective dimension of every probe. Pairs whose
// resolutions reach the boundary are skipped unless skip_boundary is off.
Report check_serre(const std::vector<Probe>& probes, int max_len, int lo, int hi, bool skip_boundary = true);
inline Report check_serre(const std::vector<Probe>& probes, int max_len, bool skip_boundary = true) {
  return check_serre(probes, max_len, -max_len, max_len, skip_boundary);
}

// Faithful presentations of I(v), S(v), copresentations of P(v), S(v) and
// representable pseudo(co)kernels of generators, all at non-boundary objects.
Report check_dualizing(CategoryPtr c);

}  // namespace tq
