#include <algorithm>
#include <cmath>
#include <complex>

#include "tq/error.hpp"
#include "tq/rep.hpp"
#include "tq/resolution.hpp"

namespace tq {

namespace {

using Poly = std::vector<Scalar>;  // low degree first

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Scalar eval(const Poly& p, const Scalar& x) {
  Scalar r(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  const Scalar lead = b.back().inverse();
  while (a.size() >= b.size()) {
    const Scalar q = a.back() * lead;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_div(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, Scalar(0));
  const Scalar lead = b.back().inverse();
  while (a.size() >= b.size()) {
    const Scalar c = a.back() * lead;
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Scalar(static_cast<long>(i)) * p[i]);
  trim(d);
  return d;
}

Matrix total_matrix(const RepMap& f) { return direct_sum(f.comp); }

// Minimal polynomial of a random vector under f.
Poly krylov_poly(const Matrix& f, std::mt19937_64& rng) {
  const std::size_t n = f.rows();
  Vec v(n);
  for (auto& s : v) s = random_scalar(rng, 50);
  std::vector<Matrix> cols{Matrix::column(v)};
  while (true) {
    Matrix next = f * cols.back();
    Matrix k = hstack(n, cols);
    if (auto c = try_solve(k, next)) {
      Poly p;
      for (std::size_t i = 0; i < cols.size(); ++i) p.push_back(-(*c)(i, 0));
      p.push_back(Scalar(1));
      return p;
    }
    cols.push_back(std::move(next));
  }
}

std::optional<Scalar> rationalize(long double x) {
  // continued fraction with bounded denominators
  long h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  long double r = x;
  for (int it = 0; it < 40; ++it) {
    const long double fl = std::floor(r);
    if (std::fabs(fl) > 1e12L) return std::nullopt;
    const long a = static_cast<long>(fl);
    const long h2 = a * h0 + h1, k2 = a * k0 + k1;
    if (k2 > 1000000) break;
    h1 = h0;
    h0 = h2;
    k1 = k0;
    k0 = k2;
    if (std::fabs(static_cast<long double>(h0) / k0 - x) < 1e-12L) break;
    const long double frac = r - fl;
    if (frac < 1e-18L) break;
    r = 1 / frac;
  }
  if (k0 == 0) return std::nullopt;
  return Scalar(h0, k0);
}

// Distinct roots of p in the current field.
std::vector<Scalar> field_roots(const Poly& p0) {
  Poly p = p0;
  trim(p);
  std::vector<Scalar> roots;
  if (p.size() <= 1) return roots;
  const std::uint64_t mod = p.back().modulus();
  if (mod) {
    if (mod > (1u << 17)) throw Error(ErrorKind::EndNotSplit, "eigenvalue search needs a smaller prime");
    for (std::uint64_t a = 0; a < mod; ++a) {
      Scalar s(static_cast<long>(a));
      if (eval(p, s).is_zero()) roots.push_back(s);
    }
    return roots;
  }
  // square-free part, then numeric roots checked exactly
  Poly g = poly_gcd(p, derivative(p));
  Poly sf = g.size() > 1 ? poly_div(p, g) : p;
  const std::size_t deg = sf.size() - 1;
  if (deg == 1) return {-sf[0] / sf[1]};
  std::vector<std::complex<long double>> coef;
  const Scalar lead = sf.back();
  for (const auto& c : sf) coef.emplace_back((c / lead).rational().get_d(), 0.0L);
  std::vector<std::complex<long double>> z(deg);
  const std::complex<long double> seed(0.4L, 0.9L);
  for (std::size_t i = 0; i < deg; ++i) z[i] = std::pow(seed, static_cast<long double>(i));
  auto value = [&](std::complex<long double> x) {
    std::complex<long double> r = 0;
    for (auto it = coef.rbegin(); it != coef.rend(); ++it) r = r * x + *it;
    return r;
  };
  for (int it = 0; it < 500; ++it) {
    long double delta = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      std::complex<long double> den = 1;
      for (std::size_t j = 0; j < deg; ++j)
        if (j != i) den *= z[i] - z[j];
      const auto step = value(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-16L) break;
  }
  for (const auto& r : z) {
    if (std::fabs(r.imag()) > 1e-6L) continue;
    auto q = rationalize(r.real());
    if (!q || !eval(sf, *q).is_zero()) continue;
    if (std::find(roots.begin(), roots.end(), *q) == roots.end()) roots.push_back(*q);
  }
  return roots;
}

RepMap shift(const RepMap& f, const Scalar& lambda) {
  RepMap g = f;
  for (auto& m : g.comp)
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= lambda;
  return g;
}

RepMap rep_power(const RepMap& f, std::size_t e) {
  RepMap g;
  for (const auto& m : f.comp) g.comp.push_back(power(m, e));
  return g;
}

bool is_iso(const RepMap& f) {
  return std::all_of(f.comp.begin(), f.comp.end(), [](const Matrix& m) { return is_invertible(m); });
}

void split_rec(const Rep& m, std::vector<Rep>& out, std::mt19937_64& rng, std::mt19937_64* shuffle) {
  if (m.is_zero()) return;
  HomSpace end = hom_basis(m, m);
  if (end.dimension <= 1) {
    out.push_back(m);
    return;
  }
  std::vector<RepMap> cands = end.basis;
  if (shuffle) std::shuffle(cands.begin(), cands.end(), *shuffle);
  for (int k = 0; k < 4; ++k) {
    RepMap f = RepMap::zero(m, m);
    for (const auto& b : end.basis) f = f + random_scalar(rng, 5) * b;
    cands.push_back(std::move(f));
  }
  const std::size_t n = m.total_dim();
  bool unresolved = false;
  for (const auto& f : cands) {
    const Matrix total = total_matrix(f);
    std::vector<Scalar> roots = field_roots(krylov_poly(total, rng));
    if (roots.empty()) {
      unresolved = true;
      continue;
    }
    for (const auto& lambda : roots) {
      RepMap g = rep_power(shift(f, lambda), n);
      if (g.is_zero() || is_iso(g)) continue;
      Factorization fa = map_factor(m, m, g);
      split_rec(fa.kernel, out, rng, shuffle);
      split_rec(fa.image, out, rng, shuffle);
      return;
    }
    // a single rational eigenvalue: f is lambda plus nilpotent unless other
    // eigenvalues are irrational
    if (roots.size() == 1 && !rep_power(shift(f, roots[0]), n).is_zero()) unresolved = true;
  }
  if (unresolved) throw Error(ErrorKind::EndNotSplit, "endomorphism ring is not split local over the field");
  out.push_back(m);
}

}  // namespace

std::vector<Rep> decompose(const Rep& m, std::mt19937_64* shuffle) {
  std::mt19937_64 rng(0x5eed);
  std::vector<Rep> out;
  split_rec(m, out, rng, shuffle);
  return out;
}

std::optional<int> as_std_projective(const Rep& m) {
  auto top = top_dims(m);
  std::optional<int> v;
  for (std::size_t x = 0; x < top.size(); ++x) {
    if (top[x] == 0) continue;
    if (top[x] > 1 || v) return std::nullopt;
    v = static_cast<int>(x);
  }
  if (!v) return std::nullopt;
  for (int x = 0; x < m.cat->size(); ++x)
    if (m.dims[x] != m.cat->dim(x, *v)) return std::nullopt;
  return v;
}

std::optional<int> as_std_injective(const Rep& m) { return as_std_projective(dualize(m)); }

}  // namespace tq
