#include "tq/resolution.hpp"

#include <algorithm>
#include <map>

#include "tq/error.hpp"

namespace tq {

namespace {

// Columns spanning rad M(x) = sum of the images of M(g), g out of x.
Matrix radical_span(const Rep& m, int x) {
  std::vector<Matrix> parts;
  for (int g : m.cat->gens_out(x)) parts.push_back(m.gens[g]);
  return hstack(m.dims[x], parts);
}

// Rows cutting out soc M(y) = common kernel of M(g), g into y.
Matrix socle_equations(const Rep& m, int y) {
  std::vector<Matrix> parts;
  for (int g : m.cat->gens_in(y)) parts.push_back(m.gens[g]);
  return vstack(m.dims[y], parts);
}

// Unit vectors completing a basis of the column span of r.
std::vector<std::size_t> complement_units(const Matrix& r) {
  const std::size_t d = r.rows();
  Rref rr = rref(hstack(d, {r, Matrix::identity(d)}));
  std::vector<std::size_t> out;
  for (auto p : rr.pivots)
    if (p >= r.cols()) out.push_back(p - r.cols());
  return out;
}

}  // namespace

std::vector<std::size_t> top_dims(const Rep& m) {
  std::vector<std::size_t> t;
  for (int x = 0; x < m.cat->size(); ++x) t.push_back(m.dims[x] - rank(radical_span(m, x)));
  return t;
}

std::vector<std::size_t> socle_dims(const Rep& m) {
  std::vector<std::size_t> s;
  for (int y = 0; y < m.cat->size(); ++y) s.push_back(m.dims[y] - rank(socle_equations(m, y)));
  return s;
}

Cover projective_cover(const Rep& m) {
  const Category& c = *m.cat;
  Cover cv;
  std::vector<Vec> gens;  // chosen top vectors, parallel to cv.terms
  for (int x = 0; x < c.size(); ++x) {
    if (m.dims[x] == 0) continue;
    for (auto u : complement_units(radical_span(m, x))) {
      cv.terms.push_back(x);
      Vec e(m.dims[x], Scalar(0));
      e[u] = Scalar(1);
      gens.push_back(std::move(e));
    }
  }
  ActionTable t = actions(m);
  for (int y = 0; y < c.size(); ++y) {
    std::vector<Matrix> cols;
    for (std::size_t j = 0; j < cv.terms.size(); ++j) {
      const int x = cv.terms[j];
      const std::size_t d = c.dim(y, x);
      Matrix blk(m.dims[y], d);
      const Matrix col = Matrix::column(gens[j]);
      for (std::size_t k = 0; k < d; ++k) blk.set_block(0, k, t.at(y, x)[k] * col);
      cols.push_back(std::move(blk));
    }
    cv.map.comp.push_back(hstack(m.dims[y], cols));
  }
  return cv;
}

Cover injective_envelope(const Rep& m) {
  Cover op = projective_cover(dualize(m));
  return {op.terms, dualize(op.map)};
}

const ObjectSum* ObjectComplex::at(int degree) const {
  const int k = degree - lowest;
  if (k < 0 || k >= static_cast<int>(terms.size())) return nullptr;
  return &terms[k];
}

Complex Complex::single(const Rep& m, int degree) {
  Complex c;
  c.cat = m.cat;
  c.lowest = degree;
  c.terms.push_back(m);
  return c;
}

const Rep* Complex::at(int degree) const {
  const int k = degree - lowest;
  if (k < 0 || k >= static_cast<int>(terms.size())) return nullptr;
  return &terms[k];
}

bool Complex::is_complex() const {
  for (std::size_t k = 0; k + 1 < diffs.size(); ++k)
    if (!compose(diffs[k + 1], diffs[k]).is_zero()) return false;
  return true;
}

Complex proj_realization(const ObjectComplex& x) {
  Complex c;
  c.cat = x.cat;
  c.lowest = x.lowest;
  for (const auto& t : x.terms) c.terms.push_back(proj_sum(x.cat, t));
  for (const auto& d : x.diffs) c.diffs.push_back(varmor_to_projmap(*x.cat, d));
  c.certificate = x;
  return c;
}

Complex inj_realization(const ObjectComplex& x) {
  Complex c;
  c.cat = x.cat;
  c.lowest = x.lowest;
  for (const auto& t : x.terms) c.terms.push_back(inj_sum(x.cat, t));
  for (const auto& d : x.diffs) c.diffs.push_back(varmor_to_injmap(*x.cat, d));
  return c;
}

namespace {

bool any_boundary(const Category& c, const std::vector<ObjectSum>& terms) {
  for (const auto& t : terms)
    for (int v : t)
      if (c.is_boundary(v)) return true;
  return false;
}

}  // namespace

bool ProjResolution::touches_boundary() const { return any_boundary(*cat, terms); }
bool InjResolution::touches_boundary() const { return any_boundary(*cat, terms); }

ObjectComplex ProjResolution::complex() const {
  ObjectComplex x;
  x.cat = cat;
  const int l = length();
  x.lowest = l < 0 ? 0 : -l;
  for (int k = l; k >= 0; --k) x.terms.push_back(terms[k]);
  for (int k = l - 1; k >= 0; --k) x.diffs.push_back(diffs[k]);
  return x;
}

ObjectComplex InjResolution::complex() const {
  ObjectComplex x;
  x.cat = cat;
  x.lowest = 0;
  x.terms = terms;
  x.diffs = diffs;
  return x;
}

ProjResolution projective_resolution(const Rep& m, int max_len, BoundaryPolicy policy) {
  const Category& c = *m.cat;
  ProjResolution res;
  res.cat = m.cat;
  if (m.is_zero()) {
    res.augmentation = RepMap::zero(Rep::zero(m.cat), m);
    return res;
  }
  Cover cv = projective_cover(m);
  res.terms.push_back(cv.terms);
  res.augmentation = cv.map;
  Rep p = proj_sum(m.cat, cv.terms);
  auto [k, incl] = kernel(p, m, cv.map);
  while (!k.is_zero()) {
    if (res.length() >= max_len)
      throw Error(ErrorKind::ExceedsBound, "projective dimension exceeds " + std::to_string(max_len));
    Cover next = projective_cover(k);
    RepMap d = compose(incl, next.map);
    res.diffs.push_back(projmap_to_varmor(c, next.terms, res.terms.back(), d));
    res.terms.push_back(next.terms);
    Rep pn = proj_sum(m.cat, next.terms);
    auto [k2, incl2] = kernel(pn, k, next.map);
    k = std::move(k2);
    incl = std::move(incl2);
  }
  if (policy == BoundaryPolicy::Reject && res.touches_boundary())
    throw Error(ErrorKind::BoundaryContaminated, "projective resolution reaches the window boundary");
  return res;
}

InjResolution injective_resolution(const Rep& m, int max_len, BoundaryPolicy policy) {
  ProjResolution op = projective_resolution(dualize(m), max_len, policy);
  InjResolution res;
  res.cat = m.cat;
  res.terms = op.terms;
  res.coaugmentation = dualize(op.augmentation);
  // op diffs run T_{k+1} -> T_k
  for (const auto& g : op.diffs) res.diffs.push_back(opposite_mor(*m.cat, g));
  return res;
}

int projective_dimension(const Rep& m, int max_len) { return projective_resolution(m, max_len).length(); }
int injective_dimension(const Rep& m, int max_len) { return injective_resolution(m, max_len).length(); }

Presentation projective_presentation(const Rep& m) {
  const Category& c = *m.cat;
  Presentation pr;
  Cover cv = projective_cover(m);
  pr.first = cv.terms;
  Rep p = proj_sum(m.cat, cv.terms);
  auto [k, incl] = kernel(p, m, cv.map);
  if (!k.is_zero()) pr.second = projective_cover(k).terms;
  // A cover term at an object with lost successors may be a shadow of a
  // generator outside the window; a first term with lost predecessors may
  // hide part of the kernel.
  for (int v : pr.first)
    if (c.is_boundary(v)) pr.faithful = false;
  for (int v : pr.second)
    if (c.cut_after(v)) pr.faithful = false;
  return pr;
}

Presentation injective_copresentation(const Rep& m) {
  // Cut directions swap under the opposite category.
  return projective_presentation(dualize(m));
}

namespace {

// Total complex Hom(X, Y): C^m = sum_p sum_j Y^{p+m}(x_{p,j}).
class HomComplex {
 public:
  HomComplex(const ObjectComplex& x, const Complex& y) : x_(x), y_(y) {
    if (x.cat != y.cat) throw Error(ErrorKind::WindowMismatch, "complexes over different categories");
    for (const auto& t : y.terms) tables_.push_back(actions(t));
  }

  std::size_t dim(int m) const { return blocks(m).total; }

  std::size_t rank_of(int m) {
    auto it = ranks_.find(m);
    if (it != ranks_.end()) return it->second;
    return ranks_[m] = rank(differential(m));
  }

  std::size_t cohomology(int n) {
    const std::size_t d = dim(n);
    if (d == 0) return 0;
    return d - rank_of(n) - rank_of(n - 1);
  }

 private:
  struct Blocks {
    std::vector<std::vector<std::size_t>> off;  // [p - x.lowest][j]
    std::size_t total = 0;
  };

  Blocks blocks(int m) const {
    Blocks b;
    for (int p = x_.lowest; p <= x_.highest(); ++p) {
      const Rep* yt = y_.at(p + m);
      std::vector<std::size_t> o;
      for (int v : *x_.at(p)) {
        o.push_back(b.total);
        if (yt) b.total += yt->dims[v];
      }
      b.off.push_back(std::move(o));
    }
    return b;
  }

  // (Df)^p = d_Y f^p - (-1)^m f^{p+1} d_X^p
  Matrix differential(int m) const {
    Blocks src = blocks(m), dst = blocks(m + 1);
    Matrix d(dst.total, src.total);
    if (!src.total || !dst.total) return d;
    const Scalar sign = (m % 2 == 0) ? Scalar(-1) : Scalar(1);
    for (int p = x_.lowest; p <= x_.highest(); ++p) {
      const ObjectSum& terms = *x_.at(p);
      const int pi = p - x_.lowest;
      if (y_.at(p + m) && y_.at(p + m + 1)) {
        const RepMap& dy = y_.diffs[p + m - y_.lowest];
        for (std::size_t j = 0; j < terms.size(); ++j) d.set_block(dst.off[pi][j], src.off[pi][j], dy.comp[terms[j]]);
      }
      if (p < x_.highest() && y_.at(p + m + 1)) {
        const VarietyMor& dx = x_.diffs[pi];
        const int yk = p + m + 1 - y_.lowest;
        const Rep& yt = y_.terms[yk];
        for (std::size_t j = 0; j < dx.src.size(); ++j)
          for (std::size_t k = 0; k < dx.tgt.size(); ++k) {
            const int a = dx.src[j], b = dx.tgt[k];
            Matrix act = tables_[yk].act(a, b, dx.entries[k][j], yt.dims[a], yt.dims[b]);
            if (act.empty() || act.is_zero()) continue;
            Matrix blk = act * sign;
            for (std::size_t r = 0; r < blk.rows(); ++r)
              for (std::size_t s = 0; s < blk.cols(); ++s) d(dst.off[pi][j] + r, src.off[pi + 1][k] + s) += blk(r, s);
          }
      }
    }
    return d;
  }

  const ObjectComplex& x_;
  const Complex& y_;
  std::vector<ActionTable> tables_;
  std::map<int, std::size_t> ranks_;
};

}  // namespace

std::size_t derived_hom_dim(const ObjectComplex& x, const Complex& y, int n) {
  HomComplex h(x, y);
  return h.cohomology(n);
}

std::vector<std::size_t> derived_hom_dims(const ObjectComplex& x, const Complex& y, int lo, int hi) {
  HomComplex h(x, y);
  std::vector<std::size_t> out;
  for (int n = lo; n <= hi; ++n) out.push_back(h.cohomology(n));
  return out;
}

std::size_t derived_hom_dim(const Rep& x, const Rep& y, int n, int max_len, BoundaryPolicy policy) {
  ProjResolution r = projective_resolution(x, max_len, policy);
  return derived_hom_dim(r.complex(), Complex::single(y), n);
}

std::size_t ext_dim(int i, const Rep& m, const Rep& n, int max_len, BoundaryPolicy policy) {
  if (i < 0) throw Error(ErrorKind::InvalidArgument, "negative ext degree");
  return derived_hom_dim(m, n, i, max_len, policy);
}

}  // namespace tq
