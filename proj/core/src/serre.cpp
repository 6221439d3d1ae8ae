#include "tq/serre.hpp"

#include "tq/error.hpp"

namespace tq {

namespace {

bool meets_boundary(const Category& c, const ObjectSum& s) {
  for (int v : s)
    if (c.is_boundary(v)) return true;
  return false;
}

std::string dims_str(const std::vector<std::size_t>& d, int lo) {
  std::string out;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (!d[k]) continue;
    if (!out.empty()) out += ",";
    out += std::to_string(lo + static_cast<int>(k)) + ":" + std::to_string(d[k]);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Pseudo pseudo(CategoryPtr c, const VarietyMor& f, PseudoSide side) {
  if (side == PseudoSide::Cokernel) {
    CategoryPtr op = c->opposite();
    Pseudo k = pseudo(op, opposite_mor(*op, f), PseudoSide::Kernel);
    return {k.object, opposite_mor(*c, k.map), k.contaminated};
  }
  Rep p = proj_sum(c, f.src), q = proj_sum(c, f.tgt);
  auto [k, incl] = kernel(p, q, varmor_to_projmap(*c, f));
  Pseudo out;
  if (k.is_zero()) {
    out.map = VarietyMor::zero(*c, {}, f.src);
    return out;
  }
  Cover cv = projective_cover(k);
  if (proj_sum(c, cv.terms).dims != k.dims)
    throw Error(ErrorKind::NotRepresentable, "kernel is not a sum of standard projectives");
  out.object = cv.terms;
  out.map = projmap_to_varmor(*c, cv.terms, f.src, compose(incl, cv.map));
  out.contaminated = meets_boundary(*c, out.object);
  return out;
}

Complex nakayama(const ObjectComplex& x) { return inj_realization(x); }

Complex nakayama(const Complex& c) {
  if (!c.certificate) throw Error(ErrorKind::NotProjectiveCertified, "complex carries no projective certificate");
  return inj_realization(*c.certificate);
}

Complex serre_image(const Rep& m, int max_len) {
  return nakayama(projective_resolution(m, max_len, BoundaryPolicy::Reject).complex());
}

std::size_t derived_hom_dim(const Complex& x, const Complex& y, int n, int max_len) {
  if (x.certificate) return derived_hom_dim(*x.certificate, y, n);
  if (x.terms.size() != 1) throw Error(ErrorKind::NotProjectiveCertified, "only certified or one-term complexes");
  ObjectComplex px = projective_resolution(x.terms[0], max_len).complex();
  px.lowest += x.lowest;
  return derived_hom_dim(px, y, n);
}

std::vector<Probe> interior_probes(CategoryPtr c, bool projectives, bool simples, bool injectives) {
  std::vector<Probe> out;
  for (int v = 0; v < c->size(); ++v) {
    if (c->is_boundary(v)) continue;
    if (projectives) out.push_back({"P(" + c->name(v) + ")", std_module(c, v, ModuleKind::Projective)});
    if (simples) out.push_back({"S(" + c->name(v) + ")", std_module(c, v, ModuleKind::Simple)});
    if (injectives) out.push_back({"I(" + c->name(v) + ")", std_module(c, v, ModuleKind::Injective)});
  }
  return out;
}

Report check_serre(const std::vector<Probe>& probes, int max_len, int lo, int hi, bool skip_boundary) {
  Report rep;
  rep.check = "serre";
  struct Info {
    bool resolved = false;
    bool contaminated = false;
    ObjectComplex px;
    Complex sx;
  };
  std::vector<Info> info(probes.size());
  const std::string bound = "<= " + std::to_string(max_len);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const Probe& p = probes[i];
    try {
      ProjResolution r = projective_resolution(p.rep, max_len);
      info[i].resolved = true;
      info[i].contaminated = r.touches_boundary();
      info[i].px = r.complex();
      info[i].sx = nakayama(info[i].px);
      rep.record("pd " + p.name, bound, std::to_string(r.length()), true);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ExceedsBound) throw;
      rep.fail("pd " + p.name, bound, "ExceedsBound");
    }
    try {
      InjResolution r = injective_resolution(p.rep, max_len);
      rep.record("id " + p.name, bound, std::to_string(r.length()), true);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ExceedsBound) throw;
      rep.fail("id " + p.name, bound, "ExceedsBound");
    }
  }
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = 0; j < probes.size(); ++j) {
      const std::string subject = "Hom(" + probes[i].name + ", " + probes[j].name + "[n])";
      if (!info[i].resolved || !info[j].resolved) continue;  // already reported
      if (skip_boundary && (info[i].contaminated || info[j].contaminated)) {
        rep.record(subject, "skipped", "skipped", true, "boundary");
        continue;
      }
      const auto lhs = derived_hom_dims(info[i].px, Complex::single(probes[j].rep), lo, hi);
      // Hom(Y, SX[-n]) for n = lo..hi
      const auto raw = derived_hom_dims(info[j].px, info[i].sx, -hi, -lo);
      std::vector<std::size_t> rhs(raw.rbegin(), raw.rend());
      rep.record(subject, dims_str(lhs, lo), dims_str(rhs, lo), lhs == rhs);
    }
  return rep;
}

Report check_dualizing(CategoryPtr c) {
  Report rep;
  rep.check = "dualizing";
  auto verdict = [&](const Presentation& p) {
    if (p.faithful) return std::string("faithful");
    return "reaches boundary: " + sum_str(*c, p.first) + " / " + sum_str(*c, p.second);
  };
  for (int v = 0; v < c->size(); ++v) {
    if (c->is_boundary(v)) continue;
    const std::string n = c->name(v);
    rep.add("presentation I(" + n + ")", "faithful", verdict(projective_presentation(std_module(c, v, ModuleKind::Injective))));
    rep.add("presentation S(" + n + ")", "faithful", verdict(projective_presentation(std_module(c, v, ModuleKind::Simple))));
    rep.add("copresentation P(" + n + ")", "faithful",
            verdict(injective_copresentation(std_module(c, v, ModuleKind::Projective))));
    rep.add("copresentation S(" + n + ")", "faithful",
            verdict(injective_copresentation(std_module(c, v, ModuleKind::Simple))));
  }
  for (const auto& g : c->generators()) {
    if (c->is_boundary(g.src) || c->is_boundary(g.tgt)) continue;
    VarietyMor f = VarietyMor::zero(*c, {g.src}, {g.tgt});
    f.entries[0][0] = g.coords;
    for (auto side : {PseudoSide::Kernel, PseudoSide::Cokernel}) {
      const std::string subject = (side == PseudoSide::Kernel ? "pseudokernel(" : "pseudocokernel(") + g.name + ")";
      try {
        Pseudo p = pseudo(c, f, side);
        rep.add(subject, "representable", p.contaminated ? "reaches boundary: " + sum_str(*c, p.object) : "representable");
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotRepresentable) throw;
        rep.fail(subject, "representable", "NotRepresentable");
      }
    }
  }
  return rep;
}

}  // namespace tq
