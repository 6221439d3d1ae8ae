#include "tq/threadquiver.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tq/error.hpp"

namespace tq {

bool ThreadQuiver::has_name(const std::string& n) const {
  if (std::find(vertices.begin(), vertices.end(), n) != vertices.end()) return true;
  for (const auto& a : standard)
    if (a.name == n) return true;
  for (const auto& t : threads)
    if (t.name == n) return true;
  return false;
}

void ThreadQuiver::validate() const {
  std::set<std::string> names;
  auto claim = [&](const std::string& n) {
    if (!names.insert(n).second) throw Error(ErrorKind::DuplicateName, n);
  };
  for (const auto& v : vertices) claim(v);
  std::set<std::string> verts(vertices.begin(), vertices.end());
  auto endpoint = [&](const std::string& v) {
    if (!verts.count(v)) throw Error(ErrorKind::UnknownVertex, v);
  };
  std::map<std::string, std::pair<std::string, std::string>> ends;
  for (const auto& a : standard) {
    claim(a.name);
    endpoint(a.src);
    endpoint(a.tgt);
    ends[a.name] = {a.src, a.tgt};
  }
  for (const auto& t : threads) {
    claim(t.name);
    endpoint(t.src);
    endpoint(t.tgt);
    if (t.label.contains_thread()) throw Error(ErrorKind::NestedThreadLabel, t.name);
    ends[t.name] = {t.src, t.tgt};
  }
  for (const auto& r : relations) {
    if (r.terms.empty()) throw Error(ErrorKind::InvalidArgument, "empty relation");
    std::optional<std::pair<std::string, std::string>> span;
    for (const auto& [c, p] : r.terms) {
      if (p.empty()) throw Error(ErrorKind::InvalidArgument, "relation term without arrows");
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (!ends.count(p[i])) throw Error(ErrorKind::InvalidArgument, "unknown arrow in relation: " + p[i]);
        if (i && ends[p[i - 1]].second != ends[p[i]].first)
          throw Error(ErrorKind::InvalidArgument, "relation path does not compose at " + p[i]);
      }
      std::pair<std::string, std::string> s{ends[p.front()].first, ends[p.back()].second};
      if (span && *span != s) throw Error(ErrorKind::InvalidArgument, "relation paths are not parallel");
      span = s;
    }
  }
}

bool operator==(const ThreadQuiver& a, const ThreadQuiver& b) {
  if (a.vertices != b.vertices || a.standard.size() != b.standard.size() || a.threads.size() != b.threads.size() ||
      a.relations.size() != b.relations.size())
    return false;
  for (std::size_t i = 0; i < a.standard.size(); ++i) {
    const auto &x = a.standard[i], &y = b.standard[i];
    if (x.name != y.name || x.src != y.src || x.tgt != y.tgt) return false;
  }
  for (std::size_t i = 0; i < a.threads.size(); ++i) {
    const auto &x = a.threads[i], &y = b.threads[i];
    if (x.name != y.name || x.src != y.src || x.tgt != y.tgt || !(x.label == y.label)) return false;
  }
  for (std::size_t i = 0; i < a.relations.size(); ++i) {
    const auto &x = a.relations[i].terms, &y = b.relations[i].terms;
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].first != y[k].first || x[k].second != y[k].second) return false;
  }
  return true;
}

CategoryPtr Window::category() const {
  if (!cached_) cached_ = Category::from_quiver(quiver, relations, cuts);
  return cached_;
}

std::vector<int> Window::interior() const {
  std::vector<int> r;
  for (int v = 0; v < quiver.vertex_count(); ++v)
    if (boundary.empty() || !boundary[v]) r.push_back(v);
  return r;
}

Window make_window(const Quiver& q, const std::vector<Relation>& rels, std::vector<std::uint8_t> cuts) {
  if (!is_acyclic(q)) throw Error(ErrorKind::NonAcyclic, "window quiver must be acyclic");
  for (const auto& r : rels) validate_relation(q, r);
  Window w;
  w.quiver = q;
  w.relations = rels;
  cuts.resize(q.vertex_count(), 0);
  for (auto c : cuts) w.boundary.push_back(c != 0);
  w.cuts = std::move(cuts);
  for (int v = 0; v < q.vertex_count(); ++v) w.embed_r.push_back(v);
  return w;
}

Quiver underlying_quiver(const ThreadQuiver& tq) {
  tq.validate();
  Quiver q;
  for (const auto& v : tq.vertices) q.add_vertex(v);
  for (const auto& a : tq.standard) q.add_arrow(a.name, a.src, a.tgt);
  for (const auto& t : tq.threads) q.add_arrow(t.name, t.src, t.tgt);
  return q;
}

namespace {

Relation to_relation(const Quiver& q, const NamedRelation& r,
                     const std::function<std::vector<int>(const std::string&)>& arrows_of) {
  Relation rel;
  for (const auto& [c, names] : r.terms) {
    std::vector<int> arrows;
    for (const auto& n : names) {
      auto part = arrows_of(n);
      arrows.insert(arrows.end(), part.begin(), part.end());
    }
    rel.terms.emplace_back(c, make_path(q, arrows));
  }
  return rel;
}

std::string fresh_name(const Quiver& q, const ThreadQuiver* tq, std::string base) {
  auto taken = [&](const std::string& n) {
    return q.find_vertex(n) || q.find_arrow(n) || (tq && tq->has_name(n));
  };
  while (taken(base)) base += "_";
  return base;
}

}  // namespace

std::vector<Relation> underlying_relations(const ThreadQuiver& tq, const Quiver& q) {
  std::vector<Relation> rels;
  for (const auto& r : tq.relations)
    rels.push_back(to_relation(q, r, [&](const std::string& n) { return std::vector<int>{q.arrow_index(n)}; }));
  return rels;
}

ThreadQuiver normalize(const ThreadQuiver& tq) {
  tq.validate();
  ThreadQuiver out;
  out.vertices = tq.vertices;
  out.standard = tq.standard;
  std::set<std::string> used;
  auto fresh = [&](std::string base) {
    while (tq.has_name(base) || used.count(base)) base += "_";
    used.insert(base);
    return base;
  };
  std::map<std::string, std::vector<std::string>> rewrite;
  for (const auto& t : tq.threads) {
    const std::string a = fresh(t.name + "_a"), b = fresh(t.name + "_b");
    const std::string in = fresh(t.name + "_in"), outn = fresh(t.name + "_out");
    out.vertices.push_back(a);
    out.vertices.push_back(b);
    out.standard.push_back({in, t.src, a});
    out.standard.push_back({outn, b, t.tgt});
    out.threads.push_back({t.name, a, b, t.label});
    rewrite[t.name] = {in, t.name, outn};
  }
  for (const auto& r : tq.relations) {
    NamedRelation nr;
    for (const auto& [c, p] : r.terms) {
      std::vector<std::string> np;
      for (const auto& n : p) {
        auto it = rewrite.find(n);
        if (it == rewrite.end())
          np.push_back(n);
        else
          np.insert(np.end(), it->second.begin(), it->second.end());
      }
      nr.terms.emplace_back(c, std::move(np));
    }
    out.relations.push_back(std::move(nr));
  }
  return out;
}

Window expand(const ThreadQuiver& tq, int depth) {
  tq.validate();
  if (!is_acyclic(underlying_quiver(tq))) throw Error(ErrorKind::NonAcyclic, "underlying quiver has a cycle");
  Window w;
  w.depth = depth;
  Quiver& q = w.quiver;
  for (const auto& v : tq.vertices) w.embed_r.push_back(q.add_vertex(v));
  std::vector<std::uint8_t> cuts(tq.vertices.size(), 0);
  for (const auto& a : tq.standard) q.add_arrow(a.name, a.src, a.tgt);

  std::map<std::string, std::vector<int>> thread_path;
  for (const auto& t : tq.threads) {
    FiniteChain chain = truncate(thread_order(t.label), depth);
    std::vector<int> verts;
    verts.push_back(q.vertex_index(t.src));
    for (std::size_t k = 1; k + 1 < chain.size(); ++k) {
      verts.push_back(q.add_vertex(fresh_name(q, &tq, t.name + "_" + chain.elements[k])));
      cuts.push_back(static_cast<std::uint8_t>((chain.cut_before[k] ? kCutBefore : 0) |
                                               (chain.cut_after[k] ? kCutAfter : 0)));
    }
    verts.push_back(q.vertex_index(t.tgt));
    std::vector<int> arrows;
    for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
      std::string name = verts.size() == 2 ? t.name : t.name + "_" + std::to_string(k);
      if (verts.size() != 2) name = fresh_name(q, &tq, name);
      arrows.push_back(q.add_arrow(name, verts[k], verts[k + 1]));
    }
    thread_path[t.name] = arrows;
    w.embed_t.push_back(std::move(verts));
    w.chains.push_back(std::move(chain));
    w.chain_arrows.push_back(std::move(arrows));
  }
  for (auto c : cuts) w.boundary.push_back(c != 0);
  w.cuts = std::move(cuts);
  for (const auto& r : tq.relations)
    w.relations.push_back(to_relation(q, r, [&](const std::string& n) {
      auto it = thread_path.find(n);
      if (it != thread_path.end()) return it->second;
      return std::vector<int>{q.arrow_index(n)};
    }));
  return w;
}

namespace {

struct Shape {
  int n = 0;
  std::vector<std::vector<int>> mult;  // arrow multiplicities
  std::vector<std::vector<int>> homdim;
  std::vector<std::vector<int>> sig;
};

Shape shape_of(const Window& w) {
  Shape s;
  const Quiver& q = w.quiver;
  s.n = q.vertex_count();
  s.mult.assign(s.n, std::vector<int>(s.n, 0));
  for (const auto& a : q.arrows()) ++s.mult[a.src][a.tgt];
  auto cat = w.category();
  s.homdim.assign(s.n, std::vector<int>(s.n, 0));
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) s.homdim[x][y] = static_cast<int>(cat->dim(x, y));
  // longest path from a source / to a sink
  auto order = topological_order(q);
  std::vector<int> up(s.n, 0), down(s.n, 0);
  for (int v : order)
    for (int a : q.out_arrows(v)) up[q.arrow(a).tgt] = std::max(up[q.arrow(a).tgt], up[v] + 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (int a : q.out_arrows(*it)) down[*it] = std::max(down[*it], down[q.arrow(a).tgt] + 1);
  s.sig.resize(s.n);
  for (int v = 0; v < s.n; ++v) {
    int in = 0, out = 0, hin = 0, hout = 0;
    for (int u = 0; u < s.n; ++u) {
      in += s.mult[u][v];
      out += s.mult[v][u];
      hin += s.homdim[u][v];
      hout += s.homdim[v][u];
    }
    s.sig[v] = {in, out, up[v], down[v], hin, hout};
  }
  return s;
}

bool relations_map(const Window& w1, const Window& w2, const std::vector<int>& f) {
  const Quiver& q1 = w1.quiver;
  const Quiver& q2 = w2.quiver;
  // group arrows of q1 by endpoints; candidates in q2 are the parallel arrows
  std::map<std::pair<int, int>, std::vector<int>> cls1, cls2;
  for (int a = 0; a < q1.arrow_count(); ++a) cls1[{q1.arrow(a).src, q1.arrow(a).tgt}].push_back(a);
  for (int a = 0; a < q2.arrow_count(); ++a) cls2[{q2.arrow(a).src, q2.arrow(a).tgt}].push_back(a);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> classes;
  for (const auto& [k, v] : cls1) classes.push_back({v, cls2[{f[k.first], f[k.second]}]});
  auto table = all_paths(q2);
  std::vector<int> amap(q1.arrow_count(), -1);
  long budget = 20000;
  std::function<bool(std::size_t)> rec = [&](std::size_t ci) -> bool {
    if (--budget < 0) return false;
    if (ci == classes.size()) {
      for (const auto& r : w1.relations) {
        const Path& p0 = r.terms.front().second;
        const int x = f[p0.src], y = f[p0.tgt];
        HomPaths h = hom_basis_paths(q2, w2.relations, table, x, y);
        Vec acc(h.dimension, Scalar(0));
        for (const auto& [c, p] : r.terms) {
          Path mp{x, y, {}};
          for (int a : p.arrows) mp.arrows.push_back(amap[a]);
          auto coords = h.coordinates(mp);
          for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * coords[i];
        }
        for (const auto& s : acc)
          if (!s.is_zero()) return false;
      }
      return true;
    }
    auto targets = classes[ci].second;
    std::sort(targets.begin(), targets.end());
    do {
      for (std::size_t k = 0; k < classes[ci].first.size(); ++k) amap[classes[ci].first[k]] = targets[k];
      if (rec(ci + 1)) return true;
    } while (std::next_permutation(targets.begin(), targets.end()));
    return false;
  };
  return rec(0);
}

}  // namespace

std::optional<std::vector<int>> window_iso(const Window& w1, const Window& w2) {
  const int n = w1.quiver.vertex_count();
  if (n > kWindowIsoLimit || w2.quiver.vertex_count() > kWindowIsoLimit)
    throw Error(ErrorKind::TooLarge, "window_iso is limited to " + std::to_string(kWindowIsoLimit) + " vertices");
  if (n != w2.quiver.vertex_count() || w1.quiver.arrow_count() != w2.quiver.arrow_count()) return std::nullopt;
  Shape s1 = shape_of(w1), s2 = shape_of(w2);
  {
    auto a = s1.sig, b = s2.sig;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const bool check_rel = !w1.relations.empty() || !w2.relations.empty();
  std::vector<int> order = topological_order(w1.quiver);
  std::vector<int> f(n, -1);
  std::vector<bool> used(n, false);
  std::optional<std::vector<int>> found;
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == order.size()) {
      if (check_rel && !relations_map(w1, w2, f)) return false;
      found = f;
      return true;
    }
    const int v = order[k];
    for (int c = 0; c < n; ++c) {
      if (used[c] || s1.sig[v] != s2.sig[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const int u = order[j];
        ok = s1.mult[u][v] == s2.mult[f[u]][c] && s1.mult[v][u] == s2.mult[c][f[u]] &&
             s1.homdim[u][v] == s2.homdim[f[u]][c] && s1.homdim[v][u] == s2.homdim[c][f[u]];
      }
      if (!ok) continue;
      f[v] = c;
      used[c] = true;
      if (rec(k + 1)) return true;
      used[c] = false;
      f[v] = -1;
    }
    return false;
  };
  rec(0);
  return found;
}

}  // namespace tq
