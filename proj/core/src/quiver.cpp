#include "tq/quiver.hpp"

#include <algorithm>
#include <functional>

#include "tq/error.hpp"

namespace tq {

int Quiver::add_vertex(const std::string& name) {
  if (vindex_.count(name)) throw Error(ErrorKind::DuplicateName, "vertex " + name);
  vindex_[name] = static_cast<int>(vertices_.size());
  vertices_.push_back(name);
  return vertex_count() - 1;
}

int Quiver::add_arrow(const std::string& name, int src, int tgt) {
  if (aindex_.count(name)) throw Error(ErrorKind::DuplicateName, "arrow " + name);
  if (src < 0 || tgt < 0 || src >= vertex_count() || tgt >= vertex_count())
    throw Error(ErrorKind::UnknownVertex, "arrow " + name + " has an undeclared endpoint");
  aindex_[name] = static_cast<int>(arrows_.size());
  arrows_.push_back({name, src, tgt});
  return arrow_count() - 1;
}

int Quiver::add_arrow(const std::string& name, const std::string& src, const std::string& tgt) {
  return add_arrow(name, vertex_index(src), vertex_index(tgt));
}

std::optional<int> Quiver::find_vertex(const std::string& name) const {
  auto it = vindex_.find(name);
  if (it == vindex_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Quiver::find_arrow(const std::string& name) const {
  auto it = aindex_.find(name);
  if (it == aindex_.end()) return std::nullopt;
  return it->second;
}

int Quiver::vertex_index(const std::string& name) const {
  auto v = find_vertex(name);
  if (!v) throw Error(ErrorKind::UnknownVertex, name);
  return *v;
}

int Quiver::arrow_index(const std::string& name) const {
  auto a = find_arrow(name);
  if (!a) throw Error(ErrorKind::InvalidArgument, "unknown arrow " + name);
  return *a;
}

std::vector<int> Quiver::out_arrows(int v) const {
  std::vector<int> r;
  for (int a = 0; a < arrow_count(); ++a)
    if (arrows_[a].src == v) r.push_back(a);
  return r;
}

std::vector<int> Quiver::in_arrows(int v) const {
  std::vector<int> r;
  for (int a = 0; a < arrow_count(); ++a)
    if (arrows_[a].tgt == v) r.push_back(a);
  return r;
}

Path make_path(const Quiver& q, const std::vector<int>& arrows) {
  if (arrows.empty()) throw Error(ErrorKind::InvalidArgument, "empty arrow list needs a vertex");
  Path p{q.arrow(arrows.front()).src, q.arrow(arrows.back()).tgt, arrows};
  for (std::size_t i = 1; i < arrows.size(); ++i)
    if (q.arrow(arrows[i - 1]).tgt != q.arrow(arrows[i]).src)
      throw Error(ErrorKind::InvalidArgument, "arrows do not compose: " + q.arrow(arrows[i - 1]).name +
                                                  ", " + q.arrow(arrows[i]).name);
  return p;
}

std::string path_str(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "id_" + q.vertex(p.src);
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty()) s += '*';
    s += q.arrow(*it).name;
  }
  return s;
}

void validate_relation(const Quiver& q, const Relation& r) {
  if (r.terms.empty()) throw Error(ErrorKind::InvalidArgument, "empty relation");
  bool nonzero = false;
  const Path& first = r.terms.front().second;
  for (const auto& [c, p] : r.terms) {
    if (!c.is_zero()) nonzero = true;
    if (p.src != first.src || p.tgt != first.tgt)
      throw Error(ErrorKind::InvalidArgument, "relation paths are not parallel");
    if (!p.arrows.empty()) make_path(q, p.arrows);
  }
  if (!nonzero) throw Error(ErrorKind::InvalidArgument, "relation has only zero coefficients");
}

std::vector<int> topological_order(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<int> indeg(n, 0);
  for (const auto& a : q.arrows()) ++indeg[a.tgt];
  std::vector<int> order, ready;
  for (int v = n - 1; v >= 0; --v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    std::vector<int> next;
    for (const auto& a : q.arrows())
      if (a.src == v && --indeg[a.tgt] == 0) next.push_back(a.tgt);
    std::sort(next.rbegin(), next.rend());
    for (int w : next) ready.push_back(w);
  }
  if (static_cast<int>(order.size()) != n) throw Error(ErrorKind::NonAcyclic, "quiver has an oriented cycle");
  return order;
}

bool is_acyclic(const Quiver& q) {
  try {
    topological_order(q);
    return true;
  } catch (const Error&) {
    return false;
  }
}

namespace {

bool path_less(const Quiver& q, const Path& a, const Path& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  for (std::size_t i = 0; i < a.arrows.size(); ++i) {
    const auto& na = q.arrow(a.arrows[i]).name;
    const auto& nb = q.arrow(b.arrows[i]).name;
    if (na != nb) return na < nb;
  }
  return false;
}

}  // namespace

std::vector<Path> enumerate_paths(const Quiver& q, int x, int y, std::size_t max_len) {
  std::vector<Path> out;
  std::vector<int> stack;
  std::function<void(int)> dfs = [&](int v) {
    if (v == y) out.push_back({x, y, stack});
    if (stack.size() == max_len) return;
    for (int a : q.out_arrows(v)) {
      stack.push_back(a);
      dfs(q.arrow(a).tgt);
      stack.pop_back();
    }
  };
  dfs(x);
  std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) { return path_less(q, a, b); });
  return out;
}

std::optional<std::size_t> HomPaths::path_index(const Path& p) const {
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (paths[i].arrows == p.arrows && paths[i].src == p.src) return i;
  return std::nullopt;
}

std::vector<Scalar> HomPaths::coordinates(const Path& p) const {
  auto i = path_index(p);
  if (!i) throw Error(ErrorKind::InvalidArgument, "path is not parallel to this hom space");
  return reduction.col(*i);
}

PathTable all_paths(const Quiver& q) {
  topological_order(q);
  const int n = q.vertex_count();
  PathTable t(n, std::vector<std::vector<Path>>(n));
  for (int x = 0; x < n; ++x) {
    std::vector<int> stack;
    std::function<void(int)> dfs = [&](int v) {
      t[x][v].push_back({x, v, stack});
      for (int a : q.out_arrows(v)) {
        stack.push_back(a);
        dfs(q.arrow(a).tgt);
        stack.pop_back();
      }
    };
    dfs(x);
    for (auto& ps : t[x])
      std::sort(ps.begin(), ps.end(), [&](const Path& a, const Path& b) { return path_less(q, a, b); });
  }
  return t;
}

HomPaths hom_basis_paths(const Quiver& q, const std::vector<Relation>& rels, int x, int y) {
  if (!is_acyclic(q)) throw Error(ErrorKind::NonAcyclic, "hom spaces need an acyclic quiver");
  return hom_basis_paths(q, rels, all_paths(q), x, y);
}

HomPaths hom_basis_paths(const Quiver& q, const std::vector<Relation>& rels, const PathTable& table, int x,
                         int y) {
  (void)q;
  HomPaths h;
  h.paths = table[x][y];
  const std::size_t np = h.paths.size();
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < np; ++i) index[h.paths[i].arrows] = i;

  // Columns are stored longest-first so that pivots land on long paths and
  // short paths survive as basis representatives.
  auto col_of = [&](std::size_t path_idx) { return np - 1 - path_idx; };

  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : rels) {
    const int u = r.terms.front().second.src;
    const int v = r.terms.front().second.tgt;
    for (const auto& pre : table[x][u])
      for (const auto& post : table[v][y]) {
        std::vector<Scalar> row(np, Scalar(0));
        bool any = false;
        for (const auto& [c, p] : r.terms) {
          std::vector<int> w = pre.arrows;
          w.insert(w.end(), p.arrows.begin(), p.arrows.end());
          w.insert(w.end(), post.arrows.begin(), post.arrows.end());
          auto it = index.find(w);
          if (it == index.end()) continue;
          row[col_of(it->second)] += c;
          any = true;
        }
        if (any) rows.push_back(std::move(row));
      }
  }

  Matrix ideal(rows.size(), np);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < np; ++j) ideal(i, j) = rows[i][j];
  Rref rr = rref(ideal);
  std::vector<bool> pivot(np, false);
  for (auto p : rr.pivots) pivot[p] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = np; c-- > 0;)
    if (!pivot[c]) free_cols.push_back(c);
  // free_cols holds columns for paths in increasing path order.
  h.dimension = free_cols.size();
  std::vector<std::size_t> coord_of_col(np, 0);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    h.basis.push_back(np - 1 - free_cols[k]);
    coord_of_col[free_cols[k]] = k;
  }

  h.reduction = Matrix(h.dimension, np);
  for (std::size_t pi = 0; pi < np; ++pi) {
    const std::size_t c = col_of(pi);
    if (!pivot[c]) {
      h.reduction(coord_of_col[c], pi) = Scalar(1);
      continue;
    }
    // path = -(sum of free entries in its pivot row) modulo the ideal
    std::size_t row = 0;
    while (rr.pivots[row] != c) ++row;
    for (std::size_t f : free_cols) {
      const Scalar& e = rr.reduced(row, f);
      if (!e.is_zero()) h.reduction(coord_of_col[f], pi) = -e;
    }
  }
  return h;
}

}  // namespace tq

