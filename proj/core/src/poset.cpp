#include "tq/poset.hpp"

#include "tq/error.hpp"

namespace tq {

LinearOrderExpr LinearOrderExpr::fin(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "Fin(n) needs n >= 0");
  LinearOrderExpr e;
  e.kind_ = Kind::Fin;
  e.n_ = n;
  return e;
}

LinearOrderExpr LinearOrderExpr::nat() {
  LinearOrderExpr e;
  e.kind_ = Kind::Nat;
  return e;
}

LinearOrderExpr LinearOrderExpr::neg_nat() {
  LinearOrderExpr e;
  e.kind_ = Kind::NegNat;
  return e;
}

LinearOrderExpr LinearOrderExpr::integers() {
  LinearOrderExpr e;
  e.kind_ = Kind::Int;
  return e;
}

LinearOrderExpr LinearOrderExpr::concat(const LinearOrderExpr& a, const LinearOrderExpr& b) {
  LinearOrderExpr e;
  e.kind_ = Kind::Concat;
  e.a_ = std::make_shared<const LinearOrderExpr>(a);
  e.b_ = std::make_shared<const LinearOrderExpr>(b);
  return e;
}

LinearOrderExpr thread_order(const LinearOrderExpr& p) {
  if (p.contains_thread()) throw Error(ErrorKind::NestedThread, "label already contains a thread order");
  LinearOrderExpr e;
  e.kind_ = LinearOrderExpr::Kind::Thread;
  e.a_ = std::make_shared<const LinearOrderExpr>(p);
  return e;
}

bool LinearOrderExpr::contains_thread() const {
  switch (kind_) {
    case Kind::Thread: return true;
    case Kind::Concat: return a_->contains_thread() || b_->contains_thread();
    default: return false;
  }
}

std::string LinearOrderExpr::str() const {
  switch (kind_) {
    case Kind::Fin: return n_ == 0 ? "" : std::to_string(n_);
    case Kind::Nat: return "N";
    case Kind::NegNat: return "-N";
    case Kind::Int: return "Z";
    case Kind::Concat: {
      std::string l = a_->str(), r = b_->str();
      if (a_->kind_ == Kind::Fin && a_->n_ == 0) l = "0";
      if (b_->kind_ == Kind::Fin && b_->n_ == 0) r = "0";
      if (b_->kind_ == Kind::Concat) r = "(" + r + ")";
      return l + " . " + r;
    }
    case Kind::Thread: return "L(" + a_->str() + ")";
  }
  return "";
}

bool operator==(const LinearOrderExpr& x, const LinearOrderExpr& y) {
  if (x.kind_ != y.kind_) return false;
  switch (x.kind_) {
    case LinearOrderExpr::Kind::Fin: return x.n_ == y.n_;
    case LinearOrderExpr::Kind::Concat: return *x.a_ == *y.a_ && *x.b_ == *y.b_;
    case LinearOrderExpr::Kind::Thread: return *x.a_ == *y.a_;
    default: return true;
  }
}

std::optional<std::size_t> FiniteChain::find(const std::string& e) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == e) return i;
  return std::nullopt;
}

namespace {

// Labels: n<k> for k in N, m<k> for -k in -N, z<k>/zm<k> for +-k in Z,
// f<k> for Fin, l/r prefixes for concat halves, s<k>/e<k> for the outer
// segments of a thread order and <p>_<z> for its middle block.
std::string int_label(int z) { return z < 0 ? "zm" + std::to_string(-z) : "z" + std::to_string(z); }

void append(FiniteChain& c, std::string e, bool before, bool after) {
  c.elements.push_back(std::move(e));
  c.marks.push_back(before || after ? Mark::CutAdjacent : Mark::Interior);
  c.cut_before.push_back(before);
  c.cut_after.push_back(after);
}

void append_from(FiniteChain& c, const std::string& prefix, const FiniteChain& a) {
  for (std::size_t i = 0; i < a.size(); ++i) append(c, prefix + a.elements[i], a.cut_before[i], a.cut_after[i]);
}

FiniteChain trunc(const LinearOrderExpr& e, int d) {
  using K = LinearOrderExpr::Kind;
  FiniteChain c;
  switch (e.kind()) {
    case K::Fin:
      for (int i = 0; i < e.n(); ++i) append(c, "f" + std::to_string(i), false, false);
      break;
    case K::Nat:
      for (int i = 0; i <= d; ++i) append(c, "n" + std::to_string(i), false, i == d);
      break;
    case K::NegNat:
      for (int i = d; i >= 0; --i) append(c, "m" + std::to_string(i), i == d, false);
      break;
    case K::Int:
      for (int z = -d; z <= d; ++z) append(c, int_label(z), z == -d, z == d);
      break;
    case K::Concat:
      append_from(c, "l", trunc(e.left(), d));
      append_from(c, "r", trunc(e.right(), d));
      break;
    case K::Thread: {
      for (int i = 0; i <= d; ++i) append(c, "s" + std::to_string(i), false, i == d);
      FiniteChain p = trunc(e.inner(), d);
      for (std::size_t k = 0; k < p.size(); ++k)
        for (int z = -d; z <= d; ++z) append(c, p.elements[k] + "_" + int_label(z), z == -d, z == d);
      for (int i = d; i >= 0; --i) append(c, "e" + std::to_string(i), i == d, false);
      // the extremes are true min and max of the thread order
      for (std::size_t k : {std::size_t{0}, c.size() - 1}) {
        c.marks[k] = Mark::Interior;
        c.cut_before[k] = c.cut_after[k] = false;
      }
      break;
    }
  }
  return c;
}

}  // namespace

FiniteChain truncate(const LinearOrderExpr& e, int depth) {
  if (depth < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation depth");
  return trunc(e, depth);
}

std::pair<std::optional<std::string>, std::optional<std::string>> neighbors(const FiniteChain& c,
                                                                            const std::string& e) {
  auto i = c.find(e);
  if (!i) throw Error(ErrorKind::ElementNotFound, e);
  std::optional<std::string> pred, succ;
  if (*i > 0) pred = c.elements[*i - 1];
  if (*i + 1 < c.size()) succ = c.elements[*i + 1];
  return {pred, succ};
}

}  // namespace tq
