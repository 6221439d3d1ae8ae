#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tq {

// Symbolic linear orders:
//   P ::= Fin(n) | NAT | NEG_NAT | INT | Concat(P, P) | ThreadOrder(P)
// with ThreadOrder(P) = N . (P x_lex Z) . (-N).
class LinearOrderExpr {
 public:
  enum class Kind { Fin, Nat, NegNat, Int, Concat, Thread };

  static LinearOrderExpr fin(int n);
  static LinearOrderExpr nat();
  static LinearOrderExpr neg_nat();
  static LinearOrderExpr integers();
  static LinearOrderExpr concat(const LinearOrderExpr& a, const LinearOrderExpr& b);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  const LinearOrderExpr& left() const { return *a_; }
  const LinearOrderExpr& right() const { return *b_; }
  const LinearOrderExpr& inner() const { return *a_; }
  bool contains_thread() const;

  // DSL spelling: "3", "N", "-N", "Z", "a . b", "" for Fin(0).
  std::string str() const;

  friend bool operator==(const LinearOrderExpr& x, const LinearOrderExpr& y);
  friend LinearOrderExpr thread_order(const LinearOrderExpr& p);

 private:
  LinearOrderExpr() = default;
  Kind kind_ = Kind::Fin;
  int n_ = 0;
  std::shared_ptr<const LinearOrderExpr> a_;
  std::shared_ptr<const LinearOrderExpr> b_;
};

inline LinearOrderExpr concat_orders(const LinearOrderExpr& a, const LinearOrderExpr& b) {
  return LinearOrderExpr::concat(a, b);
}

// ThreadOrder(p). Throws NestedThread when p already contains one.
LinearOrderExpr thread_order(const LinearOrderExpr& p);

enum class Mark { Interior, CutAdjacent };

struct FiniteChain {
  std::vector<std::string> elements;  // identifier-safe labels, unique
  std::vector<Mark> marks;
  // Which side of a CutAdjacent element lost its neighbours.
  std::vector<bool> cut_before;
  std::vector<bool> cut_after;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> find(const std::string& e) const;
};

FiniteChain truncate(const LinearOrderExpr& e, int depth);

// (predecessor, successor); nullopt at the ends. Throws ElementNotFound.
std::pair<std::optional<std::string>, std::optional<std::string>> neighbors(const FiniteChain& c,
                                                                            const std::string& e);

}  // namespace tq
