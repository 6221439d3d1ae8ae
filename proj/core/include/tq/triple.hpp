#pragma once

#include <utility>
#include <vector>

#include "tq/functor.hpp"
#include "tq/threadquiver.hpp"

namespace tq {

// The pieces a representation of an expanded thread quiver splits into: the
// underlying quiver part and one chain per thread arrow.
struct TripleContext {
  ThreadQuiver tq;
  Window window;
  CategoryPtr cat;                 // window.category()
  Window qr_window;                // underlying quiver with relations
  CategoryPtr qr;
  std::vector<CategoryPtr> chains; // linear category on each truncated thread order
  CatFunctor i;                    // qr -> window
  std::vector<CatFunctor> j;       // chain_t -> window
};

TripleContext triple_context(const ThreadQuiver& tq, int depth);

// Linear category of a finite chain: one arrow between neighbours, no relations.
CategoryPtr chain_category(const FiniteChain& c);

struct TripleRep {
  Rep n;                                   // over ctx.qr
  std::vector<Rep> l;                      // l[t] over ctx.chains[t]
  std::vector<std::pair<Matrix, Matrix>> alpha;  // L_t(min) -> N(src t), L_t(max) -> N(tgt t)
};

TripleRep to_triple(const TripleContext& ctx, const Rep& m);
// Throws AlphaNotInvertible; NotFunctorial when alpha is not natural.
Rep from_triple(const TripleContext& ctx, const TripleRep& t);
// N(t) alpha_max = alpha_min L_t(min <= max) for every thread arrow t.
bool alpha_natural(const TripleContext& ctx, const TripleRep& t);

// Dimension of the space of modifications (beta, gamma_t) between two triples.
std::size_t modification_dim(const TripleContext& ctx, const TripleRep& a, const TripleRep& b);

}  // namespace tq
