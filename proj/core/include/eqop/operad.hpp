#ifndef EQOP_OPERAD_HPP
#define EQOP_OPERAD_HPP

#include <optional>

#include "eqop/symseq.hpp"

namespace eqop {

/// An operad truncated to the base's arity range: a symmetric sequence with
/// unit elements and partial-composition tables; general evaluation is
/// derived from the single-slot graftings.
struct Operad {
  SymSeq levels;
  std::map<int, int> unit;  // color -> element of (c;c)
  // (outer object, slot, inner object) -> result matrix [a][b]
  std::map<std::tuple<int, int, int>, std::vector<std::vector<int>>> comp;

  const SigGroupoid& base() const { return *levels.base; }
  /// Splice of signatures: outer o_slot inner.
  static Signature splice(const Signature& outer, int slot,
                          const Signature& inner);
  bool composable(const Signature& outer, int slot,
                  const Signature& inner) const;
  int compose_at(const Signature& outer, int slot, const Signature& inner,
                 int a, int b) const;
  /// Populate every in-range composition table via `gamma`.
  void build_comp_tables(
      const std::function<int(const Signature&, int, const Signature&, int,
                              int)>& gamma);
};

/// Evaluate a labeled tree: labels[v] is an element of O at the planar
/// corolla of vertex v; the stick evaluates to the unit of its color.
/// Slots are contracted in descending planar order.
int eval_tree(const Operad& o, const ColoredTree& t,
              const std::vector<int>& labels);

/// Unit, associativity (two contraction orders over all supported trees
/// within the vertex bound) and equivariance of the composition tables;
/// returns a description of the first violation.
std::optional<std::string> check_operad_laws(const Operad& o, int tree_bound);

/// The endomorphism operad of a family of finite sets over trivially-acted
/// colors: End(C)(c1..cn;c0) = Maps(A_{c1} x ... x A_{cn}, A_{c0}).
Operad endomorphism_operad(SigGroupoidPtr base,
                           const std::vector<int>& set_sizes);

/// The associative operad: n! orderings at each arity >= 1.
Operad associative_operad(SigGroupoidPtr base);

/// The terminal operad: a point at every in-range signature.
Operad terminal_operad(SigGroupoidPtr base);

/// The initial operad: units only.
Operad initial_operad(SigGroupoidPtr base);

/// An operad map as a natural transformation preserving units and
/// composition (validated).
struct OperadMap {
  const Operad* src;
  const Operad* dst;
  NatTrans nat;
};
bool is_operad_map(const Operad& o, const Operad& p, const NatTrans& t);

/// All operad maps O -> P over a common base, enumerated by generator-image
/// backtracking with forced closure.
std::vector<NatTrans> enumerate_operad_maps(const Operad& o, const Operad& p);

/// Reindexing along an equivariant color map (operad structure inherited).
Operad pullback_operad(const std::vector<int>& phi, const Operad& o,
                       SigGroupoidPtr src_base);

/// Extension by empty sets along an injective color map, with the forced
/// units at the new colors.
Operad pushforward_operad_injective(const std::vector<int>& phi,
                                    const Operad& o, SigGroupoidPtr dst_base);

}  // namespace eqop

#endif
