#ifndef EQOP_PSEUDOINDEX_HPP
#define EQOP_PSEUDOINDEX_HPP

#include <optional>
#include <string>

#include "eqop/gsfamily.hpp"
#include "eqop/trees.hpp"

namespace eqop {

/// A violation of the pseudo-indexing-system condition V*F^wr <= lr*F:
/// a tree T (single-color) and a subgroup of G x Aut(T) whose slotwise
/// vertex projections all lie in F but whose leaf-root image does not.
struct PseudoIndexWitness {
  ColoredTree tree;
  std::vector<int> lambda_members;  // members of G x Aut(T)
  std::string describe(const GSigmaFamily& f) const;
};

/// Checks V*F^wr <= lr*F over all single-color trees with at most `bound`
/// vertices whose vertex arities and leaf count fit the family's declared
/// arity range. Empty result means verified up to the bound.
std::optional<PseudoIndexWitness> check_pseudo_indexing(const GSigmaFamily& f,
                                                        int bound);

}  // namespace eqop

#endif
