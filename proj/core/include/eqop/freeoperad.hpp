#ifndef EQOP_FREEOPERAD_HPP
#define EQOP_FREEOPERAD_HPP

#include "eqop/operad.hpp"

namespace eqop {

/// A free-operad element presented as a planar labeled tree: colors are
/// literal, `numbering[i]` is the leaf position carrying source i of the
/// signature, and `labels[v]` is a generator element at the planar corolla
/// of vertex v.
struct PresentedElem {
  ColoredTree tree;
  Perm numbering;
  std::vector<int> labels;
};

/// The free equivariant colored operad on a symmetric sequence, truncated to
/// the base's arity range and a tree-vertex bound. Elements at a signature
/// are iso classes of generator-labeled trees over the equivariant tree
/// groupoid, realized by a left Kan extension along the leaf-root functor.
class FreeOperad {
 public:
  SymSeq gens;
  int bound = 0;
  Operad op;

  // the equivariant tree groupoid and the leaf-root span
  std::vector<ColoredTree> trees;
  GroupoidPtr tree_gpd;
  std::vector<std::pair<int, std::vector<int>>> arrow_parts;  // (g, edge map)

  /// Resolve a presented labeled tree to its class, or -1 when the tree
  /// falls outside the truncation.
  int encode(const Signature& sig, const PresentedElem& p) const;
  /// The canonical presentation of a class.
  PresentedElem decode(const Signature& sig, int elem) const;
  int tree_size(const Signature& sig, int elem) const;

  /// Composition by grafting of presented trees; -1 when out of truncation.
  int graft_compose(const Signature& outer, int slot, const Signature& inner,
                    int a, int b) const;

 private:
  friend FreeOperad free_operad(const SymSeq&, std::optional<int>, bool);
  std::map<std::string, int> obj_of_key_;
  std::map<std::tuple<int, int, std::vector<int>>, int> arrow_of_;
  std::function<int(int, int, int, int)> cls_;
  std::function<std::tuple<int, int, int>(int, int)> rep_;
  std::vector<int> lr_obj_;  // tree object -> base object
};

/// Build the truncated free operad. With reduced = true (no 0-ary or 1-ary
/// generator values) the bound may be omitted and every in-range composition
/// is total; otherwise the bound is required and out-of-bound composites are
/// reported as undefined (-1 in the tables).
FreeOperad free_operad(const SymSeq& x, std::optional<int> bound,
                       bool reduced);

/// The monad unit X -> FX (one-vertex corollas).
SymSeqMap monad_unit(const FreeOperad& fx);

/// The monad multiplication F(FX)(C) -> FX(C) at one signature: flatten the
/// trees-of-trees class; -1 when the flattened tree exceeds fx's bound.
/// `ffx` must be the free operad built on fx.op.levels.
int monad_mult(const FreeOperad& fx, const FreeOperad& ffx,
               const Signature& sig, int elem);

}  // namespace eqop

#endif
