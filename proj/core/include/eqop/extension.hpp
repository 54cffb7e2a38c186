#ifndef EQOP_EXTENSION_HPP
#define EQOP_EXTENSION_HPP

#include "eqop/freeoperad.hpp"
#include "eqop/operad.hpp"

namespace eqop {

/// A map of finite sets.
struct FinSetMap {
  int src_size = 0;
  int dst_size = 0;
  std::vector<int> map;
};

/// Binary pushout-product (f: A->B) box (g: C->D): the source is the pushout
/// of A x D <- A x C -> B x C, mapping into B x D. Elements of the source are
/// classes of mixed pairs; `cls_ad` and `cls_bc` give the class of each raw
/// pair (indexed a*|D|+d and b*|C|+c).
struct PushoutProductResult {
  int src_size = 0;
  int dst_size = 0;
  std::vector<int> map;  // source class -> B x D (b*|D|+d)
  std::vector<int> cls_ad;
  std::vector<int> cls_bc;
};
PushoutProductResult pushout_product(const FinSetMap& f, const FinSetMap& g);

/// n-fold pushout-product source of maps u_i: classes of mixed tuples
/// (side, element) per slot with at least one X side, glued by pushing an X
/// coordinate through its map whenever another X remains.
struct MixedTuple {
  std::vector<char> is_x;
  std::vector<int> elem;
};
struct IteratedPPResult {
  std::vector<MixedTuple> tuples;       // all raw mixed tuples (>= 1 X)
  std::vector<int> cls;                 // per raw tuple
  int n_classes = 0;
  std::vector<int> target;              // per class: index into Y-product
};
IteratedPPResult iterated_pushout_product(const std::vector<FinSetMap>& u);

/// A free operad extension problem over one color G-set: the pushout of
/// F(u): FX -> FY against an attaching map FX -> O, all within the declared
/// arity range and a tree-vertex bound.
struct ExtensionProblem {
  Operad base_op;   // O
  SymSeq x;
  SymSeq y;
  NatTrans u;       // X -> Y
  NatTrans attach;  // X -> underlying O
  int bound = 0;

  void validate() const;
};

struct FiltrationStage {
  int k = 0;
  std::vector<int> sizes;                        // per base object
  std::vector<std::vector<int>> map_from_prev;   // per object, per element
};

struct ExtensionResult {
  std::vector<FiltrationStage> stages;
  Operad colimit;
  bool saturated = false;  // some supported tree used the full vertex bound
  // a gluing relation needed a composite outside the arity range and was
  // dropped; the result is then only an approximation
  bool relations_dropped = false;
  /// per base object, per element: the canonical normal-form key
  std::vector<std::vector<std::string>> element_keys;
};

/// The filtration O = O_0 -> O_1 -> ... -> O[u] by inert-vertex count of
/// alternating trees, with pointwise pushouts per stage, assembled into the
/// colimit operad.
ExtensionResult extension_colimit(const ExtensionProblem& p);

/// Independent oracle: the colimit over the extension tree category of
/// {O,X,Y}-labeled trees with label-respecting tall maps, computed as a
/// union-find quotient over generated moves.
struct OracleResult {
  std::vector<int> sizes;  // per base object
  std::vector<std::vector<std::string>> element_keys;
};
OracleResult oracle_extension(const ExtensionProblem& p);

/// Cross-path comparison: the inclusion of filtration normal forms into the
/// oracle's classes must be a levelwise bijection.
bool extensions_agree(const ExtensionProblem& p, const ExtensionResult& filt,
                      const OracleResult& oracle);

/// |Hom_Op(O[u], P)| must equal the number of pairs (Hom_Op(O,P),
/// Hom_Sym(Y,P)) agreeing on X, for each candidate target.
bool check_universal_property(const ExtensionProblem& p,
                              const ExtensionResult& r,
                              const std::vector<const Operad*>& targets);

/// Extension by the empty set of a symmetric sequence along an injective
/// equivariant color map (values copied at image signatures).
SymSeq extend_by_empty(const std::vector<int>& phi, const SymSeq& x,
                       SigGroupoidPtr dst_base);

/// Lemma-style check for injective color change: pushing out upstairs and
/// restricting agrees with pushing out downstairs, and local isomorphisms
/// are preserved.
struct ColorChangePushoutReport {
  bool levels_agree = false;
  bool local_iso_preserved = true;  // only meaningful when u is a local iso
};
ColorChangePushoutReport check_injective_colorchange_pushout(
    const ExtensionProblem& c_problem, const std::vector<int>& phi,
    const Operad& o_upstairs, SigGroupoidPtr dst_base, int dst_bound);

}  // namespace eqop

#endif
