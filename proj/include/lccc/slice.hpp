#ifndef LCCC_SLICE_HPP
#define LCCC_SLICE_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lccc/finset.hpp"

namespace lccc {

/// An object of the slice category C/A: a map into the base A.
struct SliceObj {
  FinMap proj;

  const FinSet& total() const { return proj.dom(); }
  const FinSet& base() const { return proj.cod(); }
};

inline bool slice_obj_equal(const SliceObj& x, const SliceObj& y) {
  return map_equal(x.proj, y.proj);
}

/// A commuting triangle over a shared base.
struct SliceMor {
  SliceObj src;
  SliceObj dst;
  FinMap mediating;
};

/// Validates the triangle dst.proj ∘ u = src.proj and builds the morphism.
inline SliceMor slice_mor(FinMap u, SliceObj src, SliceObj dst) {
  if (!src.base().same_elements(dst.base()))
    throw BaseMismatch("slice_mor: objects live over different bases (" +
                       src.base().name() + " vs " + dst.base().name() + ")");
  if (!u.dom().same_elements(src.total()) ||
      !u.cod().same_elements(dst.total()))
    throw ObjectMismatch("slice_mor: mediating map does not match the totals");
  for (const auto& e : src.total().elements())
    if (dst.proj(u(e)) != src.proj(e))
      throw TriangleDoesNotCommute(
          "slice_mor: " + dst.proj.cod().name() + "-triangle fails at '" + e +
              "': " + dst.proj(u(e)) + " ≠ " + src.proj(e),
          e);
  return SliceMor{std::move(src), std::move(dst), std::move(u)};
}

inline SliceMor slice_identity(const SliceObj& x) {
  return slice_mor(identity(x.total()), x, x);
}

/// v ∘ u; the triangle is re-validated by construction.
inline SliceMor slice_compose(const SliceMor& v, const SliceMor& u) {
  if (!slice_obj_equal(u.dst, v.src))
    throw ObjectMismatch("slice_compose: middle objects differ");
  return slice_mor(compose(v.mediating, u.mediating), u.src, v.dst);
}

inline bool slice_mor_equal(const SliceMor& u, const SliceMor& v) {
  return slice_obj_equal(u.src, v.src) && slice_obj_equal(u.dst, v.dst) &&
         map_equal(u.mediating, v.mediating);
}

/// All slice morphisms x -> y over a shared base: the ambient hom-set
/// filtered on the triangle condition.
inline std::vector<SliceMor> slice_hom_set(const SliceObj& x,
                                           const SliceObj& y,
                                           std::uint64_t limit = kDefaultLimit) {
  if (!x.base().same_elements(y.base()))
    throw BaseMismatch("slice_hom_set: different bases");
  std::vector<SliceMor> result;
  for (const auto& u : hom_set(x.total(), y.total(), limit)) {
    bool commutes = true;
    for (const auto& e : x.total().elements())
      if (y.proj(u(e)) != x.proj(e)) {
        commutes = false;
        break;
      }
    if (commutes) result.push_back(SliceMor{x, y, u});
  }
  return result;
}

/// A computable functor between two slice categories.
struct FunctorRepr {
  std::string name;
  FinSet src_base;
  FinSet dst_base;
  std::function<SliceObj(const SliceObj&)> on_object;
  std::function<SliceMor(const SliceMor&)> on_morphism;

  SliceObj operator()(const SliceObj& x) const { return on_object(x); }
  SliceMor operator()(const SliceMor& u) const { return on_morphism(u); }
};

inline FunctorRepr identity_functor(const FinSet& base) {
  return FunctorRepr{
      "Id_{C/" + base.name() + "}", base, base,
      [](const SliceObj& x) { return x; },
      [](const SliceMor& u) { return u; }};
}

inline FunctorRepr compose_functors(const FunctorRepr& g,
                                    const FunctorRepr& f) {
  if (!f.dst_base.same_elements(g.src_base))
    throw BaseMismatch("compose_functors: " + f.name + " lands in C/" +
                       f.dst_base.name() + " but " + g.name + " starts at C/" +
                       g.src_base.name());
  return FunctorRepr{
      g.name + "∘" + f.name, f.src_base, g.dst_base,
      [g, f](const SliceObj& x) { return g.on_object(f.on_object(x)); },
      [g, f](const SliceMor& u) { return g.on_morphism(f.on_morphism(u)); }};
}

/// f_! : C/X -> C/Y for f : X -> Y, by postcomposition.
inline FunctorRepr postcompose_functor(const FinMap& f) {
  FinSet src = f.dom(), dst = f.cod();
  return FunctorRepr{
      "(" + f.dom().name() + "→" + f.cod().name() + ")_!", src, dst,
      [f, src](const SliceObj& x) {
        if (!x.base().same_elements(src))
          throw BaseMismatch("f_!: object lives over " + x.base().name() +
                             ", expected " + src.name());
        return SliceObj{compose(f, x.proj)};
      },
      [f, src](const SliceMor& u) {
        if (!u.src.base().same_elements(src))
          throw BaseMismatch("f_!: morphism lives over " +
                             u.src.base().name() + ", expected " + src.name());
        return slice_mor(u.mediating, SliceObj{compose(f, u.src.proj)},
                         SliceObj{compose(f, u.dst.proj)});
      }};
}

/// The terminal object of C/A is id : A -> A.
inline SliceObj slice_terminal(const FinSet& a) {
  return SliceObj{identity(a)};
}

struct SliceCoproductResult {
  SliceObj obj;
  SliceMor inj1;
  SliceMor inj2;
};

/// Fibered coproduct: disjoint union of totals over the copairing of the
/// two projections. Fibers are disjoint unions of fibers.
inline SliceCoproductResult slice_coproduct(const SliceObj& p,
                                            const SliceObj& q) {
  if (!p.base().same_elements(q.base()))
    throw BaseMismatch("slice_coproduct: different bases");
  auto cop = coproduct(p.total(), q.total());
  SliceObj obj{copairing(p.proj, q.proj, cop)};
  return {obj, slice_mor(cop.inj1, p, obj), slice_mor(cop.inj2, q, obj)};
}

/// The equivalence C/1 ≅ C, in both directions. The round trips are
/// identities on the nose because maps into the terminal object are unique.
struct OverTerminalEquivalence {
  FinSet forget(const SliceObj& x) const {
    if (x.base().size() != 1)
      throw BaseMismatch("over_terminal_equivalence: base is not terminal");
    return x.total();
  }
  FinMap forget_mor(const SliceMor& u) const { return u.mediating; }
  SliceObj attach(const FinSet& x) const {
    return SliceObj{unique_to_terminal(x)};
  }
  SliceMor attach_mor(const FinMap& f) const {
    return slice_mor(f, attach(f.dom()), attach(f.cod()));
  }
};

inline OverTerminalEquivalence over_terminal_equivalence() { return {}; }

}  // namespace lccc

#endif  // LCCC_SLICE_HPP
