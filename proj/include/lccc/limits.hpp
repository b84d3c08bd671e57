#ifndef LCCC_LIMITS_HPP
#define LCCC_LIMITS_HPP

#include <string>
#include <utility>
#include <vector>

#include "lccc/finset.hpp"
#include "lccc/slice.hpp"

namespace lccc {

/// Two maps with a common codomain: B -> A <- C.
struct Cospan {
  FinMap f;  // B -> A
  FinMap g;  // C -> A

  Cospan(FinMap f_, FinMap g_) : f(std::move(f_)), g(std::move(g_)) {
    if (!f.cod().same_elements(g.cod()))
      throw CodomainMismatch("cospan: " + f.cod().name() + " vs " +
                             g.cod().name());
  }
};

struct PullbackResult {
  FinSet carrier;
  FinMap p;  // carrier -> B
  FinMap q;  // carrier -> C
};

/// Canonical pullback: pairs ⟨b|c⟩ with f(b) = g(c), in lexicographic
/// order of the stored element orders. The empty carrier is legal.
inline PullbackResult pullback(const Cospan& c) {
  std::vector<std::string> elems, im_p, im_q;
  for (const auto& b : c.f.dom().elements())
    for (const auto& z : c.g.dom().elements())
      if (c.f(b) == c.g(z)) {
        elems.push_back(pair_label(b, z));
        im_p.push_back(b);
        im_q.push_back(z);
      }
  FinSet carrier("(" + c.f.dom().name() + " ×_" + c.f.cod().name() + " " +
                     c.g.dom().name() + ")",
                 std::move(elems));
  return {carrier, FinMap(carrier, c.f.dom(), std::move(im_p)),
          FinMap(carrier, c.g.dom(), std::move(im_q))};
}

/// The unique u : Y -> carrier with p∘u = p′ and q∘u = q′, for a
/// commuting cone (p′, q′).
inline FinMap mediator(const Cospan& c, const PullbackResult& pb,
                       const FinMap& p_prime, const FinMap& q_prime) {
  if (!p_prime.dom().same_elements(q_prime.dom()))
    throw DomainMismatch("mediator: cone legs have different domains");
  for (const auto& y : p_prime.dom().elements())
    if (c.f(p_prime(y)) != c.g(q_prime(y)))
      throw ConeDoesNotCommute(
          "mediator: cone fails at '" + y + "': f(" + p_prime(y) + ") = " +
              c.f(p_prime(y)) + " but g(" + q_prime(y) + ") = " +
              c.g(q_prime(y)),
          y);
  std::vector<std::string> images;
  images.reserve(p_prime.dom().size());
  for (const auto& y : p_prime.dom().elements())
    images.push_back(pair_label(p_prime(y), q_prime(y)));
  return FinMap(p_prime.dom(), pb.carrier, std::move(images));
}

/// g^* : C/A -> C/C for g : C -> A. On objects, the pullback leg
/// landing in C; on morphisms, the induced mediator. Strict functor on
/// the canonical carriers.
inline FunctorRepr base_change(const FinMap& g) {
  FinSet src = g.cod(), dst = g.dom();
  auto on_object = [g, src](const SliceObj& x) {
    if (!x.base().same_elements(src))
      throw BaseMismatch("base_change: object lives over " +
                         x.base().name() + ", expected " + src.name());
    return SliceObj{pullback(Cospan(x.proj, g)).q};
  };
  return FunctorRepr{
      "(" + g.dom().name() + "→" + g.cod().name() + ")^*", src, dst,
      on_object,
      [g, src, on_object](const SliceMor& h) {
        if (!h.src.base().same_elements(src))
          throw BaseMismatch("base_change: morphism lives over " +
                             h.src.base().name() + ", expected " +
                             src.name());
        Cospan cx(h.src.proj, g), cy(h.dst.proj, g);
        PullbackResult pbx = pullback(cx), pby = pullback(cy);
        FinMap u = mediator(cy, pby, compose(h.mediating, pbx.p), pbx.q);
        return slice_mor(u, SliceObj{pbx.q}, SliceObj{pby.q});
      }};
}

struct SliceProductResult {
  SliceObj obj;
  SliceMor proj1;
  SliceMor proj2;
};

/// The product in C/A is the fibered product: the canonical pullback of
/// the two projections, over the common composite.
inline SliceProductResult slice_product(const SliceObj& p,
                                        const SliceObj& q) {
  if (!p.base().same_elements(q.base()))
    throw BaseMismatch("slice_product: different bases");
  Cospan c(p.proj, q.proj);
  PullbackResult pb = pullback(c);
  SliceObj obj{compose(p.proj, pb.p)};
  return {obj, slice_mor(pb.p, obj, p), slice_mor(pb.q, obj, q)};
}

/// The mediator of the slice-product universal property for a cone
/// (u : x -> p, v : x -> q) in C/A.
inline SliceMor slice_product_mediator(const SliceProductResult& prod,
                                       const SliceMor& u, const SliceMor& v) {
  Cospan c(prod.proj1.dst.proj, prod.proj2.dst.proj);
  PullbackResult pb{prod.obj.total(), prod.proj1.mediating,
                    prod.proj2.mediating};
  FinMap m = mediator(c, pb, u.mediating, v.mediating);
  return slice_mor(m, u.src, prod.obj);
}

struct NonIsoPullbackWitness {
  Cospan first;
  Cospan second;
  std::size_t first_cardinality;
  std::size_t second_cardinality;
  std::string report;
};

/// A fixed pair of cospans over the same B, A, C and the same f, whose
/// pullbacks have different cardinality; g is the only thing that varies.
inline NonIsoPullbackWitness nonisomorphic_pullback_witness() {
  FinSet b("B", {"b1", "b2"}), a("A", {"a1", "a2"}), c("C", {"c"});
  FinMap f(b, a, {"a1", "a1"});
  Cospan c1(f, FinMap(c, a, {"a1"}));
  Cospan c2(f, FinMap(c, a, {"a2"}));
  std::size_t n1 = pullback(c1).carrier.size();
  std::size_t n2 = pullback(c2).carrier.size();
  std::string report =
      "B ×_A C with g(c)=a1 has " + std::to_string(n1) +
      " elements; with g(c)=a2 it has " + std::to_string(n2) +
      "; same B, A, C, f — the carriers are not isomorphic.";
  return {c1, c2, n1, n2, std::move(report)};
}

struct IsoWitness {
  FinMap fwd;
  FinMap bwd;
};

/// Checks that fwd/bwd are mutually inverse maps commuting with the two
/// projections: a materialized canonical isomorphism of slice objects.
inline bool verify_slice_iso(const IsoWitness& w, const SliceObj& x,
                             const SliceObj& y) {
  if (!x.base().same_elements(y.base())) return false;
  if (!map_equal(compose(w.bwd, w.fwd), identity(x.total()))) return false;
  if (!map_equal(compose(w.fwd, w.bwd), identity(y.total()))) return false;
  if (!map_equal(compose(y.proj, w.fwd), x.proj)) return false;
  if (!map_equal(compose(x.proj, w.bwd), y.proj)) return false;
  return true;
}

}  // namespace lccc

#endif  // LCCC_LIMITS_HPP
