#ifndef LCCC_ADJUNCTION_HPP
#define LCCC_ADJUNCTION_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lccc/depprod.hpp"
#include "lccc/exponentials.hpp"
#include "lccc/finset.hpp"
#include "lccc/instances.hpp"
#include "lccc/limits.hpp"
#include "lccc/slice.hpp"

namespace lccc {

struct LawFailure {
  std::string law;
  std::string instance;
  std::string witness;
};

/// Outcome of a law-certification run. Failures are collected, never
/// thrown; an empty failure list is the certificate.
struct LawReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<LawFailure> failures;

  bool pass() const { return failures.empty(); }

  void note(bool ok, const std::string& law, const std::string& instance,
            const std::string& witness = "") {
    ++checked;
    if (!ok) failures.push_back({law, instance, witness});
  }

  void merge(const LawReport& other) {
    checked += other.checked;
    failures.insert(failures.end(), other.failures.begin(),
                    other.failures.end());
  }
};

/// An adjunction F ⊣ G presented by its unit/counit families. The
/// transposition bijection is derived, so the two presentations can be
/// checked against each other.
struct AdjunctionWitness {
  std::string name;
  FunctorRepr left;   // F : C/src -> C/dst
  FunctorRepr right;  // G : C/dst -> C/src
  std::function<SliceMor(const SliceObj&)> unit;    // η_x : x -> GFx
  std::function<SliceMor(const SliceObj&)> counit;  // ε_y : FGy -> y

  // Hom(Fx, y) -> Hom(x, Gy) and back; h lives in Hom(Fx, y).
  SliceMor transpose(const SliceObj& x, const SliceMor& h) const {
    return slice_compose(right(h), unit(x));
  }
  SliceMor untranspose(const SliceObj& y, const SliceMor& k) const {
    return slice_compose(counit(y), left(k));
  }
};

inline AdjunctionWitness identity_adjunction(const FinSet& a) {
  return AdjunctionWitness{
      "id ⊣ id over " + a.name(), identity_functor(a), identity_functor(a),
      [](const SliceObj& x) { return slice_identity(x); },
      [](const SliceObj& y) { return slice_identity(y); }};
}

/// f_! ⊣ f^* for f : B -> A.
inline AdjunctionWitness adj_shriek_star(const FinMap& f) {
  return AdjunctionWitness{
      "f_! ⊣ f^* for " + f.dom().name() + "→" + f.cod().name(),
      dependent_sum(f), base_change(f),
      [f](const SliceObj& x) { return unit_shriek_star(f, x); },
      [f](const SliceObj& y) { return counit_shriek_star(f, y); }};
}

/// f^* ⊣ f_* for f : B -> A.
inline AdjunctionWitness adj_star_pi(const FinMap& f,
                                     std::uint64_t limit = kDefaultLimit) {
  return AdjunctionWitness{
      "f^* ⊣ f_* for " + f.dom().name() + "→" + f.cod().name(),
      base_change(f), f_star(f, limit),
      [f, limit](const SliceObj& y) { return unit_star_pi(f, y, limit); },
      [f, limit](const SliceObj& p) { return counit_star_pi(f, p, limit); }};
}

/// A fiber-preserving transposition: swaps the first two elements that
/// share a fiber, or the identity when every fiber is a singleton.
inline SliceMor fiber_transposition(const SliceObj& x) {
  std::vector<std::string> images(x.total().elements().begin(),
                                  x.total().elements().end());
  for (const auto& [a, fiber] : fiber_decomposition(x.proj))
    if (fiber.size() >= 2) {
      std::size_t i = x.total().index_of(fiber.elements()[0]);
      std::size_t j = x.total().index_of(fiber.elements()[1]);
      std::swap(images[i], images[j]);
      break;
    }
  return slice_mor(FinMap(x.total(), x.total(), images), x, x);
}

/// Negative control: precompose the unit with a fiber transposition.
/// Breaks the GY triangle identity wherever the transposition is not
/// the identity.
inline AdjunctionWitness corrupt_unit(AdjunctionWitness w) {
  std::function<SliceMor(const SliceObj&)> old = std::move(w.unit);
  w.name += " [corrupted unit]";
  w.unit = [old](const SliceObj& x) {
    return slice_compose(old(x), fiber_transposition(x));
  };
  return w;
}

/// Negative control: postcompose the counit with a fiber transposition,
/// breaking the transpose/untranspose round trip.
inline AdjunctionWitness corrupt_counit(AdjunctionWitness w) {
  std::function<SliceMor(const SliceObj&)> old = std::move(w.counit);
  w.name += " [corrupted counit]";
  w.counit = [old](const SliceObj& y) {
    SliceMor eps = old(y);
    return slice_compose(fiber_transposition(eps.dst), eps);
  };
  return w;
}

inline std::string describe(const SliceObj& x) {
  return x.total().name() + "→" + x.base().name() + " (|" +
         std::to_string(x.total().size()) + "|)";
}

/// F(id) = id and F(v∘u) = F(v)∘F(u), scanned over every composable
/// pair among the given objects.
inline LawReport check_functor_laws(const FunctorRepr& F,
                                    const std::vector<SliceObj>& instances) {
  LawReport r{"functor laws for " + F.name};
  for (const auto& x : instances)
    r.note(slice_mor_equal(F(slice_identity(x)), slice_identity(F(x))),
           "F(id) = id", describe(x));
  for (const auto& x : instances)
    for (const auto& y : instances)
      for (const auto& u : slice_hom_set(x, y))
        for (const auto& z : instances)
          for (const auto& v : slice_hom_set(y, z))
            r.note(slice_mor_equal(F(slice_compose(v, u)),
                                   slice_compose(F(v), F(u))),
                   "F(v∘u) = F(v)∘F(u)", describe(x) + ", " + describe(z));
  return r;
}

/// Deterministic morphism sample: each object paired with itself and
/// with its successor in the instance list.
inline std::vector<std::pair<std::size_t, std::size_t>> adjacent_pairs(
    std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(i, i);
    if (i + 1 < n) out.emplace_back(i, i + 1);
  }
  return out;
}

/// Both triangle identities, plus the unit/counit naturality squares on
/// consecutive instance pairs.
inline LawReport check_triangle_identities(
    const AdjunctionWitness& w, const std::vector<SliceObj>& src_instances,
    const std::vector<SliceObj>& dst_instances,
    std::uint64_t limit = kDefaultLimit) {
  LawReport r{"triangle identities for " + w.name};
  for (const auto& x : src_instances) {
    SliceObj fx = w.left(x);
    r.note(slice_mor_equal(slice_compose(w.counit(fx), w.left(w.unit(x))),
                           slice_identity(fx)),
           "ε_{FX} ∘ F(η_X) = id", describe(x));
  }
  for (const auto& y : dst_instances) {
    SliceObj gy = w.right(y);
    r.note(slice_mor_equal(slice_compose(w.right(w.counit(y)), w.unit(gy)),
                           slice_identity(gy)),
           "G(ε_Y) ∘ η_{GY} = id", describe(y));
  }
  FunctorRepr gf = compose_functors(w.right, w.left);
  for (const auto& [i, j] : adjacent_pairs(src_instances.size())) {
    const SliceObj& x = src_instances[i];
    const SliceObj& y = src_instances[j];
    for (const auto& u : slice_hom_set(x, y, limit))
      r.note(slice_mor_equal(slice_compose(gf(u), w.unit(x)),
                             slice_compose(w.unit(y), u)),
             "unit naturality", describe(x) + " → " + describe(y));
  }
  FunctorRepr fg = compose_functors(w.left, w.right);
  for (const auto& [i, j] : adjacent_pairs(dst_instances.size())) {
    const SliceObj& x = dst_instances[i];
    const SliceObj& y = dst_instances[j];
    for (const auto& v : slice_hom_set(x, y, limit))
      r.note(slice_mor_equal(slice_compose(v, w.counit(x)),
                             slice_compose(w.counit(y), fg(v))),
             "counit naturality", describe(x) + " → " + describe(y));
  }
  return r;
}

/// Hom(FX, Y) ≅ Hom(X, GY): the derived transpose is checked to be a
/// bijection with untranspose as its inverse, cardinalities must match,
/// and naturality in both variables is sampled on consecutive instances.
inline LawReport check_hom_bijection(
    const AdjunctionWitness& w, const std::vector<SliceObj>& src_instances,
    const std::vector<SliceObj>& dst_instances,
    std::uint64_t limit = kDefaultLimit) {
  LawReport r{"hom bijection for " + w.name};
  std::vector<SliceObj> lefts, rights;
  lefts.reserve(src_instances.size());
  for (const auto& x : src_instances) lefts.push_back(w.left(x));
  rights.reserve(dst_instances.size());
  for (const auto& y : dst_instances) rights.push_back(w.right(y));
  for (std::size_t i = 0; i < src_instances.size(); ++i) {
    const SliceObj& x = src_instances[i];
    for (std::size_t j = 0; j < dst_instances.size(); ++j) {
      const SliceObj& y = dst_instances[j];
      std::string inst = describe(x) + " ⊣-pair " + describe(y);
      std::vector<SliceMor> homFxy = slice_hom_set(lefts[i], y, limit);
      std::vector<SliceMor> homxGy = slice_hom_set(x, rights[j], limit);
      r.note(homFxy.size() == homxGy.size(), "|Hom(FX,Y)| = |Hom(X,GY)|",
             inst,
             std::to_string(homFxy.size()) + " vs " +
                 std::to_string(homxGy.size()));
      std::vector<SliceMor> images;
      images.reserve(homFxy.size());
      for (const auto& h : homFxy) {
        SliceMor k = w.transpose(x, h);
        bool member = false;
        for (const auto& cand : homxGy)
          if (slice_mor_equal(cand, k)) member = true;
        r.note(member, "transpose lands in Hom(X,GY)", inst);
        r.note(slice_mor_equal(w.untranspose(y, k), h),
               "untranspose ∘ transpose = id", inst);
        images.push_back(std::move(k));
      }
      bool injective = true;
      for (std::size_t a = 0; a < images.size(); ++a)
        for (std::size_t b = a + 1; b < images.size(); ++b)
          if (slice_mor_equal(images[a], images[b])) injective = false;
      r.note(injective, "transpose is injective", inst);
      for (const auto& k : homxGy)
        r.note(slice_mor_equal(w.transpose(x, w.untranspose(y, k)), k),
               "transpose ∘ untranspose = id", inst);
    }
  }
  if (src_instances.empty() || dst_instances.empty()) return r;
  // naturality in X: transpose(h ∘ F(u)) = transpose(h) ∘ u
  for (const auto& [i, j] : adjacent_pairs(src_instances.size())) {
    const SliceObj& xp = src_instances[i];
    const SliceObj& x = src_instances[j];
    const SliceObj& y = dst_instances[i % dst_instances.size()];
    SliceObj fx = w.left(x);
    for (const auto& u : slice_hom_set(xp, x, limit))
      for (const auto& h : slice_hom_set(fx, y, limit))
        r.note(slice_mor_equal(
                   w.transpose(xp, slice_compose(h, w.left(u))),
                   slice_compose(w.transpose(x, h), u)),
               "naturality in X", describe(xp) + " → " + describe(x));
  }
  // naturality in Y: transpose(v ∘ h) = G(v) ∘ transpose(h)
  for (const auto& [i, j] : adjacent_pairs(dst_instances.size())) {
    const SliceObj& y = dst_instances[i];
    const SliceObj& yp = dst_instances[j];
    const SliceObj& x = src_instances[i % src_instances.size()];
    SliceObj fx = w.left(x);
    for (const auto& v : slice_hom_set(y, yp, limit))
      for (const auto& h : slice_hom_set(fx, y, limit))
        r.note(slice_mor_equal(w.transpose(x, slice_compose(v, h)),
                               slice_compose(w.right(v), w.transpose(x, h))),
               "naturality in Y", describe(y) + " → " + describe(yp));
  }
  return r;
}

/// F₂F₁ ⊣ G₁G₂: the composite transpose factors through the middle
/// category exactly as in the hom-chain Hom(F₂F₁X,Y) ≅ Hom(F₁X,G₂Y)
/// ≅ Hom(X,G₁G₂Y).
inline AdjunctionWitness compose_adjunctions(const AdjunctionWitness& w1,
                                             const AdjunctionWitness& w2) {
  if (!w1.left.dst_base.same_elements(w2.left.src_base))
    throw BaseMismatch("compose_adjunctions: " + w1.name + " lands in C/" +
                       w1.left.dst_base.name() + " but " + w2.name +
                       " starts at C/" + w2.left.src_base.name());
  FunctorRepr f1 = w1.left;
  return AdjunctionWitness{
      "(" + w2.name + ") ∘ (" + w1.name + ")",
      compose_functors(w2.left, w1.left),
      compose_functors(w1.right, w2.right),
      [w1, w2, f1](const SliceObj& x) {
        // η_X = G₁(η₂ at F₁X) ∘ η₁_X
        return slice_compose(w1.right(w2.unit(f1(x))), w1.unit(x));
      },
      [w1, w2](const SliceObj& y) {
        // ε_Y = ε₂_Y ∘ F₂(ε₁ at G₂Y)
        return slice_compose(w2.counit(y), w2.left(w1.counit(w2.right(y))));
      }};
}

/// Certifies the full chain f_! ⊣ f^* ⊣ f_* on the given slice objects,
/// by both presentations.
inline LawReport check_chain(const FinMap& f,
                             const std::vector<SliceObj>& over_dom,
                             const std::vector<SliceObj>& over_cod,
                             std::uint64_t limit = kDefaultLimit) {
  LawReport r{"chain f_! ⊣ f^* ⊣ f_* for " + f.dom().name() + "→" +
              f.cod().name()};
  AdjunctionWitness lower = adj_shriek_star(f);
  AdjunctionWitness upper = adj_star_pi(f, limit);
  r.merge(check_triangle_identities(lower, over_dom, over_cod, limit));
  r.merge(check_hom_bijection(lower, over_dom, over_cod, limit));
  r.merge(check_triangle_identities(upper, over_cod, over_dom, limit));
  r.merge(check_hom_bijection(upper, over_cod, over_dom, limit));
  return r;
}

/// The product-with-q functor (−) ×_A q on C/A.
inline FunctorRepr times_fixed(const SliceObj& q) {
  FinSet base = q.base();
  return FunctorRepr{
      "(−)×_A " + q.total().name(), base, base,
      [q](const SliceObj& x) { return slice_product(x, q).obj; },
      [q](const SliceMor& u) {
        SliceProductResult px = slice_product(u.src, q);
        SliceProductResult py = slice_product(u.dst, q);
        return slice_product_mediator(py, slice_compose(u, px.proj1),
                                      px.proj2);
      }};
}

/// The exponentiation-by-q functor (−)^q on C/A, acting on morphisms by
/// fiberwise postcomposition of graphs.
inline FunctorRepr exp_fixed(const SliceObj& q,
                             std::uint64_t limit = kDefaultLimit) {
  FinSet base = q.base();
  return FunctorRepr{
      "(−)^" + q.total().name(), base, base,
      [q, limit](const SliceObj& p) { return slice_exp(p, q, limit).obj; },
      [q, limit](const SliceMor& u) {
        SliceExpObj src = slice_exp(u.src, q, limit);
        SliceExpObj dst = slice_exp(u.dst, q, limit);
        std::vector<std::string> images;
        images.reserve(src.cells.size());
        for (const auto& cell : src.cells) {
          FinSet pa = preimage(u.src.proj, cell.base_point);
          FinSet pa2 = preimage(u.dst.proj, cell.base_point);
          std::vector<std::string> im;
          im.reserve(pa.size());
          for (const auto& e : pa.elements()) im.push_back(u.mediating(e));
          FinMap restricted(pa, pa2, std::move(im));
          images.push_back(slice_graph_label(
              cell.base_point, compose(restricted, cell.function)));
        }
        return slice_mor(
            FinMap(src.obj.total(), dst.obj.total(), std::move(images)),
            src.obj, dst.obj);
      }};
}

/// (−)×_A q ⊣ (−)^q inside C/A. The unit sends a point m over a to the
/// graph z ↦ ⟨m|z⟩ on the q-fiber; the counit is evaluation.
inline AdjunctionWitness adj_times_exp(const SliceObj& q,
                                       std::uint64_t limit = kDefaultLimit) {
  return AdjunctionWitness{
      "(−)×_A " + q.total().name() + " ⊣ (−)^" + q.total().name(),
      times_fixed(q), exp_fixed(q, limit),
      [q, limit](const SliceObj& x) {
        SliceObj p = slice_product(x, q).obj;
        SliceExpObj e = slice_exp(p, q, limit);
        std::vector<std::string> images;
        images.reserve(x.total().size());
        for (const auto& m : x.total().elements()) {
          const std::string& a = x.proj(m);
          FinSet qa = preimage(q.proj, a);
          FinSet pa = preimage(p.proj, a);
          std::vector<std::string> im;
          im.reserve(qa.size());
          for (const auto& z : qa.elements()) im.push_back(pair_label(m, z));
          images.push_back(slice_graph_label(a, FinMap(qa, pa, im)));
        }
        return slice_mor(FinMap(x.total(), e.obj.total(), std::move(images)),
                         x, e.obj);
      },
      [q, limit](const SliceObj& p) { return slice_exp(p, q, limit).ev; }};
}

/// (−)×_A C is literally the composite f_! f^* for f = proj of C over A:
/// the carriers coincide on the nose, and the exponential (−)^C is then
/// certified right adjoint to it.
inline LawReport slice_exp_as_composite(const FinMap& f,
                                        std::uint64_t limit = kDefaultLimit) {
  LawReport r{"(−)×_A C = f_! f^* for " + f.dom().name() + "→" +
              f.cod().name()};
  SliceObj q{f};
  FunctorRepr composite =
      compose_functors(postcompose_functor(f), base_change(f));
  FunctorRepr times_q = times_fixed(q);
  std::vector<SliceObj> instances = all_slice_objects(f.cod(), 2, "m", limit);
  for (const auto& x : instances) {
    SliceObj lhs = times_q(x);
    SliceObj rhs = composite(x);
    r.note(lhs.total().same_elements(rhs.total()) &&
               map_equal(lhs.proj, rhs.proj),
           "(−)×_A C agrees with f_!f^* on objects", describe(x));
  }
  for (std::size_t i = 0; i + 1 < instances.size(); ++i)
    for (const auto& u : slice_hom_set(instances[i], instances[i + 1]))
      r.note(slice_mor_equal(times_q(u), composite(u)),
             "(−)×_A C agrees with f_!f^* on morphisms",
             describe(instances[i]) + " → " + describe(instances[i + 1]));
  AdjunctionWitness w = adj_times_exp(q, limit);
  r.merge(check_triangle_identities(w, instances, instances));
  r.merge(check_hom_bijection(w, instances, instances, limit));
  return r;
}

/// Δ ⊣ ×, checked directly over plain finite sets: pairing is a natural
/// bijection Hom(X,Y) × Hom(X,Z) ≅ Hom(X, Y×Z), exhaustively at |X|,
/// |Y|, |Z| ≤ 2.
inline LawReport diagonal_product_adjunction(
    std::uint64_t limit = kDefaultLimit) {
  LawReport r{"Δ ⊣ ×"};
  for (std::size_t xn = 0; xn <= 2; ++xn)
    for (std::size_t yn = 0; yn <= 2; ++yn)
      for (std::size_t zn = 0; zn <= 2; ++zn) {
        FinSet x = canonical_total(xn, "x"), y = canonical_total(yn, "y"),
               z = canonical_total(zn, "z");
        std::string inst = "|X|=" + std::to_string(xn) +
                           ",|Y|=" + std::to_string(yn) +
                           ",|Z|=" + std::to_string(zn);
        ProductResult yz = product(y, z);
        std::vector<FinMap> homy = hom_set(x, y, limit),
                            homz = hom_set(x, z, limit),
                            homp = hom_set(x, yz.carrier, limit);
        r.note(homy.size() * homz.size() == homp.size(),
               "|Hom(ΔX,(Y,Z))| = |Hom(X,Y×Z)|", inst);
        std::vector<FinMap> images;
        for (const auto& u : homy)
          for (const auto& v : homz) {
            FinMap w = pairing(u, v, yz);
            r.note(map_equal(compose(yz.proj1, w), u) &&
                       map_equal(compose(yz.proj2, w), v),
                   "projections recover the pair", inst);
            images.push_back(std::move(w));
          }
        bool injective = true;
        for (std::size_t a = 0; a < images.size(); ++a)
          for (std::size_t b = a + 1; b < images.size(); ++b)
            if (map_equal(images[a], images[b])) injective = false;
        r.note(injective, "pairing is injective", inst);
        // naturality in X: ⟨u∘w, v∘w⟩ = ⟨u,v⟩ ∘ w
        FinSet x2 = canonical_total(1, "w");
        for (const auto& w : hom_set(x2, x))
          for (const auto& u : homy)
            for (const auto& v : homz)
              r.note(map_equal(pairing(compose(u, w), compose(v, w), yz),
                               compose(pairing(u, v, yz), w)),
                     "naturality in X", inst);
        // naturality in (Y,Z): (p×q) ∘ ⟨u,v⟩ = ⟨p∘u, q∘v⟩
        FinSet y2 = canonical_total(1, "p"), z2 = canonical_total(1, "q");
        ProductResult y2z2 = product(y2, z2);
        for (const auto& p : hom_set(y, y2))
          for (const auto& qq : hom_set(z, z2)) {
            FinMap pxq = pairing(compose(p, yz.proj1),
                                 compose(qq, yz.proj2), y2z2);
            for (const auto& u : homy)
              for (const auto& v : homz)
                r.note(map_equal(compose(pxq, pairing(u, v, yz)),
                                 pairing(compose(p, u), compose(qq, v),
                                         y2z2)),
                       "naturality in (Y,Z)", inst);
          }
      }
  return r;
}

}  // namespace lccc

#endif  // LCCC_ADJUNCTION_HPP
