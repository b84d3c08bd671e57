#ifndef LCCC_EXPONENTIALS_HPP
#define LCCC_EXPONENTIALS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lccc/finset.hpp"
#include "lccc/limits.hpp"
#include "lccc/slice.hpp"

namespace lccc {

/// Canonical label for the graph of g : X -> Y, in domain order.
inline std::string graph_label(const FinMap& g) {
  std::string s = "fn{";
  bool first = true;
  for (const auto& x : g.dom().elements()) {
    if (!first) s += ";";
    s += x + "↦" + g(x);
    first = false;
  }
  return s + "}";
}

/// The exponential object Y^X: a carrier of function-graph labels plus
/// the evaluation map ev : Y^X × X -> Y.
struct ExpObj {
  FinSet x;
  FinSet y;
  FinSet carrier;
  ProductResult carrier_times_x;  // domain of ev
  FinMap ev;
  std::vector<FinMap> functions;  // decoded, aligned with carrier order

  const FinMap& decode(const std::string& label) const {
    return functions[carrier.index_of(label)];
  }
};

inline ExpObj exp_obj(const FinSet& x, const FinSet& y,
                      std::uint64_t limit = kDefaultLimit) {
  std::vector<FinMap> fns = hom_set(x, y, limit);
  std::vector<std::string> labels;
  labels.reserve(fns.size());
  for (const auto& g : fns) labels.push_back(graph_label(g));
  FinSet carrier(y.name() + "^" + x.name(), std::move(labels));
  ProductResult prod = product(carrier, x);
  std::vector<std::string> images;
  images.reserve(prod.carrier.size());
  for (const auto& pair : prod.carrier.elements()) {
    const FinMap& g = fns[carrier.index_of(prod.proj1(pair))];
    images.push_back(g(prod.proj2(pair)));
  }
  FinMap ev(prod.carrier, y, std::move(images));
  return ExpObj{x, y, carrier, std::move(prod), std::move(ev),
                std::move(fns)};
}

/// Lambda abstraction: the unique v : S -> Y^X with ev ∘ (v × id) = u.
inline FinMap curry(const FinMap& u, const FinSet& s, const ExpObj& e) {
  ProductResult sx = product(s, e.x);
  if (!u.dom().same_elements(sx.carrier) || !u.cod().same_elements(e.y))
    throw ShapeMismatch("curry: expected a map " + s.name() + "×" +
                        e.x.name() + " → " + e.y.name());
  std::vector<std::string> images;
  images.reserve(s.size());
  for (const auto& sv : s.elements()) {
    std::vector<std::string> section;
    section.reserve(e.x.size());
    for (const auto& xv : e.x.elements())
      section.push_back(u(pair_label(sv, xv)));
    images.push_back(graph_label(FinMap(e.x, e.y, section)));
  }
  return FinMap(s, e.carrier, std::move(images));
}

/// ev ∘ (v × id) : S × X -> Y, the inverse of curry.
inline FinMap uncurry(const FinMap& v, const ExpObj& e) {
  if (!v.cod().same_elements(e.carrier))
    throw ShapeMismatch("uncurry: codomain is not the exponential carrier " +
                        e.carrier.name());
  ProductResult sx = product(v.dom(), e.x);
  std::vector<std::string> images;
  images.reserve(sx.carrier.size());
  for (const auto& pair : sx.carrier.elements())
    images.push_back(e.decode(v(sx.proj1(pair)))(sx.proj2(pair)));
  return FinMap(sx.carrier, e.y, std::move(images));
}

/// (-)^X on morphisms: postcomposition of graphs, Y^X -> Z^X.
inline FinMap exp_fmap(const FinMap& f, const FinSet& x,
                       std::uint64_t limit = kDefaultLimit) {
  ExpObj src = exp_obj(x, f.dom(), limit);
  ExpObj dst = exp_obj(x, f.cod(), limit);
  std::vector<std::string> images;
  images.reserve(src.carrier.size());
  for (const auto& g : src.functions)
    images.push_back(graph_label(compose(f, g)));
  return FinMap(src.carrier, dst.carrier, std::move(images));
}

/// 𝔦𝔡 : 1 -> X^X, picking out the identity graph.
inline FinMap identity_point(const FinSet& x,
                             std::uint64_t limit = kDefaultLimit) {
  ExpObj e = exp_obj(x, x, limit);
  return FinMap(terminal(), e.carrier, {graph_label(identity(x))});
}

struct RightInverseObject {
  FinSet carrier;                 // pullback of 1 -> X^X <- Y^X
  std::vector<FinMap> functions;  // the right inverses g with f∘g = id
};

/// Right inverses of f : Y -> X, as the pullback of 𝔦𝔡 along (f ∘ -).
inline RightInverseObject right_inverse_object(
    const FinMap& f, std::uint64_t limit = kDefaultLimit) {
  FinMap point = identity_point(f.cod(), limit);
  FinMap fm = exp_fmap(f, f.cod(), limit);
  auto pb = pullback(Cospan(point, fm));
  ExpObj yx = exp_obj(f.cod(), f.dom(), limit);
  std::vector<FinMap> functions;
  functions.reserve(pb.carrier.size());
  for (const auto& e : pb.carrier.elements())
    functions.push_back(yx.decode(pb.q(e)));
  return {pb.carrier, std::move(functions)};
}

/// Canonical label for a fiberwise function graph sitting over base
/// point `a`; the base point keeps labels distinct across fibers.
inline std::string slice_graph_label(const std::string& a, const FinMap& g) {
  std::string s = "fn(" + a + "){";
  bool first = true;
  for (const auto& x : g.dom().elements()) {
    if (!first) s += ";";
    s += x + "↦" + g(x);
    first = false;
  }
  return s + "}";
}

/// The exponential object p^q in C/A, built fiberwise: the fiber over a
/// is (fiber of p over a)^(fiber of q over a).
struct SliceExpObj {
  SliceObj obj;
  SliceProductResult obj_times_q;  // domain of ev, the product p^q ×_A q
  SliceMor ev;                     // p^q ×_A q -> p

  struct Cell {
    std::string base_point;
    FinMap function;  // q-fiber over base_point -> p-fiber over base_point
  };
  std::vector<Cell> cells;  // aligned with obj.total() order

  const Cell& decode(const std::string& label) const {
    return cells[obj.total().index_of(label)];
  }
};

inline SliceExpObj slice_exp(const SliceObj& p, const SliceObj& q,
                             std::uint64_t limit = kDefaultLimit) {
  if (!p.base().same_elements(q.base()))
    throw BaseMismatch("slice_exp: different bases");
  std::vector<std::string> labels, proj_images;
  std::vector<SliceExpObj::Cell> cells;
  for (const auto& a : p.base().elements()) {
    FinSet pa = preimage(p.proj, a), qa = preimage(q.proj, a);
    for (const auto& g : hom_set(qa, pa, limit)) {
      labels.push_back(slice_graph_label(a, g));
      proj_images.push_back(a);
      cells.push_back({a, g});
    }
  }
  FinSet total("(" + p.total().name() + "^" + q.total().name() + " over " +
                   p.base().name() + ")",
               std::move(labels));
  SliceObj obj{FinMap(total, p.base(), std::move(proj_images))};
  SliceProductResult prod = slice_product(obj, q);
  std::vector<std::string> ev_images;
  ev_images.reserve(prod.obj.total().size());
  for (const auto& pair : prod.obj.total().elements()) {
    const auto& cell = cells[total.index_of(prod.proj1.mediating(pair))];
    ev_images.push_back(cell.function(prod.proj2.mediating(pair)));
  }
  SliceMor ev = slice_mor(FinMap(prod.obj.total(), p.total(), ev_images),
                          prod.obj, p);
  return SliceExpObj{obj, std::move(prod), std::move(ev), std::move(cells)};
}

/// Slice-level lambda abstraction: for u : s ×_A q -> p, the unique
/// v : s -> p^q with ev ∘ (v ×_A id) = u.
inline SliceMor slice_curry(const SliceMor& u, const SliceObj& s,
                            const SliceExpObj& e) {
  const SliceObj& q = e.obj_times_q.proj2.dst;
  SliceProductResult sq = slice_product(s, q);
  if (!u.src.total().same_elements(sq.obj.total()))
    throw ShapeMismatch("slice_curry: domain is not s ×_A q");
  std::vector<std::string> images;
  images.reserve(s.total().size());
  for (const auto& m : s.total().elements()) {
    const std::string& a = s.proj(m);
    FinSet qa = preimage(q.proj, a);
    std::vector<std::string> section;
    section.reserve(qa.size());
    for (const auto& z : qa.elements())
      section.push_back(u.mediating(pair_label(m, z)));
    images.push_back(slice_graph_label(
        a, FinMap(qa, preimage(u.dst.proj, a), section)));
  }
  return slice_mor(FinMap(s.total(), e.obj.total(), std::move(images)), s,
                   e.obj);
}

}  // namespace lccc

#endif  // LCCC_EXPONENTIALS_HPP
