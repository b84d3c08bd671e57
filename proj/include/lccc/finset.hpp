#ifndef LCCC_FINSET_HPP
#define LCCC_FINSET_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lccc/errors.hpp"

namespace lccc {

/// A named finite set: an ordered list of distinct element labels.
/// Element order is part of the value (it fixes enumeration order) but
/// never affects any mathematical result.
class FinSet {
public:
  FinSet() : name_("(unnamed)") {}

  FinSet(std::string name, std::vector<std::string> elements)
      : name_(std::move(name)), elems_(std::move(elements)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i].empty())
        throw InvalidObject("set '" + name_ + "': empty element label");
      auto [it, fresh] = index_.emplace(elems_[i], i);
      if (!fresh)
        throw InvalidObject("set '" + name_ + "': duplicate element '" +
                            elems_[i] + "'");
    }
  }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

  bool contains(const std::string& label) const {
    return index_.count(label) != 0;
  }

  std::size_t index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
      throw UnknownElement("'" + label + "' is not an element of " + name_);
    return it->second;
  }

  /// Extensional equality: same elements, order and name ignored.
  bool same_elements(const FinSet& other) const {
    if (size() != other.size()) return false;
    for (const auto& e : elems_)
      if (!other.contains(e)) return false;
    return true;
  }

private:
  std::string name_;
  std::vector<std::string> elems_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Canonical label for the pair (x, y); used by products and pullbacks.
inline std::string pair_label(const std::string& x, const std::string& y) {
  return "⟨" + x + "|" + y + "⟩";  // ⟨x|y⟩
}

inline std::string inl_label(const std::string& x) {
  return "inl⟨" + x + "⟩";
}
inline std::string inr_label(const std::string& y) {
  return "inr⟨" + y + "⟩";
}

/// A total function between two finite sets, given by an explicit table.
/// The codomain is part of the morphism's identity.
class FinMap {
public:
  FinMap() = default;

  /// table[i] is the image of dom.elements()[i].
  FinMap(FinSet dom, FinSet cod, std::vector<std::string> images)
      : dom_(std::move(dom)), cod_(std::move(cod)) {
    if (images.size() != dom_.size())
      throw InvalidObject("map " + dom_.name() + " -> " + cod_.name() +
                          ": table size does not match domain");
    table_.reserve(images.size());
    for (const auto& v : images) table_.push_back(cod_.index_of(v));
  }

  static FinMap from_table(FinSet dom, FinSet cod,
                           const std::map<std::string, std::string>& table) {
    std::vector<std::string> images;
    images.reserve(dom.size());
    for (const auto& x : dom.elements()) {
      auto it = table.find(x);
      if (it == table.end())
        throw InvalidObject("map " + dom.name() + " -> " + cod.name() +
                            ": no image for '" + x + "'");
      images.push_back(it->second);
    }
    if (table.size() != dom.size())
      for (const auto& [k, v] : table)
        if (!dom.contains(k))
          throw InvalidObject("map " + dom.name() + " -> " + cod.name() +
                              ": spurious entry for '" + k + "'");
    return FinMap(std::move(dom), std::move(cod), std::move(images));
  }

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }

  const std::string& apply(const std::string& x) const {
    return cod_.elements()[table_[dom_.index_of(x)]];
  }
  const std::string& operator()(const std::string& x) const { return apply(x); }

  std::size_t apply_index(std::size_t i) const { return table_[i]; }

private:
  FinSet dom_, cod_;
  std::vector<std::size_t> table_;
};

/// g ∘ f, in function order: (g ∘ f)(x) = g(f(x)).
inline FinMap compose(const FinMap& g, const FinMap& f) {
  if (!f.cod().same_elements(g.dom()))
    throw DomainMismatch("compose: cod " + f.cod().name() +
                         " does not match dom " + g.dom().name());
  std::vector<std::string> images;
  images.reserve(f.dom().size());
  for (const auto& x : f.dom().elements()) images.push_back(g(f(x)));
  return FinMap(f.dom(), g.cod(), std::move(images));
}

inline FinMap identity(const FinSet& x) {
  return FinMap(x, x, x.elements());
}

/// Morphism equality: domains and codomains agree as element sets and the
/// tables agree pointwise.
inline bool map_equal(const FinMap& f, const FinMap& g) {
  if (!f.dom().same_elements(g.dom())) return false;
  if (!f.cod().same_elements(g.cod())) return false;
  for (const auto& x : f.dom().elements())
    if (f(x) != g(x)) return false;
  return true;
}

inline constexpr std::uint64_t kDefaultLimit = 10000;

/// |Y|^|X| with an overflow-safe cap; anything above `cap` saturates to
/// cap + 1 so callers can still compare against their limit.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp,
                                 std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

/// All total functions X -> Y, each exactly once, in mixed-radix order
/// over X's stored element order.
inline std::vector<FinMap> hom_set(const FinSet& x, const FinSet& y,
                                   std::uint64_t limit = kDefaultLimit) {
  const std::uint64_t total = checked_pow(y.size(), x.size(), limit);
  if (total > limit)
    throw EnumerationTooLarge("hom_set(" + x.name() + ", " + y.name() +
                                  ") needs " + std::to_string(y.size()) + "^" +
                                  std::to_string(x.size()) + " maps",
                              limit);
  std::vector<FinMap> result;
  if (x.empty()) {
    result.emplace_back(x, y, std::vector<std::string>{});
    return result;
  }
  if (y.empty()) return result;  // no map from a nonempty set into ∅
  result.reserve(static_cast<std::size_t>(total));
  std::vector<std::size_t> digits(x.size(), 0);
  for (;;) {
    std::vector<std::string> images;
    images.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      images.push_back(y.elements()[digits[i]]);
    result.emplace_back(x, y, std::move(images));
    // increment, least significant digit last
    std::size_t i = x.size();
    while (i > 0) {
      --i;
      if (++digits[i] < y.size()) break;
      digits[i] = 0;
      if (i == 0) return result;
    }
  }
}

inline FinSet terminal() {
  return FinSet("1", {"*"});
}

inline FinMap unique_to_terminal(const FinSet& x) {
  return FinMap(x, terminal(), std::vector<std::string>(x.size(), "*"));
}

struct ProductResult {
  FinSet carrier;
  FinMap proj1;
  FinMap proj2;
};

/// Cartesian product with canonical pair labels ⟨x|y⟩.
inline ProductResult product(const FinSet& x, const FinSet& y) {
  std::vector<std::string> elems, im1, im2;
  elems.reserve(x.size() * y.size());
  for (const auto& a : x.elements())
    for (const auto& b : y.elements()) {
      elems.push_back(pair_label(a, b));
      im1.push_back(a);
      im2.push_back(b);
    }
  FinSet carrier("(" + x.name() + "×" + y.name() + ")", std::move(elems));
  return {carrier, FinMap(carrier, x, std::move(im1)),
          FinMap(carrier, y, std::move(im2))};
}

/// The unique map ⟨f,g⟩ with π1∘⟨f,g⟩ = f and π2∘⟨f,g⟩ = g.
inline FinMap pairing(const FinMap& f, const FinMap& g,
                      const ProductResult& prod) {
  if (!f.dom().same_elements(g.dom()))
    throw DomainMismatch("pairing: the two maps have different domains");
  std::vector<std::string> images;
  images.reserve(f.dom().size());
  for (const auto& s : f.dom().elements())
    images.push_back(pair_label(f(s), g(s)));
  return FinMap(f.dom(), prod.carrier, std::move(images));
}

inline FinMap pairing(const FinMap& f, const FinMap& g) {
  return pairing(f, g, product(f.cod(), g.cod()));
}

struct CoproductResult {
  FinSet carrier;
  FinMap inj1;
  FinMap inj2;
};

inline CoproductResult coproduct(const FinSet& x, const FinSet& y) {
  std::vector<std::string> elems, im1, im2;
  for (const auto& a : x.elements()) {
    elems.push_back(inl_label(a));
    im1.push_back(elems.back());
  }
  for (const auto& b : y.elements()) {
    elems.push_back(inr_label(b));
    im2.push_back(elems.back());
  }
  FinSet carrier("(" + x.name() + "+" + y.name() + ")", std::move(elems));
  return {carrier, FinMap(x, carrier, std::move(im1)),
          FinMap(y, carrier, std::move(im2))};
}

/// The unique map [f,g] with [f,g]∘ι1 = f and [f,g]∘ι2 = g.
inline FinMap copairing(const FinMap& f, const FinMap& g,
                        const CoproductResult& coprod) {
  if (!f.cod().same_elements(g.cod()))
    throw CodomainMismatch("copairing: the two maps have different codomains");
  std::vector<std::string> images;
  images.reserve(coprod.carrier.size());
  for (const auto& x : f.dom().elements()) images.push_back(f(x));
  for (const auto& y : g.dom().elements()) images.push_back(g(y));
  return FinMap(coprod.carrier, f.cod(), std::move(images));
}

inline FinMap copairing(const FinMap& f, const FinMap& g) {
  return copairing(f, g, coproduct(f.dom(), g.dom()));
}

/// The fiber f⁻¹(a) as a sub-object of dom f.
inline FinSet preimage(const FinMap& f, const std::string& a) {
  if (!f.cod().contains(a))
    throw UnknownElement("preimage: '" + a + "' is not in the codomain " +
                         f.cod().name());
  std::vector<std::string> elems;
  for (const auto& b : f.dom().elements())
    if (f(b) == a) elems.push_back(b);
  return FinSet("fiber(" + f.dom().name() + "→" + f.cod().name() + "," +
                    a + ")",
                std::move(elems));
}

/// All fibers, keyed in codomain order. They partition the domain.
inline std::vector<std::pair<std::string, FinSet>> fiber_decomposition(
    const FinMap& f) {
  std::vector<std::pair<std::string, FinSet>> fibers;
  fibers.reserve(f.cod().size());
  for (const auto& a : f.cod().elements())
    fibers.emplace_back(a, preimage(f, a));
  return fibers;
}

}  // namespace lccc

#endif  // LCCC_FINSET_HPP
