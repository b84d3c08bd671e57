#ifndef LCCC_INSTANCES_HPP
#define LCCC_INSTANCES_HPP

#include <random>
#include <string>
#include <vector>

#include "lccc/finset.hpp"
#include "lccc/slice.hpp"

namespace lccc {

/// Canonical totals T0, T1, ... with elements t1..tk. The label stem can
/// be varied so objects over different bases never share element labels.
inline FinSet canonical_total(std::size_t k, const std::string& stem = "t") {
  std::vector<std::string> elems;
  for (std::size_t i = 1; i <= k; ++i)
    elems.push_back(stem + std::to_string(i));
  return FinSet("T" + std::to_string(k) + stem, std::move(elems));
}

/// Every slice object over `base` whose total has at most `max_total`
/// elements, up to relabeling: canonical totals with every projection.
inline std::vector<SliceObj> all_slice_objects(
    const FinSet& base, std::size_t max_total, const std::string& stem = "t",
    std::uint64_t limit = kDefaultLimit) {
  std::vector<SliceObj> out;
  for (std::size_t k = 0; k <= max_total; ++k) {
    FinSet total = canonical_total(k, stem);
    for (const auto& proj : hom_set(total, base, limit))
      out.push_back(SliceObj{proj});
  }
  return out;
}

/// Seeded random map between freshly named sets of bounded size; the
/// codomain is nonempty so a total map always exists.
inline FinMap random_fin_map(std::mt19937& rng, std::size_t max_dom,
                             std::size_t max_cod,
                             const std::string& dom_stem = "b",
                             const std::string& cod_stem = "a") {
  std::uniform_int_distribution<std::size_t> dsize(0, max_dom);
  std::uniform_int_distribution<std::size_t> csize(1, max_cod);
  std::size_t dn = dsize(rng), cn = csize(rng);
  std::vector<std::string> de, ce;
  for (std::size_t i = 1; i <= dn; ++i)
    de.push_back(dom_stem + std::to_string(i));
  for (std::size_t i = 1; i <= cn; ++i)
    ce.push_back(cod_stem + std::to_string(i));
  FinSet dom(dom_stem + "_dom", de), cod(cod_stem + "_cod", ce);
  std::vector<std::string> images;
  if (dn > 0) {
    std::uniform_int_distribution<std::size_t> pick(0, cn - 1);
    for (std::size_t i = 0; i < dn; ++i)
      images.push_back(ce[pick(rng)]);
  }
  return FinMap(dom, cod, images);
}

/// Seeded random projection into a fixed base.
inline SliceObj random_slice_obj(std::mt19937& rng, const FinSet& base,
                                 std::size_t max_total,
                                 const std::string& stem = "t") {
  std::uniform_int_distribution<std::size_t> tsize(0, max_total);
  std::size_t k = base.empty() ? 0 : tsize(rng);
  FinSet total = canonical_total(k, stem);
  std::vector<std::string> images;
  if (k > 0) {
    std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
    for (std::size_t i = 0; i < k; ++i)
      images.push_back(base.elements()[pick(rng)]);
  }
  return SliceObj{FinMap(total, base, images)};
}

}  // namespace lccc

#endif  // LCCC_INSTANCES_HPP
