#include <catch2/catch_amalgamated.hpp>

#include "lccc/adjunction.hpp"
#include "lccc/instances.hpp"

using namespace lccc;

namespace {

struct Running {
  FinSet a{"A", {"a1", "a2"}};
  FinSet b{"B", {"b1", "b2", "b3"}};
  FinMap f{b, a, {"a1", "a1", "a2"}};
};

std::string failure_digest(const LawReport& r) {
  std::string s;
  for (const auto& fl : r.failures)
    s += fl.law + " @ " + fl.instance + "\n";
  return s;
}

}  // namespace

TEST_CASE("identity adjunction certifies trivially") {
  FinSet a("A", {"a1", "a2"});
  AdjunctionWitness w = identity_adjunction(a);
  auto objs = all_slice_objects(a, 2);
  LawReport tri = check_triangle_identities(w, objs, objs);
  INFO(failure_digest(tri));
  CHECK(tri.pass());
  CHECK(tri.checked > 0);
  LawReport hom = check_hom_bijection(w, objs, objs);
  INFO(failure_digest(hom));
  CHECK(hom.pass());

  // transpose is the identity on hom-sets
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& h : slice_hom_set(x, y))
        CHECK(slice_mor_equal(w.transpose(x, h), h));
}

TEST_CASE("f_! ⊣ f^* certifies on the running example") {
  Running r;
  AdjunctionWitness w = adj_shriek_star(r.f);
  auto over_b = all_slice_objects(r.b, 2, "m");
  auto over_a = all_slice_objects(r.a, 2, "n");
  LawReport tri = check_triangle_identities(w, over_b, over_a);
  INFO(failure_digest(tri));
  CHECK(tri.pass());
  LawReport hom = check_hom_bijection(w, over_b, over_a);
  INFO(failure_digest(hom));
  CHECK(hom.pass());
  // the two presentations agree: both pass or both fail
  CHECK(tri.pass() == hom.pass());
}

TEST_CASE("f^* ⊣ f_* certifies on the running example") {
  Running r;
  AdjunctionWitness w = adj_star_pi(r.f);
  auto over_a = all_slice_objects(r.a, 2, "n");
  auto over_b = all_slice_objects(r.b, 2, "m");
  LawReport tri = check_triangle_identities(w, over_a, over_b);
  INFO(failure_digest(tri));
  CHECK(tri.pass());
  LawReport hom = check_hom_bijection(w, over_a, over_b);
  INFO(failure_digest(hom));
  CHECK(hom.pass());
  CHECK(tri.pass() == hom.pass());
}

TEST_CASE("functor laws pass for the three chain functors") {
  Running r;
  auto over_b = all_slice_objects(r.b, 2, "m");
  auto over_a = all_slice_objects(r.a, 2, "n");
  CHECK(check_functor_laws(dependent_sum(r.f), over_b).pass());
  CHECK(check_functor_laws(base_change(r.f), over_a).pass());
  CHECK(check_functor_laws(f_star(r.f), over_b).pass());
}

TEST_CASE("corrupted functor fails the law check") {
  Running r;
  FunctorRepr broken = dependent_sum(r.f);
  // precompose every image morphism with a fiber transposition
  broken.on_morphism = [inner = broken](const SliceMor& u) {
    SliceMor v = inner(u);
    return slice_compose(v, fiber_transposition(v.src));
  };
  LawReport rep = check_functor_laws(broken, all_slice_objects(r.b, 2, "m"));
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.failures[0].instance.empty());
}

TEST_CASE("corrupted unit fails the triangle identities") {
  Running r;
  AdjunctionWitness w = corrupt_unit(adj_shriek_star(r.f));
  // include an object with a two-element fiber so the transposition bites
  auto over_b = all_slice_objects(r.b, 2, "m");
  auto over_a = all_slice_objects(r.a, 2, "n");
  LawReport tri = check_triangle_identities(w, over_b, over_a);
  CHECK_FALSE(tri.pass());
}

TEST_CASE("corrupted counit fails the hom bijection") {
  Running r;
  AdjunctionWitness w = corrupt_counit(adj_shriek_star(r.f));
  auto over_b = all_slice_objects(r.b, 2, "m");
  auto over_a = all_slice_objects(r.a, 2, "n");
  LawReport hom = check_hom_bijection(w, over_b, over_a);
  CHECK_FALSE(hom.pass());
  LawReport tri = check_triangle_identities(w, over_b, over_a);
  CHECK_FALSE(tri.pass());
}

TEST_CASE("corruption is detected for every shipped witness") {
  Running r;
  auto over_b = all_slice_objects(r.b, 2, "m");
  auto over_a = all_slice_objects(r.a, 2, "n");
  std::vector<AdjunctionWitness> shipped = {adj_shriek_star(r.f),
                                            adj_star_pi(r.f)};
  for (const auto& w : shipped) {
    const auto& src = w.left.src_base.same_elements(r.b) ? over_b : over_a;
    const auto& dst = w.left.dst_base.same_elements(r.b) ? over_b : over_a;
    CHECK_FALSE(check_triangle_identities(corrupt_unit(w), src, dst).pass());
    LawReport hom = check_hom_bijection(corrupt_counit(w), src, dst);
    LawReport tri = check_triangle_identities(corrupt_counit(w), src, dst);
    CHECK_FALSE((hom.pass() && tri.pass()));
  }
}

TEST_CASE("check_chain consolidates both adjunctions") {
  Running r;
  auto over_b = all_slice_objects(r.b, 2, "m");
  auto over_a = all_slice_objects(r.a, 2, "n");

  SECTION("running example") {
    LawReport rep = check_chain(r.f, over_b, over_a);
    INFO(failure_digest(rep));
    CHECK(rep.pass());
    CHECK(rep.checked > 100);
  }

  SECTION("identity") {
    LawReport rep = check_chain(identity(r.a), over_a, over_a);
    CHECK(rep.pass());
  }

  SECTION("unique map to the terminal") {
    FinSet b("B", {"b1", "b2"});
    auto over_bb = all_slice_objects(b, 2, "m");
    auto over_1 = all_slice_objects(terminal(), 2, "n");
    LawReport rep = check_chain(unique_to_terminal(b), over_bb, over_1);
    INFO(failure_digest(rep));
    CHECK(rep.pass());
  }
}

TEST_CASE("composition of adjunctions") {
  FinSet a("A", {"a1", "a2"}), b("B", {"b1", "b2"}), c("C", {"c1", "c2",
                                                             "c3"});

  SECTION("three fixed composable pairs, left functor = (g∘f)_!") {
    std::vector<std::pair<FinMap, FinMap>> pairs = {
        {FinMap(c, b, {"b1", "b1", "b2"}), FinMap(b, a, {"a1", "a2"})},
        {FinMap(c, b, {"b2", "b2", "b2"}), FinMap(b, a, {"a1", "a1"})},
        {FinMap(b, b, {"b2", "b1"}), FinMap(b, a, {"a2", "a2"})}};
    for (const auto& [f, g] : pairs) {
      AdjunctionWitness w =
          compose_adjunctions(adj_shriek_star(f), adj_shriek_star(g));
      auto src = all_slice_objects(f.dom(), 2, "m");
      auto dst = all_slice_objects(g.cod(), 2, "n");
      LawReport hom = check_hom_bijection(w, src, dst);
      INFO(failure_digest(hom));
      CHECK(hom.pass());
      CHECK(check_triangle_identities(w, src, dst).pass());
      // the composite left functor is (g∘f)_! on the nose
      FunctorRepr direct = dependent_sum(compose(g, f));
      for (const auto& x : src) {
        CHECK(w.left(x).total().same_elements(direct(x).total()));
        CHECK(map_equal(w.left(x).proj, direct(x).proj));
      }
    }
  }

  SECTION("composing with the identity adjunction changes nothing") {
    FinMap f(b, a, {"a1", "a2"});
    AdjunctionWitness w =
        compose_adjunctions(identity_adjunction(b), adj_shriek_star(f));
    auto src = all_slice_objects(b, 2, "m");
    auto dst = all_slice_objects(a, 2, "n");
    CHECK(check_hom_bijection(w, src, dst).pass());
    CHECK(check_triangle_identities(w, src, dst).pass());
  }

  SECTION("f_!⊣f^* composed with f^*⊣f_* gives f^*f_! ⊣ f^*f_*") {
    FinMap f(b, a, {"a1", "a1"});
    AdjunctionWitness w =
        compose_adjunctions(adj_shriek_star(f), adj_star_pi(f));
    auto objs = all_slice_objects(b, 2, "m");
    LawReport hom = check_hom_bijection(w, objs, objs);
    INFO(failure_digest(hom));
    CHECK(hom.pass());
  }

  SECTION("non-composable pair throws") {
    FinMap f(b, a, {"a1", "a2"});
    CHECK_THROWS_AS(
        compose_adjunctions(adj_shriek_star(f), adj_shriek_star(f)),
        BaseMismatch);
  }
}

TEST_CASE("(−)×_A C is f_!f^* and the slice exponential is its right "
          "adjoint") {
  Running r;
  FinMap f(FinSet("C", {"c1", "c2", "c3"}), r.a, {"a1", "a1", "a2"});
  LawReport rep = slice_exp_as_composite(f);
  INFO(failure_digest(rep));
  CHECK(rep.pass());

  SECTION("over the terminal base this is plain currying") {
    FinSet y("Y", {"y1", "y2"});
    LawReport rep1 = slice_exp_as_composite(unique_to_terminal(y));
    INFO(failure_digest(rep1));
    CHECK(rep1.pass());
  }
}

TEST_CASE("Δ ⊣ × certifies exhaustively at small sizes") {
  LawReport rep = diagonal_product_adjunction();
  INFO(failure_digest(rep));
  CHECK(rep.pass());
  CHECK(rep.checked > 100);
}

TEST_CASE("currying adjunction in C/1 via the slice machinery") {
  // (−)×Y ⊣ (−)^Y with |X|,|Y|,|Z| ≤ 2, phrased over the terminal base
  for (std::size_t yn = 0; yn <= 2; ++yn) {
    SliceObj q{unique_to_terminal(canonical_total(yn, "y"))};
    AdjunctionWitness w = adj_times_exp(q);
    auto objs = all_slice_objects(terminal(), 2, "x");
    LawReport hom = check_hom_bijection(w, objs, objs);
    INFO(failure_digest(hom));
    CHECK(hom.pass());
    CHECK(check_triangle_identities(w, objs, objs).pass());
  }
}
