#include <catch2/catch_amalgamated.hpp>

#include "lccc/dtt.hpp"

using namespace lccc;

namespace {

const char* kRunning = R"(
# running example: f has fibers {b1,b2} and {b3}; p has fibers 2,1,0
set A = {a1,a2}
set B = {b1,b2,b3}
set E = {e1,e2,e3}
map f : B -> A = {b1 -> a1, b2 -> a1, b3 -> a2}
map p : E -> B = {e1 -> b1, e2 -> b1, e3 -> b2}
)";

std::vector<std::size_t> fiber_sizes(const EvalResult& r) {
  std::vector<std::size_t> out;
  for (const auto& [a, elems] : r.fibers) out.push_back(elems.size());
  return out;
}

}  // namespace

TEST_CASE("running example evaluates through all four queries") {
  SECTION("Sum") {
    EvalResult r = eval(parse(std::string(kRunning) + "query Sum(f,p)"));
    CHECK(fiber_sizes(r) == std::vector<std::size_t>{3, 0});
  }
  SECTION("Pi") {
    EvalResult r = eval(parse(std::string(kRunning) + "query Pi(f,p)"));
    CHECK(fiber_sizes(r) == std::vector<std::size_t>{2, 0});
    CHECK(r.fibers[0].second[0] == "sec(a1){b1↦e1,b2↦e3}");
    CHECK(r.fibers[0].second[1] == "sec(a1){b1↦e2,b2↦e3}");
  }
  SECTION("Pull along the identity leaves fibers unchanged") {
    std::string src = std::string(kRunning) +
                      "map idB : B -> B = {b1 -> b1, b2 -> b2, b3 -> b3}\n"
                      "query Pull(idB,p)";
    EvalResult r = eval(parse(src));
    CHECK(fiber_sizes(r) == std::vector<std::size_t>{2, 1, 0});
  }
  SECTION("Obj is the family itself") {
    EvalResult r = eval(parse(std::string(kRunning) + "query Obj(p)"));
    CHECK(fiber_sizes(r) == std::vector<std::size_t>{2, 1, 0});
    CHECK(r.fibers[0].second == std::vector<std::string>{"e1", "e2"});
  }
}

TEST_CASE("eval agrees with calling the library directly") {
  Program prog = parse(std::string(kRunning) + "query Pi(f,p)");
  EvalResult r = eval(prog);
  FinSet a("A", {"a1", "a2"}), b("B", {"b1", "b2", "b3"}),
      e("E", {"e1", "e2", "e3"});
  FinMap f(b, a, {"a1", "a1", "a2"});
  SliceObj p{FinMap(e, b, {"b1", "b1", "b2"})};
  SliceObj direct = dependent_product_fiberwise(f, p);
  CHECK(r.object.total().same_elements(direct.total()));
  CHECK(map_equal(r.object.proj, direct.proj));
}

TEST_CASE("print/parse round trip is structurally identical") {
  std::vector<std::string> sources = {
      std::string(kRunning) + "query Sum(f,p)",
      std::string(kRunning) + "query Obj(f)",
      "set X = {}\nset Y = {y}\nmap m : X -> Y = {}\nquery Obj(m)"};
  for (const auto& src : sources) {
    Program once = parse(src);
    std::string printed = print_program(once);
    Program twice = parse(printed);
    CHECK(print_program(twice) == printed);
  }
}

TEST_CASE("whitespace and comments are immaterial") {
  std::string squeezed =
      "set A={a1,a2}set B={b1,b2,b3}set E={e1,e2,e3}"
      "map f:B->A={b1->a1,b2->a1,b3->a2}"
      "map p:E->B={e1->b1,e2->b1,e3->b2}query Sum(f,p)";
  CHECK(print_program(parse(squeezed)) ==
        print_program(parse(std::string(kRunning) +
                            "# trailing comment\nquery Sum(f,p)")));
}

TEST_CASE("Pull of a trivial family is a trivial fibered space") {
  std::string src =
      "set One = {star}\n"
      "set B = {b1,b2}\n"
      "set E = {e1,e2,e3}\n"
      "map bang : B -> One = {b1 -> star, b2 -> star}\n"
      "map p : E -> One = {e1 -> star, e2 -> star, e3 -> star}\n"
      "query Pull(bang,p)";
  EvalResult r = eval(parse(src));
  REQUIRE(r.fibers.size() == 2);
  for (const auto& [b, elems] : r.fibers) CHECK(elems.size() == 3);
}

TEST_CASE("Pi over an empty base fiber reports the empty section") {
  std::string src =
      "set A = {a1,a2}\n"
      "set B = {b1}\n"
      "set E = {e1}\n"
      "map f : B -> A = {b1 -> a1}\n"
      "map p : E -> B = {e1 -> b1}\n"
      "query Pi(f,p)";
  EvalResult r = eval(parse(src));
  CHECK(fiber_sizes(r) == std::vector<std::size_t>{1, 1});
  CHECK(r.fibers[1].second == std::vector<std::string>{"sec(a2){}"});
}

TEST_CASE("syntax errors carry positions and expectations") {
  SECTION("bad top-level keyword") {
    try {
      parse("sets A = {a}\nquery Obj(A)");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line == 1);
      CHECK(e.col == 1);
      CHECK(e.expected == "'set', 'map' or 'query'");
    }
  }
  SECTION("missing brace") {
    try {
      parse("set A = {a1, a2\nquery Obj(A)");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line == 2);
      CHECK(e.col == 1);
    }
  }
  SECTION("truncated input still has a position") {
    try {
      parse("set A = {a1}\nmap f : A ->");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line == 2);
      CHECK(e.col == 13);
    }
  }
  SECTION("stray character") {
    try {
      parse("set A = {a1}\nquery Obj(A) $");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line == 2);
      CHECK(e.col == 14);
    }
  }
  SECTION("unknown query head") {
    CHECK_THROWS_AS(parse("set A = {a}\nquery Prod(A)"), SyntaxError);
  }
}

TEST_CASE("name, totality and type errors") {
  SECTION("missing table entry names the element") {
    try {
      parse(
          "set A = {a1}\nset B = {b1,b2,b3}\n"
          "map f : B -> A = {b1 -> a1, b2 -> a1}\nquery Obj(f)");
      FAIL("expected TotalityError");
    } catch (const TotalityError& e) {
      CHECK(std::string(e.what()).find("b3") != std::string::npos);
      CHECK(e.line == 3);
    }
  }
  SECTION("extra table entry") {
    CHECK_THROWS_AS(
        parse("set A = {a1}\nset B = {b1}\n"
              "map f : B -> A = {b1 -> a1, b9 -> a1}\nquery Obj(f)"),
        TotalityError);
  }
  SECTION("duplicate table entry") {
    CHECK_THROWS_AS(
        parse("set A = {a1}\nset B = {b1}\n"
              "map f : B -> A = {b1 -> a1, b1 -> a1}\nquery Obj(f)"),
        TotalityError);
  }
  SECTION("image outside the codomain") {
    CHECK_THROWS_AS(
        parse("set A = {a1}\nset B = {b1}\n"
              "map f : B -> A = {b1 -> b1}\nquery Obj(f)"),
        TypeError);
  }
  SECTION("undeclared set in a map signature") {
    CHECK_THROWS_AS(
        parse("set A = {a1}\nmap f : B -> A = {}\nquery Obj(f)"), NameError);
  }
  SECTION("undeclared map in the query") {
    CHECK_THROWS_AS(parse("set A = {a1}\nquery Obj(f)"), NameError);
  }
  SECTION("redeclaration") {
    CHECK_THROWS_AS(parse("set A = {a1}\nset A = {a2}\nquery Obj(A)"),
                    NameError);
  }
  SECTION("duplicate element") {
    CHECK_THROWS_AS(parse("set A = {a1,a1}\nquery Obj(A)"), NameError);
  }
  SECTION("family base mismatch for Pi") {
    try {
      parse(std::string(kRunning) + "query Pi(p,f)");
      FAIL("expected TypeError");
    } catch (const TypeError& e) {
      CHECK(e.line == 8);
    }
  }
  SECTION("family base mismatch for Pull") {
    CHECK_THROWS_AS(parse(std::string(kRunning) + "query Pull(f,p)"),
                    TypeError);
  }
}

TEST_CASE("eval respects the enumeration limit") {
  std::string src =
      "set One = {star}\n"
      "set B = {b1,b2,b3,b4,b5}\n"
      "set E = {e1,e2,e3,e4,e5,e6,e7,e8,e9,e10}\n"
      "map f : B -> One = {b1 -> star, b2 -> star, b3 -> star, b4 -> star, "
      "b5 -> star}\n"
      "map p : E -> B = {e1 -> b1, e2 -> b1, e3 -> b2, e4 -> b2, e5 -> b3, "
      "e6 -> b3, e7 -> b4, e8 -> b4, e9 -> b5, e10 -> b5}\n"
      "query Pi(f,p)";
  Program prog = parse(src);
  CHECK_THROWS_AS(eval(prog, 10), EnumerationTooLarge);
  CHECK(eval(prog, 100).fibers[0].second.size() == 32);
}
