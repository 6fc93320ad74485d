#include <doctest.h>

#include <sstream>

#include "facewalk/cube.hpp"
#include "facewalk/posetcore.hpp"

using namespace facewalk;

namespace {

CoverGraph segment() {
  CoverGraph g;
  g.add(kEmptyId, -1);
  g.add("0", 0);
  g.add("1", 0);
  g.add("-", 1);
  g.connect(kEmptyId, "0");
  g.connect(kEmptyId, "1");
  g.connect("0", "-");
  g.connect("1", "-");
  return g;
}

CoverGraph cycle_graph(int k) {
  CoverGraph g;
  for (int i = 0; i < k; ++i) g.add(std::to_string(i), i % 2);
  for (int i = 0; i < k; ++i) g.connect(i, (i + 1) % k);
  return g;
}

}  // namespace

TEST_SUITE("posetcore") {
  TEST_CASE("segment listing passes") {
    auto r = check_hamiltonian(segment(), Listing{{"0", "-", "1", kEmptyId}, true});
    CHECK(r.ok);
    CHECK(r.str() == "OK");
  }

  TEST_CASE("empty listing is not spanning") { CHECK_FALSE(check_hamiltonian(segment(), Listing{}).ok); }

  TEST_CASE("non-adjacent pair is reported") {
    auto r = check_hamiltonian(segment(), Listing{{"0", "1", "-", kEmptyId}, true});
    CHECK_FALSE(r.ok);
    CHECK(r.position == 2);
    CHECK(r.str().rfind("FAIL 2", 0) == 0);
  }

  TEST_CASE("unknown and duplicate ids") {
    auto r = check_hamiltonian(segment(), Listing{{"0", "x"}, true});
    CHECK_FALSE(r.ok);
    CHECK(r.reason.find("x") != std::string::npos);
    auto d = check_hamiltonian(segment(), Listing{{"0", "-", "0", kEmptyId}, true});
    CHECK_FALSE(d.ok);
    CHECK(d.position == 3);
  }

  TEST_CASE("open path ignores the wrap pair") {
    CoverGraph path;
    path.add("a", 0);
    path.add("b", 1);
    path.add("c", 0);
    path.connect("a", "b");
    path.connect("b", "c");
    CHECK(check_hamiltonian(path, Listing{{"a", "b", "c"}, false}).ok);
    CHECK_FALSE(check_hamiltonian(path, Listing{{"a", "b", "c"}, true}).ok);
  }

  TEST_CASE("brute force oracle") {
    auto q2 = cube_face_graph(2);
    auto c = brute_force_hamiltonian(q2);
    REQUIRE(c);
    CHECK(c->ids.size() == 10);
    CHECK(check_hamiltonian(q2, *c).ok);

    auto sq = brute_force_hamiltonian(cycle_graph(4));
    REQUIRE(sq);
    CHECK(sq->ids.size() == 4);

    CoverGraph path;
    path.add("a", 0);
    path.add("b", 1);
    path.add("c", 0);
    path.connect("a", "b");
    path.connect("b", "c");
    CHECK_FALSE(brute_force_hamiltonian(path));

    CHECK_THROWS_AS(brute_force_hamiltonian(cube_face_graph(3), 10), BudgetExceeded);
  }

  TEST_CASE("oracle output is deterministic") {
    auto g = cube_face_graph(3);
    auto a = brute_force_hamiltonian(g), b = brute_force_hamiltonian(g);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->ids == b->ids);
    CHECK(check_hamiltonian(g, *a).ok);
  }

  TEST_CASE("f-vectors and Euler") {
    CHECK(f_vector(segment()) == std::vector<long long>{1, 2, 1});
    CHECK(check_euler({1, 2, 1}));
    CHECK(check_euler({1, 8, 12, 6, 1}));
    CHECK_FALSE(check_euler({1, 3, 1}));
    CHECK_THROWS_AS(f_vector(std::vector<RankedElement>{{"a", 0}}), InputError);
    for (int n = 1; n <= 5; ++n) CHECK(check_euler(f_vector(cube_face_graph(n))));
  }

  TEST_CASE("cover edges join consecutive ranks") {
    CoverGraph g;
    g.add("a", 0);
    g.add("b", 2);
    CHECK_THROWS(g.connect("a", "b"));
  }

  TEST_CASE("listing file round trip") {
    std::stringstream s;
    write_listing(s, {"cube", 1, true}, Listing{{"0", "-", "1", kEmptyId}, true});
    CHECK(s.str() == "#family=cube n=1 cyclic=1\n0\n-\n1\nEMPTY\n");
    ListingHeader h;
    Listing l = read_listing(s, &h);
    CHECK(h.family == "cube");
    CHECK(h.n == 1);
    CHECK(l.ids.size() == 4);
    CHECK(l.cyclic);
    CHECK_THROWS_AS(parse_header("#n=3"), InputError);
  }
}
