#include <doctest.h>

#include <set>
#include <sstream>

#include "facewalk/cube.hpp"
#include "facewalk/strip.hpp"

using namespace facewalk;

namespace {

RhombicStrip square() {
  RhombicStrip s;
  s.family = "boolean";
  s.n = 2;
  s.add_vertex("00", 0, Rational(0));
  s.add_vertex("01", 1, Rational(0));
  s.add_vertex("10", 1, Rational(1, 2));
  s.add_vertex("11", 2, Rational(0));
  s.add_edge("00", "01");
  s.add_edge("00", "10");
  s.add_edge("01", "11");
  s.add_edge("10", "11");
  return s;
}

RhombicStrip segment() {
  RhombicStrip s;
  s.family = "cube-faces";
  s.n = 1;
  s.add_vertex(kEmptyId, -1, Rational(0));
  s.add_vertex("0", 0, Rational(0));
  s.add_vertex("1", 0, Rational(1, 2));
  s.add_vertex("-", 1, Rational(0));
  s.add_edge(kEmptyId, "0");
  s.add_edge(kEmptyId, "1");
  s.add_edge("0", "-");
  s.add_edge("1", "-");
  return s;
}

// Maximal chains of a graded cover graph, counted by dynamic programming.
long long count_chains(const CoverGraph& g) {
  int lo = 1 << 30, hi = -(1 << 30);
  for (std::size_t v = 0; v < g.size(); ++v) lo = std::min(lo, g.rank(int(v))), hi = std::max(hi, g.rank(int(v)));
  std::vector<long long> ways(g.size(), 0);
  for (int r = lo; r <= hi; ++r)
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (g.rank(int(v)) != r) continue;
      if (r == lo) {
        ways[v] = 1;
        continue;
      }
      for (int u : g.neighbors(int(v)))
        if (g.rank(u) == r - 1) ways[v] += ways[std::size_t(u)];
    }
  long long total = 0;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.rank(int(v)) == hi) total += ways[v];
  return total;
}

}  // namespace

TEST_SUITE("strip") {
  TEST_CASE("square strip validates") {
    CHECK(validate_strip(square(), boolean_lattice_graph(2)).ok);
    CHECK(strip_rhombi(square()).size() == 2);
  }

  TEST_CASE("deleting an edge breaks the rhombi") {
    auto s = square();
    s.edges.pop_back();
    auto r = validate_strip(s, boolean_lattice_graph(2));
    CHECK_FALSE(r.ok);
  }

  TEST_CASE("segment strip and its sweep") {
    auto s = segment();
    CHECK(validate_strip(s, cube_face_graph(1)).ok);
    auto flags = sweep_flags(s);
    REQUIRE(flags.size() == 2);
    CHECK(format_flag(flags[0]) == "EMPTY>0>-");
    CHECK(format_flag(flags[1]) == "EMPTY>1>-");
    CHECK(check_facet_hamiltonian_flags(flags, cube_face_graph(1).elements()).ok);
  }

  TEST_CASE("square sweep visits both chains") {
    auto flags = sweep_flags(square());
    CHECK(flags.size() == 2);
    CHECK(count_chains(boolean_lattice_graph(2)) == 2);
  }

  TEST_CASE("validator rejects bad geometry") {
    auto s = square();
    s.ranks[1][1].x = Rational(0);  // duplicate x in rank 1
    CHECK_FALSE(validate_strip_geometry(s).ok);

    auto t = square();
    t.add_edge("00", "11");  // skips a rank
    CHECK_FALSE(validate_strip(t, boolean_lattice_graph(2)).ok);

    auto u = square();
    u.ranks[1].pop_back();  // not spanning
    CHECK_FALSE(validate_strip(u, boolean_lattice_graph(2)).ok);
  }

  TEST_CASE("crossing tests agree") {
    for (int n = 2; n <= 5; ++n) {
      CHECK(check_crossings_pairwise(strip_boolean_mirror(n)).ok);
      CHECK(check_crossings_pairwise(strip_boolean_stack(n)).ok);
    }
    for (int n = 1; n <= 3; ++n) CHECK(check_crossings_pairwise(strip_cube_faces(n)).ok);
    auto s = strip_boolean_mirror(3);
    // swap two rank-1 coordinates: both tests must notice the crossing
    std::swap(s.ranks[1][0].x, s.ranks[1][1].x);
    CHECK_FALSE(check_crossings_pairwise(s).ok);
    CHECK_FALSE(validate_strip_geometry(s).ok);
  }

  TEST_CASE("facet checker failures") {
    auto flags = sweep_flags(strip_cube_faces(2));
    auto faces = cube_face_graph(2).elements();
    REQUIRE(check_facet_hamiltonian_flags(flags, faces).ok);
    auto rep = flags;
    rep.push_back(rep[1]);
    CHECK_FALSE(check_facet_hamiltonian_flags(rep, faces).ok);
    auto swapped = flags;
    std::swap(swapped[0], swapped[2]);
    CHECK_FALSE(check_facet_hamiltonian_flags(swapped, faces).ok);
    CHECK_FALSE(check_facet_hamiltonian_flags({}, faces).ok);
  }

  TEST_CASE("sweep visits every rhombus once") {
    for (int n = 1; n <= 4; ++n) {
      auto s = strip_cube_faces(n);
      auto flags = sweep_flags(s);
      CHECK(flags.size() == strip_rhombi(s).size());
      std::set<Flag> distinct(flags.begin(), flags.end());
      CHECK(distinct.size() == flags.size());
      // sweep flags are maximal chains of the underlying lattice
      auto g = cube_face_graph(n);
      for (const auto& f : flags)
        for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(g.adjacent(g.find(f[i]), g.find(f[i + 1])));
    }
  }

  TEST_CASE("rank orders are Gray codes") {
    for (int n = 2; n <= 4; ++n) {
      auto s = strip_cube_faces(n);
      auto g = cube_face_graph(n);
      for (int r = 0; r < n; ++r) {
        auto o = rank_order(s, r);
        for (std::size_t i = 0; i < o.size() && o.size() > 1; ++i) {
          int a = g.find(o[i]), b = g.find(o[(i + 1) % o.size()]);
          bool up = false, down = false;
          for (int w : g.neighbors(a)) {
            if (!g.adjacent(w, b)) continue;
            up |= g.rank(w) == r + 1;
            down |= g.rank(w) == r - 1;
          }
          CHECK(up);
          CHECK(down);
        }
      }
    }
  }

  TEST_CASE("strip file round trip") {
    auto s = strip_cube_faces(2);
    std::stringstream io;
    write_strip(io, s);
    auto t = read_strip(io);
    CHECK(t.family == s.family);
    CHECK(t.n == 2);
    CHECK(validate_strip(t, cube_face_graph(2)).ok);
    CHECK(strips_equivalent(s, t, [](const std::string& x) { return x; }));
    std::stringstream bad("#strip family=x n=1\n0: a@1/2 b@1/2\nedges:\n");
    CHECK_FALSE(validate_strip_geometry(read_strip(bad)).ok);
  }

  TEST_CASE("flag parsing") {
    CHECK(parse_flag("EMPTY>0>-") == Flag{"EMPTY", "0", "-"});
    CHECK_THROWS_AS(parse_flag("EMPTY>>-"), InputError);
  }
}
