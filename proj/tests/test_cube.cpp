#include <doctest.h>

#include <algorithm>
#include <set>

#include "facewalk/cube.hpp"

using namespace facewalk;

namespace {

std::string reversed(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_SUITE("cube") {
  TEST_CASE("brgc small cases") {
    CHECK(brgc(1) == std::vector<std::string>{"0", "1"});
    CHECK(brgc(2) == std::vector<std::string>{"00", "01", "11", "10"});
    for (int n = 1; n <= 12; ++n) CHECK(brgc(n).size() == (std::size_t(1) << n));
    CHECK_THROWS(brgc(0));
  }

  TEST_CASE("brgc is a Hamiltonian cycle of the cube") {
    for (int n = 1; n <= 8; ++n) CHECK(check_hamiltonian(boolean_lattice_graph(n), Listing{brgc(n), true}).ok);
  }

  TEST_CASE("gamma small cases") {
    CHECK(gamma(1) == std::vector<std::string>{"0", "-", "1", kEmptyId});
    CHECK(gamma(2) == std::vector<std::string>{"00", "0-", "01", "-1", "--", "-0", "10", "1-", "11", kEmptyId});
    CHECK_THROWS(gamma(0));
  }

  TEST_CASE("gamma checks against the face lattice") {
    for (int n = 1; n <= 7; ++n) {
      auto l = gamma(n);
      std::size_t p = 1;
      for (int i = 0; i < n; ++i) p *= 3;
      CHECK(l.size() == p + 1);
      CHECK(l.front() == std::string(std::size_t(n), '0'));
      CHECK(l[l.size() - 2] == std::string(std::size_t(n), '1'));
      CHECK(check_hamiltonian(cube_face_graph(n), Listing{l, true}).ok);
    }
  }

  TEST_CASE("gamma iterator flips one position per step") {
    GammaIterator it(6);
    std::string prev = it.current();
    std::size_t count = 1;
    while (it.next()) {
      const auto& cur = it.current();
      int diff = 0;
      for (std::size_t i = 0; i < cur.size(); ++i) diff += cur[i] != prev[i];
      CHECK(diff == 1);
      int p = it.last_position();
      REQUIRE(p >= 0);
      CHECK(cur[std::size_t(p)] != prev[std::size_t(p)]);
      CHECK(std::abs(ternary_rank(cur) - ternary_rank(prev)) == 1);
      prev = cur;
      ++count;
    }
    CHECK(count == 729);
  }

  TEST_CASE("ternary rank") {
    CHECK(ternary_rank("0-1-") == 2);
    CHECK(ternary_rank(kEmptyId) == -1);
  }

  TEST_CASE("boolean strips validate") {
    for (int n = 2; n <= 10; ++n) {
      auto g = boolean_lattice_graph(n);
      CHECK(validate_strip(strip_boolean_mirror(n), g).ok);
      CHECK(validate_strip(strip_boolean_stack(n), g).ok);
    }
    CHECK_THROWS(strip_boolean_mirror(1));
    CHECK_THROWS(strip_boolean_stack(1));
  }

  TEST_CASE("mirror base case is the square") {
    auto s = strip_boolean_mirror(2);
    CHECK(s.edges.size() == 4);
    CHECK(rank_order(s, 0) == std::vector<std::string>{"00"});
    CHECK(rank_order(s, 2) == std::vector<std::string>{"11"});
  }

  TEST_CASE("mirror chains") {
    for (int n = 2; n <= 6; ++n) {
      auto s = strip_boolean_mirror(n);
      for (int i = 0; i <= n; ++i) {
        std::string x = std::string(std::size_t(n - i), '0') + std::string(std::size_t(i), '1');
        CHECK(rank_order(s, i).front() == x);
      }
      for (int i = 1; i <= n; ++i) {
        std::string y = "1" + std::string(std::size_t(n - i), '0') + std::string(std::size_t(i - 1), '1');
        CHECK(rank_order(s, i).back() == y);
      }
    }
  }

  TEST_CASE("stack chains") {
    for (int n = 2; n <= 6; ++n) {
      auto s = strip_boolean_stack(n);
      for (int i = 0; i <= n; ++i)
        CHECK(rank_order(s, i).front() == std::string(std::size_t(i), '1') + std::string(std::size_t(n - i), '0'));
      for (int i = 1; i <= n; ++i)
        CHECK(rank_order(s, i).back() ==
              std::string(std::size_t(i - 1), '1') + std::string(std::size_t(n - i), '0') + "1");
    }
  }

  TEST_CASE("stack and mirror agree under word reversal") {
    for (int n = 2; n <= 6; ++n)
      CHECK(strips_equivalent(strip_boolean_stack(n), strip_boolean_mirror(n), reversed));
  }

  TEST_CASE("cube face strips validate") {
    for (int n = 1; n <= 6; ++n) {
      auto s = strip_cube_faces(n);
      std::size_t p = 1;
      for (int i = 0; i < n; ++i) p *= 3;
      CHECK(s.vertex_count() == p + 1);
      CHECK(validate_strip(s, cube_face_graph(n)).ok);
    }
    CHECK_THROWS(strip_cube_faces(0));
  }

  TEST_CASE("cube face chains") {
    for (int n = 1; n <= 6; ++n) {
      auto s = strip_cube_faces(n);
      for (int i = 0; i <= n; ++i)
        CHECK(rank_order(s, i).front() == std::string(std::size_t(i), '-') + std::string(std::size_t(n - i), '0'));
    }
  }

  TEST_CASE("rank zero order of the face strip is a cube Hamiltonian cycle") {
    for (int n = 2; n <= 8; ++n) {
      auto o = rank_order(strip_cube_faces(n), 0);
      CHECK(check_hamiltonian(boolean_lattice_graph(n), Listing{o, true}).ok);
    }
  }

  TEST_CASE("face lattice counts") {
    auto g = cube_face_graph(3);
    CHECK(f_vector(g) == std::vector<long long>{1, 8, 12, 6, 1});
    CHECK(boolean_lattice_graph(4).size() == 16);
  }
}
