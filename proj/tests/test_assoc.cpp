#include <doctest.h>

#include <algorithm>
#include <set>

#include "facewalk/assoc.hpp"
#include "facewalk/families.hpp"

using namespace facewalk;

TEST_SUITE("assoc") {
  TEST_CASE("dissection ids") {
    auto d = parse_dissection("1-3,1-4", 6);
    CHECK(d.diags.size() == 2);
    CHECK(format_dissection(d) == "1-3,1-4");
    CHECK(format_dissection(parse_dissection(".", 5)) == ".");
    CHECK(dissection_rank(d) == 1);
    CHECK_THROWS(parse_dissection("1-2", 5));      // polygon side
    CHECK_THROWS(parse_dissection("1-3,2-4", 5));  // crossing
  }

  TEST_CASE("crossing test") {
    CHECK(diagonals_cross({1, 3}, {2, 4}));
    CHECK_FALSE(diagonals_cross({1, 3}, {3, 5}));
    CHECK_FALSE(diagonals_cross({1, 4}, {2, 3}));
  }

  TEST_CASE("smallest expansion") {
    Dissection x;
    x.n = 4;
    CHECK(last_vertex_neighbors(x) == std::vector<int>{1, 3});
    auto c2 = expand_vertex(x, 2);
    CHECK(c2.n == 5);
    CHECK(c2.diags.empty());
    CHECK(format_dissection(expand_vertex_with_diagonal(x, 2)) == "3-5");
    CHECK(format_dissection(expand_vertex_with_diagonal(x, 1)) == "1-4");
    CHECK_THROWS(expand_vertex(x, 1));
    CHECK_THROWS(expand_vertex(x, 3));
    CHECK_THROWS(expand_vertex_with_diagonal(x, 0));
  }

  TEST_CASE("bar insertion equals a later join plus a diagonal") {
    for (int n = 4; n <= 9; ++n)
      for (const auto& x : all_dissections(n)) {
        auto v = last_vertex_neighbors(x);
        const int k = int(v.size());
        for (int i = 2; i <= k - 1; ++i) {
          auto want = expand_vertex(x, i + 1);
          want.diags.push_back({v[std::size_t(i - 1)], n});
          std::sort(want.diags.begin(), want.diags.end());
          CHECK(expand_vertex_with_diagonal(x, i) == want);
        }
      }
  }

  TEST_CASE("insertion sequences") {
    for (int n = 4; n <= 8; ++n)
      for (const auto& x : all_dissections(n)) {
        auto seq = assoc_insertions(x);
        const int k = int(last_vertex_neighbors(x).size());
        REQUIRE(int(seq.size()) == 2 * k - 1);
        const int r = dissection_rank(x);
        for (std::size_t i = 0; i < seq.size(); ++i) {
          CHECK(is_valid_dissection(seq[i]));
          CHECK(dissection_rank(seq[i]) == (i % 2 == 0 ? r : r + 1));
        }
      }
  }

  TEST_CASE("base listings") {
    auto four = face_listing_assoc(4);
    REQUIRE(four.size() == 4);
    CHECK(std::set<std::string>(four.begin(), four.end()) == std::set<std::string>{"1-3", "2-4", ".", kEmptyId});
    CHECK(face_listing_assoc(5).size() == 12);
    CHECK(face_listing_assoc(6).size() == 46);
    CHECK_THROWS(face_listing_assoc(3));
  }

  TEST_CASE("listings match the brute-force lattice") {
    for (int n = 4; n <= 8; ++n) {
      auto g = assoc_face_graph(n);
      CHECK(all_dissections(n).size() == little_schroeder(n));
      CHECK(g.size() == little_schroeder(n) + 1);
      auto l = face_listing_assoc(n);
      CHECK(check_hamiltonian(g, Listing{l, true}).ok);
      CHECK(check_euler(f_vector(g)));
    }
  }

  TEST_CASE("steps add or remove one diagonal") {
    AssocFaceIterator it(9);
    Dissection prev = it.current();
    std::size_t count = 1;
    while (it.next()) {
      const auto& cur = it.current();
      CHECK(is_valid_dissection(cur));
      std::vector<std::pair<int, int>> sym;
      std::set_symmetric_difference(prev.diags.begin(), prev.diags.end(), cur.diags.begin(), cur.diags.end(),
                                    std::back_inserter(sym));
      CHECK(sym.size() == 1);
      prev = cur;
      ++count;
    }
    CHECK(count == little_schroeder(9));
  }

  TEST_CASE("little Schroeder numbers") {
    CHECK(little_schroeder(3) == 1);
    CHECK(little_schroeder(4) == 3);
    CHECK(little_schroeder(5) == 11);
    CHECK(little_schroeder(6) == 45);
    CHECK(little_schroeder(7) == 197);
  }
}
