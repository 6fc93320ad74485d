#include <doctest.h>

#include <cstdlib>

#include "facewalk/families.hpp"
#include "facewalk/perm.hpp"

using namespace facewalk;

namespace {

FamilySpec spec(const std::string& f, int n) {
  FamilySpec s;
  s.family = f;
  s.n = n;
  return s;
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("counting helpers") {
    CHECK(fubini(0) == 1);
    CHECK(fubini(3) == 13);
    CHECK(fubini(5) == 541);
    CHECK(fubini(9) == 7087261);
    CHECK(bperm_faces(1) == 3);
    CHECK(bperm_faces(2) == 17);
    for (int n = 1; n <= 4; ++n) CHECK(bperm_face_graph(n).size() == bperm_faces(n) + 1);
  }

  TEST_CASE("spec checks") {
    auto bad = spec("nope", 3);
    CHECK_THROWS_AS(check_spec(bad), InputError);
    auto p1 = spec("perm", 1);
    CHECK_THROWS_AS(check_spec(p1), InputError);
    auto g = spec("gassoc", 0);
    CHECK_THROWS_AS(check_spec(g), InputError);
    auto q = spec("quotientope", 3);
    check_spec(q);
    REQUIRE(q.congruence);
    CHECK(q.congruence->fences.empty());
  }

  TEST_CASE("round trips at small sizes") {
    for (const auto& f : {"cube", "perm", "bperm", "assoc", "quotientope"})
      for (int n = 1; n <= 4; ++n) {
        auto s = spec(f, n);
        if ((std::string(f) == "perm" || std::string(f) == "quotientope") && n < 2) continue;
        if (std::string(f) == "assoc" && n < 3) continue;
        auto l = generate_listing(s);
        auto r = verify_family_listing(s, l);
        CHECK_MESSAGE(r.ok, f << " n=" << n << " " << r.str());
        if (predicted_faces(s) && std::string(f) != "quotientope") CHECK(l.ids.size() == predicted_faces(s));
        for (const auto& id : l.ids) CHECK(face_rank(s, id) >= -1);
      }
  }

  TEST_CASE("ranks") {
    CHECK(face_rank(spec("cube", 3), "0-1") == 1);
    CHECK(face_rank(spec("perm", 3), "12|3") == 1);
    CHECK(face_rank(spec("assoc", 6), "1-3") == 2);
    CHECK(face_rank(spec("bperm", 2), "[12]") == 2);
    CHECK(face_rank(spec("cube", 3), kEmptyId) == -1);
  }

  TEST_CASE("shuffled listing fails") {
    auto s = spec("perm", 3);
    auto l = generate_listing(s);
    std::swap(l.ids[1], l.ids[2]);
    CHECK_FALSE(verify_family_listing(s, l).ok);
  }

  TEST_CASE("oracle budget") {
    auto s = spec("cube", 9);
    CHECK_THROWS_AS(family_cover_graph(s), BudgetExceeded);
    auto q = spec("quotientope", 7);
    CHECK_THROWS_AS(verify_family_listing(q, Listing{}), BudgetExceeded);
  }

  TEST_CASE("bench counts faces") {
    auto r = bench_family("perm", 5);
    CHECK(r.faces == fubini(5) + 1);
    CHECK(r.max_work >= 1);
    CHECK(bench_family("cube", 4).faces == 82);
    CHECK(bench_family("assoc", 6).faces == 46);
    CHECK_THROWS_AS(bench_family("bperm", 3), InputError);
  }
}
