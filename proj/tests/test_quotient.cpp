#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "facewalk/assoc.hpp"
#include "facewalk/families.hpp"
#include "facewalk/perm.hpp"
#include "facewalk/quotient.hpp"

using namespace facewalk;

namespace {

std::uint32_t bits(std::initializer_list<int> xs) {
  std::uint32_t m = 0;
  for (int x : xs) m |= 1u << (x - 1);
  return m;
}

Fence F(int a, int b, std::initializer_list<int> l = {}) { return Fence{a, b, bits(l)}; }

std::vector<Congruence> all_congruences(int n) {
  auto fences = all_fences(n);
  std::vector<Congruence> out;
  for (std::uint32_t mask = 0; mask < (1u << fences.size()); ++mask) {
    Congruence c;
    c.n = n;
    for (std::size_t i = 0; i < fences.size(); ++i)
      if (mask >> i & 1u) c.fences.push_back(fences[i]);
    std::sort(c.fences.begin(), c.fences.end());
    if (is_downset(c)) out.push_back(c);
  }
  return out;
}

std::vector<Congruence> random_congruences(int n, int count, unsigned seed) {
  std::mt19937 rng(seed);
  auto fences = all_fences(n);
  std::vector<Congruence> out;
  std::set<std::vector<Fence>> seen;
  while (int(out.size()) < count) {
    std::vector<Fence> gen;
    int k = int(rng() % 4);
    for (int i = 0; i < k; ++i) gen.push_back(fences[rng() % fences.size()]);
    auto c = downset_closure(n, gen);
    if (seen.insert(c.fences).second || seen.size() > 400) out.push_back(c);
  }
  return out;
}

Congruence sylvester(int n) {
  std::vector<Fence> gen;
  for (const auto& f : all_fences(n))
    if (f.L) gen.push_back(f);
  return downset_closure(n, gen);
}

std::vector<long long> degrees(const CoverGraph& g) {
  std::vector<long long> d;
  for (std::size_t v = 0; v < g.size(); ++v) d.push_back(static_cast<long long>(g.neighbors(int(v)).size()));
  std::sort(d.begin(), d.end());
  return d;
}

// Runs the fence-level swap rules against the permutation-class oracle.
void check_swaps(const Congruence& c) {
  auto q = brute_quotient_lattice(c);
  for (const auto& F : all_ordered_partitions(c.n)) {
    if (!is_stable(F, c)) continue;
    const std::string id = format_partition(F, c.n);
    for (int j = 1; j + 1 <= int(F.size()); ++j) {
      auto out = swap_adjacent(F, j, c);
      Blocks G = swap_blocks(F, j);
      const std::string gid = format_partition(G, c.n);
      bool same = q.class_of.at(id) == q.class_of.at(gid);
      if (out == SwapOutcome::EquivalentStable) {
        CHECK(same);
        CHECK(is_stable(G, c));
      } else {
        CHECK_FALSE(same);
      }
      if (out == SwapOutcome::Blocked) {
        CHECK(is_stable(G, c));
        Blocks merged = F;
        merged[std::size_t(j - 1)] |= merged[std::size_t(j)];
        merged.erase(merged.begin() + j);
        CHECK(is_stable(merged, c));
      }
    }
  }
}

}  // namespace

TEST_SUITE("quotient") {
  TEST_CASE("fences and the forcing order") {
    CHECK(format_fence(F(1, 4, {2, 3})) == "fence 1 4 {2,3}");
    CHECK(open_interval(1, 4) == bits({2, 3}));
    CHECK(all_fences(4).size() == 11);
    // wider fences sit below narrower ones
    CHECK(forcing_leq(F(1, 4, {2}), F(1, 3, {2})));
    CHECK_FALSE(forcing_leq(F(1, 3, {2}), F(1, 4, {2})));
    CHECK(forcing_leq(F(2, 4, {3}), F(2, 4, {3})));
    CHECK_FALSE(forcing_leq(F(2, 4, {3}), F(1, 3, {2})));
    CHECK_FALSE(forcing_leq(F(1, 3, {2}), F(2, 4, {3})));
    CHECK_FALSE(forcing_leq(F(1, 3), F(1, 4, {2})));
  }

  TEST_CASE("closure of the four-element example") {
    auto wide = downset_closure(4, {F(1, 4, {2, 3}), F(1, 4, {2}), F(1, 4, {3})});
    CHECK(wide.fences.size() == 3);
    auto c = downset_closure(4, {F(1, 3, {2}), F(2, 4, {3})});
    CHECK(c.fences.size() == 5);
    CHECK(c.contains(F(1, 4, {2, 3})));
    CHECK(c.contains(F(1, 4, {2})));
    CHECK(c.contains(F(1, 4, {3})));
    CHECK(c.contains(F(1, 3, {2})));
    CHECK(c.contains(F(2, 4, {3})));
    CHECK(is_downset(c));
    auto r = restrict_congruence(c);
    CHECK(r.n == 3);
    REQUIRE(r.fences.size() == 1);
    CHECK(r.fences[0] == F(1, 3, {2}));
    CHECK(downset_closure(4, {}).fences.empty());
    CHECK_THROWS(downset_closure(4, {F(1, 3, {3})}));
  }

  TEST_CASE("stability in the four-element example") {
    auto c = downset_closure(4, {F(1, 3, {2}), F(2, 4, {3})});
    CHECK_FALSE(is_stable(parse_partition("2|13|4"), c));
    CHECK_FALSE(is_stable(parse_partition("2|3|14"), c));
    CHECK(is_stable(parse_partition("2|1|3|4"), c));
    for (const auto& p : all_ordered_partitions(4))
      if (p.size() == 4) CHECK(is_stable(p, c));
  }

  TEST_CASE("permutation classes") {
    auto c = downset_closure(3, {F(1, 3, {2})});
    auto pc = perm_classes(c);
    CHECK(pc.count == 5);
    CHECK(pc.cls[std::size_t(pc.index({2, 1, 3}))] == pc.cls[std::size_t(pc.index({2, 3, 1}))]);
    CHECK(perm_classes(Congruence{6, {}}).count == 720);
    Congruence full{4, all_fences(4)};
    CHECK(is_downset(full));
    CHECK(perm_classes(full).count == 1);
  }

  TEST_CASE("three-element example listing") {
    auto c = downset_closure(3, {F(1, 3, {2})});
    auto l = face_listing_quotientope(c);
    CHECK(l == std::vector<std::string>{"1|2|3", "1|23", "1|3|2", "13|2", "3|1|2", "3|12", "123", "12|3", "2|1|3",
                                        "23|1", "3|2|1", kEmptyId});
    auto q = brute_quotient_lattice(c);
    CHECK(q.graph.size() == 12);
    CHECK(verify_quotient_listing(q, Listing{l, true}).ok);
    auto seq = quotient_insertions(parse_partition("1|2"), c);
    CHECK(seq.size() == 5);
    // the swap 2|1|3 -> 2|3|1 stays in the class
    CHECK(swap_adjacent(parse_partition("2|1|3"), 2, c) == SwapOutcome::EquivalentStable);
  }

  TEST_CASE("empty congruence gives the permutahedron") {
    for (int n = 1; n <= 5; ++n) {
      auto l = face_listing_quotientope(Congruence{n, {}});
      if (n >= 2) CHECK(l == face_listing_perm(n));
      for (const auto& F : all_ordered_partitions(n))
        for (int j = 1; j < int(F.size()); ++j) CHECK(swap_adjacent(F, j, Congruence{n, {}}) != SwapOutcome::EquivalentStable);
    }
    auto q = brute_quotient_lattice(Congruence{3, {}});
    CHECK(q.graph.size() == 14);
    CHECK(f_vector(q.graph) == f_vector(perm_face_graph(3)));
  }

  TEST_CASE("all sixty congruences at n = 4") {
    auto cs = all_congruences(4);
    CHECK(cs.size() == 60);
    for (const auto& c : cs) {
      auto q = brute_quotient_lattice(c);
      auto r = verify_quotient_listing(q, Listing{face_listing_quotientope(c), true});
      CHECK_MESSAGE(r.ok, r.str());
      CHECK(check_euler(f_vector(q.graph)));
      for (const auto& [id, st] : q.stable) CHECK(st == is_stable(parse_partition(id), c));
      check_swaps(c);
      CHECK(is_downset(restrict_congruence(c)));
    }
  }

  TEST_CASE("sampled congruences at n = 5") {
    for (const auto& c : random_congruences(5, 40, 7)) {
      auto q = brute_quotient_lattice(c);
      CHECK(verify_quotient_listing(q, Listing{face_listing_quotientope(c), true}).ok);
      for (const auto& [id, st] : q.stable) CHECK(st == is_stable(parse_partition(id), c));
      check_swaps(c);
    }
  }

  TEST_CASE("restriction counts permutations ending in n") {
    for (int n = 2; n <= 5; ++n)
      for (const auto& c : n <= 4 ? all_congruences(n) : random_congruences(n, 30, 11)) {
        auto pc = perm_classes(c);
        std::set<int> last;
        for (std::size_t i = 0; i < pc.perms.size(); ++i)
          if (pc.perms[i].back() == n) last.insert(pc.cls[i]);
        CHECK(int(last.size()) == perm_classes(restrict_congruence(c)).count);
      }
  }

  TEST_CASE("insertions respect the restricted classes") {
    for (const auto& c : all_congruences(4)) {
      auto r = restrict_congruence(c);
      auto qr = brute_quotient_lattice(r);
      auto q = brute_quotient_lattice(c);
      std::map<int, std::vector<Blocks>> by_class;
      for (const auto& F : all_ordered_partitions(3))
        if (is_stable(F, r)) by_class[qr.class_of.at(format_partition(F, 3))].push_back(F);
      for (const auto& [cls, members] : by_class) {
        std::set<int> first;
        std::set<std::set<int>> sets;
        for (const auto& F : members) {
          auto seq = quotient_insertions(F, c);
          std::set<int> s;
          for (const auto& G : seq) s.insert(q.class_of.at(format_partition(G, 4)));
          sets.insert(s);
          first.insert(q.class_of.at(format_partition(seq.front(), 4)));
        }
        CHECK(sets.size() == 1);
        CHECK(first.size() == 1);
      }
      // inversion: equivalent insertions come from equivalent bases
      std::map<int, int> base_of;
      for (const auto& F : all_ordered_partitions(3)) {
        if (!is_stable(F, r)) continue;
        for (const auto& G : quotient_insertions(F, c)) {
          int k = q.class_of.at(format_partition(G, 4));
          int b = qr.class_of.at(format_partition(F, 3));
          auto [it, fresh] = base_of.emplace(k, b);
          if (!fresh) CHECK(it->second == b);
        }
      }
    }
  }

  TEST_CASE("sylvester congruence gives the associahedron") {
    for (int n = 3; n <= 4; ++n) {
      auto c = sylvester(n);
      auto l = face_listing_quotientope(c);
      CHECK(l.size() == little_schroeder(n + 2) + 1);
      auto q = brute_quotient_lattice(c);
      CHECK(verify_quotient_listing(q, Listing{l, true}).ok);
      auto a = assoc_face_graph(n + 2);
      CHECK(f_vector(q.graph) == f_vector(a));
      CHECK(degrees(q.graph) == degrees(a));
    }
    CHECK(perm_classes(sylvester(4)).count == 14);
  }

  TEST_CASE("congruence files") {
    std::stringstream io;
    write_congruence(io, 4, {F(1, 3, {2})});
    CHECK(io.str() == "#congruence n=4\nfence 1 3 {2}\n");
    auto c = read_congruence(io);
    CHECK(c.n == 4);
    CHECK(c.contains(F(1, 4, {2})));
    CHECK(c.contains(F(1, 4, {2, 3})));
    CHECK_FALSE(c.contains(F(1, 4, {3})));
    std::stringstream bad("#congruence n=3\nfence 1 3 {3}\n");
    CHECK_THROWS_AS(read_congruence(bad), InputError);
    std::stringstream nohead("fence 1 3 {2}\n");
    CHECK_THROWS_AS(read_congruence(nohead), InputError);
  }

  TEST_CASE("edge fences") {
    CHECK(edge_fence({2, 1, 3}, 0) == F(1, 2));
    CHECK(edge_fence({2, 3, 1}, 1) == F(1, 3, {2}));
    CHECK(edge_fence({3, 1, 2}, 1) == F(1, 2));
  }
}
