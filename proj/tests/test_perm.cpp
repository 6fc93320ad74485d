#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "facewalk/cube.hpp"
#include "facewalk/families.hpp"
#include "facewalk/perm.hpp"

using namespace facewalk;

namespace {

std::vector<std::string> ids(const std::vector<Blocks>& seq, int n) {
  std::vector<std::string> out;
  for (const auto& b : seq) out.push_back(format_partition(b, n));
  return out;
}

std::string reverse_blocks(const std::string& id) {
  Blocks b = parse_partition(id);
  std::reverse(b.begin(), b.end());
  return format_partition(b, partition_size(b));
}

std::vector<int> as_perm(const std::string& id) {
  std::vector<int> p;
  for (auto m : parse_partition(id)) p.push_back(std::countr_zero(m) + 1);
  return p;
}

}  // namespace

TEST_SUITE("perm") {
  TEST_CASE("partition ids") {
    Blocks x = parse_partition("25|1|34");
    REQUIRE(x.size() == 3);
    CHECK(x[0] == 0b10010u);
    CHECK(format_partition(x, 5) == "25|1|34");
    CHECK_THROWS(parse_partition("1||2"));
    CHECK_THROWS(parse_partition("12|2"));
  }

  TEST_CASE("bar and join insertions") {
    Blocks x = parse_partition("25|1|34");
    CHECK(format_partition(insert_bar(x, 2), 6) == "25|1|6|34");
    CHECK(format_partition(insert_join(x, 1), 6) == "256|1|34");
    CHECK(format_partition(insert_bar(parse_partition("12"), 0), 3) == "3|12");
    CHECK_THROWS(insert_bar(x, 4));
    CHECK_THROWS(insert_join(x, 0));
    CHECK_THROWS(insert_join(x, 4));
  }

  TEST_CASE("insertion sequence alternates ranks") {
    Blocks x = parse_partition("25|1|34");
    auto seq = perm_insertions(x);
    REQUIRE(seq.size() == 7);
    CHECK(ids(seq, 6) == std::vector<std::string>{"6|25|1|34", "256|1|34", "25|6|1|34", "25|16|34", "25|1|6|34",
                                                  "25|1|346", "25|1|34|6"});
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(int(seq[i].size()) == (i % 2 == 0 ? 4 : 3));
  }

  TEST_CASE("base listings") {
    CHECK(face_listing_perm(2) == std::vector<std::string>{"1|2", "12", "2|1", kEmptyId});
    CHECK(face_listing_perm(3).size() == 14);
    CHECK_THROWS(face_listing_perm(1));
  }

  TEST_CASE("listings match the brute-force lattice") {
    for (int n = 2; n <= 5; ++n) {
      auto g = perm_face_graph(n);
      CHECK(g.size() == fubini(n) + 1);
      CHECK(all_ordered_partitions(n).size() == fubini(n));
      auto l = face_listing_perm(n);
      CHECK(l.size() == g.size());
      CHECK(check_hamiltonian(g, Listing{l, true}).ok);
      CHECK(check_euler(f_vector(g)));
    }
    CHECK(f_vector(perm_face_graph(3)) == std::vector<long long>{1, 6, 6, 1});
  }

  TEST_CASE("position reversal symmetry") {
    for (int n = 2; n <= 5; ++n) {
      auto l = face_listing_perm(n);
      l.pop_back();
      for (std::size_t i = 0; i < l.size(); ++i) CHECK(l[l.size() - 1 - i] == reverse_blocks(l[i]));
    }
  }

  TEST_CASE("permutations are inserted right to left") {
    for (int n = 2; n <= 4; ++n) {
      std::vector<std::vector<int>> prev, next;
      for (const auto& id : face_listing_perm(n))
        if (id != kEmptyId && parse_partition(id).size() == std::size_t(n)) prev.push_back(as_perm(id));
      for (const auto& id : face_listing_perm(n + 1))
        if (id != kEmptyId && parse_partition(id).size() == std::size_t(n + 1)) next.push_back(as_perm(id));
      std::vector<std::vector<int>> want;
      for (const auto& p : prev)
        for (int pos = n; pos >= 0; --pos) {
          auto q = p;
          q.insert(q.begin() + pos, n + 1);
          want.push_back(q);
        }
      CHECK(next == want);
    }
  }

  TEST_CASE("iterator agrees with the listing") {
    for (int n = 2; n <= 6; ++n) {
      PermFaceIterator it(n);
      std::vector<std::string> got;
      do got.push_back(it.id());
      while (it.next());
      got.push_back(kEmptyId);
      CHECK(got == face_listing_perm(n));
    }
  }

  TEST_CASE("iterator steps merge or split two blocks") {
    PermFaceIterator it(7);
    Blocks prev = it.blocks();
    while (it.next()) {
      Blocks cur = it.blocks();
      const Blocks& more = cur.size() > prev.size() ? cur : prev;
      const Blocks& fewer = cur.size() > prev.size() ? prev : cur;
      REQUIRE(more.size() == fewer.size() + 1);
      std::size_t j = 0;
      while (j < fewer.size() && fewer[j] == more[j]) ++j;
      REQUIRE(j < fewer.size());
      CHECK(fewer[j] == (more[j] | more[j + 1]));
      CHECK(std::equal(fewer.begin() + long(j) + 1, fewer.end(), more.begin() + long(j) + 2));
      prev = cur;
    }
  }

  TEST_CASE("signed ids") {
    SignedPartition x = parse_signed("[12]|-3");
    CHECK(x.boxed);
    CHECK(x.neg == 0b100u);
    CHECK(format_signed(x, 3) == "[12]|-3");
    CHECK(signed_rank(x, 3) == 2);
    CHECK(signed_rank(parse_signed("2|-1|3"), 3) == 0);
    CHECK(format_signed(parse_signed("2|-1|3"), 3) == "2|-1|3");
    CHECK_THROWS(parse_signed("[1]|[2]"));
  }

  TEST_CASE("B-permutahedron listings") {
    CHECK(face_listing_bperm(1) == std::vector<std::string>{"1", "[1]", "-1", kEmptyId});
    CHECK(face_listing_bperm(2).size() == 18);
    CHECK_THROWS(face_listing_bperm(0));
    for (int n = 1; n <= 4; ++n) {
      auto g = bperm_face_graph(n);
      auto l = face_listing_bperm(n);
      CHECK(l.size() == g.size());
      CHECK(g.size() == bperm_faces(n) + 1);
      CHECK(check_euler(f_vector(g)));
      if (n <= 3) CHECK(check_hamiltonian(g, Listing{l, true}).ok);
    }
  }

  TEST_CASE("flags to signed permutations") {
    CHECK(flag_to_signed_perm({kEmptyId, "0", "-"}) == "-1");
    CHECK(flag_to_signed_perm({kEmptyId, "1", "-"}) == "1");
    // position 2 is dashed first, so it gets value 1; position 1 gets value 2 and its sign from '0'
    CHECK(flag_to_signed_perm({kEmptyId, "01", "0-", "--"}) == "-2|1");
    CHECK_THROWS(flag_to_signed_perm({kEmptyId, "01", "--"}));
    CHECK_THROWS(flag_to_signed_perm({"01", "0-", "--"}));
    CHECK_THROWS(flag_to_signed_perm({kEmptyId, "01", "1-", "--"}));
  }

  TEST_CASE("flag map is a bijection onto signed permutations") {
    for (int n = 1; n <= 4; ++n) {
      // every maximal chain of L(Q_n): a vertex plus an order of dashing its positions
      std::set<std::string> images;
      std::size_t total = 0;
      for (const auto& v : brgc(n)) {
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) order[std::size_t(i)] = i;
        do {
          Flag f{kEmptyId, v};
          std::string w = v;
          for (int p : order) {
            w[std::size_t(p)] = '-';
            f.push_back(w);
          }
          images.insert(flag_to_signed_perm(f));
          ++total;
        } while (std::next_permutation(order.begin(), order.end()));
      }
      std::size_t want = std::size_t(1) << n;
      for (int i = 2; i <= n; ++i) want *= std::size_t(i);
      CHECK(total == want);
      CHECK(images.size() == want);
    }
  }

  TEST_CASE("facet cycle from the cube strip") {
    for (int n = 2; n <= 4; ++n) {
      auto fc = facet_hamiltonian_bperm(n);
      CHECK(fc.report.ok);
      std::set<std::string> distinct(fc.perms.begin(), fc.perms.end());
      CHECK(distinct.size() == fc.perms.size());
    }
    auto two = facet_hamiltonian_bperm(2);
    CHECK(two.flags.size() == 8);
    // the octagon cycle walks through all eight signed permutations of [2]
    CHECK(std::set<std::string>(two.perms.begin(), two.perms.end()).size() == 8);
  }
}
