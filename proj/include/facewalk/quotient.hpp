#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "facewalk/perm.hpp"
#include "facewalk/posetcore.hpp"

namespace facewalk {

// f(a,b,L): edges of the permutahedron transposing a<b whose left prefix
// meets the open interval ]a,b[ exactly in L. Bit (e-1) stands for e.
struct Fence {
  int a = 1, b = 2;
  std::uint32_t L = 0;
  auto operator<=>(const Fence&) const = default;
};

std::uint32_t open_interval(int a, int b);
std::string format_fence(const Fence& f);
std::vector<Fence> all_fences(int n);
bool forcing_leq(const Fence& lower, const Fence& upper);

struct Congruence {
  int n = 1;
  std::vector<Fence> fences;  // sorted, closed downward
  bool contains(const Fence& f) const;
};

Congruence downset_closure(int n, const std::vector<Fence>& generators);
bool is_downset(const Congruence& c);
Congruence restrict_congruence(const Congruence& c);

Congruence read_congruence(std::istream& in);
void write_congruence(std::ostream& out, int n, const std::vector<Fence>& generators);

// Fence of the permutahedron edge swapping positions i, i+1 (0-based) of perm.
Fence edge_fence(const std::vector<int>& perm, int i);

struct PermClasses {
  int n = 0;
  std::vector<std::vector<int>> perms;  // lexicographic order
  std::vector<int> cls;
  int count = 0;
  int index(const std::vector<int>& p) const;
};
PermClasses perm_classes(const Congruence& c);

bool is_stable(const Blocks& F, const Congruence& c);

enum class SwapOutcome { NotEquivalent, EquivalentStable, Blocked };
// j is 1-based; swaps blocks j and j+1.
SwapOutcome swap_adjacent(const Blocks& F, int j, const Congruence& c);
Blocks swap_blocks(const Blocks& F, int j);

// Insertion of element c.n into a stable partition of [c.n - 1].
std::vector<Blocks> quotient_insertions(const Blocks& F, const Congruence& c);

struct QuotientFamily {
  using Object = Blocks;
  std::vector<Congruence> chain;  // chain[m] acts on [m]
  Object base() const { return {}; }
  void expand(const Object& x, int level, std::vector<Object>& out) const {
    out = quotient_insertions(x, chain[std::size_t(level)]);
  }
  bool odd_reversed() const { return true; }
};

std::vector<std::string> face_listing_quotientope(const Congruence& c);  // ends with EMPTY

struct QuotientLattice {
  CoverGraph graph;                           // classes plus EMPTY
  std::map<std::string, int> class_of;        // partition id -> class index
  std::map<std::string, bool> stable;         // partition id -> stable w.r.t. the oracle
  std::vector<std::string> class_id;          // canonical id of each class
  std::vector<int> class_rank;
  std::vector<std::vector<int>> class_vertices;  // sorted permutation classes touched
};
QuotientLattice brute_quotient_lattice(const Congruence& c);

// Maps entries to their classes and checks Hamiltonicity in the quotient.
Report verify_quotient_listing(const QuotientLattice& q, const Listing& l);

}  // namespace facewalk
