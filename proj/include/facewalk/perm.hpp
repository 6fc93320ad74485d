#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "facewalk/posetcore.hpp"
#include "facewalk/strip.hpp"
#include "facewalk/zigzag.hpp"

namespace facewalk {

// Blocks as bitmasks: bit (e-1) stands for element e.
using Blocks = std::vector<std::uint32_t>;

inline constexpr int kMaxPermN = 30;

std::string format_partition(const Blocks& blocks, int n);
Blocks parse_partition(const std::string& id);
int partition_size(const Blocks& blocks);  // largest element

// č_i: singleton {m} after block i (0 <= i <= k); m = n + 1 by default.
Blocks insert_bar(const Blocks& x, int i, int m = 0);
// ĉ_i: m joins block i (1 <= i <= k).
Blocks insert_join(const Blocks& x, int i, int m = 0);
// c⃗(x) = (č_0, ĉ_1, č_1, ..., ĉ_k, č_k).
std::vector<Blocks> perm_insertions(const Blocks& x, int m = 0);

// Streaming listing of L(Π_n) without EMPTY; one block-list update per step.
class PermFaceIterator {
 public:
  explicit PermFaceIterator(int n);
  bool next();
  void write_id(std::string& out) const;
  std::string id() const {
    std::string s;
    write_id(s);
    return s;
  }
  Blocks blocks() const;
  int block_count() const { return blocks_; }
  std::size_t last_work() const { return work_; }

 private:
  int n_;
  // doubly linked list of blocks; node 0 is the sentinel
  std::vector<int> nxt_, prv_, free_;
  std::vector<std::uint32_t> mask_;
  std::vector<int> node_of_;
  std::vector<int> t_, len_;
  std::vector<char> rev_;
  int blocks_ = 0;
  std::size_t work_ = 0;

  int alloc(std::uint32_t m);
  void link_after(int node, int at);
  void unlink(int node);
  void step(int j);
};

std::vector<std::string> face_listing_perm(int n);  // ends with EMPTY
CoverGraph perm_face_graph(int n);
std::vector<Blocks> all_ordered_partitions(int n);

// Faces of the B-permutahedron.
struct SignedPartition {
  Blocks blocks;
  std::uint32_t neg = 0;  // elements carrying a minus sign
  bool boxed = false;     // type 2: first block is the unsigned box
  bool operator==(const SignedPartition&) const = default;
};

std::string format_signed(const SignedPartition& x, int n);
SignedPartition parse_signed(const std::string& id);
int signed_rank(const SignedPartition& x, int n);
// c(x): the insertion sequence of element m into x.
std::vector<SignedPartition> bperm_insertions(const SignedPartition& x, int m);

struct BpermFamily {
  using Object = SignedPartition;
  Object base() const { return {}; }
  void expand(const Object& x, int level, std::vector<Object>& out) const { out = bperm_insertions(x, level); }
  bool odd_reversed() const { return false; }
};

std::vector<std::string> face_listing_bperm(int n);  // ends with EMPTY
CoverGraph bperm_face_graph(int n);

// Signed permutations written as singleton signed blocks, e.g. "-2|1".
std::string flag_to_signed_perm(const Flag& flag);

struct FacetCycle {
  std::vector<Flag> flags;
  std::vector<std::string> perms;
  Report report;
};
FacetCycle facet_hamiltonian_bperm(int n);

}  // namespace facewalk
