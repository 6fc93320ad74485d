#pragma once

#include <string>
#include <utility>
#include <vector>

#include "facewalk/posetcore.hpp"
#include "facewalk/zigzag.hpp"

namespace facewalk {

// Non-crossing diagonals of a convex n-gon with vertices 1..n.
struct Dissection {
  int n = 3;
  std::vector<std::pair<int, int>> diags;  // sorted, first < second
  bool operator==(const Dissection&) const = default;
};

std::string format_dissection(const Dissection& d);
Dissection parse_dissection(const std::string& id, int n);
bool diagonals_cross(std::pair<int, int> a, std::pair<int, int> b);
bool is_valid_dissection(const Dissection& d);
inline int dissection_rank(const Dissection& d) { return d.n - 3 - int(d.diags.size()); }

// Neighbours v_1 = 1 < ... < v_k = n-1 of vertex n.
std::vector<int> last_vertex_neighbors(const Dissection& d);
// ĉ_i for 2 <= i <= k.
Dissection expand_vertex(const Dissection& d, int i);
// č_i for 1 <= i <= k.
Dissection expand_vertex_with_diagonal(const Dissection& d, int i);
// c⃗(X) = (č_1, ĉ_2, č_2, ..., ĉ_k, č_k).
std::vector<Dissection> assoc_insertions(const Dissection& d);

struct AssocFamily {
  using Object = Dissection;
  Object base() const { return {}; }
  void expand(const Object& x, int, std::vector<Object>& out) const;
  bool odd_reversed() const { return true; }
};

class AssocFaceIterator {
 public:
  explicit AssocFaceIterator(int n);
  bool next() { return it_.next(); }
  const Dissection& current() const { return it_.current(); }
  void write_id(std::string& out) const;
  std::size_t last_work() const { return it_.last_work(); }

 private:
  ZigzagIterator<AssocFamily> it_;
};

std::vector<std::string> face_listing_assoc(int n);  // ends with EMPTY
std::vector<Dissection> all_dissections(int n);
CoverGraph assoc_face_graph(int n);

}  // namespace facewalk
