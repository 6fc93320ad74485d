#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "facewalk/posetcore.hpp"
#include "facewalk/zigzag.hpp"

namespace facewalk {

// Vertices 1..n in perfect elimination order: the earlier neighbours of every
// vertex form a clique. Bit (v-1) of a mask stands for internal vertex v.
struct ChordalGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;  // adj[v-1]
  std::vector<int> label;          // user label of internal vertex v at label[v-1]
};

struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

SimpleGraph read_simple_graph(std::istream& in);
void write_simple_graph(std::ostream& out, const SimpleGraph& g);

bool is_chordal(const SimpleGraph& g);
// Relabels by maximum cardinality search; rejects non-chordal or edgeless input.
ChordalGraph make_chordal_graph(const SimpleGraph& g);
bool is_elimination_order(const ChordalGraph& h);

using Tube = std::uint32_t;
using Tubing = std::vector<Tube>;  // sorted

bool is_tube(const ChordalGraph& h, Tube t);
bool compatible(const ChordalGraph& h, Tube a, Tube b);
bool is_tubing(const ChordalGraph& h, const Tubing& t, int upto);
std::string format_tubing(const ChordalGraph& h, const Tubing& t);
inline int tubing_rank(const ChordalGraph& h, const Tubing& t) { return h.n - int(t.size()); }

// Tubes of t meeting the earlier neighbourhood of vertex m, in increasing order.
std::vector<Tube> nested_tubes(const ChordalGraph& h, const Tubing& t, int m);
// č_i and ĉ_i for inserting vertex m into a tubing of H[1..m-1].
Tubing tubing_insert_bar(const ChordalGraph& h, const Tubing& t, int m, int i);
Tubing tubing_insert_join(const ChordalGraph& h, const Tubing& t, int m, int i);
std::vector<Tubing> gassoc_insertions(const ChordalGraph& h, const Tubing& t, int m);

struct GassocFamily {
  using Object = Tubing;
  const ChordalGraph* h = nullptr;
  Object base() const { return {}; }
  void expand(const Object& x, int level, std::vector<Object>& out) const { out = gassoc_insertions(*h, x, level); }
  bool odd_reversed() const { return true; }
};

std::vector<std::string> face_listing_graph_assoc(const ChordalGraph& h);  // ends with EMPTY
std::vector<Tubing> enumerate_tubings(const ChordalGraph& h);
CoverGraph gassoc_face_graph(const ChordalGraph& h);

SimpleGraph complete_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph matching_graph(int pairs);

}  // namespace facewalk
