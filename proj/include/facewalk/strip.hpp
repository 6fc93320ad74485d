#pragma once

#include <boost/rational.hpp>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "facewalk/posetcore.hpp"

namespace facewalk {

using Rational = boost::rational<long long>;

struct StripVertex {
  std::string id;
  Rational x;
};

// An edge between consecutive ranks. The upper endpoint is drawn at
// x(upper) + wrap, so wrap = +-1 marks an edge that crosses the seam.
struct StripEdge {
  std::string lower, upper;
  int wrap = 0;
};

struct RhombicStrip {
  std::string family;
  int n = 0;
  int rmin = 0;
  std::vector<std::vector<StripVertex>> ranks;  // ranks[r - rmin]
  std::vector<StripEdge> edges;

  int rmax() const { return rmin + int(ranks.size()) - 1; }
  void add_vertex(const std::string& id, int rank, Rational x);
  void add_edge(const std::string& lower, const std::string& upper, int wrap = 0) {
    edges.push_back({lower, upper, wrap});
  }
  // Sorts every rank by x.
  void normalize();
  std::size_t vertex_count() const;
};

struct Rhombus {
  std::string bottom, left, top, right;
};

using Flag = std::vector<std::string>;

Report validate_strip(const RhombicStrip& strip, const CoverGraph& graph);

// Same checks minus the comparison with an underlying cover graph.
Report validate_strip_geometry(const RhombicStrip& strip);

// Pairwise crossing test over all translates; quadratic, used to cross-check.
Report check_crossings_pairwise(const RhombicStrip& strip);

// Faces of a geometrically valid strip. Throws InputError otherwise.
std::vector<Rhombus> strip_rhombi(const RhombicStrip& strip);

std::vector<Flag> sweep_flags(const RhombicStrip& strip);

Report check_facet_hamiltonian_flags(const std::vector<Flag>& flags, const std::vector<RankedElement>& faces);

// Cyclic horizontal order of one rank.
std::vector<std::string> rank_order(const RhombicStrip& strip, int rank);

// Same ranks, same edge set and the same cyclic order on every rank (up to one
// common rotation-or-reflection per rank) after relabelling a's ids.
bool strips_equivalent(const RhombicStrip& a, const RhombicStrip& b,
                       const std::function<std::string(const std::string&)>& relabel);

std::string format_flag(const Flag& f);
Flag parse_flag(const std::string& line);

void write_strip(std::ostream& out, const RhombicStrip& s);
RhombicStrip read_strip(std::istream& in);

}  // namespace facewalk
