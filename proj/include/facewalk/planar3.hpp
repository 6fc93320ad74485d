#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facewalk/graphassoc.hpp"
#include "facewalk/posetcore.hpp"
#include "facewalk/strip.hpp"

namespace facewalk {

inline constexpr const char* kTopCellId = "H";

// Vertices 1..m. rot[v] lists the neighbours of v in counterclockwise order
// (rot[0] is unused); outer is the vertex cycle of the designated outer face.
struct PlaneGraph {
  int m = 0;
  std::vector<std::vector<int>> rot;
  std::vector<int> outer;
};

struct PlaneFaces {
  std::vector<std::vector<int>> faces;  // vertex cycles
  int outer = -1;
  std::size_t edge_count = 0;
};

// Traces faces and checks the embedding: symmetric simple rotation system,
// connected, Euler genus 0, every face a simple cycle (2-connected) and the
// outer cycle present. Throws InputError otherwise.
PlaneFaces plane_faces(const PlaneGraph& h);

SimpleGraph skeleton(const PlaneGraph& h);
// Planar embedding via Boyer-Myrvold; the outer face is a longest face.
PlaneGraph embed_planar(const SimpleGraph& g);

PlaneGraph read_plane_graph(std::istream& in);  // also accepts "#graph" edge lists
void write_plane_graph(std::ostream& out, const PlaneGraph& h);

std::string vertex_cell(int v);
std::string edge_cell(int u, int v);
// Boundary in traced order starting at the smallest vertex; the outer face
// reads in the opposite sense to the inner ones.
std::string face_cell(const std::vector<int>& cycle);

// G(L(H)) with EMPTY, vertices, edges, faces and H.
CoverGraph cells(const PlaneGraph& h);

// Path through all cells except EMPTY, H and the outer face.
Listing cell_ham_path(const PlaneGraph& h);
Listing cell_ham_cycle(const PlaneGraph& h);

using Chord = std::pair<int, int>;

struct ChordCheck {
  bool ok = true;
  std::array<Chord, 3> witness{};
};

// Chords of the Hamiltonian cycle c, i.e. edges of h not on c.
std::vector<Chord> cycle_chords(const PlaneGraph& h, const std::vector<int>& c);
ChordCheck check_chord_condition(const PlaneGraph& h, const std::vector<int>& c);

struct ChordDecomposition {
  std::vector<int> a, b;   // the cycle is a followed by b
  std::vector<Chord> x, y;  // chords inside / outside the cycle
  Chord e, e2;              // cycle edges (b.back, a.front) and (a.back, b.front)
};

std::optional<ChordDecomposition> split_paths(const PlaneGraph& h, const std::vector<int>& c);
ChordDecomposition swap_roles(const PlaneGraph& h, const ChordDecomposition& d);
RhombicStrip strip_from_cycle(const PlaneGraph& h, const ChordDecomposition& d);

// Visits Hamiltonian cycles starting at vertex 1 with c[1] < c.back(); the
// callback returns false to stop. Throws BudgetExceeded past step_limit.
void for_each_hamiltonian_cycle(const std::vector<std::vector<int>>& adj,
                                const std::function<bool(const std::vector<int>&)>& visit,
                                std::size_t step_limit = 200'000'000);

bool primal_hamiltonian(const PlaneGraph& h);
bool dual_hamiltonian(const PlaneGraph& h);

struct StripDecision {
  bool found = false;
  std::vector<int> cycle;           // satisfying cycle, or the first one tested
  std::optional<RhombicStrip> strip;
  ChordCheck witness;               // violation for the first cycle when !found
  std::size_t cycles = 0;           // Hamiltonian cycles examined
};

StripDecision decide_rhombic_strip(const PlaneGraph& h, int max_vertices = 18);

// Fixtures. In H_s the subdivision vertices a_i are 12+i and b_i are 12+s+i.
PlaneGraph fixture_truncated_tetra(int s);
PlaneGraph fixture_fano();
PlaneGraph fixture_cube();
PlaneGraph fixture_prism(int k);
PlaneGraph fixture_permutahedron3();
PlaneGraph fixture_associahedron3();

// Vertex skeleton of a face lattice; names[v-1] is the id of vertex v.
SimpleGraph skeleton_of(const CoverGraph& g, std::vector<std::string>* names = nullptr);

}  // namespace facewalk
