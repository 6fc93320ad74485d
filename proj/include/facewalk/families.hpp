#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "facewalk/graphassoc.hpp"
#include "facewalk/planar3.hpp"
#include "facewalk/posetcore.hpp"
#include "facewalk/quotient.hpp"

namespace facewalk {

// A family plus whatever input it needs.
struct FamilySpec {
  std::string family;  // cube | perm | bperm | assoc | gassoc | quotientope | planar3
  int n = 0;
  std::optional<SimpleGraph> graph;       // gassoc
  std::optional<Congruence> congruence;   // quotientope
  std::optional<PlaneGraph> plane;        // planar3
};

const std::vector<std::string>& family_names();
// Checks the family name and inputs; fills n from the input file when needed.
void check_spec(FamilySpec& s);

ListingHeader listing_header(const FamilySpec& s);
void stream_listing(const FamilySpec& s, const std::function<void(const std::string&)>& emit);
Listing generate_listing(const FamilySpec& s);

// Rank of an id in the family's face lattice (EMPTY is -1).
int face_rank(const FamilySpec& s, const std::string& id);

// Predicted size of the oracle cover graph (EMPTY included), or 0 if unknown.
unsigned long long predicted_faces(const FamilySpec& s);
// Builds the brute-force oracle; throws BudgetExceeded past oracle_budget().
CoverGraph family_cover_graph(const FamilySpec& s);
Report verify_family_listing(const FamilySpec& s, const Listing& l);

unsigned long long fubini(int n);
unsigned long long little_schroeder(int polygon);  // dissections of a convex polygon
unsigned long long bperm_faces(int n);              // without EMPTY

struct BenchResult {
  std::string family;
  int n = 0;
  unsigned long long faces = 0;
  double seconds = 0;
  std::size_t max_work = 0;
  double mean_work = 0;
  double rate() const { return seconds > 0 ? double(faces) / seconds : 0; }
};

// Streams a cube, perm or assoc listing without storing it.
BenchResult bench_family(const std::string& family, int n);

}  // namespace facewalk
