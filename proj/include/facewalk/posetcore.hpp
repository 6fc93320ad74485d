#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace facewalk {

inline constexpr const char* kEmptyId = "EMPTY";

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an oracle instance exceeds its vertex or search budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default budget, overridden by FACEWALK_BUDGET when set.
std::size_t oracle_budget(std::size_t fallback = 5000);

struct RankedElement {
  std::string id;
  int rank = 0;
};

class CoverGraph {
 public:
  int add(const std::string& id, int rank);
  int find(const std::string& id) const;
  void connect(int u, int v);
  void connect(const std::string& a, const std::string& b);
  bool adjacent(int u, int v) const;

  std::size_t size() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& id(int v) const { return ids_[v]; }
  int rank(int v) const { return ranks_[v]; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  std::vector<RankedElement> elements() const;

 private:
  static std::uint64_t key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (std::uint64_t(std::uint32_t(u)) << 32) | std::uint32_t(v);
  }
  std::vector<std::string> ids_;
  std::vector<int> ranks_;
  std::vector<std::vector<int>> adj_;
  std::unordered_map<std::string, int> index_;
  std::unordered_set<std::uint64_t> edges_;
};

struct Listing {
  std::vector<std::string> ids;
  bool cyclic = true;
};

struct Report {
  bool ok = true;
  long position = 0;  // 1-based position in the listing, 0 when not applicable
  std::string reason;

  static Report pass() { return {}; }
  static Report fail(long pos, std::string why) { return {false, pos, std::move(why)}; }
  std::string str() const;
  explicit operator bool() const { return ok; }
};

Report check_hamiltonian(const CoverGraph& graph, const Listing& listing);

// Backtracking search; throws BudgetExceeded when the graph exceeds `budget`
// vertices or the search exceeds `step_limit` expansions.
std::optional<Listing> brute_force_hamiltonian(const CoverGraph& graph,
                                               std::size_t budget = oracle_budget(),
                                               std::size_t step_limit = 50'000'000);

// Counts f_{-1}, ..., f_d.
std::vector<long long> f_vector(const std::vector<RankedElement>& elements);
std::vector<long long> f_vector(const CoverGraph& graph);
bool check_euler(const std::vector<long long>& f);

struct ListingHeader {
  std::string family;
  int n = 0;
  bool cyclic = true;
};

std::string format_header(const ListingHeader& h);
ListingHeader parse_header(const std::string& line);
// Reads a listing; the header line is optional.
Listing read_listing(std::istream& in, ListingHeader* header = nullptr);
void write_listing(std::ostream& out, const ListingHeader& h, const Listing& l);

}  // namespace facewalk
