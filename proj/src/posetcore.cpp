#include "facewalk/posetcore.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace facewalk {

std::size_t oracle_budget(std::size_t fallback) {
  if (const char* env = std::getenv("FACEWALK_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

int CoverGraph::add(const std::string& id, int rank) {
  if (rank < -1) throw InputError("rank below -1 for " + id);
  auto [it, fresh] = index_.emplace(id, int(ids_.size()));
  if (!fresh) throw InputError("duplicate element id " + id);
  ids_.push_back(id);
  ranks_.push_back(rank);
  adj_.emplace_back();
  return it->second;
}

int CoverGraph::find(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

void CoverGraph::connect(int u, int v) {
  if (std::abs(ranks_[u] - ranks_[v]) != 1)
    throw InputError("cover edge " + ids_[u] + " " + ids_[v] + " does not join consecutive ranks");
  if (!edges_.insert(key(u, v)).second) return;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

void CoverGraph::connect(const std::string& a, const std::string& b) {
  int u = find(a), v = find(b);
  if (u < 0) throw InputError("unknown id " + a);
  if (v < 0) throw InputError("unknown id " + b);
  connect(u, v);
}

bool CoverGraph::adjacent(int u, int v) const { return edges_.count(key(u, v)) != 0; }

std::vector<RankedElement> CoverGraph::elements() const {
  std::vector<RankedElement> out;
  out.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) out.push_back({ids_[i], ranks_[i]});
  return out;
}

std::string Report::str() const {
  if (ok) return "OK";
  return "FAIL " + std::to_string(position) + " " + reason;
}

Report check_hamiltonian(const CoverGraph& g, const Listing& l) {
  const auto& ids = l.ids;
  std::vector<long> seen(g.size(), 0);
  int prev = -1;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    long pos = long(i) + 1;
    int v = g.find(ids[i]);
    if (v < 0) return Report::fail(pos, "unknown id " + ids[i]);
    if (seen[v]) return Report::fail(pos, "duplicate id " + ids[i] + " (first at " + std::to_string(seen[v]) + ")");
    seen[v] = pos;
    if (prev >= 0 && !g.adjacent(prev, v))
      return Report::fail(pos, "not a cover pair " + g.id(prev) + " " + ids[i] + " (ranks " +
                                   std::to_string(g.rank(prev)) + "," + std::to_string(g.rank(v)) + ")");
    prev = v;
  }
  if (ids.size() != g.size())
    return Report::fail(long(ids.size()), "not spanning: " + std::to_string(ids.size()) + " of " +
                                              std::to_string(g.size()) + " elements");
  if (l.cyclic && ids.size() > 2) {
    int first = g.find(ids.front());
    if (!g.adjacent(prev, first))
      return Report::fail(long(ids.size()), "wrap-around pair is not a cover pair " + ids.back() + " " + ids.front());
  }
  return Report::pass();
}

namespace {

struct HamSearch {
  const CoverGraph& g;
  std::size_t step_limit;
  std::size_t steps = 0;
  std::vector<std::vector<int>> order;  // branch order per vertex
  std::vector<char> used;
  std::vector<int> free_deg;  // unused neighbours
  std::vector<int> path;
  int start = 0;

  void mark(int v, int delta) {
    for (int w : g.neighbors(v)) free_deg[w] += delta;
  }

  bool dfs(int cur) {
    if (++steps > step_limit) throw BudgetExceeded("instance too large: Hamiltonian search exceeded step limit");
    if (path.size() == g.size()) return path.size() <= 2 || g.adjacent(cur, start);
    for (int w : order[cur]) {
      if (used[w]) continue;
      used[w] = 1;
      mark(w, -1);
      path.push_back(w);
      // every unused vertex needs two usable neighbours: unused ones, the new end, or the start
      bool ok = true;
      for (std::size_t v = 0; v < g.size() && ok; ++v) {
        if (used[v]) continue;
        int avail = free_deg[v] + (g.adjacent(int(v), start) ? 1 : 0) + (g.adjacent(int(v), w) ? 1 : 0);
        if (avail < 2) ok = false;
      }
      if (ok && dfs(w)) return true;
      path.pop_back();
      mark(w, +1);
      used[w] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<Listing> brute_force_hamiltonian(const CoverGraph& g, std::size_t budget, std::size_t step_limit) {
  if (g.size() > budget)
    throw BudgetExceeded("instance too large: " + std::to_string(g.size()) + " vertices exceeds budget " +
                         std::to_string(budget));
  if (g.size() == 0) return std::nullopt;
  HamSearch s{g, step_limit, 0, {}, {}, {}, {}, 0};
  const std::size_t n = g.size();
  auto less = [&](int a, int b) {
    if (g.neighbors(a).size() != g.neighbors(b).size()) return g.neighbors(a).size() < g.neighbors(b).size();
    return g.id(a) < g.id(b);
  };
  s.order.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    s.order[v] = g.neighbors(int(v));
    std::sort(s.order[v].begin(), s.order[v].end(), less);
  }
  std::vector<int> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = int(v);
  s.start = *std::min_element(all.begin(), all.end(), less);
  s.used.assign(n, 0);
  s.free_deg.resize(n);
  for (std::size_t v = 0; v < n; ++v) s.free_deg[v] = int(g.neighbors(int(v)).size());
  if (n >= 3)
    for (std::size_t v = 0; v < n; ++v)
      if (g.neighbors(int(v)).size() < 2) return std::nullopt;
  s.used[s.start] = 1;
  s.mark(s.start, -1);
  s.path.push_back(s.start);
  if (!s.dfs(s.start)) return std::nullopt;
  Listing out;
  for (int v : s.path) out.ids.push_back(g.id(v));
  return out;
}

std::vector<long long> f_vector(const std::vector<RankedElement>& elements) {
  int top = -1;
  for (const auto& e : elements) top = std::max(top, e.rank);
  std::vector<long long> f(std::size_t(top + 2), 0);
  for (const auto& e : elements) {
    if (e.rank < -1) throw InputError("rank below -1 for " + e.id);
    ++f[std::size_t(e.rank + 1)];
  }
  if (f.empty() || f[0] != 1) throw InputError("f-vector needs exactly one bottom element of rank -1");
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] == 0) throw InputError("ranks are not contiguous: rank " + std::to_string(int(i) - 1) + " is empty");
  return f;
}

std::vector<long long> f_vector(const CoverGraph& g) { return f_vector(g.elements()); }

bool check_euler(const std::vector<long long>& f) {
  long long s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i % 2 == 0 ? -1 : 1) * f[i];
  return s == 0;
}

std::string format_header(const ListingHeader& h) {
  return "#family=" + h.family + " n=" + std::to_string(h.n) + " cyclic=" + (h.cyclic ? "1" : "0");
}

ListingHeader parse_header(const std::string& line) {
  if (line.empty() || line[0] != '#') throw InputError("listing header must start with '#'");
  ListingHeader h;
  std::istringstream ss(line.substr(1));
  std::string tok;
  bool seen_family = false;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw InputError("malformed header token " + tok);
    std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
    try {
      if (k == "family") {
        h.family = v;
        seen_family = true;
      } else if (k == "n") {
        h.n = std::stoi(v);
      } else if (k == "cyclic") {
        h.cyclic = std::stoi(v) != 0;
      }
    } catch (const std::exception&) {
      throw InputError("malformed header value " + tok);
    }
  }
  if (!seen_family) throw InputError("listing header lacks family=");
  return h;
}

Listing read_listing(std::istream& in, ListingHeader* header) {
  Listing l;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first && !line.empty() && line[0] == '#') {
      ListingHeader h = parse_header(line);
      l.cyclic = h.cyclic;
      if (header) *header = h;
      first = false;
      continue;
    }
    first = false;
    if (line.empty()) continue;
    l.ids.push_back(line);
  }
  return l;
}

void write_listing(std::ostream& out, const ListingHeader& h, const Listing& l) {
  out << format_header(h) << '\n';
  for (const auto& id : l.ids) out << id << '\n';
}

}  // namespace facewalk
