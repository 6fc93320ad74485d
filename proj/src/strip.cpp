#include "facewalk/strip.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace facewalk {

void RhombicStrip::add_vertex(const std::string& id, int rank, Rational x) {
  if (ranks.empty()) rmin = rank;
  if (rank < rmin) {
    ranks.insert(ranks.begin(), std::size_t(rmin - rank), {});
    rmin = rank;
  }
  if (rank - rmin >= int(ranks.size())) ranks.resize(std::size_t(rank - rmin + 1));
  ranks[std::size_t(rank - rmin)].push_back({id, x});
}

void RhombicStrip::normalize() {
  for (auto& row : ranks)
    std::stable_sort(row.begin(), row.end(), [](const StripVertex& a, const StripVertex& b) { return a.x < b.x; });
}

std::size_t RhombicStrip::vertex_count() const {
  std::size_t s = 0;
  for (const auto& r : ranks) s += r.size();
  return s;
}

namespace {

struct Vtx {
  int rank;
  Rational x;
};

struct Geometry {
  std::vector<std::string> ids;
  std::vector<Vtx> v;
  std::unordered_map<std::string, int> index;
  struct E {
    int lo, up, wrap;
  };
  std::vector<E> edges;
};

std::string edge_str(const Geometry& g, const Geometry::E& e) {
  std::string s = g.ids[e.lo] + " " + g.ids[e.up];
  if (e.wrap) s += " " + std::to_string(e.wrap);
  return s;
}

// Fills g; returns a failing report on structural problems.
Report load(const RhombicStrip& s, Geometry& g) {
  if (s.ranks.empty()) return Report::fail(0, "empty strip");
  for (std::size_t r = 0; r < s.ranks.size(); ++r) {
    int rank = s.rmin + int(r);
    if (s.ranks[r].empty()) return Report::fail(0, "rank " + std::to_string(rank) + " is empty");
    std::vector<Rational> xs;
    for (const auto& sv : s.ranks[r]) {
      if (sv.x < Rational(0) || sv.x >= Rational(1))
        return Report::fail(0, "coordinate of " + sv.id + " outside [0,1)");
      if (!g.index.emplace(sv.id, int(g.ids.size())).second) return Report::fail(0, "element " + sv.id + " listed twice");
      g.ids.push_back(sv.id);
      g.v.push_back({rank, sv.x});
      xs.push_back(sv.x);
    }
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
      return Report::fail(0, "rank " + std::to_string(rank) + " has repeated x-coordinates");
  }
  std::map<std::pair<int, int>, int> seen;
  for (const auto& e : s.edges) {
    auto a = g.index.find(e.lower), b = g.index.find(e.upper);
    if (a == g.index.end()) return Report::fail(0, "edge endpoint " + e.lower + " not in strip");
    if (b == g.index.end()) return Report::fail(0, "edge endpoint " + e.upper + " not in strip");
    int lo = a->second, up = b->second, w = e.wrap;
    if (g.v[lo].rank == g.v[up].rank + 1) {
      std::swap(lo, up);
      w = -w;
    }
    if (g.v[up].rank != g.v[lo].rank + 1)
      return Report::fail(0, "edge " + e.lower + " " + e.upper + " does not join consecutive ranks");
    if (!seen.emplace(std::make_pair(lo, up), 1).second)
      return Report::fail(0, "edge " + e.lower + " " + e.upper + " appears twice");
    g.edges.push_back({lo, up, w});
  }
  return Report::pass();
}

Rational lifted_upper(const Geometry& g, const Geometry::E& e) { return g.v[e.up].x + Rational(e.wrap); }

Report check_crossings(const Geometry& g, int rmin, int rmax) {
  std::vector<std::vector<int>> band(std::size_t(rmax - rmin + 1));
  for (std::size_t i = 0; i < g.edges.size(); ++i) band[std::size_t(g.v[g.edges[i].lo].rank - rmin)].push_back(int(i));
  for (auto& b : band) {
    if (b.empty()) continue;
    std::sort(b.begin(), b.end(), [&](int i, int j) {
      const auto &ei = g.edges[i], &ej = g.edges[j];
      if (g.v[ei.lo].x != g.v[ej.lo].x) return g.v[ei.lo].x < g.v[ej.lo].x;
      return lifted_upper(g, ei) < lifted_upper(g, ej);
    });
    // translates by k != 0 cannot cross iff the lifted tops span at most one turn
    int lo_i = b[0], hi_i = b[0];
    for (int i : b) {
      if (lifted_upper(g, g.edges[i]) < lifted_upper(g, g.edges[lo_i])) lo_i = i;
      if (lifted_upper(g, g.edges[hi_i]) < lifted_upper(g, g.edges[i])) hi_i = i;
    }
    if (lifted_upper(g, g.edges[hi_i]) - lifted_upper(g, g.edges[lo_i]) > Rational(1))
      return Report::fail(0, "edges cross across the seam: " + edge_str(g, g.edges[lo_i]) + " / " +
                                 edge_str(g, g.edges[hi_i]));
    // same translate: tops must be monotone in the bottoms
    int best = -1;  // edge with the largest top among strictly smaller bottoms
    int group_best = -1;
    for (std::size_t k = 0; k < b.size(); ++k) {
      const auto& e = g.edges[b[k]];
      if (k > 0 && g.v[g.edges[b[k - 1]].lo].x != g.v[e.lo].x) {
        if (best < 0 || lifted_upper(g, g.edges[best]) < lifted_upper(g, g.edges[group_best])) best = group_best;
        group_best = -1;
      }
      if (best >= 0 && lifted_upper(g, e) < lifted_upper(g, g.edges[best]))
        return Report::fail(0, "edges cross: " + edge_str(g, g.edges[best]) + " / " + edge_str(g, e));
      if (group_best < 0 || lifted_upper(g, g.edges[group_best]) < lifted_upper(g, e)) group_best = b[k];
    }
  }
  return Report::pass();
}

struct Traced {
  std::vector<std::vector<int>> faces;  // vertex walks
};

// Rotation at each vertex: up-edges by decreasing lifted x, then down-edges by
// increasing lifted x; this is counterclockwise. Faces are traced with the
// face on the left, so every bounded face appears counterclockwise.
Traced trace_faces(const Geometry& g) {
  const std::size_t n = g.v.size();
  struct Slot {
    int nbr;
    bool up;
    Rational key;
  };
  std::vector<std::vector<Slot>> rot(n);
  for (const auto& e : g.edges) {
    Rational top = lifted_upper(g, e);
    rot[e.lo].push_back({e.up, true, top});
    rot[e.up].push_back({e.lo, false, g.v[e.lo].x - Rational(e.wrap)});
  }
  std::vector<std::unordered_map<int, int>> pos(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto& r = rot[v];
    std::sort(r.begin(), r.end(), [](const Slot& a, const Slot& b) {
      if (a.up != b.up) return a.up;
      return a.up ? b.key < a.key : a.key < b.key;
    });
    for (std::size_t i = 0; i < r.size(); ++i) pos[v][r[i].nbr] = int(i);
  }
  // dart (u -> v) identified by (u, index of v in rot[u])
  std::vector<std::vector<char>> used(n);
  for (std::size_t v = 0; v < n; ++v) used[v].assign(rot[v].size(), 0);
  Traced t;
  for (std::size_t u0 = 0; u0 < n; ++u0) {
    for (std::size_t i0 = 0; i0 < rot[u0].size(); ++i0) {
      if (used[u0][i0]) continue;
      std::vector<int> walk;
      int u = int(u0), i = int(i0);
      while (!used[u][i]) {
        used[u][i] = 1;
        walk.push_back(u);
        int v = rot[u][i].nbr;
        int p = pos[v].at(u);
        int deg = int(rot[v].size());
        int j = (p - 1 + deg) % deg;
        u = v;
        i = j;
      }
      t.faces.push_back(std::move(walk));
    }
  }
  return t;
}

std::string walk_str(const Geometry& g, const std::vector<int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + g.ids[w[i]];
  return s + ")";
}

Report analyze(const RhombicStrip& s, Geometry& g, std::vector<Rhombus>* out) {
  if (auto r = load(s, g); !r) return r;
  if (s.ranks.front().size() != 1 || s.ranks.back().size() != 1)
    return Report::fail(0, "strip needs a single minimal and a single maximal element");
  if (auto r = check_crossings(g, s.rmin, s.rmax()); !r) return r;
  for (std::size_t v = 0; v < g.v.size(); ++v) {
    bool up = false, down = false;
    for (const auto& e : g.edges) {
      if (e.lo == int(v)) up = true;
      if (e.up == int(v)) down = true;
    }
    if ((!up && g.v[v].rank != s.rmax()) || (!down && g.v[v].rank != s.rmin))
      return Report::fail(0, "element " + g.ids[v] + " lacks an edge above or below");
  }
  Traced t = trace_faces(g);
  for (const auto& w : t.faces) {
    if (w.size() != 4) return Report::fail(0, "face " + walk_str(g, w) + " is not a rhombus");
    int b = 0;
    for (int i = 1; i < 4; ++i)
      if (g.v[w[i]].rank < g.v[w[b]].rank) b = i;
    int r = g.v[w[b]].rank;
    int c = w[(b + 1) % 4], d = w[(b + 2) % 4], a = w[(b + 3) % 4];
    if (g.v[c].rank != r + 1 || g.v[a].rank != r + 1 || g.v[d].rank != r + 2 || a == c)
      return Report::fail(0, "face " + walk_str(g, w) + " is not a rhombus");
    if (out) out->push_back({g.ids[w[b]], g.ids[a], g.ids[d], g.ids[c]});
  }
  long long V = (long long)g.v.size(), E = (long long)g.edges.size(), F = (long long)t.faces.size();
  if (V - E + F != 2)
    return Report::fail(0, "embedding is not a cylinder (V-E+F = " + std::to_string(V - E + F) + ")");
  return Report::pass();
}

}  // namespace

Report validate_strip_geometry(const RhombicStrip& s) {
  Geometry g;
  return analyze(s, g, nullptr);
}

Report validate_strip(const RhombicStrip& s, const CoverGraph& graph) {
  Geometry g;
  if (auto r = load(s, g); !r) return r;
  for (std::size_t v = 0; v < g.v.size(); ++v) {
    int u = graph.find(g.ids[v]);
    if (u < 0) return Report::fail(0, "element " + g.ids[v] + " is not in the poset");
    if (graph.rank(u) != g.v[v].rank) return Report::fail(0, "element " + g.ids[v] + " placed at the wrong rank");
  }
  if (g.v.size() != graph.size())
    return Report::fail(0, "strip is not spanning: " + std::to_string(g.v.size()) + " of " +
                               std::to_string(graph.size()) + " elements");
  for (const auto& e : g.edges)
    if (!graph.adjacent(graph.find(g.ids[e.lo]), graph.find(g.ids[e.up])))
      return Report::fail(0, "edge " + edge_str(g, e) + " is not a cover relation");
  Geometry g2;
  return analyze(s, g2, nullptr);
}

Report check_crossings_pairwise(const RhombicStrip& s) {
  Geometry g;
  if (auto r = load(s, g); !r) return r;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
      const auto &e = g.edges[i], &f = g.edges[j];
      if (g.v[e.lo].rank != g.v[f.lo].rank) continue;
      for (int k = -3; k <= 3; ++k) {
        Rational da = g.v[e.lo].x - g.v[f.lo].x - Rational(k);
        Rational db = lifted_upper(g, e) - lifted_upper(g, f) - Rational(k);
        if ((da < Rational(0) && db > Rational(0)) || (da > Rational(0) && db < Rational(0)))
          return Report::fail(0, "edges cross: " + edge_str(g, e) + " / " + edge_str(g, f));
      }
    }
  return Report::pass();
}

std::vector<Rhombus> strip_rhombi(const RhombicStrip& s) {
  Geometry g;
  std::vector<Rhombus> out;
  if (auto r = analyze(s, g, &out); !r) throw InputError("invalid strip: " + r.reason);
  return out;
}

std::vector<Flag> sweep_flags(const RhombicStrip& s) {
  std::vector<Rhombus> rh = strip_rhombi(s);
  std::map<std::tuple<std::string, std::string, std::string>, std::string> step;
  for (const auto& q : rh) step[{q.bottom, q.left, q.top}] = q.right;
  Flag start;
  for (const auto& row : s.ranks) {
    auto it = std::min_element(row.begin(), row.end(), [](const StripVertex& a, const StripVertex& b) { return a.x < b.x; });
    start.push_back(it->id);
  }
  std::vector<Flag> out{start};
  Flag cur = start;
  for (std::size_t guard = 0;; ++guard) {
    if (guard > rh.size()) throw InputError("sweep did not return to its start");
    bool moved = false;
    for (std::size_t i = 1; i + 1 < cur.size(); ++i) {
      auto it = step.find({cur[i - 1], cur[i], cur[i + 1]});
      if (it == step.end()) continue;
      cur[i] = it->second;
      moved = true;
      break;
    }
    if (!moved) throw InputError("sweep is stuck at " + format_flag(cur));
    if (cur == start) break;
    out.push_back(cur);
  }
  return out;
}

Report check_facet_hamiltonian_flags(const std::vector<Flag>& flags, const std::vector<RankedElement>& faces) {
  if (flags.empty()) return Report::fail(0, "empty flag cycle");
  const std::size_t L = flags.size(), len = flags[0].size();
  for (std::size_t i = 0; i < L; ++i)
    if (flags[i].size() != len) return Report::fail(long(i) + 1, "flag has wrong length");
  if (L > 1) {
    for (std::size_t i = 0; i < L; ++i) {
      const Flag &a = flags[i], &b = flags[(i + 1) % L];
      if (L == 2 && i == 1) break;
      int diff = 0;
      for (std::size_t k = 0; k < len; ++k) diff += a[k] != b[k];
      if (diff != 1)
        return Report::fail(long(i) + 1, "flags " + format_flag(a) + " and " + format_flag(b) + " differ in " +
                                             std::to_string(diff) + " positions");
    }
  }
  std::map<Flag, std::size_t> seen;
  for (std::size_t i = 0; i < L; ++i)
    if (!seen.emplace(flags[i], i).second) return Report::fail(long(i) + 1, "flag repeated " + format_flag(flags[i]));
  int lo = 1 << 30, hi = -(1 << 30);
  for (const auto& f : faces) lo = std::min(lo, f.rank), hi = std::max(hi, f.rank);
  std::unordered_map<std::string, std::vector<std::size_t>> where;
  for (std::size_t i = 0; i < L; ++i)
    for (const auto& id : flags[i]) where[id].push_back(i);
  for (const auto& f : faces) {
    if (f.rank == lo || f.rank == hi) continue;
    auto it = where.find(f.id);
    if (it == where.end()) return Report::fail(0, "face " + f.id + " is missed by every flag");
    const auto& p = it->second;
    // count maximal runs in cyclic order
    std::size_t breaks = 0, at = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k)
      if (p[k + 1] != p[k] + 1) ++breaks, at = k;
    bool wraps = p.front() == 0 && p.back() == L - 1;
    std::size_t runs = breaks + 1 - ((wraps && p.size() < L) ? 1 : 0);
    if (p.size() < L && runs > 1) {
      std::size_t k = at;
      return Report::fail(long(p[k]) + 1, "face " + f.id + " is visited in two disjoint arcs ending at " +
                                              std::to_string(p[k] + 1) + " and starting at " +
                                              std::to_string(p[k + 1] + 1));
    }
  }
  return Report::pass();
}

std::vector<std::string> rank_order(const RhombicStrip& s, int rank) {
  std::vector<std::string> out;
  if (rank < s.rmin || rank > s.rmax()) return out;
  auto row = s.ranks[std::size_t(rank - s.rmin)];
  std::sort(row.begin(), row.end(), [](const StripVertex& a, const StripVertex& b) { return a.x < b.x; });
  for (const auto& v : row) out.push_back(v.id);
  return out;
}

bool strips_equivalent(const RhombicStrip& a, const RhombicStrip& b,
                       const std::function<std::string(const std::string&)>& relabel) {
  if (a.rmin != b.rmin || a.ranks.size() != b.ranks.size()) return false;
  std::set<std::pair<std::string, std::string>> ea, eb;
  for (const auto& e : a.edges) ea.insert({relabel(e.lower), relabel(e.upper)});
  for (const auto& e : b.edges) eb.insert({e.lower, e.upper});
  if (ea != eb) return false;
  for (int flip = 0; flip < 2; ++flip) {
    bool all = true;
    for (int r = a.rmin; r <= a.rmax() && all; ++r) {
      auto oa = rank_order(a, r), ob = rank_order(b, r);
      for (auto& id : oa) id = relabel(id);
      if (flip) std::reverse(oa.begin(), oa.end());
      bool match = false;
      for (std::size_t k = 0; k < oa.size() && !match; ++k) {
        match = oa == ob;
        std::rotate(oa.begin(), oa.begin() + 1, oa.end());
      }
      all = match;
    }
    if (all) return true;
  }
  return false;
}

std::string format_flag(const Flag& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ">" : "") + f[i];
  return s;
}

Flag parse_flag(const std::string& line) {
  Flag f;
  std::size_t start = 0;
  while (true) {
    auto k = line.find('>', start);
    f.push_back(line.substr(start, k == std::string::npos ? std::string::npos : k - start));
    if (k == std::string::npos) break;
    start = k + 1;
  }
  for (const auto& id : f)
    if (id.empty()) throw InputError("malformed flag line: " + line);
  return f;
}

void write_strip(std::ostream& out, const RhombicStrip& s) {
  out << "#strip family=" << s.family << " n=" << s.n << '\n';
  for (std::size_t r = 0; r < s.ranks.size(); ++r) {
    auto row = s.ranks[r];
    std::sort(row.begin(), row.end(), [](const StripVertex& a, const StripVertex& b) { return a.x < b.x; });
    out << (s.rmin + int(r)) << ':';
    for (const auto& v : row) out << ' ' << v.id << '@' << v.x.numerator() << '/' << v.x.denominator();
    out << '\n';
  }
  out << "edges:\n";
  for (const auto& e : s.edges) {
    out << e.lower << ' ' << e.upper;
    if (e.wrap) out << ' ' << e.wrap;
    out << '\n';
  }
}

RhombicStrip read_strip(std::istream& in) {
  RhombicStrip s;
  std::string line;
  bool in_edges = false, header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      std::string tok;
      ss >> tok;
      if (tok != "strip") throw InputError("strip header must start with #strip");
      while (ss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        if (tok.substr(0, eq) == "family") s.family = tok.substr(eq + 1);
        if (tok.substr(0, eq) == "n") s.n = std::stoi(tok.substr(eq + 1));
      }
      header = true;
      continue;
    }
    if (line == "edges:") {
      in_edges = true;
      continue;
    }
    std::istringstream ss(line);
    if (!in_edges) {
      auto colon = line.find(':');
      if (colon == std::string::npos) throw InputError("malformed rank line: " + line);
      int rank = 0;
      try {
        rank = std::stoi(line.substr(0, colon));
      } catch (const std::exception&) {
        throw InputError("malformed rank line: " + line);
      }
      std::istringstream rs(line.substr(colon + 1));
      std::string tok;
      while (rs >> tok) {
        auto at = tok.rfind('@');
        auto sl = tok.rfind('/');
        if (at == std::string::npos || sl == std::string::npos || sl < at)
          throw InputError("malformed vertex token " + tok);
        try {
          long long p = std::stoll(tok.substr(at + 1, sl - at - 1));
          long long q = std::stoll(tok.substr(sl + 1));
          if (q <= 0) throw InputError("bad denominator in " + tok);
          s.add_vertex(tok.substr(0, at), rank, Rational(p, q));
        } catch (const InputError&) {
          throw;
        } catch (const std::exception&) {
          throw InputError("malformed vertex token " + tok);
        }
      }
    } else {
      std::string a, b;
      int w = 0;
      if (!(ss >> a >> b)) throw InputError("malformed edge line: " + line);
      if (!(ss >> w)) w = 0;
      s.add_edge(a, b, w);
    }
  }
  if (!header) throw InputError("missing #strip header");
  return s;
}

}  // namespace facewalk
