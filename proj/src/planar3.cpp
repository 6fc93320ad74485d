#include "facewalk/planar3.hpp"

#include <algorithm>
#include <istream>
#include <list>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "facewalk/assoc.hpp"
#include "facewalk/perm.hpp"

namespace facewalk {

namespace {

using Dart = std::pair<int, int>;

struct Embedded {
  PlaneFaces pf;
  std::map<Dart, int> left;  // face on the left of each dart
  int face_of(int u, int v) const { return left.at({u, v}); }
};

Chord norm(int u, int v) { return u < v ? Chord{u, v} : Chord{v, u}; }

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size() || a.empty()) return false;
  auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  const std::size_t n = a.size(), off = std::size_t(it - b.begin());
  bool fwd = true, bwd = true;
  for (std::size_t i = 0; i < n; ++i) {
    fwd = fwd && a[i] == b[(off + i) % n];
    bwd = bwd && a[i] == b[(off + n - i) % n];
  }
  return fwd || bwd;
}

Embedded embed(const PlaneGraph& h, bool need_outer = true) {
  if (h.m < 3) throw InputError("plane graph needs at least 3 vertices");
  if (int(h.rot.size()) != h.m + 1) throw InputError("rotation system size does not match vertex count");
  std::set<Chord> edges;
  for (int v = 1; v <= h.m; ++v) {
    std::set<int> seen;
    for (int w : h.rot[std::size_t(v)]) {
      if (w < 1 || w > h.m || w == v) throw InputError("vertex " + std::to_string(v) + ": bad neighbour " + std::to_string(w));
      if (!seen.insert(w).second) throw InputError("vertex " + std::to_string(v) + ": repeated neighbour");
      edges.insert(norm(v, w));
    }
  }
  for (auto [u, v] : edges) {
    const auto& ru = h.rot[std::size_t(u)];
    const auto& rv = h.rot[std::size_t(v)];
    if (std::find(ru.begin(), ru.end(), v) == ru.end() || std::find(rv.begin(), rv.end(), u) == rv.end())
      throw InputError("rotation system is not symmetric at edge " + edge_cell(u, v));
  }
  // connectivity
  std::vector<char> seen(std::size_t(h.m) + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : h.rot[std::size_t(v)])
      if (!seen[std::size_t(w)]) {
        seen[std::size_t(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != h.m) throw InputError("plane graph is disconnected");

  Embedded em;
  std::vector<std::unordered_map<int, int>> pos(std::size_t(h.m) + 1);
  for (int v = 1; v <= h.m; ++v)
    for (std::size_t i = 0; i < h.rot[std::size_t(v)].size(); ++i) pos[std::size_t(v)][h.rot[std::size_t(v)][i]] = int(i);
  for (int u0 = 1; u0 <= h.m; ++u0) {
    for (int v0 : h.rot[std::size_t(u0)]) {
      if (em.left.count({u0, v0})) continue;
      int id = int(em.pf.faces.size());
      std::vector<int> walk;
      int u = u0, v = v0;
      while (!em.left.count({u, v})) {
        em.left[{u, v}] = id;
        walk.push_back(u);
        const auto& rv = h.rot[std::size_t(v)];
        int d = int(rv.size());
        int w = rv[std::size_t((pos[std::size_t(v)].at(u) - 1 + d) % d)];
        u = v;
        v = w;
      }
      em.pf.faces.push_back(std::move(walk));
    }
  }
  em.pf.edge_count = edges.size();
  long chi = long(h.m) - long(edges.size()) + long(em.pf.faces.size());
  if (chi != 2) throw InputError("rotation system is not planar (Euler characteristic " + std::to_string(chi) + ")");
  for (const auto& f : em.pf.faces) {
    std::set<int> s(f.begin(), f.end());
    if (s.size() != f.size()) throw InputError("plane graph is not 2-connected: face " + face_cell(f) + " is not a cycle");
  }
  if (!need_outer) return em;
  if (h.outer.empty()) throw InputError("outer face not given");
  for (std::size_t i = 0; i < em.pf.faces.size(); ++i)
    if (same_cycle(h.outer, em.pf.faces[i])) em.pf.outer = int(i);
  if (em.pf.outer < 0) throw InputError("outer cycle is not a face of the embedding");
  return em;
}

}  // namespace

PlaneFaces plane_faces(const PlaneGraph& h) { return embed(h).pf; }

std::string vertex_cell(int v) { return std::to_string(v); }

std::string edge_cell(int u, int v) {
  if (u > v) std::swap(u, v);
  return std::to_string(u) + "-" + std::to_string(v);
}

std::string face_cell(const std::vector<int>& cycle) {
  const std::size_t n = cycle.size();
  std::size_t k = std::size_t(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  std::string s = "[";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) s += ',';
    s += std::to_string(cycle[(k + i) % n]);
  }
  return s + "]";
}

SimpleGraph skeleton(const PlaneGraph& h) {
  SimpleGraph g;
  g.n = h.m;
  for (int v = 1; v <= h.m; ++v)
    for (int w : h.rot[std::size_t(v)])
      if (v < w) g.edges.push_back({v, w});
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

PlaneGraph embed_planar(const SimpleGraph& g) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::property<boost::vertex_index_t, int>,
                                   boost::property<boost::edge_index_t, int>>;
  BG bg(std::size_t(g.n));
  std::set<Chord> uniq;
  for (auto [u, v] : g.edges) {
    if (u < 1 || v < 1 || u > g.n || v > g.n || u == v) throw InputError("edge out of range or loop");
    uniq.insert(norm(u, v));
  }
  int k = 0;
  for (auto [u, v] : uniq) {
    auto e = boost::add_edge(std::size_t(u - 1), std::size_t(v - 1), bg).first;
    boost::put(boost::edge_index, bg, e, k++);
  }
  using Edge = boost::graph_traits<BG>::edge_descriptor;
  std::vector<std::vector<Edge>> emb(std::size_t(g.n));
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg)));
  if (!planar) throw InputError("graph is not planar");
  PlaneGraph h;
  h.m = g.n;
  h.rot.resize(std::size_t(g.n) + 1);
  for (int v = 1; v <= g.n; ++v)
    for (const auto& e : emb[std::size_t(v - 1)]) {
      int a = int(boost::source(e, bg)) + 1, b = int(boost::target(e, bg)) + 1;
      h.rot[std::size_t(v)].push_back(a == v ? b : a);
    }
  PlaneFaces pf = embed(h, false).pf;
  const std::vector<int>* best = nullptr;
  std::string best_id;
  for (const auto& f : pf.faces) {
    std::string id = face_cell(f);
    if (!best || f.size() > best->size() || (f.size() == best->size() && id < best_id)) {
      best = &f;
      best_id = id;
    }
  }
  h.outer = *best;
  embed(h);  // full validation
  return h;
}

PlaneGraph read_plane_graph(std::istream& in) {
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream ss(all);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty() || line == "\r") continue;
    if (line.rfind("#graph", 0) == 0) {
      std::istringstream again(all);
      return embed_planar(read_simple_graph(again));
    }
    break;
  }
  ss.clear();
  ss.str(all);
  PlaneGraph h;
  std::map<int, std::vector<int>> rot;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw InputError("malformed plane graph line: " + line);
    std::string key = line.substr(0, colon);
    std::istringstream rest(line.substr(colon + 1));
    std::vector<int> vals;
    int x;
    while (rest >> x) vals.push_back(x);
    if (!rest.eof()) throw InputError("malformed plane graph line: " + line);
    if (key == "outer") {
      h.outer = vals;
      continue;
    }
    int v;
    try {
      v = std::stoi(key);
    } catch (const std::exception&) {
      throw InputError("malformed plane graph line: " + line);
    }
    if (v < 1 || rot.count(v)) throw InputError("bad or repeated vertex " + key);
    rot[v] = vals;
  }
  if (rot.empty()) throw InputError("empty plane graph");
  h.m = rot.rbegin()->first;
  if (int(rot.size()) != h.m) throw InputError("vertices must be numbered 1..m");
  h.rot.resize(std::size_t(h.m) + 1);
  for (auto& [v, r] : rot) h.rot[std::size_t(v)] = r;
  if (h.outer.empty()) {
    // default to a longest face of the given rotation system
    for (const auto& f : embed(h, false).pf.faces)
      if (f.size() > h.outer.size()) h.outer = f;
  }
  embed(h);
  return h;
}

void write_plane_graph(std::ostream& out, const PlaneGraph& h) {
  out << "#plane m=" << h.m << '\n';
  for (int v = 1; v <= h.m; ++v) {
    out << v << ':';
    for (int w : h.rot[std::size_t(v)]) out << ' ' << w;
    out << '\n';
  }
  out << "outer:";
  for (int v : h.outer) out << ' ' << v;
  out << '\n';
}

CoverGraph cells(const PlaneGraph& h) {
  Embedded em = embed(h);
  CoverGraph g;
  g.add(kEmptyId, -1);
  for (int v = 1; v <= h.m; ++v) {
    g.add(vertex_cell(v), 0);
    g.connect(kEmptyId, vertex_cell(v));
  }
  for (int v = 1; v <= h.m; ++v)
    for (int w : h.rot[std::size_t(v)])
      if (v < w) {
        g.add(edge_cell(v, w), 1);
        g.connect(vertex_cell(v), edge_cell(v, w));
        g.connect(vertex_cell(w), edge_cell(v, w));
      }
  g.add(kTopCellId, 3);
  for (const auto& f : em.pf.faces) {
    std::string id = face_cell(f);
    g.add(id, 2);
    for (std::size_t i = 0; i < f.size(); ++i) g.connect(edge_cell(f[i], f[(i + 1) % f.size()]), id);
    g.connect(id, kTopCellId);
  }
  return g;
}

namespace {

struct Ear {
  std::string face;
  std::vector<std::string> segment;  // e_s, v_s, ..., v_{t-1}, e_t
  std::string anchor;                // d_r
};

struct PathParts {
  std::vector<std::string> path;
  std::vector<int> outer_walk;  // original outer walk v_k, v_1, ..., v_{k-1}
  std::string outer_face;
};

PathParts build_path(const PlaneGraph& h) {
  Embedded em = embed(h);
  const auto& faces = em.pf.faces;
  const int OUT = em.pf.outer;
  // outer walk O: O[0] = v_k, e_i = (O[i-1], O[i]), e_k = (O[k-1], O[0])
  std::vector<int> O = faces[std::size_t(OUT)];
  std::rotate(O.begin(), std::min_element(O.begin(), O.end()), O.end());
  PathParts parts;
  parts.outer_walk = O;
  parts.outer_face = face_cell(faces[std::size_t(OUT)]);
  const int k0 = int(O.size());
  // the face across each edge from a given face
  std::map<Chord, std::array<int, 2>> sides;
  for (const auto& [d, f] : em.left) {
    auto key = norm(d.first, d.second);
    sides[key][d.first < d.second ? 0 : 1] = f;
  }
  auto across = [&](int u, int v, int from) {
    const auto& s = sides.at(norm(u, v));
    return s[0] == from ? s[1] : s[0];
  };
  const int f = across(O[std::size_t(k0 - 1)], O[0], OUT);
  std::vector<char> alive(faces.size(), 1);
  alive[std::size_t(OUT)] = 0;
  std::size_t inner = faces.size() - 1;
  std::vector<Ear> ears;
  while (inner > 1) {
    const int k = int(O.size());
    std::unordered_map<int, int> pos;
    for (int i = 0; i < k; ++i) pos[O[std::size_t(i)]] = i;
    std::vector<int> g(std::size_t(k), -1);  // g[i] = inner face across e_i
    for (int i = 1; i < k; ++i) g[std::size_t(i)] = across(O[std::size_t(i - 1)], O[std::size_t(i)], OUT);
    bool done = false;
    for (int s = 1; s < k && !done; ++s) {
      int cand = g[std::size_t(s)];
      if (cand == f || (s > 1 && g[std::size_t(s - 1)] == cand)) continue;
      int t = s;
      while (t + 1 < k && g[std::size_t(t + 1)] == cand) ++t;
      bool contiguous = true;
      for (int i = t + 1; i < k; ++i) contiguous = contiguous && g[std::size_t(i)] != cand;
      if (!contiguous) continue;
      const auto& cyc = faces[std::size_t(cand)];
      const int L = int(cyc.size());
      int a = O[std::size_t(s - 1)], b = O[std::size_t(t)];
      int ia = int(std::find(cyc.begin(), cyc.end(), a) - cyc.begin());
      int next_on_walk = O[std::size_t(s)];  // v_s, or v_t when s == t
      int dir = cyc[std::size_t((ia + 1) % L)] == next_on_walk ? -1 : 1;
      std::vector<int> dpath{a};
      for (int i = (ia + dir + L) % L; cyc[std::size_t(i)] != b; i = (i + dir + L) % L) dpath.push_back(cyc[std::size_t(i)]);
      dpath.push_back(b);
      bool clean = true;
      for (std::size_t i = 1; i + 1 < dpath.size(); ++i) clean = clean && !pos.count(dpath[i]);
      if (!clean) continue;
      Ear ear;
      ear.face = face_cell(cyc);
      for (int i = s; i <= t; ++i) {
        ear.segment.push_back(edge_cell(O[std::size_t(i - 1)], O[std::size_t(i)]));
        if (i < t) ear.segment.push_back(vertex_cell(O[std::size_t(i)]));
      }
      ear.anchor = edge_cell(dpath[dpath.size() - 2], b);
      ears.push_back(std::move(ear));
      for (std::size_t i = 0; i + 1 < dpath.size(); ++i) {
        auto& sd = sides.at(norm(dpath[i], dpath[i + 1]));
        for (int& x : sd)
          if (x == cand) x = OUT;
      }
      std::vector<int> O2(O.begin(), O.begin() + s);
      O2.insert(O2.end(), dpath.begin() + 1, dpath.end() - 1);
      O2.insert(O2.end(), O.begin() + t, O.end());
      O = std::move(O2);
      alive[std::size_t(cand)] = 0;
      --inner;
      done = true;
    }
    if (!done) throw InputError("no removable face found; embedding is not 2-connected");
  }
  // base: the single remaining face f with walk (e_1, v_1, ..., e_k, v_k)
  std::list<std::string> path{face_cell(faces[std::size_t(f)])};
  std::unordered_map<std::string, std::list<std::string>::iterator> where;
  const int k = int(O.size());
  for (int i = 1; i <= k; ++i) {
    int u = O[std::size_t(i - 1)], v = O[std::size_t(i % k)];
    path.push_back(edge_cell(u, v));
    where[path.back()] = std::prev(path.end());
    path.push_back(vertex_cell(v));
  }
  for (auto it = ears.rbegin(); it != ears.rend(); ++it) {
    auto at = std::next(where.at(it->anchor));
    path.insert(at, it->face);
    for (const auto& c : it->segment) {
      auto p = path.insert(at, c);
      if (c.find('-') != std::string::npos) where[c] = p;
    }
  }
  parts.path.assign(path.begin(), path.end());
  return parts;
}

}  // namespace

Listing cell_ham_path(const PlaneGraph& h) { return {build_path(h).path, false}; }

Listing cell_ham_cycle(const PlaneGraph& h) {
  PathParts p = build_path(h);
  const auto& O = p.outer_walk;
  std::string ek = edge_cell(O.back(), O[0]), vk = vertex_cell(O[0]);
  std::vector<std::string> ids = std::move(p.path);
  ids.resize(ids.size() - 2);
  for (auto s : {std::string(kEmptyId), vk, ek, p.outer_face, std::string(kTopCellId)}) ids.push_back(s);
  return {std::move(ids), true};
}

std::vector<Chord> cycle_chords(const PlaneGraph& h, const std::vector<int>& c) {
  const std::size_t n = c.size();
  if (int(n) != h.m) throw InputError("cycle does not visit every vertex");
  std::set<Chord> on;
  std::set<int> vs(c.begin(), c.end());
  if (vs.size() != n || *vs.begin() < 1 || *vs.rbegin() > h.m) throw InputError("cycle repeats or misses vertices");
  for (std::size_t i = 0; i < n; ++i) on.insert(norm(c[i], c[(i + 1) % n]));
  std::vector<Chord> out;
  SimpleGraph g = skeleton(h);
  std::set<Chord> es(g.edges.begin(), g.edges.end());
  for (const auto& e : on)
    if (!es.count(e)) throw InputError("cycle uses a non-edge " + edge_cell(e.first, e.second));
  for (const auto& e : g.edges)
    if (!on.count(e)) out.push_back(e);
  return out;
}

ChordCheck check_chord_condition(const PlaneGraph& h, const std::vector<int>& c) {
  auto chords = cycle_chords(h, c);
  const int n = int(c.size());
  ChordCheck res;
  for (int orient = 0; orient < 2; ++orient) {
    std::vector<int> cyc = c;
    if (orient) std::reverse(cyc.begin(), cyc.end());
    for (int r = 0; r < n; ++r) {
      std::unordered_map<int, int> pos;  // 1-based index in the rotated cycle
      for (int i = 0; i < n; ++i) pos[cyc[std::size_t((r + i) % n)]] = i + 1;
      struct Iv {
        int lo, hi;
        Chord ch;
      };
      std::vector<Iv> iv;
      for (const auto& ch : chords) {
        int x = pos[ch.first], y = pos[ch.second];
        if (x > y) std::swap(x, y);
        iv.push_back({x, y, ch});
        if (x == 1) iv.push_back({y, n + 1, ch});  // v_{n+1} = v_1
      }
      std::sort(iv.begin(), iv.end(), [](const Iv& a, const Iv& b) { return a.hi < b.hi || (a.hi == b.hi && a.lo > b.lo); });
      int end = 0, cnt = 0;
      for (const auto& v : iv)
        if (v.lo >= end) {
          res.witness[std::size_t(cnt)] = v.ch;
          end = v.hi;
          if (++cnt == 3) {
            res.ok = false;
            return res;
          }
        }
    }
  }
  res.witness = {};
  return res;
}

namespace {

// Side of every face relative to cycle c: true = inside (away from the outer face).
std::vector<char> face_sides(const PlaneGraph& h, const Embedded& em, const std::vector<int>& c) {
  std::set<Chord> on;
  for (std::size_t i = 0; i < c.size(); ++i) on.insert(norm(c[i], c[(i + 1) % c.size()]));
  const std::size_t F = em.pf.faces.size();
  std::vector<int> side(F, -1);
  side[std::size_t(em.pf.outer)] = 0;
  std::vector<int> q{em.pf.outer};
  while (!q.empty()) {
    int f = q.back();
    q.pop_back();
    const auto& cyc = em.pf.faces[std::size_t(f)];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      int g = em.face_of(v, u);
      int want = on.count(norm(u, v)) ? 1 - side[std::size_t(f)] : side[std::size_t(f)];
      if (side[std::size_t(g)] < 0) {
        side[std::size_t(g)] = want;
        q.push_back(g);
      } else if (side[std::size_t(g)] != want) {
        throw InputError("cycle does not separate the faces consistently");
      }
    }
  }
  (void)h;
  return std::vector<char>(side.begin(), side.end());
}

}  // namespace

std::optional<ChordDecomposition> split_paths(const PlaneGraph& h, const std::vector<int>& c) {
  auto chords = cycle_chords(h, c);
  const int n = int(c.size());
  Embedded em = embed(h);
  auto side = face_sides(h, em, c);
  for (int i = 0; i < n; ++i) {
    for (int len = 1; len < n; ++len) {
      std::set<int> A;
      for (int j = 0; j < len; ++j) A.insert(c[std::size_t((i + j) % n)]);
      bool ok = true;
      for (const auto& ch : chords) ok = ok && (A.count(ch.first) != A.count(ch.second));
      if (!ok) continue;
      ChordDecomposition d;
      for (int j = 0; j < n; ++j) (j < len ? d.a : d.b).push_back(c[std::size_t((i + j) % n)]);
      for (const auto& ch : chords) (side[std::size_t(em.face_of(ch.first, ch.second))] ? d.x : d.y).push_back(ch);
      d.e = {d.b.back(), d.a.front()};
      d.e2 = {d.a.back(), d.b.front()};
      return d;
    }
  }
  return std::nullopt;
}

ChordDecomposition swap_roles(const PlaneGraph& h, const ChordDecomposition& d) {
  (void)h;
  ChordDecomposition s = d;
  std::swap(s.a, s.b);
  std::swap(s.e, s.e2);
  return s;
}

namespace {

// Assigns coordinates i/len per row and computes the wraps that make every
// band a ladder. rows[r] is the cyclic order of rank rmin + r.
RhombicStrip strip_from_orders(const std::string& family, int n, int rmin, const std::vector<std::vector<std::string>>& rows,
                               const std::vector<std::pair<std::string, std::string>>& edges) {
  RhombicStrip s;
  s.family = family;
  s.n = n;
  std::unordered_map<std::string, std::pair<int, int>> at;  // id -> (row, index)
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      s.add_vertex(rows[r][i], rmin + int(r), Rational(long(i), long(rows[r].size())));
      at[rows[r][i]] = {int(r), int(i)};
    }
  std::vector<std::set<std::pair<int, int>>> band(rows.size());
  for (const auto& [lo, up] : edges) {
    auto a = at.at(lo), b = at.at(up);
    if (b.first != a.first + 1) throw InputError("strip edge " + lo + " " + up + " skips a rank");
    band[std::size_t(a.first)].insert({a.second, b.second});
  }
  for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
    const auto& B = band[r];
    const int p = int(rows[r].size()), q = int(rows[r + 1].size());
    if (p == 1 || q == 1) {
      for (auto [l, u] : B) s.add_edge(rows[r][std::size_t(l)], rows[r + 1][std::size_t(u)], 0);
      continue;
    }
    if (int(B.size()) != p + q) throw InputError("band at rank " + std::to_string(rmin + int(r)) + " is not a ladder");
    bool placed = false;
    for (auto [l0, u0] : B) {
      if (l0 != 0) continue;
      // walk l = 0..p, u = u0..u0+q, advancing one side per step; small
      // bands can offer both moves, so backtrack
      std::vector<std::pair<std::pair<int, int>, std::pair<int, long>>> walk;  // (edge, unreduced l and u)
      std::set<std::pair<int, int>> used;
      std::function<bool(int, long)> go = [&](int l, long u) {
        if (l == p && u == u0 + q) return used == B;
        std::pair<int, int> e{l % p, int(u % q)};
        if (used.count(e)) return false;
        used.insert(e);
        walk.push_back({e, {l, u}});
        if (l < p && B.count({(l + 1) % p, int(u % q)}) && go(l + 1, u)) return true;
        if (u < u0 + q && B.count({l % p, int((u + 1) % q)}) && go(l, u + 1)) return true;
        used.erase(e);
        walk.pop_back();
        return false;
      };
      bool ok = go(0, u0);
      if (!ok) continue;
      // shift so the first lifted top sits within half a turn of x = 0
      long shift = (2 * long(u0) > q) ? -1 : 0;
      for (const auto& [e, lu] : walk) {
        long lifted_turns = lu.second / q - lu.first / p + shift;
        s.add_edge(rows[r][std::size_t(e.first)], rows[r + 1][std::size_t(e.second)], int(lifted_turns));
      }
      placed = true;
      break;
    }
    if (!placed) throw InputError("band at rank " + std::to_string(rmin + int(r)) + " is not a ladder");
  }
  return s;
}

}  // namespace

RhombicStrip strip_from_cycle(const PlaneGraph& h, const ChordDecomposition& d) {
  Embedded em = embed(h);
  std::vector<int> cyc = d.a;
  cyc.insert(cyc.end(), d.b.begin(), d.b.end());
  const int n = int(cyc.size());
  auto chords = cycle_chords(h, cyc);
  auto side = face_sides(h, em, cyc);
  std::set<int> A(d.a.begin(), d.a.end());
  std::set<Chord> X(d.x.begin(), d.x.end()), Y(d.y.begin(), d.y.end());
  for (const auto& ch : chords) {
    if (A.count(ch.first) == A.count(ch.second)) throw InputError("chord " + edge_cell(ch.first, ch.second) + " does not straddle the split");
    if (!X.count(ch) && !Y.count(ch)) throw InputError("chord missing from the decomposition");
  }
  // attachment vertex of every chord
  std::map<int, std::set<int>> attached;
  for (const auto& ch : chords) {
    bool inside = X.count(ch) > 0;
    int v = (A.count(ch.first) > 0) == inside ? ch.first : ch.second;
    attached[v].insert(ch.first == v ? ch.second : ch.first);
  }
  std::vector<std::string> row0, row1;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int j = 0; j < n; ++j) {
    int v = cyc[std::size_t(j)], prev = cyc[std::size_t((j + n - 1) % n)], next = cyc[std::size_t((j + 1) % n)];
    row0.push_back(vertex_cell(v));
    edges.push_back({kEmptyId, vertex_cell(v)});
    const auto& R = h.rot[std::size_t(v)];
    const int deg = int(R.size());
    int ip = int(std::find(R.begin(), R.end(), prev) - R.begin());
    int in = int(std::find(R.begin(), R.end(), next) - R.begin());
    std::vector<int> arc1, arc2;
    for (int i = (ip + 1) % deg; i != in; i = (i + 1) % deg) arc1.push_back(R[std::size_t(i)]);
    for (int i = (ip - 1 + deg) % deg; i != in; i = (i - 1 + deg) % deg) arc2.push_back(R[std::size_t(i)]);
    const auto& S = attached[v];
    auto contains_all = [&](const std::vector<int>& arc) {
      std::size_t c = 0;
      for (int w : arc) c += S.count(w);
      return c == S.size();
    };
    const auto& arc = contains_all(arc1) ? arc1 : arc2;
    if (!contains_all(arc)) throw InputError("chords at vertex " + vertex_cell(v) + " lie on both sides");
    for (int w : arc)
      if (S.count(w)) {
        row1.push_back(edge_cell(v, w));
        edges.push_back({vertex_cell(v), edge_cell(v, w)});
      }
    row1.push_back(edge_cell(v, next));
    edges.push_back({vertex_cell(v), edge_cell(v, next)});
    edges.push_back({vertex_cell(next), edge_cell(v, next)});
  }
  // faces over each rank-1 element
  std::set<Chord> dual_edges(chords.begin(), chords.end());
  dual_edges.insert(norm(d.e.first, d.e.second));
  dual_edges.insert(norm(d.e2.first, d.e2.second));
  std::unordered_map<std::string, std::vector<int>> ups;
  for (int u = 1; u <= h.m; ++u)
    for (int w : h.rot[std::size_t(u)]) {
      if (u > w) continue;
      int f1 = em.face_of(u, w), f2 = em.face_of(w, u);
      std::vector<int>& list = ups[edge_cell(u, w)];
      if (dual_edges.count({u, w})) {
        list = {f1, f2};
      } else {
        bool want_inside = A.count(u) && A.count(w);
        list = {side[std::size_t(f1)] == char(want_inside) ? f1 : f2};
      }
    }
  std::vector<int> fseq;
  auto start = std::find_if(row1.begin(), row1.end(), [&](const std::string& id) { return ups[id].size() == 1; });
  if (start == row1.end()) start = row1.begin();
  std::size_t s0 = std::size_t(start - row1.begin());
  for (std::size_t k = 0; k < row1.size(); ++k) {
    const auto& id = row1[(s0 + k) % row1.size()];
    const auto& fs = ups[id];
    if (fs.size() == 1) {
      if (fseq.empty() || fseq.back() != fs[0]) fseq.push_back(fs[0]);
    } else if (fseq.empty()) {
      fseq = {fs[0], fs[1]};
    } else if (fseq.back() == fs[0]) {
      fseq.push_back(fs[1]);
    } else if (fseq.back() == fs[1]) {
      fseq.push_back(fs[0]);
    } else {
      throw InputError("faces do not follow the dual cycle at " + id);
    }
  }
  if (fseq.size() > 1 && fseq.front() == fseq.back()) fseq.pop_back();
  std::set<int> distinct(fseq.begin(), fseq.end());
  if (distinct.size() != fseq.size() || fseq.size() != em.pf.faces.size())
    throw InputError("faces do not follow the dual cycle");
  std::vector<std::string> row2;
  for (int f : fseq) {
    row2.push_back(face_cell(em.pf.faces[std::size_t(f)]));
    edges.push_back({row2.back(), kTopCellId});
  }
  for (const auto& id : row1)
    for (int f : ups[id]) edges.push_back({id, face_cell(em.pf.faces[std::size_t(f)])});
  return strip_from_orders("planar3", h.m, -1, {{kEmptyId}, row0, row1, row2, {kTopCellId}}, edges);
}

void for_each_hamiltonian_cycle(const std::vector<std::vector<int>>& adj,
                                const std::function<bool(const std::vector<int>&)>& visit, std::size_t step_limit) {
  const int m = int(adj.size()) - 1;
  if (m < 3) return;
  std::vector<char> used(std::size_t(m) + 1, 0);
  std::vector<int> path{1};
  used[1] = 1;
  std::size_t steps = 0;
  bool stop = false;
  std::function<void()> dfs = [&] {
    if (stop) return;
    if (++steps > step_limit) throw BudgetExceeded("Hamiltonian cycle search exceeded its step budget");
    int v = path.back();
    if (int(path.size()) == m) {
      if (path[1] < path.back() && std::find(adj[std::size_t(v)].begin(), adj[std::size_t(v)].end(), 1) != adj[std::size_t(v)].end())
        stop = !visit(path);
      return;
    }
    for (int w : adj[std::size_t(v)]) {
      if (used[std::size_t(w)]) continue;
      used[std::size_t(w)] = 1;
      path.push_back(w);
      dfs();
      path.pop_back();
      used[std::size_t(w)] = 0;
      if (stop) return;
    }
  };
  dfs();
}

namespace {

std::vector<std::vector<int>> adjacency(const SimpleGraph& g) {
  std::vector<std::vector<int>> adj(std::size_t(g.n) + 1);
  for (auto [u, v] : g.edges) {
    adj[std::size_t(u)].push_back(v);
    adj[std::size_t(v)].push_back(u);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

bool has_hamiltonian_cycle(const SimpleGraph& g) {
  bool found = false;
  for_each_hamiltonian_cycle(adjacency(g), [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace

bool primal_hamiltonian(const PlaneGraph& h) { return has_hamiltonian_cycle(skeleton(h)); }

bool dual_hamiltonian(const PlaneGraph& h) {
  Embedded em = embed(h);
  SimpleGraph d;
  d.n = int(em.pf.faces.size());
  for (const auto& [dart, f] : em.left) {
    int g = em.face_of(dart.second, dart.first);
    if (f < g) d.edges.push_back({f + 1, g + 1});
  }
  return has_hamiltonian_cycle(d);
}

StripDecision decide_rhombic_strip(const PlaneGraph& h, int max_vertices) {
  if (h.m > max_vertices)
    throw BudgetExceeded("oracle budget exceeded: " + std::to_string(h.m) + " vertices > " + std::to_string(max_vertices));
  CoverGraph lattice = cells(h);
  StripDecision res;
  for_each_hamiltonian_cycle(adjacency(skeleton(h)), [&](const std::vector<int>& c) {
    ++res.cycles;
    ChordCheck cc = check_chord_condition(h, c);
    if (res.cycles == 1) {
      res.cycle = c;
      res.witness = cc;
    }
    if (!cc.ok) return true;
    auto dec = split_paths(h, c);
    if (!dec) throw std::logic_error("chord condition holds but no split exists");
    RhombicStrip s = strip_from_cycle(h, *dec);
    if (Report r = validate_strip(s, lattice); !r) throw std::logic_error("constructed strip is invalid: " + r.str());
    res.found = true;
    res.cycle = c;
    res.witness = cc;
    res.strip = std::move(s);
    return false;
  });
  return res;
}

namespace {

PlaneGraph from_edges(int n, const std::vector<Chord>& edges) {
  SimpleGraph g;
  g.n = n;
  g.edges = edges;
  return embed_planar(g);
}

}  // namespace

PlaneGraph fixture_truncated_tetra(int s) {
  if (s < 0) throw InputError("s must be >= 0");
  std::vector<Chord> e{{1, 2}, {2, 3}, {1, 3}, {4, 6},  {7, 8},  {8, 9},  {7, 9},   {10, 11}, {11, 12},
                       {10, 12}, {3, 4}, {6, 7}, {9, 10}, {12, 1}, {2, 8}, {5, 11}, {5, 6}};
  // the edge 4-5 is subdivided by a_1..a_s and 6-5 by b_1..b_s
  const int n = 12 + 2 * s;
  auto a = [&](int i) { return i == 0 ? 4 : i == s + 1 ? 5 : 12 + i; };
  auto b = [&](int i) { return i == 0 ? 6 : i == s + 1 ? 5 : 12 + s + i; };
  e.erase(std::find(e.begin(), e.end(), Chord{5, 6}));
  for (int i = 0; i <= s; ++i) {
    e.push_back(norm(a(i), a(i + 1)));
    e.push_back(norm(b(i), b(i + 1)));
  }
  for (int i = 1; i <= s; ++i) e.push_back({a(i), b(i)});
  return from_edges(n, e);
}

PlaneGraph fixture_fano() {
  return from_edges(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 7}, {1, 6}, {2, 6}, {5, 7}, {1, 3}, {3, 6}, {3, 5}, {1, 4}, {1, 5}});
}

PlaneGraph fixture_cube() {
  return from_edges(8, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {5, 6}, {6, 7}, {7, 8}, {5, 8}, {1, 5}, {2, 6}, {3, 7}, {4, 8}});
}

PlaneGraph fixture_prism(int k) {
  if (k < 3) throw InputError("prism needs k >= 3");
  std::vector<Chord> e;
  for (int i = 1; i <= k; ++i) {
    int j = i % k + 1;
    e.push_back(norm(i, j));
    e.push_back(norm(k + i, k + j));
    e.push_back({i, k + i});
  }
  return from_edges(2 * k, e);
}

SimpleGraph skeleton_of(const CoverGraph& g, std::vector<std::string>* names) {
  std::unordered_map<int, int> num;
  SimpleGraph s;
  std::vector<std::string> ids;
  for (int v = 0; v < int(g.size()); ++v)
    if (g.rank(v) == 0) {
      ids.push_back(g.id(v));
      num[v] = int(ids.size());
    }
  s.n = int(ids.size());
  for (int v = 0; v < int(g.size()); ++v) {
    if (g.rank(v) != 1) continue;
    std::vector<int> ends;
    for (int w : g.neighbors(v))
      if (g.rank(w) == 0) ends.push_back(num.at(w));
    if (ends.size() != 2) throw InputError("rank-1 element " + g.id(v) + " is not an edge");
    s.edges.push_back(norm(ends[0], ends[1]));
  }
  std::sort(s.edges.begin(), s.edges.end());
  if (names) *names = std::move(ids);
  return s;
}

PlaneGraph fixture_permutahedron3() { return embed_planar(skeleton_of(perm_face_graph(4))); }

PlaneGraph fixture_associahedron3() { return embed_planar(skeleton_of(assoc_face_graph(6))); }

}  // namespace facewalk
