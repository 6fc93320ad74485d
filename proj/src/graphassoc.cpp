#include "facewalk/graphassoc.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace facewalk {

SimpleGraph read_simple_graph(std::istream& in) {
  SimpleGraph g;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto k = line.find("n=");
      if (k == std::string::npos) throw InputError("graph header needs n=");
      g.n = std::stoi(line.substr(k + 2));
      header = true;
      continue;
    }
    std::istringstream ss(line);
    int a, b;
    if (!(ss >> a >> b)) throw InputError("malformed edge line: " + line);
    g.edges.push_back({a, b});
  }
  if (!header) throw InputError("missing #graph header");
  for (auto [a, b] : g.edges)
    if (a < 1 || b < 1 || a > g.n || b > g.n || a == b) throw InputError("edge out of range or loop");
  return g;
}

void write_simple_graph(std::ostream& out, const SimpleGraph& g) {
  out << "#graph n=" << g.n << '\n';
  for (auto [a, b] : g.edges) out << a << ' ' << b << '\n';
}

namespace {

std::vector<std::uint32_t> adjacency(const SimpleGraph& g) {
  if (g.n < 1 || g.n > 30) throw InputError("graph needs 1 <= n <= 30");
  std::vector<std::uint32_t> adj(std::size_t(g.n), 0);
  for (auto [a, b] : g.edges) {
    if (a < 1 || b < 1 || a > g.n || b > g.n || a == b) throw InputError("edge out of range or loop");
    adj[std::size_t(a - 1)] |= 1u << (b - 1);
    adj[std::size_t(b - 1)] |= 1u << (a - 1);
  }
  return adj;
}

// Maximum cardinality search, ties to the smallest label, starting from the
// smallest non-isolated vertex.
std::vector<int> mcs_order(const std::vector<std::uint32_t>& adj) {
  const int n = int(adj.size());
  std::vector<int> weight(std::size_t(n), 0), order;
  std::vector<char> done(std::size_t(n), 0);
  int start = 0;
  while (start < n && adj[std::size_t(start)] == 0) ++start;
  if (start == n) start = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    if (step == 0) {
      best = start;
    } else {
      for (int v = 0; v < n; ++v)
        if (!done[std::size_t(v)] && (best < 0 || weight[std::size_t(v)] > weight[std::size_t(best)])) best = v;
    }
    done[std::size_t(best)] = 1;
    order.push_back(best);
    for (int w = 0; w < n; ++w)
      if (adj[std::size_t(best)] >> w & 1u) ++weight[std::size_t(w)];
  }
  return order;
}

bool earlier_cliques(const std::vector<std::uint32_t>& adj) {
  for (std::size_t v = 0; v < adj.size(); ++v) {
    std::uint32_t earlier = adj[v] & ((1u << v) - 1);
    for (std::uint32_t m = earlier; m; m &= m - 1) {
      int u = std::countr_zero(m);
      if ((earlier & ~(1u << u) & ~adj[std::size_t(u)]) != 0) return false;
    }
  }
  return true;
}

bool connected(const std::vector<std::uint32_t>& adj, std::uint32_t t) {
  if (!t) return false;
  std::uint32_t seen = t & (~t + 1), frontier = seen;
  while (frontier) {
    std::uint32_t nb = 0;
    for (std::uint32_t m = frontier; m; m &= m - 1) nb |= adj[std::size_t(std::countr_zero(m))];
    frontier = nb & t & ~seen;
    seen |= frontier;
  }
  return seen == t;
}

}  // namespace

bool is_chordal(const SimpleGraph& g) {
  auto adj = adjacency(g);
  auto order = mcs_order(adj);
  std::vector<int> pos(adj.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[std::size_t(order[i])] = int(i);
  std::vector<std::uint32_t> re(adj.size(), 0);
  for (std::size_t v = 0; v < adj.size(); ++v)
    for (std::size_t w = 0; w < adj.size(); ++w)
      if (adj[v] >> w & 1u) re[std::size_t(pos[v])] |= 1u << pos[w];
  return earlier_cliques(re);
}

ChordalGraph make_chordal_graph(const SimpleGraph& g) {
  auto adj = adjacency(g);
  if (g.edges.empty()) throw InputError("graph has no edges");
  auto order = mcs_order(adj);
  std::vector<int> pos(adj.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[std::size_t(order[i])] = int(i);
  ChordalGraph h;
  h.n = g.n;
  h.adj.assign(adj.size(), 0);
  h.label.resize(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    h.label[std::size_t(pos[v])] = int(v) + 1;
    for (std::size_t w = 0; w < adj.size(); ++w)
      if (adj[v] >> w & 1u) h.adj[std::size_t(pos[v])] |= 1u << pos[w];
  }
  if (!is_elimination_order(h)) throw InputError("graph is not chordal");
  return h;
}

bool is_elimination_order(const ChordalGraph& h) { return earlier_cliques(h.adj); }

bool is_tube(const ChordalGraph& h, Tube t) { return connected(h.adj, t); }

bool compatible(const ChordalGraph& h, Tube a, Tube b) {
  if (!is_tube(h, a) || !is_tube(h, b)) throw InputError("compatible: argument is not a tube");
  if ((a & b) == a || (a & b) == b) return true;
  if (a & b) return false;
  for (std::uint32_t m = a; m; m &= m - 1)
    if (h.adj[std::size_t(std::countr_zero(m))] & b) return false;
  return true;
}

bool is_tubing(const ChordalGraph& h, const Tubing& t, int upto) {
  std::uint32_t all = upto >= 32 ? ~0u : (1u << upto) - 1;
  std::vector<std::uint32_t> adj(h.adj.begin(), h.adj.begin() + upto);
  for (auto& a : adj) a &= all;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if ((t[i] & ~all) || !connected(adj, t[i])) return false;
    if (i && !(t[i - 1] < t[i])) return false;
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Tube a = t[i], b = t[j];
      if ((a & b) == a || (a & b) == b) continue;
      if (a & b) return false;
      for (std::uint32_t m = a; m; m &= m - 1)
        if (adj[std::size_t(std::countr_zero(m))] & b) return false;
    }
  // every component present
  std::uint32_t left = all;
  while (left) {
    std::uint32_t comp = left & (~left + 1), fr = comp;
    while (fr) {
      std::uint32_t nb = 0;
      for (std::uint32_t m = fr; m; m &= m - 1) nb |= adj[std::size_t(std::countr_zero(m))];
      fr = nb & ~comp;
      comp |= fr;
    }
    if (!std::binary_search(t.begin(), t.end(), comp)) return false;
    left &= ~comp;
  }
  return true;
}

std::string format_tubing(const ChordalGraph& h, const Tubing& t) {
  std::vector<std::vector<int>> tubes;
  for (Tube m : t) {
    std::vector<int> v;
    for (; m; m &= m - 1) v.push_back(h.label[std::size_t(std::countr_zero(m))]);
    std::sort(v.begin(), v.end());
    tubes.push_back(v);
  }
  std::sort(tubes.begin(), tubes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::string s;
  for (std::size_t i = 0; i < tubes.size(); ++i) {
    if (i) s += ';';
    s += '{';
    for (std::size_t j = 0; j < tubes[i].size(); ++j) s += (j ? "," : "") + std::to_string(tubes[i][j]);
    s += '}';
  }
  return s;
}

std::vector<Tube> nested_tubes(const ChordalGraph& h, const Tubing& t, int m) {
  std::uint32_t nb = h.adj[std::size_t(m - 1)] & ((1u << (m - 1)) - 1);
  std::vector<Tube> out;
  for (Tube x : t)
    if (x & nb) out.push_back(x);
  std::sort(out.begin(), out.end(), [](Tube a, Tube b) { return std::popcount(a) < std::popcount(b); });
  for (std::size_t i = 1; i < out.size(); ++i)
    if ((out[i - 1] & out[i]) != out[i - 1]) throw InputError("tubes meeting the neighbourhood are not nested");
  return out;
}

namespace {

Tubing build(const Tubing& t, const std::vector<Tube>& T, int m, int keep_upto, int join_from) {
  const Tube bit = 1u << (m - 1);
  Tubing out;
  for (Tube x : t)
    if (std::find(T.begin(), T.end(), x) == T.end()) out.push_back(x);
  for (int j = 1; j <= keep_upto; ++j) out.push_back(T[std::size_t(j - 1)]);
  for (int j = join_from; j <= int(T.size()); ++j) out.push_back((j == 0 ? 0u : T[std::size_t(j - 1)]) | bit);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Tubing tubing_insert_bar(const ChordalGraph& h, const Tubing& t, int m, int i) {
  auto T = nested_tubes(h, t, m);
  if (T.empty()) {
    if (i != 0) throw InputError("tubing_insert_bar index out of range");
    Tubing out = t;
    out.push_back(1u << (m - 1));
    std::sort(out.begin(), out.end());
    return out;
  }
  if (i < 0 || i > int(T.size())) throw InputError("tubing_insert_bar index out of range");
  return build(t, T, m, i, i);
}

Tubing tubing_insert_join(const ChordalGraph& h, const Tubing& t, int m, int i) {
  auto T = nested_tubes(h, t, m);
  if (i < 1 || i > int(T.size())) throw InputError("tubing_insert_join index out of range");
  return build(t, T, m, i - 1, i);
}

std::vector<Tubing> gassoc_insertions(const ChordalGraph& h, const Tubing& t, int m) {
  auto T = nested_tubes(h, t, m);
  std::vector<Tubing> out;
  out.push_back(T.empty() ? tubing_insert_bar(h, t, m, 0) : build(t, T, m, 0, 0));
  for (int i = 1; i <= int(T.size()); ++i) {
    out.push_back(build(t, T, m, i - 1, i));
    out.push_back(build(t, T, m, i, i));
  }
  return out;
}

std::vector<std::string> face_listing_graph_assoc(const ChordalGraph& h) {
  if (!is_elimination_order(h)) throw InputError("vertex order is not a perfect elimination order");
  bool any = false;
  for (auto a : h.adj) any |= a != 0;
  if (!any) throw InputError("graph has no edges");
  ZigzagIterator<GassocFamily> it(GassocFamily{&h}, h.n);
  std::vector<std::string> out{format_tubing(h, it.current())};
  while (it.next()) out.push_back(format_tubing(h, it.current()));
  out.push_back(kEmptyId);
  return out;
}

std::vector<Tubing> enumerate_tubings(const ChordalGraph& h) {
  if (h.n > 9) throw BudgetExceeded("instance too large: tubing enumeration supports n <= 9");
  const std::uint32_t all = (1u << h.n) - 1;
  std::vector<Tube> comps, others;
  for (std::uint32_t t = 1; t <= all; ++t) {
    if (!connected(h.adj, t)) continue;
    std::uint32_t nb = 0;
    for (std::uint32_t m = t; m; m &= m - 1) nb |= h.adj[std::size_t(std::countr_zero(m))];
    if ((nb & ~t) == 0)
      comps.push_back(t);
    else
      others.push_back(t);
  }
  auto compat = [&](Tube a, Tube b) {
    if ((a & b) == a || (a & b) == b) return true;
    if (a & b) return false;
    for (std::uint32_t m = a; m; m &= m - 1)
      if (h.adj[std::size_t(std::countr_zero(m))] & b) return false;
    return true;
  };
  std::vector<Tubing> out;
  Tubing cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    Tubing t = cur;
    t.insert(t.end(), comps.begin(), comps.end());
    std::sort(t.begin(), t.end());
    out.push_back(t);
    if (out.size() > oracle_budget() * 20) throw BudgetExceeded("instance too large: tubing enumeration budget exceeded");
    for (std::size_t i = from; i < others.size(); ++i) {
      bool ok = true;
      for (Tube x : cur)
        if (!compat(x, others[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(others[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

CoverGraph gassoc_face_graph(const ChordalGraph& h) {
  auto all = enumerate_tubings(h);
  if (all.size() + 1 > oracle_budget() * 20) throw BudgetExceeded("instance too large: tubing oracle budget exceeded");
  std::uint32_t full = (1u << h.n) - 1;
  CoverGraph g;
  g.add(kEmptyId, -1);
  for (const auto& t : all) g.add(format_tubing(h, t), tubing_rank(h, t));
  for (const auto& t : all) {
    std::string id = format_tubing(h, t);
    if (tubing_rank(h, t) == 0) g.connect(kEmptyId, id);
    for (std::size_t i = 0; i < t.size(); ++i) {
      Tube x = t[i];
      std::uint32_t nb = 0;
      for (std::uint32_t m = x; m; m &= m - 1) nb |= h.adj[std::size_t(std::countr_zero(m))];
      if ((nb & ~x & full) == 0) continue;  // component tube
      Tubing u = t;
      u.erase(u.begin() + long(i));
      g.connect(id, format_tubing(h, u));
    }
  }
  return g;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g{n, {}};
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) g.edges.push_back({a, b});
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g{n, {}};
  for (int a = 1; a < n; ++a) g.edges.push_back({a, a + 1});
  return g;
}

SimpleGraph matching_graph(int pairs) {
  SimpleGraph g{2 * pairs, {}};
  for (int i = 0; i < pairs; ++i) g.edges.push_back({2 * i + 1, 2 * i + 2});
  return g;
}

}  // namespace facewalk
