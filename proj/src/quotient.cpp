#include "facewalk/quotient.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "facewalk/zigzag.hpp"

namespace facewalk {

std::uint32_t open_interval(int a, int b) {
  if (b - a < 2) return 0;
  return ((1u << (b - 1)) - 1) & ~((1u << a) - 1);
}

std::string format_fence(const Fence& f) {
  std::string s = "fence " + std::to_string(f.a) + " " + std::to_string(f.b) + " {";
  bool first = true;
  for (std::uint32_t m = f.L; m; m &= m - 1) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(std::countr_zero(m) + 1);
  }
  return s + "}";
}

std::vector<Fence> all_fences(int n) {
  std::vector<Fence> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      std::uint32_t I = open_interval(a, b);
      for (std::uint32_t L = I;; L = (L - 1) & I) {
        out.push_back({a, b, L});
        if (!L) break;
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool forcing_leq(const Fence& lo, const Fence& up) {
  return lo.a <= up.a && up.a < up.b && up.b <= lo.b && (lo.L & open_interval(up.a, up.b)) == up.L;
}

bool Congruence::contains(const Fence& f) const { return std::binary_search(fences.begin(), fences.end(), f); }

Congruence downset_closure(int n, const std::vector<Fence>& gens) {
  for (const auto& g : gens)
    if (g.a < 1 || g.b > n || g.a >= g.b || (g.L & ~open_interval(g.a, g.b)))
      throw InputError("invalid fence " + format_fence(g));
  Congruence c;
  c.n = n;
  for (const auto& f : all_fences(n))
    for (const auto& g : gens)
      if (forcing_leq(f, g)) {
        c.fences.push_back(f);
        break;
      }
  return c;
}

bool is_downset(const Congruence& c) {
  for (const auto& f : c.fences)
    for (const auto& g : all_fences(c.n))
      if (forcing_leq(g, f) && !c.contains(g)) return false;
  return true;
}

Congruence restrict_congruence(const Congruence& c) {
  if (c.n < 2) throw InputError("restrict needs n >= 2");
  Congruence r;
  r.n = c.n - 1;
  for (const auto& f : c.fences)
    if (f.b < c.n) r.fences.push_back(f);
  return r;
}

Congruence read_congruence(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Fence> gens;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto k = line.find("n=");
      if (k == std::string::npos) throw InputError("congruence header needs n=");
      n = std::stoi(line.substr(k + 2));
      continue;
    }
    std::istringstream ss(line);
    std::string kw, set;
    Fence f;
    if (!(ss >> kw >> f.a >> f.b) || kw != "fence") throw InputError("malformed fence line: " + line);
    std::getline(ss, set);
    auto l = set.find('{'), r = set.find('}');
    if (l == std::string::npos || r == std::string::npos || r < l) throw InputError("malformed fence line: " + line);
    std::string inner = set.substr(l + 1, r - l - 1);
    std::replace(inner.begin(), inner.end(), ',', ' ');
    std::istringstream es(inner);
    int e;
    while (es >> e) {
      if (e < 1 || e > 30) throw InputError("malformed fence line: " + line);
      f.L |= 1u << (e - 1);
    }
    gens.push_back(f);
  }
  if (n < 1) throw InputError("missing #congruence header");
  return downset_closure(n, gens);
}

void write_congruence(std::ostream& out, int n, const std::vector<Fence>& gens) {
  out << "#congruence n=" << n << '\n';
  for (const auto& f : gens) out << format_fence(f) << '\n';
}

Fence edge_fence(const std::vector<int>& p, int i) {
  int x = p[std::size_t(i)], y = p[std::size_t(i + 1)];
  Fence f{std::min(x, y), std::max(x, y), 0};
  std::uint32_t I = open_interval(f.a, f.b);
  for (int k = 0; k < i; ++k)
    if (I >> (p[std::size_t(k)] - 1) & 1u) f.L |= 1u << (p[std::size_t(k)] - 1);
  return f;
}

namespace {

std::uint64_t perm_key(const std::vector<int>& p) {
  std::uint64_t k = 0;
  for (int v : p) k = k * 16 + std::uint64_t(v);
  return k;
}

}  // namespace

int PermClasses::index(const std::vector<int>& p) const {
  // lexicographic rank
  int r = 0;
  std::vector<int> rest(static_cast<std::size_t>(n));
  std::iota(rest.begin(), rest.end(), 1);
  int fact = 1;
  for (int i = 2; i < n; ++i) fact *= i;
  for (int i = 0; i < n; ++i) {
    auto it = std::find(rest.begin(), rest.end(), p[std::size_t(i)]);
    r += int(it - rest.begin()) * fact;
    rest.erase(it);
    if (n - 1 - i > 0) fact /= (n - 1 - i);
  }
  return r;
}

PermClasses perm_classes(const Congruence& c) {
  if (c.n > 8) throw BudgetExceeded("instance too large: permutation classes support n <= 8");
  PermClasses pc;
  pc.n = c.n;
  std::vector<int> p(std::size_t(c.n));
  std::iota(p.begin(), p.end(), 1);
  std::unordered_map<std::uint64_t, int> idx;
  do {
    idx[perm_key(p)] = int(pc.perms.size());
    pc.perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<int> parent(pc.perms.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[std::size_t(x)] != x) x = parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
    return x;
  };
  for (std::size_t k = 0; k < pc.perms.size(); ++k) {
    const auto& q = pc.perms[k];
    for (int i = 0; i + 1 < c.n; ++i) {
      if (q[std::size_t(i)] > q[std::size_t(i + 1)]) continue;  // each edge once
      if (!c.contains(edge_fence(q, i))) continue;
      auto r = q;
      std::swap(r[std::size_t(i)], r[std::size_t(i + 1)]);
      int a = find(int(k)), b = find(idx.at(perm_key(r)));
      if (a != b) parent[std::size_t(a)] = b;
    }
  }
  std::unordered_map<int, int> label;
  pc.cls.resize(pc.perms.size());
  for (std::size_t k = 0; k < pc.perms.size(); ++k) {
    int root = find(int(k));
    auto [it, fresh] = label.emplace(root, int(label.size()));
    pc.cls[k] = it->second;
  }
  pc.count = int(label.size());
  return pc;
}

bool is_stable(const Blocks& F, const Congruence& c) {
  std::uint32_t prefix = 0;
  for (std::uint32_t blk : F) {
    int prev = -1;
    for (std::uint32_t m = blk; m; m &= m - 1) {
      int y = std::countr_zero(m) + 1;
      if (prev > 0 && c.contains({prev, y, prefix & open_interval(prev, y)})) return false;
      prev = y;
    }
    prefix |= blk;
  }
  return true;
}

Blocks swap_blocks(const Blocks& F, int j) {
  if (j < 1 || j >= int(F.size())) throw InputError("swap index out of range");
  Blocks G = F;
  std::swap(G[std::size_t(j - 1)], G[std::size_t(j)]);
  return G;
}

SwapOutcome swap_adjacent(const Blocks& F, int j, const Congruence& c) {
  if (j < 1 || j >= int(F.size())) throw InputError("swap index out of range");
  std::uint32_t A = F[std::size_t(j - 1)], B = F[std::size_t(j)], prefix = 0;
  for (int i = 0; i < j - 1; ++i) prefix |= F[std::size_t(i)];
  auto lo = [](std::uint32_t m) { return std::countr_zero(m) + 1; };
  auto hi = [](std::uint32_t m) { return 32 - std::countl_zero(m); };
  int a, b;
  if (hi(A) < lo(B)) {
    a = hi(A), b = lo(B);
  } else if (hi(B) < lo(A)) {
    a = hi(B), b = lo(A);
  } else {
    return SwapOutcome::NotEquivalent;
  }
  return c.contains({a, b, prefix & open_interval(a, b)}) ? SwapOutcome::EquivalentStable : SwapOutcome::Blocked;
}

std::vector<Blocks> quotient_insertions(const Blocks& F, const Congruence& c) {
  const int n = c.n;
  const int k = int(F.size());
  std::vector<Blocks> out{insert_bar(F, 0, n)};
  if (k == 0 || c.contains({n - 1, n, 0})) return out;
  std::vector<int> idx;
  std::uint32_t prefix = 0;
  for (int i = 1; i <= k; ++i) {
    std::uint32_t blk = F[std::size_t(i - 1)];
    int top = 32 - std::countl_zero(blk);
    if (!c.contains({top, n, prefix & open_interval(top, n)})) idx.push_back(i);
    prefix |= blk;
  }
  for (std::size_t j = 0; j < idx.size(); ++j) {
    out.push_back(insert_join(F, idx[j], n));
    out.push_back(insert_bar(F, j + 1 < idx.size() ? idx[j] : k, n));
  }
  return out;
}

std::vector<std::string> face_listing_quotientope(const Congruence& c) {
  if (c.n < 1 || c.n > kMaxPermN) throw InputError("face_listing_quotientope needs 1 <= n <= 30");
  if (!is_downset(c)) throw InputError("congruence is not a downset of the forcing order");
  QuotientFamily fam;
  fam.chain.resize(std::size_t(c.n) + 1);
  fam.chain[std::size_t(c.n)] = c;
  for (int m = c.n; m > 1; --m) fam.chain[std::size_t(m - 1)] = restrict_congruence(fam.chain[std::size_t(m)]);
  fam.chain[0].n = 0;
  ZigzagIterator<QuotientFamily> it(std::move(fam), c.n);
  std::vector<std::string> out{format_partition(it.current(), c.n)};
  while (it.next()) out.push_back(format_partition(it.current(), c.n));
  out.push_back(kEmptyId);
  return out;
}

namespace {

void face_perms(const Blocks& F, std::size_t b, std::vector<int>& cur, const std::function<void()>& visit);

}  // namespace

QuotientLattice brute_quotient_lattice(const Congruence& c) {
  if (c.n < 1 || c.n > 6) throw BudgetExceeded("instance too large: quotient oracle supports n <= 6");
  const int n = c.n;
  PermClasses pc = perm_classes(c);
  auto parts = all_ordered_partitions(n);
  std::map<std::vector<int>, int> key_to_class;
  std::vector<int> part_class(parts.size());
  std::vector<std::vector<int>> keys;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::set<int> touched;
    std::vector<int> cur;
    face_perms(parts[p], 0, cur, [&] { touched.insert(pc.cls[std::size_t(pc.index(cur))]); });
    std::vector<int> key(touched.begin(), touched.end());
    auto [it, fresh] = key_to_class.emplace(key, int(keys.size()));
    if (fresh) keys.push_back(key);
    part_class[p] = it->second;
  }
  QuotientLattice q;
  const std::size_t C = keys.size();
  q.class_vertices = keys;
  std::vector<int> max_blocks(C, 0);
  for (std::size_t p = 0; p < parts.size(); ++p)
    max_blocks[std::size_t(part_class[p])] = std::max(max_blocks[std::size_t(part_class[p])], int(parts[p].size()));
  q.class_rank.resize(C);
  q.class_id.assign(C, "");
  for (std::size_t k = 0; k < C; ++k) q.class_rank[k] = n - max_blocks[k];
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::string id = format_partition(parts[p], n);
    int k = part_class[p];
    bool st = int(parts[p].size()) == max_blocks[std::size_t(k)];
    q.class_of[id] = k;
    q.stable[id] = st;
    if (st && (q.class_id[std::size_t(k)].empty() || id < q.class_id[std::size_t(k)])) q.class_id[std::size_t(k)] = id;
  }
  q.graph.add(kEmptyId, -1);
  for (std::size_t k = 0; k < C; ++k) q.graph.add(q.class_id[k], q.class_rank[k]);
  for (std::size_t k = 0; k < C; ++k)
    if (q.class_rank[k] == 0) q.graph.connect(kEmptyId, q.class_id[k]);
  // X below Y when a member of X refines a member of Y
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const Blocks& F = parts[p];
    const int k = int(F.size());
    for (std::uint32_t cuts = 0; cuts < (1u << (k - 1)); ++cuts) {
      Blocks G;
      std::uint32_t acc = F[0];
      for (int i = 1; i < k; ++i) {
        if (cuts >> (i - 1) & 1u) {
          acc |= F[std::size_t(i)];
        } else {
          G.push_back(acc);
          acc = F[std::size_t(i)];
        }
      }
      G.push_back(acc);
      int X = part_class[p], Y = q.class_of.at(format_partition(G, n));
      if (q.class_rank[std::size_t(Y)] == q.class_rank[std::size_t(X)] + 1)
        q.graph.connect(q.class_id[std::size_t(X)], q.class_id[std::size_t(Y)]);
    }
  }
  return q;
}

namespace {

void face_perms(const Blocks& F, std::size_t b, std::vector<int>& cur, const std::function<void()>& visit) {
  if (b == F.size()) {
    visit();
    return;
  }
  std::vector<int> els;
  for (std::uint32_t m = F[b]; m; m &= m - 1) els.push_back(std::countr_zero(m) + 1);
  do {
    cur.insert(cur.end(), els.begin(), els.end());
    face_perms(F, b + 1, cur, visit);
    cur.resize(cur.size() - els.size());
  } while (std::next_permutation(els.begin(), els.end()));
}

}  // namespace

Report verify_quotient_listing(const QuotientLattice& q, const Listing& l) {
  Listing mapped;
  mapped.cyclic = l.cyclic;
  for (std::size_t i = 0; i < l.ids.size(); ++i) {
    const std::string& id = l.ids[i];
    if (id == kEmptyId) {
      mapped.ids.push_back(id);
      continue;
    }
    auto it = q.class_of.find(id);
    if (it == q.class_of.end()) return Report::fail(long(i) + 1, "unknown id " + id);
    if (!q.stable.at(id)) return Report::fail(long(i) + 1, "representative " + id + " is not stable");
    mapped.ids.push_back(q.class_id[std::size_t(it->second)]);
  }
  return check_hamiltonian(q.graph, mapped);
}

}  // namespace facewalk
