#include "facewalk/perm.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "facewalk/cube.hpp"

namespace facewalk {

namespace {

void append_block(std::string& out, std::uint32_t m, int n, std::uint32_t neg = 0) {
  bool first = true;
  while (m) {
    int e = std::countr_zero(m) + 1;
    m &= m - 1;
    if (!first && n >= 10) out += ',';
    first = false;
    if (neg >> (e - 1) & 1u) out += '-';
    if (e >= 10) out += char('0' + e / 10);
    out += char('0' + e % 10);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto k = s.find(sep, start);
    out.push_back(s.substr(start, k == std::string::npos ? std::string::npos : k - start));
    if (k == std::string::npos) break;
    start = k + 1;
  }
  return out;
}

// Parses "12", "-12", "1,-12" into a mask plus negative mask.
void parse_block(const std::string& s, std::uint32_t& mask, std::uint32_t& neg, const std::string& whole) {
  mask = neg = 0;
  auto put = [&](int e, bool minus) {
    if (e < 1 || e > kMaxPermN || (mask >> (e - 1) & 1u)) throw InputError("malformed partition id " + whole);
    mask |= 1u << (e - 1);
    if (minus) neg |= 1u << (e - 1);
  };
  if (s.empty()) throw InputError("empty block in " + whole);
  if (s.find(',') != std::string::npos) {
    for (const auto& tok : split(s, ',')) {
      bool minus = !tok.empty() && tok[0] == '-';
      std::string digits = tok.substr(minus ? 1 : 0);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("malformed partition id " + whole);
      put(std::stoi(digits), minus);
    }
    return;
  }
  bool minus = false;
  for (char c : s) {
    if (c == '-') {
      if (minus) throw InputError("malformed partition id " + whole);
      minus = true;
    } else if (c >= '1' && c <= '9') {
      put(c - '0', minus);
      minus = false;
    } else {
      throw InputError("malformed partition id " + whole);
    }
  }
  if (minus) throw InputError("malformed partition id " + whole);
}

int max_element_of(const Blocks& b) {
  std::uint32_t all = 0;
  for (auto m : b) all |= m;
  return all ? 32 - std::countl_zero(all) : 0;
}

}  // namespace

std::string format_partition(const Blocks& blocks, int n) {
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += '|';
    append_block(s, blocks[i], n);
  }
  return s;
}

Blocks parse_partition(const std::string& id) {
  Blocks b;
  std::uint32_t seen = 0;
  for (const auto& part : split(id, '|')) {
    std::uint32_t m, neg;
    parse_block(part, m, neg, id);
    if (neg || (m & seen)) throw InputError("malformed partition id " + id);
    seen |= m;
    b.push_back(m);
  }
  if (seen == 0 || (seen & (seen + 1)) != 0)
    throw InputError("partition " + id + " does not cover 1..n");
  return b;
}

int partition_size(const Blocks& blocks) { return max_element_of(blocks); }

Blocks insert_bar(const Blocks& x, int i, int m) {
  if (m == 0) m = max_element_of(x) + 1;
  if (i < 0 || i > int(x.size())) throw InputError("insert_bar index out of range");
  Blocks y = x;
  y.insert(y.begin() + i, 1u << (m - 1));
  return y;
}

Blocks insert_join(const Blocks& x, int i, int m) {
  if (m == 0) m = max_element_of(x) + 1;
  if (i < 1 || i > int(x.size())) throw InputError("insert_join index out of range");
  Blocks y = x;
  y[std::size_t(i - 1)] |= 1u << (m - 1);
  return y;
}

std::vector<Blocks> perm_insertions(const Blocks& x, int m) {
  if (m == 0) m = max_element_of(x) + 1;
  std::vector<Blocks> out{insert_bar(x, 0, m)};
  for (int i = 1; i <= int(x.size()); ++i) {
    out.push_back(insert_join(x, i, m));
    out.push_back(insert_bar(x, i, m));
  }
  return out;
}

// ---- streaming permutahedron listing ----

PermFaceIterator::PermFaceIterator(int n) : n_(n) {
  if (n < 2 || n > kMaxPermN) throw InputError("face_listing_perm needs 2 <= n <= 30");
  const int cap = n + 2;
  nxt_.assign(std::size_t(cap), 0);
  prv_.assign(std::size_t(cap), 0);
  mask_.assign(std::size_t(cap), 0);
  for (int k = cap - 1; k >= 1; --k) free_.push_back(k);
  node_of_.assign(std::size_t(n) + 1, 0);
  for (int e = 1; e <= n; ++e) {
    int node = alloc(1u << (e - 1));
    link_after(node, prv_[0]);
    node_of_[std::size_t(e)] = node;
  }
  blocks_ = n;
  t_.assign(std::size_t(n) + 1, 0);
  len_.assign(std::size_t(n) + 1, 0);
  rev_.assign(std::size_t(n) + 1, 1);
  for (int j = 2; j <= n; ++j) len_[std::size_t(j)] = 2 * (j - 1) + 1;
}

int PermFaceIterator::alloc(std::uint32_t m) {
  int node = free_.back();
  free_.pop_back();
  mask_[std::size_t(node)] = m;
  return node;
}

void PermFaceIterator::link_after(int node, int at) {
  int b = nxt_[std::size_t(at)];
  nxt_[std::size_t(at)] = node;
  prv_[std::size_t(node)] = at;
  nxt_[std::size_t(node)] = b;
  prv_[std::size_t(b)] = node;
}

void PermFaceIterator::unlink(int node) {
  int a = prv_[std::size_t(node)], b = nxt_[std::size_t(node)];
  nxt_[std::size_t(a)] = b;
  prv_[std::size_t(b)] = a;
  free_.push_back(node);
}

void PermFaceIterator::step(int j) {
  const std::uint32_t bit = 1u << (j - 1);
  int node = node_of_[std::size_t(j)];
  bool at_bar = t_[std::size_t(j)] % 2 == 0;
  if (at_bar) {
    int target = rev_[std::size_t(j)] ? prv_[std::size_t(node)] : nxt_[std::size_t(node)];
    unlink(node);
    mask_[std::size_t(target)] |= bit;
    node_of_[std::size_t(j)] = target;
    --blocks_;
  } else {
    mask_[std::size_t(node)] &= ~bit;
    int fresh = alloc(bit);
    link_after(fresh, rev_[std::size_t(j)] ? prv_[std::size_t(node)] : node);
    node_of_[std::size_t(j)] = fresh;
    ++blocks_;
  }
  ++t_[std::size_t(j)];
}

bool PermFaceIterator::next() {
  int j = n_;
  work_ = 1;
  while (j >= 2 && t_[std::size_t(j)] + 1 >= len_[std::size_t(j)]) {
    --j;
    ++work_;
  }
  if (j < 2) return false;
  step(j);
  for (int h = j + 1; h <= n_; ++h) {
    t_[std::size_t(h)] = 0;
    rev_[std::size_t(h)] ^= 1;
    len_[std::size_t(h)] = 2 * (blocks_ - (n_ - h + 1)) + 1;
    ++work_;
  }
  return true;
}

void PermFaceIterator::write_id(std::string& out) const {
  out.clear();
  for (int node = nxt_[0]; node != 0; node = nxt_[std::size_t(node)]) {
    if (node != nxt_[0]) out += '|';
    append_block(out, mask_[std::size_t(node)], n_);
  }
}

Blocks PermFaceIterator::blocks() const {
  Blocks b;
  for (int node = nxt_[0]; node != 0; node = nxt_[std::size_t(node)]) b.push_back(mask_[std::size_t(node)]);
  return b;
}

std::vector<std::string> face_listing_perm(int n) {
  PermFaceIterator it(n);
  std::vector<std::string> out{it.id()};
  while (it.next()) out.push_back(it.id());
  out.push_back(kEmptyId);
  return out;
}

std::vector<Blocks> all_ordered_partitions(int n) {
  if (n < 1 || n > 9) throw BudgetExceeded("ordered partition enumeration supports 1 <= n <= 9");
  std::vector<Blocks> out;
  Blocks cur;
  const std::uint32_t full = (1u << n) - 1;
  auto rec = [&](auto&& self, std::uint32_t rest) -> void {
    if (!rest) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t s = rest; s; s = (s - 1) & rest) {
      cur.push_back(s);
      self(self, rest & ~s);
      cur.pop_back();
    }
  };
  rec(rec, full);
  return out;
}

CoverGraph perm_face_graph(int n) {
  auto parts = all_ordered_partitions(n);
  if (parts.size() + 1 > oracle_budget()) throw BudgetExceeded("instance too large: L(Pi_n) oracle budget exceeded");
  CoverGraph g;
  g.add(kEmptyId, -1);
  for (const auto& p : parts) g.add(format_partition(p, n), n - int(p.size()));
  for (const auto& p : parts) {
    std::string id = format_partition(p, n);
    if (int(p.size()) == n) g.connect(kEmptyId, id);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      Blocks q = p;
      q[i] |= q[i + 1];
      q.erase(q.begin() + long(i) + 1);
      g.connect(id, format_partition(q, n));
    }
  }
  return g;
}

// ---- B-permutahedron ----

std::string format_signed(const SignedPartition& x, int n) {
  std::string s;
  for (std::size_t i = 0; i < x.blocks.size(); ++i) {
    if (i) s += '|';
    if (i == 0 && x.boxed) {
      s += '[';
      append_block(s, x.blocks[0], n);
      s += ']';
    } else {
      append_block(s, x.blocks[i], n, x.neg);
    }
  }
  return s;
}

SignedPartition parse_signed(const std::string& id) {
  SignedPartition x;
  std::uint32_t seen = 0;
  auto parts = split(id, '|');
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::string p = parts[i];
    bool box = !p.empty() && p.front() == '[';
    if (box) {
      if (i != 0 || p.size() < 3 || p.back() != ']') throw InputError("malformed signed partition " + id);
      p = p.substr(1, p.size() - 2);
      x.boxed = true;
    }
    std::uint32_t m, neg;
    parse_block(p, m, neg, id);
    if ((box && neg) || (m & seen)) throw InputError("malformed signed partition " + id);
    seen |= m;
    x.blocks.push_back(m);
    x.neg |= neg;
  }
  if ((seen & (seen + 1)) != 0 || seen == 0) throw InputError("signed partition " + id + " does not cover 1..n");
  return x;
}

int signed_rank(const SignedPartition& x, int n) { return n - int(x.blocks.size()) + (x.boxed ? 1 : 0); }

std::vector<SignedPartition> bperm_insertions(const SignedPartition& x, int m) {
  const std::uint32_t bit = 1u << (m - 1);
  const int k = int(x.blocks.size());
  auto bar = [&](int i, bool minus) {
    SignedPartition y = x;
    y.blocks.insert(y.blocks.begin() + i, bit);
    if (minus) y.neg |= bit;
    return y;
  };
  auto join = [&](int i, bool minus) {
    SignedPartition y = x;
    y.blocks[std::size_t(i - 1)] |= bit;
    if (minus) y.neg |= bit;
    return y;
  };
  std::vector<SignedPartition> out;
  const int lo = x.boxed ? 1 : 0;
  for (int i = k; i >= lo; --i) {
    out.push_back(bar(i, false));
    if (i > lo) out.push_back(join(i, false));
  }
  // middle element: box absorbs m, or a fresh box {m} in front
  if (x.boxed) {
    out.push_back(join(1, false));
  } else {
    SignedPartition y = x;
    y.blocks.insert(y.blocks.begin(), bit);
    y.boxed = true;
    out.push_back(y);
  }
  for (int i = lo; i <= k; ++i) {
    if (i > lo) out.push_back(join(i, true));
    out.push_back(bar(i, true));
  }
  return out;
}

std::vector<std::string> face_listing_bperm(int n) {
  if (n < 1 || n > kMaxPermN) throw InputError("face_listing_bperm needs 1 <= n <= 30");
  ZigzagIterator<BpermFamily> it(BpermFamily{}, n);
  std::vector<std::string> out{format_signed(it.current(), n)};
  while (it.next()) out.push_back(format_signed(it.current(), n));
  out.push_back(kEmptyId);
  return out;
}

CoverGraph bperm_face_graph(int n) {
  if (n < 1 || n > 6) throw BudgetExceeded("instance too large: B-permutahedron oracle supports n <= 6");
  std::vector<SignedPartition> faces;
  const std::uint32_t full = (1u << n) - 1;
  for (const auto& p : all_ordered_partitions(n))
    for (std::uint32_t s = 0; s <= full; ++s) faces.push_back({p, s, false});
  for (std::uint32_t box = 1; box <= full; ++box) {
    if ((box & full) != box) continue;
    std::uint32_t rest = full & ~box;
    // ordered partitions of `rest`
    std::vector<Blocks> parts{{}};
    if (rest) {
      parts.clear();
      Blocks cur;
      auto rec = [&](auto&& self, std::uint32_t r) -> void {
        if (!r) {
          parts.push_back(cur);
          return;
        }
        for (std::uint32_t s = r; s; s = (s - 1) & r) {
          cur.push_back(s);
          self(self, r & ~s);
          cur.pop_back();
        }
      };
      rec(rec, rest);
    }
    for (const auto& p : parts)
      for (std::uint32_t s = rest;; s = (s - 1) & rest) {
        Blocks b{box};
        b.insert(b.end(), p.begin(), p.end());
        faces.push_back({b, s, true});
        if (!s) break;
      }
  }
  if (faces.size() + 1 > oracle_budget()) throw BudgetExceeded("instance too large: B-permutahedron oracle budget exceeded");
  CoverGraph g;
  g.add(kEmptyId, -1);
  for (const auto& f : faces) g.add(format_signed(f, n), signed_rank(f, n));
  for (const auto& f : faces) {
    std::string id = format_signed(f, n);
    if (!f.boxed && int(f.blocks.size()) == n) g.connect(kEmptyId, id);
    if (!f.boxed) {
      SignedPartition y = f;
      y.boxed = true;
      y.neg &= ~f.blocks[0];
      g.connect(id, format_signed(y, n));
    }
    for (std::size_t i = 0; i + 1 < f.blocks.size(); ++i) {
      SignedPartition y = f;
      if (f.boxed && i == 0) y.neg &= ~f.blocks[1];
      y.blocks[i] |= y.blocks[i + 1];
      y.blocks.erase(y.blocks.begin() + long(i) + 1);
      g.connect(id, format_signed(y, n));
    }
  }
  return g;
}

std::string flag_to_signed_perm(const Flag& flag) {
  if (flag.size() < 2 || flag[0] != kEmptyId) throw InputError("flag must start at EMPTY");
  const int n = int(flag[1].size());
  if (int(flag.size()) != n + 2) throw InputError("flag has wrong length for n=" + std::to_string(n));
  for (std::size_t i = 1; i < flag.size(); ++i) {
    if (int(flag[i].size()) != n || ternary_rank(flag[i]) != int(i) - 1)
      throw InputError("malformed chain element " + flag[i]);
    if (flag[i].find_first_not_of("01-") != std::string::npos) throw InputError("malformed chain element " + flag[i]);
  }
  std::vector<int> value(std::size_t(n), 0);
  for (std::size_t i = 2; i < flag.size(); ++i) {
    int changed = -1;
    for (int p = 0; p < n; ++p) {
      char a = flag[i - 1][std::size_t(p)], b = flag[i][std::size_t(p)];
      if (a == b) continue;
      if (b != '-' || changed >= 0) throw InputError("not a cover step: " + flag[i - 1] + " " + flag[i]);
      changed = p;
    }
    if (changed < 0) throw InputError("not a cover step: " + flag[i - 1] + " " + flag[i]);
    value[std::size_t(changed)] = int(i) - 1;
  }
  SignedPartition x;
  for (int p = 0; p < n; ++p) {
    std::uint32_t bit = 1u << (value[std::size_t(p)] - 1);
    x.blocks.push_back(bit);
    if (flag[1][std::size_t(p)] == '0') x.neg |= bit;
  }
  return format_signed(x, n);
}

FacetCycle facet_hamiltonian_bperm(int n) {
  if (n < 1) throw InputError("facet_hamiltonian_bperm needs n >= 1");
  FacetCycle fc;
  fc.flags = sweep_flags(strip_cube_faces(n));
  for (const auto& f : fc.flags) fc.perms.push_back(flag_to_signed_perm(f));
  fc.report = check_facet_hamiltonian_flags(fc.flags, cube_face_graph(n).elements());
  return fc;
}

}  // namespace facewalk
