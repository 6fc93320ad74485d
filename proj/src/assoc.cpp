#include "facewalk/assoc.hpp"

#include <algorithm>

namespace facewalk {

std::string format_dissection(const Dissection& d) {
  if (d.diags.empty()) return ".";
  std::string s;
  for (std::size_t i = 0; i < d.diags.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d.diags[i].first) + '-' + std::to_string(d.diags[i].second);
  }
  return s;
}

namespace {

void write_num(std::string& s, int v) {
  if (v >= 10) s += char('0' + v / 10);
  s += char('0' + v % 10);
}

}  // namespace

Dissection parse_dissection(const std::string& id, int n) {
  Dissection d;
  d.n = n;
  if (id != ".") {
    std::size_t start = 0;
    while (start <= id.size()) {
      auto k = id.find(',', start);
      std::string tok = id.substr(start, k == std::string::npos ? std::string::npos : k - start);
      auto dash = tok.find('-');
      if (dash == std::string::npos) throw InputError("malformed dissection " + id);
      try {
        int a = std::stoi(tok.substr(0, dash)), b = std::stoi(tok.substr(dash + 1));
        if (a > b) std::swap(a, b);
        d.diags.push_back({a, b});
      } catch (const std::invalid_argument&) {
        throw InputError("malformed dissection " + id);
      }
      if (k == std::string::npos) break;
      start = k + 1;
    }
  }
  std::sort(d.diags.begin(), d.diags.end());
  if (!is_valid_dissection(d)) throw InputError("invalid dissection " + id);
  return d;
}

bool diagonals_cross(std::pair<int, int> a, std::pair<int, int> b) {
  auto [p, q] = a;
  auto [r, s] = b;
  return (p < r && r < q && q < s) || (r < p && p < s && s < q);
}

bool is_valid_dissection(const Dissection& d) {
  for (std::size_t i = 0; i < d.diags.size(); ++i) {
    auto [a, b] = d.diags[i];
    if (a < 1 || b > d.n || b - a < 2 || (a == 1 && b == d.n)) return false;
    if (i && !(d.diags[i - 1] < d.diags[i])) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (diagonals_cross(d.diags[i], d.diags[j])) return false;
  }
  return true;
}

std::vector<int> last_vertex_neighbors(const Dissection& d) {
  std::vector<int> v{1};
  for (const auto& [a, b] : d.diags)
    if (b == d.n) v.push_back(a);
  v.push_back(d.n - 1);
  std::sort(v.begin(), v.end());
  return v;
}

Dissection expand_vertex(const Dissection& d, int i) {
  auto v = last_vertex_neighbors(d);
  if (i < 2 || i > int(v.size())) throw InputError("expand_vertex index out of range");
  const int n = d.n, vi = v[std::size_t(i - 1)];
  Dissection out;
  out.n = n + 1;
  for (auto [a, b] : d.diags) {
    if (b == n && a < vi) b = n + 1;
    out.diags.push_back({a, b});
  }
  std::sort(out.diags.begin(), out.diags.end());
  return out;
}

Dissection expand_vertex_with_diagonal(const Dissection& d, int i) {
  auto v = last_vertex_neighbors(d);
  if (i < 1 || i > int(v.size())) throw InputError("expand_vertex_with_diagonal index out of range");
  Dissection out = expand_vertex(d, i == 1 ? 2 : i);
  out.diags.push_back(i == 1 ? std::pair{1, d.n} : std::pair{v[std::size_t(i - 1)], d.n + 1});
  std::sort(out.diags.begin(), out.diags.end());
  return out;
}

std::vector<Dissection> assoc_insertions(const Dissection& d) {
  const int k = int(last_vertex_neighbors(d).size());
  std::vector<Dissection> out{expand_vertex_with_diagonal(d, 1)};
  for (int i = 2; i <= k; ++i) {
    out.push_back(expand_vertex(d, i));
    out.push_back(expand_vertex_with_diagonal(d, i));
  }
  return out;
}

void AssocFamily::expand(const Object& x, int, std::vector<Object>& out) const {
  // same as assoc_insertions, reusing the storage of `out`
  const int n = x.n;
  int vs[64];
  int k = 0;
  vs[k++] = 1;
  for (const auto& [a, b] : x.diags)
    if (b == n) vs[k++] = a;
  vs[k++] = n - 1;
  std::sort(vs, vs + k);
  out.resize(std::size_t(2 * k - 1));
  auto fill = [&](Dissection& o, int vi, std::pair<int, int> extra) {
    o.n = n + 1;
    o.diags.clear();
    for (auto [a, b] : x.diags) o.diags.push_back({a, b == n && a < vi ? n + 1 : b});
    if (extra.first) o.diags.push_back(extra);
    std::sort(o.diags.begin(), o.diags.end());
  };
  fill(out[0], vs[1], {1, n});
  for (int i = 2; i <= k; ++i) {
    fill(out[std::size_t(2 * i - 3)], vs[i - 1], {0, 0});
    fill(out[std::size_t(2 * i - 2)], vs[i - 1], {vs[i - 1], n + 1});
  }
}

AssocFaceIterator::AssocFaceIterator(int n) : it_(AssocFamily{}, n >= 4 ? n - 3 : 1) {
  if (n < 4 || n > 60) throw InputError("face_listing_assoc needs 4 <= n <= 60");
}

void AssocFaceIterator::write_id(std::string& s) const {
  const auto& d = it_.current();
  s.clear();
  if (d.diags.empty()) {
    s = ".";
    return;
  }
  for (std::size_t i = 0; i < d.diags.size(); ++i) {
    if (i) s += ',';
    write_num(s, d.diags[i].first);
    s += '-';
    write_num(s, d.diags[i].second);
  }
}

std::vector<std::string> face_listing_assoc(int n) {
  AssocFaceIterator it(n);
  std::vector<std::string> out{format_dissection(it.current())};
  while (it.next()) out.push_back(format_dissection(it.current()));
  out.push_back(kEmptyId);
  return out;
}

std::vector<Dissection> all_dissections(int n) {
  if (n < 3 || n > 13) throw BudgetExceeded("dissection enumeration supports 3 <= n <= 13");
  std::vector<std::pair<int, int>> cand;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 2; b <= n; ++b)
      if (!(a == 1 && b == n)) cand.push_back({a, b});
  std::vector<Dissection> out;
  Dissection cur;
  cur.n = n;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    out.push_back(cur);
    for (std::size_t i = from; i < cand.size(); ++i) {
      bool ok = true;
      for (const auto& e : cur.diags)
        if (diagonals_cross(e, cand[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.diags.push_back(cand[i]);
      self(self, i + 1);
      cur.diags.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

CoverGraph assoc_face_graph(int n) {
  auto all = all_dissections(n);
  if (all.size() + 1 > oracle_budget()) throw BudgetExceeded("instance too large: L(A_n) oracle budget exceeded");
  CoverGraph g;
  g.add(kEmptyId, -1);
  for (const auto& d : all) g.add(format_dissection(d), dissection_rank(d));
  for (const auto& d : all) {
    std::string id = format_dissection(d);
    if (int(d.diags.size()) == n - 3) g.connect(kEmptyId, id);
    for (std::size_t i = 0; i < d.diags.size(); ++i) {
      Dissection e = d;
      e.diags.erase(e.diags.begin() + long(i));
      g.connect(id, format_dissection(e));
    }
  }
  return g;
}

}  // namespace facewalk
