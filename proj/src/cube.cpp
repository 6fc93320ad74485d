#include "facewalk/cube.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace facewalk {

BrgcIterator::BrgcIterator(int n) : n_(n), word_(std::size_t(n > 0 ? n : 0), '0') {
  if (n < 1 || n > 62) throw InputError("brgc needs 1 <= n <= 62");
}

bool BrgcIterator::next() {
  ++i_;
  if (i_ == (std::uint64_t(1) << n_)) return false;
  int bit = std::countr_zero(i_);
  char& c = word_[std::size_t(n_ - 1 - bit)];
  c = c == '0' ? '1' : '0';
  return true;
}

GammaIterator::GammaIterator(int n) : n_(n) {
  if (n < 1) throw InputError("gamma needs n >= 1");
  a_.assign(std::size_t(n), 0);
  o_.assign(std::size_t(n), 1);
  f_.resize(std::size_t(n) + 1);
  for (int j = 0; j <= n; ++j) f_[std::size_t(j)] = j;
  word_.assign(std::size_t(n), '0');
}

bool GammaIterator::next() {
  static constexpr char sym[3] = {'0', '-', '1'};
  int j = f_[0];
  f_[0] = 0;
  if (j == n_) return false;
  a_[j] += o_[j];
  word_[std::size_t(n_ - 1 - j)] = sym[a_[j]];
  last_ = n_ - 1 - j;
  if (a_[j] == 0 || a_[j] == 2) {
    o_[j] = -o_[j];
    f_[j] = f_[j + 1];
    f_[j + 1] = j + 1;
  }
  return true;
}

std::vector<std::string> brgc(int n) {
  BrgcIterator it(n);
  std::vector<std::string> out{it.current()};
  while (it.next()) out.push_back(it.current());
  return out;
}

std::vector<std::string> gamma(int n) {
  GammaIterator it(n);
  std::vector<std::string> out{it.current()};
  while (it.next()) out.push_back(it.current());
  out.push_back(kEmptyId);
  return out;
}

int ternary_rank(const std::string& w) {
  if (w == kEmptyId) return -1;
  return int(std::count(w.begin(), w.end(), '-'));
}

namespace {

int ones(const std::string& w) { return int(std::count(w.begin(), w.end(), '1')); }

std::vector<std::string> all_words(int n, const std::string& alphabet) {
  std::vector<std::string> out{""};
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (char c : alphabet) next.push_back(w + c);
    out.swap(next);
  }
  return out;
}

}  // namespace

CoverGraph boolean_lattice_graph(int n) {
  if (n < 1 || n > 20) throw InputError("boolean lattice needs 1 <= n <= 20");
  CoverGraph g;
  auto words = all_words(n, "01");
  for (const auto& w : words) g.add(w, ones(w));
  for (const auto& w : words)
    for (int i = 0; i < n; ++i)
      if (w[std::size_t(i)] == '0') {
        std::string u = w;
        u[std::size_t(i)] = '1';
        g.connect(w, u);
      }
  return g;
}

CoverGraph cube_face_graph(int n) {
  if (n < 1 || n > 12) throw InputError("cube face lattice needs 1 <= n <= 12");
  CoverGraph g;
  auto words = all_words(n, "0-1");
  g.add(kEmptyId, -1);
  for (const auto& w : words) g.add(w, ternary_rank(w));
  for (const auto& w : words) {
    if (ternary_rank(w) == 0) g.connect(kEmptyId, w);
    for (int i = 0; i < n; ++i)
      if (w[std::size_t(i)] != '-') {
        std::string u = w;
        u[std::size_t(i)] = '-';
        g.connect(w, u);
      }
  }
  return g;
}

namespace {

using WordEdge = std::pair<std::string, std::string>;

// Orients by rank and emits into the strip.
void emit(RhombicStrip& s, const std::string& a, const std::string& b, int (*rank)(const std::string&), int wrap) {
  if (rank(a) < rank(b))
    s.add_edge(a, b, wrap);
  else
    s.add_edge(b, a, -wrap);
}

std::vector<WordEdge> prefixed(char c, const std::vector<WordEdge>& es) {
  std::vector<WordEdge> out;
  out.reserve(es.size());
  for (const auto& [u, v] : es) out.push_back({c + u, c + v});
  return out;
}

std::string rep(char c, int k) { return std::string(std::size_t(std::max(k, 0)), c); }

}  // namespace

RhombicStrip strip_boolean_mirror(int n) {
  if (n < 2) throw InputError("strip_boolean_mirror needs n >= 2");
  if (n > 24) throw InputError("strip_boolean_mirror supports n <= 24");
  std::map<std::string, Rational> x{{"00", Rational(1, 2)}, {"01", Rational(1, 4)}, {"10", Rational(3, 4)}, {"11", Rational(1, 2)}};
  std::vector<WordEdge> plain{{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}};
  std::vector<WordEdge> zip;  // lower 0x_i, upper 1x_i, drawn through the seam
  for (int m = 2; m < n; ++m) {
    std::map<std::string, Rational> nx;
    for (const auto& [w, p] : x) {
      nx['0' + w] = p / Rational(2);
      nx['1' + w] = Rational(1) - p / Rational(2);
    }
    std::vector<WordEdge> np = prefixed('0', plain);
    auto p1 = prefixed('1', plain);
    np.insert(np.end(), p1.begin(), p1.end());
    // y_0 = 0^m, y_i = 1 0^{m-i} 1^{i-1}; x_i = 0^{m-i} 1^i
    for (int i = 0; i <= m; ++i) {
      std::string y = i == 0 ? rep('0', m) : "1" + rep('0', m - i) + rep('1', i - 1);
      np.push_back({'0' + y, '1' + y});
    }
    zip.clear();
    for (int i = 1; i <= m - 1; ++i) {
      std::string xi = rep('0', m - i) + rep('1', i);
      zip.push_back({'0' + xi, '1' + xi});
    }
    x.swap(nx);
    plain.swap(np);
  }
  RhombicStrip s;
  s.family = "boolean-mirror";
  s.n = n;
  for (const auto& [w, p] : x) s.add_vertex(w, ones(w), p);
  for (const auto& [u, v] : plain) emit(s, u, v, ones, 0);
  for (const auto& [u, v] : zip) s.add_edge(u, v, -1);
  s.normalize();
  return s;
}

namespace {

RhombicStrip from_path(const std::string& family, int n, const std::vector<std::string>& path,
                       const std::vector<WordEdge>& plain, const std::vector<WordEdge>& zip,
                       int (*rank)(const std::string&), bool bottom_fan) {
  RhombicStrip s;
  s.family = family;
  s.n = n;
  std::map<std::string, Rational> x;
  const long long M = (long long)path.size();
  for (long long j = 0; j < M; ++j) {
    Rational p = bottom_fan ? Rational(j + 1, M + 1) : Rational(2 * j + 1, 2 * M);
    x[path[std::size_t(j)]] = p;
    s.add_vertex(path[std::size_t(j)], rank(path[std::size_t(j)]), p);
  }
  for (const auto& [u, v] : plain) emit(s, u, v, rank, 0);
  for (const auto& [u, v] : zip) {
    const std::string& lo = rank(u) < rank(v) ? u : v;
    const std::string& up = rank(u) < rank(v) ? v : u;
    s.add_edge(lo, up, x.at(up) > x.at(lo) ? -1 : 1);
  }
  if (bottom_fan) {
    s.add_vertex(kEmptyId, -1, Rational(0));
    for (const auto& w : path)
      if (rank(w) == 0) s.add_edge(kEmptyId, w, 0);
  }
  s.normalize();
  return s;
}

std::vector<WordEdge> path_edges(const std::vector<std::string>& p) {
  std::vector<WordEdge> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) out.push_back({p[i], p[i + 1]});
  return out;
}

void append(std::vector<WordEdge>& a, const std::vector<WordEdge>& b) { a.insert(a.end(), b.begin(), b.end()); }

}  // namespace

RhombicStrip strip_boolean_stack(int n) {
  if (n < 2) throw InputError("strip_boolean_stack needs n >= 2");
  if (n > 24) throw InputError("strip_boolean_stack supports n <= 24");
  std::vector<std::string> P{"00", "10", "11", "01"};
  std::vector<WordEdge> A, B{{"00", "01"}}, Z;
  for (int m = 2; m < n; ++m) {
    const std::size_t N = P.size();
    std::vector<std::string> NP;
    NP.reserve(2 * N);
    // 1-based i: odd pairs go 0 then 1, even pairs go 1 then 0
    for (std::size_t i = 1; i <= N; ++i) {
      const std::string& p = P[i - 1];
      if (i % 2 == 1) {
        NP.push_back('0' + p);
        NP.push_back('1' + p);
      } else {
        NP.push_back('1' + p);
        NP.push_back('0' + p);
      }
    }
    std::vector<WordEdge> NA = prefixed('1', A), NB = prefixed('0', B), NZ = prefixed('1', Z);
    for (std::size_t i = 1; i < N; ++i) {
      if (i % 2 == 0)
        NA.push_back({'1' + P[i - 1], '1' + P[i]});
      else
        NB.push_back({'0' + P[i - 1], '0' + P[i]});
    }
    NZ.push_back({'1' + P[N - 1], '1' + rep('0', m)});
    P.swap(NP);
    A.swap(NA);
    B.swap(NB);
    Z.swap(NZ);
  }
  std::vector<WordEdge> plain = path_edges(P);
  append(plain, A);
  append(plain, B);
  return from_path("boolean-stack", n, P, plain, Z, ones, false);
}

RhombicStrip strip_cube_faces(int n) {
  if (n < 1) throw InputError("strip_cube_faces needs n >= 1");
  if (n > 12) throw InputError("strip_cube_faces supports n <= 12");
  std::vector<std::string> P{"0", "-", "1"};
  std::vector<WordEdge> A, B, Z;
  for (int m = 1; m < n; ++m) {
    const std::size_t N = P.size();
    std::vector<std::string> NP;
    for (std::size_t i = 1; i <= N; ++i) {
      const std::string& p = P[i - 1];
      if (i % 2 == 1) {
        NP.push_back('0' + p);
        NP.push_back('-' + p);
      } else {
        NP.push_back('-' + p);
        NP.push_back('0' + p);
      }
    }
    for (std::size_t i = N; i-- > 0;) NP.push_back('1' + P[i]);
    // F = {(1 y_i, - y_i)}, y_i = 1 -^i 0^{m-1-i} for i < m, y_m = -^m
    std::vector<WordEdge> F;
    for (int i = 0; i <= m; ++i) {
      std::string y = i < m ? "1" + rep('-', i) + rep('0', m - 1 - i) : rep('-', m);
      F.push_back({'1' + y, '-' + y});
    }
    std::vector<WordEdge> NA = prefixed('-', A), NB = prefixed('0', B), NZ;
    append(NA, prefixed('1', A));
    append(NB, prefixed('1', B));
    for (std::size_t i = 1; i < N; ++i) {
      if (i % 2 == 0)
        NA.push_back({'-' + P[i - 1], '-' + P[i]});
      else if (i <= N - 2)
        NB.push_back({'0' + P[i - 1], '0' + P[i]});
    }
    for (const auto& e : F)
      if (!(e.first == '1' + P[N - 1] && e.second == '-' + P[N - 1])) NA.push_back(e);
    for (int i = 0; i <= m - 1; ++i) {
      std::string xi = rep('-', i) + rep('0', m - i);
      NZ.push_back({'1' + xi, '-' + xi});
    }
    P.swap(NP);
    A.swap(NA);
    B.swap(NB);
    Z.swap(NZ);
  }
  std::set<WordEdge> seen;
  std::vector<WordEdge> plain;
  auto add = [&](const WordEdge& e) {
    WordEdge k = e.first < e.second ? e : WordEdge{e.second, e.first};
    if (seen.insert(k).second) plain.push_back(e);
  };
  for (const auto& e : path_edges(P)) add(e);
  for (const auto& e : A) add(e);
  for (const auto& e : B) add(e);
  return from_path("cube-faces", n, P, plain, Z, ternary_rank, true);
}

}  // namespace facewalk
