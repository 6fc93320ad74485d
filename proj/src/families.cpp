#include "facewalk/families.hpp"

#include <algorithm>
#include <chrono>

#include "facewalk/assoc.hpp"
#include "facewalk/cube.hpp"
#include "facewalk/perm.hpp"

namespace facewalk {

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"cube", "perm", "bperm", "assoc", "gassoc", "quotientope", "planar3"};
  return names;
}

void check_spec(FamilySpec& s) {
  const auto& names = family_names();
  if (std::find(names.begin(), names.end(), s.family) == names.end()) throw InputError("unknown family " + s.family);
  if (s.family == "gassoc") {
    if (!s.graph) throw InputError("gassoc needs --graph");
    s.n = s.graph->n;
  } else if (s.family == "planar3") {
    if (!s.plane) throw InputError("planar3 needs --graph");
    s.n = s.plane->m;
  } else if (s.family == "quotientope") {
    if (s.congruence) {
      if (s.n != 0 && s.n != s.congruence->n) throw InputError("--n does not match the congruence file");
      s.n = s.congruence->n;
    } else {
      if (s.n < 1) throw InputError("quotientope needs --n or --congruence");
      s.congruence = Congruence{s.n, {}};
    }
  }
  int lo = s.family == "perm" ? 2 : s.family == "assoc" ? 3 : 1;
  if (s.n < lo) throw InputError(s.family + " needs n >= " + std::to_string(lo));
  if (s.family == "cube" && s.n > 40) throw InputError("cube needs n <= 40");
  if ((s.family == "perm" || s.family == "bperm" || s.family == "quotientope") && s.n > kMaxPermN)
    throw InputError(s.family + " needs n <= " + std::to_string(kMaxPermN));
}

ListingHeader listing_header(const FamilySpec& s) { return {s.family, s.n, true}; }

void stream_listing(const FamilySpec& spec, const std::function<void(const std::string&)>& emit) {
  FamilySpec s = spec;
  check_spec(s);
  if (s.family == "cube") {
    GammaIterator it(s.n);
    do emit(it.current());
    while (it.next());
    emit(kEmptyId);
  } else if (s.family == "perm") {
    PermFaceIterator it(s.n);
    std::string id;
    do {
      it.write_id(id);
      emit(id);
    } while (it.next());
    emit(kEmptyId);
  } else if (s.family == "assoc") {
    if (s.n == 3) {
      emit(".");
    } else {
      AssocFaceIterator it(s.n);
      std::string id;
      do {
        it.write_id(id);
        emit(id);
      } while (it.next());
    }
    emit(kEmptyId);
  } else {
    std::vector<std::string> ids;
    if (s.family == "bperm") {
      ids = face_listing_bperm(s.n);
    } else if (s.family == "gassoc") {
      ids = face_listing_graph_assoc(make_chordal_graph(*s.graph));
    } else if (s.family == "quotientope") {
      ids = face_listing_quotientope(*s.congruence);
    } else {
      ids = cell_ham_cycle(*s.plane).ids;
    }
    for (const auto& id : ids) emit(id);
  }
}

Listing generate_listing(const FamilySpec& s) {
  Listing l;
  stream_listing(s, [&](const std::string& id) { l.ids.push_back(id); });
  return l;
}

int face_rank(const FamilySpec& s, const std::string& id) {
  if (id == kEmptyId) return -1;
  const auto& f = s.family;
  if (f == "cube") return ternary_rank(id);
  if (f == "perm" || f == "quotientope") return s.n - int(std::count(id.begin(), id.end(), '|')) - 1;
  if (f == "bperm") return signed_rank(parse_signed(id), s.n);
  if (f == "assoc") return dissection_rank(parse_dissection(id, s.n));
  if (f == "gassoc") return s.n - int(std::count(id.begin(), id.end(), '{'));
  if (f == "planar3") {
    if (id == kTopCellId) return 3;
    if (id.front() == '[') return 2;
    return id.find('-') == std::string::npos ? 0 : 1;
  }
  throw InputError("unknown family " + f);
}

unsigned long long fubini(int n) {
  std::vector<unsigned long long> a(std::size_t(n) + 1, 0), row{1};
  a[0] = 1;
  std::vector<std::vector<unsigned long long>> C{{1}};
  for (int m = 1; m <= n; ++m) {
    std::vector<unsigned long long> next(std::size_t(m) + 1, 1);
    for (int k = 1; k < m; ++k) next[std::size_t(k)] = C.back()[std::size_t(k - 1)] + C.back()[std::size_t(k)];
    C.push_back(next);
    for (int k = 1; k <= m; ++k) a[std::size_t(m)] += C[std::size_t(m)][std::size_t(k)] * a[std::size_t(m - k)];
  }
  return a[std::size_t(n)];
}

unsigned long long little_schroeder(int polygon) {
  // T[k]: dissections of a k-gon (T[2] = 1 for a bare edge); P[m]: chains of
  // cells from vertex 0 to vertex m along the root cell
  std::vector<unsigned long long> T(std::size_t(std::max(polygon, 3)) + 1, 0), P(T.size(), 0);
  T[2] = 1;
  P[0] = 1;
  P[1] = 1;
  for (int k = 3; k <= polygon; ++k) {
    unsigned long long t = 0;
    for (int i = 1; i <= k - 2; ++i) t += P[std::size_t(i)] * T[std::size_t(k - i)];
    T[std::size_t(k)] = t;
    P[std::size_t(k - 1)] = t + T[std::size_t(k)];
  }
  return T[std::size_t(polygon)];
}

unsigned long long bperm_faces(int n) {
  unsigned long long total = 0, binom = 1;
  for (int k = 0; k <= n; ++k) {
    total += binom * (1ull << (n - k)) * fubini(n - k);
    binom = binom * unsigned(n - k) / unsigned(k + 1);
  }
  return total;
}

unsigned long long predicted_faces(const FamilySpec& s) {
  const auto& f = s.family;
  if (f == "cube") {
    unsigned long long p = 1;
    for (int i = 0; i < s.n && p < (1ull << 60); ++i) p *= 3;
    return p + 1;
  }
  if (f == "perm") return s.n > 20 ? ~0ull : fubini(s.n) + 1;
  if (f == "bperm") return s.n > 15 ? ~0ull : bperm_faces(s.n) + 1;
  if (f == "assoc") return s.n > 30 ? ~0ull : little_schroeder(s.n) + 1;
  if (f == "quotientope") return s.n > 15 ? ~0ull : fubini(s.n) + 1;  // upper bound
  return 0;
}

CoverGraph family_cover_graph(const FamilySpec& spec) {
  FamilySpec s = spec;
  check_spec(s);
  const std::size_t budget = oracle_budget();
  unsigned long long want = predicted_faces(s);
  if (want > budget)
    throw BudgetExceeded("oracle budget exceeded: " + s.family + " n=" + std::to_string(s.n) + " has " +
                         std::to_string(want) + " faces > " + std::to_string(budget));
  const auto& f = s.family;
  if (f == "cube") return cube_face_graph(s.n);
  if (f == "perm") return perm_face_graph(s.n);
  if (f == "bperm") return bperm_face_graph(s.n);
  if (f == "assoc") return assoc_face_graph(s.n);
  if (f == "gassoc") {
    CoverGraph g = gassoc_face_graph(make_chordal_graph(*s.graph));
    if (g.size() > budget) throw BudgetExceeded("oracle budget exceeded: tubing lattice too large");
    return g;
  }
  if (f == "quotientope") return brute_quotient_lattice(*s.congruence).graph;
  return cells(*s.plane);
}

Report verify_family_listing(const FamilySpec& spec, const Listing& l) {
  FamilySpec s = spec;
  check_spec(s);
  if (s.family == "quotientope") {
    if (s.n > 6 || fubini(s.n) + 1 > oracle_budget())
      throw BudgetExceeded("oracle budget exceeded: quotientope n=" + std::to_string(s.n));
    return verify_quotient_listing(brute_quotient_lattice(*s.congruence), l);
  }
  return check_hamiltonian(family_cover_graph(s), l);
}

BenchResult bench_family(const std::string& family, int n) {
  BenchResult r;
  r.family = family;
  r.n = n;
  double total_work = 0;
  auto t0 = std::chrono::steady_clock::now();
  auto run = [&](auto& it) {
    r.faces = 1;
    while (it.next()) {
      ++r.faces;
      std::size_t w = it.last_work();
      r.max_work = std::max(r.max_work, w);
      total_work += double(w);
    }
  };
  if (family == "cube") {
    if (n < 1) throw InputError("cube needs n >= 1");
    GammaIterator it(n);
    r.faces = 1;
    while (it.next()) {
      ++r.faces;
      total_work += 1;
    }
    r.max_work = 1;
  } else if (family == "perm") {
    PermFaceIterator it(n);
    run(it);
  } else if (family == "assoc") {
    if (n < 4) throw InputError("assoc bench needs n >= 4");
    AssocFaceIterator it(n);
    run(it);
  } else {
    throw InputError("bench supports cube, perm and assoc");
  }
  ++r.faces;  // EMPTY
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.mean_work = r.faces > 2 ? total_work / double(r.faces - 2) : 0;
  return r;
}

}  // namespace facewalk
