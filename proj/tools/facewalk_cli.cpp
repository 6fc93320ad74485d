// facewalk: face-lattice listings, strips and their checkers.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "facewalk/cube.hpp"
#include "facewalk/families.hpp"
#include "facewalk/planar3.hpp"
#include "facewalk/quotient.hpp"
#include "facewalk/strip.hpp"

using namespace facewalk;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kBudget = 2, kInput = 3 };

struct Options {
  std::string family;
  int n = 0;
  std::string graph, congruence, input, output, strip_file, format = "text";
  int max_vertices = 18;
  double min_rate = 0;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  return f;
}

FamilySpec make_spec(const Options& o) {
  FamilySpec s;
  s.family = o.family;
  s.n = o.n;
  if (!o.graph.empty()) {
    auto f = open_in(o.graph);
    if (o.family == "planar3") {
      s.plane = read_plane_graph(f);
    } else {
      s.graph = read_simple_graph(f);
    }
  }
  if (!o.congruence.empty()) {
    auto f = open_in(o.congruence);
    s.congruence = read_congruence(f);
  }
  check_spec(s);
  return s;
}

PlaneGraph load_plane(const Options& o) {
  if (o.graph.empty()) throw InputError("--graph is required");
  auto f = open_in(o.graph);
  return read_plane_graph(f);
}

void print_report(const Report& r, const Options& o) {
  if (o.format == "json") {
    std::cout << json{{"ok", r.ok}, {"position", r.position}, {"reason", r.reason}}.dump() << '\n';
  } else {
    std::cout << r.str() << '\n';
  }
}

template <class F>
int with_input(const Options& o, F&& f) {
  if (o.input.empty()) return f(std::cin);
  auto in = open_in(o.input);
  return f(in);
}

int cmd_generate(const Options& o) {
  FamilySpec s = make_spec(o);
  std::ostream& out = std::cout;
  ListingHeader h = listing_header(s);
  if (o.format == "json") {
    out << json{{"family", h.family}, {"n", h.n}, {"cyclic", h.cyclic}}.dump() << '\n';
    stream_listing(s, [&](const std::string& id) { out << json{{"id", id}, {"rank", face_rank(s, id)}}.dump() << '\n'; });
  } else {
    out << format_header(h) << '\n';
    stream_listing(s, [&](const std::string& id) { out << id << '\n'; });
  }
  return kOk;
}

int cmd_verify(Options o) {
  return with_input(o, [&](std::istream& in) {
    ListingHeader h;
    Listing l = read_listing(in, &h);
    if (o.family.empty()) o.family = h.family;
    if (o.n == 0) o.n = h.n;
    if (o.family.empty()) throw InputError("--family missing and no listing header");
    FamilySpec s = make_spec(o);
    Report r = verify_family_listing(s, l);
    print_report(r, o);
    return r.ok ? kOk : kFail;
  });
}

RhombicStrip build_strip(const Options& o) {
  if (o.family == "boolean-mirror") return strip_boolean_mirror(o.n);
  if (o.family == "boolean-stack") return strip_boolean_stack(o.n);
  if (o.family == "cube-faces" || o.family == "cube") return strip_cube_faces(o.n);
  if (o.family == "planar3") {
    auto d = decide_rhombic_strip(load_plane(o), o.max_vertices);
    if (!d.found) throw InputError("graph admits no rhombic strip");
    return *d.strip;
  }
  throw InputError("unknown strip family " + o.family);
}

CoverGraph strip_graph(const std::string& family, int n, const Options& o) {
  if (family == "boolean-mirror" || family == "boolean-stack") return boolean_lattice_graph(n);
  if (family == "cube-faces" || family == "cube") return cube_face_graph(n);
  if (family == "planar3") return cells(load_plane(o));
  throw InputError("unknown strip family " + family);
}

int cmd_strip(const Options& o) {
  RhombicStrip s = build_strip(o);
  if (o.output.empty()) {
    write_strip(std::cout, s);
  } else {
    std::ofstream f(o.output);
    if (!f) throw InputError("cannot write " + o.output);
    write_strip(f, s);
  }
  return kOk;
}

int cmd_strip_verify(const Options& o) {
  return with_input(o, [&](std::istream& in) {
    RhombicStrip s = read_strip(in);
    std::string fam = o.family.empty() ? s.family : o.family;
    int n = o.n ? o.n : s.n;
    Report r = validate_strip(s, strip_graph(fam, n, o));
    print_report(r, o);
    return r.ok ? kOk : kFail;
  });
}

int cmd_sweep(const Options& o) {
  RhombicStrip s;
  if (!o.strip_file.empty()) {
    auto f = open_in(o.strip_file);
    s = read_strip(f);
  } else {
    s = build_strip(o);
  }
  for (const auto& flag : sweep_flags(s)) std::cout << format_flag(flag) << '\n';
  return kOk;
}

int cmd_facet_verify(const Options& o) {
  return with_input(o, [&](std::istream& in) {
    std::vector<Flag> flags;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      flags.push_back(parse_flag(line));
    }
    CoverGraph g = o.family == "planar3" ? cells(load_plane(o)) : cube_face_graph(o.n);
    Report r = check_facet_hamiltonian_flags(flags, g.elements());
    print_report(r, o);
    return r.ok ? kOk : kFail;
  });
}

std::string chord_str(const Chord& c) { return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")"; }

int cmd_decide(const Options& o) {
  PlaneGraph h = load_plane(o);
  StripDecision d = decide_rhombic_strip(h, o.max_vertices);
  std::string cyc;
  for (int v : d.cycle) cyc += (cyc.empty() ? "" : " ") + std::to_string(v);
  if (o.format == "json") {
    json j{{"strip", d.found}, {"cycles", d.cycles}, {"cycle", d.cycle}};
    if (!d.found && d.cycles > 0) {
      json w = json::array();
      for (const auto& c : d.witness.witness) w.push_back({c.first, c.second});
      j["witness"] = w;
    }
    std::cout << j.dump() << '\n';
  } else if (d.found) {
    std::cout << "YES\ncycle: " << cyc << '\n';
  } else if (d.cycles == 0) {
    std::cout << "NO\nno Hamiltonian cycle\n";
  } else {
    std::cout << "NO\ncycles tested: " << d.cycles << "\ncycle: " << cyc << "\nchords:";
    for (const auto& c : d.witness.witness) std::cout << ' ' << chord_str(c);
    std::cout << '\n';
  }
  if (d.found && !o.output.empty()) {
    std::ofstream f(o.output);
    if (!f) throw InputError("cannot write " + o.output);
    write_strip(f, *d.strip);
  }
  return kOk;
}

int cmd_fixture(const std::string& name, const Options& o) {
  PlaneGraph h;
  if (name == "fano") {
    h = fixture_fano();
  } else if (name == "cube") {
    h = fixture_cube();
  } else if (name == "prism") {
    h = fixture_prism(o.n ? o.n : 3);
  } else if (name == "truncated-tetra") {
    h = fixture_truncated_tetra(o.n);
  } else if (name == "permutahedron") {
    h = fixture_permutahedron3();
  } else if (name == "associahedron") {
    h = fixture_associahedron3();
  } else {
    throw InputError("unknown fixture " + name);
  }
  write_plane_graph(std::cout, h);
  return kOk;
}

int cmd_bench(const Options& o) {
  BenchResult r = bench_family(o.family, o.n);
  std::cout << "family,n,faces,seconds,faces_per_second,max_step_work,mean_step_work\n";
  std::cout << r.family << ',' << r.n << ',' << r.faces << ',' << r.seconds << ',' << r.rate() << ',' << r.max_work << ','
            << r.mean_work << '\n';
  if (o.min_rate > 0 && r.rate() < o.min_rate) {
    std::cerr << "rate " << r.rate() << " below threshold " << o.min_rate << '\n';
    return kFail;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian listings of face lattices"};
  app.require_subcommand(1);
  Options o;
  auto family_opt = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--family", o.family, "family name");
    if (required) opt->required();
  };
  auto common = [&](CLI::App* c) {
    c->add_option("--n", o.n, "size parameter");
    c->add_option("--graph", o.graph, "graph file (#graph edge list or plane graph)");
    c->add_option("--congruence", o.congruence, "congruence file");
    c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto* gen = app.add_subcommand("generate", "write a Hamiltonian listing");
  family_opt(gen, true);
  common(gen);
  auto* ver = app.add_subcommand("verify", "check a listing against the brute-force cover graph");
  family_opt(ver, false);
  common(ver);
  ver->add_option("--input", o.input, "listing file (default stdin)");
  auto* str = app.add_subcommand("strip", "write a rhombic strip");
  family_opt(str, true);
  common(str);
  str->add_option("--output", o.output, "strip file (default stdout)");
  str->add_option("--max-vertices", o.max_vertices, "search budget for planar3");
  auto* sv = app.add_subcommand("strip-verify", "validate a strip file");
  family_opt(sv, false);
  common(sv);
  sv->add_option("--input", o.input, "strip file (default stdin)");
  auto* sw = app.add_subcommand("sweep", "list the flags visited by sweeping a strip");
  family_opt(sw, false);
  common(sw);
  sw->add_option("--strip", o.strip_file, "strip file instead of a family");
  sw->add_option("--max-vertices", o.max_vertices, "search budget for planar3");
  auto* fv = app.add_subcommand("facet-verify", "check a cyclic flag sequence for facet-Hamiltonicity");
  family_opt(fv, false);
  common(fv);
  fv->add_option("--input", o.input, "flag file (default stdin)");
  auto* ds = app.add_subcommand("decide-strip", "decide whether a plane graph's cell lattice has a rhombic strip");
  common(ds);
  ds->add_option("--max-vertices", o.max_vertices, "vertex budget");
  ds->add_option("--output", o.output, "write the strip here when one exists");
  std::string fixture_name;
  auto* fx = app.add_subcommand("fixture", "write a bundled plane graph");
  fx->add_option("name", fixture_name, "fano | cube | prism | truncated-tetra | permutahedron | associahedron")->required();
  fx->add_option("--n", o.n, "prism size or truncation count");
  auto* bn = app.add_subcommand("bench", "streaming throughput");
  family_opt(bn, true);
  common(bn);
  bn->add_option("--min-rate", o.min_rate, "fail below this many faces per second");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  if (const char* b = std::getenv("FACEWALK_BUDGET")) {
    try {
      if (std::stoll(b) <= 0) throw std::invalid_argument(b);
    } catch (const std::exception&) {
      std::cerr << "error: FACEWALK_BUDGET must be a positive integer\n";
      return kInput;
    }
  }
  try {
    if (*gen) return cmd_generate(o);
    if (*ver) return cmd_verify(o);
    if (*str) return cmd_strip(o);
    if (*sv) return cmd_strip_verify(o);
    if (*sw) return cmd_sweep(o);
    if (*fv) return cmd_facet_verify(o);
    if (*ds) return cmd_decide(o);
    if (*fx) return cmd_fixture(fixture_name, o);
    if (*bn) return cmd_bench(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "oracle budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
