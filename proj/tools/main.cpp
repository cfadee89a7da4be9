#include <algorithm>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brsc/catalog.hpp"
#include "brsc/classify.hpp"
#include "brsc/errors.hpp"
#include "brsc/flats.hpp"
#include "brsc/matroid.hpp"
#include "brsc/moore.hpp"
#include "brsc/report.hpp"
#include "brsc/structure.hpp"
#include "brsc/tbrsc.hpp"
#include "brsc/topology.hpp"
#include "io.hpp"

namespace {

using brsc::Json;

// ---- output ----

void print_human(const Json& j, const std::string& key, int indent);

bool flat_array(const Json& j) {
  return j.is_array() &&
         std::all_of(j.begin(), j.end(), [](const Json& item) {
           return item.is_primitive();
         });
}

std::string joined(const Json& array) {
  std::string out;
  for (const Json& item : array) {
    if (!out.empty()) out += ",";
    out += item.is_string() ? item.get<std::string>() : item.dump();
  }
  return out;
}

void print_human(const Json& j, const std::string& key, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    if (!key.empty()) std::cout << pad << key << ":\n";
    for (const auto& [k, v] : j.items()) print_human(v, k, indent + !key.empty());
    return;
  }
  if (flat_array(j)) {
    std::cout << pad << key << ": " << joined(j) << "\n";
    return;
  }
  if (j.is_array()) {
    std::cout << pad << key << ":\n";
    for (const Json& item : j) {
      if (flat_array(item))
        std::cout << pad << "  {" << joined(item) << "}\n";
      else
        print_human(item, "-", indent + 1);
    }
    return;
  }
  std::cout << pad << key << ": "
            << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

struct Output {
  bool human = false;

  void emit(const Json& j) const {
    if (human) {
      for (const auto& [k, v] : j.items())
        if (k != "format") print_human(v, k, 0);
    } else {
      std::cout << j.dump(2) << "\n";
    }
  }
};

Json labels_json(const brsc::Universe& u, brsc::Mask m) {
  return Json(u.labels_of(m));
}

Json members_json(const brsc::Universe& u, std::vector<brsc::Mask> members) {
  std::sort(members.begin(), members.end(), brsc::size_lex_less);
  Json out = Json::array();
  for (brsc::Mask m : members) out.push_back(labels_json(u, m));
  return out;
}

// ---- verb handlers; each returns the process exit code ----

int run_check(const std::string& property, const std::string& path,
              int max_vertices, const Output& out) {
  const brsc::SimplicialComplex s = brsc::load_complex(path);
  Json j;
  j["format"] = 1;
  j["verb"] = "check";
  j["property"] = property;
  j["input"] = path;
  bool holds = false;
  if (property == "br") {
    const brsc::BrCheck c = brsc::is_boolean_representable(s, max_vertices);
    holds = c.holds;
    j["holds"] = c.holds;
    if (c.witness) j["witness"] = labels_json(s.universe(), *c.witness);
  } else if (property == "tbrsc") {
    const brsc::TbCheck c = brsc::is_tbrsc(s, max_vertices);
    holds = c.holds;
    j["holds"] = c.holds;
    if (c.witness) j["witness"] = labels_json(s.universe(), *c.witness);
  } else {
    const brsc::NearMatroidCheck c = brsc::is_near_matroid(s, max_vertices);
    holds = c.holds;
    j["holds"] = c.holds;
    if (c.witness) {
      j["witness"] = Json::object();
      j["witness"]["face_a"] = labels_json(s.universe(), c.witness->first);
      j["witness"]["face_b"] = labels_json(s.universe(), c.witness->second);
    }
  }
  out.emit(j);
  return holds ? 0 : 1;
}

int run_analyze(const std::string& path, bool topology, int max_vertices,
                const Output& out) {
  const brsc::SimplicialComplex s = brsc::load_complex(path);
  const brsc::ComplexReport r =
      brsc::analyze_complex(s, topology, max_vertices);
  Json j;
  j["format"] = 1;
  j["verb"] = "analyze";
  j["input"] = path;
  j["vertices"] = s.universe().labels();
  j["dim"] = r.dim;
  j["rank"] = r.rank;
  j["simple"] = r.is_simple;
  j["paving"] = r.is_paving;
  j["pure"] = r.is_pure;
  j["connected"] = r.is_connected;
  j["matroid"] = r.is_matroid;
  j["near_matroid"] = r.is_near_matroid;
  j["br"] = r.is_br;
  j["tbrsc"] = r.is_tbrsc;
  if (r.br_witness) j["br_witness"] = labels_json(s.universe(), *r.br_witness);
  if (r.tbrsc_witness)
    j["tbrsc_witness"] = labels_json(s.universe(), *r.tbrsc_witness);
  if (r.pi1) j["pi1"] = *r.pi1;
  if (r.betti_numbers) j["betti"] = *r.betti_numbers;
  out.emit(j);
  return 0;
}

int run_family(const std::string& verb, const std::string& path,
               int max_vertices, const Output& out) {
  const brsc::SimplicialComplex s = brsc::load_complex(path);
  const brsc::MooreFamily family = verb == "epsilon"
                                       ? brsc::epsilon(s, max_vertices)
                                       : brsc::flats(s, max_vertices);
  Json j;
  j["format"] = 1;
  j["verb"] = verb;
  j["input"] = path;
  j["members"] = members_json(s.universe(), family.members());
  out.emit(j);
  return 0;
}

int run_closure(const std::string& path, const std::vector<std::string>& of,
                bool in_epsilon, int max_vertices, const Output& out) {
  const brsc::SimplicialComplex s = brsc::load_complex(path);
  const brsc::Mask x = s.universe().mask_of(of);
  const brsc::Mask closed =
      in_epsilon ? brsc::epsilon(s, max_vertices).closure_of(x)
                 : brsc::closure(s, x);
  Json j;
  j["format"] = 1;
  j["verb"] = "closure";
  j["input"] = path;
  j["family"] = in_epsilon ? "epsilon" : "flats";
  j["of"] = labels_json(s.universe(), x);
  j["closure"] = labels_json(s.universe(), closed);
  out.emit(j);
  return 0;
}

int run_complex_result(const brsc::SimplicialComplex& s, const Output& out) {
  out.emit(brsc::complex_to_json(s));
  return 0;
}

int run_decompose(const std::string& path, bool lines_only, int max_vertices,
                  const Output& out) {
  const brsc::SimplicialComplex s = brsc::load_complex(path);
  const auto dec = brsc::br_decomposition(s, max_vertices);
  if (lines_only) {
    if (!dec) return 1;
    for (brsc::Mask line : dec->lines) {
      const auto labels = s.universe().labels_of(line);
      for (std::size_t i = 0; i < labels.size(); ++i)
        std::cout << (i ? "," : "") << labels[i];
      std::cout << "\n";
    }
    return 0;
  }
  Json j;
  j["format"] = 1;
  if (!dec) {
    j["holds"] = false;
    out.emit(j);
    return 1;
  }
  j["d"] = dec->d;
  j["lines"] = members_json(s.universe(), dec->lines);
  out.emit(j);
  return 0;
}

int run_pi1(const std::string& path, int max_vertices, const Output& out) {
  const brsc::SimplicialComplex s = brsc::load_complex(path);
  Json j;
  j["format"] = 1;
  j["verb"] = "pi1";
  j["input"] = path;
  j["rank"] = brsc::pi1_rank(s, max_vertices);
  out.emit(j);
  return 0;
}

int run_homology(const std::string& path, int max_vertices, const Output& out) {
  const brsc::SimplicialComplex s = brsc::load_complex(path);
  const brsc::Homology h = brsc::homology(s, max_vertices);
  Json j;
  j["format"] = 1;
  j["verb"] = "homology";
  j["input"] = path;
  j["betti"] = h.betti;
  Json torsion = Json::array();
  for (const auto& dim_torsion : h.torsion) {
    Json t = Json::array();
    for (const auto& factor : dim_torsion) t.push_back(factor.str());
    torsion.push_back(std::move(t));
  }
  j["torsion"] = std::move(torsion);
  out.emit(j);
  return 0;
}

int run_classify(int vertices, int dim, const std::string& filter, int threads,
                 const Output& out) {
  const brsc::ClassifyResult r =
      brsc::classify_pavings(vertices, dim, filter, threads);
  Json j;
  j["format"] = 1;
  j["verb"] = "classify";
  j["vertices"] = r.n;
  j["dim"] = r.d;
  j["filter"] = filter;
  j["scanned"] = r.scanned;
  j["matched"] = r.matched;
  Json classes = Json::array();
  const brsc::Universe u = brsc::Universe::numbered(r.n);
  for (const brsc::PavingClass& c : r.classes) {
    Json cls;
    cls["labeled_count"] = c.labeled_count;
    Json tops = Json::array();
    for (brsc::Mask t : c.top_faces) tops.push_back(labels_json(u, t));
    cls["top_faces"] = std::move(tops);
    classes.push_back(std::move(cls));
  }
  j["classes"] = std::move(classes);
  out.emit(j);
  return 0;
}

int run_fixtures(const std::string& name, bool verify, int max_vertices,
                 const Output& out) {
  Json j;
  j["format"] = 1;
  if (name.empty()) {
    Json list = Json::array();
    for (const std::string& n : brsc::fixture_names()) {
      const brsc::Fixture f = brsc::example(n);
      Json item;
      item["name"] = f.name;
      item["note"] = f.note;
      list.push_back(std::move(item));
    }
    j["fixtures"] = std::move(list);
    out.emit(j);
    return 0;
  }
  const brsc::Fixture f = brsc::example(name);
  j["name"] = f.name;
  j["note"] = f.note;
  j["complex"] = brsc::complex_to_json(f.complex);
  if (f.matrix) j["matrix"] = brsc::matrix_to_json(*f.matrix);
  int code = 0;
  if (verify) {
    const std::vector<std::string> mismatches =
        brsc::verify_fixture(f, max_vertices);
    j["mismatches"] = mismatches;
    code = mismatches.empty() ? 0 : 1;
  }
  out.emit(j);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boolean representable simplicial complexes"};
  app.require_subcommand(1);
  app.fallthrough();

  int max_vertices = brsc::kDefaultEnumCap;
  int threads = 1;
  Output out;
  app.add_option("--max-vertices", max_vertices,
                 "Cap on universe sizes for subset scans")
      ->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for classify")
      ->capture_default_str();
  app.add_flag("--human", out.human, "Tables instead of JSON");

  std::function<int()> action;

  // check
  std::string property, path_a, path_b;
  CLI::App* check = app.add_subcommand("check", "Test a property; exit 1 with a witness when it fails");
  check->add_option("property", property, "br, tbrsc, or near-matroid")
      ->required()
      ->check(CLI::IsMember({"br", "tbrsc", "near-matroid"}));
  check->add_option("file", path_a, "Complex JSON file")->required();
  check->callback([&] {
    action = [&] { return run_check(property, path_a, max_vertices, out); };
  });

  // analyze
  bool with_topology = false;
  CLI::App* analyze = app.add_subcommand("analyze", "Full report on a complex");
  analyze->add_option("file", path_a, "Complex JSON file")->required();
  analyze->add_flag("--topology", with_topology,
                    "Include fundamental group rank and Betti numbers");
  analyze->callback([&] {
    action = [&] {
      return run_analyze(path_a, with_topology, max_vertices, out);
    };
  });

  // epsilon / flats
  for (const char* verb : {"epsilon", "flats"}) {
    CLI::App* sub = app.add_subcommand(
        verb, verb[0] == 'e' ? "Members of the epsilon family"
                             : "Members of the lattice of flats");
    sub->add_option("file", path_a, "Complex JSON file")->required();
    sub->callback([&, verb] {
      action = [&, verb] { return run_family(verb, path_a, max_vertices, out); };
    });
  }

  // closure
  std::vector<std::string> of;
  bool in_epsilon = false;
  CLI::App* clo = app.add_subcommand("closure", "Closure of a vertex set");
  clo->add_option("file", path_a, "Complex JSON file")->required();
  clo->add_option("vertex", of, "Vertex labels")->required();
  clo->add_flag("--epsilon", in_epsilon,
                "Close in the epsilon family instead of the flats");
  clo->callback([&] {
    action = [&] {
      return run_closure(path_a, of, in_epsilon, max_vertices, out);
    };
  });

  // truncate
  int trunc_k = 0;
  CLI::App* trunc = app.add_subcommand("truncate", "Faces of size at most k");
  trunc->add_option("file", path_a, "Complex JSON file")->required();
  trunc->add_option("k", trunc_k, "Face size bound")->required();
  trunc->callback([&] {
    action = [&] {
      return run_complex_result(truncate(brsc::load_complex(path_a), trunc_k),
                                out);
    };
  });

  // join
  CLI::App* jn = app.add_subcommand("join", "Union of two face families");
  jn->add_option("first", path_a, "Complex JSON file")->required();
  jn->add_option("second", path_b, "Complex JSON file")->required();
  jn->callback([&] {
    action = [&] {
      return run_complex_result(
          join(brsc::load_complex(path_a), brsc::load_complex(path_b)), out);
    };
  });

  // pure-core
  CLI::App* core = app.add_subcommand("pure-core", "Top-dimensional part");
  core->add_option("file", path_a, "Complex JSON file")->required();
  core->callback([&] {
    action = [&] {
      return run_complex_result(pure_core(brsc::load_complex(path_a)), out);
    };
  });

  // decompose
  bool lines_only = false;
  CLI::App* dec = app.add_subcommand(
      "decompose", "Line decomposition of a representable paving complex");
  dec->add_option("file", path_a, "Complex JSON file")->required();
  dec->add_flag("--lines", lines_only, "Print the lines only, one per line");
  dec->callback([&] {
    action = [&] {
      return run_decompose(path_a, lines_only, max_vertices, out);
    };
  });

  // s0
  CLI::App* s0 = app.add_subcommand(
      "s0", "Largest recoverable subcomplex of a paving complex");
  s0->add_option("file", path_a, "Complex JSON file")->required();
  s0->callback([&] {
    action = [&] {
      return run_complex_result(
          largest_paving_tbrsc(brsc::load_complex(path_a), max_vertices), out);
    };
  });

  // pi1
  CLI::App* pi1 = app.add_subcommand(
      "pi1", "Rank of the fundamental group of a recoverable complex");
  pi1->add_option("file", path_a, "Complex JSON file")->required();
  pi1->callback([&] {
    action = [&] { return run_pi1(path_a, max_vertices, out); };
  });

  // homology
  CLI::App* hom = app.add_subcommand("homology",
                                     "Betti numbers and torsion coefficients");
  hom->add_option("file", path_a, "Complex JSON file")->required();
  hom->callback([&] {
    action = [&] { return run_homology(path_a, max_vertices, out); };
  });

  // flat-graph
  CLI::App* fg = app.add_subcommand("flat-graph",
                                    "Graph of flats in DOT format");
  fg->add_option("file", path_a, "Complex JSON file")->required();
  fg->callback([&] {
    action = [&] {
      std::cout << brsc::flat_graph_dot(
          brsc::flat_graph(brsc::load_complex(path_a), max_vertices));
      return 0;
    };
  });

  // gen
  std::string gen_kind, gen_line;
  int gen_n = 0, gen_k = 0, gen_d = 0;
  CLI::App* gen = app.add_subcommand("gen", "Generate a named complex");
  gen->add_option("kind", gen_kind, "uniform, swirl, nfb, or bcomplex")
      ->required()
      ->check(CLI::IsMember({"uniform", "swirl", "nfb", "bcomplex"}));
  gen->add_option("--n", gen_n, "Vertex count parameter");
  gen->add_option("--k", gen_k, "Rank parameter for uniform");
  gen->add_option("--d", gen_d, "Dimension parameter");
  gen->add_option("--line", gen_line,
                  "Comma-separated line labels for bcomplex");
  gen->callback([&] {
    action = [&] {
      if (gen_kind == "uniform")
        return run_complex_result(brsc::uniform(gen_k, gen_n), out);
      if (gen_kind == "swirl")
        return run_complex_result(brsc::swirl(gen_d), out);
      if (gen_kind == "nfb")
        return run_complex_result(brsc::nfb_complex(gen_n), out);
      const brsc::Universe u = brsc::Universe::numbered(gen_n);
      std::vector<std::string> labels;
      std::string current;
      for (const char c : gen_line) {
        if (c == ',') {
          labels.push_back(current);
          current.clear();
        } else {
          current.push_back(c);
        }
      }
      if (!current.empty()) labels.push_back(current);
      return run_complex_result(
          brsc::b_complex(u, gen_d, u.mask_of(labels), max_vertices), out);
    };
  });

  // classify
  int cls_vertices = 0, cls_dim = 0;
  std::string cls_filter;
  bool cls_paving = false;
  CLI::App* cls = app.add_subcommand(
      "classify", "Scan paving complexes and reduce up to isomorphism");
  cls->add_flag("--paving", cls_paving, "Candidate family (required)");
  cls->add_option("--vertices", cls_vertices, "Vertex count")->required();
  cls->add_option("--dim", cls_dim, "Dimension")->required();
  cls->add_option("--filter", cls_filter, "Property filter expression")
      ->required();
  cls->callback([&] {
    action = [&] {
      if (!cls_paving)
        throw brsc::UsageError(
            "classify scans paving complexes only; pass --paving");
      return run_classify(cls_vertices, cls_dim, cls_filter, threads, out);
    };
  });

  // fixtures
  std::string fixture_name;
  bool verify = false;
  CLI::App* fix = app.add_subcommand("fixtures", "Named example complexes");
  fix->add_option("name", fixture_name, "Fixture name (omit to list)");
  fix->add_flag("--verify", verify, "Recompute the pinned expectations");
  fix->callback([&] {
    action = [&] {
      return run_fixtures(fixture_name, verify, max_vertices, out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const brsc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
