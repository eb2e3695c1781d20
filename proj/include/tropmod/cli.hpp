#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "tropmod/abstract_trop.hpp"
#include "tropmod/homology.hpp"
#include "tropmod/plane_trop.hpp"

namespace tropmod::cli {

/// Exit status: 0 success, 1 domain error, 2 usage error.
enum ExitCode : int { kOk = 0, kDomain = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  unsigned threads = 1;
  std::size_t max_generators = HomologyOptions{}.max_generators;
  std::string format = "json";
  std::string output;  // empty: stdout

  int genus = -1;
  int markings = -1;
  bool top_weight = false;
  bool normalize_volume = false;
  std::string input;
  std::string svg;
  std::string viewport;
};

namespace detail {

inline std::string enumerate_csv(const TypeCatalog& cat) {
  std::ostringstream os;
  os << "index,vertices,edges,weights,edge_list,markings\n";
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& g = cat.type(i);
    os << i << "," << g.num_vertices() << "," << g.num_edges() << ",";
    for (int v = 0; v < g.num_vertices(); ++v) os << (v ? ";" : "") << g.weight(v);
    os << ",";
    for (int e = 0; e < g.num_edges(); ++e) os << (e ? ";" : "") << g.edge(e).u << "-" << g.edge(e).v;
    os << ",";
    for (int k = 0; k < g.num_markings(); ++k) os << (k ? ";" : "") << g.markings()[k];
    os << "\n";
  }
  return os.str();
}

inline Json enumerate_json(const TypeCatalog& cat) {
  Json j;
  j["g"] = cat.genus();
  j["n"] = cat.markings();
  j["count"] = cat.size();
  j["f_vector"] = cat.f_vector();
  Json types = Json::array();
  for (const auto& t : cat.types()) types.push_back(to_json(t));
  j["types"] = std::move(types);
  return j;
}

inline std::string enumerate_dot(const TypeCatalog& cat) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cat.size(); ++i) os << to_dot(cat.type(i), "type" + std::to_string(i));
  return os.str();
}

inline Json complex_json(const LinkComplex& link) {
  const auto& cat = link.catalog();
  Json j;
  j["g"] = cat.genus();
  j["n"] = cat.markings();
  j["dimension"] = complex_dimension(link.poset());
  j["f_vector"] = cat.f_vector();
  Json types = Json::array();
  for (std::size_t t = 0; t < cat.size(); ++t) types.push_back(to_json(cat.type(t)));
  j["types"] = std::move(types);
  Json cells = Json::array();
  for (std::size_t c = 0; c < link.size(); ++c) {
    const auto& cell = link.cells()[c];
    Json faces = Json::array();
    for (const auto& f : cell.faces) faces.push_back(f ? Json(*f) : Json(nullptr));
    cells.push_back({{"index", c},
                     {"type", cell.type},
                     {"dimension", cell.dimension},
                     {"aut_order", cell.cone.edge_group.order},
                     {"orientable", !cell.cone.edge_group.has_odd_element},
                     {"faces", std::move(faces)}});
  }
  j["cells"] = std::move(cells);
  Json covers = Json::array();
  for (const auto& r : link.poset().covers()) covers.push_back(Json::array({r.parent, r.child, r.witness.front()}));
  j["covers"] = std::move(covers);
  return j;
}

inline Json homology_json(const HomologyProfile& h) {
  Json j;
  j["g"] = h.g;
  j["n"] = h.n;
  j["min_degree"] = h.min_degree;
  j["chain_ranks"] = h.chain_ranks;
  j["betti"] = h.reduced_betti;
  j["euler"] = euler_characteristic(h);
  Json tw = Json::object();
  for (const auto& [k, r] : top_weight_cohomology(h)) tw[std::to_string(k)] = r;
  j["top_weight"] = std::move(tw);
  return j;
}

inline std::string homology_csv(const HomologyProfile& h, bool top_weight) {
  std::ostringstream os;
  if (top_weight) {
    const int d = 3 * h.g - 3 + h.n;
    os << "cohomological_degree,weight,rank\n";
    for (const auto& [k, r] : top_weight_cohomology(h)) os << k << "," << 2 * d << "," << r << "\n";
  } else {
    os << "degree,chain_rank,betti\n";
    for (int p = h.min_degree; p <= h.max_degree(); ++p) os << p << "," << h.chain_rank(p) << "," << h.betti(p) << "\n";
  }
  return os.str();
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError("invalid JSON in '" + path + "': " + ex.what());
  }
}

inline Viewport parse_viewport(const std::string& text) {
  Viewport v;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream is(text);
  if (!(is >> v.zmin >> c1 >> v.wmin >> c2 >> v.zmax >> c3 >> v.wmax) || c1 != ',' || c2 != ',' || c3 != ',' ||
      !(v.zmin < v.zmax) || !(v.wmin < v.wmax))
    throw ParseError("viewport must be zmin,wmin,zmax,wmax with min < max");
  return v;
}

inline std::string error_kind(const std::exception& ex) {
  if (dynamic_cast<const UnstableTypeError*>(&ex)) return "unstable-type";
  if (dynamic_cast<const MalformedGraphError*>(&ex)) return "malformed-graph";
  if (dynamic_cast<const ModelError*>(&ex)) return "model";
  if (dynamic_cast<const ExtendedCurveError*>(&ex)) return "extended-curve";
  if (dynamic_cast<const ResourceLimitError*>(&ex)) return "resource-limit";
  if (dynamic_cast<const ParseError*>(&ex)) return "input";
  if (dynamic_cast<const ConsistencyError*>(&ex)) return "internal-consistency";
  return "error";
}

}  // namespace detail

/// Executes a parsed configuration, writing the artifact to `out`.
inline void execute(const RunConfig& cfg, std::ostream& out) {
  const EnumerationOptions eopts{cfg.threads, 0};
  if (cfg.command == "enumerate") {
    auto cat = enumerate_types(cfg.genus, cfg.markings, eopts);
    if (cfg.format == "csv")
      out << detail::enumerate_csv(cat);
    else if (cfg.format == "dot")
      out << detail::enumerate_dot(cat);
    else
      out << detail::enumerate_json(cat).dump(2) << "\n";
  } else if (cfg.command == "complex") {
    auto link = link_cells(cfg.genus, cfg.markings, eopts);
    if (cfg.format == "dot")
      out << hasse_dot(link.poset());
    else
      out << detail::complex_json(link).dump(2) << "\n";
  } else if (cfg.command == "homology") {
    auto h = reduced_homology(cfg.genus, cfg.markings, {cfg.threads, cfg.max_generators});
    if (cfg.format == "csv")
      out << detail::homology_csv(h, cfg.top_weight);
    else
      out << detail::homology_json(h).dump(2) << "\n";
  } else if (cfg.command == "tropicalize-model") {
    auto curve = tropicalize_model(model_from_json(detail::read_json_file(cfg.input)));
    if (cfg.normalize_volume) curve = rescale_to_volume_one(curve);
    if (cfg.format == "dot")
      out << to_dot(curve);
    else
      out << to_json(curve).dump(2) << "\n";
  } else if (cfg.command == "tropicalize-plane") {
    auto f = polynomial_from_json(detail::read_json_file(cfg.input));
    auto curve = tropical_curve(f);
    if (!cfg.svg.empty()) {
      const Viewport view = cfg.viewport.empty() ? default_viewport(curve) : detail::parse_viewport(cfg.viewport);
      std::ofstream svg(cfg.svg);
      if (!svg) throw ParseError("cannot write '" + cfg.svg + "'");
      svg << to_svg(curve, view);
    }
    PlaneJson j;
    j["polynomial"] = to_json(f);
    j["curve"] = to_json(curve);
    j["subdivision"] = to_json(newton_subdivision(f));
    out << j.dump(2) << "\n";
  }
}

/// Parses argv and runs the selected subcommand. Never throws.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"Tropical moduli of curves: stable graph enumeration, link homology, tropicalization"};
  app.name("tropmod");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", cfg.threads, "Worker threads (output is independent of this)")
      ->envname("TROPMOD_THREADS")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--max-generators", cfg.max_generators, "Abort homology above this many combinatorial types (0: no cap)")
      ->envname("TROPMOD_MAX_GENERATORS");
  app.add_option("-o,--output", cfg.output, "Write the result here instead of stdout")->envname("TROPMOD_OUTPUT");

  auto add_gn = [&](CLI::App* sub) {
    sub->add_option("--genus,-g", cfg.genus, "Genus g")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--markings,-n", cfg.markings, "Number of marked points n")->required()->check(CLI::NonNegativeNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "List stable combinatorial types of genus g with n markings");
  add_gn(enumerate);
  enumerate->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot", "csv"}));

  auto* complex = app.add_subcommand("complex", "Cells and face poset of the link of the tropical moduli space");
  add_gn(complex);
  complex->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot"}));

  auto* homology = app.add_subcommand("homology", "Reduced rational homology of the link");
  add_gn(homology);
  homology->add_flag("--top-weight", cfg.top_weight, "Report top-weight cohomology of M_g,n (csv)");
  homology->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));

  auto* model = app.add_subcommand("tropicalize-model", "Dual metric graph of a stable model's special fiber");
  model->add_option("model", cfg.input, "Model JSON file")->required();
  model->add_flag("--normalize-volume", cfg.normalize_volume, "Rescale edge lengths to total 1");
  model->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot"}));

  auto* plane = app.add_subcommand("tropicalize-plane", "Tropical plane curve of a Laurent polynomial");
  plane->add_option("polynomial", cfg.input, "Polynomial JSON file")->required();
  plane->add_option("--svg", cfg.svg, "Also render the curve to this SVG file");
  plane->add_option("--viewport", cfg.viewport, "SVG viewport zmin,wmin,zmax,wmax");
  plane->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& s) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << Json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump() << "\n";
    err << "Run with --help for usage.\n";
    return kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.output.empty()) {
      execute(cfg, out);
    } else {
      std::ostringstream buffer;
      execute(cfg, buffer);
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw ParseError("cannot write '" + cfg.output + "'");
      file << buffer.str();
    }
    return kOk;
  } catch (const ResourceLimitError& ex) {
    err << Json{{"error",
                 {{"kind", "resource-limit"}, {"message", ex.what()}, {"partial_sizes", ex.partial_sizes()}}}}
               .dump()
        << "\n";
    return kDomain;
  } catch (const std::exception& ex) {
    err << Json{{"error", {{"kind", detail::error_kind(ex)}, {"message", ex.what()}}}}.dump() << "\n";
    return kDomain;
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"tropmod"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace tropmod::cli
