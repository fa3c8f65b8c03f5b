#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coronae/coronae.hpp"

namespace {

using nlohmann::json;

// A graph source is a file path (wins when the file exists) or a named
// graph identifier, optionally parameterized: "cycle:4", "complete_bipartite:1,2".
coronae::Graph load_graph(const std::string& src) {
  namespace fs = std::filesystem;
  if (fs::exists(src)) {
    std::ifstream in(src, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    // edge-list files start with a decimal header or a comment; anything
    // else is treated as graph6
    for (char c : text) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
      if ((c >= '0' && c <= '9') || c == '#') return coronae::parse_edge_list_text(text);
      break;
    }
    return coronae::parse_graph6(text);
  }
  std::string name = src;
  std::vector<int> params;
  const auto colon = src.find(':');
  if (colon != std::string::npos) {
    name = src.substr(0, colon);
    std::istringstream ps(src.substr(colon + 1));
    std::string tok;
    while (std::getline(ps, tok, ',')) params.push_back(std::stoi(tok));
  }
  return coronae::named_graph(name, params);
}

std::optional<coronae::ProductOp> parse_op(const std::string& s) {
  if (s == "corona") return coronae::ProductOp::corona;
  if (s == "edge-corona") return coronae::ProductOp::edge_corona;
  if (s == "r-graph") return coronae::ProductOp::r_graph;
  if (s == "r-vertex") return coronae::ProductOp::r_vertex;
  if (s == "r-edge") return coronae::ProductOp::r_edge;
  return std::nullopt;
}

// "a" or "a:b:step", ascending
std::vector<double> parse_alpha_grid(const std::string& s) {
  std::vector<double> out;
  const auto c1 = s.find(':');
  if (c1 == std::string::npos) {
    out.push_back(std::stod(s));
    return out;
  }
  const auto c2 = s.find(':', c1 + 1);
  if (c2 == std::string::npos) throw coronae::BadParams("alpha grid must be a:b:step");
  const double a = std::stod(s.substr(0, c1));
  const double b = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
  const double step = std::stod(s.substr(c2 + 1));
  if (step <= 0.0 || b < a) throw coronae::BadParams("alpha grid must be ascending with step > 0");
  for (double x = a; x <= b + 1e-12; x += step) out.push_back(std::min(x, b));
  if (out.empty()) throw coronae::BadParams("alpha grid is empty");
  return out;
}

std::string fmt17(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

json spectrum_json(const coronae::Graph& g, double alpha, const coronae::Spectrum& s) {
  json ev = json::array();
  double weighted = 0.0;
  for (const auto& [v, m] : s.pairs) {
    ev.push_back({{"value", v}, {"multiplicity", m}});
    weighted += v * m;
  }
  const double expected_trace = alpha * 2.0 * g.m();
  return json{{"n", g.n()},
              {"alpha", alpha},
              {"eigenvalues", ev},
              {"trace_check", std::abs(weighted - expected_trace)}};
}

void emit_spectrum_csv(std::ostream& out, double alpha, const coronae::Spectrum& s) {
  for (const auto& [v, m] : s.pairs)
    out << fmt17(alpha) << "," << fmt17(v) << "," << m << "\n";
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw coronae::BadParams("cannot open output path " + path);
  return file;
}

int run(int argc, char** argv) {
  CLI::App app{"corona-type graph products and their A_alpha spectra"};
  app.require_subcommand(1);

  // build
  std::string b_op, b_g1, b_g2, b_out, b_format = "g6";
  auto* build = app.add_subcommand("build", "construct a product graph");
  build->add_option("op", b_op, "corona|edge-corona|r-graph|r-vertex|r-edge")->required();
  build->add_option("--g1", b_g1)->required();
  build->add_option("--g2", b_g2);
  build->add_option("-o,--output", b_out)->required();
  build->add_option("--format", b_format)->check(CLI::IsMember({"g6", "edges"}));

  // spectrum
  std::string s_graph, s_alpha = "0", s_method = "direct", s_op, s_g1, s_g2, s_emit = "json",
              s_out;
  double s_tol = 1e-8;
  auto* spectrum = app.add_subcommand("spectrum", "A_alpha eigenvalues");
  spectrum->add_option("--graph", s_graph);
  spectrum->add_option("--alpha", s_alpha, "alpha value or grid a:b:step");
  spectrum->add_option("--method", s_method)->check(CLI::IsMember({"direct", "formula"}));
  spectrum->add_option("--op", s_op);
  spectrum->add_option("--g1", s_g1);
  spectrum->add_option("--g2", s_g2);
  spectrum->add_option("--tol", s_tol);
  spectrum->add_option("--emit", s_emit)->check(CLI::IsMember({"json", "csv"}));
  spectrum->add_option("-o,--output", s_out);

  // charpoly
  std::string c_graph;
  double c_alpha = 0.0;
  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of A_alpha");
  charpoly->add_option("--graph", c_graph)->required();
  charpoly->add_option("--alpha", c_alpha)->required();

  // coronal
  std::string r_graph;
  double r_alpha = 0.0;
  std::optional<double> r_at;
  auto* coronal = app.add_subcommand("coronal", "coronal of A_alpha as a rational function");
  coronal->add_option("--graph", r_graph)->required();
  coronal->add_option("--alpha", r_alpha)->required();
  coronal->add_option("--at", r_at, "also evaluate at this point");

  // isospectral
  std::string i_g1, i_g2;
  std::optional<double> i_alpha;
  bool i_all = false;
  double i_tol = 1e-8;
  auto* iso = app.add_subcommand("isospectral", "compare A_alpha spectra");
  iso->add_option("--g1", i_g1)->required();
  iso->add_option("--g2", i_g2)->required();
  iso->add_option("--alpha", i_alpha);
  iso->add_flag("--all-alpha", i_all);
  iso->add_option("--tol", i_tol);

  // family
  std::string f_g1, f_g2, f_partner, f_op, f_side = "left", f_out;
  int f_depth = 1;
  auto* family = app.add_subcommand("family", "generate isospectral pairs");
  family->add_option("--g1", f_g1)->required();
  family->add_option("--g2", f_g2)->required();
  family->add_option("--partner", f_partner)->required();
  family->add_option("--op", f_op)->required();
  family->add_option("--side", f_side)->check(CLI::IsMember({"left", "right"}));
  family->add_option("--depth", f_depth)->check(CLI::PositiveNumber);
  family->add_option("-o,--output", f_out, "output directory")->required();

  // named
  bool n_list = false;
  auto* named = app.add_subcommand("named", "built-in graphs");
  named->add_flag("--list", n_list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (build->parsed()) {
    const auto op = parse_op(b_op);
    if (!op) {
      std::cerr << "unknown op: " << b_op << "\n";
      return 2;
    }
    const coronae::Graph g1 = load_graph(b_g1);
    coronae::Graph g2;
    if (*op != coronae::ProductOp::r_graph) {
      if (b_g2.empty()) {
        std::cerr << "--g2 is required for " << b_op << "\n";
        return 2;
      }
      g2 = load_graph(b_g2);
    }
    const coronae::Graph out = coronae::apply_product(*op, g1, g2).graph;
    std::ofstream file(b_out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open output path " << b_out << "\n";
      return 2;
    }
    file << (b_format == "g6" ? coronae::write_graph6(out) + "\n"
                              : coronae::write_edge_list_text(out));
    std::cerr << "wrote " << b_out << ": n=" << out.n() << " m=" << out.m() << "\n";
    return 0;
  }

  if (spectrum->parsed()) {
    const std::vector<double> alphas = parse_alpha_grid(s_alpha);
    coronae::Graph g;
    std::optional<coronae::ProductOp> op;
    coronae::Graph g1, g2;
    if (s_method == "formula") {
      op = parse_op(s_op);
      if (!op || s_g1.empty()) {
        std::cerr << "--method formula requires --op and --g1 (plus --g2)\n";
        return 2;
      }
      g1 = load_graph(s_g1);
      if (*op != coronae::ProductOp::r_graph) {
        if (s_g2.empty()) {
          std::cerr << "--g2 is required for " << s_op << "\n";
          return 2;
        }
        g2 = load_graph(s_g2);
      }
      g = coronae::apply_product(*op, g1, g2).graph;
    } else {
      if (s_graph.empty()) {
        std::cerr << "--graph is required with --method direct\n";
        return 2;
      }
      g = load_graph(s_graph);
    }

    // grid entries run concurrently; output stays ordered by alpha
    std::vector<std::future<coronae::Spectrum>> futs;
    for (double a : alphas)
      futs.push_back(std::async(std::launch::async, [&, a] {
        if (op) return coronae::theorem_spectrum(*op, g1, g2, a).spectrum;
        return coronae::sym_eigen(coronae::alpha_matrix(g, a));
      }));

    std::ofstream file;
    std::ostream& out = open_output(file, s_out);
    out.precision(17);
    json all = json::array();
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      const coronae::Spectrum s = futs[i].get();
      if (s_emit == "csv")
        emit_spectrum_csv(out, alphas[i], s);
      else
        all.push_back(spectrum_json(g, alphas[i], s));
    }
    if (s_emit == "json") out << (alphas.size() == 1 ? all[0] : all).dump(2) << "\n";
    return 0;
  }

  if (charpoly->parsed()) {
    const coronae::Graph g = load_graph(c_graph);
    const coronae::Polynomial p = coronae::char_poly(coronae::alpha_matrix(g, c_alpha));
    json coeffs = json::array();
    for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(p.coeff(k));
    std::cout << json{{"n", g.n()},
                      {"alpha", c_alpha},
                      {"coefficients_ascending", coeffs},
                      {"pretty", p.to_string()}}
                     .dump(2)
              << "\n";
    return 0;
  }

  if (coronal->parsed()) {
    const coronae::Graph g = load_graph(r_graph);
    const coronae::Coronal c =
        coronae::coronal_general(coronae::alpha_matrix(g, r_alpha)).reduced();
    json j{{"n", g.n()},
           {"alpha", r_alpha},
           {"numerator", c.rf.num().to_string()},
           {"denominator", c.rf.den().to_string()}};
    if (r_at) j["value"] = coronae::coronal_eval(c, *r_at);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (iso->parsed()) {
    const coronae::Graph g1 = load_graph(i_g1);
    const coronae::Graph g2 = load_graph(i_g2);
    if (i_all == i_alpha.has_value()) {
      std::cerr << "choose exactly one of --alpha and --all-alpha\n";
      return 2;
    }
    const coronae::IsoReport rep = i_all ? coronae::check_all_alpha(g1, g2, i_tol)
                                         : coronae::check_at_alpha(g1, g2, *i_alpha, i_tol);
    json ev = json::array();
    for (const auto& [a, d] : rep.evidence) ev.push_back({{"alpha", a}, {"deviation", d}});
    json j{{"verdict", rep.verdict},
           {"mode", i_all ? "all-alpha" : "at-alpha"},
           {"evidence", ev}};
    if (rep.witness_alpha) j["witness_alpha"] = *rep.witness_alpha;
    std::cout << j.dump(2) << "\n";
    return rep.verdict ? 0 : 1;
  }

  if (family->parsed()) {
    const auto op = parse_op(f_op);
    if (!op) {
      std::cerr << "unknown op: " << f_op << "\n";
      return 2;
    }
    coronae::FamilyRecipe recipe{load_graph(f_g1), load_graph(f_g2), load_graph(f_partner),
                                 *op,
                                 f_side == "left" ? coronae::Side::left : coronae::Side::right,
                                 f_depth};
    std::filesystem::create_directories(f_out);
    const coronae::FamilyResult res = coronae::build_family(recipe);
    json index = json::array();
    for (std::size_t i = 0; i < res.pairs.size(); ++i) {
      const auto& p = res.pairs[i];
      const std::string f1 = "pair" + std::to_string(i + 1) + "_a.g6";
      const std::string f2 = "pair" + std::to_string(i + 1) + "_b.g6";
      std::ofstream(std::filesystem::path(f_out) / f1) << coronae::write_graph6(p.first) << "\n";
      std::ofstream(std::filesystem::path(f_out) / f2) << coronae::write_graph6(p.second) << "\n";
      index.push_back({{"first", f1},
                       {"second", f2},
                       {"order", p.first.n()},
                       {"justification", p.justification}});
    }
    json j{{"pairs", index}};
    if (!res.halted_reason.empty()) j["halted"] = res.halted_reason;
    std::ofstream(std::filesystem::path(f_out) / "index.json") << j.dump(2) << "\n";
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (named->parsed()) {
    for (const auto& n : coronae::named_graph_names()) std::cout << n << "\n";
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const coronae::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
