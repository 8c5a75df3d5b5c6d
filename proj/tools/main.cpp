#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "liftings/grassmannian.hpp"
#include "liftings/homotopy_nd.hpp"
#include "liftings/io.hpp"
#include "liftings/lifting2d.hpp"
#include "liftings/polytopal.hpp"

using nlohmann::json;
using namespace liftings;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitParseError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot open output file: " + out_path);
  out << content;
}

json form_to_json(const MForm& f) {
  json terms = json::array();
  for (const auto& [key, c] : f.terms()) {
    json idx = json::array();
    for (int k : key) idx.push_back(k);
    terms.push_back({{"indices", idx}, {"coeff", c}});
  }
  return {{"ambient_dim", f.ambient_dim()}, {"degree", f.degree()}, {"terms", terms}};
}

std::string form_to_text(const MForm& f) {
  static const char* names[] = {"dx", "dy", "dz"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : f.terms()) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    os << std::abs(c);
    for (int k : key) {
      os << " " << (k < 3 && f.ambient_dim() <= 3 ? names[k] : "dx" + std::to_string(k + 1));
    }
  }
  if (first) os << "0";
  return os.str();
}

// word format: "i,j,+1;i,j,-1" (framework) or "f,+1;f,-1" (complex)
std::vector<std::vector<int>> parse_word(const std::string& text) {
  std::vector<std::vector<int>> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    std::vector<int> fields;
    std::stringstream fs(item);
    std::string f;
    while (std::getline(fs, f, ',')) fields.push_back(std::stoi(f));
    entries.push_back(std::move(fields));
  }
  return entries;
}

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_residual = 0.0;
};

void print_report(const std::vector<CheckResult>& checks, const std::string& format) {
  if (format == "json") {
    json doc;
    doc["checks"] = json::array();
    bool all = true;
    for (const auto& c : checks) {
      doc["checks"].push_back({{"name", c.name},
                               {"status", c.pass ? "pass" : "fail"},
                               {"max_residual", c.max_residual}});
      all = all && c.pass;
    }
    doc["exit_code"] = all ? kExitOk : kExitCheckFailure;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      std::cout << c.name << ": " << (c.pass ? "pass" : "fail")
                << " (max_residual=" << c.max_residual << ")\n";
    }
  }
}

GrassmannPath parse_path_doc(const std::string& text, int ambient_dim) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON path document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("samples") || !doc["samples"].is_array())
    throw ParseError("path document: requires a samples array");
  GrassmannPath path;
  for (const auto& sample : doc["samples"]) {
    if (!sample.is_array()) throw ParseError("path document: sample must be an array");
    AffineFlat flat;
    for (const auto& pt : sample) {
      if (!pt.is_array() || static_cast<int>(pt.size()) != ambient_dim)
        throw ParseError("path document: point with wrong dimension");
      Vec v(ambient_dim);
      for (int k = 0; k < ambient_dim; ++k) v[k] = pt[static_cast<std::size_t>(k)].get<double>();
      flat.spanning_points.push_back(std::move(v));
    }
    path.samples.push_back(std::move(flat));
  }
  return path;
}

int run_verify(const std::string& doc_text, unsigned seed, const std::string& format) {
  auto [fw, stress_opt] = parse_framework(doc_text);
  std::vector<CheckResult> checks;

  if (stress_opt) {
    CheckResult eq{"equilibrium", false, max_equilibrium_residual(fw, *stress_opt)};
    eq.pass = is_self_stress(fw, *stress_opt);
    checks.push_back(eq);

    CheckResult mono{"vertex_monodromy", true, 0.0};
    for (const auto& [id, p] : fw.vertices) {
      double m = vertex_monodromy(fw, *stress_opt, id).max_abs_coeff();
      mono.max_residual = std::max(mono.max_residual, m);
    }
    mono.pass = mono.max_residual <= tolerances().eps_form;
    checks.push_back(mono);

    if (fw.dim == 2 && checks.front().pass) {
      CheckResult lift{"lifting_consistency", false, 0.0};
      try {
        differential_lifting_2d(fw, *stress_opt);
        lift.pass = true;
      } catch (const Error&) {
        lift.pass = false;
      }
      checks.push_back(lift);
    }
  }

  CheckResult bij{"bijection_round_trip", true, 0.0};
  auto basis = self_stress_basis(fw);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (std::size_t trial = 0; trial < std::max<std::size_t>(basis.size(), 1); ++trial) {
    if (basis.empty()) break;
    Stress s;
    for (const auto& b : basis) {
      Stress scaled = b;
      scaled *= coeff(rng);
      s += scaled;
    }
    if (fw.dim == 2) {
      try {
        Stress back = recover_stress(fw, differential_lifting_2d(fw, s));
        for (const auto& e : fw.edges) {
          bij.max_residual = std::max(bij.max_residual,
                                      std::abs(back.values.at(e) - s.values.at(e)));
        }
      } catch (const Error&) {
        bij.pass = false;
      }
    } else {
      std::map<std::pair<int, int>, MForm> elems;
      for (const auto& [i, j] : fw.edges) {
        elems.emplace(std::pair{i, j}, elementary_lifting_form(fw, s, i, j, +1));
      }
      try {
        Stress back = recover_stress_nd(fw, elems);
        for (const auto& e : fw.edges) {
          bij.max_residual = std::max(bij.max_residual,
                                      std::abs(back.values.at(e) - s.values.at(e)));
        }
      } catch (const Error&) {
        bij.pass = false;
      }
    }
  }
  bij.pass = bij.pass && bij.max_residual <= tolerances().eps_form;
  checks.push_back(bij);

  print_report(checks, format);
  for (const auto& c : checks) {
    if (!c.pass) return kExitCheckFailure;
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-stresses and differential liftings of frameworks"};
  app.require_subcommand(1);

  double eps_geom = tolerances().eps_geom;
  double eps_form = tolerances().eps_form;
  unsigned seed = 12345u;
  std::string format = "text";
  app.add_option("--eps-geom", eps_geom, "geometric predicate threshold");
  app.add_option("--eps-form", eps_form, "form comparison threshold");
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string input_path, out_path, word_text, path_path;
  bool perpendicular = false;

  auto* cmd_basis = app.add_subcommand("stress-basis", "self-stress nullspace basis");
  cmd_basis->add_option("input", input_path, "framework JSON")->required();

  auto* cmd_lift2d = app.add_subcommand("lift2d", "differential lifting over chambers");
  cmd_lift2d->add_option("input", input_path, "framework JSON with stresses")->required();

  auto* cmd_liftnd = app.add_subcommand("lift-nd", "lifting of a crossing word");
  cmd_liftnd->add_option("input", input_path, "framework JSON with stresses")->required();
  cmd_liftnd->add_option("--word", word_text, "crossing word i,j,sign;...")->required();

  auto* cmd_liftc = app.add_subcommand("lift-complex", "lifting of a face word");
  cmd_liftc->add_option("input", input_path, "complex JSON with loads")->required();
  cmd_liftc->add_option("--word", word_text, "face word f,sign;...")->required();

  auto* cmd_grass = app.add_subcommand("grassmann-lift", "Grassmannian lifting along a path");
  cmd_grass->add_option("input", input_path, "framework or complex JSON")->required();
  cmd_grass->add_option("--path", path_path, "path JSON with flat samples")->required();

  auto* cmd_verify = app.add_subcommand("verify", "invariant checks with a report");
  cmd_verify->add_option("input", input_path, "framework JSON")->required();

  auto* cmd_obj = app.add_subcommand("export-obj", "OBJ export of the polyhedral lifting");
  cmd_obj->add_option("input", input_path, "framework JSON with stresses")->required();
  cmd_obj->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* cmd_svg = app.add_subcommand("export-svg", "SVG export of the chamber complex");
  cmd_svg->add_option("input", input_path, "framework JSON")->required();
  cmd_svg->add_option("-o,--output", out_path, "output file (default stdout)");
  cmd_svg->add_flag("--perpendicular", perpendicular, "unused; reserved");

  CLI11_PARSE(app, argc, argv);
  tolerances().eps_geom = eps_geom;
  tolerances().eps_form = eps_form;

  try {
    const std::string text = read_file(input_path);

    if (cmd_basis->parsed()) {
      auto [fw, s] = parse_framework(text);
      auto basis = self_stress_basis(fw);
      if (format == "json") {
        json doc;
        doc["dimension"] = basis.size();
        doc["basis"] = json::array();
        for (const auto& b : basis) {
          json elem = json::array();
          for (const auto& [e, w] : b.values) {
            elem.push_back({{"i", e.first}, {"j", e.second}, {"stress", w}});
          }
          doc["basis"].push_back(elem);
        }
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "self-stress basis dimension: " << basis.size() << "\n";
        for (std::size_t k = 0; k < basis.size(); ++k) {
          std::cout << "basis[" << k << "]:";
          for (const auto& [e, w] : basis[k].values) {
            std::cout << " (" << e.first << "," << e.second << ")=" << w;
          }
          std::cout << "\n";
        }
      }
      return kExitOk;
    }

    if (cmd_lift2d->parsed()) {
      auto [fw, s] = parse_framework(text);
      if (!s) throw ParseError("lift2d: document carries no stresses");
      DifferentialLifting2D dl = differential_lifting_2d(fw, *s);
      if (format == "json") {
        json doc;
        doc["unbounded_id"] = dl.complex.unbounded_id;
        doc["chambers"] = json::array();
        for (const auto& [c, f] : dl.forms) {
          doc["chambers"].push_back({{"id", c}, {"form", form_to_json(f)}});
        }
        std::cout << doc.dump(2) << "\n";
      } else {
        for (const auto& [c, f] : dl.forms) {
          std::cout << "chamber " << c << (c == dl.complex.unbounded_id ? " (unbounded)" : "")
                    << ": " << form_to_text(f) << "\n";
        }
      }
      return kExitOk;
    }

    if (cmd_liftnd->parsed()) {
      auto [fw, s] = parse_framework(text);
      if (!s) throw ParseError("lift-nd: document carries no stresses");
      CrossingWord w;
      for (const auto& fields : parse_word(word_text)) {
        if (fields.size() != 3) throw ParseError("lift-nd: word entries need i,j,sign");
        w.entries.push_back({fields[0], fields[1], fields[2]});
      }
      MForm f = lifting_of_word(fw, *s, w);
      if (format == "json") {
        std::cout << form_to_json(f).dump(2) << "\n";
      } else {
        std::cout << form_to_text(f) << "\n";
      }
      return kExitOk;
    }

    if (cmd_liftc->parsed()) {
      auto [c, w] = parse_complex(text);
      if (!w) throw ParseError("lift-complex: document carries no loads");
      std::vector<std::pair<int, int>> word;
      for (const auto& fields : parse_word(word_text)) {
        if (fields.size() != 2) throw ParseError("lift-complex: word entries need f,sign");
        word.emplace_back(fields[0], fields[1]);
      }
      MForm f = lifting_of_word_m(c, *w, word);
      if (format == "json") {
        std::cout << form_to_json(f).dump(2) << "\n";
      } else {
        std::cout << form_to_text(f) << "\n";
      }
      return kExitOk;
    }

    if (cmd_grass->parsed()) {
      FaceSystem fs;
      try {
        auto [fw, s] = parse_framework(text);
        if (!s) throw ParseError("grassmann-lift: framework carries no stresses");
        fs = face_system_from_framework(fw, *s);
      } catch (const ParseError&) {
        auto [c, w] = parse_complex(text);
        if (!w) throw ParseError("grassmann-lift: complex carries no loads");
        fs = face_system_from_complex(c, *w);
      }
      GrassmannPath path = parse_path_doc(read_file(path_path), fs.ambient_dim);
      auto events = path_crossings(path, fs);
      double value = grassmann_lifting(path, fs);
      if (format == "json") {
        json doc;
        doc["lifting"] = value;
        doc["crossings"] = json::array();
        for (const auto& ev : events) {
          doc["crossings"].push_back({{"face", ev.face}, {"t", ev.t}, {"mu", ev.mu}});
        }
        std::cout << doc.dump(2) << "\n";
      } else {
        for (const auto& ev : events) {
          std::cout << "crossing: face " << ev.face << " at t=" << ev.t
                    << " mu=" << ev.mu << "\n";
        }
        std::cout << "lifting: " << value << "\n";
      }
      return kExitOk;
    }

    if (cmd_verify->parsed()) return run_verify(text, seed, format);

    if (cmd_obj->parsed()) {
      auto [fw, s] = parse_framework(text);
      if (!s) throw ParseError("export-obj: document carries no stresses");
      PolyhedralLifting pl = integrate_polyhedral_lifting(fw, *s);
      write_output(out_path, export_obj(pl));
      return kExitOk;
    }

    if (cmd_svg->parsed()) {
      auto [fw, s] = parse_framework(text);
      if (s) {
        DifferentialLifting2D dl = differential_lifting_2d(fw, *s);
        write_output(out_path, export_svg(dl.complex, &dl.forms));
      } else {
        ChamberComplex cc = build_chamber_complex(fw);
        write_output(out_path, export_svg(cc));
      }
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitOk;
}
