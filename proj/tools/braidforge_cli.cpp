// braidforge: braid representations, knot invariants, anyon data, plat
// simulation, and Yang-Baxter verification from one binary.
//
// Exit codes: 0 success, 2 flag/input validation error, 1 computation failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidforge/anyon.hpp"
#include "braidforge/braid.hpp"
#include "braidforge/burau.hpp"
#include "braidforge/jonesrep.hpp"
#include "braidforge/localize.hpp"
#include "braidforge/ring.hpp"
#include "braidforge/simulate.hpp"
#include "braidforge/templieb.hpp"

namespace bf = braidforge;
using nlohmann::json;

namespace {

// Raised for failures that indicate bad input rather than a broken
// computation; mapped to exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt_cx(bf::Cx z) {
  return "(" + fmt_num(z.real()) + ", " + fmt_num(z.imag()) + ")";
}

double default_tol() {
  if (const char* env = std::getenv("BRAIDFORGE_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || v <= 0.0) throw ValidationError("BRAIDFORGE_TOL is not a positive number");
    return v;
  }
  return 1e-9;
}

json poly_json(const bf::LaurentPoly& p) { return json::parse(p.json()); }

// Row-major [[re,im],...] per the machine-readable matrix contract.
json matrix_json(const bf::ComplexMatrix& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      data.push_back({m(i, j).real(), m(i, j).imag()});
  return data;
}

void print_matrix(const bf::ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::string line;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) line += "  ";
      line += fmt_cx(m(i, j));
    }
    std::cout << line << "\n";
  }
}

std::vector<std::pair<int, int>> chord_pairs(const bf::TLDiagram& d) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < d.points(); ++i)
    if (d.partner[i] > i) pairs.emplace_back(i, d.partner[i]);
  return pairs;
}

std::string chord_text(const bf::TLDiagram& d) {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, y] : chord_pairs(d)) {
    if (!first) out += ",";
    first = false;
    out += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
  return out + "}";
}

struct WordFlags {
  std::string word;
  int strands = 0;
};

void add_word_flags(CLI::App* cmd, WordFlags& wf, bool strands_required = true) {
  cmd->add_option("--word", wf.word, "braid word: signed integers, whitespace separated")
      ->required();
  auto* s = cmd->add_option("--strands", wf.strands, "number of strands");
  if (strands_required) s->required();
}

bf::BraidWord parse_word(const WordFlags& wf) {
  try {
    return bf::parse_braid(wf.word, wf.strands);
  } catch (const std::exception& e) {
    throw ValidationError(e.what());
  }
}

int run(int argc, char** argv) {
  CLI::App app{"braid representations, knot invariants, anyon models, plat simulation"};
  app.require_subcommand(1);
  bool json_out = false;

  // ---- braid ----
  auto* braid_cmd = app.add_subcommand("braid", "word bookkeeping: writhe, permutation");
  WordFlags braid_wf;
  add_word_flags(braid_cmd, braid_wf);
  braid_cmd->add_flag("--json", json_out, "emit a single JSON object");

  // ---- burau ----
  auto* burau_cmd = app.add_subcommand("burau", "unreduced/reduced Burau matrix over Z[t^{±1}]");
  WordFlags burau_wf;
  bool burau_reduced = false;
  add_word_flags(burau_cmd, burau_wf);
  burau_cmd->add_flag("--reduced", burau_reduced, "reduced (n-1)x(n-1) representation");
  burau_cmd->add_flag("--json", json_out, "emit a single JSON object");

  // ---- alexander ----
  auto* alex_cmd = app.add_subcommand("alexander", "Alexander polynomial of the trace closure");
  WordFlags alex_wf;
  bool alex_conway = false;
  add_word_flags(alex_cmd, alex_wf);
  alex_cmd->add_flag("--conway", alex_conway, "Conway normalization, printed in z");
  alex_cmd->add_flag("--json", json_out, "emit a single JSON object");

  // ---- bracket ----
  auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket as a Temperley-Lieb element");
  WordFlags bracket_wf;
  add_word_flags(bracket_cmd, bracket_wf);
  bracket_cmd->add_flag("--json", json_out, "emit a single JSON object");

  // ---- jones ----
  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial of the trace closure");
  WordFlags jones_wf;
  int jones_r = 0;
  std::string jones_branch = "";
  add_word_flags(jones_cmd, jones_wf);
  jones_cmd->add_option("--at", jones_r, "evaluate at the level r-2 root (r >= 3)");
  jones_cmd->add_option("--branch", jones_branch, "root branch A1..A4 (with --at)");
  jones_cmd->add_flag("--json", json_out, "emit a single JSON object");

  // ---- tl ----
  auto* tl_cmd = app.add_subcommand("tl", "Temperley-Lieb diagram algebra tables");
  tl_cmd->require_subcommand(1);
  int tl_n = 0;
  auto* tl_gram = tl_cmd->add_subcommand("gram", "Gram matrix and determinant over Z[d]");
  tl_gram->add_option("--n", tl_n, "strand count")->required();
  tl_gram->add_flag("--json", json_out, "emit a single JSON object");
  auto* tl_basis = tl_cmd->add_subcommand("basis", "noncrossing diagram basis as chord pairs");
  tl_basis->add_option("--n", tl_n, "strand count")->required();
  tl_basis->add_flag("--json", json_out, "emit a single JSON object");

  // ---- anyon ----
  auto* anyon_cmd = app.add_subcommand("anyon", "fusion-category data for one level");
  anyon_cmd->require_subcommand(1);
  int an_level = 0, an_leaf = 1, an_n = 0, an_charge = 0;
  std::string an_branch = "";
  auto* an_dims = anyon_cmd->add_subcommand("dims", "fusion-tree space dimension");
  an_dims->add_option("--level", an_level, "level k (labels 0..k)")->required();
  an_dims->add_option("--leaf", an_leaf, "leaf label a");
  an_dims->add_option("--n", an_n, "number of leaves")->required();
  an_dims->add_option("--charge", an_charge, "total charge i");
  an_dims->add_flag("--json", json_out, "emit a single JSON object");
  auto* an_f = anyon_cmd->add_subcommand("fsymbol", "2x2 unitary F-matrix blocks");
  an_f->add_option("--level", an_level, "level k")->required();
  an_f->add_option("--branch", an_branch, "root branch A1..A4");
  an_f->add_flag("--json", json_out, "emit a single JSON object");
  auto* an_r = anyon_cmd->add_subcommand("rsymbol", "R-symbols keyed by admissible triples");
  an_r->add_option("--level", an_level, "level k")->required();
  an_r->add_option("--branch", an_branch, "root branch A1..A4");
  an_r->add_flag("--json", json_out, "emit a single JSON object");

  // ---- rep ----
  auto* rep_cmd = app.add_subcommand("rep", "braid-generator images on fusion-tree bases");
  rep_cmd->require_subcommand(1);
  int rep_level = 0, rep_n = 0, rep_charge = 0, rep_leaf = 1;
  long long rep_bound = 100000;
  bool rep_matrices = false, rep_closure = false, rep_projective = false;
  double rep_tol = 0.0;
  std::string rep_branch = "";
  auto* rep_jones = rep_cmd->add_subcommand("jones", "Jones representation sector");
  rep_jones->add_option("--level", rep_level, "level k")->required();
  rep_jones->add_option("--n", rep_n, "strand count")->required();
  rep_jones->add_option("--charge", rep_charge, "total charge")->required();
  rep_jones->add_option("--leaf", rep_leaf, "leaf label (default 1)");
  rep_jones->add_option("--branch", rep_branch, "root branch A1..A4");
  rep_jones->add_flag("--matrices", rep_matrices, "print the generator matrices");
  rep_jones->add_flag("--closure", rep_closure, "breadth-first group closure");
  rep_jones->add_option("--bound", rep_bound, "closure element bound");
  rep_jones->add_flag("--projective", rep_projective, "identify global phases in the closure");
  rep_jones->add_option("--tol", rep_tol, "numeric tolerance override");
  rep_jones->add_flag("--json", json_out, "emit a single JSON object");

  // ---- sim ----
  auto* sim_cmd = app.add_subcommand("sim", "plat-closure amplitude simulation");
  sim_cmd->require_subcommand(1);
  WordFlags sim_wf;
  int sim_r = 5;
  double sim_eps = 0.01, sim_delta = 0.01;
  std::uint64_t sim_seed = 0;
  bool sim_exact = false;
  std::string sim_branch = "";
  auto* sim_plat = sim_cmd->add_subcommand("plat", "sampled bracket evaluation");
  add_word_flags(sim_plat, sim_wf);
  sim_plat->add_option("--r", sim_r, "root order r (level r-2)");
  sim_plat->add_option("--branch", sim_branch, "root branch A1..A4");
  sim_plat->add_option("--eps", sim_eps, "additive error target");
  sim_plat->add_option("--delta", sim_delta, "failure probability");
  sim_plat->add_option("--seed", sim_seed, "sampling seed");
  sim_plat->add_flag("--exact", sim_exact, "amplitude only, no sampling");
  sim_plat->add_flag("--json", json_out, "emit a single JSON object");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "Yang-Baxter and unitarity checks");
  verify_cmd->require_subcommand(1);
  std::string ver_fixture = "", ver_matrix = "";
  double ver_tol = 0.0;
  auto* ver_ybe = verify_cmd->add_subcommand("ybe", "residual of the constant YBE");
  ver_ybe->add_option("--fixture", ver_fixture, "built-in operator: ising | level4");
  ver_ybe->add_option("--matrix", ver_matrix, "JSON file: rows of [re,im] entries");
  ver_ybe->add_option("--tol", ver_tol, "pass/fail tolerance");
  ver_ybe->add_flag("--json", json_out, "emit a single JSON object");

  // ---- localize ----
  auto* loc_cmd = app.add_subcommand("localize", "localization search certificates");
  loc_cmd->require_subcommand(1);
  int loc_d = 2, loc_nmax = 12;
  auto* loc_cert = loc_cmd->add_subcommand("fib-cert", "Fibonacci non-localizability certificate");
  loc_cert->add_option("--d", loc_d, "candidate local dimension")->required();
  loc_cert->add_option("--nmax", loc_nmax, "largest strand count examined");
  loc_cert->add_flag("--json", json_out, "emit a single JSON object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*braid_cmd) {
    const bf::BraidWord b = parse_word(braid_wf);
    const bf::Permutation p = bf::underlying_permutation(b);
    if (json_out) {
      json j{{"strands", b.strands},
             {"letters", b.letters},
             {"length", b.letters.size()},
             {"writhe", bf::writhe(b)},
             {"permutation", p}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "strands: " << b.strands << "\n";
      std::cout << "length: " << b.letters.size() << "\n";
      std::cout << "writhe: " << bf::writhe(b) << "\n";
      std::string pl = "permutation:";
      for (int x : p) pl += " " + std::to_string(x);
      std::cout << pl << "\n";
    }
    return 0;
  }

  if (*burau_cmd) {
    const bf::BraidWord b = parse_word(burau_wf);
    if (burau_reduced && b.strands < 2)
      throw ValidationError("reduced Burau needs at least 2 strands");
    const bf::PolyMatrix m = burau_reduced ? bf::reduced_burau(b) : bf::unreduced_burau(b);
    if (json_out) {
      json rows = json::array();
      for (const auto& row : m) {
        json r = json::array();
        for (const auto& e : row) r.push_back(poly_json(e));
        rows.push_back(r);
      }
      json j{{"strands", b.strands}, {"reduced", burau_reduced}, {"entries", rows}};
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& row : m) {
        std::string line;
        for (std::size_t jcol = 0; jcol < row.size(); ++jcol) {
          if (jcol) line += " | ";
          line += row[jcol].str();
        }
        std::cout << "[ " << line << " ]\n";
      }
    }
    return 0;
  }

  if (*alex_cmd) {
    const bf::BraidWord b = parse_word(alex_wf);
    const bf::LaurentPoly value =
        alex_conway ? bf::conway_z(bf::conway(b)) : bf::alexander(b);
    if (json_out) {
      json j{{"strands", b.strands},
             {"normalization", alex_conway ? "conway" : "alexander"},
             {"polynomial", poly_json(value)},
             {"text", value.str()}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << value.str() << "\n";
    }
    return 0;
  }

  if (*bracket_cmd) {
    const bf::BraidWord b = parse_word(bracket_wf);
    const bf::TLPoly x = bf::kauffman_bracket(b);
    if (json_out) {
      json terms = json::array();
      for (const auto& [d, c] : x.terms) {
        json pairs = json::array();
        for (const auto& [u, v] : chord_pairs(d)) pairs.push_back({u, v});
        terms.push_back({{"pairs", pairs}, {"coeff", poly_json(c)}});
      }
      json j{{"strands", b.strands}, {"terms", terms}};
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& [d, c] : x.terms)
        std::cout << chord_text(d) << ": " << c.str() << "\n";
    }
    return 0;
  }

  if (*jones_cmd) {
    const bf::BraidWord b = parse_word(jones_wf);
    const bf::LaurentPoly v = bf::jones(b);
    if (jones_cmd->count("--at")) {
      if (jones_r < 3) throw ValidationError("--at requires r >= 3");
      bf::Branch br = bf::default_branch(jones_r - 2);
      if (!jones_branch.empty()) br = bf::parse_branch(jones_branch);
      const bf::UnitaryParams up = bf::unitary_params(jones_r, br);
      const bf::Cx value = v.eval(up.q);
      if (json_out) {
        json j{{"strands", b.strands},
               {"r", jones_r},
               {"branch", bf::branch_name(br)},
               {"q", {up.q.real(), up.q.imag()}},
               {"value", {value.real(), value.imag()}}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "q: " << fmt_cx(up.q) << "\n";
        std::cout << "J: " << fmt_cx(value) << "\n";
      }
    } else if (json_out) {
      json j{{"strands", b.strands}, {"polynomial", poly_json(v)}, {"text", v.str()}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << v.str() << "\n";
    }
    return 0;
  }

  if (*tl_cmd) {
    if (tl_n < 1 || tl_n > 8) throw ValidationError("--n must be in [1, 8]");
    if (*tl_gram) {
      const bf::PolyMatrix g = bf::gram_matrix(tl_n);
      const bf::LaurentPoly det = bf::gram_det_formula(tl_n);
      if (json_out) {
        json rows = json::array();
        for (const auto& row : g) {
          json r = json::array();
          for (const auto& e : row) r.push_back(poly_json(e));
          rows.push_back(r);
        }
        json j{{"n", tl_n}, {"gram", rows}, {"det", poly_json(det)}, {"det_text", det.str()}};
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& row : g) {
          std::string line;
          for (std::size_t jcol = 0; jcol < row.size(); ++jcol) {
            if (jcol) line += " | ";
            line += row[jcol].str();
          }
          std::cout << "[ " << line << " ]\n";
        }
        std::cout << "det: " << det.str() << "\n";
      }
    } else {
      const auto basis = bf::enumerate_basis(tl_n);
      if (json_out) {
        json diagrams = json::array();
        for (const auto& d : basis) {
          json pairs = json::array();
          for (const auto& [u, v] : chord_pairs(d)) pairs.push_back({u, v});
          diagrams.push_back(pairs);
        }
        json j{{"n", tl_n}, {"count", basis.size()}, {"diagrams", diagrams}};
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& d : basis) std::cout << chord_text(d) << "\n";
        std::cout << "count: " << basis.size() << "\n";
      }
    }
    return 0;
  }

  if (*anyon_cmd) {
    if (an_level < 1) throw ValidationError("--level must be >= 1");
    bf::Branch br = bf::default_branch(an_level);
    if (!an_branch.empty()) br = bf::parse_branch(an_branch);
    const bf::AnyonModel model = bf::anyon_model(an_level, br);
    if (*an_dims) {
      if (an_n < 1) throw ValidationError("--n must be >= 1");
      if (an_leaf < 0 || an_leaf > an_level || an_charge < 0 || an_charge > an_level)
        throw ValidationError("labels must lie in [0, level]");
      const long long dim = bf::dim_space(model, an_leaf, an_n, an_charge);
      if (json_out) {
        json j{{"level", an_level}, {"leaf", an_leaf},     {"n", an_n},
               {"charge", an_charge}, {"dim", dim}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << dim << "\n";
      }
    } else if (*an_f) {
      json table = json::object();
      for (int a = 0; a <= an_level; ++a)
        for (int b = 0; b <= an_level; ++b)
          for (int c = 0; c <= an_level; ++c)
            for (int d = 0; d <= an_level; ++d) {
              const auto [ns, ms] = bf::f_channels(model, a, b, c, d);
              if (ns.size() != 2 || ms.size() != 2) continue;
              const bf::ComplexMatrix f = bf::f_matrix(model, a, b, c, d);
              const std::string key = std::to_string(a) + "," + std::to_string(b) + "," +
                                      std::to_string(c) + "," + std::to_string(d);
              if (json_out) {
                table[key] = {{"rows_n", ns}, {"cols_m", ms}, {"matrix", matrix_json(f)}};
              } else {
                std::cout << "F[" << key << "]\n";
                print_matrix(f);
              }
            }
      if (json_out) {
        json j{{"level", an_level}, {"branch", bf::branch_name(br)}, {"fsymbols", table}};
        std::cout << j.dump(2) << "\n";
      }
    } else {
      json table = json::object();
      for (int a = 0; a <= an_level; ++a)
        for (int b = 0; b <= an_level; ++b)
          for (int c = 0; c <= an_level; ++c) {
            if (!bf::admissible_triple(model, a, b, c)) continue;
            const bf::Cx rsym = bf::r_symbol(model, a, b, c);
            const std::string key =
                std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
            if (json_out) {
              table[key] = {rsym.real(), rsym.imag()};
            } else {
              std::cout << "R[" << key << "] = " << fmt_cx(rsym) << "\n";
            }
          }
      if (json_out) {
        json j{{"level", an_level}, {"branch", bf::branch_name(br)}, {"rsymbols", table}};
        std::cout << j.dump(2) << "\n";
      }
    }
    return 0;
  }

  if (*rep_cmd) {
    if (rep_level < 1) throw ValidationError("--level must be >= 1");
    if (rep_matrices && rep_closure)
      throw ValidationError("--matrices and --closure are mutually exclusive");
    bf::Branch br = bf::default_branch(rep_level);
    if (!rep_branch.empty()) br = bf::parse_branch(rep_branch);
    const bf::AnyonModel model = bf::anyon_model(rep_level, br);
    const bf::RepMatrices rep = bf::braid_generator_matrices(model, rep_leaf, rep_n, rep_charge);
    const long long dim = static_cast<long long>(rep.basis.size());
    const double tol = rep_tol > 0.0 ? rep_tol : default_tol();
    if (rep_closure) {
      if (dim == 0) throw ValidationError("empty representation space");
      if (rep_bound < 1) throw ValidationError("--bound must be >= 1");
      const bf::GroupClosureReport rc = bf::closure_bfs(rep.sigma, rep_bound, tol, rep_projective);
      if (json_out) {
        json j{{"level", rep_level},   {"leaf", rep_leaf},
               {"n", rep_n},           {"charge", rep_charge},
               {"dim", dim},           {"projective", rc.projective},
               {"bound", rc.bound},    {"finite", rc.finite},
               {"size", rc.size},      {"discovered", rc.discovered}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "dim: " << dim << "\n";
        std::cout << "finite: " << (rc.finite ? "yes" : "no") << "\n";
        if (rc.finite)
          std::cout << "size: " << rc.size << "\n";
        else
          std::cout << "discovered: " << rc.discovered << " (bound " << rc.bound << ")\n";
      }
    } else {
      if (json_out) {
        json sigmas = json::array();
        for (const auto& s : rep.sigma) sigmas.push_back(matrix_json(s));
        json trees = json::array();
        for (const auto& t : rep.basis) trees.push_back(t.internal);
        json j{{"level", rep_level}, {"leaf", rep_leaf},  {"n", rep_n},
               {"charge", rep_charge}, {"dim", dim},      {"basis", trees},
               {"sigma", sigmas}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "dim: " << dim << "\n";
        for (std::size_t g = 0; g < rep.sigma.size(); ++g) {
          std::cout << "sigma_" << g + 1 << ":\n";
          print_matrix(rep.sigma[g]);
        }
      }
    }
    return 0;
  }

  if (*sim_cmd) {
    bf::PlatJob job;
    job.braid = parse_word(sim_wf);
    job.r = sim_r;
    if (!sim_branch.empty()) job.branch = bf::parse_branch(sim_branch);
    job.epsilon = sim_eps;
    job.delta = sim_delta;
    job.seed = sim_seed;
    try {
      if (sim_exact) {
        const bf::Cx amp = bf::plat_amplitude(job);
        const double p = std::min(1.0, std::norm(amp));
        if (json_out) {
          json j{{"amplitude", {amp.real(), amp.imag()}}, {"p", p}};
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "amplitude: " << fmt_cx(amp) << "\n";
          std::cout << "p: " << fmt_num(p) << "\n";
        }
      } else {
        const bf::ZEstimate est = bf::estimate_Z(job);
        if (json_out) {
          json j{{"amplitude", {est.amplitude.real(), est.amplitude.imag()}},
                 {"p", est.p},
                 {"Z", est.z},
                 {"samples", est.samples}};
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "amplitude: " << fmt_cx(est.amplitude) << "\n";
          std::cout << "p: " << fmt_num(est.p) << "\n";
          std::cout << "Z: " << fmt_num(est.z) << "\n";
          std::cout << "samples: " << est.samples << "\n";
        }
      }
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
    return 0;
  }

  if (*verify_cmd) {
    const double tol = ver_tol > 0.0 ? ver_tol : default_tol();
    bf::YBOperator op;
    if (!ver_fixture.empty() && !ver_matrix.empty())
      throw ValidationError("--fixture and --matrix are mutually exclusive");
    if (ver_fixture == "ising") {
      op = bf::ising_localization();
    } else if (ver_fixture == "level4") {
      op = bf::level4_localization();
    } else if (!ver_fixture.empty()) {
      throw ValidationError("unknown fixture '" + ver_fixture + "' (want ising | level4)");
    } else if (!ver_matrix.empty()) {
      std::ifstream in(ver_matrix);
      if (!in) throw ValidationError("cannot open " + ver_matrix);
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::exception& e) {
        throw ValidationError(std::string{"matrix file: "} + e.what());
      }
      if (!doc.is_array() || doc.empty()) throw ValidationError("matrix file: want rows array");
      const int dim = static_cast<int>(doc.size());
      const int w = static_cast<int>(std::llround(std::sqrt(double(dim))));
      if (w * w != dim) throw ValidationError("matrix dimension must be a perfect square");
      bf::ComplexMatrix r(dim, dim);
      for (int i = 0; i < dim; ++i) {
        if (!doc[i].is_array() || static_cast<int>(doc[i].size()) != dim)
          throw ValidationError("matrix file: ragged rows");
        for (int jcol = 0; jcol < dim; ++jcol) {
          const auto& e = doc[i][jcol];
          if (!e.is_array() || e.size() != 2) throw ValidationError("entries must be [re,im]");
          r(i, jcol) = bf::Cx(e[0].get<double>(), e[1].get<double>());
        }
      }
      try {
        op = bf::make_yb_operator(w, r);
      } catch (const std::exception& e) {
        throw ValidationError(e.what());
      }
    } else {
      throw ValidationError("verify ybe needs --fixture or --matrix");
    }
    const double unit = bf::unitarity_residual(op.R);
    const bool pass = op.ybe_residual <= tol && unit <= tol;
    if (json_out) {
      json j{{"w", op.w},
             {"ybe_residual", op.ybe_residual},
             {"unitarity_residual", unit},
             {"tol", tol},
             {"pass", pass}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "w: " << op.w << "\n";
      std::cout << "ybe residual: " << fmt_num(op.ybe_residual) << "\n";
      std::cout << "unitarity residual: " << fmt_num(unit) << "\n";
      std::cout << "pass: " << (pass ? "yes" : "no") << "\n";
    }
    return pass ? 0 : 1;
  }

  if (*loc_cmd) {
    bf::FibNonlocalVerdict verdict;
    try {
      verdict = bf::fib_nonlocal_certificate(loc_d, loc_nmax);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
    if (json_out) {
      json j{{"d", verdict.d},
             {"n_max", loc_nmax},
             {"nonlocalizable", verdict.nonlocalizable},
             {"contradiction_at", verdict.contradiction_at},
             {"candidates", verdict.candidates}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "d: " << verdict.d << "\n";
      std::cout << "nonlocalizable: " << (verdict.nonlocalizable ? "yes" : "no") << "\n";
      if (verdict.nonlocalizable) {
        std::cout << "contradiction at n = " << verdict.contradiction_at << "\n";
        std::cout << "candidates refuted: " << verdict.candidates << "\n";
      }
    }
    return verdict.nonlocalizable ? 0 : 1;
  }

  return 2;  // unreachable: require_subcommand(1)
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
}
