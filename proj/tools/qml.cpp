// Batch front end: every pipeline stage as a subcommand, JSON on stdout,
// diagnostics on stderr. Exit codes: 0 ok, 1 domain error, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qml/dsl.hpp"
#include "qml/fock.hpp"
#include "qml/logic.hpp"
#include "qml/robot.hpp"
#include "qml/semantics.hpp"

using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw qml::Error("E_IO", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int fail(const std::string& code, const std::string& message) {
  std::cerr << json{{"error", code}, {"message", message}}.dump() << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum metalanguage toolkit"};
  app.require_subcommand(1);

  std::string parse_input, reflect_expr, check_meta, check_obj;
  std::string truth_alpha, overlap_a, overlap_b, qubit_a, qubit_b;
  std::string meta_shape, task_path;
  int fock_n = 64;
  double tol = 1e-6, p_dec = 0.0;
  int lattice = 2, width = 0;
  uint64_t seed = 0;
  bool do_renormalize = false;

  auto* cmd_parse = app.add_subcommand("parse", "parse a source file (or -) to AST JSON");
  cmd_parse->add_option("input", parse_input, "file path or - for stdin")->required();

  auto* cmd_reflect = app.add_subcommand("reflect", "reflect a metajunction into the object-language");
  cmd_reflect->add_option("expr", reflect_expr)->required();

  auto* cmd_check = app.add_subcommand("check", "check a reflection claim");
  cmd_check->add_option("meta", check_meta)->required();
  cmd_check->add_option("object", check_obj)->required();

  auto* cmd_truth = app.add_subcommand("truth", "assertion and truth degree of a quantum atom");
  cmd_truth->add_option("alpha", truth_alpha)->required();
  cmd_truth->add_option("--fock-n", fock_n)->envname("QML_FOCK_N");

  auto* cmd_overlap = app.add_subcommand("overlap", "analytic and truncated coherent overlap");
  cmd_overlap->add_option("a", overlap_a)->required();
  cmd_overlap->add_option("b", overlap_b)->required();
  cmd_overlap->add_option("--fock-n", fock_n)->envname("QML_FOCK_N");

  auto* cmd_qubit = app.add_subcommand("qubit", "extract a qubit from a coherent pair");
  cmd_qubit->add_option("a", qubit_a)->required();
  cmd_qubit->add_option("b", qubit_b)->required();
  cmd_qubit->add_flag("--renormalize", do_renormalize);

  auto* cmd_solve = app.add_subcommand("solve-meta", "solve the symmetric metadata constraint");
  cmd_solve->add_option("shape", meta_shape, "antipodal or equal")->required();
  cmd_solve->add_option("--tol", tol)->envname("QML_TOL");

  auto* cmd_sim = app.add_subcommand("sim", "run a robot task");
  cmd_sim->add_option("task", task_path, "task JSON file")->required();
  cmd_sim->add_option("--lattice", lattice)->envname("QML_LATTICE");
  cmd_sim->add_option("--width", width, "override the task's register width");
  cmd_sim->add_option("--p-dec", p_dec)->envname("QML_P_DEC");
  cmd_sim->add_option("--seed", seed)->envname("QML_SEED");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_parse->parsed()) {
      const qml::ParsedNode node = qml::parse(read_input(parse_input));
      json j = qml::to_json(node);
      j["text"] = qml::format(node);
      emit(j);
    } else if (cmd_reflect->parsed()) {
      const qml::Assertion a = qml::reflect_down(qml::parse_junction(reflect_expr));
      json j = qml::to_json(a);
      j["text"] = qml::format(a);
      emit(j);
    } else if (cmd_check->parsed()) {
      const qml::MetaJunction m = qml::parse_junction(check_meta);
      const qml::Assertion a = qml::parse_assertion(check_obj);
      const qml::ReflectionCheck r = qml::check_reflection(m, a);
      if (!r.ok) return fail(r.code, r.diagnostic);
      emit(json{{"ok", true}});
    } else if (cmd_truth->parsed()) {
      const qml::Complex alpha = qml::parse_complex(truth_alpha);
      json j = qml::to_json(qml::assertion_semantics(alpha, fock_n));
      j["fock_n"] = fock_n;
      emit(j);
    } else if (cmd_overlap->parsed()) {
      const qml::Complex a = qml::parse_complex(overlap_a);
      const qml::Complex b = qml::parse_complex(overlap_b);
      const qml::Complex analytic = qml::overlap_analytic(b, a);
      const qml::Complex numeric = qml::inner_product(
          qml::coherent_fock(b, fock_n), qml::coherent_fock(a, fock_n));
      emit(json{{"schema", 1},
                {"analytic", {analytic.real(), analytic.imag()}},
                {"numeric", {numeric.real(), numeric.imag()}},
                {"abs_difference", std::abs(analytic - numeric)},
                {"fock_n", fock_n}});
    } else if (cmd_qubit->parsed()) {
      qml::QubitState q = qml::qubit_extract(qml::parse_complex(qubit_a),
                                             qml::parse_complex(qubit_b));
      if (do_renormalize) q = qml::renormalize(q);
      emit(qml::to_json(q));
    } else if (cmd_solve->parsed()) {
      qml::SymmetricShape shape;
      if (meta_shape == "antipodal") shape = qml::SymmetricShape::Antipodal;
      else if (meta_shape == "equal") shape = qml::SymmetricShape::Equal;
      else {
        fail("E_USAGE", "shape must be antipodal or equal");
        return 2;
      }
      const double root = qml::solve_symmetric_metadata(shape, tol);
      const qml::QubitState q =
          shape == qml::SymmetricShape::Antipodal
              ? qml::qubit_extract(root, -root)
              : qml::qubit_extract(root, root);
      emit(json{{"schema", 1},
                {"shape", meta_shape},
                {"root", root},
                {"tol", tol},
                {"residual", q.constraint_residual()}});
    } else if (cmd_sim->parsed()) {
      qml::Task task = qml::task_from_json(json::parse(read_input(task_path)));
      if (width > 0) task = qml::build_task(task.phases, width);
      const qml::TrajectoryReport report =
          qml::run_task(task, qml::Lattice{lattice}, p_dec, seed);
      emit(qml::to_json(report));
    }
  } catch (const qml::ParseError& e) {
    std::cerr << json{{"error", e.code()},
                      {"message", e.what()},
                      {"span", {e.span().start, e.span().end}}}
                     .dump()
              << "\n";
    return 1;
  } catch (const qml::Error& e) {
    return fail(e.code(), e.what());
  } catch (const json::exception& e) {
    return fail("E_SCHEMA", e.what());
  }
  return 0;
}
