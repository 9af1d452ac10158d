#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "qweyl/errors.hpp"
#include "suite.hpp"

namespace wb = qweyl::workbench;

namespace {

void write_json(const nlohmann::json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw qweyl::ParameterError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for q-deformed Weyl algebras"};
  app.set_version_flag("--version", std::string(wb::kToolVersion));
  app.require_subcommand(1);

  std::string expr, config, out, only;
  bool verbose = false;

  auto* eval = app.add_subcommand("eval", "Print the canonical form of an expression");
  eval->add_option("expr", expr, "Expression")->required();
  eval->add_option("--config", config, "Config file")->required();

  auto* reduce = app.add_subcommand("reduce", "Reduce an expression modulo the moment ideal");
  reduce->add_option("expr", expr, "Expression")->required();
  reduce->add_option("--config", config, "Config file")->required();

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--config", config, "Config file")->required();
  verify->add_option("--only", only, "Comma-separated check ids or prefixes");
  verify->add_flag("--verbose", verbose, "Include failure witnesses");
  verify->add_option("--out", out, "Write the report here instead of stdout");

  auto* rep = app.add_subcommand("rep", "Representation tools");
  rep->require_subcommand(1);
  auto* rep_build = rep->add_subcommand("build", "Build the configured representations");
  rep_build->add_option("--config", config, "Config file")->required();
  rep_build->add_option("--out", out, "Output file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const wb::WorkbenchConfig cfg = wb::load_config(config);
    if (*eval) {
      std::cout << wb::eval_command(expr, cfg) << "\n";
    } else if (*reduce) {
      std::cout << wb::reduce_command(expr, cfg) << "\n";
    } else if (*rep_build) {
      write_json(wb::rep_build_command(cfg), out);
    } else if (*verify) {
      wb::SuiteOptions options;
      options.verbose = verbose;
      std::stringstream ss(only);
      for (std::string id; std::getline(ss, id, ',');)
        if (!id.empty()) options.only.push_back(id);
      const auto results = wb::run_suite(cfg, options);
      write_json(wb::make_report(cfg, results, verbose), out);
      if (!out.empty())
        for (const auto& r : results)
          std::cout << wb::status_name(r.status) << "  " << r.check_id << "  " << r.detail << "\n";
      return wb::suite_passed(results) ? 0 : 1;
    }
  } catch (const wb::ConfigError& e) {
    std::cerr << "error: invalid configuration\n";
    for (const auto& p : e.problems()) std::cerr << "  " << p << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
