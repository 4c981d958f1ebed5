#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "jobs.hpp"

using namespace cdelab::tools;

int main(int argc, char** argv) {
  CLI::App app{"Exact cde-triangle and sl2 category O computations"};
  app.require_subcommand(1);
  app.fallthrough();
  JobSpec spec;
  app.add_option("--format", spec.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--output", spec.output, "Output path (default stdout)");
  app.add_flag("--timing", spec.timing, "Record the wall-clock time in the report");

  auto* verify = app.add_subcommand("verify", "Verify the cde-triangle of an algebra over R");
  verify->add_option("--input", spec.input, "Algebra JSON file or hecke:<type>:<q>:<cyclo>")->required();

  auto* hecke = app.add_subcommand("hecke", "Verify the cde-triangle of a Hecke algebra");
  hecke->add_option("--type", spec.type, "A1 or A2")->required()->check(CLI::IsMember({"A1", "A2"}));
  hecke->add_option("--q", spec.q, "Parameter q in the scalar grammar")->required();
  hecke->add_option("--cyclo", spec.cyclo, "Cyclotomic order n of z");

  auto* osl2 = app.add_subcommand("osl2", "Duality table for truncated category O of sl2");
  osl2->add_option("--gamma", spec.gamma, "Top weights, comma separated")->required()->delimiter(',');
  osl2->add_option("--depth", spec.depth, "Truncation depth N")->required();
  osl2->add_option("--cyclo", spec.cyclo, "Cyclotomic order n of z in the weights");
  bool no_deform = false;
  osl2->add_flag("--no-deform", no_deform, "Do not deform the weights by t");

  auto* lift = app.add_subcommand("lift", "Lift an idempotent modulo t^N");
  lift->add_option("--input", spec.input, "Algebra JSON file or hecke:<type>:<q>:<cyclo>")->required();
  lift->add_option("--idempotent", spec.idempotent, "Coordinates over k, comma separated, or primitive:<i>")
      ->required();
  lift->add_option("--precision", spec.precision, "Precision N")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  spec.deform = !no_deform;
  if (*verify) spec.kind = JobKind::verify_cde;
  if (*hecke) spec.kind = JobKind::hecke_example;
  if (*osl2) spec.kind = JobKind::osl2_duality;
  if (*lift) spec.kind = JobKind::lift_demo;

  try {
    const Report report = run_job(spec);
    const std::string text = spec.format == "json" ? serialize(report) : render_table(report);
    if (spec.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(spec.output);
      if (!out || !(out << text)) {
        std::cerr << "error: cannot write '" << spec.output << "'\n";
        return 2;
      }
    }
    if (!report.passed()) {
      std::cerr << "error: audit failed\n";
      return 3;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
