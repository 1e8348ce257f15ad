#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "arrlab/constructor.hpp"
#include "arrlab/errors.hpp"
#include "arrlab/graphs.hpp"
#include "arrlab/json_io.hpp"
#include "arrlab/lattice.hpp"
#include "arrlab/presentations.hpp"

namespace {

int log_level() {
  const char* env = std::getenv("ARRLAB_LOG");
  return env ? std::atoi(env) : 0;
}

void log_note(const std::string& msg) {
  if (log_level() > 0) std::cerr << "arrlab: " << msg << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw arrlab::ParseError("cannot read '" + path + "'");
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

arrlab::Arrangement load(const std::string& path) {
  log_note("parsing " + path);
  return arrlab::parse_arrangement(read_file(path));
}

void write_output(const std::string& path, const std::string& body, bool to_stdout) {
  if (to_stdout) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw arrlab::ParseError("cannot write '" + path + "'");
  out << body;
  log_note("wrote " + path);
}

// exit 1 = mathematical negative, exit 2 = input error
int classify(const arrlab::Error& e) {
  const std::string& c = e.code();
  if (c == "NotForest" || c == "NotDirectSumOfFreeGroups") return 1;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace arrlab;
  CLI::App app{"line arrangements in CP^2: lattices, graphs, presentations"};
  app.require_subcommand(1);

  bool json_flag = false;
  bool to_stdout = false;
  int max_vertices = 20;
  app.add_flag("--json", json_flag, "emit JSON (always on; accepted for scripting)");
  app.add_flag("--stdout", to_stdout, "print file outputs to standard output");
  app.add_option("--max-vertices", max_vertices, "niceness search bound");
  std::string seed_reject;
  app.add_option("--seed", seed_reject,
                 "rejected: all searches are deterministic")
      ->check([](const std::string&) { return std::string("--seed is rejected: runs are deterministic"); });

  std::string path1, path2, outdir = ".";
  long base1 = 0, base2 = 0;

  auto* analyze = app.add_subcommand("analyze", "multiple points, graphs, forest and niceness");
  analyze->add_option("file", path1)->required();

  auto* compare = app.add_subcommand("compare", "homotopy comparison of two arrangements");
  compare->add_option("file1", path1)->required();
  compare->add_option("file2", path2)->required();
  compare->add_option("--outdir", outdir, "directory for transcript files");

  auto* construct = app.add_subcommand("construct-real", "complexified-real lattice-isomorphic rebuild");
  construct->add_option("file", path1)->required();
  construct->add_option("--outdir", outdir, "directory for output files");

  auto* normalize = app.add_subcommand("normalize", "Tietze transcript to the affine nodal presentation");
  normalize->add_option("file", path1)->required();
  normalize->add_option("--outdir", outdir, "directory for the transcript file");

  auto* lattice_cmd = app.add_subcommand("lattice", "lattice operations");
  lattice_cmd->require_subcommand(1);
  auto* lat_truncate = lattice_cmd->add_subcommand("truncate", "one truncation of the lattice");
  lat_truncate->add_option("file", path1)->required();
  auto* lat_pconn = lattice_cmd->add_subcommand("pconn", "parallel connection of two arrangements");
  lat_pconn->add_option("file1", path1)->required();
  lat_pconn->add_option("file2", path2)->required();
  lat_pconn->add_option("--base1", base1, "base line index in file1");
  lat_pconn->add_option("--base2", base2, "base line index in file2");
  auto* lat_dsum = lattice_cmd->add_subcommand("dsum", "direct sum lattice");
  lat_dsum->add_option("file1", path1)->required();
  lat_dsum->add_option("file2", path2)->required();
  auto* lat_tp3 = lattice_cmd->add_subcommand("tp3", "3-truncated parallel connection");
  lat_tp3->add_option("file1", path1)->required();
  lat_tp3->add_option("file2", path2)->required();
  lat_tp3->add_option("--base1", base1, "base line index in file1");
  lat_tp3->add_option("--base2", base2, "base line index in file2");
  auto* lat_d3 = lattice_cmd->add_subcommand("d3", "3-generic direct sum");
  lat_d3->add_option("file1", path1)->required();
  lat_d3->add_option("file2", path2)->required();
  auto* lat_iso = lattice_cmd->add_subcommand("iso", "lattice isomorphism test");
  lat_iso->add_option("file1", path1)->required();
  lat_iso->add_option("file2", path2)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      Arrangement a = load(path1);
      Arrangement proj = a.form == Form::projective ? a : cone(a);
      Json out;
      out["arrangement"] = arrangement_to_json(a);
      out["multiple_points"] = multiple_points_to_json(multiple_points(proj, 2));
      FanGraph fan = fan_graph(proj);
      out["fan"] = fan_to_json(fan);
      out["jy"] = jy_to_json(jy_graph(proj));
      ForestCertificate cert = is_forest(fan);
      out["forest"] = forest_to_json(cert);
      auto nice = is_nice(proj, max_vertices);
      out["nice"] = nice.has_value();
      if (nice) out["nice_witness"] = *nice;
      if (cert.forest) out["type"] = dsfg_type(proj);
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*compare) {
      Arrangement a1 = load(path1);
      Arrangement a2 = load(path2);
      CompareResult res = compare_homotopy(a1, a2);
      Json out = compare_to_json(res);
      if (!to_stdout) {
        if (res.left)
          write_output(outdir + "/transcript1.json",
                       transcript_to_json(res.left->transcript).dump(2) + "\n", false);
        if (res.right)
          write_output(outdir + "/transcript2.json",
                       transcript_to_json(res.right->transcript).dump(2) + "\n", false);
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*construct) {
      Arrangement a = load(path1);
      BuildPlan plan = plan_construction(a);
      ExecuteResult res = execute_plan(plan);
      Json witness;
      witness["plan"] = plan_to_json(plan);
      witness["bijection"] = res.bijection;
      witness["arrangement"] = arrangement_to_json(res.arrangement);
      write_output(outdir + "/constructed.arr", serialize_arrangement(res.arrangement), to_stdout);
      write_output(outdir + "/witness.json", witness.dump(2) + "\n", to_stdout);
      return 0;
    }
    if (*normalize) {
      Arrangement a = load(path1);
      Arrangement affine = a.form == Form::affine ? a : decone(a, 0);
      Arrangement sheared = shear_to_generic(affine);
      PreferredResult pref = preferred_representation(sheared);
      NormalizeResult res = normalize_to_nodal(pref.arrangement);
      Json out = normalize_to_json(res);
      out["preferred"] = arrangement_to_json(pref.arrangement);
      if (!to_stdout)
        write_output(outdir + "/transcript.json",
                     transcript_to_json(res.transcript).dump(2) + "\n", false);
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*lat_truncate) {
      Arrangement a = load(path1);
      std::cout << lattice_to_json(truncate(lattice_of(a))).dump(2) << "\n";
      return 0;
    }
    if (*lat_pconn) {
      Arrangement a1 = load(path1);
      Arrangement a2 = load(path2);
      auto conn = parallel_connection(BasePointedLattice{lattice_of(a1), static_cast<int>(base1)},
                                      BasePointedLattice{lattice_of(a2), static_cast<int>(base2)});
      Json out = lattice_to_json(conn.lattice);
      out["base"] = conn.base;
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*lat_dsum) {
      Arrangement a1 = load(path1);
      Arrangement a2 = load(path2);
      std::cout << lattice_to_json(direct_sum_lattice(lattice_of(a1), lattice_of(a2))).dump(2)
                << "\n";
      return 0;
    }
    if (*lat_tp3) {
      Arrangement a1 = load(path1);
      Arrangement a2 = load(path2);
      Arrangement res = tp3(a1, static_cast<int>(base1), a2, static_cast<int>(base2));
      Json out;
      out["arrangement"] = arrangement_to_json(res);
      out["lattice"] = lattice_to_json(lattice_of(res));
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*lat_d3) {
      Arrangement a1 = load(path1);
      Arrangement a2 = load(path2);
      Arrangement res = d3(a1, a2);
      Json out;
      out["arrangement"] = arrangement_to_json(res);
      out["lattice"] = lattice_to_json(lattice_of(res));
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*lat_iso) {
      Arrangement a1 = load(path1);
      Arrangement a2 = load(path2);
      auto witness = lattice_isomorphic(lattice_of(a1), lattice_of(a2));
      Json out;
      out["isomorphic"] = witness.has_value();
      if (witness) out["bijection"] = *witness;
      std::cout << out.dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    Json err;
    err["error"] = e.code();
    err["message"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return classify(e);
  }
  return 0;
}
