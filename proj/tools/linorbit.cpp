// linorbit: reduce, route, solve, verify, lift, audit, gen and measure
// instances stored as JSON envelopes.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "linorbit/errors.hpp"
#include "linorbit/growth.hpp"
#include "linorbit/json_io.hpp"
#include "linorbit/oracles.hpp"
#include "linorbit/reductions.hpp"

namespace {

using namespace linorbit;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct InputOptions {
  std::string path;
  std::string format = "json";
  std::string kind;
  std::optional<std::uint64_t> param;
  std::optional<std::size_t> vertices;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_text(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

void write_json(const std::string& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

Problem load_instance(const InputOptions& o) {
  if (o.format == "json") return problem_from_json(read_json(o.path));
  std::istringstream in(read_text(o.path));
  if (o.format == "dimacs") return parse_dimacs(in);
  if (o.format == "edgelist") {
    if (o.kind.empty()) throw ParseError("--format edgelist needs --kind");
    return parse_edge_list(in, parse_kind(o.kind), o.param, o.vertices);
  }
  throw ParseError("unknown input format '" + o.format + "'");
}

void add_input(CLI::App* cmd, InputOptions& o) {
  cmd->add_option("input", o.path, "Instance file ('-' for stdin)")->required();
  cmd->add_option("--format", o.format, "json, dimacs or edgelist")
      ->check(CLI::IsMember({"json", "dimacs", "edgelist"}));
  cmd->add_option("--kind", o.kind, "Problem kind of an edge list");
  cmd->add_option("--param", o.param, "k, l or W of an edge list");
  cmd->add_option("--vertices", o.vertices, "Vertex count of an edge list");
}

std::vector<std::size_t> parse_scales(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      out.push_back(std::stoull(tok));
    } catch (const std::exception&) {
      throw ParseError("bad scale '" + tok + "'");
    }
  }
  if (out.empty()) throw ParseError("--scales needs at least one value");
  return out;
}

Json verdict_json(const OracleVerdict& v) {
  Json out;
  out["answer"] = v.answer == Answer::kYes ? "YES" : "NO";
  out["explored"] = v.explored;
  if (v.certificate) out["certificate"] = to_json(*v.certificate);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear-growth reductions among Karp's problems"};
  app.require_subcommand(1);
  std::string out_path = "-";

  InputOptions reduce_in;
  std::string via;
  auto* reduce = app.add_subcommand("reduce", "Apply one reduction");
  add_input(reduce, reduce_in);
  reduce->add_option("--via", via, "Reduction id")->required();
  reduce->add_option("-o,--output", out_path, "Output file ('-' for stdout)");

  InputOptions route_in;
  bool to_kernel = false;
  std::string manifest_path;
  auto* route = app.add_subcommand("route", "Reduce into the kernel set");
  add_input(route, route_in);
  route->add_flag("--to-kernel", to_kernel, "Follow the kernel routing table")->required();
  route->add_option("--manifest", manifest_path, "Where to write the chain manifest");
  route->add_option("-o,--output", out_path, "Output file ('-' for stdout)");

  InputOptions solve_in;
  std::uint64_t budget = kDefaultBudget;
  std::string cert_out;
  auto* solve_cmd = app.add_subcommand("solve", "Decide an instance exhaustively");
  add_input(solve_cmd, solve_in);
  solve_cmd->add_option("--budget", budget, "Candidate cap");
  solve_cmd->add_option("--cert", cert_out, "Write the certificate of a YES verdict here");
  solve_cmd->add_option("-o,--output", out_path, "Verdict file ('-' for stdout)");

  InputOptions verify_in;
  std::string cert_in;
  auto* verify = app.add_subcommand("verify", "Check a certificate");
  add_input(verify, verify_in);
  verify->add_option("--cert", cert_in, "Certificate file")->required();

  InputOptions lift_in;
  std::string chain_path;
  std::string lift_cert;
  auto* lift = app.add_subcommand("lift", "Map a final certificate back through a chain");
  add_input(lift, lift_in);
  lift->add_option("--chain", chain_path, "Chain manifest")->required();
  lift->add_option("--cert", lift_cert, "Certificate of the chain's final instance")->required();
  lift->add_option("-o,--output", out_path, "Output file ('-' for stdout)");

  std::string audit_id;
  std::uint64_t audit_seed = 1;
  std::string scales_text = "4,8,16,32,64";
  std::size_t samples = 3;
  std::string family_path;
  std::string report_format = "json";
  auto* audit_cmd = app.add_subcommand("audit", "Check a reduction's growth claim");
  audit_cmd->add_option("--reduction", audit_id, "Reduction id")->required();
  audit_cmd->add_option("--seed", audit_seed, "Family seed");
  audit_cmd->add_option("--scales", scales_text, "Comma-separated scale points");
  audit_cmd->add_option("--samples", samples, "Instances per scale point");
  audit_cmd->add_option("--family", family_path, "Generator spec (JSON) for the family");
  audit_cmd->add_option("--format", report_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  audit_cmd->add_option("-o,--output", out_path, "Report file ('-' for stdout)");

  std::string spec_path;
  auto* gen = app.add_subcommand("gen", "Generate an instance from a spec");
  gen->add_option("--spec", spec_path, "Generator spec (JSON)")->required();
  gen->add_option("-o,--output", out_path, "Output file ('-' for stdout)");

  InputOptions measure_in;
  std::string mode = "element";
  auto* measure_cmd = app.add_subcommand("measure", "Print an instance's input size");
  add_input(measure_cmd, measure_in);
  measure_cmd->add_option("--mode", mode, "element or bits")
      ->check(CLI::IsMember({"element", "bits"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*reduce) {
      const Problem src = load_instance(reduce_in);
      write_json(out_path, to_json(find_reduction(via).transform(src)));
      return kExitOk;
    }
    if (*route) {
      const Problem src = load_instance(route_in);
      const ReductionChain chain = route_to_kernel(kind_of(src));
      const Json manifest = chain_manifest(chain.ids());
      if (!manifest_path.empty()) {
        write_json(manifest_path, manifest);
      } else {
        std::cerr << "chain " << manifest.dump() << '\n';
      }
      write_json(out_path, to_json(compose(chain, src)));
      return kExitOk;
    }
    if (*solve_cmd) {
      const OracleVerdict v = solve(load_instance(solve_in), budget);
      write_json(out_path, verdict_json(v));
      if (v.certificate && !cert_out.empty()) write_json(cert_out, to_json(*v.certificate));
      return v.answer == Answer::kYes ? kExitOk : kExitNo;
    }
    if (*verify) {
      const Problem p = load_instance(verify_in);
      const Certificate c = certificate_from_json(read_json(cert_in));
      bool ok = false;
      try {
        ok = verify_certificate(p, c);
      } catch (const InvalidCertificate& e) {
        std::cerr << "invalid certificate: " << e.what() << '\n';
      }
      std::cout << (ok ? "valid" : "invalid") << '\n';
      return ok ? kExitOk : kExitNo;
    }
    if (*lift) {
      const Problem src = load_instance(lift_in);
      const ReductionChain chain = ReductionChain::from_ids(chain_from_manifest(read_json(chain_path)));
      const ChainRun run = run_chain(chain, src);
      const Certificate final_cert = certificate_from_json(read_json(lift_cert));
      try {
        write_json(out_path, to_json(lift_chain(chain, run, final_cert)));
      } catch (const InvalidCertificate& e) {
        std::cerr << "invalid certificate: " << e.what() << '\n';
        return kExitNo;
      }
      return kExitOk;
    }
    if (*audit_cmd) {
      GeneratorSpec family = family_path.empty() ? default_family(audit_id, audit_seed)
                                                 : generator_spec_from_json(read_json(family_path));
      if (!family_path.empty()) family.seed = audit_seed;
      const auto scales = parse_scales(scales_text);
      const GrowthReport report = audit(audit_id, family, scales, samples);
      if (report_format == "table") {
        write_text(out_path, to_table(report));
      } else {
        write_json(out_path, to_json(report));
      }
      return report.pass() ? kExitOk : kExitNo;
    }
    if (*gen) {
      write_json(out_path, to_json(generate(generator_spec_from_json(read_json(spec_path)))));
      return kExitOk;
    }
    if (*measure_cmd) {
      const Problem p = load_instance(measure_in);
      std::cout << measure_input_size(p, mode == "bits" ? SizeMode::kBits : SizeMode::kElement)
                << '\n';
      return kExitOk;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
