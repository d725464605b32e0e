// s2flow command-line tool.
//
// Exit codes:
//   0   the command ran to completion (for verify: a decision was reached,
//       whether SAT or UNSAT)
//   1   error (bad input, failed self-check, I/O failure)
//   3   verify --expect did not match the decision, or the engines disagreed
//   10  verify --status-exit and the instance is SAT
//   20  verify --status-exit and the instance is UNSAT
// Command-line usage errors use CLI11's own codes.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "s2flow/io/construct.hpp"
#include "s2flow/io/structure_report.hpp"
#include "s2flow/io/svg.hpp"
#include "s2flow/io/verify.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitMismatch = 3;
constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;

struct Globals {
  double epsilon = 1e-7;
  std::string mode = "both";
  bool dedup = false;

  s2flow::GeometryConfig geometry() const {
    s2flow::GeometryConfig g;
    g.epsilon = epsilon;
    g.validate();
    return g;
  }
  s2flow::VerifyOptions verify_options() const { return {s2flow::parse_mode(mode), geometry(), dedup}; }
};

void print_counts(const s2flow::PointSetDocument& d) {
  std::cout << d.construction << ": " << d.size() << " points, " << d.triples.size() << " triples (field "
            << d.field << ", radius " << s2flow::rational_text(d.radius) << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sphere point configurations and nowhere-zero labelings"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--epsilon", g.epsilon, "Point identification tolerance")->envname("S2FLOW_EPSILON")->capture_default_str();
  app.add_option("--mode", g.mode, "Arithmetic: exact, float or both")
      ->envname("S2FLOW_MODE")
      ->check(CLI::IsMember({"exact", "float", "both"}))
      ->capture_default_str();
  app.add_flag("--dedup-antipodal-triples", g.dedup, "Drop triples whose antipodal mirror is already present")
      ->envname("S2FLOW_DEDUP_ANTIPODAL_TRIPLES");

  // construct
  auto* construct = app.add_subcommand("construct", "Build a point set and write it as JSON");
  std::string cname, cout_path;
  s2flow::ConstructOptions copt;
  construct->add_option("name", cname, "icosi, ce1 or ce2")->required()->check(CLI::IsMember({"icosi", "ce1", "ce2"}));
  construct->add_option("-o,--out", cout_path, "Output JSON path")->required();
  construct->add_option("--radius", copt.radius, "Radius written to the file (1 or 2; default: 2 for ce1, else 1)")
      ->check(CLI::IsMember({1, 2}));
  construct->add_option("--decagon", copt.ce1.decagon, "ce1: which great decagon to expand (0-5)")
      ->check(CLI::Range(0, 5))
      ->capture_default_str();
  construct->add_option("--v1", copt.ce2.v1, "ce2 parameter v1")->capture_default_str();
  construct->add_option("--v2", copt.ce2.v2, "ce2 parameter v2")->capture_default_str();
  construct->add_option("--w", copt.ce2.w, "ce2 parameter w")->capture_default_str();
  construct->add_option("--stage", copt.ce2_stage, "ce2: final or component")
      ->check(CLI::IsMember({"final", "component"}))
      ->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "Decide whether a labeling with values up to k exists");
  std::string vdoc, vengine = "both", vexpect, vwitness, vjson;
  int vk = 4;
  bool vstatus = false;
  verify->add_option("document", vdoc)->required()->check(CLI::ExistingFile);
  verify->add_option("-k", vk, "Value bound")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--engine", vengine, "sat, backtrack or both")
      ->check(CLI::IsMember({"sat", "backtrack", "both"}))
      ->capture_default_str();
  verify->add_option("--expect", vexpect, "Exit with 3 unless the decision matches")->check(CLI::IsMember({"sat", "unsat"}));
  verify->add_option("--witness-out", vwitness, "Write the witness (if SAT) to this JSON file");
  verify->add_option("--json", vjson, "Write the run report to this JSON file");
  verify->add_flag("--status-exit", vstatus, "Exit 10 for SAT and 20 for UNSAT");

  // export-dimacs
  auto* dimacs = app.add_subcommand("export-dimacs", "Write the CNF encoding in DIMACS format");
  std::string ddoc, dout;
  int dk = 4;
  dimacs->add_option("document", ddoc)->required()->check(CLI::ExistingFile);
  dimacs->add_option("-k", dk, "Value bound")->capture_default_str()->check(CLI::PositiveNumber);
  dimacs->add_option("-o,--out", dout, "Output path")->required();

  // report
  auto* report = app.add_subcommand("report", "Quotient graph and edge-orbit report");
  std::string rdoc, rjson;
  report->add_option("document", rdoc)->required()->check(CLI::ExistingFile);
  report->add_option("--json", rjson, "Also write the report as JSON");

  // render
  auto* render = app.add_subcommand("render", "Draw the point set as SVG");
  std::string sdoc, switness, sout;
  render->add_option("document", sdoc)->required()->check(CLI::ExistingFile);
  render->add_option("--witness", switness, "Witness JSON to print as labels")->check(CLI::ExistingFile);
  render->add_option("-o,--out", sout, "Output SVG path")->required();

  // flow-compare
  auto* compare = app.add_subcommand("flow-compare", "Smallest value bound next to smallest modulus");
  std::string fdoc;
  int fkmax = 6;
  compare->add_option("document", fdoc)->required()->check(CLI::ExistingFile);
  compare->add_option("--k-max", fkmax, "Largest value bound to try")->capture_default_str()->check(CLI::Range(1, 15));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) {
      copt.mode = s2flow::parse_mode(g.mode);
      copt.geometry = g.geometry();
      auto d = s2flow::construct_document(cname, copt);
      s2flow::save_document(cout_path, d);
      print_counts(d);
      return 0;
    }

    if (*verify) {
      auto d = s2flow::load_document(vdoc);
      auto opt = g.verify_options();
      auto r = s2flow::run_verify(d, vk, s2flow::parse_engine(vengine), opt);
      std::cout << r.instance << " k=" << r.k << " (values +-1..+-" << r.k << ", nowhere-zero " << r.k + 1 << "-flow): " << r.points << " points, " << r.triples << " triples, " << r.reps
                << " reps, " << r.vars << " vars, " << r.clauses << " clauses -> " << r.decision;
      if (r.sat_result) std::cout << " [sat: " << (*r.sat_result ? "SAT" : "UNSAT") << "]";
      if (r.backtrack_result) std::cout << " [backtrack: " << (*r.backtrack_result ? "SAT" : "UNSAT") << "]";
      std::cout << (r.verified() ? " VERIFIED" : " ENGINES DISAGREE") << "\n";
      if (r.witness) {
        std::cout << "witness:";
        for (int v : r.witness->values) std::cout << ' ' << v;
        std::cout << "\n";
        if (!vwitness.empty()) {
          auto q = s2flow::document_quotient(d, opt);
          s2flow::write_text_file(vwitness, s2flow::witness_to_json(*r.witness, q, vk, d.construction).dump(1) + "\n");
        }
      }
      if (!vjson.empty()) s2flow::write_text_file(vjson, s2flow::to_json(r).dump(1) + "\n");
      if (!r.verified()) return kExitMismatch;
      if (!vexpect.empty() && (vexpect == "sat") != r.satisfiable()) {
        std::cerr << "expected " << vexpect << ", got " << r.decision << "\n";
        return kExitMismatch;
      }
      if (vstatus) return r.satisfiable() ? kExitSat : kExitUnsat;
      return 0;
    }

    if (*dimacs) {
      auto d = s2flow::load_document(ddoc);
      auto q = s2flow::document_quotient(d, g.verify_options());
      auto f = s2flow::encode_nzk(q.flow_instance(dk, g.dedup));
      s2flow::write_text_file(dout, f.to_dimacs());
      std::cout << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
      return 0;
    }

    if (*report) {
      auto d = s2flow::load_document(rdoc);
      auto r = s2flow::structure_report(d, g.verify_options());
      std::cout << s2flow::structure_text(r);
      if (!rjson.empty()) s2flow::write_text_file(rjson, s2flow::to_json(r).dump(1) + "\n");
      return 0;
    }

    if (*render) {
      auto d = s2flow::load_document(sdoc);
      std::optional<s2flow::Labeling> w;
      int bound = 0;
      auto opt = g.verify_options();
      if (!switness.empty()) {
        auto j = nlohmann::json::parse(s2flow::read_text_file(switness));
        w = s2flow::witness_from_json(j, s2flow::document_quotient(d, opt));
        bound = s2flow::witness_bound(j);
      }
      s2flow::write_text_file(sout, s2flow::render_svg(d, w, bound, opt));
      std::cout << "wrote " << sout << "\n";
      return 0;
    }

    if (*compare) {
      auto d = s2flow::load_document(fdoc);
      auto q = s2flow::document_quotient(d, g.verify_options());
      auto c = s2flow::compare_flow_minima(q.flow_instance(1, g.dedup), fkmax);
      auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("none"); };
      std::cout << "instance        " << d.construction << "\n"
                << "min value bound " << show(c.min_bound) << "  (nowhere-zero "
                << (c.min_bound ? std::to_string(*c.min_bound + 1) : std::string("?")) << "-flow)\n"
                << "min modulus     " << show(c.min_modulus) << "\n";
      if (c.agree) {
        std::cout << "minima agree\n";
        return 0;
      }
      std::cout << "MISMATCH: integer and modular minima differ\n";
      return kExitMismatch;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
