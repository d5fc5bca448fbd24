#include "twocat/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "twocat/demo.hpp"
#include "twocat/errors.hpp"
#include "twocat/laws.hpp"
#include "twocat/matcat.hpp"
#include "twocat/morfile.hpp"

namespace twocat::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_file(path, text);
}

struct ComposeOptions {
  std::string input;
  std::string expr;
  std::string output;
  std::string name = "result";
  bool normalize = false;
};

int compose(const ComposeOptions& o, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(o.input);
  morfile::Document doc;
  try {
    doc = morfile::parse(text);
  } catch (const ParseError& e) {
    err << o.input << ":" << e.line() << ":" << e.column() << ": parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const ShapeError& e) {
    err << o.input << ":" << e.what() << '\n';
    return type_error;
  }
  morfile::Value v;
  try {
    v = morfile::evaluate(doc, o.expr);
  } catch (const ParseError& e) {
    err << "expression:" << e.line() << ":" << e.column() << ": parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const ShapeError& e) {
    err << "type error: " << e.what() << '\n';
    return type_error;
  }
  if (o.normalize) {
    if (auto* f = std::get_if<OneMor>(&v)) v = normalize(*f).normal;
    if (auto* t = std::get_if<TwoMor>(&v)) v = normalize(*t);
  }
  emit(o.output, morfile::serialize(morfile::result_document(o.name, v)), out);
  return ok;
}

struct LawOptions {
  laws::LawConfig cfg;
  std::string mutate = "none";
  std::string output;
  std::string json;
  std::string counterexamples;
  std::vector<std::string> only;
  std::optional<std::uint64_t> replay;
  bool no_timings = false;
};

int check_laws(LawOptions o, std::ostream& out) {
  o.cfg.mutation = o.mutate == "kron-flip" ? laws::Mutation::kron_flip : laws::Mutation::none;
  laws::LawReport report;
  if (o.only.empty() && !o.replay) {
    report = laws::run_suite(o.cfg);
  } else {
    report.config = o.cfg;
    const auto names = o.only.empty() ? laws::law_names() : o.only;
    for (const auto& n : names) report.laws.push_back(laws::run_law(n, o.cfg, o.replay));
  }
  emit(o.output, laws::to_text(report, !o.no_timings), out);
  if (!o.json.empty()) write_file(o.json, laws::to_json(report, !o.no_timings));
  if (!o.counterexamples.empty() && !report.ok()) {
    std::filesystem::create_directories(o.counterexamples);
    for (const auto& l : report.laws)
      for (const auto& f : l.failures)
        write_file((std::filesystem::path(o.counterexamples) / (l.name + ".case" + std::to_string(f.case_index) + ".mor"))
                       .string(),
                   "# " + l.name + " case " + std::to_string(f.case_index) + ": " + f.message + "\n" +
                       f.counterexample);
  }
  return report.ok() ? ok : law_failure;
}

int demo_example(std::uint64_t seed, const std::string& output, std::ostream& out) {
  const demo::DemoResult r = demo::run_demo(seed);
  emit(output, r.text, out);
  return r.ok() ? ok : law_failure;
}

struct DncOptions {
  std::vector<std::size_t> sizes{64, 128, 256};
  std::size_t threshold = 16;
  std::uint64_t seed = 42;
  std::string output;
};

int dnc_matmul(const DncOptions& o, std::ostream& out) {
  std::ostringstream rep;
  bool all_equal = true;
  laws::LawConfig cfg;
  for (const std::size_t n : o.sizes) {
    laws::Rng rng(laws::case_seed(o.seed, "dnc-matmul", n));
    const matcat::MatMor a(laws::gen_matrix(rng, cfg, n, n)), b(laws::gen_matrix(rng, cfg, n, n));
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const auto d = matcat::dnc_mul(a, b, o.threshold);
    const auto t1 = clock::now();
    const Matrix p = mat_mul(a.mat(), b.mat());
    const auto t2 = clock::now();
    const bool equal = d.mat() == p;
    all_equal = all_equal && equal;
    rep << "size=" << n << " threshold=" << o.threshold << " equal=" << (equal ? "yes" : "no") << std::fixed
        << std::setprecision(2) << " dnc_ms=" << std::chrono::duration<double, std::milli>(t1 - t0).count()
        << " matmul_ms=" << std::chrono::duration<double, std::milli>(t2 - t1).count() << '\n';
  }
  emit(o.output, rep.str(), out);
  return all_equal ? ok : law_failure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact 2Vect and Mat_k calculator"};
  app.set_config("--config", "", "Read options from a TOML or INI file; flags given on the command line win");
  app.require_subcommand(1);

  ComposeOptions co;
  auto* compose_cmd = app.add_subcommand("compose", "Evaluate an expression over a morphism file");
  compose_cmd->add_option("input", co.input, "Morphism file")->required();
  compose_cmd->add_option("-e,--expr", co.expr, "Expression or declared name")->required();
  compose_cmd->add_option("-o,--output", co.output, "Output file (default stdout)");
  compose_cmd->add_option("--name", co.name, "Name bound to the result")->capture_default_str();
  compose_cmd->add_flag("--normalize", co.normalize, "Delete zero-dimensional components of the result");

  LawOptions lo;
  auto* laws_cmd = app.add_subcommand("check-laws", "Run the law suite");
  laws_cmd->add_option("--seed", lo.cfg.seed, "Base seed")->capture_default_str();
  laws_cmd->add_option("--cases", lo.cfg.cases_per_law, "Random cases per law")->capture_default_str();
  laws_cmd->add_option("--max-object", lo.cfg.max_object)->capture_default_str()->check(CLI::PositiveNumber);
  laws_cmd->add_option("--max-components", lo.cfg.max_components)->capture_default_str()->check(CLI::PositiveNumber);
  laws_cmd->add_option("--max-dim", lo.cfg.max_dim)->capture_default_str()->check(CLI::PositiveNumber);
  laws_cmd->add_option("--scalar-bound", lo.cfg.scalar_bound)->capture_default_str()->check(CLI::PositiveNumber);
  laws_cmd->add_option("--mutate", lo.mutate, "Deliberately wrong composition")
      ->check(CLI::IsMember({"none", "kron-flip"}))
      ->capture_default_str();
  laws_cmd->add_option("-o,--output", lo.output, "Text report file (default stdout)");
  laws_cmd->add_option("--json", lo.json, "JSON report file");
  laws_cmd->add_option("--counterexamples", lo.counterexamples, "Directory for counterexample files");
  laws_cmd->add_option("--law", lo.only, "Run only these laws")->check(CLI::IsMember(laws::law_names()));
  laws_cmd->add_option("--case", lo.replay, "Replay a single case index");
  laws_cmd->add_flag("--no-timings", lo.no_timings, "Omit timings from reports");

  std::uint64_t demo_seed = 7;
  std::string demo_output;
  auto* demo_cmd = app.add_subcommand("demo-example", "Print the worked 3 -> 2 -> 1 example");
  demo_cmd->add_option("--seed", demo_seed)->capture_default_str();
  demo_cmd->add_option("-o,--output", demo_output);

  DncOptions dno;
  auto* dnc_cmd = app.add_subcommand("dnc-matmul", "Compare divide-and-conquer and plain products");
  dnc_cmd->add_option("--size", dno.sizes, "Square sizes")->capture_default_str()->check(CLI::PositiveNumber);
  dnc_cmd->add_option("--threshold", dno.threshold)->capture_default_str()->check(CLI::PositiveNumber);
  dnc_cmd->add_option("--seed", dno.seed)->capture_default_str();
  dnc_cmd->add_option("-o,--output", dno.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : io_error;
  }

  try {
    if (compose_cmd->parsed()) return compose(co, out, err);
    if (laws_cmd->parsed()) return check_laws(lo, out);
    if (demo_cmd->parsed()) return demo_example(demo_seed, demo_output, out);
    if (dnc_cmd->parsed()) return dnc_matmul(dno, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return io_error;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return io_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return type_error;
  }
  return io_error;
}

}  // namespace twocat::cli
