// Command-line front end. Links only the C API in libthetalgr.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetalgr/thetalgr.h"

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  int n = 2;
  std::optional<std::uint64_t> seed;
  double tolerance = 1e-9;
  std::string input;
  std::string output;
  bool json = false;
  std::string stratum;
  std::string cell;
  long count = 0;
  std::vector<std::string> suites;
  std::string c = "2";
};

struct Owned {
  char* s = nullptr;
  ~Owned() { tl_string_free(s); }
};

struct PointDeleter {
  void operator()(tl_point* p) const { tl_point_free(p); }
};
using PointPtr = std::unique_ptr<tl_point, PointDeleter>;

// Thrown to unwind with a status once the message has been printed.
struct Exit {
  int code;
};

void check(tl_status s) {
  if (s != TL_OK) {
    std::cerr << "theta-lgr: " << tl_last_error() << "\n";
    throw Exit{static_cast<int>(s)};
  }
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("THETA_LGR_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "theta-lgr: THETA_LGR_SEED is not an unsigned integer\n";
    throw Exit{TL_PARSE_ERROR};
  }
  return 0;
}

std::string read_input(const Options& o) {
  if (o.input.empty() || o.input == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(o.input);
  if (!in) {
    std::cerr << "theta-lgr: cannot read " << o.input << "\n";
    throw Exit{TL_PARSE_ERROR};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const Options& o, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) {
    std::cerr << "theta-lgr: cannot write " << o.output << "\n";
    throw Exit{TL_DOMAIN_ERROR};
  }
  out << text;
}

std::string render(const std::string& compact) {
  return Json::parse(compact).dump(2) + "\n";
}

PointPtr load_point(const Options& o) {
  const std::string text = read_input(o);
  tl_point* p = nullptr;
  check(tl_point_from_json(text.c_str(), &p));
  return PointPtr(p);
}

std::vector<int> parse_ints(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      std::cerr << "theta-lgr: " << flag << " expects comma-separated integers\n";
      throw Exit{TL_PARSE_ERROR};
    }
  }
  return out;
}

int cmd_classify(const Options& o) {
  const PointPtr p = load_point(o);
  Owned out;
  check(tl_classify(p.get(), &out.s));
  write_output(o, render(out.s));
  return 0;
}

int cmd_plucker(const Options& o) {
  const PointPtr p = load_point(o);
  Owned out;
  check(tl_plucker(p.get(), &out.s));
  write_output(o, render(out.s));
  return 0;
}

int cmd_flow(const Options& o) {
  const PointPtr p = load_point(o);
  tl_point* raw = nullptr;
  check(tl_flow(p.get(), o.c.c_str(), &raw));
  const PointPtr q(raw);
  Owned point, cls;
  check(tl_point_to_json(q.get(), &point.s));
  check(tl_classify(q.get(), &cls.s));
  const Json j = {{"c", o.c}, {"point", Json::parse(point.s)}, {"classification", Json::parse(cls.s)}};
  write_output(o, j.dump(2) + "\n");
  return 0;
}

int cmd_factor(const Options& o) {
  const std::string text = read_input(o);
  Owned out;
  check(tl_factor(text.c_str(), &out.s));
  write_output(o, render(out.s));
  return 0;
}

int cmd_sample(const Options& o) {
  const std::uint64_t seed = resolve_seed(o);
  const auto count = static_cast<std::size_t>(o.count > 0 ? o.count : 1);
  if (o.stratum.empty() == o.cell.empty()) {
    std::cerr << "theta-lgr: sample needs exactly one of --stratum or --cell\n";
    return TL_DOMAIN_ERROR;
  }
  Owned out;
  if (!o.stratum.empty()) {
    int k = 0;
    int l = o.n;
    if (o.stratum != "interior") {
      const auto kl = parse_ints(o.stratum, "--stratum");
      if (kl.size() != 2) {
        std::cerr << "theta-lgr: --stratum expects k,l or interior\n";
        return TL_PARSE_ERROR;
      }
      k = kl[0];
      l = kl[1];
    }
    check(tl_sample_stratum(o.n, k, l, seed, count, &out.s));
  } else {
    const auto cell = o.cell == "empty" ? std::vector<int>{} : parse_ints(o.cell, "--cell");
    check(tl_sample_cell(o.n, cell.data(), cell.size(), seed, count, &out.s));
  }
  write_output(o, out.s);
  return 0;
}

int cmd_verify(const Options& o) {
  const std::uint64_t seed = resolve_seed(o);
  std::vector<std::string> suites = o.suites;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) {
    suites.clear();
    std::stringstream ss(tl_suite_names());
    std::string s;
    while (std::getline(ss, s, ',')) suites.push_back(s);
  }
  Json report = {{"n", o.n}, {"seed", seed}, {"passed", true}, {"suites", Json::array()}};
  std::string text;
  int code = 0;
  for (const auto& name : suites) {
    Owned out;
    const tl_status s = tl_verify(name.c_str(), o.n, seed, o.count, o.tolerance, &out.s);
    if (s != TL_OK && s != TL_PROPERTY_FAILED) check(s);
    Json r = Json::parse(out.s);
    if (s == TL_PROPERTY_FAILED) {
      report["passed"] = false;
      code = TL_PROPERTY_FAILED;
    }
    text += std::string(r["passed"].get<bool>() ? "PASS " : "FAIL ") + name + " (" +
            std::to_string(r["checks"].get<long>()) + " checks)";
    if (!r["passed"].get<bool>()) {
      text += ": " + r["failed_property"].get<std::string>() + "\n  counterexample: " +
              r["counterexample"].dump();
    }
    text += "\n";
    report["suites"].push_back(std::move(r));
  }
  write_output(o, o.json ? report.dump(2) + "\n" : text);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theta-positivity toolkit for the Lagrangian Grassmannian", "theta-lgr"};
  app.require_subcommand(1);
  Options o;

  auto add_global = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "rank n (largest rank for verify)")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "PRNG seed (fallback: THETA_LGR_SEED, then 0)");
    sub->add_option("--tolerance", o.tolerance, "orbit-witness residual bound")
        ->check(CLI::PositiveNumber);
    sub->add_option("--input", o.input, "input JSON file (default: stdin)");
    sub->add_option("--output", o.output, "output file (default: stdout)");
    sub->add_flag("--json", o.json, "machine-readable JSON report");
  };

  auto* classify = app.add_subcommand("classify", "stratum signature and positivity report");
  auto* plucker = app.add_subcommand("plucker", "generalized Plucker coordinates");
  auto* flow = app.add_subcommand("flow", "apply the contractive flow exp(x tau), c = e^x");
  flow->add_option("--c", o.c, "flow parameter c > 0 as a rational string");
  auto* factor = app.add_subcommand("factor", "u- * l * u+ factorization of a monoid element");
  auto* sample = app.add_subcommand("sample", "deterministic stratified samples (JSON Lines)");
  sample->add_option("--stratum", o.stratum, "double coset k,l or 'interior'");
  sample->add_option("--cell", o.cell, "cell index, e.g. 1,3 (or 'empty')");
  sample->add_option("--count", o.count, "number of points")->check(CLI::PositiveNumber);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", o.suites, "suite names (default: all)")->delimiter(',');
  verify->add_option("--count", o.count, "random cases per rank (0: suite default)")
      ->check(CLI::NonNegativeNumber);
  for (auto* sub : {classify, plucker, flow, factor, sample, verify}) add_global(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : TL_PARSE_ERROR;
  }

  try {
    if (*classify) return cmd_classify(o);
    if (*plucker) return cmd_plucker(o);
    if (*flow) return cmd_flow(o);
    if (*factor) return cmd_factor(o);
    if (*sample) return cmd_sample(o);
    if (*verify) return cmd_verify(o);
  } catch (const Exit& e) {
    return e.code;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "theta-lgr: " << e.what() << "\n";
    return TL_INTERNAL_ERROR;
  }
  return 0;
}
