// cdvdiv: discrepancy-one weighted blowups over cDV points.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cdv/report.hpp"

namespace {

constexpr int kInputError = 2;
constexpr int kViolation = 3;

struct Config {
  std::string command;
  std::string input;
  std::optional<int> truncation;
  std::optional<int> max_weight;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string type;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lines starting with '#' are comments; the rest is one polynomial.
cdv::Polynomial read_input(const std::string& path) {
  if (path.empty()) throw InputError("--input is required for this command");
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::string line, text;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    text += line + " ";
  }
  if (text.find_first_not_of(' ') == std::string::npos) throw InputError(path + ": empty input");
  try {
    return cdv::parse_polynomial(text);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

cdv::Json config_json(const Config& c) {
  cdv::Json j;
  j["input"] = c.input.empty() ? cdv::Json(nullptr) : cdv::Json(c.input);
  j["truncation"] = c.truncation ? cdv::Json(*c.truncation) : cdv::Json(nullptr);
  j["max_weight"] = c.max_weight ? cdv::Json(*c.max_weight) : cdv::Json(nullptr);
  j["seed"] = c.seed;
  if (!c.type.empty()) j["type"] = c.type;
  return j;
}

int run(const Config& c) {
  cdv::Json body;
  int status = 0;
  if (c.command == "lemmas") {
    if (c.type.empty()) throw InputError("lemmas needs --type cD:N|cE6|cE7|cE8");
    cdv::SingularityType type;
    try {
      type = cdv::parse_type(c.type);
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
    if (!type.is_cD_or_cE()) throw InputError("lemmas needs a cD or cE type, got " + c.type);
    body = cdv::lemmas_json(type);
  } else if (c.command == "corpus") {
    cdv::AnalysisOptions opts;
    opts.seed = c.seed;
    opts.truncation_degree = c.truncation;
    opts.max_coord = c.max_weight;
    const auto outcomes = cdv::run_corpus(cdv::generate_corpus(c.seed), opts);
    body = cdv::corpus_json(outcomes);
    if (!body["uniqueness_holds"].get<bool>()) status = kViolation;
  } else {
    const cdv::Polynomial f = read_input(c.input);
    if (f.is_zero()) throw InputError("zero polynomial");
    if (f.coefficient(cdv::Exponent{}) != 0) throw InputError("f(0) != 0: the origin is not on the hypersurface");
    if (c.command == "classify") {
      body = cdv::classify_json(f, cdv::classify_type(f, c.truncation));
    } else if (c.command == "diagram") {
      const auto d = cdv::build_diagram(f);
      cdv::NondegeneracyOptions no;
      no.seed = c.seed;
      body = cdv::diagram_json(d, cdv::check_nondegeneracy(d, no));
    } else if (c.command == "weights") {
      const auto d = cdv::build_diagram(f);
      const int box = c.max_weight ? *c.max_weight : cdv::default_max_coord(d);
      body = cdv::weights_json(d, box, cdv::enumerate_weights(d, box));
    } else {
      cdv::AnalysisOptions opts;
      opts.seed = c.seed;
      opts.truncation_degree = c.truncation;
      opts.max_coord = c.max_weight;
      const auto a = cdv::analyze(f, opts);
      for (const auto& w : a.warnings) std::cerr << "warning: " << w << "\n";
      body = cdv::analysis_json(a);
      if (a.summary.violation) status = kViolation;
    }
  }
  const auto doc = cdv::make_document(c.command, config_json(c), body);
  std::cout << (c.format == "json" ? cdv::render_json(doc) : cdv::render_text(doc));
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cdvdiv: discrepancy-one divisors over cD and cE points"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub, bool takes_input) {
    if (takes_input) sub->add_option("--input", c.input, "file holding one polynomial in x, y, z, t");
    sub->add_option("--truncation", c.truncation, "truncation degree for coordinate changes");
    sub->add_option("--max-weight", c.max_weight, "largest weight coordinate to enumerate");
    sub->add_option("--seed", c.seed, "seed for every random choice");
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  common(app.add_subcommand("classify", "singularity type"), true);
  common(app.add_subcommand("diagram", "Newton diagram and face non-degeneracy"), true);
  common(app.add_subcommand("weights", "discrepancy-one weights"), true);
  common(app.add_subcommand("analyze", "full divisor report"), true);
  auto* lemmas = app.add_subcommand("lemmas", "quadruples and weight catalog for a type");
  common(lemmas, false);
  lemmas->add_option("--type", c.type, "cD:N, cE6, cE7 or cE8")->required();
  common(app.add_subcommand("corpus", "uniqueness check over the generated corpus"), false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    return run(c);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
