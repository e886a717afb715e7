// Command-line front end: generator listings, monoid enumeration, 2x2
// factorization, and the verification drivers, with JSON output for
// scripting. Exit codes: 0 success/verified, 1 verification failure or
// computation error, 2 usage or parse error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropmat/json_io.hpp"
#include "tropmat/tropmat.hpp"

namespace {

using nlohmann::json;
using namespace tropmat;

struct SpecOptions {
  std::string semiring = "min-plus";
  int n = 2;
  std::optional<std::uint64_t> t;
  bool infinite = false;

  Family family() const {
    if (semiring == "min-plus") return Family::MinPlus;
    if (semiring == "max-plus") return Family::MaxPlus;
    throw CLI::ValidationError("--semiring must be min-plus or max-plus");
  }

  SemiringSpec finite_spec() const {
    if (infinite || !t) {
      throw CLI::ValidationError("this command requires --t <nat>");
    }
    return family() == Family::MinPlus ? SemiringSpec::min_plus(*t)
                                       : SemiringSpec::max_plus(*t);
  }

  SemiringSpec any_spec() const {
    if (infinite) {
      return family() == Family::MinPlus ? SemiringSpec::min_plus()
                                         : SemiringSpec::max_plus();
    }
    if (!t) {
      throw CLI::ValidationError("specify --t <nat> or --infinite");
    }
    return finite_spec();
  }
};

void add_spec_flags(CLI::App* cmd, SpecOptions& opts, bool with_infinite) {
  cmd->add_option("--semiring", opts.semiring, "min-plus or max-plus")
      ->check(CLI::IsMember({"min-plus", "max-plus"}));
  cmd->add_option("--n", opts.n, "matrix dimension (2 or 3)")
      ->check(CLI::IsMember({2, 3}));
  auto* topt = cmd->add_option("--t", opts.t, "quotient threshold");
  if (with_infinite) {
    cmd->add_flag("--infinite", opts.infinite, "use the infinite semiring")
        ->excludes(topt);
  }
}

/// Labels[i] holds an optional display name from a generator file.
GeneratorSet load_generator_file(SemiringSpec spec, int n,
                                 const std::string& path,
                                 std::vector<std::string>& labels) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open generator file " + path);
  }
  json doc = json::parse(in, nullptr, true);
  if (!doc.is_array()) {
    throw ParseError("generator file must hold a JSON array");
  }
  std::vector<Matrix> matrices;
  for (const json& item : doc) {
    if (item.is_object()) {
      matrices.push_back(matrix_from_json(spec, n, item.at("matrix")));
      labels.push_back(item.value("descriptor", ""));
    } else {
      matrices.push_back(matrix_from_json(spec, n, item));
      labels.push_back("");
    }
  }
  return custom_generator_set(spec, n, std::move(matrices));
}

GeneratorSet paper_generators(SemiringSpec spec, int n) {
  if (n == 2) {
    return spec.family() == Family::MinPlus
               ? min_plus_2x2_generators(spec.threshold())
               : max_plus_2x2_generators(spec.threshold());
  }
  if (spec.family() == Family::MinPlus) {
    return min_plus_3x3_conjecture_generators(spec.threshold());
  }
  throw CLI::ValidationError(
      "no built-in 3x3 max-plus generating family; pass --gens-file");
}

std::string label_of(const GeneratorSet& gens,
                     const std::vector<std::string>& labels, std::size_t i) {
  if (i < labels.size() && !labels[i].empty()) return labels[i];
  return gens.descriptors[i].token();
}

void emit(const json& doc, const std::string& human, bool as_json) {
  if (as_json) {
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << human;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact computation in 2x2 and 3x3 tropical matrix monoids"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a single JSON document on stdout");

  SpecOptions gens_opts;
  auto* cmd_gens = app.add_subcommand(
      "gens", "print a built-in generating family in canonical order");
  add_spec_flags(cmd_gens, gens_opts, false);

  SpecOptions enum_opts;
  std::uint64_t limit = kDefaultElementLimit;
  std::string gens_file;
  std::string elements_out;
  std::string cayley_out;
  auto* cmd_enum = app.add_subcommand(
      "enumerate", "enumerate the monoid generated by a set of matrices");
  add_spec_flags(cmd_enum, enum_opts, false);
  cmd_enum->add_option("--limit", limit, "element limit");
  cmd_enum->add_option("--gens-file", gens_file,
                       "JSON generator list overriding the built-in family");
  cmd_enum->add_option("--elements-out", elements_out,
                       "write elements and words as JSON lines");
  cmd_enum->add_option("--cayley-out", cayley_out,
                       "write the right Cayley graph as CSV");

  SpecOptions fact_opts;
  std::string matrix_text;
  auto* cmd_fact = app.add_subcommand(
      "factorize", "factor a 2x2 matrix into generator letters");
  add_spec_flags(cmd_fact, fact_opts, true);
  cmd_fact->add_option("matrix", matrix_text, "matrix text, e.g. \"inf 2; 3 inf\"")
      ->required();

  SpecOptions vf_opts;
  std::string vf_gens_file;
  std::uint64_t vf_limit = kDefaultElementLimit;
  auto* cmd_vf = app.add_subcommand(
      "verify-full", "check that a set generates the whole matrix monoid");
  add_spec_flags(cmd_vf, vf_opts, false);
  cmd_vf->add_option("--gens-file", vf_gens_file, "JSON generator list");
  cmd_vf->add_option("--limit", vf_limit, "element limit");

  SpecOptions vi_opts;
  std::string vi_gens_file;
  std::uint64_t vi_limit = kDefaultElementLimit;
  auto* cmd_vi = app.add_subcommand(
      "verify-irredundant",
      "check that no generator lies in the semigroup of the others");
  add_spec_flags(cmd_vi, vi_opts, false);
  cmd_vi->add_option("--gens-file", vi_gens_file, "JSON generator list");
  cmd_vi->add_option("--limit", vi_limit, "element limit");

  std::uint64_t conj_t = 0;
  std::uint64_t conj_limit = kDefaultElementLimit;
  auto* cmd_conj = app.add_subcommand(
      "check-conjecture",
      "verify the 3x3 min-plus generating-family claim at threshold t");
  cmd_conj->add_option("--t", conj_t, "quotient threshold")->required();
  cmd_conj->add_option("--limit", conj_limit, "element limit");

  SpecOptions mg_opts;
  std::uint64_t mg_limit = kDefaultElementLimit;
  auto* cmd_mg = app.add_subcommand(
      "min-gens",
      "greedily compute an irredundant generating set of the full monoid");
  add_spec_flags(cmd_mg, mg_opts, false);
  cmd_mg->add_option("--limit", mg_limit, "element limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints help or the usage error
    return rc == 0 ? 0 : 2;
  }

  if (cmd_gens->parsed()) {
    const SemiringSpec spec = gens_opts.finite_spec();
    const GeneratorSet gens = paper_generators(spec, gens_opts.n);
    json out = json::array();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      out.push_back({{"descriptor", gens.descriptors[i].token()},
                     {"matrix", matrix_to_json(gens.matrices[i])}});
    }
    std::cout << out.dump(as_json ? -1 : 2) << "\n";
    return 0;
  }

  if (cmd_enum->parsed()) {
    const SemiringSpec spec = enum_opts.finite_spec();
    std::vector<std::string> labels;
    const GeneratorSet gens =
        gens_file.empty()
            ? paper_generators(spec, enum_opts.n)
            : load_generator_file(spec, enum_opts.n, gens_file, labels);
    EnumOptions options;
    options.element_limit = limit;
    const auto start = std::chrono::steady_clock::now();
    const EnumerationResult result = enumerate(gens, options);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (!elements_out.empty()) {
      std::ofstream out(elements_out);
      for (std::size_t i = 0; i < result.size(); ++i) {
        json line = {{"index", i},
                     {"key", result.keys[i]},
                     {"matrix", matrix_to_json(result.matrix_at(i))},
                     {"word", json::array()}};
        for (const Descriptor& d : result.word_at(i)) {
          line["word"].push_back(d.token());
        }
        out << line.dump() << "\n";
      }
    }
    if (!cayley_out.empty()) {
      std::ofstream out(cayley_out);
      out << "element_index,generator_index,target_index\n";
      for (std::size_t e = 0; e < result.size(); ++e) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
          out << e << ',' << g << ',' << result.cayley_at(e, g) << "\n";
        }
      }
    }
    emit({{"size", result.size()},
          {"complete", result.complete},
          {"seconds", seconds}},
         "size=" + std::to_string(result.size()) +
             " complete=" + (result.complete ? std::string("true") : "false") +
             " seconds=" + std::to_string(seconds) + "\n",
         as_json);
    return result.complete ? 0 : 1;
  }

  if (cmd_fact->parsed()) {
    if (fact_opts.n != 2) {
      throw CLI::ValidationError("factorize supports only --n 2");
    }
    const SemiringSpec spec = fact_opts.any_spec();
    const Matrix m = Matrix::parse(spec, 2, matrix_text);
    const Word word = factor2(m);
    const Matrix product = eval_word(spec, 2, word);
    json jword = json::array();
    for (const Descriptor& d : word) jword.push_back(d.token());
    emit({{"word", jword},
          {"product", matrix_to_json(product)},
          {"matches", product == m}},
         "word: " + word_str(word) + "\nproduct: " + product.str() + "\n",
         as_json);
    return product == m ? 0 : 1;
  }

  if (cmd_vf->parsed()) {
    const SemiringSpec spec = vf_opts.finite_spec();
    std::vector<std::string> labels;
    const GeneratorSet gens =
        vf_gens_file.empty()
            ? paper_generators(spec, vf_opts.n)
            : load_generator_file(spec, vf_opts.n, vf_gens_file, labels);
    const FullGenerationReport report = verify_full(gens, vf_limit);
    emit({{"generated_size", report.generated_size},
          {"expected_size", report.expected_size},
          {"full", report.full}},
         std::string("full: ") + (report.full ? "yes" : "NO") + " (" +
             std::to_string(report.generated_size) + "/" +
             std::to_string(report.expected_size) + ")\n",
         as_json);
    return report.full ? 0 : 1;
  }

  if (cmd_vi->parsed()) {
    const SemiringSpec spec = vi_opts.finite_spec();
    std::vector<std::string> labels;
    const GeneratorSet gens =
        vi_gens_file.empty()
            ? paper_generators(spec, vi_opts.n)
            : load_generator_file(spec, vi_opts.n, vi_gens_file, labels);
    const IrredundancyReport report = verify_irredundant(gens, vi_limit);
    json redundant = json::array();
    std::string human;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (report.redundant[g]) {
        redundant.push_back(
            {{"index", g}, {"descriptor", label_of(gens, labels, g)}});
        human += "redundant: " + label_of(gens, labels, g) + "\n";
      }
    }
    human += std::string("irredundant: ") +
             (report.irredundant ? "yes" : "NO") + "\n";
    emit({{"generators", gens.size()},
          {"redundant", redundant},
          {"irredundant", report.irredundant}},
         human, as_json);
    return report.irredundant ? 0 : 1;
  }

  if (cmd_conj->parsed()) {
    const ConjectureReport report = check_conjecture(conj_t, conj_limit);
    emit({{"t", report.t},
          {"generator_count", report.generator_count},
          {"formula_count", report.formula_count},
          {"generated_size", report.generated_size},
          {"expected_size", report.expected_size},
          {"verified", report.verified}},
         "t=" + std::to_string(report.t) + " generators=" +
             std::to_string(report.generator_count) + " generated=" +
             std::to_string(report.generated_size) + "/" +
             std::to_string(report.expected_size) +
             (report.verified ? " verified\n" : " NOT VERIFIED\n"),
         as_json);
    return report.verified ? 0 : 1;
  }

  if (cmd_mg->parsed()) {
    const SemiringSpec spec = mg_opts.finite_spec();
    const GeneratorSet set = small_generating_set(spec, mg_opts.n, mg_limit);
    json matrices = json::array();
    std::string human = "size: " + std::to_string(set.size()) + "\n";
    for (const Matrix& m : set.matrices) {
      matrices.push_back(matrix_to_json(m));
      human += m.str() + "\n";
    }
    emit({{"size", set.size()}, {"matrices", matrices}}, human, as_json);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
