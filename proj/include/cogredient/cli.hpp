#pragma once

// Subcommand implementations for the `cogredient` tool. Kept in a header so
// tests can drive the tool in-process through run_cli().
//
// Exit codes: 0 success, 1 verification failure (oracle/selftest),
// 2 parse error, 3 invalid matrix, 4 budget exceeded.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cogredient/document.hpp"
#include "cogredient/error.hpp"
#include "cogredient/localring.hpp"
#include "cogredient/matrix.hpp"
#include "cogredient/oracle.hpp"
#include "cogredient/reduction.hpp"
#include "cogredient/sampling.hpp"

namespace cogredient::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kInvalidMatrix = 3,
  kBudgetExceeded = 4,
};

struct FormOptions {
  std::optional<std::string> ring;
  std::string input = "-";
  std::string input_dir;
  std::string output = "-";
  bool verify = false;
  bool no_witness = false;
  bool verbose = false;
};

struct OracleOptions {
  std::string ring;
  std::size_t n = 2;
  std::uint64_t budget = kDefaultOracleBudget;
  std::uint64_t sample = 5000;
  std::string output = "-";
};

struct RandomOptions {
  std::string ring;
  std::size_t n = 2;
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
  std::string output = "-";
};

namespace detail {

inline std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string read_input(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return read_all(stdin_stream);
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open input file '" + path + "'");
  return read_all(file);
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& stdout_stream) {
  if (path == "-") {
    stdout_stream << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError("cannot open output file '" + path + "'");
  file << text;
}

// Runs `body`, mapping library errors onto exit codes.
inline int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidMatrix;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const MismatchError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
}

inline Json form_result(const MatrixDocument& doc, bool reduce_mode, const FormOptions& opts) {
  ResultDocument result;
  if (!reduce_mode) {
    result.form = classify(doc.matrix);
    return to_json(result);
  }
  std::vector<ReductionStep> steps;
  ReductionWitness w = reduce(doc.matrix, opts.verbose ? &steps : nullptr);
  result.form = w.form;
  result.verified = opts.verify && w.verify(doc.matrix);
  if (!opts.no_witness) {
    result.witness = std::move(w.transform);
    result.target = std::move(w.target);
  }
  result.steps = std::move(steps);
  return to_json(result);
}

}  // namespace detail

/// classify / reduce on one document, or on every *.json file of a directory.
inline int cmd_form(const FormOptions& opts, bool reduce_mode, std::istream& in, std::ostream& out, std::ostream& err) {
  if (opts.input_dir.empty()) {
    return detail::guarded(err, [&] {
      const MatrixDocument doc = parse_matrix_document(detail::read_input(opts.input, in), opts.ring);
      detail::write_output(opts.output, detail::form_result(doc, reduce_mode, opts).dump(2) + "\n", out);
      return static_cast<int>(kOk);
    });
  }

  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(opts.input_dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  if (ec) {
    err << "error: cannot read directory '" << opts.input_dir << "'\n";
    return kParseError;
  }
  std::sort(files.begin(), files.end());
  Json results = Json::array();
  int status = kOk;
  for (const auto& file : files) {
    Json item;
    item["file"] = file.filename().string();
    std::ostringstream file_err;
    const int code = detail::guarded(file_err, [&] {
      const MatrixDocument doc = parse_matrix_document(detail::read_input(file.string(), in), opts.ring);
      item["result"] = detail::form_result(doc, reduce_mode, opts);
      return static_cast<int>(kOk);
    });
    if (code != kOk) {
      item["error"] = file_err.str();
      item["exit_code"] = code;
      if (status == kOk) status = code;
    }
    results.push_back(std::move(item));
  }
  return detail::guarded(err, [&] {
    detail::write_output(opts.output, results.dump(2) + "\n", out);
    return status;
  });
}

inline int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (opts.n == 0) throw ParseError("--n must be >= 1");
    const Ring ring = make_ring(opts.ring);
    const OrbitReport report = verify_classification(ring, opts.n, opts.budget, opts.sample);
    detail::write_output(opts.output, to_json(report).dump(2) + "\n", out);
    return static_cast<int>(report.passed() ? kOk : kCheckFailed);
  });
}

/// One MatrixDocument per line (JSON Lines).
inline int cmd_random(const RandomOptions& opts, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (opts.n == 0) throw ParseError("--n must be >= 1");
    const Ring ring = make_ring(opts.ring);
    Sampler sampler(opts.seed);
    std::string text;
    for (std::uint64_t i = 0; i < opts.count; ++i) {
      const MatrixDocument doc{opts.ring, ring, sampler.symmetric_invertible(ring, opts.n)};
      text += to_json(doc).dump() + "\n";
    }
    detail::write_output(opts.output, text, out);
    return static_cast<int>(kOk);
  });
}

/// Runs the library invariants on a fixed grid of rings and ranks.
inline int cmd_selftest(std::ostream& out) {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
    if (!ok) ++failures;
  };
  const std::vector<std::string> specs{"zmod:3^1", "zmod:5^1", "zmod:3^2", "zmod:5^2",
                                       "gr:3^2:2", "trunc:3:1:2", "trunc:5:2:2"};
  for (const std::string& spec : specs) {
    const Ring ring = make_ring(spec);
    const RingContext& r = *ring;

    std::vector<Element> squares;
    std::uint64_t roots_of_one = 0;
    bool sqrt_ok = true;
    for (const Element& u : r.units()) {
      const Element sq = r.mul(u, u);
      if (std::find(squares.begin(), squares.end(), sq) == squares.end()) squares.push_back(sq);
      if (sq == r.one()) ++roots_of_one;
    }
    for (const Element& s : squares) {
      const Element w = r.sqrt_unit(s);
      sqrt_ok = sqrt_ok && r.mul(w, w) == s && r.is_square_unit(s);
    }
    report(spec + " square index 2", squares.size() * 2 == r.card_units());
    report(spec + " two square roots of 1", roots_of_one == 2);
    report(spec + " sqrt_unit", sqrt_ok);
    report(spec + " z is a non-square unit", r.is_unit(r.z()) && !r.is_square_unit(r.z()));

    Sampler sampler(20240917);
    for (std::size_t n = 1; n <= 4; ++n) {
      bool witness_ok = true;
      bool agree_ok = true;
      for (int i = 0; i < 25; ++i) {
        const Matrix s = sampler.symmetric_invertible(ring, n);
        const ReductionWitness w = reduce(s);
        witness_ok = witness_ok && w.verify(s);
        agree_ok = agree_ok && classify(s) == w.form;
      }
      report(spec + " n=" + std::to_string(n) + " reduce witnesses", witness_ok);
      report(spec + " n=" + std::to_string(n) + " classify agrees with reduce", agree_ok);
    }
  }
  const std::vector<std::pair<std::string, std::size_t>> oracle_cases{{"zmod:3^1", 2}, {"zmod:3^1", 3}, {"zmod:5^1", 2}};
  for (const auto& [spec, n] : oracle_cases) {
    const OrbitReport rep = verify_classification(make_ring(spec), n);
    report("oracle " + spec + " n=" + std::to_string(n), rep.passed());
  }
  out << (failures == 0 ? "selftest: all checks passed\n" : "selftest: " + std::to_string(failures) + " check(s) failed\n");
  return failures == 0 ? kOk : kCheckFailed;
}

/// Entry point shared by main() and the tests. `args` excludes argv[0].
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical congruence forms of symmetric matrices over finite local rings"};
  app.require_subcommand(1);

  FormOptions classify_opts;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a symmetric invertible matrix");
  FormOptions reduce_opts;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce to the standard form with an explicit witness");
  for (auto [cmd, opts] : {std::pair{classify_cmd, &classify_opts}, std::pair{reduce_cmd, &reduce_opts}}) {
    cmd->add_option("--ring", opts->ring, "Ring spec (overrides/validates the document's ring)");
    cmd->add_option("--input", opts->input, "Matrix document ('-' for stdin)");
    cmd->add_option("--input-dir", opts->input_dir, "Directory of *.json matrix documents");
    cmd->add_option("--output", opts->output, "Output file ('-' for stdout)");
  }
  reduce_cmd->add_flag("--verify", reduce_opts.verify, "Re-multiply P S P^T and report the check");
  reduce_cmd->add_flag("--no-witness", reduce_opts.no_witness, "Omit the witness and target matrices");
  reduce_cmd->add_flag("--verbose", reduce_opts.verbose, "Include the cumulative transform after each stage");

  OracleOptions oracle_opts;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive orbit check on a tiny ring");
  oracle_cmd->add_option("--ring", oracle_opts.ring)->required();
  oracle_cmd->add_option("--n", oracle_opts.n)->required();
  oracle_cmd->add_option("--budget", oracle_opts.budget, "Maximum number of symmetric matrices to enumerate");
  oracle_cmd->add_option("--sample", oracle_opts.sample, "Maximum number of matrices passed through reduce");
  oracle_cmd->add_option("--output", oracle_opts.output);

  RandomOptions random_opts;
  auto* random_cmd = app.add_subcommand("random", "Seeded random symmetric invertible matrices (JSON Lines)");
  random_cmd->add_option("--ring", random_opts.ring)->required();
  random_cmd->add_option("--n", random_opts.n)->required();
  random_cmd->add_option("--seed", random_opts.seed)->required();
  random_cmd->add_option("--count", random_opts.count)->required();
  random_cmd->add_option("--output", random_opts.output);

  auto* selftest_cmd = app.add_subcommand("selftest", "Run built-in invariant checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  if (classify_cmd->parsed()) return cmd_form(classify_opts, false, in, out, err);
  if (reduce_cmd->parsed()) return cmd_form(reduce_opts, true, in, out, err);
  if (oracle_cmd->parsed()) return cmd_oracle(oracle_opts, out, err);
  if (random_cmd->parsed()) return cmd_random(random_opts, out, err);
  if (selftest_cmd->parsed()) return cmd_selftest(out);
  return kParseError;
}

}  // namespace cogredient::cli
