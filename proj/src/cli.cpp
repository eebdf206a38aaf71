// Copyright 2026 The pathsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pathsum/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pathsum/circuit.hpp"
#include "pathsum/errors.hpp"
#include "pathsum/fuzz.hpp"
#include "pathsum/interpret.hpp"
#include "pathsum/rewrite.hpp"
#include "pathsum/sim.hpp"

namespace pathsum::cli {

namespace {

using ojson = nlohmann::ordered_json;

// Failure to read an input file; reported like a parse error.
class InputFileError : public Error {
 public:
  using Error::Error;
};

std::size_t default_max_eval_vars() {
  if (const char* env = std::getenv("PATHSUM_MAX_EVAL_VARS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultMaxEvalVars;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFileError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ojson amplitude_json(const Amplitude& a) {
  ojson j;
  j["num"] = a.num().str();
  j["half_exp"] = a.half_exp();
  j["exact"] = a.to_string();
  j["decimal"] = a.to_decimal_string();
  return j;
}

ojson stats_json(const SimStats& s) {
  ojson j;
  j["initial_vars"] = s.initial_vars;
  j["rewrite_steps"] = s.rewrite_steps;
  j["residual_vars"] = s.residual_vars;
  return j;
}

struct Common {
  bool json = false;
  std::size_t max_eval_vars = default_max_eval_vars();
  std::size_t max_controls = kDefaultMaxControls;
};

void add_common(CLI::App* cmd, Common& common, bool eval_guard) {
  cmd->add_flag("--json", common.json, "Print the report as JSON");
  if (eval_guard)
    cmd->add_option("--max-eval-vars", common.max_eval_vars,
                    "Largest normal form expanded densely (env PATHSUM_MAX_EVAL_VARS)");
  cmd->add_option("--max-m", common.max_controls, "Largest number of controls accepted on z gates");
}

struct Io {
  std::ostream& out;
  std::ostream& err;
  std::string file;  // current circuit file, for diagnostics
};

Circuit load_circuit(const std::string& path, const Common& common, Io& io) {
  io.file = path;
  return parse_circuit(read_file(path), common.max_controls);
}

int cmd_amp(const std::string& path, const std::string& in_bits, const std::string& out_bits, const Common& common,
            Io& io) {
  Circuit c = load_circuit(path, common, io);
  SimStats stats;
  Amplitude a = strong_sim(c, parse_bits(in_bits), parse_bits(out_bits), {common.max_eval_vars}, &stats);
  if (common.json) {
    ojson j;
    j["amplitude"] = amplitude_json(a);
    j["stats"] = stats_json(stats);
    io.out << j.dump(2) << '\n';
  } else {
    io.out << "amplitude: " << a.to_string() << '\n' << "decimal: " << a.to_decimal_string() << '\n';
  }
  return kOk;
}

int cmd_measure(const std::string& path, const std::string& in_bits, std::size_t qubit, const Common& common,
                Io& io) {
  Circuit c = load_circuit(path, common, io);
  SimStats stats;
  Probability p = measure_sim(c, parse_bits(in_bits), qubit, {common.max_eval_vars}, &stats);
  if (common.json) {
    ojson j;
    j["qubit"] = qubit;
    j["probability"] = amplitude_json(p.exact);
    j["probability"]["rational"] = p.exact.to_rational_string();
    j["stats"] = stats_json(stats);
    io.out << j.dump(2) << '\n';
  } else {
    io.out << "probability: " << p.exact.to_rational_string() << '\n'
           << "exact: " << p.exact.to_string() << '\n'
           << "decimal: " << p.exact.to_decimal_string() << '\n';
  }
  return kOk;
}

int cmd_hidden_shift_gen(std::size_t n, const std::string& shift, const std::string& g, const std::string& pi,
                         const std::string& output, const Common& common, Io& io) {
  HiddenShiftSpec spec;
  spec.n = n;
  spec.shift = parse_bits(shift);
  spec.g = parse_monomial_list(g);
  spec.pi = parse_permutation(pi);
  Circuit c = hidden_shift_circuit(spec, common.max_controls);
  const std::string text = serialize(c);
  std::size_t ccz = 0;
  for (const auto& gate : c.gates)
    if (gate.kind == GateKind::Z && gate.qubits.size() == 3) ++ccz;
  if (!output.empty()) {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw InputFileError("cannot write '" + output + "'");
    f << text;
  }
  std::ostream& report = output.empty() && !common.json ? io.err : io.out;
  if (common.json) {
    ojson j;
    if (!output.empty()) j["output"] = output;
    j["gates"] = c.gates.size();
    j["ccz"] = ccz;
    j["volume"] = volume(c).volume;
    if (output.empty()) j["circuit"] = text;
    io.out << j.dump(2) << '\n';
  } else {
    if (output.empty()) io.out << text;
    else report << "wrote " << output << '\n';
    report << "gates: " << c.gates.size() << '\n' << "ccz: " << ccz << '\n';
  }
  return kOk;
}

int cmd_hidden_shift_solve(const std::string& path, const Common& common, Io& io) {
  Circuit c = load_circuit(path, common, io);
  ShiftResult r = recover_shift(c, {common.max_eval_vars});
  if (common.json) {
    ojson j;
    j["shift"] = bits_to_string(r.shift);
    j["rewrite_steps"] = r.rewrite_steps_total;
    ojson vars = ojson::array();
    for (auto v : r.sandwich_vars) vars.push_back(v);
    j["sandwich_vars"] = std::move(vars);
    io.out << j.dump(2) << '\n';
  } else {
    io.out << "shift: " << bits_to_string(r.shift) << '\n' << "rewrite_steps: " << r.rewrite_steps_total << '\n';
  }
  return kOk;
}

int cmd_normalize(const std::string& path, const std::string& in_bits, const std::string& strategy,
                  std::uint64_t seed, bool trace, const Common& common, Io& io) {
  Circuit c = load_circuit(path, common, io);
  PathSum a = interpret(c);
  if (!in_bits.empty()) {
    Bits x = parse_bits(in_bits);
    if (x.size() != c.num_qubits)
      throw InvalidArgument("--in has " + std::to_string(x.size()) + " bits but the circuit has " +
                            std::to_string(c.num_qubits) + " qubits");
    a = compose(a, ket(x));
  }
  Strategy s = strategy == "random" ? Strategy::random(seed) : Strategy::first();
  Normalized nf = normalize(a, s);
  if (common.json) {
    ojson j;
    j["initial_vars"] = a.num_vars();
    j["normal_form"] = to_json(nf.normal_form);
    if (trace) {
      ojson steps = ojson::array();
      for (const auto& st : nf.trace) steps.push_back(st.to_string());
      j["trace"] = std::move(steps);
    }
    io.out << j.dump(2) << '\n';
  } else {
    io.out << to_json(nf.normal_form).dump() << '\n';
    if (trace) io.out << format_trace(nf.trace);
  }
  return kOk;
}

int cmd_check_confluence(std::size_t trials, std::size_t max_vars, std::uint64_t seed, std::size_t strategies,
                         const Common& common, Io& io) {
  if (max_vars > kExactEquivalenceCap)
    io.err << "warning: --max-vars " << max_vars << " exceeds " << kExactEquivalenceCap
           << "; normal forms are compared by eval equality instead of simple equivalence\n";
  ConfluenceReport r = check_confluence(trials, max_vars, seed, strategies);
  const char* mode = r.exact ? "simple-equivalence" : "eval-equality";
  if (common.json) {
    ojson j;
    j["mode"] = mode;
    j["trials"] = r.trials;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["failing_seeds"] = r.failing_seeds;
    io.out << j.dump(2) << '\n';
  } else {
    io.out << "mode: " << mode << '\n'
           << "trials: " << r.trials << '\n'
           << "passed: " << r.passed << '\n'
           << "failed: " << r.failed << '\n';
    for (auto s : r.failing_seeds) io.out << "failing seed: " << s << '\n';
  }
  return r.failed == 0 ? kOk : kConfluenceFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic path-sum simulation of Toffoli-Hadamard circuits", "pathsum"};
  app.require_subcommand(1);
  Common common;

  std::string circuit, in_bits, out_bits;
  std::size_t qubit = 0;

  auto* amp = app.add_subcommand("amp", "Exact amplitude <out|C|in>");
  amp->add_option("--circuit", circuit, "Circuit file")->required();
  amp->add_option("--in", in_bits, "Input basis state")->required();
  amp->add_option("--out", out_bits, "Output basis state")->required();
  add_common(amp, common, true);

  auto* measure = app.add_subcommand("measure", "Exact probability that a qubit reads 1");
  measure->add_option("--circuit", circuit, "Circuit file")->required();
  measure->add_option("--in", in_bits, "Input basis state")->required();
  measure->add_option("--qubit", qubit, "Measured qubit")->required();
  add_common(measure, common, true);

  std::size_t hs_n = 0;
  std::string hs_shift, hs_g, hs_pi, hs_out;
  auto* gen = app.add_subcommand("hidden-shift-gen", "Write a hidden shift circuit");
  gen->add_option("--n", hs_n, "Even qubit count")->required();
  gen->add_option("--shift", hs_shift, "Hidden shift, qubit 0 leftmost")->required();
  gen->add_option("--g", hs_g, "Monomials of g, e.g. '0,1,2;3'");
  gen->add_option("--pi", hs_pi, "Permutation of the half-register, e.g. '2,0,1'");
  gen->add_option("-o,--output", hs_out, "Output circuit file (stdout if omitted)");
  add_common(gen, common, false);

  auto* solve = app.add_subcommand("hidden-shift-solve", "Recover the shift of a hidden shift circuit");
  solve->add_option("--circuit", circuit, "Circuit file")->required();
  add_common(solve, common, true);

  std::string strategy = "first";
  std::uint64_t seed = 0;
  bool trace = false;
  auto* norm = app.add_subcommand("normalize", "Print the normal form of a circuit's path sum");
  norm->add_option("--circuit", circuit, "Circuit file")->required();
  norm->add_option("--in", in_bits, "Compose with this input basis state");
  norm->add_option("--strategy", strategy, "Rewrite strategy")->check(CLI::IsMember({"first", "random"}));
  norm->add_option("--seed", seed, "Seed for the random strategy");
  norm->add_flag("--trace", trace, "Print the rewrite steps");
  add_common(norm, common, false);

  std::size_t trials = 100, max_vars = 8, strategies = 1;
  std::uint64_t conf_seed = 0;
  auto* conf = app.add_subcommand("check-confluence", "Fuzz normal-form uniqueness up to simple equivalence");
  conf->add_option("--trials", trials, "Number of random path sums");
  conf->add_option("--max-vars", max_vars, "Variable cap of the samples");
  conf->add_option("--seed", conf_seed, "Root seed");
  conf->add_option("--random-strategies", strategies, "Random strategies compared per sample");
  add_common(conf, common, false);

  std::vector<std::string> argv_store{"pathsum"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Io io{out, err, {}};
  try {
    if (*amp) return cmd_amp(circuit, in_bits, out_bits, common, io);
    if (*measure) return cmd_measure(circuit, in_bits, qubit, common, io);
    if (*gen) return cmd_hidden_shift_gen(hs_n, hs_shift, hs_g, hs_pi, hs_out, common, io);
    if (*solve) return cmd_hidden_shift_solve(circuit, common, io);
    if (*norm) return cmd_normalize(circuit, in_bits, strategy, seed, trace, common, io);
    if (*conf) return cmd_check_confluence(trials, max_vars, conf_seed, strategies, common, io);
  } catch (const ParseError& e) {
    err << "error: " << io.file << ':' << e.line() << ':' << e.column() << ": " << e.message() << '\n';
    return kInputError;
  } catch (const EvalGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kEvalGuard;
  } catch (const NonDeterministicError& e) {
    err << "error: " << e.what() << '\n';
    return kNonDeterministic;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputFileError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kInputError;
}

}  // namespace pathsum::cli
