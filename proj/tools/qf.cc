// Copyright 2026 The qformula Authors
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

// qf: command-line front end for the qformula library.
//
// Exit codes: 0 success, 1 domain or input error, 2 verification failure, 64 usage error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qformula/circuit_io.h"
#include "qformula/counting.h"
#include "qformula/errors.h"
#include "qformula/formula.h"
#include "qformula/lemma_checks.h"
#include "qformula/nechiporuk.h"
#include "qformula/rewrite.h"
#include "qformula/simulator.h"
#include "qformula/truth_table.h"

using nlohmann::json;
using namespace qformula;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitVerification = 2;
constexpr int kExitUsage = 64;

struct Output {
    bool json_mode = false;
    json report = json::object();
    std::ostringstream text;

    void emit() const {
        if (json_mode) {
            std::cout << report.dump(2) << "\n";
        } else {
            std::cout << text.str();
        }
    }
};

std::string fmt(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

Block parse_block_list(const std::string &text) {
    std::vector<VariableIndex> vars;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::istringstream words(token);
        std::string word;
        while (words >> word) {
            std::size_t used = 0;
            unsigned long value = 0;
            try {
                value = std::stoul(word, &used);
            } catch (const std::logic_error &) {
                throw DomainError("bad variable index '" + word + "' in block");
            }
            if (used != word.size() || value == 0) {
                throw DomainError("bad variable index '" + word + "' in block");
            }
            vars.push_back(static_cast<VariableIndex>(value));
        }
    }
    return make_block(std::move(vars));
}

// "2=0,3=1": one value per variable outside the block.
Restriction parse_restriction(const std::string &text, const Block &block) {
    Restriction out;
    out.block = block;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) {
            continue;
        }
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw DomainError("restriction entries look like j=0 or j=1, got '" + item + "'");
        }
        std::string var = item.substr(0, eq);
        std::string val = item.substr(eq + 1);
        std::size_t used = 0;
        unsigned long j = 0;
        try {
            j = std::stoul(var, &used);
        } catch (const std::logic_error &) {
            throw DomainError("bad variable in restriction entry '" + item + "'");
        }
        if (used != var.size() || j == 0 || (val != "0" && val != "1")) {
            throw DomainError("bad restriction entry '" + item + "'");
        }
        out.values[static_cast<VariableIndex>(j)] = val == "1";
    }
    return out;
}

Assignment parse_assignment(const std::string &bits, std::size_t n) {
    if (bits.size() != n) {
        throw DomainError("assignment needs " + std::to_string(n) + " bits, got " + std::to_string(bits.size()));
    }
    Assignment out(n);
    for (std::size_t i = 0; i < n; i++) {
        if (bits[i] != '0' && bits[i] != '1') {
            throw DomainError("assignment bits must be 0 or 1");
        }
        out[i] = bits[i] == '1';
    }
    return out;
}

std::string verdict_kind(const FunctionVerdict &v) {
    switch (v.kind) {
        case FunctionVerdict::Kind::kComputes:
            return "computes";
        case FunctionVerdict::Kind::kFailsAt:
            return "fails";
        case FunctionVerdict::Kind::kUndeterminedAt:
            return "undetermined";
    }
    return "unknown";
}

json block_json(const Block &block) {
    return json(std::vector<VariableIndex>(block.begin(), block.end()));
}

Circuit load_circuit(const std::string &path) {
    Circuit c = read_circuit(path);
    require_valid(c);
    return c;
}

int cmd_simulate(Output &out, const std::string &path, const std::string &bits, std::size_t max_qubits) {
    Circuit c = load_circuit(path);
    RunResult r = run(c, parse_assignment(bits, c.num_variables), SimulatorConfig{max_qubits});
    out.report = {
        {"command", "simulate"},
        {"assignment", bits},
        {"p1", r.outcome.p1},
        {"norm0_sq", r.outcome.norm0_sq},
        {"norm1_sq", r.outcome.norm1_sq},
        {"state_norm", r.state.norm()},
    };
    out.text << "p1 " << fmt(r.outcome.p1) << "\n";
    out.text << "norm0_sq " << fmt(r.outcome.norm0_sq) << "\n";
    out.text << "norm1_sq " << fmt(r.outcome.norm1_sq) << "\n";
    return kExitOk;
}

int cmd_evaluate(Output &out, const std::string &circuit_path, const std::string &table_path, std::size_t max_qubits) {
    Circuit c = load_circuit(circuit_path);
    TruthTable f = read_truth_table(table_path);
    FunctionVerdict v = evaluate(c, f, SimulatorConfig{max_qubits});
    out.report = {{"command", "evaluate"}, {"verdict", verdict_kind(v)}};
    if (v.kind != FunctionVerdict::Kind::kComputes) {
        out.report["alpha"] = v.alpha;
        out.report["p"] = v.p;
    }
    out.text << v.str() << "\n";
    return v.kind == FunctionVerdict::Kind::kComputes ? kExitOk : kExitVerification;
}

int cmd_analyze(Output &out, const std::string &path, const std::string &block_text) {
    Circuit c = read_circuit(path);
    ValidationReport validation = validate(c);
    out.report = {{"command", "analyze"}, {"valid", validation.ok()}, {"issues", validation.issues}};
    if (!validation.ok()) {
        out.text << "invalid circuit\n";
        for (const auto &issue : validation.issues) {
            out.text << "  " << issue << "\n";
        }
        return kExitDomain;
    }
    ComputationGraph graph = computation_graph(c);
    bool tree = is_tree(graph);
    bool unique = has_unique_paths(c);
    bool formula = is_formula(c);
    out.report["formula"] = formula;
    out.report["tree_test"] = tree;
    out.report["unique_path_test"] = unique;
    out.report["size"] = c.size();
    out.report["num_gates"] = c.gates.size();
    out.report["graph_gate_steps"] = json::array();
    for (std::size_t g : graph.gates()) {
        out.report["graph_gate_steps"].push_back(c.gates[g].step);
    }
    out.report["path_counts"] = output_path_counts(c);
    json classes = json::array();
    for (const auto &cls : companions(c, c.gates.size()).classes()) {
        classes.push_back(cls);
    }
    out.report["companions_final"] = classes;

    out.text << (formula ? "formula" : "not a formula") << "\n";
    out.text << "size " << c.size() << " (" << c.gates.size() << " gates, " << c.num_qubits << " wires)\n";
    out.text << "computation graph gates at steps";
    for (std::size_t g : graph.gates()) {
        out.text << " " << c.gates[g].step;
    }
    out.text << "\n";

    if (!block_text.empty()) {
        Block block = parse_block_list(block_text);
        out.report["block"] = block_json(block);
        if (!formula) {
            out.text << "block analysis skipped: not a formula\n";
            return kExitOk;
        }
        PathSet paths = path_sets(c, block);
        json jp = json::array();
        for (const auto &path : paths.paths) {
            json steps = json::array();
            for (const auto &hop : path.hops) {
                steps.push_back(c.gates[hop.gate].step);
            }
            jp.push_back({{"input_wire", path.input_wire}, {"steps", steps}});
        }
        auto meet = intersection_gates(paths);
        json jm = json::array();
        for (std::size_t g : meet) {
            jm.push_back(c.gates[g].step);
        }
        out.report["block_wires"] = paths.wire_count;
        out.report["paths"] = jp;
        out.report["disconnected_wires"] = paths.disconnected_wires;
        out.report["intersection_steps"] = jm;
        out.text << "block wires " << paths.wire_count << ", intersection gates " << meet.size() << "\n";
        json js = json::array();
        for (const auto &seg : path_segments(c, paths)) {
            json entry = {{"j0", seg.j0}, {"j1", seg.j1}, {"q0", seg.q0}, {"interior", seg.interior.size()}};
            out.text << "segment j0=" << seg.j0 << " j1=" << seg.j1 << " q0=" << seg.q0
                     << " interior=" << seg.interior.size();
            if (seg.interior.size() > 0) {
                try {
                    CompanionSet cs = companion_set_of_path(c, paths, seg, LabelPolicy::kAllowOtherVariables);
                    entry["companions"] = cs.qubits;
                    json postponed = json::array();
                    for (std::size_t g : cs.postponed_gates) {
                        postponed.push_back(c.gates[g].step);
                    }
                    entry["postponed_steps"] = postponed;
                    out.text << " v=" << cs.qubits.size() << " postponed=" << cs.postponed_gates.size();
                } catch (const StructuralError &e) {
                    entry["error"] = e.what();
                    out.text << " (" << e.what() << ")";
                }
            }
            out.text << "\n";
            js.push_back(entry);
        }
        out.report["segments"] = js;
    }
    return kExitOk;
}

int cmd_squeeze(
    Output &out,
    const std::string &path,
    const std::string &block_text,
    const std::string &restriction_text,
    const std::string &output_path,
    const std::string &completion,
    double tolerance,
    std::size_t max_qubits) {
    if (!(tolerance > 0)) {
        throw DomainError("tolerance must be positive");
    }
    Circuit c = load_circuit(path);
    Block block = parse_block_list(block_text);
    Restriction rho = parse_restriction(restriction_text, block);
    Circuit restricted = restrict_circuit(c, rho);
    CompletionOrder order = completion == "reverse" ? CompletionOrder::kReverse : CompletionOrder::kForward;
    SqueezedCircuit squeezed = squeeze_all(restricted, block, order);
    SqueezeVerification check = verify_squeeze(restricted, squeezed.circuit, block, SimulatorConfig{max_qubits});
    if (!output_path.empty()) {
        write_circuit(squeezed.circuit, output_path);
    }

    std::size_t limit = 4 * squeezed.block_wires + 1;
    bool size_ok = squeezed.circuit.gates.size() <= limit;
    bool ok = check.max_deviation <= tolerance && check.verdicts_agree && size_ok;

    json records = json::array();
    for (const auto &r : squeezed.records) {
        records.push_back(
            {{"j0", r.segment.j0},
             {"j1", r.segment.j1},
             {"v", r.v()},
             {"d", r.d()},
             {"borderline", r.basis.borderline},
             {"residual", r.reconstruction_residual}});
    }
    out.report = {
        {"command", "squeeze"},
        {"block", block_json(block)},
        {"block_wires", squeezed.block_wires},
        {"original_gates", restricted.gates.size()},
        {"squeezed_gates", squeezed.circuit.gates.size()},
        {"squeezed_qubits", squeezed.circuit.num_qubits},
        {"gate_limit", limit},
        {"dropped_gates", squeezed.dropped_gates.size()},
        {"composite_gates", squeezed.has_composite_gates},
        {"max_deviation", check.max_deviation},
        {"tolerance", tolerance},
        {"verdicts_agree", check.verdicts_agree},
        {"records", records},
        {"ok", ok},
    };
    out.text << "squeezed " << restricted.gates.size() << " gates into " << squeezed.circuit.gates.size()
             << " (limit " << limit << ")\n";
    for (const auto &r : squeezed.records) {
        out.text << "path j0=" << r.segment.j0 << " j1=" << r.segment.j1 << " v=" << r.v() << " d=" << r.d()
                 << (r.basis.borderline ? " (borderline rank)" : "") << "\n";
    }
    if (squeezed.has_composite_gates) {
        out.text << "note: composite gates act on 6 qubits\n";
    }
    out.text << "max probability deviation " << fmt(check.max_deviation) << " over " << check.assignments_checked
             << " block assignments\n";
    out.text << (ok ? "verified" : "VERIFICATION FAILED") << "\n";
    return ok ? kExitOk : kExitVerification;
}

int cmd_nechiporuk(Output &out, const std::string &table_path, const std::string &partition_path) {
    TruthTable f = read_truth_table(table_path);
    Partition p = read_partition(partition_path);
    if (p.num_variables < f.num_variables()) {
        p.num_variables = f.num_variables();
    }
    NechiporukReport r = nechiporuk_bound(f, p);
    json blocks = json::array();
    for (const auto &b : r.blocks) {
        blocks.push_back({{"block", block_json(b.block)}, {"sigma", b.sigma}, {"term", b.term}});
        out.text << "block";
        for (auto j : b.block) {
            out.text << " " << j;
        }
        out.text << ": sigma " << b.sigma << ", term " << fmt(b.term) << "\n";
    }
    out.report = {{"command", "nechiporuk"}, {"blocks", blocks}, {"total", r.total}};
    out.text << "total bound " << fmt(r.total) << "\n";
    return kExitOk;
}

int cmd_ed(Output &out, std::size_t ell, bool emit, const std::string &dir) {
    TruthTable f = ed_function(ell);
    Partition p = ed_partition(ell);
    EdSigmaReport r = ed_sigma_check(ell);
    out.report = {
        {"command", "ed"},
        {"ell", ell},
        {"n", f.num_variables()},
        {"sigmas", r.sigmas},
        {"lower_bound", r.lower_bound},
        {"meets_lower_bound", r.meets_lower_bound},
        {"symmetric", r.symmetric},
        {"total_bound", r.total_bound},
    };
    out.text << "ell " << ell << ", n " << f.num_variables() << "\n";
    out.text << "sigma per block";
    for (auto s : r.sigmas) {
        out.text << " " << s;
    }
    out.text << " (lower bound " << r.lower_bound << ")\n";
    out.text << "total bound " << fmt(r.total_bound) << "\n";
    if (emit) {
        std::filesystem::path base(dir);
        std::string stem = "ed" + std::to_string(f.num_variables());
        write_truth_table(f, base / (stem + ".tt"));
        write_partition(p, base / (stem + ".part"));
        out.report["files"] = {(base / (stem + ".tt")).string(), (base / (stem + ".part")).string()};
        out.text << "wrote " << (base / (stem + ".tt")).string() << " and " << (base / (stem + ".part")).string()
                 << "\n";
    }
    bool ok = r.meets_lower_bound && r.symmetric;
    return ok ? kExitOk : kExitVerification;
}

int cmd_warren(Output &out, std::size_t m, std::size_t t, std::size_t deg) {
    long double value = warren_bound(m, t, deg);
    double bits = warren_bound_log2(m, t, deg);
    out.report = {{"command", "bounds warren"}, {"m", m}, {"t", t}, {"deg", deg}, {"value", static_cast<double>(value)},
                  {"log2", bits}};
    out.text << "warren bound " << fmt(static_cast<double>(value)) << " (" << fmt(bits) << " bits)\n";
    return kExitOk;
}

int cmd_appendix(Output &out, std::size_t n, std::size_t N, std::size_t d, std::size_t wires) {
    CountingParams params{n, N, d, wires};
    AppendixBound a = appendix_bound(params);
    EquivClassBound e = equiv_class_bound(params);
    out.report = {
        {"command", "bounds appendix"},
        {"n", n},
        {"N", N},
        {"d", d},
        {"wires", params.wires()},
        {"mu", a.mu},
        {"log2_sign_factor", a.log2_sign_factor},
        {"log2_equiv_binomial", e.log2_binomial_form},
        {"log2_equiv_crude", e.log2_crude_form},
        {"log2_total", a.log2_total},
    };
    out.text << "mu " << a.mu << "\n";
    out.text << "sign-assignment factor " << fmt(a.log2_sign_factor) << " bits\n";
    out.text << "equivalence classes " << fmt(e.log2_binomial_form) << " bits (crude " << fmt(e.log2_crude_form)
             << " bits)\n";
    out.text << "total " << fmt(a.log2_total) << " bits\n";
    return kExitOk;
}

int cmd_enumerate(Output &out, std::size_t n, std::size_t N, const std::string &net_path, std::size_t qubits) {
    GateNet net = parse_gate_net(read_text_file(net_path));
    if (qubits == 0) {
        qubits = n;
        for (const auto &entry : net) {
            qubits = std::max(qubits, exact_log2(entry.matrix.rows()));
        }
    }
    EnumerationResult r = enumerate_functions(n, N, net, qubits);
    json tables = json::array();
    for (const auto &t : r.functions) {
        tables.push_back(t.str());
    }
    out.report = {
        {"command", "enumerate"},
        {"n", n},
        {"N", N},
        {"qubits", qubits},
        {"circuits", r.circuits},
        {"count", r.count()},
        {"functions", tables},
    };
    out.text << r.count() << " functions from " << r.circuits << " circuits\n";
    for (const auto &t : r.functions) {
        out.text << "  " << t.str() << "\n";
    }
    return kExitOk;
}

int cmd_verify_lemmas(Output &out, std::uint64_t seed, std::size_t cases) {
    auto results = verify_lemmas(seed, cases);
    bool ok = true;
    json checks = json::array();
    for (const auto &r : results) {
        ok = ok && r.passed();
        checks.push_back(
            {{"name", r.name},
             {"cases", r.cases},
             {"max_error", r.max_error},
             {"tolerance", r.tolerance},
             {"rejected", r.rejected},
             {"passed", r.passed()}});
        out.text << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, max error "
                 << fmt(r.max_error) << " (tolerance " << fmt(r.tolerance) << ")\n";
    }
    out.report = {{"command", "verify-lemmas"}, {"seed", seed}, {"checks", checks}, {"ok", ok}};
    return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qf: quantum formula analysis toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_flag("--json", out.json_mode, "Machine-readable report on stdout");

    std::function<int()> action;

    std::string circuit_path;
    std::string table_path;
    std::string partition_path;
    std::string bits;
    std::string block_text;
    std::string restriction_text;
    std::string output_path;
    std::string completion = "forward";
    std::string net_path;
    std::string dir = ".";
    std::size_t max_qubits = 20;
    double tolerance = kProbabilityTolerance;
    std::size_t ell = 0;
    bool emit = false;
    std::size_t m = 0, t = 0, deg = 0, n = 0, N = 0, d = 0, wires = 0, qubits = 0;
    std::uint64_t seed = 7;
    std::size_t cases = 1000;

    auto *simulate = app.add_subcommand("simulate", "Run a circuit on one assignment");
    simulate->add_option("-c,--circuit", circuit_path, "Circuit file")->required();
    simulate->add_option("-a,--assign", bits, "Assignment bits, x1 first")->required();
    simulate->add_option("--max-qubits", max_qubits, "Simulation cap")->check(CLI::Range(1, 20));
    simulate->callback([&] { action = [&] { return cmd_simulate(out, circuit_path, bits, max_qubits); }; });

    auto *eval = app.add_subcommand("evaluate", "Check that a circuit computes a truth table");
    eval->add_option("-c,--circuit", circuit_path, "Circuit file")->required();
    eval->add_option("-t,--table", table_path, "Truth-table file")->required();
    eval->add_option("--max-qubits", max_qubits, "Simulation cap")->check(CLI::Range(1, 20));
    eval->callback([&] { action = [&] { return cmd_evaluate(out, circuit_path, table_path, max_qubits); }; });

    auto *analyze = app.add_subcommand("analyze", "Formula structure, paths and companions");
    analyze->add_option("-c,--circuit", circuit_path, "Circuit file")->required();
    analyze->add_option("-b,--block", block_text, "Block variables, e.g. 1,2");
    analyze->callback([&] { action = [&] { return cmd_analyze(out, circuit_path, block_text); }; });

    auto *squeeze = app.add_subcommand("squeeze", "Restrict, squeeze and verify a formula");
    squeeze->add_option("-c,--circuit", circuit_path, "Circuit file")->required();
    squeeze->add_option("-b,--block", block_text, "Block variables, e.g. 1")->required();
    squeeze->add_option("-r,--restrict", restriction_text, "Values outside the block, e.g. 2=0,3=1");
    squeeze->add_option("-o,--output", output_path, "Write the squeezed circuit here");
    squeeze->add_option("--completion", completion, "Unitary completion order")
        ->check(CLI::IsMember({"forward", "reverse"}));
    squeeze->add_option("--tol", tolerance, "Probability tolerance")->check(CLI::PositiveNumber);
    squeeze->add_option("--max-qubits", max_qubits, "Simulation cap")->check(CLI::Range(1, 20));
    squeeze->callback([&] {
        action = [&] {
            return cmd_squeeze(
                out, circuit_path, block_text, restriction_text, output_path, completion, tolerance, max_qubits);
        };
    });

    auto *nech = app.add_subcommand("nechiporuk", "Subfunction counts and the lower bound");
    nech->add_option("-f,--table", table_path, "Truth-table file")->required();
    nech->add_option("-p,--partition", partition_path, "Partition file")->required();
    nech->callback([&] { action = [&] { return cmd_nechiporuk(out, table_path, partition_path); }; });

    auto *ed = app.add_subcommand("ed", "Element Distinctness tables and subfunction counts");
    ed->add_option("--ell", ell, "Number of strings")->required()->check(CLI::Range(2, 4));
    ed->add_flag("--emit", emit, "Write ed<n>.tt and ed<n>.part");
    ed->add_option("--dir", dir, "Directory for emitted files");
    ed->callback([&] { action = [&] { return cmd_ed(out, ell, emit, dir); }; });

    auto *bounds = app.add_subcommand("bounds", "Counting bounds");
    bounds->require_subcommand(1);
    bounds->fallthrough();
    auto *warren = bounds->add_subcommand("warren", "Sign-assignment bound (4 e deg m / t)^t");
    warren->add_option("-m", m, "Number of polynomials")->required()->check(CLI::PositiveNumber);
    warren->add_option("-t", t, "Number of variables")->required()->check(CLI::PositiveNumber);
    warren->add_option("--deg", deg, "Maximum degree")->required()->check(CLI::PositiveNumber);
    warren->callback([&] { action = [&] { return cmd_warren(out, m, t, deg); }; });

    auto *appendix = bounds->add_subcommand("appendix", "Circuit-counting bound in bits");
    appendix->add_option("-n", n, "Function arity")->required();
    appendix->add_option("-N", N, "Circuit size")->required();
    appendix->add_option("-d", d, "Gate arity")->required();
    appendix->add_option("--wires", wires, "Input wire count (default d*N)");
    appendix->callback([&] { action = [&] { return cmd_appendix(out, n, N, d, wires); }; });

    auto add_enumerate_options = [&](CLI::App *sub) {
        sub->add_option("-n", n, "Function arity")->required();
        sub->add_option("-N", N, "Number of gates")->required();
        sub->add_option("--net", net_path, "Gate-net file")->required();
        sub->add_option("--qubits", qubits, "Wire count (default: max of n and the widest gate)");
        sub->callback([&] { action = [&] { return cmd_enumerate(out, n, N, net_path, qubits); }; });
    };
    add_enumerate_options(bounds->add_subcommand("enumerate", "Exhaustive function enumeration"));
    add_enumerate_options(app.add_subcommand("enumerate", "Exhaustive function enumeration"));

    auto *lemmas = app.add_subcommand("verify-lemmas", "Randomized tensor and reordering checks");
    lemmas->add_option("--seed", seed, "Random seed");
    lemmas->add_option("--cases", cases, "Cases per check")->check(CLI::PositiveNumber);
    lemmas->callback([&] { action = [&] { return cmd_verify_lemmas(out, seed, cases); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        int code = action();
        out.emit();
        return code;
    } catch (const Error &e) {
        if (out.json_mode) {
            std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
