#include "dglift/cli.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "dglift/expr.hpp"
#include "dglift/lift.hpp"
#include "dglift/naive.hpp"
#include "dglift/selftest.hpp"

namespace dglift::cli {

using io::InputError;
using io::json;

namespace {

// ------------------------------------------------------------ helpers

struct Problem {
  const json& inputs;
  const json& params;
  SignaturePtr sig;
  std::optional<io::ModuleDocument> module;

  explicit Problem(const json& in) : inputs(in), params(param_block(in)) {
    if (!in.contains("signature")) throw InputError("inputs", "no signature given (--sig or --problem)");
    std::optional<Field> field;
    if (params.contains("field")) field = io::parse_field_flag(params["field"].get<std::string>());
    sig = io::signature_from_json(in["signature"], field);
    if (in.contains("module")) module = io::module_from_json(in["module"], sig);
  }

  static const json& param_block(const json& in) {
    static const json empty = json::object();
    auto it = in.find("params");
    return it == in.end() ? empty : *it;
  }

  const io::ModuleDocument& require_module() const {
    if (!module) throw InputError("inputs", "this command needs a module (--mod)");
    return *module;
  }

  std::string require_string(const char* key) const {
    if (!params.contains(key)) throw InputError(std::string("params/") + key, "missing (--" + std::string(key) + ")");
    return params[key].get<std::string>();
  }

  int require_int(const char* key) const {
    if (!params.contains(key)) throw InputError(std::string("params/") + key, "missing (--" + std::string(key) + ")");
    return params[key].get<int>();
  }

  AlgElem expr() const {
    return io::expr_from_json(json(require_string("expr")), sig, "params/expr");
  }

  /// --var, defaulting to the top variable.
  JOperator j() const {
    const auto& mod = require_module().module;
    if (sig->num_variables() == 0) throw InputError("signature", "no adjoined variables");
    std::string var = params.contains("var") ? params["var"].get<std::string>()
                                             : sig->slot_name(sig->top_slot());
    try {
      return JOperator(mod, var);
    } catch (const std::exception& e) {
      throw InputError("params/var", e.what());
    }
  }
};

struct Report {
  json checks = json::array();
  json result = json::object();
  bool inconclusive = false;

  void check(const std::string& name, bool passed, const std::string& detail = "") {
    json c = {{"name", name}, {"passed", passed}};
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(std::move(c));
  }
  void add(const std::vector<Check>& cs, const std::string& prefix = "") {
    for (const auto& c : cs) check(prefix + c.name, c.passed, c.detail);
  }

  json finish() const {
    bool ok = true;
    for (const auto& c : checks) ok = ok && c["passed"].get<bool>();
    std::string verdict = !ok ? "fail" : inconclusive ? "inconclusive" : "pass";
    return {{"verdict", verdict}, {"checks", checks}, {"result", result}};
  }
};

std::string degree_text(const AlgElem& a) {
  Degree d = degree(a);
  switch (d.kind) {
    case Degree::Kind::Homogeneous: return std::to_string(d.value);
    case Degree::Kind::Inhomogeneous: return "inhomogeneous";
    default: return "undefined (zero)";
  }
}

json tensor_to_json(const TensorElement& t) {
  json out = json::array();
  for (const auto& [key, c] : t.terms())
    out.push_back({{"basis", t.module()->name(key.first)}, {"power", key.second},
                   {"coefficient", format_expr(c)}});
  return out;
}

json lift_to_json(const LiftResult& lift) {
  return {{"odd", lift.odd},
          {"basis", io::basis_to_json(*lift.module)},
          {"target", io::map_to_json(lift.target.matrix())},
          {"u", io::map_to_json(lift.u)},
          {"M", io::map_to_json(lift.M.matrix())}};
}

Differential lift_target(const JOperator& j, const Differential& d) {
  if (!j.variable_is_odd()) return d;
  return twofold_extension(d.module(), d, -j.variable_degree()).differential;
}

// ------------------------------------------------------------ commands

json cmd_validate(const Problem& p) {
  Report r;
  try {
    validate_signature(p.sig);
    r.check("signature_valid", true);
  } catch (const std::exception& e) {
    r.check("signature_valid", false, e.what());
  }
  r.result["signature"] = io::signature_to_json(p.sig);
  r.result["degenerate"] = p.sig->degenerate();
  if (p.module) {
    const auto& m = *p.module;
    r.check("module_homogeneous", true);
    const bool sz = m.differential.square_zero();
    r.check("square_zero", sz, sz ? "" : "d^2 = " + io::map_to_json(m.differential.square()).dump());
    r.result["module"] = io::module_to_json(*m.module, m.differential);
  }
  return r.finish();
}

json cmd_eval(const Problem& p) {
  Report r;
  AlgElem a = p.expr();
  r.result = {{"expr", format_expr(a)},
              {"degree", degree_text(a)},
              {"homogeneous", is_homogeneous(a)},
              {"polynomial", is_polynomial(a)}};
  if (is_homogeneous(a)) r.result["cycle"] = is_cycle(a);
  return r.finish();
}

json cmd_diff(const Problem& p) {
  Report r;
  AlgElem a = p.expr();
  if (!is_homogeneous(a)) throw InputError("params/expr", "inhomogeneous element");
  AlgElem da = diff(a);
  r.result = {{"expr", format_expr(a)}, {"d", format_expr(da)}, {"cycle", da.is_zero()}};
  r.check("d_squared_zero", diff(da).is_zero());
  return r.finish();
}

json cmd_derive(const Problem& p) {
  Report r;
  if (!p.params.contains("var")) throw InputError("params/var", "missing (--var)");
  const std::string var = p.params["var"].get<std::string>();
  AlgElem a(p.sig);
  if (p.params.contains("expr")) {
    a = p.expr();
  } else if (p.params.contains("name")) {
    const std::string name = p.params["name"].get<std::string>();
    try {
      a = diff(AlgElem::generator(p.sig, name));
    } catch (const std::exception& e) {
      throw InputError("params/name", e.what());
    }
  } else {
    throw InputError("params/expr", "missing (--expr, or --name for d(name))");
  }
  if (!is_homogeneous(a)) throw InputError("params/expr", "inhomogeneous element");
  std::size_t slot;
  try {
    slot = p.sig->variable_slot(var);
  } catch (const std::exception& e) {
    throw InputError("params/var", e.what());
  }
  AlgElem da = derivative(a, slot);
  r.result = {{"expr", format_expr(a)}, {"var", var}, {"derivative", format_expr(da)},
              {"top_variable", slot == p.sig->top_slot()}};
  if (p.params.contains("bound")) {
    const int D = p.params["bound"].get<int>();
    BoundarySearch s = is_boundary_up_to(da, D);
    json b = {{"bound", D}, {"found", s.found}};
    if (s.witness) {
      b["witness"] = format_expr(*s.witness);
      r.check("boundary_witness", diff(*s.witness) == da);
    }
    r.result["boundary"] = b;
  }
  return r.finish();
}

json cmd_jop(const Problem& p) {
  Report r;
  const auto& m = p.require_module();
  JOperator j = p.j();
  GradedMap jd = j_apply_diff(j, m.differential);
  r.result = {{"var", j.variable()}, {"top_variable", j.is_top()}, {"j_d", io::map_to_json(jd)}};
  const auto& sig = p.sig;
  for (std::size_t s = 0; s < sig->num_slots(); ++s) {
    GradedMap l = left_mult(m.module, AlgElem::generator(sig, sig->slot_name(s)),
                            sig->slot_degree(s));
    GradedMap jl = j_apply_matrix(j, l);
    if (s == j.slot())
      r.check("j(l_" + sig->slot_name(s) + ") = 1", jl == GradedMap::identity(m.module));
    else
      r.check("j(l_" + sig->slot_name(s) + ") = 0", jl.is_zero());
  }
  r.check("j(d_free) = 0", j_apply_diff(j, Differential::free(m.module)).is_zero());
  if (m.differential.square_zero()) r.check("[j(d), d] = 0", bracket_diff(m.differential, jd).is_zero());
  return r.finish();
}

void run_obstruction(const Problem& p, Report& r, std::optional<GradedMap>& gamma) {
  const auto& m = p.require_module();
  JOperator j = p.j();
  const int D = p.require_int("bound");
  if (D < 0) throw InputError("params/bound", "must be non-negative");
  std::optional<NaiveDecision> decided;
  try {
    decided = decide_naive_lift(j, m.differential, D);
  } catch (const LiftError& e) {
    throw InputError("module", e.what());
  }
  const NaiveDecision& dec = *decided;
  r.check("obstruction_is_cycle", dec.obstruction.cycle_verified);
  r.result["var"] = j.variable();
  r.result["bound"] = D;
  r.result["obstruction"] = io::map_to_json(dec.obstruction.h);
  r.result["vanishes"] = dec.vanishes;
  if (dec.vanishes) {
    r.result["gamma"] = io::map_to_json(*dec.gamma);
    r.check("certificate", verify_certificate(j, m.differential, *dec.gamma));
    gamma = dec.gamma;
  } else {
    r.inconclusive = true;
    r.result["status"] = "not-found-up-to(" + std::to_string(D) + ")";
  }
}

json cmd_obstruct(const Problem& p) {
  Report r;
  std::optional<GradedMap> gamma;
  run_obstruction(p, r, gamma);
  return r.finish();
}

json cmd_lift(const Problem& p, bool naive) {
  Report r;
  std::optional<GradedMap> gamma;
  run_obstruction(p, r, gamma);
  if (!gamma) return r.finish();
  const auto& m = p.require_module();
  JOperator j = p.j();
  LiftResult lift = construct_lift(j, m.differential, *gamma);
  r.add(lift.checks, "construct:");
  LiftVerdict v = verify_lift(j.on(lift.module), lift.target, lift.u, lift.M);
  r.add(v.checks, "verify:");
  r.result["lift"] = lift_to_json(lift);
  if (naive) {
    SplittingVerdict sv = verify_splitting(j, lift);
    r.add(sv.checks, "splitting:");
    Splitting rho(j.on(lift.module), lift);
    json images = json::object();
    for (std::size_t l = 0; l < lift.module->rank(); ++l)
      images[lift.module->name(l)] = tensor_to_json(rho(ModuleElement::basis_element(lift.module, l)));
    r.result["splitting"] = images;
    if (j.variable_is_odd()) {
      OddSequence ses = odd_ses(j, m.differential);
      r.add(ses.checks, "ses:");
      r.result["kernel"] = io::module_to_json(*ses.kernel_module, ses.kernel_diff);
    }
  }
  return r.finish();
}

json cmd_tate(const Problem& p) {
  Report r;
  const std::string name = p.require_string("name");
  const int degree = p.require_int("degree");
  AlgElem t = p.expr();
  SignaturePtr out;
  try {
    out = tate_adjoin(p.sig, name, degree, t);
  } catch (const AlgebraError& e) {
    throw InputError("params", e.what());
  }
  validate_signature(out);
  r.check("signature_valid", true);
  r.result["signature"] = io::signature_to_json(out);
  return r.finish();
}

json cmd_selftest(const json& params) {
  Report r;
  const std::uint64_t seed = params.value("seed", std::uint64_t{1});
  const std::size_t iters = params.value("iters", std::size_t{100});
  std::vector<Field> fields = {Field::rationals(), Field::prime(5)};
  if (params.contains("field")) fields = {io::parse_field_flag(params["field"].get<std::string>())};
  json props = json::array();
  for (const Field& f : fields)
    for (const auto& info : property_catalog()) {
      PropertyResult pr = run_property(info.name, f, seed, iters);
      json e = {{"name", info.name},         {"statement", info.statement},
                {"field", pr.field},         {"instances", pr.instances},
                {"failures", pr.failures},   {"identity", info.identity},
                {"informational", info.informational}};
      if (!pr.first_failure.empty()) e["first_failure"] = pr.first_failure;
      props.push_back(e);
      if (!info.informational) r.check(info.name + " [" + pr.field + "]", pr.passed(), pr.first_failure);
    }
  r.result["seed"] = seed;
  r.result["iterations"] = iters;
  r.result["properties"] = props;
  return r.finish();
}

json revalidate(const json& transcript);

}  // namespace

json execute(const std::string& command, const json& inputs) {
  if (command == "selftest") return cmd_selftest(Problem::param_block(inputs));
  if (command == "validate" && inputs.contains("transcript")) return revalidate(inputs["transcript"]);
  Problem p(inputs);
  if (command == "validate") return cmd_validate(p);
  if (command == "eval") return cmd_eval(p);
  if (command == "diff") return cmd_diff(p);
  if (command == "derive") return cmd_derive(p);
  if (command == "jop") return cmd_jop(p);
  if (command == "obstruct") return cmd_obstruct(p);
  if (command == "lift") return cmd_lift(p, false);
  if (command == "naive") return cmd_lift(p, true);
  if (command == "tate") return cmd_tate(p);
  throw InputError("command", "unknown command '" + command + "'");
}

namespace {

// Re-checks a transcript: the digest, every certificate it carries, and that
// running the command again reproduces the verdict and result.
json revalidate(const json& t) {
  Report r;
  for (const char* key : {"command", "inputs", "digest", "verdict", "result"})
    if (!t.contains(key)) throw InputError(std::string("transcript/") + key, "missing");
  const std::string command = t["command"].get<std::string>();
  if (command == "validate" && t["inputs"].contains("transcript"))
    throw InputError("transcript/command", "nested transcripts are not revalidated");
  const json& inputs = t["inputs"];
  r.check("digest", io::digest(inputs) == t["digest"].get<std::string>());
  r.result["command"] = command;

  const json& res = t["result"];
  if (command != "selftest") {
    Problem p(inputs);
    if (res.contains("gamma")) {
      JOperator j = p.j();
      const auto& m = p.require_module();
      GradedMap gamma = io::map_from_json(res["gamma"], m.module, j.degree(), "result/gamma");
      r.check("certificate", verify_certificate(j, m.differential, gamma));
    }
    if (res.contains("lift")) {
      JOperator j = p.j();
      const auto& m = p.require_module();
      const json& l = res["lift"];
      Differential target = lift_target(j, m.differential);
      ModulePtr mod = io::basis_from_json(l["basis"], p.sig, "result/lift/basis");
      r.check("lift_module", mod->same_as(*target.module()));
      if (mod->same_as(*target.module())) {
        mod = target.module();
        GradedMap u = io::map_from_json(l["u"], mod, 0, "result/lift/u");
        Differential M(io::map_from_json(l["M"], mod, -1, "result/lift/M"));
        Differential stored(io::map_from_json(l["target"], mod, -1, "result/lift/target"));
        r.check("lift_target", stored == target);
        LiftVerdict v = verify_lift(j.on(mod), target, u, M);
        r.add(v.checks, "verify:");
        if (command == "naive") {
          LiftResult lift{j.variable_is_odd(), mod, target, u, M, {}};
          r.add(verify_splitting(j, lift).checks, "splitting:");
        }
      }
    }
  }
  json again = execute(command, inputs);
  r.check("verdict_reproduced", again["verdict"] == t["verdict"]);
  r.check("result_reproduced", again["result"] == res);
  return r.finish();
}

// ------------------------------------------------------------ argv

struct Flags {
  std::string sig, mod, problem, transcript, var, field, expr, name;
  std::optional<int> bound, degree;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> iters;
};

json build_inputs(const std::string& command, const Flags& f) {
  json inputs = json::object();
  if (!f.problem.empty()) inputs = io::read_file(f.problem);
  if (!inputs.is_object()) throw InputError(f.problem, "expected an object");
  if (command == "validate" && !f.transcript.empty()) {
    inputs = json::object();
    inputs["transcript"] = io::read_file(f.transcript);
    return inputs;
  }
  if (!f.sig.empty()) inputs["signature"] = io::read_file(f.sig);
  if (!f.mod.empty()) inputs["module"] = io::read_file(f.mod);
  json& params = inputs["params"];
  if (params.is_null()) params = json::object();
  if (!f.var.empty()) params["var"] = f.var;
  if (!f.field.empty()) {
    io::parse_field_flag(f.field);
    params["field"] = f.field;
  }
  if (!f.expr.empty()) params["expr"] = f.expr;
  if (!f.name.empty()) params["name"] = f.name;
  if (f.bound) params["bound"] = *f.bound;
  if (f.degree) params["degree"] = *f.degree;
  if (f.seed) params["seed"] = *f.seed;
  if (f.iters) params["iters"] = *f.iters;
  return inputs;
}

}  // namespace

int exit_code_for(const std::string& verdict) {
  if (verdict == "pass") return kPass;
  if (verdict == "inconclusive") return kInconclusive;
  return kFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lifting DG modules along simple extensions of DG algebras", "dglift"};
  app.require_subcommand(1);
  Flags f;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "check a signature/module or re-verify a transcript"},
      {"eval", "parse and describe an element (--expr)"},
      {"diff", "differential of an element (--expr)"},
      {"derive", "partial derivative by an adjoined variable (--var, --expr or --name)"},
      {"jop", "j-operator of the module differential and its anchors"},
      {"obstruct", "obstruction class and homotopy certificate search (--bound)"},
      {"lift", "construct and verify a (weak) lift (--bound)"},
      {"naive", "lift and verify the splitting of the natural map (--bound)"},
      {"tate", "adjoin a variable killing a cycle (--name, --degree, --expr)"},
      {"selftest", "seeded property suites (--seed, --iters, --field)"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--sig", f.sig, "signature file");
    sub->add_option("--mod", f.mod, "module file");
    sub->add_option("--problem", f.problem, "problem file (signature, module, params)");
    sub->add_option("--var", f.var, "adjoined variable (default: the top one)");
    sub->add_option("--bound", f.bound, "polygen degree bound D");
    sub->add_option("--seed", f.seed, "random seed");
    sub->add_option("--iters", f.iters, "instances per property");
    sub->add_option("--field", f.field, "q or fp:<p>");
    sub->add_option("--expr", f.expr, "element in expression syntax");
    sub->add_option("--name", f.name, "variable name");
    sub->add_option("--degree", f.degree, "variable degree");
    if (name == "validate") sub->add_option("--transcript", f.transcript, "transcript to re-verify");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const auto start = std::chrono::steady_clock::now();
    json inputs = build_inputs(command, f);
    json outcome = execute(command, inputs);
    json transcript = {{"command", command},
                       {"inputs", inputs},
                       {"digest", io::digest(inputs)},
                       {"verdict", outcome["verdict"]},
                       {"checks", outcome["checks"]},
                       {"result", outcome["result"]}};
    if (command != "selftest") {
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
      transcript["timing_ms"] = ms.count();
    }
    out << transcript.dump(2) << "\n";
    return exit_code_for(outcome["verdict"].get<std::string>());
  } catch (const std::exception& e) {
    err << "input error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace dglift::cli
