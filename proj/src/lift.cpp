#include "dglift/lift.hpp"

#include <tuple>

#include "dglift/linsolve.hpp"

namespace dglift {

namespace {

using EntryKey = std::tuple<std::size_t, std::size_t, Monomial>;

void flatten_into(const GradedMap& f, RowIndex<EntryKey>& rows, SparseVector& out) {
  const Field& field = f.signature()->field();
  for (std::size_t m = 0; m < f.rank(); ++m)
    for (std::size_t l = 0; l < f.rank(); ++l)
      for (const auto& [mono, c] : f(m, l).terms()) {
        auto [slot, fresh] = out.try_emplace(rows({m, l, mono}), Scalar::zero(field));
        slot->second += c;
      }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw LiftError("internal consistency failure: " + what);
}

bool free_of(const AlgElem& b, std::size_t slot) { return derivative(b, slot).is_zero(); }

LiftResult finish(const JOperator& j, bool odd, const Differential& target, const GradedMap& u,
                  std::vector<Check> checks) {
  GradedMap u_inv = GradedMap::zero(u.module(), 0);
  try {
    u_inv = invert_unit(u);
  } catch (const ModuleError& e) {
    throw LiftError(std::string("internal consistency failure: ") + e.what());
  }
  Differential M = conjugate(u_inv, target, u);
  LiftVerdict v = verify_lift(j, target, u, M);
  checks.insert(checks.end(), v.checks.begin(), v.checks.end());
  require(v.pass, "lift did not verify" + (v.column ? " at column " + *v.column : ""));
  return LiftResult{odd, target.module(), target, u, M, std::move(checks)};
}

}  // namespace

Obstruction obstruction(const JOperator& j, const Differential& d) {
  const auto& sig = j.signature();
  if (sig->degenerate()) throw LiftError("signature is degenerate (every differential is zero)");
  if (!j.is_top()) throw LiftError("variable '" + j.variable() + "' is not the top variable");
  if (!d.square_zero()) throw LiftError("the module differential does not square to zero");
  Obstruction o{j_apply_diff(j, d), false};
  o.cycle_verified = bracket_diff(d, o.h).is_zero();
  require(o.cycle_verified, "[j(d), d] != 0");
  return o;
}

bool verify_certificate(const JOperator& j, const Differential& d, const GradedMap& gamma) {
  if (!gamma.module()->same_as(*d.module())) return false;
  if (!gamma.is_zero() && gamma.degree() != j.degree()) return false;
  GradedMap g = gamma.is_zero() ? GradedMap::zero(d.module(), j.degree()) : gamma;
  return bracket_diff(d, g) == j_apply_diff(j, d);
}

HomotopySearch solve_homotopy(const JOperator& j, const Differential& d, const GradedMap& h,
                              int D) {
  const auto& mod = d.module();
  const auto& sig = mod->signature();
  const int x = j.variable_degree();
  HomotopySearch result;
  result.bound = D;

  struct Unknown {
    std::size_t row, col;
    Monomial mono;
  };
  std::vector<Unknown> unknowns;
  for (std::size_t m = 0; m < mod->rank(); ++m)
    for (std::size_t l = 0; l < mod->rank(); ++l) {
      const int deg = mod->degree(l) - x - mod->degree(m);
      if (deg < 0) continue;
      for (auto& mono : component_monomials(*sig, deg, D)) unknowns.push_back({m, l, mono});
    }
  result.unknowns = unknowns.size();

  RowIndex<EntryKey> rows;
  std::vector<SparseVector> columns;
  const Scalar one = Scalar::one(sig->field());
  for (const auto& u : unknowns) {
    GradedMap unit = GradedMap::zero(mod, -x);
    unit.set(u.row, u.col, AlgElem::monomial(sig, u.mono, one));
    SparseVector col;
    flatten_into(bracket_diff(d, unit), rows, col);
    columns.push_back(std::move(col));
  }
  SparseVector rhs;
  flatten_into(h, rows, rhs);

  auto sol = solve_columns(sig->field(), columns, rhs);
  if (!sol) return result;
  GradedMap gamma = GradedMap::zero(mod, -x);
  for (std::size_t i = 0; i < unknowns.size(); ++i)
    if (!(*sol)[i].is_zero())
      gamma.add_to(unknowns[i].row, unknowns[i].col,
                   AlgElem::monomial(sig, unknowns[i].mono, (*sol)[i]));
  require(bracket_diff(d, gamma) == h, "homotopy solution does not verify");
  result.found = true;
  result.gamma = std::move(gamma);
  return result;
}

NaiveDecision decide_naive_lift(const JOperator& j, const Differential& d, int D) {
  NaiveDecision r{false, D, obstruction(j, d), std::nullopt};
  HomotopySearch s = solve_homotopy(j, d, r.obstruction.h, D);
  r.vanishes = s.found;
  r.gamma = s.gamma;
  return r;
}

LiftVerdict verify_lift(const JOperator& j, const Differential& target, const GradedMap& u,
                        const Differential& M) {
  LiftVerdict v;
  const auto& mod = target.module();
  const auto& mm = M.matrix();

  std::optional<std::string> x_column;
  for (std::size_t l = 0; l < mod->rank() && !x_column; ++l)
    for (std::size_t m = 0; m < mod->rank(); ++m)
      if (!free_of(mm(m, l), j.slot())) {
        x_column = mod->name(l);
        break;
      }
  v.checks.push_back({"lift_free_of_" + j.variable(), !x_column,
                      x_column ? "column " + *x_column : ""});

  v.checks.push_back({"lift_square_zero", M.square_zero(), ""});

  std::optional<std::string> bad_column;
  try {
    GradedMap u_inv = invert_unit(u);
    Differential back = conjugate(u, M, u_inv);
    for (std::size_t l = 0; l < mod->rank() && !bad_column; ++l)
      for (std::size_t m = 0; m < mod->rank(); ++m)
        if (back.matrix()(m, l) != target.matrix()(m, l)) {
          bad_column = mod->name(l);
          break;
        }
    v.checks.push_back({"conjugation_identity", !bad_column,
                        bad_column ? "column " + *bad_column : ""});
  } catch (const ModuleError& e) {
    v.checks.push_back({"conjugation_identity", false, e.what()});
    bad_column = "(u not invertible)";
  }

  v.pass = true;
  for (const auto& c : v.checks) v.pass = v.pass && c.passed;
  v.column = x_column ? x_column : bad_column;
  return v;
}

LiftResult construct_lift_even(const JOperator& j, const Differential& d, const GradedMap& gamma) {
  if (j.variable_is_odd()) throw LiftError("construct_lift_even needs an even variable");
  if (!verify_certificate(j, d, gamma)) throw LiftError("homotopy certificate does not verify");
  const auto& mod = d.module();
  const auto& sig = mod->signature();
  GradedMap g = gamma.is_zero() ? GradedMap::zero(mod, j.degree()) : gamma;
  WeakJOp delta{j, +1, g};
  std::vector<Check> checks;
  checks.push_back({"delta_of_d_vanishes", weakjop_apply(delta, d).is_zero(), ""});
  require(checks.back().passed, "Delta(d) != 0");

  const int x = j.variable_degree();
  const int max_steps = mod->degree_spread() / x + 2;
  GradedMap u = GradedMap::zero(mod, 0);
  bool all_flat = true;
  for (std::size_t l = 0; l < mod->rank(); ++l) {
    GradedMap eps = idempotent(mod, l);
    GradedMap plus = GradedMap::zero(mod, 0);
    GradedMap cur = eps;
    for (int n = 1;; ++n) {
      cur = weakjop_apply(delta, cur);
      if (cur.is_zero()) break;
      require(n <= max_steps, "f+ series did not terminate");
      GradedMap term = left_mult(mod, AlgElem::power(sig, j.slot(), n)) * cur;
      plus = parity(n + 1) ? plus - term : plus + term;
    }
    GradedMap e0 = eps - plus;
    all_flat = all_flat && weakjop_apply(delta, e0).is_zero();
    for (std::size_t m = 0; m < mod->rank(); ++m) u.set(m, l, e0(m, l));
  }
  checks.push_back({"corrected_idempotents_flat", all_flat, ""});
  require(all_flat, "Delta of a corrected idempotent is nonzero");
  return finish(j, false, d, u, std::move(checks));
}

OddLiftData odd_lift_data(const JOperator& j, const Differential& d, const GradedMap& gamma) {
  if (!j.variable_is_odd()) throw LiftError("the two-fold construction needs an odd variable");
  if (!verify_certificate(j, d, gamma)) throw LiftError("homotopy certificate does not verify");
  const auto& mod = d.module();
  const int x = j.variable_degree();
  GradedMap g = gamma.is_zero() ? GradedMap::zero(mod, -x) : gamma;

  WeakJOp delta{j, -1, g};
  GradedMap alpha = g * g - j_apply_matrix(j, g);
  require(bracket_diff(d, alpha).is_zero(), "[d, alpha] != 0");
  require(weakjop_apply(delta, alpha).is_zero(), "Delta(alpha) != 0");

  TwofoldExtension ext = twofold_extension(mod, d, -x);
  GradedMap beta = embed_block(alpha, ext, -x, 0, 1) -
                   embed_block(GradedMap::identity(mod), ext, -x, 1, 0);
  JOperator jsharp = j.on(ext.module);
  WeakJOp big{jsharp, +1, beta - sharp(g, ext)};
  return OddLiftData{std::move(ext), std::move(alpha), std::move(beta), std::move(big)};
}

LiftResult construct_lift_odd(const JOperator& j, const Differential& d, const GradedMap& gamma) {
  OddLiftData data = odd_lift_data(j, d, gamma);
  const auto& mod = data.ext.module;
  const auto& sig = mod->signature();
  const WeakJOp& G = data.gamma_op;
  std::vector<Check> checks;

  GradedMap lx = left_mult(mod, AlgElem::power(sig, G.j.slot(), 1));
  checks.push_back({"Gamma(X) = 1", weakjop_apply(G, lx) == GradedMap::identity(mod), ""});
  checks.push_back(
      {"Gamma(d#) = 0", weakjop_apply(G, data.ext.differential).is_zero(), ""});

  bool square = true;
  std::string where;
  auto probe = [&](const GradedMap& f, const std::string& name) {
    if (!square) return;
    if (!weakjop_apply(G, weakjop_apply(G, f)).is_zero()) {
      square = false;
      where = name;
    }
  };
  for (std::size_t s = 0; s < sig->num_slots(); ++s)
    probe(left_mult(mod, AlgElem::power(sig, s, 1)), "l_" + sig->slot_name(s));
  for (std::size_t l = 0; l < mod->rank(); ++l)
    for (std::size_t m = 0; m < mod->rank(); ++m)
      probe(unit_elementary(mod, l, m), "eps(" + mod->name(l) + "," + mod->name(m) + ")");
  checks.push_back({"Gamma^2 = 0", square, where});
  for (const auto& c : checks) require(c.passed, c.name + (c.detail.empty() ? "" : " at " + c.detail));

  GradedMap u = GradedMap::zero(mod, 0);
  bool all_flat = true;
  for (std::size_t l = 0; l < mod->rank(); ++l) {
    GradedMap e0 = weakjop_apply(G, lx * idempotent(mod, l));
    all_flat = all_flat && weakjop_apply(G, e0).is_zero();
    for (std::size_t m = 0; m < mod->rank(); ++m) u.set(m, l, e0(m, l));
  }
  checks.push_back({"corrected_idempotents_flat", all_flat, ""});
  require(all_flat, "Gamma of a corrected idempotent is nonzero");
  return finish(G.j, true, data.ext.differential, u, std::move(checks));
}

LiftResult construct_lift(const JOperator& j, const Differential& d, const GradedMap& gamma) {
  return j.variable_is_odd() ? construct_lift_odd(j, d, gamma) : construct_lift_even(j, d, gamma);
}

}  // namespace dglift
