#include "dglift/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>

#include "dglift/expr.hpp"

namespace dglift::io {

namespace {

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string string_at(const json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where, "expected a string");
  return j.get<std::string>();
}

int int_at(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where, "expected an integer");
  return j.get<int>();
}

}  // namespace

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path, e.what());
  }
}

Field field_from_json(const json& j, const std::string& where) {
  const std::string type = string_at(member(j, "type", where), where + "/type");
  if (type == "Q") return Field::rationals();
  if (type == "Fp") {
    const json& p = member(j, "p", where);
    if (!p.is_number_unsigned()) throw InputError(where + "/p", "expected a positive integer");
    try {
      return Field::prime(p.get<std::uint64_t>());
    } catch (const std::invalid_argument& e) {
      throw InputError(where + "/p", e.what());
    }
  }
  throw InputError(where + "/type", "unknown field type '" + type + "'");
}

json field_to_json(const Field& f) {
  if (f.is_rational()) return {{"type", "Q"}};
  return {{"type", "Fp"}, {"p", f.p}};
}

Field parse_field_flag(const std::string& text) {
  if (text == "q" || text == "Q") return Field::rationals();
  if (text.rfind("fp:", 0) == 0) {
    try {
      std::size_t used = 0;
      const unsigned long long p = std::stoull(text.substr(3), &used);
      if (used == text.size() - 3) return Field::prime(p);
    } catch (const std::exception&) {
    }
  }
  throw InputError("--field", "expected q or fp:<prime>, got '" + text + "'");
}

SignaturePtr signature_from_json(const json& j, std::optional<Field> field,
                                 const std::string& where) {
  if (!j.is_object()) throw InputError(where, "expected an object");
  Field f = Field::rationals();
  if (j.contains("field")) f = field_from_json(j["field"], where + "/field");
  if (field) f = *field;

  std::vector<std::string> polygens;
  if (j.contains("polygens")) {
    const json& p = j["polygens"];
    if (!p.is_array()) throw InputError(where + "/polygens", "expected a list");
    for (std::size_t i = 0; i < p.size(); ++i)
      polygens.push_back(string_at(p[i], where + "/polygens/" + std::to_string(i)));
  }
  SignaturePtr sig;
  try {
    sig = make_polynomial_signature(f, polygens);
  } catch (const std::exception& e) {
    throw InputError(where + "/polygens", e.what());
  }
  if (j.contains("variables")) {
    const json& vars = j["variables"];
    if (!vars.is_array()) throw InputError(where + "/variables", "expected a list");
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const std::string at = where + "/variables/" + std::to_string(i);
      const std::string name = string_at(member(vars[i], "name", at), at + "/name");
      const int degree = int_at(member(vars[i], "degree", at), at + "/degree");
      const AlgElem t = expr_from_json(member(vars[i], "d", at), sig, at + "/d");
      try {
        sig = tate_adjoin(sig, name, degree, t);
      } catch (const AlgebraError& e) {
        throw InputError(at, e.what());
      }
    }
  }
  return sig;
}

json signature_to_json(const SignaturePtr& sig) {
  json vars = json::array();
  // Differentials are printed over the full signature; the text only uses
  // earlier generators, so it parses at the point of adjunction.
  for (const auto& v : sig->variables())
    vars.push_back({{"name", v.name}, {"degree", v.degree},
                    {"d", format_expr(AlgElem(sig, v.differential))}});
  return {{"field", field_to_json(sig->field())}, {"polygens", sig->polygens()}, {"variables", vars}};
}

ModulePtr basis_from_json(const json& j, const SignaturePtr& sig, const std::string& where) {
  if (!j.is_array()) throw InputError(where, "expected a list");
  std::vector<BasisEntry> basis;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    std::string name = string_at(member(j[i], "name", at), at + "/name");
    if (!seen.insert(name).second) throw InputError(at + "/name", "duplicate basis name '" + name + "'");
    basis.push_back({name, int_at(member(j[i], "degree", at), at + "/degree")});
  }
  try {
    return make_module(sig, std::move(basis));
  } catch (const std::exception& e) {
    throw InputError(where, e.what());
  }
}

json basis_to_json(const FreeModule& module) {
  json b = json::array();
  for (const auto& e : module.basis()) b.push_back({{"name", e.name}, {"degree", e.degree}});
  return b;
}

ModuleDocument module_from_json(const json& j, const SignaturePtr& sig, const std::string& where) {
  ModulePtr mod = basis_from_json(member(j, "basis", where), sig, where + "/basis");
  GradedMap m = GradedMap::zero(mod, -1);
  if (j.contains("differential")) m = map_from_json(j["differential"], mod, -1, where + "/differential");
  try {
    return ModuleDocument{mod, Differential(std::move(m))};
  } catch (const std::exception& e) {
    throw InputError(where + "/differential", e.what());
  }
}

json module_to_json(const FreeModule& module, const Differential& d) {
  return {{"basis", basis_to_json(module)}, {"differential", map_to_json(d.matrix())}};
}

AlgElem expr_from_json(const json& j, const SignaturePtr& sig, const std::string& where) {
  const std::string text = string_at(j, where);
  try {
    return parse_expr(text, sig);
  } catch (const std::exception& e) {
    throw InputError(where, e.what());
  }
}

GradedMap map_from_json(const json& j, const ModulePtr& module, int degree,
                        const std::string& where) {
  if (!j.is_object()) throw InputError(where, "expected an object");
  GradedMap f = GradedMap::zero(module, degree);
  for (const auto& [col, rows] : j.items()) {
    const std::string at = where + "/" + col;
    std::size_t c;
    try {
      c = module->index_of(col);
    } catch (const std::exception&) {
      throw InputError(at, "unknown basis element '" + col + "'");
    }
    if (!rows.is_object()) throw InputError(at, "expected an object");
    for (const auto& [row, text] : rows.items()) {
      std::size_t r;
      try {
        r = module->index_of(row);
      } catch (const std::exception&) {
        throw InputError(at + "/" + row, "unknown basis element '" + row + "'");
      }
      try {
        f.add_to(r, c, expr_from_json(text, module->signature(), at + "/" + row));
      } catch (const InputError&) {
        throw;
      } catch (const std::exception& e) {
        throw InputError(at + "/" + row, e.what());
      }
    }
  }
  return f;
}

json map_to_json(const GradedMap& f) {
  json out = json::object();
  for (std::size_t c = 0; c < f.rank(); ++c)
    for (std::size_t r = 0; r < f.rank(); ++r)
      if (!f(r, c).is_zero()) out[f.module()->name(c)][f.module()->name(r)] = format_expr(f(r, c));
  return out;
}

std::string digest(const json& j) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : j.dump()) h = (h ^ ch) * 1099511628211ULL;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace dglift::io
