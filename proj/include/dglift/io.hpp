// JSON documents for signatures, modules, maps and transcripts.
//
// Signature: {"field": {"type": "Q"} | {"type": "Fp", "p": 5},
//             "polygens": ["a", ...],
//             "variables": [{"name": "X", "degree": 1, "d": "a"}, ...]}
// Module:    {"basis": [{"name": "e0", "degree": 0}, ...],
//             "differential": {col: {row: expr}}}
// Maps are written like the module differential: column -> row -> entry.
#ifndef DGLIFT_IO_HPP
#define DGLIFT_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "dglift/module.hpp"

namespace dglift::io {

using nlohmann::json;

/// Malformed or inconsistent input. `where` is a JSON-pointer-like location.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

json read_file(const std::string& path);

Field field_from_json(const json& j, const std::string& where);
json field_to_json(const Field& f);
/// "q" or "fp:<p>".
Field parse_field_flag(const std::string& text);

/// Builds and validates the signature. `field` overrides the document's.
SignaturePtr signature_from_json(const json& j, std::optional<Field> field = std::nullopt,
                                 const std::string& where = "signature");
json signature_to_json(const SignaturePtr& sig);

struct ModuleDocument {
  ModulePtr module;
  Differential differential;
};

ModulePtr basis_from_json(const json& j, const SignaturePtr& sig, const std::string& where);
json basis_to_json(const FreeModule& module);

ModuleDocument module_from_json(const json& j, const SignaturePtr& sig,
                                const std::string& where = "module");
json module_to_json(const FreeModule& module, const Differential& d);

GradedMap map_from_json(const json& j, const ModulePtr& module, int degree,
                        const std::string& where);
/// Only nonzero entries are written.
json map_to_json(const GradedMap& f);

AlgElem expr_from_json(const json& j, const SignaturePtr& sig, const std::string& where);

/// 64-bit FNV-1a of the compact dump, as "fnv1a64:<16 hex digits>".
std::string digest(const json& j);

}  // namespace dglift::io

#endif  // DGLIFT_IO_HPP
