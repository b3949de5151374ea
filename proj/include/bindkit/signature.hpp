#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bindkit {

/// One operator of a binding signature. `arity[i]` is the number of names
/// bound in argument position i; `arity.size()` is the number of arguments.
struct OperatorDecl {
  std::string name;
  std::vector<std::size_t> arity;

  friend bool operator==(const OperatorDecl&, const OperatorDecl&) = default;
};

/// A Plotkin binding signature: a named, ordered list of operator
/// declarations with unique names.
class Signature {
 public:
  Signature(std::string name, std::vector<OperatorDecl> operators);

  const std::string& name() const { return name_; }
  const std::vector<OperatorDecl>& operators() const { return operators_; }

  /// Position of the operator in `operators()`, or nullopt when unknown.
  std::optional<std::size_t> find(std::string_view op) const;

  const OperatorDecl* lookup(std::string_view op) const;

  /// Like lookup but throws ArityError naming the operator.
  const OperatorDecl& require(std::string_view op) const;

  const OperatorDecl& at(std::size_t id) const { return operators_.at(id); }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.name_ == b.name_ && a.operators_ == b.operators_;
  }

 private:
  std::string name_;
  std::vector<OperatorDecl> operators_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

/// True for the same object or structurally equal signatures.
bool same_signature(const SignaturePtr& a, const SignaturePtr& b);

/// One of "lambda", "pi", "systemt". Built-ins are singletons, so repeated
/// calls return the same pointer. Throws Error for an unknown name.
SignaturePtr builtin(std::string_view name);

/// Parses the signature file format: one `opname : m1 ... mk` per line,
/// `#` starts a comment. Throws ParseError.
SignaturePtr parse_signature(std::string_view text, std::string name = "custom");

}  // namespace bindkit
