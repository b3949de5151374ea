#include "bindkit/signature.hpp"

#include <cctype>
#include <charconv>
#include <unordered_set>

#include "bindkit/error.hpp"

namespace bindkit {

Signature::Signature(std::string name, std::vector<OperatorDecl> operators)
    : name_(std::move(name)), operators_(std::move(operators)) {
  std::unordered_set<std::string> seen;
  for (const auto& op : operators_) {
    if (op.name.empty()) throw Error("signature " + name_ + ": empty operator name");
    if (!seen.insert(op.name).second) throw Error("signature " + name_ + ": duplicate operator '" + op.name + "'");
  }
}

std::optional<std::size_t> Signature::find(std::string_view op) const {
  for (std::size_t i = 0; i < operators_.size(); ++i)
    if (operators_[i].name == op) return i;
  return std::nullopt;
}

const OperatorDecl* Signature::lookup(std::string_view op) const {
  auto id = find(op);
  return id ? &operators_[*id] : nullptr;
}

const OperatorDecl& Signature::require(std::string_view op) const {
  if (const auto* decl = lookup(op)) return *decl;
  throw ArityError("unknown operator '" + std::string(op) + "' in signature " + name_);
}

bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace {

SignaturePtr make_lambda() {
  return std::make_shared<const Signature>("lambda", std::vector<OperatorDecl>{
                                                         {"ap", {0, 0}},
                                                         {"lm", {1}},
                                                     });
}

SignaturePtr make_pi() {
  return std::make_shared<const Signature>("pi", std::vector<OperatorDecl>{
                                                     {"in", {0, 1}},
                                                     {"out", {0, 0, 0}},
                                                     {"par", {0, 0}},
                                                     {"nu", {1}},
                                                     {"repl", {0}},
                                                     {"null", {}},
                                                 });
}

SignaturePtr make_systemt() {
  return std::make_shared<const Signature>("systemt", std::vector<OperatorDecl>{
                                                          {"Nat", {}},
                                                          {"Arr", {0, 0}},
                                                          {"lam", {0, 1}},
                                                          {"ap", {0, 0}},
                                                          {"zero", {}},
                                                          {"succ", {0}},
                                                          {"natrec", {0, 0, 0}},
                                                      });
}

}  // namespace

SignaturePtr builtin(std::string_view name) {
  static const SignaturePtr lambda = make_lambda();
  static const SignaturePtr pi = make_pi();
  static const SignaturePtr systemt = make_systemt();
  if (name == "lambda") return lambda;
  if (name == "pi") return pi;
  if (name == "systemt") return systemt;
  throw Error("unknown signature '" + std::string(name) + "' (expected lambda, pi or systemt)");
}

SignaturePtr parse_signature(std::string_view text, std::string name) {
  std::vector<OperatorDecl> ops;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    skip_ws();
    if (i == line.size()) continue;

    std::size_t name_begin = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != ':') ++i;
    OperatorDecl decl{std::string(line.substr(name_begin, i - name_begin)), {}};
    if (decl.name.empty()) throw ParseError("expected an operator name", line_no, i + 1);
    skip_ws();
    if (i == line.size() || line[i] != ':')
      throw ParseError("expected ':' after operator name", line_no, i + 1);
    ++i;
    for (;;) {
      skip_ws();
      if (i == line.size()) break;
      std::size_t begin = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t depth = 0;
      auto [end, ec] = std::from_chars(line.data() + begin, line.data() + i, depth);
      if (ec != std::errc{} || end != line.data() + i)
        throw ParseError("expected a binder depth (natural number)", line_no, begin + 1);
      decl.arity.push_back(depth);
    }
    if (!seen.insert(decl.name).second)
      throw ParseError("duplicate operator '" + decl.name + "'", line_no, name_begin + 1);
    ops.push_back(std::move(decl));
  }
  return std::make_shared<const Signature>(std::move(name), std::move(ops));
}

}  // namespace bindkit
