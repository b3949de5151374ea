#include "bindkit/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "bindkit/adequacy.hpp"
#include "bindkit/error.hpp"
#include "bindkit/generate.hpp"
#include "bindkit/pi.hpp"
#include "bindkit/systemt.hpp"
#include "bindkit/text.hpp"

namespace bindkit::cli {

namespace {

using nlohmann::json;
using text::NameTable;

constexpr std::uint64_t kDefaultSeed = 0;

enum class Form { Ln, Nom, Sugar };

/// What a command produced: an exit code, the text line(s) to print, and the
/// same result as JSON.
struct Outcome {
  int code = 0;
  std::string text;
  json value;
};

Outcome answer(bool b) { return {b ? 0 : 1, b ? "true" : "false", b}; }

Outcome line(std::string s) {
  json v = s;
  return {0, std::move(s), std::move(v)};
}

/// A FILE argument: "-" is stdin, an existing path is read, anything else is
/// taken as the term text itself.
struct Input {
  std::string label;
  std::string text;
};

Input read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return {"<stdin>", ss.str()};
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw Error("cannot read " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return {arg, ss.str()};
  }
  return {"<arg>", arg};
}

/// Runs `f` on the input text, prefixing parse errors with the input label.
template <typename F>
auto parsing(const Input& in, F f) {
  try {
    return f(in.text);
  } catch (const ParseError& e) {
    throw Error(in.label + ":" + e.what());
  }
}

SignaturePtr resolve_signature(const std::string& s) {
  if (s == "lambda" || s == "pi" || s == "systemt") return builtin(s);
  std::error_code ec;
  if (std::filesystem::is_regular_file(s, ec)) {
    Input in = read_input(s);
    return parsing(in, [&](const std::string& src) {
      return parse_signature(src, std::filesystem::path(s).stem().string());
    });
  }
  return builtin(s);
}

Form parse_form(const std::string& s) {
  if (s == "ln") return Form::Ln;
  if (s == "nom") return Form::Nom;
  return Form::Sugar;
}

std::string sugar_kind(const SignaturePtr& sig) {
  if (same_signature(sig, pi::signature())) return "pi";
  if (same_signature(sig, systemt::signature())) return "systemt";
  throw Error("surface syntax is only available for the pi and systemt signatures");
}

Term read_term(const Input& in, const SignaturePtr& sig, Form form, NameTable& names,
               std::optional<std::size_t> scope = std::nullopt) {
  return parsing(in, [&](const std::string& src) -> Term {
    switch (form) {
      case Form::Ln:
        return text::parse_ln(src, sig, names, scope);
      case Form::Nom:
        return translate(text::parse_nom(src, sig, names));
      case Form::Sugar:
        return sugar_kind(sig) == "pi" ? text::parse_pi(src, names) : text::parse_systemt(src, names);
    }
    throw std::logic_error("bad form");
  });
}

std::string print_term(const Term& t, Form form, NameTable& names) {
  switch (form) {
    case Form::Ln:
      return text::print_ln(t, names);
    case Form::Nom:
      return text::print_nom(untranslate(t), names);
    case Form::Sugar:
      return sugar_kind(t.signature()) == "pi" ? text::print_pi(t, names) : text::print_systemt(t, names);
  }
  throw std::logic_error("bad form");
}

json atom_list(const AtomSet& s, NameTable& names, std::string& text) {
  json names_json = json::array();
  text = "{";
  bool first = true;
  for (Atom a : s.elements()) {
    std::string n = names.name_of(a);
    names_json.push_back(n);
    text += (first ? "" : ", ") + n;
    first = false;
  }
  text += "}";
  return names_json;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BINDKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error("BINDKIT_SEED is not a number: " + std::string(env));
    }
  }
  return kDefaultSeed;
}

systemt::Context read_context(const std::string& arg, NameTable& names) {
  Input in = read_input(arg);
  return parsing(in, [&](const std::string& src) { return text::parse_context(src, names); });
}

/// Reads a System T term whose free atoms must all be declared in `ctx`.
Term read_typed(const systemt::Context& ctx, const std::string& arg, Form form, NameTable& names) {
  Term t = read_term(read_input(arg), systemt::signature(), form, names, 0);
  for (Atom a : support(t).elements())
    if (!member(a, ctx.atoms())) throw TypeError("variable '" + names.name_of(a) + "' is not in the context");
  return t;
}

/// Options shared by most subcommands.
struct Common {
  std::string sig = "lambda";
  std::string form;
  std::optional<std::size_t> scope;
};

void add_sig(CLI::App* cmd, Common& c, const std::string& fallback) {
  c.sig = fallback;
  cmd->add_option("--sig", c.sig, "signature: lambda, pi, systemt or a signature file")->capture_default_str();
}

void add_form(CLI::App* cmd, Common& c, std::vector<std::string> allowed, std::string fallback) {
  c.form = fallback;
  cmd->add_option("--form", c.form, "input/output format")->check(CLI::IsMember(allowed))->capture_default_str();
}

void add_scope(CLI::App* cmd, Common& c) {
  cmd->add_option("--scope", c.scope, "scope of locally nameless input (default: smallest valid)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Locally nameless terms over binding signatures", "bindkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "wrap the result in a JSON object");

  // Each subcommand stores its action here; it runs after parsing succeeds.
  std::function<Outcome()> action;
  std::string command;
  NameTable names;

  auto sub = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->fallthrough();
    return cmd;
  };

  // parse
  Common parse_o;
  std::string parse_file;
  {
    CLI::App* cmd = sub("parse", "parse a term and echo its canonical form");
    add_sig(cmd, parse_o, "lambda");
    add_form(cmd, parse_o, {"ln", "nom", "sugar"}, "ln");
    add_scope(cmd, parse_o);
    cmd->add_option("FILE", parse_file)->required();
    cmd->callback([&] {
      action = [&]() -> Outcome {
        SignaturePtr sig = resolve_signature(parse_o.sig);
        Input in = read_input(parse_file);
        Form form = parse_form(parse_o.form);
        if (form == Form::Nom) {
          NomTerm m = parsing(in, [&](const std::string& s) { return text::parse_nom(s, sig, names); });
          return line(text::print_nom(m, names));
        }
        Term t = read_term(in, sig, form, names, parse_o.scope);
        return line(print_term(t, form, names));
      };
    });
  }

  // translate / untranslate
  Common tr_o;
  std::string tr_file;
  {
    CLI::App* cmd = sub("translate", "nameful term to locally nameless 0-term");
    add_sig(cmd, tr_o, "lambda");
    cmd->add_option("FILE", tr_file)->required();
    cmd->callback([&] {
      action = [&]() -> Outcome {
        SignaturePtr sig = resolve_signature(tr_o.sig);
        Term t = read_term(read_input(tr_file), sig, Form::Nom, names);
        return line(text::print_ln(t, names));
      };
    });
  }
  Common un_o;
  std::string un_file;
  {
    CLI::App* cmd = sub("untranslate", "locally nameless 0-term to nameful term");
    add_sig(cmd, un_o, "lambda");
    cmd->add_option("FILE", un_file)->required();
    cmd->callback([&] {
      action = [&]() -> Outcome {
        SignaturePtr sig = resolve_signature(un_o.sig);
        Term t = read_term(read_input(un_file), sig, Form::Ln, names, std::size_t{0});
        return line(text::print_nom(untranslate(t), names));
      };
    });
  }

  // alpha-eq
  Common ae_o;
  std::string ae_file1, ae_file2;
  {
    CLI::App* cmd = sub("alpha-eq", "decide alpha-equivalence of two nameful terms");
    add_sig(cmd, ae_o, "lambda");
    cmd->add_option("FILE1", ae_file1)->required();
    cmd->add_option("FILE2", ae_file2)->required();
    cmd->callback([&] {
      action = [&]() -> Outcome {
        SignaturePtr sig = resolve_signature(ae_o.sig);
        Input a = read_input(ae_file1);
        Input b = read_input(ae_file2);
        NomTerm m = parsing(a, [&](const std::string& s) { return text::parse_nom(s, sig, names); });
        NomTerm n = parsing(b, [&](const std::string& s) { return text::parse_nom(s, sig, names); });
        return answer(alpha_eq(m, n));
      };
    });
  }

  // subst
  Common su_o;
  std::string su_map, su_file;
  {
    CLI::App* cmd = sub("subst", "apply a simultaneous substitution");
    add_sig(cmd, su_o, "lambda");
    add_form(cmd, su_o, {"ln", "nom"}, "ln");
    add_scope(cmd, su_o);
    cmd->add_option("--map", su_map, "substitution `x := TERM; ...` (file or text)")->required();
    cmd->add_option("FILE", su_file)->required();
    cmd->callback([&] {
      action = [&]() -> Outcome {
        SignaturePtr sig = resolve_signature(su_o.sig);
        Input map = read_input(su_map);
        Input in = read_input(su_file);
        if (parse_form(su_o.form) == Form::Nom) {
          NomSubst sigma = parsing(map, [&](const std::string& s) { return text::parse_nom_subst(s, sig, names); });
          NomTerm m = parsing(in, [&](const std::string& s) { return text::parse_nom(s, sig, names); });
          return line(text::print_nom(nom_subst(sigma, m), names));
        }
        Subst sigma = parsing(map, [&](const std::string& s) { return text::parse_subst(s, sig, names); });
        Term t = read_term(in, sig, Form::Ln, names, su_o.scope);
        return line(text::print_ln(apply_subst(sigma, t), names));
      };
    });
  }

  // open / close
  Common op_o;
  std::size_t op_index = 0;
  std::string op_with, op_file;
  {
    CLI::App* cmd = sub("open", "replace index K by a 0-term");
    add_sig(cmd, op_o, "lambda");
    add_scope(cmd, op_o);
    cmd->add_option("--index", op_index, "index to open")->required();
    cmd->add_option("--with", op_with, "the 0-term (file or text)")->required();
    cmd->add_option("FILE", op_file)->required();
    cmd->callback([&] {
      action = [&]() -> Outcome {
        SignaturePtr sig = resolve_signature(op_o.sig);
        Term u = read_term(read_input(op_with), sig, Form::Ln, names, std::size_t{0});
        Term t = read_term(read_input(op_file), sig, Form::Ln, names, op_o.scope);
        if (!op_o.scope && t.scope() <= op_index) t = weaken(t, op_index + 1);
        if (t.scope() <= op_index)
          throw ScopeError("index " + std::to_string(op_index) + " is not below the scope " +
                           std::to_string(t.scope()));
        return line(text::print_ln(open_at(ScopedIndex::make(op_index, t.scope()), u, t), names));
      };
    });
  }
  Common cl_o;
  std::size_t cl_index = 0;
  std::string cl_atom, cl_file;
  {
    CLI::App* cmd = sub("close", "replace atom X by index K");
    add_sig(cmd, cl_o, "lambda");
    add_scope(cmd, cl_o);
    cmd->add_option("--index", cl_index, "index to bind")->required();
    cmd->add_option("--atom", cl_atom, "atom name to close")->required();
    cmd->add_option("FILE", cl_file)->required();
    cmd->callback([&] {
      action = [&]() -> Outcome {
        SignaturePtr sig = resolve_signature(cl_o.sig);
        Atom x = names.intern(cl_atom);
        Term t = read_term(read_input(cl_file), sig, Form::Ln, names, cl_o.scope);
        if (!cl_o.scope && t.scope() < cl_index) t = weaken(t, cl_index);
        if (cl_index > t.scope())
          throw ScopeError("index " + std::to_string(cl_index) + " exceeds the scope " + std::to_string(t.scope()));
        return line(text::print_ln(close_at(ScopedIndex::make(cl_index, t.scope() + 1), x, t), names));
      };
    });
  }

  // support / size
  Common sp_o;
  std::string sp_file;
  {
    CLI::App* cmd = sub("support", "atoms occurring in a term");
    add_sig(cmd, sp_o, "lambda");
    add_form(cmd, sp_o, {"ln", "nom", "sugar"}, "ln");
    add_scope(cmd, sp_o);
    cmd->add_option("FILE", sp_file)->required();
    cmd->callback([&] {
      action = [&]() -> Outcome {
        SignaturePtr sig = resolve_signature(sp_o.sig);
        Input in = read_input(sp_file);
        AtomSet s;
        if (parse_form(sp_o.form) == Form::Nom)
          s = nom_support(parsing(in, [&](const std::string& src) { return text::parse_nom(src, sig, names); }));
        else
          s = support(read_term(in, sig, parse_form(sp_o.form), names, sp_o.scope));
        Outcome o;
        o.value = atom_list(s, names, o.text);
        return o;
      };
    });
  }
  Common sz_o;
  std::string sz_file;
  {
    CLI::App* cmd = sub("size", "term size (leaves count 0)");
    add_sig(cmd, sz_o, "lambda");
    add_form(cmd, sz_o, {"ln", "nom", "sugar"}, "ln");
    add_scope(cmd, sz_o);
    cmd->add_option("FILE", sz_file)->required();
    cmd->callback([&] {
      action = [&]() -> Outcome {
        SignaturePtr sig = resolve_signature(sz_o.sig);
        Input in = read_input(sz_file);
        std::size_t n = 0;
        if (parse_form(sz_o.form) == Form::Nom)
          n = nom_size(parsing(in, [&](const std::string& src) { return text::parse_nom(src, sig, names); }));
        else
          n = size(read_term(in, sig, parse_form(sz_o.form), names, sz_o.scope));
        return {0, std::to_string(n), n};
      };
    });
  }

  // check
  Common ck_o;
  std::string ck_ctx, ck_file;
  {
    CLI::App* cmd = sub("check", "process well-formedness (pi) or type inference (systemt)");
    add_sig(cmd, ck_o, "pi");
    add_form(cmd, ck_o, {"ln", "nom", "sugar"}, "sugar");
    cmd->add_option("--ctx", ck_ctx, "typing context `x:A, y:B` (systemt)");
    cmd->add_option("FILE", ck_file)->required();
    cmd->callback([&] {
      action = [&]() -> Outcome {
        SignaturePtr sig = resolve_signature(ck_o.sig);
        if (same_signature(sig, pi::signature()))
          return answer(pi::proc_check(read_term(read_input(ck_file), sig, parse_form(ck_o.form), names, 0)));
        if (!same_signature(sig, systemt::signature())) throw Error("check supports --sig pi and --sig systemt");
        systemt::Context ctx = read_context(ck_ctx, names);
        Term t = read_typed(ctx, ck_file, parse_form(ck_o.form), names);
        return line(systemt::to_string(systemt::infer(ctx, t)));
      };
    });
  }

  // normalize / conv
  Common nf_o;
  std::string nf_ctx, nf_file;
  {
    CLI::App* cmd = sub("normalize", "beta-eta normal form of a System T term");
    add_form(cmd, nf_o, {"ln", "nom", "sugar"}, "sugar");
    cmd->add_option("--ctx", nf_ctx, "typing context `x:A, y:B`");
    cmd->add_option("FILE", nf_file)->required();
    cmd->callback([&] {
      action = [&]() -> Outcome {
        systemt::Context ctx = read_context(nf_ctx, names);
        Form form = parse_form(nf_o.form);
        Term t = read_typed(ctx, nf_file, form, names);
        return line(print_term(systemt::normalize(ctx, t), form, names));
      };
    });
  }
  Common cv_o;
  std::string cv_ctx, cv_file1, cv_file2;
  {
    CLI::App* cmd = sub("conv", "decide beta-eta conversion of two System T terms");
    add_form(cmd, cv_o, {"ln", "nom", "sugar"}, "sugar");
    cmd->add_option("--ctx", cv_ctx, "typing context `x:A, y:B`");
    cmd->add_option("FILE1", cv_file1)->required();
    cmd->add_option("FILE2", cv_file2)->required();
    cmd->callback([&] {
      action = [&]() -> Outcome {
        systemt::Context ctx = read_context(cv_ctx, names);
        Form form = parse_form(cv_o.form);
        Term t = read_typed(ctx, cv_file1, form, names);
        Term u = read_typed(ctx, cv_file2, form, names);
        return answer(systemt::convertible(ctx, t, u));
      };
    });
  }

  // gen
  Common gn_o;
  std::size_t gn_depth = 4, gn_count = 1;
  std::optional<std::uint64_t> gn_seed;
  {
    CLI::App* cmd = sub("gen", "emit random terms");
    add_sig(cmd, gn_o, "lambda");
    add_form(cmd, gn_o, {"ln", "nom"}, "ln");
    add_scope(cmd, gn_o);
    cmd->add_option("--depth", gn_depth, "maximum term size")->capture_default_str();
    cmd->add_option("--seed", gn_seed, "generator seed (default: $BINDKIT_SEED or 0)");
    cmd->add_option("--count", gn_count, "number of terms")->capture_default_str();
    cmd->callback([&] {
      action = [&]() -> Outcome {
        SignaturePtr sig = resolve_signature(gn_o.sig);
        std::size_t scope = gn_o.scope.value_or(0);
        Form form = parse_form(gn_o.form);
        if (form == Form::Nom && scope != 0) throw ScopeError("nameful terms have scope 0");
        Rng rng(gn_seed ? *gn_seed : default_seed());
        Outcome o;
        o.value = json::array();
        for (std::size_t i = 0; i < gn_count; ++i) {
          std::string s = form == Form::Nom ? text::print_nom(gen_nomterm(sig, gn_depth, rng), names)
                                            : text::print_ln(gen_lnterm(sig, scope, gn_depth, rng), names);
          o.text += (i ? "\n" : "") + s;
          o.value.push_back(s);
        }
        return o;
      };
    });
  }

  for (const std::string& a : args) {
    if (a.empty() || a[0] == '-') continue;
    if (app.get_subcommand_no_throw(a) == nullptr) {
      err << "error: unknown subcommand '" << a << "'\n";
      return 2;
    }
    break;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return 2;
  }
  for (CLI::App* cmd : app.get_subcommands()) command = cmd->get_name();

  try {
    Outcome o = action();
    if (as_json)
      out << json{{"command", command}, {"ok", true}, {"result", o.value}, {"exit", o.code}}.dump() << "\n";
    else if (!o.text.empty())
      out << o.text << "\n";
    return o.code;
  } catch (const Error& e) {
    if (as_json) out << json{{"command", command}, {"ok", false}, {"error", e.what()}, {"exit", 2}}.dump() << "\n";
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bindkit::cli
