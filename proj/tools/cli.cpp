#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "polyrel/approximant.hpp"
#include "polyrel/division.hpp"
#include "polyrel/errors.hpp"
#include "polyrel/pmat_io.hpp"
#include "polyrel/relations.hpp"

namespace polyrel::cli {

namespace {

class BadInput : public Error {
 public:
  using Error::Error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PolyMat load(const std::string& path) {
  try {
    return parse_pmat(slurp(path));
  } catch (const ParseError& e) {
    throw BadInput(path + ": " + e.what());
  }
}

Shift shift_or_zero(const std::string& text, std::size_t n) {
  Shift s;
  try {
    s = parse_int_list(text);
  } catch (const ParseError& e) {
    throw BadInput(std::string("--shift: ") + e.what());
  }
  if (text.empty()) s.assign(n, 0);
  if (s.size() != n) {
    throw ShapeError("--shift has " + std::to_string(s.size()) + " entries, expected " +
                     std::to_string(n));
  }
  return s;
}

struct Options {
  std::vector<std::string> files;
  std::string shift;
  std::string order;
  std::int64_t delta = 0;
  bool assume_hermite = false;
  bool verify = false;
  bool popov = false, hermite = false, reduced = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact polynomial matrix division, relation bases and normal forms"};
  app.name("polyrel");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--verify", o.verify, "Self-check every relation basis before printing it");

  auto* quorem = app.add_subcommand("quorem", "Q and R with F = Q M + R, cdeg R < cdeg M");
  quorem->add_option("files", o.files, "M then F")->required()->expected(2);
  quorem->add_option("--delta", o.delta, "Quotient degree bound (default: smallest valid)");

  auto* res = app.add_subcommand("residual", "rem(P F, M)");
  res->add_option("files", o.files, "M, P, F")->required()->expected(3);

  auto* rel = app.add_subcommand("relations", "Shifted Popov basis of { p : p F = 0 mod M }");
  rel->add_option("files", o.files, "M then F")->required()->expected(2);
  rel->add_option("--shift", o.shift, "Comma-separated shift, one entry per row of F");
  rel->add_flag("--assume-hermite", o.assume_hermite,
                "M is already in Hermite form with no identity column");

  auto* approx = app.add_subcommand("approx", "Shifted Popov approximant basis of G");
  approx->add_option("G", o.files, "G")->required()->expected(1);
  approx->add_option("--order", o.order, "Comma-separated orders, one per column")->required();
  approx->add_option("--shift", o.shift, "Comma-separated shift, one entry per row");

  auto* popov = app.add_subcommand("popov", "Shifted Popov form of a nonsingular M");
  popov->add_option("M", o.files, "M")->required()->expected(1);
  popov->add_option("--shift", o.shift, "Comma-separated shift");

  auto* herm = app.add_subcommand("hermite", "Hermite form of a nonsingular M");
  herm->add_option("M", o.files, "M")->required()->expected(1);

  auto* check = app.add_subcommand("check", "Test a form predicate; exit 0 if it holds, 1 if not");
  check->add_option("P", o.files, "P")->required()->expected(1);
  auto* g = check->add_option_group("predicate");
  g->add_flag("--popov", o.popov, "Shifted Popov form");
  g->add_flag("--hermite", o.hermite, "Hermite form");
  g->add_flag("--reduced", o.reduced, "Shifted reduced form");
  g->require_option(1);
  check->add_option("--shift", o.shift, "Comma-separated shift");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  const bool previous = self_check_enabled();
  set_self_check(o.verify || previous);
  struct Restore {
    bool v;
    ~Restore() { set_self_check(v); }
  } restore{previous};

  try {
    if (*quorem) {
      PolyMat m = load(o.files[0]), f = load(o.files[1]);
      std::int64_t delta = o.delta > 0 ? o.delta : quotient_degree_bound(m, f);
      QuoRem qr = pm_quorem(m, f, delta);
      out << emit_pmat(qr.quotient) << emit_pmat(qr.remainder);
    } else if (*res) {
      PolyMat m = load(o.files[0]), p = load(o.files[1]), f = load(o.files[2]);
      out << emit_pmat(residual(m, p, f));
    } else if (*rel) {
      PolyMat m = load(o.files[0]), f = load(o.files[1]);
      Shift s = shift_or_zero(o.shift, f.rows());
      PolyMat p = o.assume_hermite ? relations_mod_hermite(m, f, s)
                                   : relation_basis_general(m, f, s);
      out << emit_pmat(p);
    } else if (*approx) {
      PolyMat gm = load(o.files[0]);
      std::vector<std::int64_t> orders;
      try {
        orders = parse_int_list(o.order);
      } catch (const ParseError& e) {
        throw BadInput(std::string("--order: ") + e.what());
      }
      Shift s = shift_or_zero(o.shift, gm.rows());
      out << emit_pmat(approximant_basis_popov(gm, orders, s).basis);
    } else if (*popov) {
      PolyMat m = load(o.files[0]);
      out << emit_pmat(popov_form(m, shift_or_zero(o.shift, m.rows())));
    } else if (*herm) {
      out << emit_pmat(hermite_form(load(o.files[0])));
    } else if (*check) {
      PolyMat p = load(o.files[0]);
      bool ok = false;
      if (o.hermite) {
        ok = is_hermite(p);
      } else {
        Shift s = shift_or_zero(o.shift, p.cols());
        ok = o.popov ? is_popov(p, s) : is_reduced(p, s);
      }
      out << (ok ? "true" : "false") << "\n";
      return ok ? kOk : kPredicateFalse;
    }
  } catch (const BadInput& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ModulusMismatch& e) {
    err << "modulus mismatch: " << e.what() << "\n";
    return kBadInput;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace polyrel::cli
