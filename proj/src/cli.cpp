// Copyright 2026 The cpkit Authors
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

#include "cpkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cpkit/axioms.hpp"
#include "cpkit/channels.hpp"
#include "cpkit/dsl.hpp"
#include "cpkit/format.hpp"
#include "cpkit/laws.hpp"
#include "cpkit/morfile.hpp"

namespace cpkit {

namespace {

// Raised for bad command-line input that CLI11 cannot see (file contents,
// inconsistent flags).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char *bool_str(bool b) { return b ? "true" : "false"; }

std::string read_text(const std::string &path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <Scalar S>
Mor<S> read_as(const std::string &path) {
  AnyMor any = read_mor_file(path);
  if (auto *m = std::get_if<Mor<S>>(&any)) {
    return *m;
  }
  throw UsageError("'" + path + "' is not a " + std::string(ScalarTraits<S>::name) + " morphism");
}

/// Kraus morphism from a file. The ancilla is the last codomain factor, or
/// `ancilla` if nonzero, or I when the codomain has a single factor.
CKraus read_kraus(const std::string &path, std::size_t ancilla) {
  const CMor f = read_as<Complex>(path);
  const auto &cf = f.cod().factors();
  if (ancilla != 0) {
    if (f.rows() % ancilla != 0) {
      throw UsageError("ancilla dimension " + std::to_string(ancilla) + " does not divide " +
                       std::to_string(f.rows()));
    }
    return CKraus(f, f.dom(), Object{f.rows() / ancilla}, Object{ancilla});
  }
  if (cf.size() >= 2) {
    return CKraus(f, f.dom(), Object(std::vector<std::size_t>(cf.begin(), cf.end() - 1)), Object{cf.back()});
  }
  return CKraus(f, f.dom(), f.cod(), Object::unit());
}

template <Scalar S>
void write_report(std::ostream &out, const AxiomReport<S> &r, const std::string &prefix = "") {
  out << prefix << "axiom=" << r.axiom << '\n';
  out << prefix << "status=" << to_string(r.status) << '\n';
  out << prefix << "samples=" << r.samples << '\n';
  out << prefix << "max_deviation=" << format_number(r.max_deviation) << '\n';
  out << prefix << "summary=" << r.summary() << '\n';
  if (r.witness) {
    out << prefix << "witness.claim=" << r.witness->claim << '\n';
    out << prefix << "witness.deviation=" << format_number(r.witness->deviation) << '\n';
    for (const auto &[name, m] : r.witness->data) {
      out << prefix << "witness.matrix=" << name << '\n';
      write_mor(out, m);
    }
  }
}

template <Scalar S>
double mor_distance(const Mor<S> &a, const Mor<S> &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return INFINITY;
  }
  return max_abs_diff(a, b);
}

template <Scalar S>
bool within(double d, double tol) {
  return ScalarTraits<S>::exact ? d == 0.0 : d <= tol;
}

template <Scalar S>
dsl::Env<S> bind_files(const std::vector<std::string> &binds) {
  dsl::Env<S> env;
  for (const std::string &b : binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--bind expects NAME=FILE, got '" + b + "'");
    }
    env.insert_or_assign(b.substr(0, eq), read_as<S>(b.substr(eq + 1)));
  }
  return env;
}

struct EvalOptions {
  std::string expr;
  std::string script;
  std::vector<std::string> binds;
  std::string semiring = "complex";
  double tol = 1e-9;
};

template <Scalar S>
int run_eval(const EvalOptions &o, std::ostream &out) {
  dsl::Env<S> env = bind_files<S>(o.binds);
  if (o.script.empty()) {
    write_mor(out, dsl::eval<S>(*dsl::parse_expr(o.expr), env));
    return kExitOk;
  }
  const dsl::Script script = dsl::parse_script(read_text(o.script));
  std::size_t failed = 0;
  for (const dsl::Statement &st : script.statements) {
    if (const auto *b = std::get_if<dsl::Binding>(&st)) {
      env.insert_or_assign(b->name, dsl::eval_binding<S>(*b, env));
      out << "bound=" << b->name << " : " << b->dom.str() << " -> " << b->cod.str() << '\n';
    } else if (const auto *sh = std::get_if<dsl::Show>(&st)) {
      out << "show=" << dsl::print(*sh->body) << '\n';
      write_mor(out, dsl::eval<S>(*sh->body, env));
    } else {
      const auto &c = std::get<dsl::Check>(st);
      const double d = mor_distance(dsl::eval<S>(*c.lhs, env), dsl::eval<S>(*c.rhs, env));
      const bool ok = within<S>(d, o.tol);
      failed += ok ? 0 : 1;
      out << "check=" << dsl::print(*c.lhs) << " == " << dsl::print(*c.rhs) << '\n';
      out << "equal=" << bool_str(ok) << '\n';
      out << "max_deviation=" << format_number(d) << '\n';
    }
  }
  out << "statements=" << script.statements.size() << '\n';
  out << "checks_failed=" << failed << '\n';
  return failed ? kExitCheckFailed : kExitOk;
}

template <Scalar S>
int run_eq(const std::string &lhs, const std::string &rhs, const std::vector<std::string> &binds, double tol,
           std::ostream &out) {
  const dsl::Env<S> env = bind_files<S>(binds);
  const Mor<S> a = dsl::eval<S>(*dsl::parse_expr(lhs), env);
  const Mor<S> b = dsl::eval<S>(*dsl::parse_expr(rhs), env);
  const double d = mor_distance(a, b);
  const bool ok = within<S>(d, tol);
  out << "equal=" << bool_str(ok) << '\n';
  out << "max_deviation=" << format_number(d) << '\n';
  out << "tolerance=" << format_number(tol) << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

struct AxiomOptions {
  std::string axiom;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::string semiring = "complex";
  double tol = 1e-9;
};

template <Scalar S>
AxiomReport<S> env_a_suite(const EnvStructure<S> &env, Sampler<S> &sampler, std::size_t samples, double tol) {
  AxiomReport<S> r{"env-a"};
  for (std::size_t t = 0; t < samples; ++t) {
    const Object a = sampler.object(), b = sampler.object();
    r.merge(check_env_a(env, {a, b}, tol));
  }
  return r;
}

// Random CPM states over the booleans; the complex suite lives in the library.
AxiomReport<Bool> bool_prep_state_suite(Sampler<Bool> &sampler, std::size_t samples, double tol) {
  AxiomReport<Bool> r{"prep-state"};
  for (std::size_t t = 0; t < samples; ++t) {
    const Object b = sampler.object(), c = sampler.object();
    const RMor f = sampler.mor(Object::unit(), b * c);
    const RMor g = (t % 2 == 0) ? f : sampler.mor(Object::unit(), b * c);
    r.merge(check_prep_state_pair(CpmMor<Bool>(RKraus(f, Object::unit(), b, c)),
                                  CpmMor<Bool>(RKraus(g, Object::unit(), b, c)), tol));
  }
  return r;
}

template <Scalar S>
int run_axioms(const AxiomOptions &o, std::ostream &out) {
  constexpr bool complex = std::is_same_v<S, Complex>;
  const EnvStructure<S> env = EnvStructure<S>::canonical();
  Sampler<S> sampler(o.seed);
  AxiomReport<S> r;
  if (o.axiom == "env-a") {
    r = env_a_suite(env, sampler, o.samples, o.tol);
  } else if (o.axiom == "env-b") {
    r = env_b_suite(env, sampler, o.samples, o.tol);
  } else if (o.axiom == "env-c") {
    if constexpr (complex) {
      r = env_c_suite(env, sampler, o.samples, o.tol);
    } else {
      throw UsageError("env-c goes through Choi matrices and needs --semiring complex");
    }
  } else if (o.axiom == "doubling") {
    r = doubling_suite(sampler, o.samples, o.tol);
  } else if (o.axiom == "prep-state") {
    if constexpr (complex) {
      r = prep_state_suite(sampler, o.samples, o.tol);
    } else {
      r = bool_prep_state_suite(sampler, o.samples, o.tol);
    }
  } else {
    r = xi_iso_check(env, sampler, o.samples, o.tol);
  }
  out << "semiring=" << ScalarTraits<S>::name << '\n';
  out << "seed=" << o.seed << '\n';
  write_report(out, r);
  if (o.axiom == "prep-state") {
    write_report(out, replay_suite(sampler, o.samples, o.tol), "replay.");
  }
  if constexpr (complex) {
    if (o.axiom == "doubling") {
      write_report(out, doubling_base_counterexample(o.tol), "base.");
    } else if (o.axiom == "prep-state") {
      write_report(out, prep_state_base_counterexample(o.tol), "base.");
    }
  }
  return r.holds() ? kExitOk : kExitCheckFailed;
}

struct LawOptions {
  std::string semiring = "complex";
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  std::size_t max_dim = 4;
  double tol = 1e-9;
};

template <Scalar S>
int run_laws(const LawOptions &o, std::ostream &out) {
  Sampler<S> sampler(o.seed, o.max_dim);
  const LawReport monoidal = check_laws<S>(sampler, o.trials, o.tol);
  const LawReport compact = check_compact_laws<S>(sampler, o.max_dim, o.trials, o.tol);
  out << "semiring=" << ScalarTraits<S>::name << '\n';
  out << "seed=" << o.seed << '\n';
  out << "trials=" << o.trials << '\n';
  out << "max_dim=" << o.max_dim << '\n';
  out << "tolerance=" << format_number(o.tol) << '\n';
  for (const LawReport *r : {&monoidal, &compact}) {
    for (const auto &[law, v] : r->violations) {
      out << "law." << law << '=' << format_number(v) << '\n';
    }
  }
  const double worst = std::max(monoidal.max_violation(), compact.max_violation());
  const bool ok = within<S>(worst, o.tol);
  out << "max_violation=" << format_number(worst) << '\n';
  out << "passed=" << bool_str(ok) << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

double default_tolerance() {
  if (const char *s = std::getenv("CPKIT_TOL")) {
    char *end = nullptr;
    const double v = std::strtod(s, &end);
    if (end != s && *end == '\0' && v >= 0.0) {
      return v;
    }
  }
  return 1e-9;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"cpkit: completely positive maps over dagger compact categories", "cpkit"};
  app.require_subcommand(1);
  const double tol0 = default_tolerance();
  const std::vector<std::string> semirings{"complex", "bool"};

  EvalOptions ev;
  ev.tol = tol0;
  auto *eval = app.add_subcommand("eval", "Evaluate an expression or run a script");
  eval->add_option("expr", ev.expr, "DSL expression");
  eval->add_option("--script", ev.script, "Script file ('-' for stdin)");
  eval->add_option("--bind", ev.binds, "NAME=FILE binding of a morphism file");
  eval->add_option("--semiring", ev.semiring)->check(CLI::IsMember(semirings));
  eval->add_option("--tol", ev.tol, "Tolerance for check statements");

  std::string eq_lhs, eq_rhs, eq_semiring = "complex";
  std::vector<std::string> eq_binds;
  double eq_tol = tol0;
  auto *eq = app.add_subcommand("eq", "Compare two expressions");
  eq->add_option("lhs", eq_lhs)->required();
  eq->add_option("rhs", eq_rhs)->required();
  eq->add_option("--bind", eq_binds, "NAME=FILE binding of a morphism file");
  eq->add_option("--semiring", eq_semiring)->check(CLI::IsMember(semirings));
  eq->add_option("--tol", eq_tol);

  std::string cp_file;
  double cp_tol = tol0;
  auto *check_cp_cmd = app.add_subcommand("check-cp", "Test a Choi matrix for complete positivity");
  check_cp_cmd->add_option("choi", cp_file, "Choi matrix file")->required();
  check_cp_cmd->add_option("--tol", cp_tol);

  std::string dil_file;
  std::size_t dil_in = 0, dil_out = 0;
  double dil_tol = kDefaultKrausTol;
  auto *dilate = app.add_subcommand("dilate", "Extract a Kraus dilation from a Choi matrix");
  dilate->add_option("choi", dil_file, "Choi matrix file")->required();
  dilate->add_option("--in-dim", dil_in);
  dilate->add_option("--out-dim", dil_out);
  dilate->add_option("--tol", dil_tol, "Eigenvalue cutoff");

  std::string choi_file;
  std::size_t choi_anc = 0;
  auto *choi = app.add_subcommand("choi", "Choi matrix of a Kraus morphism");
  choi->add_option("kraus", choi_file, "Kraus morphism file")->required();
  choi->add_option("--ancilla", choi_anc, "Ancilla dimension (default: last codomain factor)");

  std::string cc_g, cc_f;
  auto *cp_compose_cmd = app.add_subcommand("cp-compose", "Compose Kraus morphisms: G after F");
  cp_compose_cmd->add_option("g", cc_g)->required();
  cp_compose_cmd->add_option("f", cc_f)->required();

  AxiomOptions ax;
  ax.tol = tol0;
  auto *axioms = app.add_subcommand("check-axioms", "Sample an axiom");
  axioms->add_option("--axiom", ax.axiom)
      ->required()
      ->check(CLI::IsMember({"env-a", "env-b", "env-c", "doubling", "prep-state", "xi"}));
  axioms->add_option("--seed", ax.seed);
  axioms->add_option("--samples", ax.samples);
  axioms->add_option("--semiring", ax.semiring)->check(CLI::IsMember(semirings));
  axioms->add_option("--tol", ax.tol);

  LawOptions lw;
  lw.tol = tol0;
  auto *laws = app.add_subcommand("laws", "Randomized category-law suite");
  laws->add_option("--semiring", lw.semiring)->check(CLI::IsMember(semirings));
  laws->add_option("--seed", lw.seed);
  laws->add_option("--trials", lw.trials);
  laws->add_option("--max-dim", lw.max_dim)->check(CLI::Range(1, 8));
  laws->add_option("--tol", lw.tol);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*eval) {
      if (ev.expr.empty() == ev.script.empty()) {
        throw UsageError("eval needs exactly one of EXPR or --script");
      }
      return ev.semiring == "bool" ? run_eval<Bool>(ev, out) : run_eval<Complex>(ev, out);
    }
    if (*eq) {
      return eq_semiring == "bool" ? run_eq<Bool>(eq_lhs, eq_rhs, eq_binds, eq_tol, out)
                                   : run_eq<Complex>(eq_lhs, eq_rhs, eq_binds, eq_tol, out);
    }
    if (*check_cp_cmd) {
      const CpCheck c = check_cp(read_as<Complex>(cp_file), cp_tol);
      out << "completely_positive=" << bool_str(c.completely_positive) << '\n';
      out << "min_eigenvalue=" << format_number(c.min_eigenvalue) << '\n';
      return c.completely_positive ? kExitOk : kExitCheckFailed;
    }
    if (*dilate) {
      const CMor m = read_as<Complex>(dil_file);
      if ((dil_in == 0) != (dil_out == 0)) {
        throw UsageError("give both --in-dim and --out-dim or neither");
      }
      if (dil_in == 0) {
        if (m.dom().factors().size() != 2) {
          throw UsageError("cannot infer dimensions: pass --in-dim and --out-dim or use a dom of two factors");
        }
        dil_in = m.dom().factors()[0];
        dil_out = m.dom().factors()[1];
      }
      if (dil_in * dil_out != m.rows() || m.rows() != m.cols()) {
        throw UsageError("Choi matrix must be square of size in-dim * out-dim");
      }
      const ChoiMatrix c{dil_in, dil_out, m.retyped(Object{dil_in, dil_out}, Object{dil_in, dil_out})};
      try {
        const DilationResult d = kraus_from_choi(c, dil_tol);
        out << "in_dim=" << dil_in << '\n';
        out << "out_dim=" << dil_out << '\n';
        out << "ancilla_dim=" << d.ancilla_dim << '\n';
        out << "reconstruction_error=" << format_number(d.reconstruction_error) << '\n';
        write_mor(out, d.dilation.kraus());
        return kExitOk;
      } catch (const NotCompletelyPositive &e) {
        const CpCheck cc = check_cp(c, dil_tol);
        out << "completely_positive=false\n";
        out << "min_eigenvalue=" << format_number(cc.min_eigenvalue) << '\n';
        err << "error: NotCompletelyPositive: " << e.what() << '\n';
        return kExitCheckFailed;
      }
    }
    if (*choi) {
      const CKraus k = read_kraus(choi_file, choi_anc);
      const ChoiMatrix c = choi_of_kraus(k);
      out << "in_dim=" << c.in_dim << '\n';
      out << "out_dim=" << c.out_dim << '\n';
      out << "ancilla_dim=" << k.ancilla().total() << '\n';
      write_mor(out, c.matrix);
      return kExitOk;
    }
    if (*cp_compose_cmd) {
      const CKraus k = cp_compose(read_kraus(cc_g, 0), read_kraus(cc_f, 0));
      out << "in=" << k.in().str() << '\n';
      out << "out=" << k.out().str() << '\n';
      out << "ancilla=" << k.ancilla().str() << '\n';
      write_mor(out, k.kraus());
      return kExitOk;
    }
    if (*axioms) {
      return ax.semiring == "bool" ? run_axioms<Bool>(ax, out) : run_axioms<Complex>(ax, out);
    }
    if (*laws) {
      return lw.semiring == "bool" ? run_laws<Bool>(lw, out) : run_laws<Complex>(lw, out);
    }
  } catch (const Error &e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError &e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cpkit
