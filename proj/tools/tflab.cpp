#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tflab/enumerate.hpp"
#include "tflab/io.hpp"
#include "tflab/ring_props.hpp"

using namespace tflab;

namespace {

uint64_t default_seed() {
  if (const char* env = std::getenv("TFLAB_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParsedDocument load(const std::string& path) {
  return parse_document(slurp(path));
}

const StepFunction& named_fn(const ParsedDocument& doc,
                             const std::string& name) {
  const StepFunction* f = doc.find(name);
  if (!f) fail(Errc::ValidationError, "no function named '" + name + "'");
  return *f;
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int run_verify(const std::vector<std::shared_ptr<const Topoframe>>& instances,
               uint64_t seed, int samples, bool json) {
  int fails = 0, skipped = 0, passed = 0;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& tf : instances) {
    Rng rng(seed);
    PropertyReport props = analyze(tf, rng, samples);
    TheoremReport rep = verify_theorems(tf, props, rng);
    for (const auto& row : rep.rows) {
      if (row.verdict == Verdict::Fail) ++fails;
      if (row.verdict == Verdict::HypothesisNotMet) ++skipped;
      if (row.verdict == Verdict::Pass) ++passed;
    }
    if (json) {
      arr.push_back(report_json(*tf, props, &rep));
    } else {
      std::cout << "instance " << instance_id(*tf) << "\n"
                << theorem_text(rep);
    }
  }
  if (json) {
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << instances.size() << " instance(s): " << passed << " PASS, "
              << skipped << " HYPOTHESIS-NOT-MET, " << fails << " FAIL\n";
  }
  return fails ? 3 : 0;
}

/// Randomized invariant sweep over one instance: ring/order laws through
/// the atom evaluation, the zero-map laws, and the regularity witnesses.
int run_fuzz(const std::shared_ptr<const Topoframe>& tf, uint64_t seed,
             int count) {
  const Lattice& L = tf->lattice();
  Rng rng(seed);

  auto flag = [&](const char* name, const Flag& f) {
    if (f.value) {
      std::cout << "ok " << name << " (" << f.note << ")\n";
      return true;
    }
    std::cout << "FAIL " << name << ": " << f.note << "\n";
    return false;
  };
  if (!flag("atom-product-iso", check_atom_product_iso(tf, rng, count)))
    return 1;
  if (!flag("regular", check_regular(tf, rng, count))) return 1;
  if (!flag("kasch", check_kasch(tf, rng, count))) return 1;
  if (!flag("baer", check_baer(tf, rng, count))) return 1;
  if (!flag("pp", check_pp(tf, rng, count))) return 1;
  if (!flag("selfinjective",
            check_selfinjective(tf, SelfinjectiveMode::FiniteAsCountable, rng,
                                std::max(1, count / 4))))
    return 1;

  for (int i = 0; i < count; ++i) {
    StepFunction f = random_function(tf, rng);
    StepFunction g = random_function(tf, rng);
    Elem zf = f.zero_of(), zg = g.zero_of();

    bool ok = f.negate().zero_of() == zf && f.abs().zero_of() == zf &&
              f.pow(2).zero_of() == zf && f.pow(3).zero_of() == zf;
    ok = ok && f.mul(g).zero_of() == L.join(zf, zg);
    ok = ok && L.leq(L.meet(zf, zg), f.add(g).zero_of());
    StepFunction fp = f.abs(), gp = g.abs();
    ok = ok && fp.add(gp).zero_of() == L.meet(fp.zero_of(), gp.zero_of());
    ok = ok && (f.zero_of() == L.top()) == f.is_zero();
    ok = ok && (f.zero_of() == L.bottom()) == is_unit(f).unit;
    if (!ok) {
      std::cout << "FAIL zero-map laws for f=" << f.to_string()
                << " g=" << g.to_string() << "\n";
      return 1;
    }
  }
  std::cout << "ok zero-map laws (" << count << " random pairs)\n";
  std::cout << "fuzz: all invariants hold\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tflab: exact laboratory for finite topoframes and their rings of "
      "rational step functions"};
  app.require_subcommand(1);

  std::string file, fn_name, set_expr, op, s_csv, t_csv, lhs, rhs, arg;
  int enumerate_n = -1;
  int samples = 64;
  int count = 200;
  uint64_t seed = default_seed();
  bool json = false;

  CLI::App* validate = app.add_subcommand("validate", "parse a document");
  validate->add_option("file", file)->required();

  CLI::App* report =
      app.add_subcommand("report", "full property report for a document");
  report->add_option("file", file)->required();
  report->add_flag("--json", json, "emit JSON instead of text");
  report->add_option("--samples", samples, "random draws per checker");
  report->add_option("--seed", seed, "random seed");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the theorem harness on a document or an enumeration");
  verify->add_option("file", file);
  verify->add_option("--enumerate", enumerate_n,
                     "all labeled topologies on N points (N <= 4)");
  verify->add_flag("--json", json, "emit JSON instead of text");
  verify->add_option("--samples", samples, "random draws per checker");
  verify->add_option("--seed", seed, "random seed");

  CLI::App* eval =
      app.add_subcommand("eval", "evaluate a named function on a set");
  eval->add_option("file", file)->required();
  eval->add_option("--fn", fn_name)->required();
  eval->add_option("--set", set_expr, "e.g. \"(1,3)\" or \"{0} u [2,inf)\"")
      ->required();

  CLI::App* ring = app.add_subcommand("ring", "apply a ring operation");
  ring->add_option("file", file)->required();
  ring->add_option("--op", op,
                   "add|mul|min|max|neg|abs|quasi-inverse|separate")
      ->required();
  ring->add_option("--lhs", lhs);
  ring->add_option("--rhs", rhs);
  ring->add_option("--arg", arg);
  ring->add_option("--s", s_csv, "comma-separated names (separate)");
  ring->add_option("--t", t_csv, "comma-separated names (separate)");

  CLI::App* fuzz =
      app.add_subcommand("fuzz", "randomized invariant suite on a document");
  fuzz->add_option("file", file)->required();
  fuzz->add_option("--seed", seed, "random seed (default TFLAB_SEED)");
  fuzz->add_option("--count", count, "rounds per invariant family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (validate->parsed()) {
      (void)load(file);
      std::cout << "ok\n";
      return 0;
    }

    if (report->parsed()) {
      auto doc = load(file);
      Rng rng(seed);
      PropertyReport props = analyze(doc.tf, rng, samples);
      if (json)
        std::cout << report_json(*doc.tf, props, nullptr).dump(2) << "\n";
      else
        std::cout << property_text(*doc.tf, props);
      return 0;
    }

    if (verify->parsed()) {
      bool have_file = !file.empty(), have_enum = enumerate_n >= 0;
      if (have_file == have_enum) {
        std::cerr << "verify needs exactly one of FILE or --enumerate N\n";
        return 2;
      }
      std::vector<std::shared_ptr<const Topoframe>> instances;
      if (have_enum)
        instances = enumerate_topoframes(enumerate_n);
      else
        instances.push_back(load(file).tf);
      return run_verify(instances, seed, samples, json);
    }

    if (eval->parsed()) {
      auto doc = load(file);
      const StepFunction& f = named_fn(doc, fn_name);
      Elem e = f.evaluate(parse_set_descriptor(set_expr));
      std::cout << doc.tf->lattice().name(e) << "\n";
      return 0;
    }

    if (ring->parsed()) {
      auto doc = load(file);
      auto need = [&](const std::string& v, const char* what) -> const std::string& {
        if (v.empty())
          fail(Errc::InvalidArgument,
               std::string("--op ") + op + " needs " + what);
        return v;
      };
      StepFunction out = [&]() -> StepFunction {
        if (op == "add" || op == "mul" || op == "min" || op == "max") {
          const StepFunction& a = named_fn(doc, need(lhs, "--lhs"));
          const StepFunction& b = named_fn(doc, need(rhs, "--rhs"));
          RingOp ro = op == "add"   ? RingOp::Add
                      : op == "mul" ? RingOp::Mul
                      : op == "min" ? RingOp::Min
                                    : RingOp::Max;
          return ring_op(a, b, ro);
        }
        if (op == "neg") return named_fn(doc, need(arg, "--arg")).negate();
        if (op == "abs") return named_fn(doc, need(arg, "--arg")).abs();
        if (op == "quasi-inverse")
          return quasi_inverse(named_fn(doc, need(arg, "--arg")));
        if (op == "separate") {
          std::vector<StepFunction> S, T;
          for (const auto& n : split_names(need(s_csv, "--s")))
            S.push_back(named_fn(doc, n));
          for (const auto& n : split_names(t_csv))
            T.push_back(named_fn(doc, n));
          return separating_element(doc.tf, S, T);
        }
        fail(Errc::InvalidArgument, "unknown op '" + op + "'");
      }();
      std::cout << out.to_string() << "\n";
      return 0;
    }

    if (fuzz->parsed()) return run_fuzz(load(file).tf, seed, count);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
