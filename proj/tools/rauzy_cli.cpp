// rauzy: component labels, Rauzy classes, closures and certificates from the
// command line. Every command prints JSON with --json, a short text view otherwise.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rauzy/cache.hpp"
#include "rauzy/cli_support.hpp"
#include "rauzy/f2.hpp"
#include "rauzy/forms.hpp"
#include "rauzy/perm.hpp"
#include "rauzy/transvect.hpp"
#include "rauzy/verify.hpp"

using namespace rauzy;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::size_t max_class_size = 1'000'000;
  int coeff_bound = 4;
  std::size_t step_bound = 1'000'000;
  std::size_t group_cap = 100'000'000;
  std::uint64_t seed = VerifyOptions{}.seed;
  std::string cache_dir;
  bool no_cache = false;
  bool json = false;
};

struct Input {
  std::string file;
  std::string rep;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Permutation load(const Input& in) {
  if (!in.rep.empty()) return reps::by_name(in.rep);
  if (in.file.empty()) fail(Errc::ParseError, "give a permutation file or --rep");
  return Permutation::parse(read_file(in.file));
}

std::optional<Cache> open_cache(const Globals& g) {
  if (g.no_cache) return std::nullopt;
  return Cache(g.cache_dir.empty() ? Cache::default_dir() : std::filesystem::path(g.cache_dir));
}

// Looks the payload up, computing and storing it on a miss. The printed JSON
// differs between hit and miss only in the "cached" flag.
json cached(const Globals& g, const std::string& op, const std::string& input, const auto& compute) {
  std::optional<Cache> cache = open_cache(g);
  const std::string key = Cache::key(op, input);
  if (cache) {
    if (auto hit = cache->get(key)) {
      try {
        json j = json::parse(*hit);
        j["cached"] = true;
        return j;
      } catch (const json::exception&) {
        // unreadable entry: recompute and overwrite
      }
    }
  }
  json j = compute();
  if (cache) {
    try {
      cache->put(key, j.dump());
    } catch (const std::exception& e) {
      std::cerr << "warning: cache write failed: " << e.what() << "\n";
    }
  }
  j["cached"] = false;
  return j;
}

void print(const Globals& g, const json& j, const std::string& text) {
  if (g.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_stratum(const Globals& g, const Input& in) {
  const Permutation p = load(in);
  cli::require_valid(p);
  json j = cached(g, "stratum/" + std::to_string(g.max_class_size), p.to_text(), [&] {
    return json::parse(component_label(p, g.max_class_size).to_json());
  });
  print(g, j, j["name"].get<std::string>() + "\n");
  return cli::kPass;
}

int cmd_class(const Globals& g, const Input& in) {
  const Permutation p = load(in);
  cli::require_valid(p);
  json j = cached(g, "class/" + std::to_string(g.max_class_size), p.to_text(), [&] {
    const RauzyClass c = rauzy_class(p, g.max_class_size);
    json out;
    out["vertices"] = c.size();
    json list = json::array();
    for (const Permutation& v : c.vertices()) {
      std::string t = v.to_text();
      t.pop_back();
      t.replace(t.find('\n'), 1, " / ");
      list.push_back(t);
    }
    out["permutations"] = list;
    return out;
  });
  print(g, j, std::to_string(j["vertices"].get<std::size_t>()) + " vertices\n");
  return cli::kPass;
}

int cmd_closure(const Globals& g, const Input& in) {
  const Permutation p = load(in);
  cli::require_valid(p);
  json j = cached(g, "closure", p.to_text(), [&] {
    const QuadraticFormF2 q = quadratic_form(p);
    std::vector<std::uint64_t> seeds;
    for (int a = 0; a < p.size(); ++a) seeds.push_back(1ULL << a);
    std::vector<std::string> rows;
    for (std::uint64_t v : q_closure(seeds, q)) rows.push_back(cli::bit_tuple(p, v));
    std::sort(rows.begin(), rows.end());
    json out;
    out["size"] = rows.size();
    out["nonsingular"] = nonsingular_vectors(q).size();
    out["vectors"] = rows;
    return out;
  });
  std::string text;
  for (const auto& v : j["vectors"]) text += v.get<std::string>() + "\n";
  print(g, j, text);
  return cli::kPass;
}

int cmd_certificate(const Globals& g, const Input& in, const std::string& target_text, const std::string& out_path,
                    const std::string& check_path) {
  const Permutation p = load(in);
  cli::require_valid(p);
  const IntersectionForm f = omega(p);
  json j;
  if (!check_path.empty()) {
    const ClosureCertificate c = ClosureCertificate::parse(read_file(check_path));
    const bool ok = verify_certificate(c, f);
    j["valid"] = ok;
    j["steps"] = c.steps.size();
    j["target"] = to_string(c.target);
    print(g, j, ok ? "valid\n" : "invalid\n");
    return ok ? cli::kPass : cli::kClaimFailed;
  }
  if (target_text.empty()) fail(Errc::ParseError, "--target is required unless --check is given");
  const IntVector target = cli::parse_target(p, target_text);
  std::vector<IntVector> seeds;
  for (int a = 0; a < p.size(); ++a) seeds.push_back(unit_vector(p.size(), a));
  auto cert = omega_closure_search(seeds, f, target, SearchBounds{g.coeff_bound, g.step_bound});
  j["target"] = to_string(target);
  j["found"] = cert.has_value();
  if (!cert) {
    print(g, j, "no certificate within coefficient bound " + std::to_string(g.coeff_bound) + "\n");
    return cli::kClaimFailed;
  }
  const std::string text = cert->to_text();
  j["steps"] = cert->steps.size();
  j["sha256"] = sha256_hex(text);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) fail(Errc::ParseError, "cannot write " + out_path);
    out << text;
    j["file"] = out_path;
    print(g, j, "wrote " + out_path + " (" + std::to_string(cert->steps.size()) + " steps)\n");
  } else if (g.json) {
    j["certificate"] = text;
    print(g, j, "");
  } else {
    std::cout << text;
  }
  return cli::kPass;
}

int cmd_verify(const Globals& g, const std::string& suite) {
  VerifyOptions o;
  o.max_class_size = g.max_class_size;
  o.coeff_bound = g.coeff_bound;
  o.step_bound = g.step_bound;
  o.group_cap = g.group_cap;
  o.seed = g.seed;
  const std::vector<int> ids = suite_criteria(suite);
  json reports = json::array();
  bool failed = false, budget = false;
  for (int id : ids) {
    const ClaimReport r = run_criterion(id, o);
    failed |= !r.passed();
    budget |= r.budget_exceeded;
    if (g.json)
      reports.push_back(json::parse(r.to_json()));
    else
      std::cout << (r.passed() ? "PASS" : "FAIL") << " " << r.id << " " << r.topic << ": " << r.detail << "\n";
  }
  if (g.json) {
    json j;
    j["suite"] = suite;
    j["passed"] = !failed;
    j["reports"] = reports;
    std::cout << j.dump(2) << "\n";
  }
  if (budget) return cli::kBudget;
  return failed ? cli::kClaimFailed : cli::kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rauzy classes, Rauzy-Veech groups and their mod-2 shadows"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--max-class-size", g.max_class_size, "largest Rauzy class to enumerate")->capture_default_str();
  app.add_option("--coeff-bound", g.coeff_bound, "coefficient bound of the closure search")->capture_default_str();
  app.add_option("--step-bound", g.step_bound, "state budget of the closure search")->capture_default_str();
  app.add_option("--group-cap", g.group_cap, "largest group to enumerate")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed for the verify suites")->capture_default_str();
  app.add_option("--cache-dir", g.cache_dir, "cache directory (default $RAUZY_CACHE_DIR or ~/.cache/rauzy)");
  app.add_flag("--no-cache", g.no_cache, "neither read nor write the cache");
  app.add_flag("--json", g.json, "print JSON");

  Input in;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", in.file, "permutation file: top row, then bottom row");
    sub->add_option("--rep", in.rep, "named representative such as tau-d:6 or sigma-min:4");
  };
  auto* stratum = app.add_subcommand("stratum", "stratum and connected component");
  add_input(stratum);
  auto* cls = app.add_subcommand("class", "enumerate the Rauzy class");
  add_input(cls);
  auto* closure = app.add_subcommand("closure", "Q-closure of the unit vectors, as sorted bit tuples");
  add_input(closure);
  auto* cert = app.add_subcommand("certificate", "find or check an Omega-closure certificate");
  add_input(cert);
  std::string target, out_path, check_path;
  cert->add_option("--target", target, "target vector, e.g. \"-e2+e3\" or \"(0,0,-1,1,0,0)\"");
  cert->add_option("--out", out_path, "write the certificate here");
  cert->add_option("--check", check_path, "verify this certificate file instead of searching");
  auto* verify = app.add_subcommand("verify", "replay the acceptance checks");
  std::string suite;
  verify->add_option("suite", suite, "appendix, counts, orthogonal, congruence, odd-d, extension or all")
      ->required()
      ->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kParse;
  }

  try {
    if (*stratum) return cmd_stratum(g, in);
    if (*cls) return cmd_class(g, in);
    if (*closure) return cmd_closure(g, in);
    if (*cert) return cmd_certificate(g, in, target, out_path, check_path);
    if (*verify) return cmd_verify(g, suite);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code(e.code());
  }
  return cli::kPass;
}
