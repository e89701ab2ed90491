// permemc: command-line front end. JSON goes to stdout, human-readable
// summaries to stderr. Exit codes: 0 ok, 1 a check failed, 2 bad flags or
// arguments, 3 I/O or file-format error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permemc/count_kernels.hpp"
#include "permemc/extremal.hpp"
#include "permemc/family_io.hpp"
#include "permemc/matching_solver.hpp"
#include "permemc/report.hpp"
#include "permemc/spread_engine.hpp"
#include "permemc/verify.hpp"

namespace {

using namespace permemc;

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Family read_family(const std::string& path) {
  LoadedFamily loaded = load_family(path);
  for (const auto& w : loaded.warnings) std::cerr << path << ": warning: " << w << '\n';
  return std::move(loaded.family);
}

Family ambient_for(const std::string& choice, int n) {
  if (choice == "sigma") return all_permutations(n);
  if (choice == "derangements") return derangements(n);
  return read_family(choice);
}

Permutation default_sigma(int n, int shift) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (i + shift) % n + 1;
  return Permutation(images);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for intersecting families of permutations"};
  app.require_subcommand(1);
  std::string out_dir = ".";
  app.add_option("--out-dir", out_dir, "Directory for families too large to inline");

  int n = 0;
  auto* counts = app.add_subcommand("counts", "d_n, d_{n,1} and n!");
  counts->add_option("--n", n, "Degree")->required()->check(CLI::Range(0, 200));

  std::string matrix_path;
  std::string method = "ryser";
  bool with_bound = false;
  auto* perm = app.add_subcommand("permanent", "Exact permanent of a 0/1 matrix");
  perm->add_option("--matrix", matrix_path, "Matrix file")->required();
  perm->add_option("--method", method, "ryser or brute")->check(CLI::IsMember({"ryser", "brute"}));
  perm->add_flag("--bound", with_bound, "Also compare with the Egorychev-Falikman lower bound");

  std::string family_path;
  auto* nu = app.add_subcommand("nu", "Matching number with witness");
  nu->add_option("--family", family_path, "Family file")->required();
  std::optional<int> nu_s;
  nu->add_option("--s", nu_s, "Also certify |F| <= (s-1)(n-1)! by cosets");

  auto* tau = app.add_subcommand("tau", "Covering number with witness");
  tau->add_option("--family", family_path, "Family file")->required();

  std::string r_text;
  std::optional<int> q_opt;
  auto* spread = app.add_subcommand("spread", "r-spreadness and exact spreadness");
  spread->add_option("--family", family_path, "Family file")->required();
  spread->add_option("--r", r_text, "Spreadness level (rational)")->required();
  spread->add_option("--q", q_opt, "Check (r, q)-spreadness");

  std::string ambient_choice = "sigma";
  int q = 1;
  auto* approx = app.add_subcommand("approx", "Greedy spread approximation with guarantee checks");
  approx->add_option("--family", family_path, "Family file")->required();
  approx->add_option("--ambient", ambient_choice, "sigma, derangements, or a family file");
  approx->add_option("--r", r_text, "Spreadness level (rational)")->required();
  approx->add_option("--q", q, "Largest support size")->required()->check(CLI::PositiveNumber);

  std::string kind;
  int s = 2;
  std::string sigma_text;
  auto* extremal = app.add_subcommand("extremal", "Extremal constructions with size, nu and tau");
  extremal->add_option("--kind", kind, "stars, hm, theorem3 or derstars")
      ->required()
      ->check(CLI::IsMember({"stars", "hm", "theorem3", "derstars"}));
  extremal->add_option("--n", n, "Degree")->required()->check(CLI::Range(1, kEnumerationCap));
  extremal->add_option("--s", s, "Matching bound s")->check(CLI::Range(1, 64));
  extremal->add_option("--sigma", sigma_text, "Permutation as space-separated images");

  std::vector<std::string> family_paths;
  std::string centers_text;
  auto* cross = app.add_subcommand("crossmatch", "Cross matching search and classification");
  cross->add_option("--families", family_paths, "Family files")->required();
  cross->add_option("--centers", centers_text, "Star centers r:c,... to classify a cross-matching-free input");

  std::string p_text;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  auto* mc = app.add_subcommand("mc-spread", "Probability that a p-random cell set contains a member");
  mc->add_option("--family", family_path, "Family file")->required();
  mc->add_option("--p", p_text, "Cell probability (rational)")->required();
  mc->add_option("--samples", samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
  mc->add_option("--seed", seed, "Seed");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "all, counts, spread, approx, solvers, extremal or lemma16")
      ->check(CLI::IsMember({"all", "counts", "spread", "approx", "solvers", "extremal", "lemma16"}));
  verify->add_option("--seed", seed, "Seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  FamilySpill spill{out_dir, "family", 0};
  try {
    if (*counts) {
      Json out;
      out["n"] = n;
      out["d_n"] = to_json(derangement_count(n));
      out["d_n1"] = n >= 2 ? to_json(pointed_derangement_count(n)) : Json(nullptr);
      out["factorial"] = to_json(factorial(static_cast<unsigned>(n)));
      std::cerr << "n = " << n << "  d_n = " << to_string(derangement_count(n)) << "  n! = "
                << to_string(factorial(static_cast<unsigned>(n))) << '\n';
      emit(out);
    } else if (*perm) {
      const ZeroOneMatrix m = load_matrix(matrix_path);
      const BigInt value = permanent(m, method == "brute" ? PermanentMethod::brute : PermanentMethod::ryser);
      Json out{{"N", m.size()}, {"method", method}, {"permanent", to_json(value)}};
      if (with_bound) out["bound_check"] = to_json(check_permanent_bound(m));
      std::cerr << "perm = " << to_string(value) << '\n';
      emit(out);
    } else if (*nu) {
      const Family f = read_family(family_path);
      const Matching m = matching_number(f);
      Json out = to_json(m);
      out["size"] = f.size();
      if (nu_s) out["coset_certificate"] = to_json(coset_certificate(f, *nu_s, m.size));
      std::cerr << "|F| = " << f.size() << "  nu = " << m.size << '\n';
      emit(out);
    } else if (*tau) {
      const Family f = read_family(family_path);
      const Cover c = covering_number(f);
      Json out = to_json(c);
      out["size"] = f.size();
      std::cerr << "|F| = " << f.size() << "  tau = " << c.size << "  cover " << to_string(std::span<const Cell>(c.cells)) << '\n';
      emit(out);
    } else if (*spread) {
      const Family f = read_family(family_path);
      const Rational r = parse_rational(r_text);
      Json out;
      out["size"] = f.size();
      out["r"] = to_json(r);
      out["r_spread"] = to_json(is_r_spread(f, r));
      out["exact_spreadness"] = to_json(exact_spreadness(f));
      if (q_opt) out["rq_spread"] = to_json(is_rq_spread(f, r, *q_opt));
      std::cerr << "r-spread: " << (out["r_spread"]["is_spread"].get<bool>() ? "yes" : "no") << '\n';
      emit(out);
    } else if (*approx) {
      const Family f = read_family(family_path);
      const Family a = ambient_for(ambient_choice, f.degree());
      const Rational r = parse_rational(r_text);
      const ApproximationResult res = spread_approximate(f, a, r, q);
      const ApproximationCheck chk = verify_approximation(res, f, a, r, q);
      Json out;
      out["result"] = to_json(res, &spill);
      out["check"] = to_json(chk);
      std::cerr << "supports: " << res.supports.size() << "  |F'| = " << res.remainder.size()
                << "  remainder bound: " << to_string(chk.remainder_status) << '\n';
      emit(out);
      const bool failed = !chk.covered || !chk.branches_partition || !chk.branches_spread ||
                          chk.remainder_status == CheckStatus::fail;
      return failed ? kExitFailed : 0;
    } else if (*extremal) {
      Family f;
      Json out;
      out["kind"] = kind;
      if (kind == "stars" || kind == "derstars") {
        std::vector<Cell> centers;
        for (int i = 1; i <= s - 1; ++i) centers.push_back(kind == "stars" ? Cell{1, i} : Cell{1, i + 1});
        const StarUnion u = make_star_union(n, centers, kind == "stars" ? StarKind::full : StarKind::derangement);
        f = u.family;
        out["centers"] = to_json(std::span<const Cell>(centers));
        out["shape"] = std::string(to_string(u.shape));
      } else {
        const Permutation sigma = sigma_text.empty() ? default_sigma(n, kind == "hm" ? 1 : s - 1) : Permutation::parse(sigma_text);
        f = kind == "hm" ? make_hm(sigma) : make_hm_star_union(s, sigma);
        out["sigma"] = to_json(sigma);
      }
      const Matching m = matching_number(f);
      out["n"] = n;
      out["s"] = s;
      out["size"] = f.size();
      out["nu"] = m.size;
      out["tau"] = f.empty() ? Json(0) : Json(covering_number(f).size);
      out["family"] = family_json(f, &spill);
      std::cerr << kind << ": size " << f.size() << "  nu " << m.size << "  tau " << out["tau"].dump() << '\n';
      emit(out);
    } else if (*cross) {
      std::vector<Family> fams;
      for (const auto& path : family_paths) fams.push_back(read_family(path));
      const auto w = cross_matching(fams);
      Json out;
      if (w) {
        Json members = Json::array();
        for (const auto& sigma : *w) members.push_back(to_json(sigma));
        out["witness"] = std::move(members);
      } else {
        out["witness"] = nullptr;
      }
      if (!centers_text.empty() && !w) {
        std::vector<Cell> centers;
        std::string_view rest = centers_text;
        while (!rest.empty()) {
          const auto cut = rest.find(',');
          centers.push_back(parse_cell(rest.substr(0, cut)));
          rest = cut == std::string_view::npos ? std::string_view{} : rest.substr(cut + 1);
        }
        out["classification"] = to_json(classify_cross_matching_free(fams, centers));
      }
      std::cerr << "cross matching: " << (w ? "found" : "none") << '\n';
      emit(out);
    } else if (*mc) {
      const Family f = read_family(family_path);
      const Rational p = parse_rational(p_text);
      Json out;
      out["monte_carlo"] = to_json(containment_probability_monte_carlo(f, p, samples, seed));
      std::size_t ground = 0;
      {
        CellSet cells;
        for (const auto& sigma : f) {
          const auto g = sigma.graph();
          cells.insert(cells.end(), g.begin(), g.end());
        }
        ground = normalize(std::move(cells)).size();
      }
      out["exact"] = ground <= kExactGroundCap ? to_json(containment_probability(f, p)) : Json(nullptr);
      std::cerr << "estimate " << out["monte_carlo"]["value"].get<double>() << " +- "
                << out["monte_carlo"]["standard_error"].get<double>() << '\n';
      emit(out);
    } else if (*verify) {
      const SuiteReport report = run_suite(suite, seed);
      for (const auto& c : report.checks) {
        std::fprintf(stderr, "%-12s %s\n", std::string(to_string(c.status)).c_str(), c.id.c_str());
      }
      std::fprintf(stderr, "%zu pass, %zu fail, %zu conditional, %zu vacuous\n", report.count(CheckStatus::pass),
                   report.count(CheckStatus::fail), report.count(CheckStatus::conditional),
                   report.count(CheckStatus::vacuous));
      emit(to_json(report));
      return report.failed() ? kExitFailed : 0;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
