#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permemc/count_kernels.hpp"
#include "permemc/extremal.hpp"
#include "permemc/family_io.hpp"
#include "permemc/matching_solver.hpp"
#include "permemc/report.hpp"
#include "permemc/spread_engine.hpp"
#include "permemc/verify.hpp"

namespace py = pybind11;
using namespace permemc;

namespace {

using Members = std::vector<std::vector<int>>;

// Exact integers cross the boundary as Python ints of any size.
py::int_ to_py(const BigInt& value) {
  const std::string text = to_string(value);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

Family to_family(int n, const Members& members) {
  std::vector<Permutation> perms;
  perms.reserve(members.size());
  for (const auto& m : members) {
    if (static_cast<int>(m.size()) != n) throw DimensionMismatch("member of length " + std::to_string(m.size()) + " in a family of degree " + std::to_string(n));
    perms.emplace_back(m);
  }
  return Family(n, std::move(perms));
}

Members to_members(const Family& family) {
  Members out;
  for (const auto& sigma : family) out.push_back(sigma.images());
  return out;
}

std::vector<std::pair<int, int>> to_pairs(std::span<const Cell> cells) {
  std::vector<std::pair<int, int>> out;
  for (const Cell& c : cells) out.emplace_back(c.row, c.col);
  return out;
}

std::vector<Cell> to_cells(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Cell> out;
  for (const auto& [r, c] : pairs) out.push_back({r, c});
  return out;
}

ZeroOneMatrix to_matrix(const std::vector<std::vector<int>>& rows) { return ZeroOneMatrix(rows); }

// Reports reuse the JSON serializers; the Python layer decodes them.
std::string dumped(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact counting, spreadness and matching solvers for permutation families";

  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_OverflowError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  m.def("derangement_count", [](int n) { return to_py(derangement_count(n)); }, py::arg("n"));
  m.def("pointed_derangement_count", [](int n) { return to_py(pointed_derangement_count(n)); }, py::arg("n"));
  m.def("factorial", [](unsigned n) { return to_py(factorial(n)); }, py::arg("n"));
  m.def(
      "permanent",
      [](const std::vector<std::vector<int>>& rows, const std::string& method) {
        if (method != "ryser" && method != "brute") throw std::invalid_argument("method must be 'ryser' or 'brute'");
        return to_py(permanent(to_matrix(rows), method == "ryser" ? PermanentMethod::ryser : PermanentMethod::brute));
      },
      py::arg("rows"), py::arg("method") = "ryser");
  m.def(
      "double_derangement_count",
      [](const std::vector<int>& sigma, const std::vector<std::pair<int, int>>& fixed) {
        return to_py(double_derangement_count(Permutation(sigma), PartialPermutation(to_cells(fixed))));
      },
      py::arg("sigma"), py::arg("fixed") = std::vector<std::pair<int, int>>{});
  m.def(
      "permanent_bound_check", [](const std::vector<std::vector<int>>& rows) { return dumped(to_json(check_permanent_bound(to_matrix(rows)))); },
      py::arg("rows"));

  m.def("all_permutations", [](int n) { return to_members(all_permutations(n)); }, py::arg("n"));
  m.def("derangements", [](int n) { return to_members(derangements(n)); }, py::arg("n"));
  m.def("double_derangements", [](const std::vector<int>& sigma) { return to_members(double_derangements(Permutation(sigma))); },
        py::arg("sigma"));
  m.def(
      "make_star",
      [](int n, std::pair<int, int> center, bool derangement) {
        return to_members(make_star(n, {center.first, center.second}, derangement ? StarKind::derangement : StarKind::full));
      },
      py::arg("n"), py::arg("center"), py::arg("derangement") = false);
  m.def(
      "make_star_union",
      [](int n, const std::vector<std::pair<int, int>>& centers, bool derangement) {
        const auto u = make_star_union(n, to_cells(centers), derangement ? StarKind::derangement : StarKind::full);
        return py::make_tuple(to_members(u.family), std::string(to_string(u.shape)), u.pairwise_disjoint);
      },
      py::arg("n"), py::arg("centers"), py::arg("derangement") = false);
  m.def("make_hm", [](const std::vector<int>& sigma) { return to_members(make_hm(Permutation(sigma))); }, py::arg("sigma"));
  m.def(
      "make_hm_star_union", [](int s, const std::vector<int>& sigma) { return to_members(make_hm_star_union(s, Permutation(sigma))); },
      py::arg("s"), py::arg("sigma"));
  m.def(
      "trace",
      [](int n, const Members& members, const std::vector<std::pair<int, int>>& cells) {
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const auto& residue : trace(to_family(n, members), to_cells(cells))) out.push_back(to_pairs(residue.cells()));
        return out;
      },
      py::arg("n"), py::arg("members"), py::arg("cells"));

  m.def(
      "matching_number",
      [](int n, const Members& members) {
        const Matching result = matching_number(to_family(n, members));
        Members witness;
        for (const auto& p : result.members) witness.push_back(p.images());
        return py::make_tuple(result.size, witness);
      },
      py::arg("n"), py::arg("members"));
  m.def(
      "covering_number",
      [](int n, const Members& members) {
        const Cover result = covering_number(to_family(n, members));
        return py::make_tuple(result.size, to_pairs(result.cells));
      },
      py::arg("n"), py::arg("members"));
  m.def(
      "cross_matching",
      [](int n, const std::vector<Members>& families) -> std::optional<Members> {
        std::vector<Family> fams;
        for (const auto& f : families) fams.push_back(to_family(n, f));
        const auto w = cross_matching(fams);
        if (!w) return std::nullopt;
        Members out;
        for (const auto& p : *w) out.push_back(p.images());
        return out;
      },
      py::arg("n"), py::arg("families"));
  m.def(
      "coset_certificate",
      [](int n, const Members& members, int s) { return dumped(to_json(coset_certificate(to_family(n, members), s))); },
      py::arg("n"), py::arg("members"), py::arg("s"));

  m.def(
      "is_r_spread",
      [](int n, const Members& members, const std::string& r) { return dumped(to_json(is_r_spread(to_family(n, members), parse_rational(r)))); },
      py::arg("n"), py::arg("members"), py::arg("r"));
  m.def(
      "is_rq_spread",
      [](int n, const Members& members, const std::string& r, int q) {
        return dumped(to_json(is_rq_spread(to_family(n, members), parse_rational(r), q)));
      },
      py::arg("n"), py::arg("members"), py::arg("r"), py::arg("q"));
  m.def(
      "exact_spreadness", [](int n, const Members& members) { return dumped(to_json(exact_spreadness(to_family(n, members)))); },
      py::arg("n"), py::arg("members"));
  m.def(
      "spread_approximate",
      [](int n, const Members& members, const Members& ambient, const std::string& r, int q) {
        const Family f = to_family(n, members);
        const Family a = to_family(n, ambient);
        const Rational rr = parse_rational(r);
        const auto result = spread_approximate(f, a, rr, q);
        Json out = to_json(result);
        out["check"] = to_json(verify_approximation(result, f, a, rr, q));
        return dumped(out);
      },
      py::arg("n"), py::arg("members"), py::arg("ambient"), py::arg("r"), py::arg("q"));
  m.def(
      "containment_probability",
      [](int n, const Members& members, const std::string& p) {
        return dumped(to_json(containment_probability(to_family(n, members), parse_rational(p))));
      },
      py::arg("n"), py::arg("members"), py::arg("p"));
  m.def(
      "containment_probability_monte_carlo",
      [](int n, const Members& members, const std::string& p, std::uint64_t samples, std::uint64_t seed) {
        py::gil_scoped_release release;
        return dumped(to_json(containment_probability_monte_carlo(to_family(n, members), parse_rational(p), samples, seed)));
      },
      py::arg("n"), py::arg("members"), py::arg("p"), py::arg("samples"), py::arg("seed"));

  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed) {
        py::gil_scoped_release release;
        return dumped(to_json(run_suite(name, seed)));
      },
      py::arg("name") = "all", py::arg("seed") = 0);
  m.def("suite_names", [] {
    std::vector<std::string> out;
    for (auto s : suite_names()) out.emplace_back(s);
    return out;
  });
  m.def(
      "load_family",
      [](const std::string& path) {
        const LoadedFamily loaded = load_family(path);
        return py::make_tuple(loaded.family.degree(), to_members(loaded.family), loaded.warnings);
      },
      py::arg("path"));
  m.def(
      "save_family", [](const std::string& path, int n, const Members& members) { save_family(path, to_family(n, members)); },
      py::arg("path"), py::arg("n"), py::arg("members"));
}
