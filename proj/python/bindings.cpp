#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nibb/compare.hpp"
#include "nibb/exactcheck.hpp"
#include "nibb/fredholm.hpp"
#include "nibb/kernels.hpp"
#include "nibb/montecarlo.hpp"

namespace py = pybind11;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) { return py::array_t<double>(v.size(), v.data()); }

py::tuple curve_tuple(const nibb::CdfCurve& c) { return py::make_tuple(to_array(c.grid), to_array(c.values)); }

py::dict result_dict(const nibb::IdentityResult& r) {
  py::dict d;
  d["identity"] = r.identity;
  d["parameters"] = r.parameters;
  d["pass"] = r.pass;
  d["counterexample"] = r.counterexample ? py::cast(*r.counterexample) : py::none();
  return d;
}

nibb::MaxMode max_mode(const std::string& name) {
  if (name == "bridge") return nibb::MaxMode::bridge;
  if (name == "grid") return nibb::MaxMode::grid;
  throw std::invalid_argument("max_mode must be 'bridge' or 'grid'");
}

}  // namespace

PYBIND11_MODULE(_nibb, m) {
  m.doc() = "Restricted maxima of non-intersecting Brownian bridges: exact CDFs, samplers and identity checks.";

  m.def("restricted_max_cdf", &nibb::restricted_max_cdf, py::arg("N"), py::arg("p"), py::arg("r"));
  m.def("limit_cdf_hermite", &nibb::limit_cdf_hermite, py::arg("N"), py::arg("x"));
  m.def("limit_cdf_laguerre", &nibb::limit_cdf_laguerre, py::arg("N"), py::arg("x"));
  m.def("lue_cdf", &nibb::lue_cdf, py::arg("m"), py::arg("a"), py::arg("x"));

  m.def(
      "restricted_max_curve",
      [](int N, double p, std::optional<std::vector<double>> grid) {
        return curve_tuple(nibb::restricted_max_curve(N, p, grid ? *grid : nibb::default_grid_restricted_max(N, p)));
      },
      py::arg("N"), py::arg("p"), py::arg("grid") = py::none(), "Returns (grid, values).");
  m.def(
      "limit_curve",
      [](int N, const std::string& method, std::optional<std::vector<double>> grid) {
        return curve_tuple(nibb::limit_curve(N, method, grid ? *grid : nibb::default_grid_limit(N)));
      },
      py::arg("N"), py::arg("method") = "laguerre", py::arg("grid") = py::none(), "Returns (grid, values).");
  m.def(
      "lue_curve",
      [](int mm, double a, std::optional<std::vector<double>> grid) {
        return curve_tuple(nibb::lue_curve(mm, a, grid ? *grid : nibb::default_grid_lue(mm, a)));
      },
      py::arg("m"), py::arg("a"), py::arg("grid") = py::none(), "Returns (grid, values).");

  auto mat = [](const nibb::KernelMatrix& k) { return Eigen::MatrixXd(k.entries()); };
  m.def("m_matrix", [mat](int N, double r, double alpha) { return mat(nibb::m_matrix_general_p(N, r, alpha)); },
        py::arg("N"), py::arg("r"), py::arg("alpha"));
  m.def("q_matrix", [mat](int N, double r) { return mat(nibb::q_matrix_closed(N, r)); }, py::arg("N"), py::arg("r"));
  m.def("f_matrix", [mat](int N, double r) { return mat(nibb::f_matrix(N, r)); }, py::arg("N"), py::arg("r"));
  m.def("s_matrix", [mat](int N, double r) { return mat(nibb::s_matrix(N, r)); }, py::arg("N"), py::arg("r"));
  m.def("t_matrix", [mat](int N, double r) { return mat(nibb::t_matrix(N, r)); }, py::arg("N"), py::arg("r"));
  m.def("a_matrix", [mat](int N, double r) { return mat(nibb::a_matrix(N, r)); }, py::arg("N"), py::arg("r"));
  m.def("det_id_minus", [](const Eigen::MatrixXd& a) {
    const int n = static_cast<int>(a.rows());
    return nibb::det_id_minus(nibb::KernelMatrix("M", nibb::IndexRange{0, n - 1},
                                                 nibb::IndexRange{0, static_cast<int>(a.cols()) - 1}, a));
  });

  m.def(
      "sample_restricted_max",
      [](int N, double p, int count, int steps, std::uint64_t seed, const std::string& mode, unsigned threads) {
        nibb::MatrixBridgeConfig cfg;
        cfg.N = N;
        cfg.p = p;
        cfg.steps = steps;
        cfg.seed = seed;
        cfg.max_mode = max_mode(mode);
        cfg.threads = threads;
        return to_array(nibb::sample_nibb_restricted_max(cfg, count).values);
      },
      py::arg("N"), py::arg("p"), py::arg("count"), py::arg("steps") = 4096, py::arg("seed") = 1,
      py::arg("max_mode") = "bridge", py::arg("threads") = 0);
  m.def(
      "sample_antige_top",
      [](int n, int count, std::uint64_t seed, unsigned threads) {
        return to_array(nibb::sample_antige_top(n, count, seed, threads).values);
      },
      py::arg("n"), py::arg("count"), py::arg("seed") = 1, py::arg("threads") = 0);
  m.def(
      "sample_wishart_top",
      [](int N, int mm, int count, std::uint64_t seed, unsigned threads) {
        return to_array(nibb::sample_wishart_loe_top(N, mm, count, seed, threads).values);
      },
      py::arg("N"), py::arg("m"), py::arg("count"), py::arg("seed") = 1, py::arg("threads") = 0);

  m.def(
      "ks_distance",
      [](const std::vector<double>& sample, const std::function<double(double)>& cdf) {
        return nibb::ks_distance(sample, cdf);
      },
      py::arg("sample"), py::arg("cdf"));
  m.def(
      "ks_two_sample", [](const std::vector<double>& a, const std::vector<double>& b) { return nibb::ks_two_sample(a, b); },
      py::arg("a"), py::arg("b"));

  m.def(
      "compare",
      [](const std::string& pairing, int N, double p, int count, std::uint64_t seed, int steps, double threshold) {
        nibb::CompareOptions opt;
        opt.count = count;
        opt.seed = seed;
        opt.steps = steps;
        opt.threshold = threshold;
        const auto c = nibb::run_comparison(pairing, N, p, opt);
        py::dict d;
        d["pairing"] = c.pairing;
        d["params"] = c.params;
        d["seed"] = c.seed;
        d["ks"] = c.ks;
        d["threshold"] = c.threshold;
        d["pass"] = c.pass;
        return d;
      },
      py::arg("pairing"), py::arg("N"), py::arg("p") = 0.5, py::arg("count") = 10000, py::arg("seed") = 1,
      py::arg("steps") = 4096, py::arg("threshold") = 0.0);
  m.attr("comparison_names") = nibb::comparison_names();

  m.def(
      "check_identity",
      [](const std::string& which, int N, const std::string& r) {
        const nibb::Rational q = nibb::parse_rational(r);
        if (which == "ts=f") return result_dict(nibb::check_ts_is_f(N, q));
        if (which == "st=i") return result_dict(nibb::check_st_is_identity(N, q));
        if (which == "sqt=a") return result_dict(nibb::check_sqt_is_a(N, q));
        throw std::invalid_argument("identity must be 'ts=f', 'st=i' or 'sqt=a'");
      },
      py::arg("identity"), py::arg("N"), py::arg("r"), "Exact check at rational r given as 'p/q'.");
  m.def(
      "verify",
      [](int n_max, const std::vector<std::string>& radii, bool propositions, bool lemmas, bool auxiliary) {
        nibb::VerifyConfig cfg;
        cfg.n_max_props = n_max;
        cfg.n_max_sqt = std::min(n_max, cfg.n_max_sqt);
        if (!radii.empty()) {
          cfg.radii.clear();
          for (const auto& r : radii) cfg.radii.push_back(nibb::parse_rational(r));
        }
        cfg.propositions = propositions;
        cfg.lemmas = lemmas;
        cfg.auxiliary = auxiliary;
        py::list out;
        for (const auto& r : nibb::run_verification(cfg)) out.append(result_dict(r));
        return out;
      },
      py::arg("n_max") = 12, py::arg("radii") = std::vector<std::string>{}, py::arg("propositions") = true,
      py::arg("lemmas") = true, py::arg("auxiliary") = true);
}
