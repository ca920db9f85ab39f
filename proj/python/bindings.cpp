#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "normix/assouad.hpp"
#include "normix/divergences.hpp"
#include "normix/family_hellinger.hpp"
#include "normix/family_l2.hpp"
#include "normix/hermite_fourier.hpp"
#include "normix/quadrature.hpp"
#include "normix/sinc.hpp"
#include "normix/special.hpp"
#include "normix/verify.hpp"

namespace py = pybind11;
using namespace normix;

PYBIND11_MODULE(_normix, m) {
  m.doc() = "Adversarial normal-mixture families, Assouad lower bounds, and "
            "the sinc-kernel estimator";

  m.attr("CRAMER_KAPPA") = kCramerKappa;
  m.def("hermite_normalized", &hermite_normalized, py::arg("k"),
        py::arg("t"), "H_k(t)/sqrt(k!) by the normalized recurrence");
  m.def("cramer_margin", &cramer_margin, py::arg("k"), py::arg("t"));
  m.def("gaussian_pdf", &gaussian_pdf, py::arg("x"), py::arg("mean"),
        py::arg("variance"));

  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init<>())
      .def_readwrite("half_width", &QuadratureSpec::half_width)
      .def_readwrite("panels", &QuadratureSpec::panels)
      .def_readwrite("nodes_per_panel", &QuadratureSpec::nodes_per_panel)
      .def_readwrite("abs_tol", &QuadratureSpec::abs_tol);

  m.def(
      "integrate",
      [](const std::function<double(double)>& f, const QuadratureSpec& spec) {
        return integrate_real(f, spec);
      },
      py::arg("f"), py::arg("spec") = QuadratureSpec{});

  py::class_<GaussHermiteForm>(m, "GaussHermiteForm")
      .def_readonly("order", &GaussHermiteForm::order)
      .def_readonly("coefficient", &GaussHermiteForm::coefficient)
      .def_readonly("gaussian_scale", &GaussHermiteForm::gaussian_scale)
      .def_readonly("hermite_scale", &GaussHermiteForm::hermite_scale)
      .def("envelope", &GaussHermiteForm::envelope, py::arg("u"));
  m.def("inverse_fourier_gauss_hermite", &inverse_fourier_gauss_hermite,
        py::arg("a"), py::arg("b"), py::arg("k"));

  py::class_<Perturbation>(m, "Perturbation")
      .def_readonly("order", &Perturbation::order)
      .def_readonly("amplitude", &Perturbation::amplitude)
      .def_readonly("rho", &Perturbation::rho)
      .def_readonly("gamma", &Perturbation::gamma)
      .def("__call__", &Perturbation::operator(), py::arg("u"));

  py::class_<L2FamilyConfig>(m, "L2FamilyConfig")
      .def_readonly("m", &L2FamilyConfig::m)
      .def_readonly("epsilon", &L2FamilyConfig::epsilon)
      .def_readonly("base_variance", &L2FamilyConfig::base_variance)
      .def_readonly("checked", &L2FamilyConfig::checked)
      .def_readonly("c1", &L2FamilyConfig::c1)
      .def("orders", &L2FamilyConfig::orders);
  m.def("make_l2_family", &make_l2_family, py::arg("m"), py::arg("epsilon"),
        py::arg("allow_unchecked") = false);
  m.def("l2_schedule", &l2_schedule, py::arg("n"), py::arg("c1") = 0.25);
  m.def(
      "l2_pi_alpha",
      [](const L2FamilyConfig& cfg, const BitVector& alpha, double u) {
        return pi_alpha(cfg, alpha, u);
      },
      py::arg("cfg"), py::arg("alpha"), py::arg("u"));
  m.def(
      "l2_f_alpha",
      [](const L2FamilyConfig& cfg, const BitVector& alpha, double x) {
        return f_alpha(cfg, alpha, x);
      },
      py::arg("cfg"), py::arg("alpha"), py::arg("x"));
  m.def("l2_separation", &l2_separation, py::arg("cfg"), py::arg("alpha"),
        py::arg("beta"), py::arg("spec") = QuadratureSpec{});

  py::class_<HellingerFamilyConfig>(m, "HellingerFamilyConfig")
      .def_readonly("m", &HellingerFamilyConfig::m)
      .def_readonly("epsilon", &HellingerFamilyConfig::epsilon)
      .def_readonly("degenerate", &HellingerFamilyConfig::degenerate)
      .def_readonly("checked", &HellingerFamilyConfig::checked)
      .def("orders", &HellingerFamilyConfig::orders);
  m.def("make_hellinger_family", &make_hellinger_family, py::arg("m"),
        py::arg("epsilon"), py::arg("allow_unchecked") = false);
  m.def("hellinger_schedule", &hellinger_schedule, py::arg("n"));
  m.def(
      "hellinger_pi_alpha",
      [](const HellingerFamilyConfig& cfg, const BitVector& alpha, double u) {
        return pi_alpha(cfg, alpha, u);
      },
      py::arg("cfg"), py::arg("alpha"), py::arg("u"));
  m.def(
      "hellinger_f_alpha",
      [](const HellingerFamilyConfig& cfg, const BitVector& alpha, double x) {
        return f_alpha(cfg, alpha, x);
      },
      py::arg("cfg"), py::arg("alpha"), py::arg("x"));

  py::enum_<Regime>(m, "Regime")
      .value("L2", Regime::L2)
      .value("HELLINGER", Regime::Hellinger);
  py::class_<AssouadCertificate>(m, "AssouadCertificate")
      .def_readonly("regime", &AssouadCertificate::regime)
      .def_readonly("zeta", &AssouadCertificate::zeta)
      .def_readonly("c0", &AssouadCertificate::c0)
      .def_readonly("c1", &AssouadCertificate::c1)
      .def_readonly("m", &AssouadCertificate::m)
      .def_readonly("epsilon2", &AssouadCertificate::epsilon2)
      .def_readonly("separation_verified",
                    &AssouadCertificate::separation_verified)
      .def_readonly("chi2_verified", &AssouadCertificate::chi2_verified)
      .def_readonly("positivity_verified",
                    &AssouadCertificate::positivity_verified)
      .def_readonly("degenerate", &AssouadCertificate::degenerate)
      .def_readonly("bound", &AssouadCertificate::bound)
      .def("all_verified", &AssouadCertificate::all_verified);
  m.def("assouad_bound", &assouad_bound, py::arg("regime"), py::arg("c1"),
        py::arg("m"), py::arg("epsilon2"),
        py::arg("separation_verified") = false,
        py::arg("chi2_verified") = false,
        py::arg("positivity_verified") = false);
  m.def("certify", &certify, py::arg("regime"), py::arg("n"),
        py::arg("c1") = 0.25, py::arg("spec") = QuadratureSpec{});

  py::class_<RateRow>(m, "RateRow")
      .def_readonly("n", &RateRow::n)
      .def_readonly("m", &RateRow::m)
      .def_readonly("epsilon2", &RateRow::epsilon2)
      .def_readonly("bound", &RateRow::bound)
      .def_readonly("target_rate", &RateRow::target_rate)
      .def_readonly("ratio", &RateRow::ratio)
      .def_readonly("verified", &RateRow::verified);
  m.def("rate_table", &rate_table, py::arg("regime"), py::arg("ns"),
        py::arg("c1") = 0.25, py::arg("verify") = true,
        py::arg("spec") = QuadratureSpec{});

  py::class_<SampleSet>(m, "SampleSet")
      .def_readonly("n", &SampleSet::n)
      .def_readonly("seed", &SampleSet::seed)
      .def_readonly("values", &SampleSet::values)
      .def_readonly("acceptance_rate", &SampleSet::acceptance_rate)
      .def_readonly("source", &SampleSet::source);
  m.def("sample_gaussian_mixture", &sample_gaussian_mixture,
        py::arg("base_variance"), py::arg("n"), py::arg("seed"));
  m.def("sinc_kernel", &sinc_kernel, py::arg("u"));
  m.def(
      "sinc_estimate",
      [](const std::vector<double>& samples, double x, double h) {
        return sinc_estimate(samples, x, h);
      },
      py::arg("samples"), py::arg("x"), py::arg("h"));

  py::class_<RiskReport>(m, "RiskReport")
      .def_readonly("n", &RiskReport::n)
      .def_readonly("reps", &RiskReport::reps)
      .def_readonly("seed", &RiskReport::seed)
      .def_readonly("h", &RiskReport::h)
      .def_readonly("mise_mean", &RiskReport::mise_mean)
      .def_readonly("mise_stderr", &RiskReport::mise_stderr)
      .def_readonly("variance_bound", &RiskReport::variance_bound)
      .def_readonly("bias_sq_bound", &RiskReport::bias_sq_bound)
      .def_readonly("ell_n", &RiskReport::ell_n)
      .def_readonly("mean_mass", &RiskReport::mean_mass);
  m.def("mise_mc_gaussian", &mise_mc_gaussian, py::arg("base_variance"),
        py::arg("n"), py::arg("reps"), py::arg("seed"),
        py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("margin", &CheckResult::margin)
      .def_readonly("tolerance", &CheckResult::tolerance)
      .def_readonly("pass_", &CheckResult::pass);
  m.def(
      "run_verification",
      [](bool include_l2, bool include_hellinger, long n) {
        return run_verification(include_l2, include_hellinger, n);
      },
      py::arg("include_l2") = true, py::arg("include_hellinger") = true,
      py::arg("n") = 10000, py::call_guard<py::gil_scoped_release>());
}
