// Python bindings for the main operations: background closed forms,
// one-sided solutions, miss/scan, Picard iterations, and the certificate.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sswm/connection.hpp"
#include "sswm/odecore.hpp"
#include "sswm/picard.hpp"
#include "sswm/stability.hpp"

namespace py = pybind11;
using namespace sswm;

PYBIND11_MODULE(sswm, m) {
    m.doc() =
        "Numerical mode-stability toolkit for the self-similar wave map "
        "2*arctan(rho)";

    m.def("theta", &theta, py::arg("rho"), "gauge mode 2 rho/(1+rho^2)");
    m.def("chi", &chi, py::arg("rho"), "second lambda=1 solution");
    m.def("cos2f0", &cos2f0, py::arg("rho"));
    m.def("beta_root", &beta_root, py::arg("lam"),
          "unique zero of the potential beta_lambda on (0,1)");
    m.def("beta_sign_changes", [](double lam) { return beta_sign_changes(lam); },
          py::arg("lam"));

    py::class_<ShootingConfig>(m, "ShootingConfig")
        .def(py::init<>())
        .def_readwrite("delta0", &ShootingConfig::delta0)
        .def_readwrite("delta1", &ShootingConfig::delta1)
        .def_readwrite("match_point", &ShootingConfig::match_point)
        .def_readwrite("reltol", &ShootingConfig::reltol)
        .def_readwrite("abstol", &ShootingConfig::abstol)
        .def_readwrite("series_order", &ShootingConfig::series_order)
        .def_readwrite("eig_tol", &ShootingConfig::eig_tol);

    py::enum_<MissClass>(m, "MissClass")
        .value("eigenvalue_candidate", MissClass::eigenvalue_candidate)
        .value("no_eigenvalue", MissClass::no_eigenvalue)
        .value("indeterminate", MissClass::indeterminate);

    py::class_<ConnectionResult>(m, "ConnectionResult")
        .def_readonly("lam", &ConnectionResult::lam)
        .def_readonly("wronskian", &ConnectionResult::wronskian)
        .def_readonly("normalization", &ConnectionResult::normalization)
        .def_readonly("miss", &ConnectionResult::miss)
        .def_readonly("cls", &ConnectionResult::cls);

    py::class_<RootInfo>(m, "RootInfo")
        .def_readonly("lam", &RootInfo::lam)
        .def_readonly("err", &RootInfo::err)
        .def_readonly("residual", &RootInfo::residual);

    py::class_<ScanPoint>(m, "ScanPoint")
        .def_readonly("lam", &ScanPoint::lam)
        .def_readonly("miss", &ScanPoint::miss)
        .def_readonly("cls", &ScanPoint::cls)
        .def_readonly("ok", &ScanPoint::ok);

    py::class_<ScanReport>(m, "ScanReport")
        .def_readonly("lo", &ScanReport::lo)
        .def_readonly("hi", &ScanReport::hi)
        .def_readonly("n", &ScanReport::n)
        .def_readonly("points", &ScanReport::points)
        .def_readonly("roots", &ScanReport::roots)
        .def_readonly("failures", &ScanReport::failures);

    m.def(
        "miss",
        [](cplx lam, const ShootingConfig& cfg) { return miss(lam, cfg); },
        py::arg("lam"), py::arg("cfg") = ShootingConfig{},
        "normalized Wronskian of the two one-sided solutions");
    m.def(
        "phi0_at",
        [](cplx lam, double rho, const ShootingConfig& cfg) {
            const Solution s = phi0_at(lam, rho, cfg);
            return std::make_pair(s.u, s.up);
        },
        py::arg("lam"), py::arg("rho"), py::arg("cfg") = ShootingConfig{});
    m.def(
        "phi1_at",
        [](cplx lam, double rho, const ShootingConfig& cfg) {
            const Solution s = phi1_at(lam, rho, cfg);
            return std::make_pair(s.u, s.up);
        },
        py::arg("lam"), py::arg("rho"), py::arg("cfg") = ShootingConfig{});
    m.def("scan_real", &scan_real, py::arg("lo"), py::arg("hi"), py::arg("n"),
          py::arg("cfg") = ShootingConfig{}, py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "scan_complex",
        [](double re_lo, double re_hi, double im_lo, double im_hi,
           int n_per_side, const ShootingConfig& cfg) {
            return scan_complex({re_lo, re_hi, im_lo, im_hi}, n_per_side, cfg);
        },
        py::arg("re_lo"), py::arg("re_hi"), py::arg("im_lo"), py::arg("im_hi"),
        py::arg("n_per_side") = 40, py::arg("cfg") = ShootingConfig{},
        py::call_guard<py::gil_scoped_release>(),
        "winding number of the miss function along the rectangle boundary");

    py::class_<PicardRun>(m, "PicardRun")
        .def_readonly("lam", &PicardRun::lam)
        .def_readonly("a", &PicardRun::a)
        .def_readonly("b", &PicardRun::b)
        .def_readonly("grid", &PicardRun::grid)
        .def_readonly("u", &PicardRun::u)
        .def_readonly("up", &PicardRun::up)
        .def_readonly("iterations", &PicardRun::iterations)
        .def_readonly("diffs", &PicardRun::diffs)
        .def_readonly("residual", &PicardRun::residual)
        .def_readonly("converged", &PicardRun::converged);

    py::class_<ContractionEstimate>(m, "ContractionEstimate")
        .def_readonly("endpoint", &ContractionEstimate::endpoint)
        .def_readonly("sup_bound", &ContractionEstimate::sup_bound)
        .def_readonly("lipschitz", &ContractionEstimate::lipschitz)
        .def_readonly("contractive", &ContractionEstimate::contractive);

    m.def("contraction_radius_zero", &contraction_radius_zero, py::arg("lam"));
    m.def("contraction_radius_one", &contraction_radius_one, py::arg("lam"));
    m.def("picard_phi0", &picard_phi0, py::arg("lam"), py::arg("rho0"),
          py::arg("tol") = 1e-10, py::arg("grid_n") = 2001,
          py::arg("max_iter") = 400);
    m.def("picard_phi1", &picard_phi1, py::arg("lam"), py::arg("rho1"),
          py::arg("tol") = 1e-10, py::arg("grid_n") = 2001,
          py::arg("max_iter") = 400);

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("pass_", &CheckResult::pass)
        .def_readonly("value", &CheckResult::value)
        .def_readonly("detail", &CheckResult::detail);

    py::class_<CertifyConfig>(m, "CertifyConfig")
        .def(py::init<>())
        .def_readwrite("range_lo", &CertifyConfig::range_lo)
        .def_readwrite("range_hi", &CertifyConfig::range_hi)
        .def_readwrite("scan_n", &CertifyConfig::scan_n)
        .def_readwrite("workers", &CertifyConfig::workers)
        .def_readwrite("corrupt_coefficient",
                       &CertifyConfig::corrupt_coefficient);

    py::class_<CertificateReport>(m, "CertificateReport")
        .def_readonly("checks", &CertificateReport::checks)
        .def_readonly("roots", &CertificateReport::roots)
        .def_readonly("pass_", &CertificateReport::pass);

    m.def("full_certificate", &full_certificate,
          py::arg("config") = CertifyConfig{},
          py::call_guard<py::gil_scoped_release>());
}
