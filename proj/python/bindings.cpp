#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "meridian/errors.hpp"
#include "meridian/export.hpp"
#include "meridian/expression.hpp"
#include "meridian/meridian.hpp"
#include "meridian/verification.hpp"

namespace py = pybind11;
using namespace meridian;

namespace {

py::tuple vec(const Vec4M& v) { return py::make_tuple(v.x1, v.x2, v.x3, v.x4); }

Branch branch(const std::string& s) {
  if (s == "plus") return Branch::Plus;
  if (s == "minus") return Branch::Minus;
  throw UsageError("branch must be 'plus' or 'minus', got '" + s + "'");
}

SectionParams section(double A, double B, double C, const std::string& root) { return {A, B, C, branch(root)}; }

py::dict point_dict(const PointData& p) {
  py::dict d;
  d["u"] = p.u;
  d["v"] = p.v;
  d["z"] = vec(p.z);
  d["E"] = p.E;
  d["F"] = p.F;
  d["G"] = p.G;
  d["L"] = p.L;
  d["M"] = p.M;
  d["N"] = p.N;
  d["k"] = p.k;
  d["kappa"] = p.kappa;
  d["K"] = p.K;
  d["H"] = vec(p.H);
  d["H1"] = p.H1;
  d["H2"] = p.H2;
  d["n1"] = vec(p.n1);
  d["n2"] = vec(p.n2);
  d["HdotH"] = inner(p.H, p.H);
  return d;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["claim_id"] = r.claim_id;
  d["passed"] = r.passed;
  d["max_residual"] = r.max_residual;
  d["threshold"] = r.threshold;
  d["worst_point"] = py::make_tuple(r.worst_u, r.worst_v);
  d["samples"] = r.samples;
  d["informational"] = r.informational;
  py::dict details;
  for (const auto& [name, value] : r.details) details[py::str(name)] = value;
  d["details"] = details;
  return d;
}

ProfileCurvePhi phi_expr(const std::string& text, double lo, double hi) {
  return {Expression::parse(text).as_profile('v'), {lo, hi}};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Surface invariants in Minkowski 4-space and marginally trapped meridian surfaces";

  auto base = py::register_exception<Error>(m, "MeridianError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  py::register_exception<ParamError>(m, "ParamError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<AdmissibilityError>(m, "AdmissibilityError", base.ptr());
  py::register_exception<NotSpacelike>(m, "NotSpacelike", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  m.def("inner", [](const std::array<double, 4>& a, const std::array<double, 4>& b) {
    return inner(Vec4M{a[0], a[1], a[2], a[3]}, Vec4M{b[0], b[1], b[2], b[3]});
  }, "Minkowski product with signature (+,+,+,-).");

  py::class_<SurfacePatch>(m, "SurfacePatch")
      .def_property_readonly("label", [](const SurfacePatch& p) { return p.label; })
      .def_property_readonly("u_range", [](const SurfacePatch& p) { return py::make_tuple(p.u_range.lo, p.u_range.hi); })
      .def_property_readonly("v_range", [](const SurfacePatch& p) { return py::make_tuple(p.v_range.lo, p.v_range.hi); })
      .def("point", [](const SurfacePatch& p, double u, double v) { return point_dict(point_data(p, u, v)); },
           py::arg("u"), py::arg("v"))
      .def("csv", [](const SurfacePatch& p, int nu, int nv) {
        std::ostringstream os;
        write_grid_csv(p, grid_over(p, nu, nv), os);
        return os.str();
      }, py::arg("u_samples"), py::arg("v_samples"))
      .def("__repr__", [](const SurfacePatch& p) { return "<SurfacePatch " + p.label + ">"; });

  m.def("mt_family", [](double a, double b, double c, const std::string& sign, double A, double B, double C,
                        const std::string& root, std::optional<std::pair<double, double>> u_range) {
    MTFamilyParams p{a, b, c, branch(sign), section(A, B, C, root)};
    std::optional<Interval> ur;
    if (u_range) ur = Interval{u_range->first, u_range->second};
    return mt_general_patch(p, ur);
  }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("sign"), py::arg("A"), py::arg("B"), py::arg("C"),
     py::arg("root"), py::arg("u_range") = py::none());

  m.def("cone_family", [](double a, double b, const std::string& phi, double v_lo, double v_hi) {
    return mt_cone_patch(a, b, phi_expr(phi, v_lo, v_hi));
  }, py::arg("a"), py::arg("b"), py::arg("phi"), py::arg("v_lo"), py::arg("v_hi"));

  m.def("parabolic", [](const std::string& f, const std::string& g, double u_lo, double u_hi, const std::string& phi,
                        double v_lo, double v_hi) {
    const ProfilePair fp{Expression::parse(f).as_profile('u'), Expression::parse(g).as_profile('u'), {u_lo, u_hi}};
    return build_parabolic(fp, phi_expr(phi, v_lo, v_hi));
  }, py::arg("f"), py::arg("g"), py::arg("u_lo"), py::arg("u_hi"), py::arg("phi"), py::arg("v_lo"), py::arg("v_hi"));

  m.def("section_curvature", [](double A, double B, double C, const std::string& root) {
    return plane_section_curvature(section(A, B, C, root));
  }, py::arg("A"), py::arg("B"), py::arg("C"), py::arg("root"));

  m.def("verify_marginally_trapped", [](const SurfacePatch& p, int nu, int nv, double tol) {
    return report_dict(verify_marginally_trapped(p, grid_over(p, nu, nv), tol));
  }, py::arg("patch"), py::arg("u_samples"), py::arg("v_samples"), py::arg("tol") = 1e-9);

  m.def("run_suite", [](double tol) {
    py::list out;
    for (const auto& r : run_paper_suite(tol)) out.append(report_dict(r));
    return out;
  }, py::arg("tol") = 1e-9);
}
