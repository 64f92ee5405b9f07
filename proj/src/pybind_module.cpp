#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypstab/acceptance.hpp"
#include "hypstab/calibrate.hpp"
#include "hypstab/front_tracking.hpp"
#include "hypstab/generators.hpp"
#include "hypstab/measures.hpp"
#include "hypstab/riemann.hpp"

namespace py = pybind11;
using namespace hypstab;

PYBIND11_MODULE(_hypstab, m) {
  m.doc() = "Stability functionals and front tracking for 1-D hyperbolic systems";

  py::register_exception<OutOfDomainError>(m, "OutOfDomainError");
  py::register_exception<NewtonDivergenceError>(m, "NewtonDivergenceError");
  py::register_exception<BadParameterError>(m, "BadParameterError");

  py::enum_<FieldKind>(m, "FieldKind")
      .value("GNL", FieldKind::GNL)
      .value("LD", FieldKind::LD);

  py::class_<EigenData>(m, "EigenData")
      .def_readonly("lambdas", &EigenData::lambdas)
      .def_readonly("right", &EigenData::right)
      .def_readonly("left", &EigenData::left);

  py::class_<HyperbolicityReport>(m, "HyperbolicityReport")
      .def_readonly("min_gap", &HyperbolicityReport::min_gap)
      .def_readonly("max_duality_error", &HyperbolicityReport::max_duality_error)
      .def_readonly("max_gnl_error", &HyperbolicityReport::max_gnl_error)
      .def_readonly("ok", &HyperbolicityReport::ok);

  py::class_<FluxModel>(m, "FluxModel")
      .def_readonly("n", &FluxModel::n)
      .def_readonly("id", &FluxModel::id)
      .def_readonly("field_kind", &FluxModel::field_kind)
      .def_readonly("k", &FluxModel::k)
      .def_readonly("domain_radius", &FluxModel::domain_radius)
      .def_readonly("origin", &FluxModel::origin)
      .def("flux", [](const FluxModel& f, const Vec& u) { return f.flux(u); })
      .def("jacobian", [](const FluxModel& f, const Vec& u) { return f.jacobian(u); })
      .def("in_domain", &FluxModel::in_domain);

  m.def("burgers", &burgers_model, py::arg("radius") = 0.5);
  m.def("p_system", &p_system_model, py::arg("gamma"), py::arg("radius") = 0.2);
  m.def("linear", &linear_model, py::arg("A"), py::arg("radius") = 0.5);
  m.def("eigen_at", &eigen_at);
  m.def("check_hyperbolicity", &check_hyperbolicity, py::arg("model"), py::arg("samples") = 256);

  py::enum_<WaveKind>(m, "WaveKind")
      .value("Shock", WaveKind::Shock)
      .value("RarefactionPiece", WaveKind::RarefactionPiece)
      .value("Contact", WaveKind::Contact)
      .value("NonPhysical", WaveKind::NonPhysical);

  py::class_<Wave>(m, "Wave")
      .def_readonly("family", &Wave::family)
      .def_readonly("strength", &Wave::strength)
      .def_readonly("kind", &Wave::kind)
      .def_readonly("left", &Wave::left)
      .def_readonly("right", &Wave::right)
      .def_readonly("speed", &Wave::speed);

  py::class_<Fan>(m, "Fan").def_readonly("waves", &Fan::waves);

  m.def("rarefaction_point", &rarefaction_point);
  m.def("shock_point", &shock_point);
  m.def("lax_point", &lax_point);
  m.def("psi_compose", &psi_compose);
  m.def("shock_compose", &shock_compose);
  m.def("solve_strengths", &solve_strengths);
  m.def("solve_shock_strengths", &solve_shock_strengths);
  m.def("riemann_fan", &riemann_fan);

  py::class_<StabilityConstants>(m, "StabilityConstants")
      .def(py::init<>())
      .def_readwrite("C0", &StabilityConstants::C0)
      .def_readwrite("kappa1", &StabilityConstants::kappa1)
      .def_readwrite("kappa2", &StabilityConstants::kappa2)
      .def_readwrite("delta", &StabilityConstants::delta);

  py::class_<PiecewiseConstantFn>(m, "PiecewiseConstantFn")
      .def(py::init([](std::vector<double> xs, std::vector<Vec> values, Vec background) {
             PiecewiseConstantFn f;
             f.xs = std::move(xs);
             f.values = std::move(values);
             f.background = std::move(background);
             f.canonicalize();
             return f;
           }),
           py::arg("xs"), py::arg("values"), py::arg("background"))
      .def_readonly("xs", &PiecewiseConstantFn::xs)
      .def_readonly("values", &PiecewiseConstantFn::values)
      .def_readonly("background", &PiecewiseConstantFn::background)
      .def("at", &PiecewiseConstantFn::at)
      .def("left_limit", &PiecewiseConstantFn::left_limit)
      .def("jump_points", &PiecewiseConstantFn::jump_points);

  m.def("l1_distance",
        py::overload_cast<const PiecewiseConstantFn&, const PiecewiseConstantFn&>(&l1_distance));
  m.def("linear_functional", [](const FluxModel& model, const PiecewiseConstantFn& u) {
    return linear_functional(jump_strengths(model, u));
  });
  m.def("interaction_potential", [](const FluxModel& model, const PiecewiseConstantFn& u) {
    return interaction_potential(model, jump_strengths(model, u));
  });
  m.def("glimm_total", &glimm_total);
  m.def("stability_phi", &stability_phi);
  m.def("sample_coarsen", &sample_coarsen);

  py::class_<BVPiece>(m, "BVPiece")
      .def(py::init([](double a, double b, Vec value, Vec slope) {
             return BVPiece{a, b, std::move(value), std::move(slope)};
           }),
           py::arg("a"), py::arg("b"), py::arg("value"), py::arg("slope"))
      .def_readonly("a", &BVPiece::a)
      .def_readonly("b", &BVPiece::b)
      .def_readonly("value", &BVPiece::value0)
      .def_readonly("slope", &BVPiece::slope);

  py::class_<BVFunction>(m, "BVFunction")
      .def(py::init([](std::vector<BVPiece> pieces, Vec background) {
             BVFunction f;
             f.pieces = std::move(pieces);
             f.background = std::move(background);
             return f;
           }),
           py::arg("pieces"), py::arg("background"))
      .def_static("from_pcw", &BVFunction::from_pcw)
      .def("at", &BVFunction::at)
      .def("total_variation", &BVFunction::total_variation);

  m.def("upsilon_hat", &upsilon_hat);
  m.def("xi_hat", &xi_hat);
  m.def("interaction_measure", [](const FluxModel& model, const BVFunction& u) {
    return interaction_measure(model, wave_measures(model, u));
  });
  m.def("approx_sequence", &approx_sequence);
  m.def("gap_bound", [](const FluxModel& model, const BVFunction& u, double a, double b) {
    GapBound g = gap_bound(model, u, a, b);
    return std::make_pair(g.lhs, g.rhs);
  });

  py::class_<FTEvent>(m, "FTEvent")
      .def_readonly("t", &FTEvent::t)
      .def_readonly("x", &FTEvent::x)
      .def_readonly("simplified", &FTEvent::simplified)
      .def_readonly("upsilon_before", &FTEvent::upsilon_before)
      .def_readonly("upsilon_after", &FTEvent::upsilon_after);

  py::class_<Front>(m, "Front")
      .def_readonly("x", &Front::x)
      .def_readonly("speed", &Front::speed)
      .def_readonly("family", &Front::family)
      .def_readonly("strength", &Front::strength);

  py::class_<FTTrajectory>(m, "FTTrajectory")
      .def_readonly("eps", &FTTrajectory::eps)
      .def_readonly("t_end", &FTTrajectory::t_end)
      .def_readonly("events", &FTTrajectory::events)
      .def("fronts_at", &FTTrajectory::fronts_at);

  m.def("ft_solve", &ft_solve);
  m.def("snapshot", &snapshot);

  py::class_<PhiTimelinePoint>(m, "PhiTimelinePoint")
      .def_readonly("t", &PhiTimelinePoint::t)
      .def_readonly("phi", &PhiTimelinePoint::phi)
      .def_readonly("l1", &PhiTimelinePoint::l1)
      .def_readonly("upsilon", &PhiTimelinePoint::upsilon)
      .def_readonly("upsilon_tilde", &PhiTimelinePoint::upsilon_tilde);

  m.def("phi_timeline", &phi_timeline);
  m.def("phi_eps_compare", [](const FluxModel& model, const FTTrajectory& a,
                              const FTTrajectory& b, const StabilityConstants& c, double t) {
    PhiEpsComparison cmp = phi_eps_compare(model, a, b, c, t);
    return py::dict(py::arg("phi") = cmp.phi, py::arg("phi_eps") = cmp.phi_eps,
                    py::arg("l1") = cmp.l1);
  });

  py::class_<CalibrationResult>(m, "CalibrationResult")
      .def_readonly("C0", &CalibrationResult::C0)
      .def_readonly("kappa2", &CalibrationResult::kappa2)
      .def_readonly("max_amplification", &CalibrationResult::max_amplification)
      .def_readonly("interactions", &CalibrationResult::interactions);

  m.def("calibrate_constants", &calibrate_constants, py::arg("model"), py::arg("delta"),
        py::arg("seed"), py::arg("sweeps") = 2000);

  py::class_<CriterionResult>(m, "CriterionResult")
      .def_readonly("id", &CriterionResult::id)
      .def_readonly("name", &CriterionResult::name)
      .def_readonly("measured", &CriterionResult::measured)
      .def_readonly("bound", &CriterionResult::bound)
      .def_readonly("pass_", &CriterionResult::pass)
      .def_readonly("detail", &CriterionResult::detail);

  m.def("run_acceptance", [](unsigned seed) { return run_acceptance(seed).criteria; },
        py::arg("seed") = 1);
}
