#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "picardop/config.hpp"
#include "picardop/picard.hpp"
#include "picardop/risk.hpp"
#include "picardop/rollout.hpp"
#include "picardop/sampling.hpp"
#include "picardop/scenarios.hpp"
#include "picardop/spectral.hpp"

namespace py = pybind11;
using namespace picardop;

namespace {

TorusField field_from_array(const GridSpec& spec, py::array_t<double, py::array::c_style> a) {
    std::vector<double> v(a.data(), a.data() + a.size());
    return TorusField::from_values(spec, std::move(v));
}

py::array_t<double> field_values(const TorusField& f) {
    return py::array_t<double>({static_cast<py::ssize_t>(f.values().size())}, f.values().data());
}

py::array_t<std::complex<double>> field_spectrum(const TorusField& f) {
    return py::array_t<std::complex<double>>({static_cast<py::ssize_t>(f.spectrum().size())},
                                             f.spectrum().data());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Picard-type operator learning for nonlinear heat equations on the torus";

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<int, int, int>(), py::arg("dim"), py::arg("points_per_axis"),
             py::arg("time_nodes"))
        .def_readonly("dim", &GridSpec::dim)
        .def_readonly("points_per_axis", &GridSpec::points_per_axis)
        .def_readonly("time_nodes", &GridSpec::time_nodes)
        .def("space_size", &GridSpec::space_size)
        .def("resolves_rank", &GridSpec::resolves_rank)
        .def("coordinate", &GridSpec::coordinate);

    py::class_<TorusField>(m, "TorusField")
        .def_static("from_values", &field_from_array, py::arg("spec"), py::arg("values"))
        .def_static("zero", &TorusField::zero)
        .def_static("constant", &TorusField::constant)
        .def_property_readonly("values", &field_values)
        .def_property_readonly("spectrum", &field_spectrum)
        .def_property_readonly("spec", &TorusField::spec);

    py::class_<TrajectoryField>(m, "TrajectoryField")
        .def_property_readonly("horizon", &TrajectoryField::horizon)
        .def("slice", &TrajectoryField::slice, py::return_value_policy::copy)
        .def("time_at", &TrajectoryField::time_at);

    m.def("fejer_mask",
          [](int rank, const std::vector<int>& xi) {
              return fejer_mask(rank, std::span<const int>(xi.data(), xi.size()));
          },
          py::arg("rank"), py::arg("xi"));
    m.def("apply_fejer", &apply_fejer, py::arg("field"), py::arg("rank"));
    m.def("sobolev_norm", py::overload_cast<const TorusField&, double>(&sobolev_norm));
    m.def("sup_norm", py::overload_cast<const TorusField&>(&sup_norm));
    m.def("sup_norm_trajectory", py::overload_cast<const TrajectoryField&>(&sup_norm));

    py::class_<SemigroupKind>(m, "SemigroupKind")
        .def_static("exact", &SemigroupKind::exact)
        .def_static("truncated", &SemigroupKind::truncated);
    m.def("heat_multiplier",
          [](const std::vector<int>& xi, double t) {
              return heat_multiplier(std::span<const int>(xi.data(), xi.size()), t);
          },
          py::arg("xi"), py::arg("t"));
    m.def("apply_semigroup", &apply_semigroup, py::arg("kind"), py::arg("field"), py::arg("t"));
    m.def("duhamel", &duhamel, py::arg("kind"), py::arg("g"));

    py::class_<Nonlinearity>(m, "Nonlinearity")
        .def_readonly("lipschitz_cert", &Nonlinearity::lipschitz_cert)
        .def_readonly("tag", &Nonlinearity::tag)
        .def("__call__", [](const Nonlinearity& f, double x) { return f.eval(x); });
    py::class_<PiecewiseLinear>(m, "PiecewiseLinear")
        .def_property_readonly("knots", &PiecewiseLinear::knots)
        .def_property_readonly("values", &PiecewiseLinear::values)
        .def("knot_count", &PiecewiseLinear::knot_count)
        .def("max_secant_slope", &PiecewiseLinear::max_secant_slope)
        .def("__call__", [](const PiecewiseLinear& r, double x) { return r(x); });
    m.def("catalog",
          [](const std::string& name, double M, double amplitude, double lambda, double p,
             double alpha, double beta) {
              CatalogParams cp;
              cp.amplitude = amplitude;
              cp.lambda = lambda;
              cp.p = p;
              cp.alpha = alpha;
              cp.beta = beta;
              return catalog(name, cp, M);
          },
          py::arg("name"), py::arg("M"), py::arg("amplitude") = 1.0, py::arg("lambda") = 1.0,
          py::arg("p") = 3.0, py::arg("alpha") = 1.0, py::arg("beta") = 0.0);
    m.def("catalog_names", &catalog_names);
    m.def("build_rho", &build_rho, py::arg("F"), py::arg("M"), py::arg("L"), py::arg("eta"));

    py::class_<PicardParams>(m, "PicardParams")
        .def(py::init<double, double, double, double, double, int, int>(), py::arg("R"),
             py::arg("M"), py::arg("L"), py::arg("T"), py::arg("delta"), py::arg("ell") = 1,
             py::arg("rank") = 0)
        .def_readonly("R", &PicardParams::R)
        .def_readonly("M", &PicardParams::M)
        .def_readonly("L", &PicardParams::L)
        .def_readonly("T", &PicardParams::T)
        .def_readonly("delta", &PicardParams::delta)
        .def_readonly("ell", &PicardParams::ell)
        .def_readonly("rank", &PicardParams::rank);

    py::class_<PicardModel>(m, "PicardModel")
        .def(py::init<PicardParams, Nonlinearity, SemigroupKind>(), py::arg("params"),
             py::arg("nonlinearity"), py::arg("semigroup"))
        .def_static("fno", &PicardModel::fno, py::arg("params"), py::arg("F"), py::arg("eta"));

    m.def("picard_step", &picard_step);
    m.def("iterate",
          py::overload_cast<const PicardModel&, const TorusField&, int, const GridSpec&>(&iterate),
          py::arg("model"), py::arg("u0"), py::arg("ell"), py::arg("grid"));
    m.def("solve_fixed_point",
          [](const PicardModel& model, const TorusField& u0, double tol, const GridSpec& grid) {
              auto r = solve_fixed_point(model, u0, tol, grid);
              return py::make_tuple(r.trajectory, r.iterations, r.a_posteriori);
          });
    m.def("truncation_error", &truncation_error);

    py::class_<InitialLaw>(m, "InitialLaw")
        .def(py::init([](double s_gp, double sigma, int band, double s0, double r0,
                         double sup_bound, std::uint64_t seed) {
                 InitialLaw law;
                 law.s_gp = s_gp;
                 law.sigma = sigma;
                 law.band = band;
                 law.s0 = s0;
                 law.r0 = r0;
                 law.sup_bound = sup_bound;
                 law.seed = seed;
                 return law;
             }),
             py::arg("s_gp") = 3.0, py::arg("sigma") = 1.0, py::arg("band") = 8,
             py::arg("s0") = 2.0, py::arg("r0") = 1.0, py::arg("sup_bound") = 1.0,
             py::arg("seed") = 0);
    m.def("sample_initial",
          [](const InitialLaw& law, const GridSpec& spec, int count) {
              return sample_initial(law, spec, count);
          },
          py::arg("law"), py::arg("spec"), py::arg("count"));

    py::class_<SensorSet>(m, "SensorSet")
        .def_static("equispaced", &SensorSet::equispaced)
        .def("count", &SensorSet::count);
    m.def("observe", [](const SensorSet& s, const TorusField& u) { return observe(s, u).readings; });
    m.def("reconstruct",
          [](const SensorSet& s, const std::vector<double>& readings, const GridSpec& spec,
             double s0, double r0) { return reconstruct(s, Observation{readings}, spec, s0, r0); });
    m.def("reconstruction_error", &reconstruction_error);

    m.def("clipped_loss", &clipped_loss);
    m.def("plan_budget",
          [](const PicardParams& p, long long n, double beta, double alpha) {
              auto plan = plan_budget(p, n, beta, alpha);
              return py::make_tuple(plan.ell_n, plan.m_n, plan.clamped);
          });

    m.def("terminal_trace", &terminal_trace);
    m.def("clip_state", &clip_state);
    m.def("stability_envelope",
          [](const PicardParams& p, int kappa, double eps_loc, bool dissipative, double lambda) {
              return stability_envelope(p, kappa, eps_loc,
                                        dissipative ? EnvelopeMode::dissipative_rate(lambda)
                                                    : EnvelopeMode::generic());
          },
          py::arg("params"), py::arg("kappa"), py::arg("eps_loc"), py::arg("dissipative") = false,
          py::arg("lambda") = 0.0);

    m.def("run_scenario_config",
          [](const std::string& config_path, const std::string& scenario,
             const std::string& out_dir) {
              ExperimentConfig cfg = load_config(config_path);
              if (!scenario.empty()) cfg.scenario = scenario;
              if (!out_dir.empty()) cfg.output_dir = out_dir;
              const auto r = run_scenario(cfg);
              return py::make_tuple(r.passed, r.files_written, r.summary.dump());
          },
          py::arg("config_path"), py::arg("scenario") = "", py::arg("out_dir") = "");

    m.attr("__version__") = "0.1.0";
}
