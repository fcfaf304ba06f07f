#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eisarc/report.hpp"

namespace py = pybind11;
using namespace eisarc;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Eisenstein-series arc evaluation, zero location and bound verification";

    py::class_<UpperHalfPoint>(m, "UpperHalfPoint")
        .def(py::init<double, double>(), py::arg("re"), py::arg("im"))
        .def_readwrite("re", &UpperHalfPoint::re)
        .def_readwrite("im", &UpperHalfPoint::im)
        .def("__repr__", [](const UpperHalfPoint& t) {
            return "UpperHalfPoint(re=" + format_double(t.re) + ", im=" + format_double(t.im) +
                   ")";
        });

    py::class_<SeriesValue>(m, "SeriesValue")
        .def_readonly("value", &SeriesValue::value)
        .def_readonly("abs_error_bound", &SeriesValue::abs_error_bound);

    py::enum_<FormKind>(m, "FormKind")
        .value("single", FormKind::single)
        .value("power_sum", FormKind::power_sum)
        .value("product_sum", FormKind::product_sum);

    py::enum_<Sign>(m, "Sign").value("plus", Sign::plus).value("minus", Sign::minus);

    py::class_<FormSpec>(m, "FormSpec")
        .def_static("single", &FormSpec::single, py::arg("k"))
        .def_static("power", &FormSpec::power, py::arg("n"), py::arg("k"))
        .def_static("product", &FormSpec::product, py::arg("k"), py::arg("l"),
                    py::arg("sign") = Sign::plus)
        .def_readonly("kind", &FormSpec::kind)
        .def_readonly("k", &FormSpec::k)
        .def_readonly("n", &FormSpec::n)
        .def_readonly("l", &FormSpec::l)
        .def_readonly("sign", &FormSpec::sign)
        .def("weight", &FormSpec::weight)
        .def("name", &FormSpec::name)
        .def("__repr__", [](const FormSpec& f) { return "FormSpec(" + f.name() + ")"; });

    py::class_<ArcValue>(m, "ArcValue")
        .def_readonly("real_part", &ArcValue::real_part)
        .def_readonly("imag_leak", &ArcValue::imag_leak);

    py::class_<WeightDecomposition>(m, "WeightDecomposition")
        .def_readonly("weight", &WeightDecomposition::weight)
        .def_readonly("n", &WeightDecomposition::n)
        .def_readonly("s", &WeightDecomposition::s);

    py::class_<PowerDecomposition>(m, "PowerDecomposition")
        .def_readonly("k", &PowerDecomposition::k)
        .def_readonly("n", &PowerDecomposition::n)
        .def_readonly("l_n", &PowerDecomposition::l_n)
        .def_readonly("s_n", &PowerDecomposition::s_n);

    py::class_<SamplePoint>(m, "SamplePoint")
        .def_readonly("m", &SamplePoint::m)
        .def_readonly("theta", &SamplePoint::theta)
        .def_readonly("odd", &SamplePoint::odd);

    py::enum_<MultiplicityNote>(m, "MultiplicityNote")
        .value("simple", MultiplicityNote::simple)
        .value("endpoint_forced", MultiplicityNote::endpoint_forced);

    py::class_<ZeroRecord>(m, "ZeroRecord")
        .def_readonly("theta_hat", &ZeroRecord::theta_hat)
        .def_readonly("tau_hat", &ZeroRecord::tau_hat)
        .def_readonly("residual", &ZeroRecord::residual)
        .def_readonly("bracket_width", &ZeroRecord::bracket_width)
        .def_readonly("note", &ZeroRecord::note);

    py::class_<Bracket>(m, "Bracket")
        .def_readonly("lo", &Bracket::lo)
        .def_readonly("hi", &Bracket::hi)
        .def_readonly("f_lo", &Bracket::f_lo)
        .def_readonly("f_hi", &Bracket::f_hi);

    py::class_<ScanReport>(m, "ScanReport")
        .def_readonly("zeros", &ScanReport::zeros)
        .def_readonly("stalled", &ScanReport::stalled)
        .def_readonly("fallback_grid_used", &ScanReport::fallback_grid_used)
        .def("interior_count", &ScanReport::interior_count);

    py::class_<BoundaryZeroRecord>(m, "BoundaryZeroRecord")
        .def_readonly("y_hat", &BoundaryZeroRecord::y_hat)
        .def_readonly("tau_hat", &BoundaryZeroRecord::tau_hat)
        .def_readonly("residual", &BoundaryZeroRecord::residual)
        .def_readonly("bracket_width", &BoundaryZeroRecord::bracket_width);

    py::class_<LeftBoundaryScan>(m, "LeftBoundaryScan")
        .def_readonly("zeros", &LeftBoundaryScan::zeros)
        .def_readonly("y_max_warning", &LeftBoundaryScan::y_max_warning);

    py::class_<ReducedPoint>(m, "ReducedPoint")
        .def_readonly("tau", &ReducedPoint::tau)
        .def_readonly("matrix", &ReducedPoint::matrix);

    py::class_<ValenceBudget>(m, "ValenceBudget")
        .def_readonly("weight", &ValenceBudget::weight)
        .def_readonly("nu_inf", &ValenceBudget::nu_inf)
        .def_readonly("nu_i_min", &ValenceBudget::nu_i_min)
        .def_readonly("nu_rho_min", &ValenceBudget::nu_rho_min)
        .def_readonly("interior", &ValenceBudget::interior);

    py::enum_<CheckStatus>(m, "CheckStatus")
        .value("ok", CheckStatus::pass)
        .value("fail", CheckStatus::fail)
        .value("warn", CheckStatus::warn);

    py::class_<Witness>(m, "Witness")
        .def_readonly("parameters", &Witness::parameters)
        .def_readonly("observed", &Witness::observed)
        .def_readonly("required", &Witness::required);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("check_id", &VerificationReport::check_id)
        .def_readonly("parameter_range", &VerificationReport::parameter_range)
        .def_readonly("status", &VerificationReport::status)
        .def_readonly("witnesses", &VerificationReport::witnesses)
        .def_readonly("notes", &VerificationReport::notes);

    py::enum_<FormFamily>(m, "FormFamily")
        .value("rsd", FormFamily::rsd)
        .value("power2", FormFamily::power2)
        .value("power3", FormFamily::power3)
        .value("product_plus", FormFamily::product_plus);

    py::enum_<PropId>(m, "PropId")
        .value("R_single", PropId::R_single)
        .value("R_power", PropId::R_power)
        .value("R_product", PropId::R_product)
        .value("M_power2", PropId::M_power2)
        .value("M_power3", PropId::M_power3)
        .value("P_product", PropId::P_product)
        .value("Q_product", PropId::Q_product)
        .value("combined_product", PropId::combined_product);

    py::class_<IntRange>(m, "IntRange")
        .def(py::init<int, int>(), py::arg("lo"), py::arg("hi"))
        .def_readwrite("lo", &IntRange::lo)
        .def_readwrite("hi", &IntRange::hi);

    py::class_<VerifyOptions>(m, "VerifyOptions")
        .def(py::init<>())
        .def_readwrite("grid_density", &VerifyOptions::grid_density)
        .def_readwrite("fallback_grid", &VerifyOptions::fallback_grid)
        .def_readwrite("jobs", &VerifyOptions::jobs)
        .def_readwrite("residual_tol", &VerifyOptions::residual_tol);

    m.def("eval_lattice", &eval_lattice, py::arg("k"), py::arg("tau"), py::arg("radius") = 50,
          "Truncated coprime lattice sum over the disc c^2 + d^2 <= radius^2");
    m.def("eval_qexp", &eval_qexp, py::arg("k"), py::arg("tau"), py::arg("n_terms"),
          "Truncated q-expansion; requires Im(tau) >= 0.5");
    m.def("eval_qexp_auto", &eval_qexp_auto, py::arg("k"), py::arg("tau"));
    m.def("qexp_coefficient_scale", &qexp_coefficient_scale, py::arg("k"));
    m.def("bernoulli_rational", &bernoulli_rational, py::arg("k"),
          "Exact (numerator, denominator) strings for B_k, 0 <= k <= 64");

    m.def("f_k", &f_k, py::arg("k"), py::arg("theta"));
    m.def("main_terms", &main_terms, py::arg("k"), py::arg("theta"));
    m.def("remainder_bound_single", &remainder_bound_single, py::arg("k"));
    m.def("f_power", &f_power, py::arg("n"), py::arg("k"), py::arg("theta"));
    m.def("main_term_power", &main_term_power, py::arg("n"), py::arg("k"), py::arg("theta"));
    m.def("remainder_bound_power", &remainder_bound_power, py::arg("n"), py::arg("k"));
    m.def("g_product", &g_product, py::arg("k"), py::arg("l"), py::arg("theta"),
          py::arg("sign") = Sign::plus);
    m.def("main_term_product", &main_term_product, py::arg("k"), py::arg("l"), py::arg("theta"));
    m.def("pq_split",
          [](int k, int l, int mm) {
              const auto pq = pq_split(k, l, mm);
              return std::make_pair(pq.p, pq.q);
          },
          py::arg("k"), py::arg("l"), py::arg("m"));
    m.def("remainder_bound_product", &remainder_bound_product, py::arg("k"), py::arg("l"));
    m.def("eval_form", &eval_form, py::arg("form"), py::arg("theta"));

    m.def("decompose_weight", &decompose_weight, py::arg("weight"));
    m.def("decompose_power", &decompose_power, py::arg("k"), py::arg("n"));
    m.def("sample_points", py::overload_cast<const FormSpec&>(&sample_points), py::arg("form"));
    m.def("sample_points_for_weight", &sample_points_for_weight, py::arg("weight"));
    m.def("largest_odd_sample_index", &largest_odd_sample_index, py::arg("weight"));
    m.def("m_odd_power", &m_odd_power, py::arg("k"), py::arg("n"));
    m.def("theta_star", &theta_star, py::arg("l"), py::arg("residue_case"));
    m.def("expected_count", &expected_count, py::arg("form"));
    m.def("arc_theta_lo", &arc_theta_lo);
    m.def("arc_theta_hi", &arc_theta_hi);

    m.def("scan_and_refine", &scan_and_refine, py::arg("form"));
    m.def("locate_left_boundary",
          py::overload_cast<const FormSpec&, double>(&locate_left_boundary), py::arg("form"),
          py::arg("y_max") = 4.0);
    m.def("reduce_to_fundamental_domain", &reduce_to_fundamental_domain, py::arg("tau"));
    m.def("in_fundamental_domain", &in_fundamental_domain, py::arg("tau"));

    m.def("valence_budget", &valence_budget, py::arg("weight"), py::arg("nu_inf") = 0);
    m.def("verify_theorem", &verify_theorem, py::arg("family"), py::arg("k_range"),
          py::arg("l_range") = IntRange{0, 0}, py::arg("opts") = VerifyOptions{});
    m.def("verify_prop_bounds", &verify_prop_bounds, py::arg("prop"), py::arg("k_range"),
          py::arg("l_range") = IntRange{0, 0}, py::arg("n") = 0,
          py::arg("opts") = VerifyOptions{});
    m.def("explore_higher_n", &explore_higher_n, py::arg("n"), py::arg("k_range"),
          py::arg("opts") = VerifyOptions{});

    m.attr("__version__") = "0.1.0";
}
