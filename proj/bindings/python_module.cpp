#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alres/json_io.hpp"

namespace py = pybind11;
using namespace alres;

namespace {

RegionTag tag_from(const std::string& name)
{
    auto t = region_from_name(name);
    if (!t)
        fail(ErrorCode::InvalidArgument, "unknown region tag '" + name + "'");
    return *t;
}

WindowBounds bounds_from(const Potential& p, const std::optional<std::vector<int>>& window)
{
    if (!window)
        return default_window(p);
    if (window->size() != 4)
        fail(ErrorCode::InvalidArgument, "window must be [m_lo, m_hi, n_lo, n_hi]");
    return WindowBounds{(*window)[0], (*window)[1], (*window)[2], (*window)[3]};
}

} // namespace

PYBIND11_MODULE(_alres, m)
{
    m.doc() = "Exact extended-resolvent kernels of the Ablowitz-Ladik operator "
              "with binary potential";

    py::register_exception<Error>(m, "AlresError");

    py::class_<Potential>(m, "Potential")
        .def(py::init<int, std::vector<int>, std::vector<int>>(), py::arg("k"), py::arg("r"),
             py::arg("s"))
        .def_static("from_json",
                    [](const std::string& text) {
                        return io::potential_from_json(io::json::parse(text, nullptr, true));
                    })
        .def_static("load", &io::load_potential_file)
        .def_property_readonly("k", &Potential::k)
        .def_property_readonly("K", &Potential::K)
        .def_property_readonly("Q", &Potential::Q)
        .def_property_readonly("degenerate_sites", &Potential::degenerate_sites)
        .def("q_count", &Potential::q_count)
        .def("to_json", [](const Potential& p) { return io::to_json(p).dump(); })
        .def("__repr__", [](const Potential& p) {
            return "Potential(" + io::to_json(p).dump() + ")";
        });

    m.def("region_classify",
          [](double abs_w, double h) { return std::string(region_name(region_classify(abs_w, h))); },
          py::arg("abs_w"), py::arg("h"));

    m.def("describe_json", [](const Potential& p) {
        io::json j = io::to_json(p);
        j["K"] = p.K();
        j["Q"] = p.Q();
        j["degenerate_sites"] = p.degenerate_sites();
        j["a"] = io::to_json(transition_matrix(p, false));
        j["a_reg"] = io::to_json(transition_matrix(p, true));
        return j.dump();
    });

    m.def(
        "entry_json",
        [](const Potential& p, const std::string& region, int mm, int nn, bool limit) {
            const RegionTag t = tag_from(region);
            const WindowBounds b{mm, mm, nn, nn};
            const KernelWindow w =
                limit ? limit_resolvent_window(p, t, b) : resolvent_window(p, t, b, true);
            io::json j{{"h_exp", KernelWindow::h_exponent(mm, nn)},
                       {"m", mm},
                       {"matrix", io::to_json(w.at(mm, nn))},
                       {"n", nn},
                       {"region", region_name(t)}};
            return j.dump();
        },
        py::arg("potential"), py::arg("region"), py::arg("m"), py::arg("n"),
        py::arg("limit") = false);

    m.def(
        "eval_entry",
        [](const Potential& p, const std::string& region, int mm, int nn,
           std::complex<double> w0, std::complex<double> lambda0, bool limit) {
            const RegionTag t = tag_from(region);
            const WindowBounds b{mm, mm, nn, nn};
            const KernelWindow w =
                limit ? limit_resolvent_window(p, t, b) : resolvent_window(p, t, b, true);
            const auto v = w.at(mm, nn).eval(w0, lambda0);
            return std::vector<std::vector<std::complex<double>>>{{v[0], v[1]}, {v[2], v[3]}};
        },
        py::arg("potential"), py::arg("region"), py::arg("m"), py::arg("n"), py::arg("w0"),
        py::arg("lambda0") = std::complex<double>(0.0, 0.0), py::arg("limit") = false);

    m.def(
        "expand_json",
        [](const Potential& p, const std::optional<std::vector<int>>& window) {
            return io::to_json(lambda_expansion(p, bounds_from(p, window))).dump();
        },
        py::arg("potential"), py::arg("window") = std::nullopt);

    m.def(
        "verify_json",
        [](const Potential& p) {
            const auto reports = run_all_suites(p);
            return py::make_tuple(io::to_json(reports).dump(), all_pass(reports));
        },
        py::arg("potential"));

    m.def(
        "transition_json",
        [](const Potential& p, bool regularized) {
            return io::to_json(transition_matrix(p, regularized)).dump();
        },
        py::arg("potential"), py::arg("regularized") = true);
}
