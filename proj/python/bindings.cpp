#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <homcalc/cli.hpp>
#include <homcalc/equivalence.hpp>
#include <homcalc/errors.hpp>
#include <homcalc/fixtures.hpp>
#include <homcalc/io.hpp>

namespace py = pybind11;
using namespace homcalc;

namespace
{

CheckConfig config(std::uint64_t seed, int trials, int max_degree)
{
    CheckConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.max_degree = max_degree;
    return cfg;
}

HomAlgebroid algebroid(const std::string &text)
{
    return algebroid_from_json(parse_json_text(text));
}

std::string with_algebroid(const Report &report, const std::optional<HomAlgebroid> &ab)
{
    return dump_json(Json{{"report", report.to_json()},
                          {"algebroid", ab ? algebroid_to_json(*ab) : Json(nullptr)}});
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact Hom-Lie algebroid checks (JSON in, JSON out)";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<StructureError>(m, "StructureError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);

    m.def("builtin", [](const std::string &name) { return dump_json(algebroid_to_json(builtin_algebroid(name))); },
          py::arg("name"));
    m.def("builtin_names", &builtin_algebroid_names);

    m.def(
        "check",
        [](const std::string &text, std::uint64_t seed, int trials, int max_degree) {
            py::gil_scoped_release release;
            Report r = check_axioms(algebroid(text), config(seed, trials, max_degree));
            return dump_json(r.to_json());
        },
        py::arg("instance"), py::arg("seed") = 7, py::arg("trials") = 8, py::arg("max_degree") = 2);

    m.def(
        "differential",
        [](const std::string &text, int s, const std::string &function, const std::string &args) {
            const HomAlgebroid ab = algebroid(text);
            const std::vector<Section> sections = parse_sections(args, ab);
            if (sections.size() != 1) {
                throw StructureError("d^s of a function takes one section");
            }
            const DifferentialFamily fam(std::make_shared<const HomAlgebroid>(ab));
            return fam.evaluate(s, Cochain::function(ab.base().parse(function)), sections).to_string();
        },
        py::arg("instance"), py::arg("s"), py::arg("function"), py::arg("args"));

    m.def(
        "reconstruct",
        [](const std::string &text, std::uint64_t seed, int trials, int max_degree) {
            py::gil_scoped_release release;
            const RoundTripResult rt = round_trip(algebroid(text), config(seed, trials, max_degree));
            return with_algebroid(rt.report, rt.report.passed() ? rt.reconstruction : std::nullopt);
        },
        py::arg("instance"), py::arg("seed") = 7, py::arg("trials") = 8, py::arg("max_degree") = 2);

    m.def(
        "convert",
        [](const std::string &text, const std::string &target, std::uint64_t seed, int trials,
           int max_degree) {
            const Variant v = parse_variant(target);
            py::gil_scoped_release release;
            const ConvertResult c = convert(algebroid(text), v, config(seed, trials, max_degree));
            return with_algebroid(c.report, c.algebroid);
        },
        py::arg("instance"), py::arg("target"), py::arg("seed") = 7, py::arg("trials") = 8,
        py::arg("max_degree") = 2);

    // Everything else (Hom-Lie inputs, proptest) goes through the command
    // line surface so the two stay in step.
    m.def(
        "run",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
