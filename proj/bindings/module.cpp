#include <pybind11/pybind11.h>

#include "tri/json_io.hpp"
#include "tri/selftest.hpp"

namespace py = pybind11;

namespace {

using tri::json;

std::string compute_triangulant(const std::string& a_json, const std::string& b_json,
                                bool diagnostics) {
    tri::Matrix a = tri::matrix_from_json(json::parse(a_json));
    tri::Matrix b = tri::matrix_from_json(json::parse(b_json));
    return tri::triangulant_report_to_json(tri::triangulant(a, b, diagnostics)).dump();
}

std::string compute_triangulant_k(const std::string& a_json, const std::string& b_json, int k,
                                  std::uint64_t seed, bool force_interpolation) {
    tri::Matrix a = tri::matrix_from_json(json::parse(a_json));
    tri::Matrix b = tri::matrix_from_json(json::parse(b_json));
    tri::TkOptions opts;
    opts.seed = seed;
    opts.force_interpolation = force_interpolation;
    return tri::triangulant_k_report_to_json(tri::triangulant_k(a, b, k, opts)).dump();
}

std::string compute_spectrum(const std::string& a_json) {
    tri::Matrix a = tri::matrix_from_json(json::parse(a_json));
    json out = tri::spectrum_to_json(tri::spectrum(a));
    tri::UniPoly cp = tri::charpoly(a);
    json coeffs = json::array();
    for (const auto& c : cp.coeffs) coeffs.push_back(c.str());
    out["charpoly"] = {{"coeffs", coeffs}, {"display", cp.str()}};
    return out.dump();
}

std::string run_oracle(const std::string& a_json, const std::string& b_json, int k) {
    tri::Matrix a = tri::matrix_from_json(json::parse(a_json));
    tri::Matrix b = tri::matrix_from_json(json::parse(b_json));
    return tri::oracle_report_to_json(tri::theorem_k_oracle(a, b, k)).dump();
}

std::string mub_certify(const std::string& bases_json, double tol) {
    auto bases = tri::bases_from_json(json::parse(bases_json), tol);
    json pairs = json::array();
    bool verdict = true;
    for (size_t i = 0; i < bases.size(); ++i)
        for (size_t j = i + 1; j < bases.size(); ++j) {
            tri::MubCertificate cert = tri::check_unbiased(bases[i], bases[j], tol);
            json entry = tri::mub_certificate_to_json(cert);
            entry["i"] = i;
            entry["j"] = j;
            pairs.push_back(entry);
            verdict = verdict && cert.verdict;
        }
    return json{{"pairs", pairs}, {"verdict", verdict}}.dump();
}

std::string mub_construct(int p) {
    return tri::bases_to_json(tri::weyl_heisenberg_bases(p)).dump();
}

std::string selftest(std::uint64_t seed, bool full) {
    tri::SelftestReport rep = tri::run_selftest(seed, full);
    json suites = json::array();
    for (const auto& s : rep.suites)
        suites.push_back({{"name", s.name}, {"passed", s.passed}, {"failed", s.failed}});
    return json{{"suites", suites}, {"ok", rep.ok()}}.dump();
}

}  // namespace

PYBIND11_MODULE(_triangulant, m) {
    m.doc() = "exact triangulant computations for matrix pairs";
    py::register_exception<tri::FieldError>(m, "FieldError");
    m.def("triangulant", &compute_triangulant, py::arg("a_json"), py::arg("b_json"),
          py::arg("diagnostics") = false);
    m.def("triangulant_k", &compute_triangulant_k, py::arg("a_json"), py::arg("b_json"),
          py::arg("k"), py::arg("seed") = 20240915, py::arg("force_interpolation") = false);
    m.def("spectrum", &compute_spectrum, py::arg("a_json"));
    m.def("oracle", &run_oracle, py::arg("a_json"), py::arg("b_json"), py::arg("k"));
    m.def("mub_certify", &mub_certify, py::arg("bases_json"), py::arg("tol") = 1e-8);
    m.def("mub_construct", &mub_construct, py::arg("p"));
    m.def("selftest", &selftest, py::arg("seed") = 20240915, py::arg("full") = false);
}
