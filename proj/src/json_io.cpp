#include "tri/json_io.hpp"

namespace tri {

json field_to_json(const FieldDescriptor& d) {
    json j;
    j["kind"] = to_string(d.kind);
    if (d.kind == FieldKind::prime_field) j["p"] = d.modulus;
    if (d.kind == FieldKind::complex_float) j["tol"] = d.tolerance;
    return j;
}

FieldDescriptor field_from_json(const json& j) {
    FieldKind kind = field_kind_from_string(j.at("kind").get<std::string>());
    switch (kind) {
        case FieldKind::rational: return FieldDescriptor::rational();
        case FieldKind::gaussian_rational: return FieldDescriptor::gaussian_rational();
        case FieldKind::prime_field: return FieldDescriptor::prime_field(j.at("p").get<std::uint64_t>());
        case FieldKind::complex_float:
            return FieldDescriptor::complex_float(j.value("tol", 1e-10));
    }
    throw FieldError("bad field kind");
}

json matrix_to_json(const Matrix& m) {
    json j;
    j["field"] = field_to_json(m.descriptor());
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).str());
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

Matrix matrix_from_json(const json& j) {
    FieldDescriptor d = field_from_json(j.at("field"));
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    const json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows) throw FieldError("entry row count mismatch");
    Matrix m(d, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = entries.at(static_cast<size_t>(i));
        if (static_cast<int>(row.size()) != cols) throw FieldError("entry column count mismatch");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = parse_scalar(row.at(static_cast<size_t>(c)).get<std::string>(), d);
    }
    return m;
}

json spectrum_to_json(const SpectrumReport& rep) {
    json j;
    j["split"] = rep.split;
    switch (rep.backend) {
        case SpectrumBackend::exact_roots: j["backend"] = "exact_rational_roots"; break;
        case SpectrumBackend::user_supplied: j["backend"] = "user_supplied"; break;
        case SpectrumBackend::numeric: j["backend"] = "numeric"; break;
    }
    json eigs = json::array();
    for (const auto& e : rep.eigenvalues)
        eigs.push_back({{"value", e.value.str()},
                        {"algebraic_mult", e.algebraic},
                        {"geometric_mult", e.geometric}});
    j["eigenvalues"] = eigs;
    return j;
}

json triangulant_report_to_json(const TriangulantReport& rep) {
    json j;
    j["value"] = rep.value.str();
    j["n"] = rep.n;
    j["method"] = rep.method == TriangulantMethod::direct_determinant ? "direct_determinant"
                                                                      : "diagonal_formula";
    if (rep.kernel_dim) j["kernel_dim"] = *rep.kernel_dim;
    if (rep.n == 1) j["degenerate_by_convention"] = true;
    return j;
}

json triangulant_k_report_to_json(const TriangulantKReport& rep) {
    json j;
    j["value"] = rep.value.str();
    j["k"] = rep.k;
    j["method"] = to_string(rep.method);
    if (rep.gk_a) j["gk_a"] = rep.gk_a->str();
    if (rep.gk_b) j["gk_b"] = rep.gk_b->str();
    if (rep.t_upstairs) j["t_upstairs"] = rep.t_upstairs->str();
    if (rep.samples_used) j["samples_used"] = *rep.samples_used;
    return j;
}

json oracle_report_to_json(const OracleReport& rep) {
    json j;
    j["degenerate_pair_exists"] = rep.degenerate_pair_exists;
    if (rep.witness) {
        j["witness"] = {{"S", rep.witness->first}, {"T", rep.witness->second}};
    }
    return j;
}

json mub_certificate_to_json(const MubCertificate& cert) {
    json j;
    j["pair_deviations"] = cert.pair_deviations;
    j["max_deviation"] = cert.max_deviation;
    j["triangulant_magnitude"] = cert.triangulant_magnitude;
    j["bound"] = cert.bound;
    j["saturated"] = cert.saturated;
    j["verdict"] = cert.verdict;
    return j;
}

json bases_to_json(const std::vector<OrthonormalBasis>& bases) {
    json j;
    j["n"] = bases.empty() ? 0 : bases[0].n;
    json bs = json::array();
    for (const auto& b : bases) {
        json cols = json::array();
        for (int c = 0; c < b.n; ++c) {
            json col = json::array();
            for (int i = 0; i < b.n; ++i) col.push_back(b.columns.at(i, c).str());
            cols.push_back(col);
        }
        bs.push_back(cols);
    }
    j["bases"] = bs;
    return j;
}

std::vector<OrthonormalBasis> bases_from_json(const json& j, double tol) {
    int n = j.at("n").get<int>();
    FieldDescriptor d = FieldDescriptor::complex_float();
    std::vector<OrthonormalBasis> out;
    for (const json& basis : j.at("bases")) {
        if (static_cast<int>(basis.size()) != n) throw FieldError("basis column count mismatch");
        Matrix cols(d, n, n);
        for (int c = 0; c < n; ++c) {
            const json& col = basis.at(static_cast<size_t>(c));
            if (static_cast<int>(col.size()) != n) throw FieldError("basis vector length mismatch");
            for (int i = 0; i < n; ++i)
                cols.at(i, c) = parse_scalar(col.at(static_cast<size_t>(i)).get<std::string>(), d);
        }
        out.push_back(make_basis(cols, tol));
    }
    return out;
}

}  // namespace tri
