#ifndef TRI_JSON_IO_HPP
#define TRI_JSON_IO_HPP

#include <json.hpp>

#include "tri/mub.hpp"
#include "tri/spectra.hpp"
#include "tri/triangulant_k.hpp"

namespace tri {

using json = nlohmann::json;

json field_to_json(const FieldDescriptor& d);
FieldDescriptor field_from_json(const json& j);

// {"field": {...}, "rows": n, "cols": m, "entries": [[string, ...], ...]}
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json spectrum_to_json(const SpectrumReport& rep);
json triangulant_report_to_json(const TriangulantReport& rep);
json triangulant_k_report_to_json(const TriangulantKReport& rep);
json oracle_report_to_json(const OracleReport& rep);
json mub_certificate_to_json(const MubCertificate& cert);

// {"n": int, "bases": [[["re,im", ...], ...], ...]}, columns as vectors
json bases_to_json(const std::vector<OrthonormalBasis>& bases);
std::vector<OrthonormalBasis> bases_from_json(const json& j, double tol);

}  // namespace tri

#endif
