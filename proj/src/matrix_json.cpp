#include "qclone/matrix_json.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "qclone/errors.hpp"

namespace qclone {

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const cdouble& e : m.entries) entries.push_back({e.real(), e.imag()});
    return {{"dim", m.dim}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
        throw DimensionMismatch("matrix json: expected an object with integer 'dim'");
    const int dim = j["dim"].get<int>();
    if (dim <= 0) throw DimensionMismatch("matrix json: 'dim' must be positive");
    if (!j.contains("entries") || !j["entries"].is_array())
        throw DimensionMismatch("matrix json: missing 'entries' array");
    const auto& entries = j["entries"];
    const std::size_t want = static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
    if (entries.size() != want)
        throw DimensionMismatch("matrix json: expected " + std::to_string(want) + " entries, got " +
                                std::to_string(entries.size()));

    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < want; ++i) {
        const auto& pair = entries[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw DimensionMismatch("matrix json: entries must be [re, im] pairs");
        const double re = pair[0].get<double>();
        const double im = pair[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im))
            throw DimensionMismatch("matrix json: entries must be finite");
        m.entries[i] = cdouble(re, im);
    }
    return m;
}

ComplexMatrix read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return matrix_from_json(j);
}

void write_matrix(const std::string& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << matrix_to_json(m).dump(1) << '\n';
}

} // namespace qclone
