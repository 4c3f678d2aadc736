#include "mubkit/json_io.hpp"

namespace mubkit {

json matrix_to_json(const CMatrix& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    if (!m.exact()) {
        j["repr"] = "float";
        json entries = json::array();
        for (int i = 0; i < m.rows(); ++i)
            for (int c = 0; c < m.cols(); ++c)
                entries.push_back({m.fl(i, c).real(), m.fl(i, c).imag()});
        j["entries"] = entries;
        return j;
    }
    j["repr"] = "exact";
    // factor out the common scale; all library exports carry a uniform one
    long long order = 1, rad = 1;
    Rational rat(1);
    bool found = false;
    for (int i = 0; i < m.rows() && !found; ++i)
        for (int c = 0; c < m.cols() && !found; ++c)
            if (!m.ex(i, c).is_zero()) {
                rad = m.ex(i, c).rad();
                found = true;
            }
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c) {
            order = std::max(order, m.ex(i, c).order());
            if (!m.ex(i, c).is_zero() && m.ex(i, c).rad() != rad)
                fail("ScaleMismatch", "matrix entries carry mixed radicands");
        }
    j["order"] = order;
    j["scalePow"] = rad == 1 ? 0 : 1;
    j["scaleRat"] = rat.str();
    j["scaleBase"] = rad;
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c) {
            json coeffs = json::array();
            for (const auto& x : m.ex(i, c).coeffs_at_order(order)) coeffs.push_back(x.str());
            entries.push_back(coeffs);
        }
    j["entries"] = entries;
    return j;
}

CMatrix matrix_from_json(const json& j) {
    int rows = j.at("rows"), cols = j.at("cols");
    if (j.at("repr") == "float") {
        CMatrix m = CMatrix::zeros(rows, cols);
        const auto& entries = j.at("entries");
        for (int i = 0; i < rows; ++i)
            for (int c = 0; c < cols; ++c) {
                const auto& e = entries.at(static_cast<size_t>(i) * cols + c);
                m.fl(i, c) = cdouble(e.at(0).get<double>(), e.at(1).get<double>());
            }
        return m;
    }
    long long order = j.at("order");
    long long rad = j.value("scaleBase", 1);
    int pw = j.at("scalePow");
    Rational rat = Rational::parse(j.at("scaleRat").get<std::string>());
    CMatrix m = CMatrix::zeros_exact(rows, cols);
    const auto& entries = j.at("entries");
    Cyclo scale = pw == 0 ? Cyclo(rat) : Cyclo::scaled(rat, rad);
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) {
            const auto& coeffs = entries.at(static_cast<size_t>(i) * cols + c);
            Cyclo acc;
            for (size_t k = 0; k < coeffs.size(); ++k) {
                Rational ck = Rational::parse(coeffs.at(k).get<std::string>());
                if (!ck.is_zero()) acc += ck * Cyclo::root_of_unity(order, static_cast<long long>(k));
            }
            m.ex(i, c) = scale * acc;
        }
    return m;
}

} // namespace mubkit
