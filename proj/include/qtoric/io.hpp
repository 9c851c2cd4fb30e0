#pragma once

// JSON schemas. The input bundle is
//   {"name": ..., "dim": n, "facets": m,
//    "vertices": [[i, j, ...], ...], "lambda": [[...], ...]}
// with 0-based facet indices. Rationals serialize as ["num", "den"]
// string pairs so certificates survive round trips exactly; plain JSON
// integers are accepted on input.

#include "qtoric/charalg.hpp"
#include "qtoric/matrix.hpp"
#include "qtoric/polytope.hpp"
#include "qtoric/qtype.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace qtoric {

using Json = nlohmann::json;

struct InputBundle {
    std::string name;
    SimplePolytope polytope;
    CharacteristicMatrix lambda;
};

inline Json to_json(const Rational& r) {
    return Json::array({numerator(r).str(), denominator(r).str()});
}

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Integer(s));
        return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    }
    if (j.is_array() && j.size() == 2) {
        auto part = [](const Json& e) {
            return e.is_string() ? Integer(e.get<std::string>()) : Integer(e.get<long long>());
        };
        Integer den = part(j[1]);
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        return Rational(part(j[0]), den);
    }
    throw std::invalid_argument("expected a rational as integer, \"p/q\" or [num, den]");
}

inline Json to_json(const QMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline QMatrix qmatrix_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a matrix (array of rows)");
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j[0].size() : 0;
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
    }
    return m;
}

inline Json to_json(const QVector& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(to_json(r));
    return out;
}

inline QVector qvector_from_json(const Json& j) {
    QVector out;
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

inline Json to_json(const InputBundle& b) {
    Json j;
    if (!b.name.empty()) j["name"] = b.name;
    j["dim"] = b.polytope.dim_n;
    j["facets"] = b.polytope.num_facets;
    j["vertices"] = b.polytope.vertices;
    Json lam = Json::array();
    for (std::size_t r = 0; r < b.lambda.lambda.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < b.lambda.lambda.cols(); ++c)
            row.push_back(b.lambda.lambda(r, c).convert_to<long long>());
        lam.push_back(std::move(row));
    }
    j["lambda"] = std::move(lam);
    return j;
}

inline InputBundle bundle_from_json(const Json& j) {
    InputBundle b;
    if (j.contains("name")) b.name = j.at("name").get<std::string>();
    if (!j.contains("dim") || !j.contains("facets") || !j.contains("vertices"))
        throw std::invalid_argument("bundle needs \"dim\", \"facets\" and \"vertices\"");
    b.polytope.dim_n = j.at("dim").get<int>();
    b.polytope.num_facets = j.at("facets").get<int>();
    for (const auto& v : j.at("vertices")) {
        std::vector<int> vertex;
        for (const auto& f : v) {
            if (!f.is_number_integer()) throw std::invalid_argument("vertex entries must be integers");
            vertex.push_back(f.get<int>());
        }
        b.polytope.vertices.push_back(std::move(vertex));
    }
    if (j.contains("lambda")) {
        const Json& lam = j.at("lambda");
        const std::size_t rows = lam.size();
        const std::size_t cols = rows ? lam[0].size() : 0;
        b.lambda.lambda = IMatrix(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            if (lam[r].size() != cols) throw std::invalid_argument("ragged lambda rows");
            for (std::size_t c = 0; c < cols; ++c) {
                if (!lam[r][c].is_number_integer())
                    throw std::invalid_argument("lambda entries must be integers");
                b.lambda.lambda(r, c) = Integer(lam[r][c].get<long long>());
            }
        }
    }
    return b;
}

// --- certificates -------------------------------------------------------

inline Json to_json_qtype_certificate(const PdCertificate& c) {
    Json j;
    j["type"] = "qtype_certificate";
    j["dim"] = c.member.rows();
    j["matrix"] = to_json(c.member);
    return j;
}

inline Json to_json_qtype_refutation(const DualWitness& w) {
    Json j;
    j["type"] = "qtype_refutation";
    j["dim"] = w.witness.rows();
    j["matrix"] = to_json(w.witness);
    return j;
}

inline Json to_json_sos_certificate(const SosCertificate& c) {
    Json j;
    j["type"] = "sos_certificate";
    j["dim"] = c.psd_gram.rows();
    j["psd_gram"] = to_json(c.psd_gram);
    Json squares = Json::array();
    for (const auto& a : c.squares) squares.push_back(to_json(a));
    j["squares"] = std::move(squares);
    return j;
}

inline Json to_json_sos_refutation(const DualWitness& w) {
    Json j;
    j["type"] = "sos_refutation";
    j["dim"] = w.witness.rows();
    j["matrix"] = to_json(w.witness);
    return j;
}

// Re-check a serialized certificate against the (recomputed) presentation.
// Exact arithmetic throughout; returns a human-readable failure reason.
inline bool verify_certificate_json(const Json& cert, const SimplePolytope& p,
                                    const CharacteristicMatrix& lam, std::string& reason) {
    if (!cert.contains("type")) {
        reason = "certificate has no \"type\" field";
        return false;
    }
    const std::string type = cert.at("type").get<std::string>();
    GradedRingPresentation pres = presentation(p, lam);
    if (type == "qtype_certificate" || type == "qtype_refutation") {
        std::vector<QMatrix> ideal = pres.quadratic_ideal_matrices();
        QMatrix m = qmatrix_from_json(cert.at("matrix"));
        if (m.rows() != pres.h2_dim()) {
            reason = "matrix dimension differs from dim H^2";
            return false;
        }
        if (type == "qtype_certificate") {
            if (ideal.empty()) {
                reason = "quadratic ideal part is zero; no definite member can exist";
                return false;
            }
            if (!verify_pd_certificate(ideal, PdCertificate{m})) {
                reason = "matrix is not an exactly verified definite member of the ideal part";
                return false;
            }
            return true;
        }
        if (!verify_subspace_refutation(ideal, DualWitness{m})) {
            reason = "matrix is not an exactly verified dual witness";
            return false;
        }
        return true;
    }
    if (type == "sos_certificate" || type == "sos_refutation") {
        PontrjaginClass p1 = pontrjagin_p1(pres);
        if (type == "sos_certificate") {
            SosCertificate c;
            c.psd_gram = qmatrix_from_json(cert.at("psd_gram"));
            for (const auto& a : cert.at("squares")) c.squares.push_back(qvector_from_json(a));
            if (!verify_sos_certificate(pres, p1.h4_image, c)) {
                reason = "certificate fails exact re-verification";
                return false;
            }
            return true;
        }
        DualWitness w{qmatrix_from_json(cert.at("matrix"))};
        if (!verify_sos_refutation(pres, p1.form.gram, w)) {
            reason = "witness fails exact re-verification";
            return false;
        }
        return true;
    }
    reason = "unknown certificate type \"" + type + "\"";
    return false;
}

}  // namespace qtoric
