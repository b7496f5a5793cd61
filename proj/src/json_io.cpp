#include "tsj/json_io.hpp"

#include <sstream>

namespace tsj {

using nlohmann::json;

namespace {

json matrix_to_json(const QMatrix& m) {
    json rows = json::array();
    for (long i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

QMatrix matrix_from_json(const json& j, long expected_cols) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    long rows = static_cast<long>(j.size());
    long cols = rows == 0 ? expected_cols : static_cast<long>(j.at(0).size());
    QMatrix m(rows, cols);
    for (long i = 0; i < rows; ++i) {
        const json& row = j.at(static_cast<size_t>(i));
        if (static_cast<long>(row.size()) != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (long c = 0; c < cols; ++c)
            m.at(i, c) = rational_from_string(row.at(static_cast<size_t>(c)).get<std::string>());
    }
    return m;
}

json filtration_to_json(const Filtration& f) {
    json obj = json::object();
    for (const auto& [k, s] : f.jumps()) obj[std::to_string(k)] = matrix_to_json(s.basis());
    return obj;
}

Filtration filtration_from_json(const json& j, long ambient) {
    if (!j.is_object()) throw std::invalid_argument("filtration must be an object index -> basis");
    std::map<long, Subspace> steps;
    for (const auto& [key, val] : j.items()) {
        long idx = std::stol(key);
        steps.emplace(idx, Subspace::row_span(ambient, matrix_from_json(val, ambient)));
    }
    return Filtration::from_steps_unchecked(ambient, std::move(steps));
}

} // namespace

json mhsm_to_json(const Mhsm& m) {
    json out = json::object();
    if (m.has_blocks()) {
        json blocks = json::array();
        for (const auto& b : m.blocks())
            blocks.push_back(json::array(
                {rational_to_string(b.alpha.value()), b.p, b.w, b.k, b.mult}));
        out["blocks"] = std::move(blocks);
    }
    if (m.has_parts()) {
        json parts = json::array();
        for (const auto& [alpha, part] : m.parts()) {
            json p = json::object();
            p["alpha"] = rational_to_string(alpha);
            p["dim"] = part.dim;
            p["F"] = filtration_to_json(part.F);
            p["W"] = filtration_to_json(part.W);
            p["N"] = matrix_to_json(part.N);
            parts.push_back(std::move(p));
        }
        out["parts"] = std::move(parts);
    }
    return out;
}

Mhsm mhsm_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("structure must be a JSON object");
    std::optional<std::map<Rational, MhsmPart>> parts;
    std::optional<std::vector<ElementaryBlock>> blocks;
    if (j.contains("parts")) {
        parts.emplace();
        for (const json& pj : j.at("parts")) {
            Rational alpha = rational_from_string(pj.at("alpha").get<std::string>());
            MhsmPart part;
            part.dim = pj.at("dim").get<long>();
            part.N = matrix_from_json(pj.at("N"), part.dim);
            if (part.N.rows() != part.dim || part.N.cols() != part.dim)
                throw std::invalid_argument("N has wrong shape");
            part.F = filtration_from_json(pj.at("F"), part.dim);
            part.W = filtration_from_json(pj.at("W"), part.dim);
            if (parts->count(alpha)) throw std::invalid_argument("duplicate part exponent");
            parts->emplace(alpha, std::move(part));
        }
    }
    if (j.contains("blocks")) {
        blocks.emplace();
        for (const json& bj : j.at("blocks")) {
            if (!bj.is_array() || bj.size() != 5)
                throw std::invalid_argument("block shorthand must be [alpha, p, w, k, mult]");
            blocks->push_back({EigExp(rational_from_string(bj.at(0).get<std::string>())),
                               bj.at(1).get<long>(), bj.at(2).get<long>(), bj.at(3).get<long>(),
                               bj.at(4).get<long>()});
        }
    }
    if (parts && blocks) return Mhsm::from_blocks_and_parts(*blocks, std::move(*parts));
    if (parts) return Mhsm::from_parts(std::move(*parts));
    if (blocks) return Mhsm::from_blocks(*blocks);
    throw std::invalid_argument("structure needs a \"parts\" or \"blocks\" field");
}

json monrep_to_json(const MonRep& r) {
    json blocks = json::array();
    for (const auto& b : r.blocks()) {
        json e = json::object();
        e["alpha"] = rational_to_string(b.exp.value());
        e["size"] = b.size;
        e["mult"] = b.mult;
        blocks.push_back(std::move(e));
    }
    json out = json::object();
    out["blocks"] = std::move(blocks);
    return out;
}

MonRep monrep_from_json(const json& j) {
    if (!j.is_object() || !j.contains("blocks"))
        throw std::invalid_argument("representation needs a \"blocks\" field");
    std::vector<MonRepBlock> blocks;
    for (const json& bj : j.at("blocks"))
        blocks.push_back({EigExp(rational_from_string(bj.at("alpha").get<std::string>())),
                          bj.at("size").get<long>(), bj.at("mult").get<long>()});
    return MonRep{blocks};
}

json spectral_pairs_to_json(const std::vector<SpectralPair>& sp) {
    json arr = json::array();
    for (const auto& p : sp)
        arr.push_back(json::array({rational_to_string(p.s), p.w, p.mult}));
    return arr;
}

std::string spectral_pairs_to_csv(const std::vector<SpectralPair>& sp) {
    std::ostringstream os;
    os << "s,w,mult\n";
    for (const auto& p : sp) os << rational_to_string(p.s) << "," << p.w << "," << p.mult << "\n";
    return os.str();
}

std::string spectral_pairs_to_text(const std::vector<SpectralPair>& sp) {
    std::ostringstream os;
    for (const auto& p : sp)
        os << rational_to_string(p.s) << " (weight " << p.w << ") x" << p.mult << "\n";
    return os.str();
}

} // namespace tsj
