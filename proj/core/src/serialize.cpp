#include "fo52/serialize.hpp"

#include <cstddef>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "fo52/errors.hpp"
#include "fo52/euler.hpp"

namespace fo52 {
namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

// Field access errors surface as ParseError, never as library exceptions.
template <typename F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

json rat_rows_to_json(const QMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Rat> rat_row_from_json(const json& row) {
    if (!row.is_array()) throw ParseError("expected an array of rationals");
    std::vector<Rat> out;
    out.reserve(row.size());
    for (const auto& e : row) out.push_back(rat_parse(e.template get<std::string>()));
    return out;
}

QMat rat_rows_from_json(const json& rows) {
    if (!rows.is_array() || rows.empty()) throw ParseError("expected a nonempty array of rows");
    std::vector<std::vector<Rat>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(rat_row_from_json(row));
    return QMat::from_rows(out);
}

} // namespace

std::string multivector_to_json(const PolyMultivector& m) {
    json j;
    j["grade"] = m.grade();
    j["coeff_degree"] = m.coeff_degree();
    json comps = json::array();
    for (const auto& [mask, poly] : m.components()) {
        json c;
        c["index"] = mask_indices(mask);
        json terms = json::array();
        for (const auto& [e, cf] : poly.terms()) {
            json t;
            t["exp"] = std::vector<unsigned>(e.begin(), e.end());
            t["coeff"] = rat_str(cf);
            terms.push_back(std::move(t));
        }
        c["poly"] = std::move(terms);
        comps.push_back(std::move(c));
    }
    j["components"] = std::move(comps);
    return j.dump(2);
}

PolyMultivector multivector_from_json(const std::string& text) {
    return guarded([&] {
        const json j = parse_or_throw(text);
        const unsigned g = j.at("grade").get<unsigned>();
        const unsigned d = j.at("coeff_degree").get<unsigned>();
        PolyMultivector m(g, d);
        for (const auto& c : j.at("components")) {
            const auto idx = c.at("index").get<std::vector<unsigned>>();
            Poly p;
            for (const auto& t : c.at("poly")) {
                const auto ev = t.at("exp").get<std::vector<unsigned>>();
                if (ev.size() != 5) throw ParseError("exponent vector must have 5 entries");
                Exp e{};
                unsigned total = 0;
                for (std::size_t i = 0; i < 5; ++i) {
                    e[i] = static_cast<std::uint8_t>(ev[i]);
                    total += ev[i];
                }
                if (total != d) throw ParseError("term degree disagrees with coeff_degree");
                p.add_term(e, rat_parse(t.at("coeff").template get<std::string>()));
            }
            m.add_component(mask_of(idx), p);
        }
        return m;
    });
}

std::string fixture_to_json(const Fixture& f) {
    json j;
    j["seed"] = f.seed;
    json planes = json::array();
    for (const PlanePoint& p : f.planes) planes.push_back(rat_rows_to_json(p.plane.basis()));
    j["planes"] = std::move(planes);
    j["w_basis"] = rat_rows_to_json(f.w.space.basis());
    return j.dump(2);
}

Fixture fixture_from_json(const std::string& text) {
    return guarded([&] {
        const json j = parse_or_throw(text);
        Fixture f;
        f.seed = j.at("seed").get<std::uint64_t>();
        for (const auto& pj : j.at("planes")) {
            const QMat rows = rat_rows_from_json(pj);
            if (rows.rows() != 2 || rows.cols() != 5)
                throw ParseError("plane basis must be 2x5");
            f.planes.push_back(PlanePoint::from_rows(rows.row(0), rows.row(1)));
        }
        const QMat wb = rat_rows_from_json(j.at("w_basis"));
        if (wb.rows() != 5 || wb.cols() != 10) throw ParseError("w_basis must be 5x10");
        f.w = WSubspace::from_span(wb);
        QMat plucks(f.planes.size(), 10);
        for (std::size_t i = 0; i < f.planes.size(); ++i)
            plucks.set_row(i, f.planes[i].pluck.dense());
        if (!(QSubspace::from_rows(plucks) == f.w.space))
            throw ParseError("planes do not span w_basis");
        return f;
    });
}

std::string pi52_to_json(const Pi52Map& m) {
    json j;
    j["format"] = "fo52.pi52.v1";
    j["grid_seed"] = m.grid_seed;
    j["n_samples"] = m.n_samples;
    j["rank"] = m.rank;
    json cols = json::array();
    for (std::size_t c = 0; c < m.matrix.cols(); ++c) {
        json col = json::array();
        for (std::size_t i = 0; i < m.matrix.rows(); ++i) {
            const Rat& e = m.matrix.at(i, c);
            if (rat_is_zero(e)) continue;
            col.push_back(json::array({i, rat_str(e)}));
        }
        cols.push_back(std::move(col));
    }
    j["columns"] = std::move(cols);
    return j.dump();
}

Pi52Map pi52_from_json(const std::string& text) {
    return guarded([&] {
        const json j = parse_or_throw(text);
        if (j.value("format", "") != std::string("fo52.pi52.v1"))
            throw ParseError("unknown pi52 format tag");
        Pi52Map m;
        m.grid_seed = j.at("grid_seed").get<std::uint64_t>();
        m.n_samples = j.at("n_samples").get<unsigned>();
        m.rank = j.at("rank").get<std::size_t>();
        const auto& cols = j.at("columns");
        if (!cols.is_array() || cols.size() != 252)
            throw ParseError("pi52 columns must be an array of length 252");
        m.matrix = QMat(150, 252);
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& entry : cols[c]) {
                const std::size_t row = entry.at(0).get<std::size_t>();
                if (row >= 150) throw ParseError("pi52 row index out of range");
                m.matrix.at(row, c) = rat_parse(entry.at(1).template get<std::string>());
            }
        m.sample_points = pi52_sample_grid(m.grid_seed, m.n_samples);
        return m;
    });
}

void require_certified(const Pi52Map& m) {
    const EulerReducer& red = EulerReducer::for_grade(2);
    if (m.matrix.rows() != red.ambient_dim() || m.matrix.cols() != 252)
        throw ParseError("pi52 matrix has the wrong shape");
    if (m.rank != red.class_dim())
        throw RankDeficit("pi52 matrix is not rank-126 certified");
    for (std::size_t c = 0; c < m.matrix.cols(); ++c) {
        std::vector<Rat> col(m.matrix.rows());
        for (std::size_t i = 0; i < m.matrix.rows(); ++i) col[i] = m.matrix.at(i, c);
        if (red.reduce_flat(col) != col)
            throw ParseError("pi52 column " + std::to_string(c) + " is not canonical");
    }
    if (rref(m.matrix).rank != red.class_dim())
        throw RankDeficit("recomputed pi52 rank disagrees with the certificate");
}

std::string load_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
    if (!out.good()) throw ParseError("write failed for " + path);
}

} // namespace fo52
