#include "entrobound/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "entrobound/error.hpp"

namespace entrobound {

namespace {

using nlohmann::json;

std::vector<double> read_square(const json& doc, const char* key, std::size_t d) {
    if (!doc.contains(key)) throw Error(ErrorKind::Parse, std::string("missing field \"") + key + "\"");
    const json& rows = doc.at(key);
    if (!rows.is_array() || rows.size() != d)
        throw Error(ErrorKind::Parse, std::string("\"") + key + "\" must be an array of " + std::to_string(d) + " rows");
    std::vector<double> out;
    out.reserve(d * d);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != d)
            throw Error(ErrorKind::Parse, std::string("\"") + key + "\" is not square " + std::to_string(d) + "x" +
                                              std::to_string(d));
        for (const auto& x : row) {
            // nlohmann parses bare NaN/Infinity as errors already; null is how
            // most writers serialize NaN, so reject it explicitly.
            if (!x.is_number()) throw Error(ErrorKind::NonFinite, std::string("non-numeric entry in \"") + key + "\"");
            const double v = x.get<double>();
            if (!std::isfinite(v)) throw Error(ErrorKind::NonFinite, "non-finite matrix entry");
            out.push_back(v);
        }
    }
    return out;
}

} // namespace

ComplexMatrix parse_matrix_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::Parse, "matrix file must hold a JSON object");
    if (!doc.contains("d") || !doc.at("d").is_number_integer() || doc.at("d").get<long long>() < 1)
        throw Error(ErrorKind::Parse, "\"d\" must be a positive integer");
    const auto d = static_cast<std::size_t>(doc.at("d").get<long long>());
    const auto re = read_square(doc, "re", d);
    const auto im = read_square(doc, "im", d);
    std::vector<Complex> data(d * d);
    for (std::size_t k = 0; k < d * d; ++k) data[k] = Complex(re[k], im[k]);
    return ComplexMatrix(d, std::move(data));
}

std::string matrix_to_json(const ComplexMatrix& m) {
    const std::size_t d = m.dim();
    json re = json::array();
    json im = json::array();
    for (std::size_t j = 0; j < d; ++j) {
        json rr = json::array();
        json ii = json::array();
        for (std::size_t i = 0; i < d; ++i) {
            rr.push_back(m(j, i).real());
            ii.push_back(m(j, i).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ii));
    }
    json doc = {{"d", d}, {"re", std::move(re)}, {"im", std::move(im)}};
    return doc.dump();
}

ComplexMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot open matrix file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_json(buf.str());
}

} // namespace entrobound
