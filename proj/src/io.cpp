#include "qspectral/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qspectral/error.hpp"

namespace qspectral::io {

Json to_json(const Quaternion& q) { return Json::array({q.x0, q.x1, q.x2, q.x3}); }

Json to_json(const QMatrix& t) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < t.size(); ++j) row.push_back(to_json(t(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"n", t.size()}, {"entries", std::move(rows)}};
}

Json to_json(const SliceSeries& f) {
    Json coeffs = Json::array();
    for (const auto& a : f.coefficients()) coeffs.push_back(to_json(a));
    Json out{{"side", f.side() == Side::Left ? "left" : "right"}, {"coefficients", std::move(coeffs)}};
    out["radius"] = std::isinf(f.radius()) ? Json("inf") : Json(f.radius());
    return out;
}

Json to_json(const SpectrumResult& s) {
    Json spheres = Json::array();
    for (const auto& sphere : s.spheres)
        spheres.push_back(Json{{"u", sphere.point.u}, {"v", sphere.point.v}, {"mult", sphere.multiplicity}});
    return Json{{"spheres", std::move(spheres)}};
}

Quaternion quaternion_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4)
        throw Error(ErrorKind::BadArgument, "quaternion must be an array [x0, x1, x2, x3]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

QMatrix matrix_from_json(const Json& j) {
    try {
        const auto n = j.at("n").get<std::size_t>();
        const Json& rows = j.at("entries");
        if (!rows.is_array() || rows.size() != n) throw Error(ErrorKind::BadArgument, "entries must have n rows");
        QMatrix t(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!rows[i].is_array() || rows[i].size() != n)
                throw Error(ErrorKind::BadArgument, "row " + std::to_string(i) + " must have n entries");
            for (std::size_t k = 0; k < n; ++k) t(i, k) = quaternion_from_json(rows[i][k]);
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::BadArgument, std::string("malformed matrix JSON: ") + e.what());
    }
}

SliceSeries series_from_json(const Json& j) {
    try {
        const auto side_name = j.value("side", std::string("left"));
        Side side;
        if (side_name == "left") {
            side = Side::Left;
        } else if (side_name == "right") {
            side = Side::Right;
        } else {
            throw Error(ErrorKind::BadArgument, "series side must be left or right");
        }
        double radius = std::numeric_limits<double>::infinity();
        if (j.contains("radius")) {
            const Json& r = j.at("radius");
            if (r.is_number()) {
                radius = r.get<double>();
            } else if (!(r.is_string() && r.get<std::string>() == "inf") && !r.is_null()) {
                throw Error(ErrorKind::BadArgument, "series radius must be a number or \"inf\"");
            }
        }
        std::vector<Quaternion> coeffs;
        for (const auto& c : j.at("coefficients")) coeffs.push_back(quaternion_from_json(c));
        return SliceSeries(side, std::move(coeffs), radius);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::BadArgument, std::string("malformed series JSON: ") + e.what());
    }
}

namespace {

void dump_into(const Json& j, std::string& out) {
    switch (j.type()) {
        case Json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& e : j) {
                if (!first) out += ',';
                first = false;
                dump_into(e, out);
            }
            out += ']';
            break;
        }
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += Json(it.key()).dump();
                out += ':';
                dump_into(it.value(), out);
            }
            out += '}';
            break;
        }
        case Json::value_t::number_float: {
            const double x = j.get<double>();
            if (!std::isfinite(x)) {
                out += "null";
            } else {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.17g", x);
                out += buf;
            }
            break;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

std::string dump(const Json& j) {
    std::string out;
    dump_into(j, out);
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::BadArgument, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::BadArgument, path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::BadArgument, "cannot write " + path);
    out << text;
}

Quaternion parse_quaternion(const std::string& text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadArgument, "bad quaternion component '" + item + "'");
        }
    }
    if (parts.size() != 4) throw Error(ErrorKind::BadArgument, "quaternion needs four components x0,x1,x2,x3");
    return {parts[0], parts[1], parts[2], parts[3]};
}

ImaginaryUnit parse_unit(const std::string& text) {
    if (text == "e1") return ImaginaryUnit::e1();
    if (text == "e2") return ImaginaryUnit::e2();
    if (text == "e3") return ImaginaryUnit::e3();
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            parts.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadArgument, "bad slice unit '" + text + "'");
        }
    }
    if (parts.size() != 3) throw Error(ErrorKind::BadArgument, "slice unit must be e1, e2, e3 or x,y,z");
    return ImaginaryUnit::normalized(parts[0], parts[1], parts[2]);
}

}  // namespace qspectral::io
