#include "gptlab/space_io.hpp"

#include <limits>

namespace gptlab {

using nlohmann::json;

Rational rational_from_json(const json& value, bool allow_float) {
    try {
        if (value.is_number_integer()) return Rational(value.get<long long>());
        if (value.is_string()) return parse_rational(value.get<std::string>());
        if (value.is_number_float()) {
            if (!allow_float)
                throw ParseError("floating-point coordinates are rejected here; use \"p/q\"");
            return rational_from_double(value.get<double>());
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("expected a rational (integer, \"p/q\", or decimal string), got " +
                     value.dump());
}

nlohmann::ordered_json rational_to_json(const Rational& r) {
    if (denominator(r) == 1) {
        const Integer num = numerator(r);
        if (num >= std::numeric_limits<long long>::min() &&
            num <= std::numeric_limits<long long>::max())
            return nlohmann::ordered_json(num.convert_to<long long>());
    }
    return nlohmann::ordered_json(to_string(r));
}

namespace {

Vec parse_point_json(const json& arr, bool allow_float) {
    if (!arr.is_array() || arr.empty()) throw ParseError("expected a nonempty coordinate array");
    Vec point;
    for (const auto& v : arr) point.push_back(rational_from_json(v, allow_float));
    return point;
}

StateSpace parse_generator(const json& doc) {
    const std::string name = doc.value("name", "");
    const json params = doc.value("params", json::object());
    auto param_int = [&](const char* key, long long fallback) -> long long {
        if (!params.contains(key)) {
            if (fallback < 0) throw ParseError(std::string("generator missing param: ") + key);
            return fallback;
        }
        if (!params[key].is_number_integer()) throw ParseError(std::string(key) + " must be an integer");
        return params[key].get<long long>();
    };
    try {
        if (name == "simplex") return make_simplex(static_cast<std::size_t>(param_int("c", -1)));
        if (name == "cube") return make_cube(static_cast<std::size_t>(param_int("d", -1)));
        if (name == "polygon") {
            PolygonStyle style = PolygonStyle::Auto;
            if (params.contains("style")) {
                const std::string s = params["style"].get<std::string>();
                if (s == "inscribed")
                    style = PolygonStyle::Inscribed;
                else if (s != "auto")
                    throw ParseError("polygon style must be \"auto\" or \"inscribed\"");
            }
            return make_polygon(static_cast<std::size_t>(param_int("n", -1)), style);
        }
        if (name == "disk" || name == "ball") {
            const std::size_t dim =
                name == "disk" ? 2 : static_cast<std::size_t>(param_int("dim", 3));
            Vec center(dim, Rational(0));
            if (params.contains("center")) center = parse_point_json(params["center"], true);
            Rational radius = 1;
            if (params.contains("radius")) radius = rational_from_json(params["radius"], true);
            return make_ball(dim, std::move(center), std::move(radius));
        }
    } catch (const std::invalid_argument& e) {
        throw UnsupportedError(e.what());
    }
    throw ParseError("unknown generator: '" + name + "'");
}

}  // namespace

StateSpace parse_space_document(const json& doc) {
    if (!doc.is_object() || !doc.contains("type")) throw ParseError("space document needs a type");
    const std::string type = doc["type"].get<std::string>();
    if (type == "polytope") {
        if (!doc.contains("vertices") || !doc["vertices"].is_array() || doc["vertices"].empty())
            throw ParseError("polytope needs a nonempty vertices array");
        std::vector<Vec> verts;
        for (const auto& v : doc["vertices"]) verts.push_back(parse_point_json(v, false));
        try {
            return make_polytope(std::move(verts));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    if (type == "ball") {
        if (!doc.contains("dim") || !doc["dim"].is_number_integer())
            throw ParseError("ball needs an integer dim");
        const auto dim = doc["dim"].get<long long>();
        if (dim != 2 && dim != 3) throw UnsupportedError("ball dim must be 2 or 3");
        Vec center(static_cast<std::size_t>(dim), Rational(0));
        if (doc.contains("center")) center = parse_point_json(doc["center"], true);
        Rational radius = 1;
        if (doc.contains("radius")) radius = rational_from_json(doc["radius"], true);
        try {
            return make_ball(static_cast<std::size_t>(dim), std::move(center), std::move(radius));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    if (type == "generator") return parse_generator(doc);
    throw ParseError("unknown space type: '" + type + "'");
}

StateSpace parse_space_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    return parse_space_document(doc);
}

nlohmann::ordered_json space_to_document(const StateSpace& space) {
    nlohmann::ordered_json doc;
    if (is_polytope(space)) {
        doc["type"] = "polytope";
        auto verts = nlohmann::ordered_json::array();
        for (const auto& v : as_polytope(space).vertices) verts.push_back(point_to_json(v));
        doc["vertices"] = std::move(verts);
    } else {
        const Ball& b = as_ball(space);
        doc["type"] = "ball";
        doc["dim"] = b.dim;
        doc["center"] = point_to_json(b.center);
        doc["radius"] = rational_to_json(b.radius);
    }
    return doc;
}

Vec parse_point_text(const std::string& text) {
    std::string trimmed = text;
    const auto first = trimmed.find_first_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty state coordinates");
    if (trimmed[first] == '[') {
        json arr;
        try {
            arr = json::parse(trimmed);
        } catch (const json::parse_error& e) {
            throw ParseError(e.what());
        }
        return parse_point_json(arr, true);
    }
    Vec point;
    std::size_t pos = 0;
    while (pos <= trimmed.size()) {
        const auto comma = trimmed.find(',', pos);
        const std::string item =
            trimmed.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            point.push_back(parse_rational(item));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return point;
}

nlohmann::ordered_json point_to_json(const Vec& point) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : point) arr.push_back(rational_to_json(c));
    return arr;
}

}  // namespace gptlab
