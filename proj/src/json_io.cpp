#include "oddwheel/json_io.hpp"

#include <utility>

#include "json.hpp"
#include "oddwheel/errors.hpp"

namespace oddwheel {
namespace {

using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers while they fit the wire-safe signed
// range, and as decimal strings beyond it.
Json json_int(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(to_string(v));
}

Int parse_positive_length(const Json& j, const std::string& where) {
    Int value;
    if (j.is_number_integer()) {
        value = static_cast<long>(j.get<long long>());
    } else if (j.is_string()) {
        value = parse_int(j.get<std::string>());
    } else {
        throw ValidationError(where + " must be an integer or a decimal string");
    }
    if (value <= 0) {
        throw ValidationError(where + " must be positive, got " + to_string(value));
    }
    return value;
}

long long parse_integer(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) {
        throw ValidationError(where + " must be an integer");
    }
    return j.get<long long>();
}

std::vector<Int> parse_length_array(const Json& doc, const std::string& field,
                                    std::size_t expected) {
    if (!doc.contains(field)) {
        throw ValidationError("wheel document is missing \"" + field + "\"");
    }
    const Json& arr = doc[field];
    if (!arr.is_array()) {
        throw ValidationError("\"" + field + "\" must be an array");
    }
    if (arr.size() != expected) {
        throw ValidationError("\"" + field + "\" must have " + std::to_string(expected) +
                              " entries, got " + std::to_string(arr.size()));
    }
    std::vector<Int> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        out.push_back(parse_positive_length(
            arr[i], "\"" + field + "\"[" + std::to_string(i) + "]"));
    }
    return out;
}

Json wheel_object(const WheelLengths& w, const SignVector* signs) {
    Json out;
    out["n"] = w.size();
    Json spokes = Json::array();
    for (const Int& s : w.spokes()) spokes.push_back(json_int(s));
    out["spokes"] = std::move(spokes);
    Json rims = Json::array();
    for (const Int& r : w.rims()) rims.push_back(json_int(r));
    out["rims"] = std::move(rims);
    if (signs) {
        Json sj = Json::array();
        for (int s : signs->signs()) sj.push_back(s);
        out["signs"] = std::move(sj);
    }
    return out;
}

Json parity_object(const ParityCertificate& cert) {
    Json out;
    out["n"] = cert.n;
    out["spoke_products_mod4"] = cert.spoke_products_mod4;
    out["crossing_step_count"] = cert.crossing_step_count;
    out["conclusion"] = cert.conclusion == ParityConclusion::contradiction
                            ? "contradiction"
                            : "inconclusive";
    return out;
}

Json surd_point_object(const SurdPoint& p) {
    Json out;
    out["x"] = p.x.str();
    out["y"] = p.y.str();
    out["x_approx"] = p.x.approx();
    out["y_approx"] = p.y.approx();
    return out;
}

const char* kind_name(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::parity_contradiction: return "parity_contradiction";
        case CertificateKind::closure_failure_all_signs: return "closure_failure_all_signs";
        case CertificateKind::residual_sum_violation: return "residual_sum_violation";
        case CertificateKind::realizable: return "realizable";
    }
    return "unknown";
}

}  // namespace

WheelDocument parse_wheel_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("wheel document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ValidationError("wheel document must be a JSON object");
    }
    if (!doc.contains("n")) {
        throw ValidationError("wheel document is missing \"n\"");
    }
    long long n = parse_integer(doc["n"], "\"n\"");
    if (n < 3) {
        throw ValidationError("\"n\" must be at least 3, got " + std::to_string(n));
    }
    std::vector<Int> spokes =
        parse_length_array(doc, "spokes", static_cast<std::size_t>(n));
    std::vector<Int> rims = parse_length_array(doc, "rims", static_cast<std::size_t>(n));

    std::optional<SignVector> signs;
    if (doc.contains("signs")) {
        const Json& arr = doc["signs"];
        if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n)) {
            throw ValidationError("\"signs\" must be an array of " + std::to_string(n) +
                                  " entries");
        }
        std::vector<int> values;
        values.reserve(arr.size());
        for (std::size_t i = 0; i < arr.size(); ++i) {
            long long s = parse_integer(arr[i], "\"signs\"[" + std::to_string(i) + "]");
            if (s != 1 && s != -1) {
                throw ValidationError("\"signs\"[" + std::to_string(i) +
                                      "] must be 1 or -1, got " + std::to_string(s));
            }
            values.push_back(static_cast<int>(s));
        }
        signs = SignVector(std::move(values));
    }
    return WheelDocument{WheelLengths(std::move(spokes), std::move(rims)),
                         std::move(signs)};
}

std::string wheel_to_json(const WheelLengths& w, const SignVector* signs) {
    return wheel_object(w, signs).dump();
}

std::vector<RationalPoint> parse_points_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("points document is not valid JSON: ") +
                              e.what());
    }
    if (!doc.is_object() || !doc.contains("points")) {
        throw ValidationError("points document must be an object with a \"points\" array");
    }
    const Json& arr = doc["points"];
    if (!arr.is_array()) {
        throw ValidationError("\"points\" must be an array");
    }
    std::vector<RationalPoint> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const Json& entry = arr[i];
        const std::string where = "\"points\"[" + std::to_string(i) + "]";
        if (!entry.is_array() || entry.size() != 4) {
            throw ValidationError(where +
                                  " must be [xnum, xden, ynum, yden] with four entries");
        }
        Int parts[4];
        for (std::size_t c = 0; c < 4; ++c) {
            const Json& cell = entry[c];
            if (cell.is_number_integer()) {
                parts[c] = static_cast<long>(cell.get<long long>());
            } else if (cell.is_string()) {
                parts[c] = parse_int(cell.get<std::string>());
            } else {
                throw ValidationError(where + "[" + std::to_string(c) +
                                      "] must be an integer or a decimal string");
            }
        }
        if (parts[1] == 0 || parts[3] == 0) {
            throw ValidationError(where + " has a zero denominator");
        }
        out.push_back(RationalPoint{make_rat(parts[0], parts[1]),
                                    make_rat(parts[2], parts[3])});
    }
    return out;
}

std::string parity_certificate_to_json(const ParityCertificate& cert) {
    return parity_object(cert).dump();
}

std::string certificate_to_json(const Certificate& cert) {
    Json out;
    out["kind"] = kind_name(cert.kind);
    Json detail;
    switch (cert.kind) {
        case CertificateKind::parity_contradiction:
            detail = parity_object(*cert.parity);
            break;
        case CertificateKind::closure_failure_all_signs:
            detail["sign_vectors_tried"] = *cert.sign_vectors_tried;
            break;
        case CertificateKind::residual_sum_violation: {
            detail["offending_residual"] = json_int(*cert.offending_residual);
            Json rot;
            rot["cos"] = cert.group_rotation->cos().str();
            rot["sin"] = cert.group_rotation->sin().str();
            rot["cos_approx"] = cert.group_rotation->cos().approx();
            rot["sin_approx"] = cert.group_rotation->sin().approx();
            detail["group_rotation"] = std::move(rot);
            break;
        }
        case CertificateKind::realizable: {
            Json signs = Json::array();
            for (int s : cert.witness_signs->signs()) signs.push_back(s);
            detail["witness_signs"] = std::move(signs);
            Json coords = Json::array();
            for (const SurdPoint& p : *cert.coordinates) {
                coords.push_back(surd_point_object(p));
            }
            detail["coordinates"] = std::move(coords);
            break;
        }
    }
    out["detail"] = std::move(detail);
    out["input"] = wheel_object(cert.wheel, nullptr);
    return out.dump();
}

std::string search_event_to_json(const SearchEvent& event) {
    switch (event.kind) {
        case SearchEvent::Kind::result: {
            Json line = wheel_object(event.result->wheel, nullptr);
            Json signs = Json::array();
            for (int s : event.result->signs.signs()) signs.push_back(s);
            line["witness_signs"] = std::move(signs);
            return line.dump();
        }
        case SearchEvent::Kind::parity_certificate: {
            Json line;
            line["certificate"] = "parity_contradiction";
            Json spokes = Json::array();
            for (const Int& s : *event.spokes) spokes.push_back(json_int(s));
            line["spokes"] = std::move(spokes);
            Json parity = parity_object(*event.parity);
            line.update(parity);
            return line.dump();
        }
        case SearchEvent::Kind::checkpoint: {
            Json line;
            line["checkpoint"] = event.cursor;
            line["nodes_examined"] = event.nodes_examined;
            return line.dump();
        }
    }
    throw InvariantViolation("unhandled search event kind");
}

}  // namespace oddwheel
