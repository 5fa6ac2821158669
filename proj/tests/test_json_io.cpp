#include "oddwheel/json_io.hpp"

#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "oddwheel/errors.hpp"
#include "oddwheel/wheel.hpp"

using namespace oddwheel;
using Json = nlohmann::json;

namespace {

WheelLengths rectangle_wheel() {
    return WheelLengths({4, 5, 3}, {3, 4, 5});
}

}  // namespace

TEST_CASE("wheel document round-trips through JSON") {
    WheelLengths w = rectangle_wheel();
    std::string text = wheel_to_json(w);
    WheelDocument doc = parse_wheel_document(text);
    CHECK(doc.wheel == w);
    CHECK(!doc.signs.has_value());

    SignVector signs({1, 1, -1});
    std::string with_signs = wheel_to_json(w, &signs);
    WheelDocument doc2 = parse_wheel_document(with_signs);
    CHECK(doc2.wheel == w);
    REQUIRE(doc2.signs.has_value());
    CHECK(*doc2.signs == signs);
}

TEST_CASE("wheel JSON uses the pinned field layout") {
    WheelLengths w = rectangle_wheel();
    SignVector signs({1, 1, -1});
    Json doc = Json::parse(wheel_to_json(w, &signs));
    CHECK(doc["n"] == 3);
    CHECK(doc["spokes"] == Json::array({4, 5, 3}));
    CHECK(doc["rims"] == Json::array({3, 4, 5}));
    CHECK(doc["signs"] == Json::array({1, 1, -1}));
}

TEST_CASE("wheel parsing accepts decimal strings for large lengths") {
    // 2^80 + 1 and friends do not fit in an int64 wire number.
    std::string big = "1208925819614629174706177";
    std::string text = R"({"n": 3, "spokes": [")" + big + R"(", ")" + big +
                       R"(", ")" + big + R"("], "rims": [3, 4, 5]})";
    WheelDocument doc = parse_wheel_document(text);
    CHECK(doc.wheel.spokes()[0] == parse_int(big));

    // And the emitter switches to strings beyond the int64 range.
    Json out = Json::parse(wheel_to_json(doc.wheel));
    CHECK(out["spokes"][0].is_string());
    CHECK(out["spokes"][0].get<std::string>() == big);
    CHECK(out["rims"][0].is_number_integer());
}

TEST_CASE("wheel parsing diagnostics name the offending field") {
    CHECK_THROWS_WITH_AS(parse_wheel_document("not json"),
                         doctest::Contains("not valid JSON"), ValidationError);
    CHECK_THROWS_WITH_AS(parse_wheel_document("[1, 2, 3]"),
                         doctest::Contains("JSON object"), ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_wheel_document(R"({"spokes": [1, 1, 1], "rims": [1, 1, 1]})"),
        doctest::Contains("\"n\""), ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_wheel_document(R"({"n": 2, "spokes": [1, 1], "rims": [1, 1]})"),
        doctest::Contains("at least 3"), ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_wheel_document(R"({"n": 3, "rims": [3, 4, 5]})"),
        doctest::Contains("\"spokes\""), ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_wheel_document(R"({"n": 3, "spokes": [4, 5], "rims": [3, 4, 5]})"),
        doctest::Contains("\"spokes\" must have 3"), ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_wheel_document(R"({"n": 3, "spokes": [4, 0, 3], "rims": [3, 4, 5]})"),
        doctest::Contains("\"spokes\"[1]"), ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_wheel_document(R"({"n": 3, "spokes": [4, 5.5, 3], "rims": [3, 4, 5]})"),
        doctest::Contains("\"spokes\"[1]"), ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_wheel_document(
            R"({"n": 3, "spokes": [4, 5, 3], "rims": [3, 4, 5], "signs": [1, 1]})"),
        doctest::Contains("\"signs\""), ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_wheel_document(
            R"({"n": 3, "spokes": [4, 5, 3], "rims": [3, 4, 5], "signs": [1, 0, 1]})"),
        doctest::Contains("\"signs\"[1]"), ValidationError);
    // Triangle-inequality violations surface from wheel validation.
    CHECK_THROWS_AS(
        parse_wheel_document(R"({"n": 3, "spokes": [1, 1, 1], "rims": [9, 1, 1]})"),
        ValidationError);
}

TEST_CASE("points document parses rational coordinates") {
    std::string text =
        R"({"points": [[0, 1, 0, 1], [3, 5, 4, 5], ["7", 2, -1, "3"]]})";
    std::vector<RationalPoint> pts = parse_points_document(text);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].x == 0);
    CHECK(pts[1].x == make_rat(3, 5));
    CHECK(pts[1].y == make_rat(4, 5));
    CHECK(pts[2].x == make_rat(7, 2));
    CHECK(pts[2].y == make_rat(-1, 3));
}

TEST_CASE("points parsing diagnostics name the offending entry") {
    CHECK_THROWS_WITH_AS(parse_points_document("{"),
                         doctest::Contains("not valid JSON"), ValidationError);
    CHECK_THROWS_WITH_AS(parse_points_document(R"({"other": []})"),
                         doctest::Contains("\"points\""), ValidationError);
    CHECK_THROWS_WITH_AS(parse_points_document(R"({"points": [[1, 2, 3]]})"),
                         doctest::Contains("\"points\"[0]"), ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_points_document(R"({"points": [[1, 2, 3, 4], [1, 0, 2, 1]]})"),
        doctest::Contains("\"points\"[1]"), ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_points_document(R"({"points": [[1, 2, 3.5, 4]]})"),
        doctest::Contains("\"points\"[0][2]"), ValidationError);
}

TEST_CASE("realizable certificate serializes witness and coordinates") {
    Certificate cert = realizable(rectangle_wheel());
    REQUIRE(cert.kind == CertificateKind::realizable);
    Json doc = Json::parse(certificate_to_json(cert));
    CHECK(doc["kind"] == "realizable");
    CHECK(doc["input"]["n"] == 3);
    CHECK(doc["input"]["spokes"] == Json::array({4, 5, 3}));
    CHECK(doc["detail"]["witness_signs"] == Json::array({1, 1, -1}));
    REQUIRE(doc["detail"]["coordinates"].size() == 4);
    // Hub at the origin, first rim endpoint on the x-axis.
    CHECK(doc["detail"]["coordinates"][0]["x"] == "0");
    CHECK(doc["detail"]["coordinates"][0]["y"] == "0");
    CHECK(doc["detail"]["coordinates"][1]["x"] == "4");
    CHECK(doc["detail"]["coordinates"][1]["y"] == "0");
    CHECK(doc["detail"]["coordinates"][2]["x_approx"].get<double>() ==
          doctest::Approx(4.0));
    CHECK(doc["detail"]["coordinates"][2]["y_approx"].get<double>() ==
          doctest::Approx(3.0));
}

TEST_CASE("closure-failure certificate reports the sign vector count") {
    Certificate cert = realizable(WheelLengths({1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}));
    REQUIRE(cert.kind == CertificateKind::closure_failure_all_signs);
    Json doc = Json::parse(certificate_to_json(cert));
    CHECK(doc["kind"] == "closure_failure_all_signs");
    CHECK(doc["detail"]["sign_vectors_tried"] == 16);
    CHECK(doc["input"]["spokes"] == Json::array({1, 1, 1, 1, 1}));
}

TEST_CASE("residual-violation certificate reports the group rotation") {
    Certificate cert = realizable(WheelLengths({1, 3, 3}, {3, 3, 3}));
    REQUIRE(cert.kind == CertificateKind::residual_sum_violation);
    Json doc = Json::parse(certificate_to_json(cert));
    CHECK(doc["kind"] == "residual_sum_violation");
    CHECK(doc["detail"]["offending_residual"] == 3);
    CHECK(doc["detail"]["group_rotation"]["cos"].is_string());
    CHECK(doc["detail"]["group_rotation"]["cos_approx"].get<double>() ==
          doctest::Approx(0.5));
}

TEST_CASE("parity certificate serializes the pinned fields") {
    Certificate cert = certify_odd_wheel(
        WheelLengths({1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}));
    REQUIRE(cert.kind == CertificateKind::parity_contradiction);
    Json doc = Json::parse(certificate_to_json(cert));
    CHECK(doc["kind"] == "parity_contradiction");
    CHECK(doc["detail"]["n"] == 5);
    CHECK(doc["detail"]["spoke_products_mod4"] == Json::array({1, 1, 1, 1, 1}));
    CHECK(doc["detail"]["crossing_step_count"] == 5);
    CHECK(doc["detail"]["conclusion"] == "contradiction");

    // The standalone parity serializer matches the embedded detail.
    Json bare = Json::parse(parity_certificate_to_json(*cert.parity));
    CHECK(bare == doc["detail"]);
}

TEST_CASE("search events serialize one JSON line per event") {
    SearchEvent result;
    result.kind = SearchEvent::Kind::result;
    result.result = SearchResult{rectangle_wheel(), SignVector({1, 1, -1})};
    Json rj = Json::parse(search_event_to_json(result));
    CHECK(rj["n"] == 3);
    CHECK(rj["spokes"] == Json::array({4, 5, 3}));
    CHECK(rj["rims"] == Json::array({3, 4, 5}));
    CHECK(rj["witness_signs"] == Json::array({1, 1, -1}));

    SearchEvent cline;
    cline.kind = SearchEvent::Kind::parity_certificate;
    cline.spokes = std::vector<Int>{3, 5, 7};
    cline.parity = parity_certificate(*cline.spokes);
    Json cj = Json::parse(search_event_to_json(cline));
    CHECK(cj["certificate"] == "parity_contradiction");
    CHECK(cj["spokes"] == Json::array({3, 5, 7}));
    CHECK(cj["conclusion"] == "contradiction");
    CHECK(cj["crossing_step_count"] == 1);

    SearchEvent ck;
    ck.kind = SearchEvent::Kind::checkpoint;
    ck.cursor = "1024";
    ck.nodes_examined = 77;
    Json kj = Json::parse(search_event_to_json(ck));
    CHECK(kj["checkpoint"] == "1024");
    CHECK(kj["nodes_examined"] == 77);
}
