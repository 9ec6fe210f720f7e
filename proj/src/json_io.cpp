#include "tca/json_io.hpp"

#include <fstream>

#include "tca/errors.hpp"
#include "tca/poly_io.hpp"

namespace tca {

Json idealToJson(const Ideal& ideal) {
    const RingPtr& ring = ideal.ring();
    Json j;
    j["ring"] = Json{{"sym", ring->symDim()},
                     {"skew", ring->skewDim()},
                     {"aux", ring->auxVars()},
                     {"order", orderName(ring->order())}};
    Json gens = Json::array();
    for (const Poly& g : ideal.generators()) gens.push_back(printPoly(g));
    j["generators"] = std::move(gens);
    return j;
}

Ideal idealFromJson(const Json& j) {
    if (!j.contains("ring") || !j.contains("generators"))
        fail(ErrorCode::SyntaxError, "ideal JSON needs 'ring' and 'generators'");
    const Json& r = j["ring"];
    RingPtr ring = Ring::make(r.value("sym", 0), r.value("skew", 0), r.value("aux", 0),
                              orderFromName(r.value("order", std::string("degrevlex"))));
    std::vector<Poly> gens;
    for (const auto& g : j["generators"])
        gens.push_back(parsePoly(ring, g.get<std::string>()));
    return Ideal(ring, std::move(gens));
}

Ideal idealFromFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::SyntaxError, "cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(ErrorCode::SyntaxError, std::string("bad JSON: ") + e.what());
    }
    return idealFromJson(j);
}

}  // namespace tca
