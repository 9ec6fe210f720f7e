#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tca/bounds.hpp"
#include "tca/errors.hpp"
#include "tca/json_io.hpp"
#include "tca/poly_io.hpp"
#include "tca/spectrum.hpp"
#include "tca/verify.hpp"

namespace {

using tca::Json;

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

Json bigIntJson(const tca::BigInt& n) {
    if (n.fits_slong_p()) return Json(n.get_si());
    return Json(n.get_str());
}

Json pointJson(const tca::SpectrumPoint& p) {
    if (p.infinite) return Json("inf");
    return Json::array({p.r, p.s});
}

tca::GLIdeal idealArg(const std::string& lambdaText, const std::string& sumText, bool zero) {
    if (zero) return tca::GLIdeal::zero();
    if (!sumText.empty()) {
        std::vector<tca::Partition> shapes;
        std::size_t pos = 0;
        while (pos <= sumText.size()) {
            std::size_t next = sumText.find(';', pos);
            if (next == std::string::npos) next = sumText.size();
            shapes.push_back(tca::Partition::fromText(sumText.substr(pos, next - pos)));
            pos = next + 1;
        }
        return tca::GLIdeal::sum(std::move(shapes));
    }
    return tca::GLIdeal::generated(tca::Partition::fromText(lambdaText));
}

tca::Ideal rehome(const tca::Ideal& ideal, tca::MonomialOrder order) {
    const auto& ring = ideal.ring();
    if (ring->order() == order) return ideal;
    tca::RingPtr target =
        tca::Ring::make(ring->symDim(), ring->skewDim(), ring->auxVars(), order);
    std::vector<tca::Poly> gens;
    for (const tca::Poly& g : ideal.generators()) {
        std::vector<tca::Term> terms(g.terms().begin(), g.terms().end());
        gens.push_back(tca::Poly::fromTerms(target, std::move(terms)));
    }
    return tca::Ideal(target, std::move(gens));
}

Json suiteJson(const tca::SuiteResult& r) {
    Json out;
    out["suite"] = r.name;
    out["checked"] = r.checked;
    out["failures"] = r.failures;
    for (const auto& [key, value] : r.details.items()) out[key] = value;
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"equivariant commutative algebra of Sym(Sym^2) on super vector spaces"};
    app.require_subcommand(1);

    std::string lambdaText, muText, sumText, spaceText = "1,1", idealPath, polyText;
    std::string functorText, rankText, orderText = "degrevlex";
    bool zeroIdeal = false;
    int kExp = 1, jobs = 1, suiteN = 3, suiteMaxDeg = 4, suiteMaxSize = 3, polyCount = 50;

    auto* schurDim = app.add_subcommand("schur-dim", "dimension of a Schur functor value");
    schurDim->add_option("--lambda", lambdaText)->required();
    schurDim->add_option("--space", spaceText)->required();

    auto* glPrime = app.add_subcommand("gl-prime", "is the lambda-ideal GL-prime");
    glPrime->add_option("--lambda", lambdaText);
    glPrime->add_option("--sum", sumText);
    glPrime->add_flag("--zero", zeroIdeal);

    auto* glContainsCmd = app.add_subcommand("gl-contains", "lattice containment I_lambda in I_mu");
    glContainsCmd->add_option("--lambda", lambdaText)->required();
    glContainsCmd->add_option("--mu", muText)->required();

    auto* glRadicalCmd = app.add_subcommand("gl-radical", "GL-radical of a sum of lambda-ideals");
    glRadicalCmd->add_option("--lambda", lambdaText);
    glRadicalCmd->add_option("--sum", sumText);
    glRadicalCmd->add_flag("--zero", zeroIdeal);

    auto* minPrimes = app.add_subcommand("min-primes", "minimal GL-primes as rectangle indices");
    minPrimes->add_option("--lambda", lambdaText);
    minPrimes->add_option("--sum", sumText);
    minPrimes->add_flag("--zero", zeroIdeal);

    auto* radContains = app.add_subcommand("radical-contains", "is the polynomial in rad(I)");
    radContains->add_option("--ideal", idealPath)->required();
    radContains->add_option("--poly", polyText)->required();

    auto* rankIdeal = app.add_subcommand("rank-ideal", "minor/Pfaffian ideal of a rank locus");
    rankIdeal->add_option("--rank", rankText)->required();
    rankIdeal->add_option("--space", spaceText)->required();
    rankIdeal->add_option("--order", orderText);

    auto* idealLambdaCmd = app.add_subcommand("ideal-lambda", "generators of the lambda-ideal");
    idealLambdaCmd->add_option("--lambda", lambdaText)->required();
    idealLambdaCmd->add_option("--space", spaceText)->required();
    idealLambdaCmd->add_option("--order", orderText);

    auto* eta = app.add_subcommand("eta", "effective nilpotency degree bound");
    eta->add_option("--functor", functorText)->required();
    eta->add_option("--k", kExp)->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suiteName;
    verify->add_option("suite", suiteName, "prop5.1|lemma5.4|rankloci|bridge|veronese")
        ->required();
    verify->add_option("--n", suiteN);
    verify->add_option("--maxdeg", suiteMaxDeg);
    verify->add_option("--max-size", suiteMaxSize);
    verify->add_option("--jobs", jobs);
    verify->add_option("--count", polyCount);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (schurDim->parsed()) {
            const auto lambda = tca::Partition::fromText(lambdaText);
            const auto space = tca::SuperSpace::fromText(spaceText);
            Json out;
            out["dim"] = bigIntJson(tca::schurDim(lambda, space));
            emit(out);
        } else if (glPrime->parsed()) {
            Json out;
            out["glPrime"] = tca::isGLPrime(idealArg(lambdaText, sumText, zeroIdeal));
            emit(out);
        } else if (glContainsCmd->parsed()) {
            const auto J = tca::GLIdeal::generated(tca::Partition::fromText(lambdaText));
            const auto K = tca::GLIdeal::generated(tca::Partition::fromText(muText));
            Json out;
            out["contains"] = tca::glContains(J, K);
            emit(out);
        } else if (glRadicalCmd->parsed()) {
            const auto rad = tca::glRadical(idealArg(lambdaText, sumText, zeroIdeal));
            Json out;
            switch (rad.kind()) {
                case tca::GLIdeal::Kind::Zero: out["radical"] = "0"; break;
                case tca::GLIdeal::Kind::Unit: out["radical"] = "unit"; break;
                default: out["radical"] = rad.partition().toText(); break;
            }
            emit(out);
        } else if (minPrimes->parsed()) {
            const auto points = tca::minimalGLPrimes(idealArg(lambdaText, sumText, zeroIdeal));
            Json arr = Json::array();
            for (const auto& p : points) arr.push_back(pointJson(p));
            Json out;
            out["minPrimes"] = arr;
            emit(out);
        } else if (radContains->parsed()) {
            const tca::Ideal ideal = tca::idealFromFile(idealPath);
            const tca::Poly f = tca::parsePoly(ideal.ring(), polyText);
            Json out;
            out["radicalContains"] = tca::radicalContains(ideal, f);
            emit(out);
        } else if (rankIdeal->parsed()) {
            const auto space = tca::SuperSpace::fromText(spaceText);
            const std::size_t comma = rankText.find(',');
            if (comma == std::string::npos)
                tca::fail(tca::ErrorCode::SyntaxError, "--rank must be 'r,s' (inf allowed)");
            const std::string rPart = rankText.substr(0, comma);
            const std::string sPart = rankText.substr(comma + 1);
            std::optional<int> evenRank, oddRank;
            if (rPart != "inf") evenRank = std::stoi(rPart);
            if (sPart != "inf") oddRank = std::stoi(sPart);
            const auto ideal = rehome(tca::rankLocusIdeal(evenRank, oddRank, space),
                                      tca::orderFromName(orderText));
            emit(tca::idealToJson(ideal));
        } else if (idealLambdaCmd->parsed()) {
            const auto lambda = tca::Partition::fromText(lambdaText);
            const auto space = tca::SuperSpace::fromText(spaceText);
            const auto model = tca::idealLambda(lambda, space);
            emit(tca::idealToJson(rehome(model.ideal, tca::orderFromName(orderText))));
        } else if (eta->parsed()) {
            const auto functor = tca::PolyFunctor::fromText(functorText);
            const auto res = tca::etaBoundWithDepth(functor, kExp);
            Json out;
            out["eta"] = res.eta.get_str();
            out["depth"] = res.depth;
            emit(out);
        } else if (verify->parsed()) {
            tca::SuiteResult res;
            if (suiteName == "prop5.1") {
                res = tca::verifyProp51(suiteN, suiteMaxDeg, suiteMaxSize);
            } else if (suiteName == "lemma5.4") {
                res = tca::verifyLemma54();
            } else if (suiteName == "rankloci") {
                res = tca::verifyRankLoci();
            } else if (suiteName == "bridge") {
                res = tca::verifyBridge(suiteMaxSize, jobs);
            } else if (suiteName == "veronese") {
                res = tca::verifyVeronese(polyCount);
            } else {
                std::cerr << "unknown suite '" << suiteName << "'\n";
                return 2;
            }
            emit(suiteJson(res));
            if (!res.passed()) {
                std::cerr << "suite " << res.name << ": " << res.failures << " failure(s)\n";
                return 3;
            }
        }
    } catch (const tca::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
