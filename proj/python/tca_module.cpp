#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tca/bounds.hpp"
#include "tca/json_io.hpp"
#include "tca/poly_io.hpp"
#include "tca/spectrum.hpp"
#include "tca/verify.hpp"

namespace py = pybind11;
using namespace tca;

namespace {

Partition partitionArg(const std::string& text) { return Partition::fromText(text); }
SuperSpace spaceArg(int r, int s) { return SuperSpace{r, s}; }

GLIdeal glIdealArg(const py::object& spec) {
    if (spec.is_none()) return GLIdeal::zero();
    if (py::isinstance<py::str>(spec)) return GLIdeal::generated(partitionArg(spec.cast<std::string>()));
    std::vector<Partition> shapes;
    for (const auto& item : spec.cast<py::list>())
        shapes.push_back(partitionArg(item.cast<std::string>()));
    return GLIdeal::sum(std::move(shapes));
}

py::object pointObj(const SpectrumPoint& p) {
    if (p.infinite) return py::str("inf");
    return py::make_tuple(p.r, p.s);
}

}  // namespace

PYBIND11_MODULE(_tca, m) {
    m.doc() = "Equivariant commutative algebra of Sym(Sym^2) on super vector spaces";

    // Partition calculus. Partitions travel as comma-separated text ("3,1",
    // "0" for the empty shape) to keep the surface scripting-friendly.
    m.def("contains", [](const std::string& a, const std::string& b) {
        return contains(partitionArg(a), partitionArg(b));
    });
    m.def("union_", [](const std::string& a, const std::string& b) {
        return unite(partitionArg(a), partitionArg(b)).toText();
    });
    m.def("intersect", [](const std::string& a, const std::string& b) {
        return intersect(partitionArg(a), partitionArg(b)).toText();
    });
    m.def("corners", [](const std::string& a) { return corners(partitionArg(a)); });
    m.def("rectangle", [](int r, int s) { return Partition::rectangle(r, s).toText(); });
    m.def("double_", [](const std::string& a) { return doubled(partitionArg(a)).toText(); });
    m.def("transpose", [](const std::string& a) { return transpose(partitionArg(a)).toText(); });

    // Polynomial functors and super evaluation.
    m.def("schur_nonzero", [](const std::string& lam, int r, int s) {
        return schurNonzero(partitionArg(lam), spaceArg(r, s));
    });
    m.def("schur_dim", [](const std::string& lam, int r, int s) {
        return schurDim(partitionArg(lam), spaceArg(r, s)).get_str();
    });
    m.def("functor_dim", [](const std::string& f, int r, int s) {
        return functorDim(PolyFunctor::fromText(f), spaceArg(r, s)).get_str();
    });
    m.def("functor_width", [](const std::string& f) { return width(PolyFunctor::fromText(f)); });
    m.def("shift_decompose", [](const std::string& f) {
        std::map<int, std::string> out;
        for (const auto& [i, part] : shiftDecompose(PolyFunctor::fromText(f)))
            out[i] = part.toText();
        return out;
    });

    // Exact polynomial layer: parse/print round trip and radical tests over
    // the ideal JSON format.
    m.def("poly_roundtrip", [](int sym, int skew, int aux, const std::string& order,
                               const std::string& text) {
        RingPtr ring = Ring::make(sym, skew, aux, orderFromName(order));
        return printPoly(parsePoly(ring, text));
    });
    m.def("reduced_gb", [](const std::string& idealJson) {
        const Ideal ideal = idealFromJson(Json::parse(idealJson));
        Json out = Json::array();
        for (const Poly& g : ideal.reducedGB()) out.push_back(printPoly(g));
        return out.dump();
    });
    m.def("radical_contains", [](const std::string& idealJson, const std::string& poly) {
        const Ideal ideal = idealFromJson(Json::parse(idealJson));
        return radicalContains(ideal, parsePoly(ideal.ring(), poly));
    });
    m.def("radical_equals", [](const std::string& a, const std::string& b) {
        return radicalEquals(idealFromJson(Json::parse(a)), idealFromJson(Json::parse(b)));
    });

    // Concrete models.
    m.def("hwv", [](const std::string& lam, int n) {
        return printPoly(hwv(partitionArg(lam), n));
    });
    m.def("ideal_lambda", [](const std::string& lam, int r, int s) {
        return idealToJson(idealLambda(partitionArg(lam), spaceArg(r, s)).ideal).dump();
    });
    m.def("rank_locus_ideal", [](py::object evenRank, py::object oddRank, int r, int s) {
        std::optional<int> er, orr;
        if (!evenRank.is_none()) er = evenRank.cast<int>();
        if (!oddRank.is_none()) orr = oddRank.cast<int>();
        return idealToJson(rankLocusIdeal(er, orr, spaceArg(r, s))).dump();
    });
    m.def("veronese_kernel", [](int s) { return idealToJson(veroneseKernel(s)).dump(); });
    m.def("graded_multiplicities", [](const std::string& lam, int n, int degree) {
        std::vector<std::string> out;
        for (const Partition& p :
             gradedMultiplicities(idealLambda(partitionArg(lam), spaceArg(n, 0)), degree))
            out.push_back(p.toText());
        return out;
    });

    // Symbolic spectrum.
    m.def("is_gl_prime", [](const py::object& spec) { return isGLPrime(glIdealArg(spec)); });
    m.def("gl_contains", [](const py::object& a, const py::object& b) {
        return glContains(glIdealArg(a), glIdealArg(b));
    });
    m.def("gl_radical", [](const py::object& spec) {
        const GLIdeal rad = glRadical(glIdealArg(spec));
        switch (rad.kind()) {
            case GLIdeal::Kind::Zero: return std::string("0");
            case GLIdeal::Kind::Unit: return std::string("unit");
            default: return rad.partition().toText();
        }
    });
    m.def("minimal_gl_primes", [](const py::object& spec) {
        py::list out;
        for (const auto& p : minimalGLPrimes(glIdealArg(spec))) out.append(pointObj(p));
        return out;
    });
    m.def("poset_le", [](py::object p, py::object q) {
        const auto parse = [](py::object o) {
            if (py::isinstance<py::str>(o)) return SpectrumPoint::infinity();
            auto t = o.cast<std::pair<int, int>>();
            return SpectrumPoint::at(t.first, t.second);
        };
        return posetLe(parse(p), parse(q));
    });
    m.def("cross_validate", [](int maxSize, int jobs) {
        const CrossValidation cv = crossValidate(maxSize, jobs);
        py::list out;
        for (const BridgeCheck& c : cv.checks) {
            py::dict entry;
            entry["pair"] = py::make_tuple(c.lambda.toText(), c.mu.toText());
            entry["symbolic"] = c.symbolic;
            entry["geometric"] = c.geometric;
            entry["space"] = py::make_tuple(c.space.even, c.space.odd);
            entry["agree"] = c.agree;
            out.append(entry);
        }
        return out;
    }, py::arg("max_size") = 2, py::arg("jobs") = 1);

    // Degree bounds.
    m.def("eta_bound", [](const std::string& functor, int k) {
        return etaBound(PolyFunctor::fromText(functor), k).get_str();
    });
    m.def("rough_bound", [](int d, int k) { return roughBound(d, k).get_str(); });

    m.attr("__version__") = "0.1.0";
}
