#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "imago/classes.hpp"
#include "imago/closed_forms.hpp"
#include "imago/errors.hpp"
#include "imago/image.hpp"
#include "imago/planner.hpp"
#include "imago/ring.hpp"

namespace py = pybind11;
using namespace imago;

namespace {

py::object py_ratio(const BigRatio& r) {
    // exact: hand the numerator/denominator to Fraction as python ints
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object num = py::module_::import("builtins").attr("int")(r.get_num().get_str());
    py::object den = py::module_::import("builtins").attr("int")(r.get_den().get_str());
    return fraction(num, den);
}

py::object py_bigint(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.get_str());
}

py::dict report_dict(const ImageReport& rep) {
    py::dict d;
    d["group"] = rep.spec;
    d["word"] = rep.word;
    d["ok"] = rep.ok;
    if (!rep.ok) {
        d["error"] = rep.error;
        return d;
    }
    d["order"] = py_bigint(rep.order);
    d["image_size"] = py_bigint(rep.image_size);
    d["ratio"] = py_ratio(rep.ratio);
    d["strategy"] = rep.strategy == Strategy::pruned ? "pruned" : "naive";
    return d;
}

ImageOptions opts_from(unsigned workers, std::size_t work_cap) {
    ImageOptions o;
    o.workers = workers;
    o.work_cap = work_cap;
    return o;
}

}  // namespace

PYBIND11_MODULE(_imago, m) {
    m.doc() = "exact image ratios of word maps on finite groups and polynomial maps on finite rings";

    py::register_exception<ParseError>(m, "ImagoParseError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "ImagoCapExceeded", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "ImagoDomainError", PyExc_ValueError);

    m.def(
        "eval_word",
        [](const std::string& word, const std::string& group, unsigned workers,
           std::size_t work_cap) {
            return report_dict(
                image_ratio(Word::parse(word), GroupSpec::parse(group), opts_from(workers, work_cap)));
        },
        py::arg("word"), py::arg("group"), py::arg("workers") = 1,
        py::arg("work_cap") = 100'000'000,
        "Exact image ratio of a word map on a finite group.");

    m.def(
        "eval_poly",
        [](const std::string& poly, const std::string& ring, std::size_t work_cap) {
            return report_dict(
                poly_image_ratio(NCPoly::parse(poly), RingSpec::parse(ring), opts_from(1, work_cap)));
        },
        py::arg("poly"), py::arg("ring"), py::arg("work_cap") = 100'000'000,
        "Exact image ratio of a polynomial map on a finite ring.");

    m.def(
        "scan",
        [](const std::vector<std::string>& words, const std::vector<std::string>& groups) {
            std::vector<Word> ws;
            std::vector<GroupSpec> gs;
            for (const auto& t : words) ws.push_back(Word::parse(t));
            for (const auto& t : groups) gs.push_back(GroupSpec::parse(t));
            py::list out;
            for (const auto& rep : scan(ws, gs)) out.append(report_dict(rep));
            return out;
        },
        py::arg("words"), py::arg("groups"));

    m.def(
        "plan",
        [](const std::string& target, const std::string& epsilon, const std::string& M) {
            RatioPlan p = approximate(parse_ratio(target), parse_ratio(epsilon));
            BigInt m_val(M);
            GroupSpec g = realize(p, m_val);
            py::dict d;
            d["m"] = p.m;
            d["field_sizes"] = p.field_sizes;
            d["target"] = py_ratio(p.target);
            d["achieved"] = py_ratio(p.achieved);
            d["error"] = py_ratio(p.error);
            d["exact"] = p.exact;
            d["group_spec"] = g.to_string();
            d["group_order"] = py_bigint(g.order());
            return d;
        },
        py::arg("target"), py::arg("epsilon") = "1e-6", py::arg("M") = "2",
        "Greedy dyadic plan realizing the target ratio on a concrete group.");

    m.def(
        "classes",
        [](unsigned long q, bool ring_variant) {
            py::list out;
            for (const auto& c : gl2_class_reps(q, ring_variant)) {
                py::dict d;
                switch (c.family) {
                    case ClassFamily::central: d["family"] = "central"; break;
                    case ClassFamily::split: d["family"] = "split"; break;
                    case ClassFamily::jordan: d["family"] = "jordan"; break;
                    case ClassFamily::irreducible: d["family"] = "irreducible"; break;
                    default: d["family"] = "none";
                }
                d["size"] = py_bigint(c.size);
                d["rep"] = py::make_tuple(c.rep.a(), c.rep.b(), c.rep.c(), c.rep.d());
                out.append(d);
            }
            return out;
        },
        py::arg("q"), py::arg("ring_variant") = false);

    m.def("commutator_cyclic_ratio",
          [](unsigned long n) { return py_ratio(commutator_cyclic_ratio(n)); }, py::arg("n"));

    m.def(
        "gl2_power_ratio",
        [](unsigned long q, const std::string& M) {
            return py_ratio(gl2_power_ratio(q, BigInt(M)));
        },
        py::arg("q"), py::arg("M"));

    m.def(
        "admissible_exponents",
        [](const std::string& M, unsigned count) {
            auto rep = admissible_exponents(BigInt(M), count);
            py::dict d;
            d["p1"] = py_bigint(rep.p1);
            d["b"] = rep.b;
            d["b_list"] = rep.b_list;
            d["admissible_r"] = rep.admissible_r;
            py::list fac;
            for (const auto& [p, t] : rep.prime_factorization)
                fac.append(py::make_tuple(py_bigint(p), t));
            d["prime_factorization"] = fac;
            return d;
        },
        py::arg("M"), py::arg("count") = 5);

    m.def("gl2ring_square_closed_forms", [](unsigned r) {
        auto forms = gl2ring_square_closed_forms(r);
        return py::make_tuple(py_ratio(forms.stated_value), py_ratio(forms.classcount_value));
    });
}
