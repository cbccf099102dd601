// Python bindings. Polynomials cross the boundary as text in the same syntax
// the command-line tool accepts, and come back in canonical form.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <ncwitt/ncwitt.hpp>

namespace py = pybind11;
using namespace ncwitt;

namespace
{

coordinate_tuple parse_tuple(const std::vector<std::string> &texts, const alphabet &a)
{
    if (texts.empty()) {
        throw std::invalid_argument("need at least one coordinate");
    }
    std::vector<free_poly> out;
    out.reserve(texts.size());
    for (const auto &t : texts) {
        out.push_back(parse_poly(t, a));
    }
    return coordinate_tuple(std::move(out));
}

std::vector<std::string> poly_strings(const std::vector<free_poly> &v)
{
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto &f : v) {
        out.push_back(format_poly(f));
    }
    return out;
}

std::vector<std::string> ghost(const std::vector<std::string> &coords, unsigned p, const std::string &alpha)
{
    const alphabet a = parse_alphabet(alpha);
    const coordinate_tuple c = parse_tuple(coords, a);
    const ghost_vector g = ghost_map(witt_context(a, p, c.size()), c);
    std::vector<std::string> out;
    for (const auto &comp : g.components()) {
        out.push_back(format_abel(comp));
    }
    return out;
}

std::vector<std::string> omega(const std::vector<std::string> &coords, unsigned p, const std::string &alpha)
{
    const alphabet a = parse_alphabet(alpha);
    witt_context(a, p, 1);
    return poly_strings(omega_map(parse_tuple(coords, a), p).entries());
}

py::dict rmap(const std::vector<std::string> &eps, unsigned p, const std::string &alpha, std::size_t degree_cap)
{
    const alphabet a = parse_alphabet(alpha);
    const coordinate_tuple e = parse_tuple(eps, a);
    r_map_options opts;
    opts.degree_cap = degree_cap;
    const r_result r = r_map(e, witt_context(a, p, e.size()), opts);
    py::list audit;
    for (const auto &step : r.audit) {
        py::dict d;
        d["index"] = step.index;
        d["divisor"] = py::int_(py::str(step.divisor.get_str()));
        d["numerator"] = format_abel(step.numerator);
        d["quotient"] = format_abel(step.quotient);
        audit.append(d);
    }
    py::dict out;
    out["r"] = poly_strings(r.coords.coords());
    out["audit"] = audit;
    out["ghost_vanishes"] = check_ghost_vanishes(r);
    return out;
}

py::list verify(std::optional<std::vector<std::string>> ids, unsigned p, std::size_t level, std::uint64_t seed)
{
    verify_options opts;
    opts.p = p;
    opts.level = level;
    opts.seed = seed;
    verify_report rep;
    {
        py::gil_scoped_release release;
        rep = run_verify(ids ? *ids : check_ids(), opts);
    }
    py::list out;
    for (const auto &c : rep.checks) {
        py::dict d;
        d["check_id"] = c.id;
        d["anchor"] = c.anchor;
        d["status"] = c.passed ? "pass" : "fail";
        d["cases"] = c.cases;
        d["details"] = c.details;
        d["seconds"] = c.seconds;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact Witt-vector computations over free non-commutative rings";

    auto base = py::register_exception<error>(m, "NcwittError", PyExc_RuntimeError);
    py::register_exception<alphabet_mismatch>(m, "AlphabetMismatch", base.ptr());
    py::register_exception<context_mismatch>(m, "ContextMismatch", base.ptr());
    py::register_exception<not_divisible>(m, "NotDivisible", base.ptr());
    py::register_exception<epsilon_not_commutator>(m, "EpsilonNotCommutator", base.ptr());
    py::register_exception<degree_cap_exceeded>(m, "DegreeCapExceeded", base.ptr());
    py::register_exception<unsupported_setting>(m, "UnsupportedSetting", base.ptr());
    py::register_exception<syntax_error>(m, "ParseError", base.ptr());
    py::register_exception<unknown_generator>(m, "UnknownGenerator", base.ptr());

    m.def(
        "normalize", [](const std::string &text, const std::string &alpha) { return format_poly(parse_poly(text, parse_alphabet(alpha))); },
        py::arg("text"), py::arg("alphabet") = "X,Y", "Canonical text form of a polynomial.");
    m.def(
        "abelianize",
        [](const std::string &text, const std::string &alpha) {
            return format_abel(ncwitt::abelianize(parse_poly(text, parse_alphabet(alpha))));
        },
        py::arg("text"), py::arg("alphabet") = "X,Y", "Image in A/[A,A] as a sum of cyclic-word classes.");
    m.def(
        "h_membership", [](const std::string &text) { return ncwitt::h_membership(parse_poly(text, alphabet::xy())); },
        py::arg("text"), "Membership in A_4^0 + F^5 A + 2A over {X, Y}.");
    m.def("ghost", &ghost, py::arg("coords"), py::arg("p") = 2, py::arg("alphabet") = "X,Y",
          "Ghost components of (a_0, ..., a_{n-1}).");
    m.def("omega", &omega, py::arg("coords"), py::arg("p") = 2, py::arg("alphabet") = "X,Y",
          "Entries of Omega(a_0, ..., a_n) in X_n(A).");
    m.def("rmap", &rmap, py::arg("eps"), py::arg("p") = 2, py::arg("alphabet") = "X,Y", py::arg("degree_cap") = 64,
          "R-map of a tuple of commutators.");
    m.def("check_ids", &check_ids);
    m.def("verify", &verify, py::arg("ids") = py::none(), py::arg("p") = 2, py::arg("level") = 2,
          py::arg("seed") = default_seed);
    m.def(
        "counterexample_report",
        [](std::size_t n) {
            const report rep = counterexample_report(n);
            return py::make_tuple(rep.passed, rep.to_string());
        },
        py::arg("n") = 2);
}
