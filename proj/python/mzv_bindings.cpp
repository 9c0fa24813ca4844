// Python extension module: exposes the renormalized-value pipeline with
// exact results carried as strings (the pure-Python wrapper turns rationals
// into fractions.Fraction).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "mzv/bernoulli.hpp"
#include "mzv/errors.hpp"
#include "mzv/mzv_numeric.hpp"
#include "mzv/renorm.hpp"

namespace py = pybind11;
using namespace mzv;

namespace {

Composition comp(const std::vector<long long>& parts) {
    return Composition{parts};
}

std::vector<Rational> parse_dirs(const std::vector<std::string>& dirs) {
    std::vector<Rational> out;
    out.reserve(dirs.size());
    for (const auto& d : dirs) {
        out.push_back(Rational::parse(d));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact renormalized multiple zeta values";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const DomainError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    m.def(
        "gzeta_nonpos",
        [](const std::vector<long long>& parts) { return gzeta_nonpos(comp(parts)).str(); },
        py::arg("parts"),
        "Renormalized value at non-positive arguments, as an exact rational string.");

    m.def(
        "gzeta_positive",
        [](const std::vector<long long>& parts) { return gzeta_positive(comp(parts)).str(); },
        py::arg("parts"),
        "Renormalized value at positive arguments, as a polynomial in T over "
        "convergent zeta symbols.");

    m.def(
        "gzeta_symmetrized",
        [](const std::vector<long long>& parts, const std::vector<std::string>& dirs) {
            return gzeta_symmetrized(comp(parts), parse_dirs(dirs)).str();
        },
        py::arg("parts"), py::arg("directions"),
        "Direction-symmetrized renormalized value, as an exact rational string.");

    m.def(
        "gzeta_positive_numeric",
        [](const std::vector<long long>& parts, double t_value, double tol) {
            return numeric_value(gzeta_positive(comp(parts)), t_value, tol);
        },
        py::arg("parts"), py::arg("t") = 0.0, py::arg("tol") = 1e-8,
        "Float value of the positive-argument result at a given T, with "
        "certified symbol evaluation.");

    m.def(
        "mzv_numeric",
        [](const std::vector<long long>& parts, double tol) {
            return mzv_numeric(comp(parts), tol);
        },
        py::arg("parts"), py::arg("tol") = 1e-8,
        "Certified float value of a convergent multiple zeta value.");

    m.def(
        "bernoulli",
        [](unsigned n) { return bernoulli(n).str(); },
        py::arg("n"), "Bernoulli number B_n as an exact rational string.");

    m.def(
        "zeta_nonpositive",
        [](long long s) { return zeta_nonpositive(s).str(); },
        py::arg("s"), "Riemann zeta at a non-positive integer, exact.");
}
