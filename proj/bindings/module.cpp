// Python bindings: thin text/JSON wrappers over the C++ operations.
// Ideals travel as the text format; structured results travel as JSON
// strings the caller can json.loads.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include <random>

#include "polarforge/betti.hpp"
#include "polarforge/core.hpp"
#include "polarforge/filtration.hpp"
#include "polarforge/io.hpp"
#include "polarforge/polarize.hpp"
#include "polarforge/random.hpp"
#include "polarforge/shift.hpp"

namespace py = pybind11;
using namespace polarforge;
using nlohmann::json;

namespace {

MonomialIdeal load(const std::string& text) { return parse_ideal(text).ideal; }

PolarizationSpec make_spec(const std::string& method,
                           const std::vector<int>& A, int d) {
  PolarizationSpec spec;
  if (method == "standard")
    spec.method = PolMethod::standard;
  else if (method == "box")
    spec.method = PolMethod::box;
  else if (method == "mixed")
    spec.method = PolMethod::mixed;
  else
    throw DomainError("unknown method '" + method + "'");
  spec.A = A;
  spec.d = d;
  return spec;
}

ShiftSequence make_shift(const std::string& shift, const MonomialIdeal& I,
                         std::size_t length) {
  if (length == 0) {
    Exp maxdeg = 0;
    for (const auto& g : I.gens())
      if (g.degree() > maxdeg) maxdeg = g.degree();
    if (maxdeg > 1000000) throw SizeError("shift: generator degree too large");
    length = std::max<std::size_t>(1, static_cast<std::size_t>(maxdeg));
  }
  return ShiftSequence::parse(shift, length, I.ring().size());
}

}  // namespace

PYBIND11_MODULE(_polarforge, m) {
  m.doc() = "polarization, shifting, Betti numbers and prime filtrations "
            "of monomial ideals";

  // Translators run newest-first, so the base class goes first.
  py::register_exception<Error>(m, "PolarforgeError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "IdealParseError", PyExc_ValueError);

  m.def(
      "polarize",
      [](const std::string& ideal, const std::string& method,
         const std::vector<int>& A, int d) {
        return serialize(apply_pol(load(ideal), make_spec(method, A, d)));
      },
      py::arg("ideal"), py::arg("method") = "box",
      py::arg("A") = std::vector<int>{}, py::arg("d") = 0);

  m.def("depolarize",
        [](const std::string& ideal) { return serialize(depolarize(load(ideal))); });

  m.def(
      "sigma",
      [](const std::string& ideal, const std::string& shift) {
        auto I = load(ideal);
        return serialize(sigma_a_ideal(I, make_shift(shift, I, 0)));
      },
      py::arg("ideal"), py::arg("shift") = "id");

  m.def(
      "betti",
      [](const std::string& ideal, const std::string& field,
         unsigned threads) {
        auto t =
            betti_table(load(ideal), FieldSpec::parse(field), threads);
        return to_json(t).dump();
      },
      py::arg("ideal"), py::arg("field") = "rational", py::arg("threads") = 1);

  m.def("hilbert", [](const std::string& ideal) {
    return to_json(k_polynomial(load(ideal))).dump();
  });

  m.def(
      "verify",
      [](const std::string& ideal, const std::string& method,
         const std::vector<int>& A, int d) {
        auto I = load(ideal);
        auto r = verify_polarization(I, apply_pol(I, make_spec(method, A, d)));
        return to_json(r).dump();
      },
      py::arg("ideal"), py::arg("method") = "box",
      py::arg("A") = std::vector<int>{}, py::arg("d") = 0);

  m.def(
      "filtration",
      [](const std::string& ideal, const std::string& method,
         const std::vector<int>& A, int d) {
        auto spec = make_spec(method, A, d);
        if (spec.method == PolMethod::standard)
          throw DomainError("filtration: method must be box or mixed");
        return to_json(pretty_clean_filtration(load(ideal), spec)).dump();
      },
      py::arg("ideal"), py::arg("method") = "box",
      py::arg("A") = std::vector<int>{}, py::arg("d") = 0);

  m.def("is_borel", [](const std::string& ideal) {
    return is_borel_fixed(load(ideal));
  });

  m.def("borel_closure", [](const std::string& ideal) {
    auto I = load(ideal);
    return serialize(polarforge::borel_closure(I.ring(), I.gens()));
  });

  m.def("minimal_primes", [](const std::string& ideal) {
    json arr = json::array();
    for (const auto& p : minimal_primes_squarefree(load(ideal)))
      arr.push_back(to_json(p));
    return arr.dump();
  });

  m.def(
      "shelling",
      [](const std::string& ideal, const std::string& method,
         const std::vector<int>& A, int d) {
        auto spec = make_spec(method, A, d);
        if (spec.method == PolMethod::standard)
          throw DomainError("shelling: method must be box or mixed");
        auto F = pretty_clean_filtration(load(ideal), spec);
        auto facets = shelling_order(F);
        const Ring& t = F.polarized.ring();
        std::vector<std::vector<std::string>> out;
        for (const auto& f : facets) {
          std::vector<std::string> names;
          for (auto v : f) names.push_back(t.var(v).name);
          out.push_back(std::move(names));
        }
        return out;
      },
      py::arg("ideal"), py::arg("method") = "box",
      py::arg("A") = std::vector<int>{}, py::arg("d") = 0);

  m.def(
      "random_borel",
      [](std::uint64_t seed, int n, int max_degree, int gens) {
        std::mt19937_64 rng(seed);
        RandomBorelParams params;
        params.nvars = n;
        params.max_degree = max_degree;
        params.seed_count = gens;
        return serialize(random_borel_ideal(rng, params));
      },
      py::arg("seed"), py::arg("n") = 4, py::arg("max_degree") = 4,
      py::arg("gens") = 4);
}
