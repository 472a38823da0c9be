#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pmcf/app/json_io.hpp"
#include "pmcf/app/worked_examples.hpp"
#include "pmcf/errors.hpp"

namespace py = pybind11;
using namespace pmcf;

// Rationals cross the boundary as "num/den" strings; the Python layer turns
// them into fractions.Fraction.

namespace {

std::vector<PAdicValue> rational_values(const std::vector<std::string>& xs) {
  std::vector<PAdicValue> out;
  for (const auto& x : xs) out.emplace_back(parse_rational(x));
  return out;
}

std::vector<std::string> strings(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

MCF mcf_from_strings(const std::vector<std::vector<std::string>>& seqs) {
  std::vector<std::vector<Rational>> a;
  for (const auto& s : seqs) {
    a.emplace_back();
    for (const auto& x : s) a.back().push_back(parse_rational(x));
  }
  return MCF::from_sequences(a);
}

std::string expand_json(const std::vector<PAdicValue>& in, long p, std::size_t max_steps, bool detect_period) {
  JPOptions opts;
  opts.max_steps = max_steps;
  opts.detect_period = detect_period;
  return app::dump(app::to_json(jp_expand(in, Prime(p), opts)));
}

}  // namespace

PYBIND11_MODULE(_pmcf, m) {
  m.doc() = "p-adic multidimensional continued fractions";
  py::register_exception<Error>(m, "PmcfError", PyExc_ValueError);

  m.def("expand_rational", [](const std::vector<std::string>& xs, long p, std::size_t max_steps, bool detect) {
    return expand_json(rational_values(xs), p, max_steps, detect);
  }, py::arg("values"), py::arg("p"), py::arg("max_steps") = 10'000, py::arg("detect_period") = true);

  m.def("expand_algebraic",
        [](const std::string& minpoly, const std::vector<std::string>& elements, long p, long precision,
           std::size_t max_steps, bool detect) {
          const FieldPtr field = make_field(parse_polynomial(minpoly));
          const auto emb = PAdicEmbedding::largest_root(field, Prime(p), precision);
          std::vector<PAdicValue> in;
          for (const auto& e : elements) {
            AlgebraicNumber x = parse_element(e, field);
            if (auto r = x.as_rational()) in.emplace_back(*r);
            else in.emplace_back(std::move(x), emb);
          }
          return expand_json(in, p, max_steps, detect);
        },
        py::arg("minpoly"), py::arg("elements"), py::arg("p"), py::arg("precision") = 64,
        py::arg("max_steps") = 10'000, py::arg("detect_period") = true);

  m.def("euclid", [](const std::vector<std::string>& xs, long p, std::size_t max_steps) {
    return app::dump(app::to_json(euclid_expand(rational_values(xs), Prime(p), max_steps).expansion));
  }, py::arg("values"), py::arg("p"), py::arg("max_steps") = 10'000);

  m.def("evaluate", [](const std::vector<std::vector<std::string>>& seqs) {
    return strings(evaluate_finite(mcf_from_strings(seqs)));
  }, py::arg("sequences"));

  m.def("browkin_s", [](const std::string& x, long p) { return to_string(browkin_s(parse_rational(x), Prime(p))); },
        py::arg("x"), py::arg("p"));

  m.def("digits", [](const std::string& x, long p, long precision) {
    const auto d = balanced_digit_expansion(parse_rational(x), Prime(p), precision);
    return py::make_tuple(d.start, d.digits);
  }, py::arg("x"), py::arg("p"), py::arg("precision"));

  m.def("padic_divide", [](const std::string& sigma, const std::string& tau, long p) {
    const auto r = padic_divide(parse_rational(sigma), parse_rational(tau), Prime(p));
    return py::make_tuple(to_string(r.quotient), to_string(*r.remainder.rational()));
  }, py::arg("sigma"), py::arg("tau"), py::arg("p"));

  m.def("determinant_check", [](const std::vector<std::vector<std::string>>& seqs, std::size_t n) {
    const auto d = determinant_check(mcf_from_strings(seqs), n);
    return py::make_tuple(to_string(d.det), to_string(d.expected), d.matches);
  }, py::arg("sequences"), py::arg("n"));

  m.def("paper_examples", [] { return app::dump(app::json_report(app::run_cases(app::worked_cases()))); });
}
