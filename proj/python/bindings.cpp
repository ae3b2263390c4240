#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phinewton/certifier.hpp"
#include "phinewton/errors.hpp"
#include "phinewton/json_io.hpp"
#include "phinewton/mod_poly.hpp"
#include "phinewton/oracle.hpp"
#include "phinewton/poly_parse.hpp"
#include "phinewton/polygon.hpp"
#include "phinewton/valuation.hpp"

namespace py = pybind11;
using namespace phinewton;

namespace {

// Python ints cross the boundary as decimal text.
py::int_ to_py(const Integer& z) { return py::int_(py::str(z.get_str())); }
Integer from_py(const py::handle& h) { return parse_integer(py::str(h)); }

py::list coeffs_to_py(const IntPoly& f) {
  py::list out;
  for (const auto& c : f.coeffs()) out.append(to_py(c));
  return out;
}

// A polynomial argument is text in the CLI grammar, an integer constant, or
// an ascending coefficient list.
IntPoly poly_arg(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_poly(obj.cast<std::string>());
  if (py::isinstance<py::int_>(obj)) return IntPoly::constant(from_py(obj));
  std::vector<Integer> c;
  for (const auto& item : obj) c.push_back(from_py(item));
  return IntPoly(std::move(c));
}

SchurInput schur_arg(const py::object& phi, long n, const py::object& a_n, const py::list& a) {
  SchurInput in{poly_arg(phi), n, from_py(a_n), {}};
  for (const auto& item : a) in.a.push_back(poly_arg(py::reinterpret_borrow<py::object>(item)));
  return in;
}

py::dict point_to_py(const PolygonPoint& p) {
  py::dict d;
  d["x"] = p.x;
  d["y"] = p.y;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact phi-Newton polygon irreducibility certificates";

  static py::exception<Error> error(m, "Error");
  static py::exception<DomainError> domain_error(m, "DomainError", error.ptr());
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<PreconditionError> precondition_error(m, "PreconditionError", domain_error.ptr());
  static py::exception<NoWitness> no_witness(m, "NoWitness", error.ptr());
  static py::exception<BudgetExceeded> budget_exceeded(m, "BudgetExceeded", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const PreconditionError& e) {
      precondition_error(e.what());
    } catch (const DomainError& e) {
      domain_error(e.what());
    } catch (const NoWitness& e) {
      no_witness(e.what());
    } catch (const BudgetExceeded& e) {
      budget_exceeded(e.what());
    } catch (const Error& e) {
      error(e.what());
    }
  });

  m.def("parse_poly", [](const std::string& text) { return coeffs_to_py(parse_poly(text)); }, py::arg("text"),
        "Ascending integer coefficients of a polynomial written like 'x^3-x+7'.");
  m.def("format_poly", [](const py::object& f) { return poly_arg(f).to_string(); }, py::arg("poly"));

  m.def(
      "phi_expand",
      [](const py::object& f, const py::object& phi) {
        py::list out;
        for (const auto& t : phi_expand(poly_arg(f), poly_arg(phi)).terms) out.append(coeffs_to_py(t));
        return out;
      },
      py::arg("poly"), py::arg("phi"), "Coefficients b_0, b_1, ... of f = sum b_i phi^i.");

  m.def(
      "is_irreducible_mod_p", [](const py::object& f, unsigned long p) { return rabin_irreducible(reduce(poly_arg(f), p)); },
      py::arg("poly"), py::arg("p"));
  m.def(
      "irreducible_mod_all",
      [](const py::object& phi, unsigned long bound) {
        const IrreducibilityReport r = irreducible_mod_all(poly_arg(phi), bound);
        py::dict d;
        d["pass"] = r.pass;
        d["failing_prime"] = r.failing_prime ? py::object(py::int_(*r.failing_prime)) : py::object(py::none());
        d["primes_checked"] = r.primes_checked;
        return d;
      },
      py::arg("phi"), py::arg("bound"));

  m.def("vp", [](const py::object& z, unsigned long p) { return vp(from_py(z), p); }, py::arg("z"), py::arg("p"));
  m.def("legendre_vp_factorial", &legendre_vp_factorial, py::arg("m"), py::arg("p"));

  m.def(
      "newton_polygon",
      [](const py::object& f, const py::object& phi, unsigned long p) {
        const NewtonPolygon np = build_polygon(poly_arg(f), poly_arg(phi), p);
        py::list edges;
        for (const auto& e : np.edges) {
          py::dict d;
          d["slope"] = e.slope.to_string();
          d["hlen"] = e.hlen;
          d["start"] = point_to_py(e.start);
          d["end"] = point_to_py(e.end);
          edges.append(d);
        }
        return edges;
      },
      py::arg("poly"), py::arg("phi"), py::arg("p"));
  m.def(
      "render_polygon",
      [](const py::object& f, const py::object& phi, unsigned long p, const std::string& format) {
        if (format != "ascii" && format != "svg") throw DomainError("format must be 'ascii' or 'svg'");
        return render(build_polygon(poly_arg(f), poly_arg(phi), p), format == "svg" ? RenderFormat::svg : RenderFormat::ascii);
      },
      py::arg("poly"), py::arg("phi"), py::arg("p"), py::arg("format") = "ascii");

  m.def(
      "certify_json",
      [](const py::object& phi, long n, const py::object& a_n, const py::list& a, bool oracle, std::uint64_t cap) {
        CertifyOptions options;
        options.use_oracle = oracle;
        options.candidate_cap = cap;
        const Certificate cert = certify(schur_arg(phi, n, a_n, a), options);
        return certificate_to_json(cert).dump();
      },
      py::arg("phi"), py::arg("n"), py::arg("a_n"), py::arg("a"), py::arg("oracle") = false,
      py::arg("candidate_cap") = 10'000'000);
  m.def(
      "scaled_poly",
      [](const py::object& phi, long n, const py::object& a_n, const py::list& a) {
        const SchurInput in = schur_arg(phi, n, a_n, a);
        validate(in);
        return coeffs_to_py(scaled_expansion(in).assemble());
      },
      py::arg("phi"), py::arg("n"), py::arg("a_n"), py::arg("a"), "Coefficients of (n+1)! f.");

  m.def("hanson_witness", &hanson_witness, py::arg("n"), py::arg("k"));
  m.def("hanson_scan", &hanson_scan, py::arg("n_lo"), py::arg("n_hi"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());

  m.def(
      "bounded_factor_search",
      [](const py::object& f, long max_degree, long min_degree, const py::object& coeff_bound, std::uint64_t cap) {
        FactorSearchBudget b;
        b.min_degree = min_degree;
        b.max_degree = max_degree;
        b.candidate_cap = cap;
        if (!coeff_bound.is_none()) b.coeff_bound = from_py(coeff_bound);
        const auto g = bounded_factor_search(poly_arg(f), b);
        return g ? py::object(coeffs_to_py(*g)) : py::object(py::none());
      },
      py::arg("poly"), py::arg("max_degree"), py::arg("min_degree") = 1, py::arg("coeff_bound") = py::none(),
      py::arg("candidate_cap") = 10'000'000);
  m.def(
      "rational_roots",
      [](const py::object& f) {
        py::list out;
        for (const auto& r : rational_roots(poly_arg(f))) out.append(py::make_tuple(to_py(r.numerator()), to_py(r.denominator())));
        return out;
      },
      py::arg("poly"), "Rational roots as (numerator, denominator) pairs, ascending.");
}
