#include "rankforge/cli.hpp"
#include "rankforge/error.hpp"
#include "rankforge/factor.hpp"
#include "rankforge/io.hpp"
#include "rankforge/legendre.hpp"
#include "rankforge/nagao.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace rankforge;

namespace {

FqField make_field(std::uint64_t p, const std::vector<std::uint64_t>& modulus) {
  return modulus.empty() ? FqField::prime_field(p) : FqField::make(p, modulus);
}

int character(std::uint64_t p, const std::vector<std::uint64_t>& modulus, std::uint64_t index) {
  const FqField F = make_field(p, modulus);
  return quadratic_character(F.from_index(index));
}

// Elements are passed by enumeration index.
py::int_ quad_sum(std::uint64_t p, const std::vector<std::uint64_t>& modulus, std::uint64_t a, std::uint64_t b,
                  std::uint64_t c, const std::string& method) {
  const FqField F = make_field(p, modulus);
  const QuadSumInput in{F.from_index(a), F.from_index(b), F.from_index(c)};
  Integer s;
  if (method == "closed")
    s = quad_sum_closed(in);
  else if (method == "brute")
    s = quad_sum_brute(in);
  else if (method == "conic")
    s = conic_count(in);
  else
    throw Error(ErrorCode::InvalidArgument, "method must be closed, brute or conic");
  return py::int_(py::str(s.get_str()));
}

NumberField field_of(const std::string& min_poly) { return NumberField::make(parse_integer_poly(min_poly)); }

py::list prime_ideals(const std::string& min_poly, std::uint64_t max_norm) {
  py::list out;
  for (const auto& P : enumerate_prime_ideals(field_of(min_poly), max_norm).ideals) {
    py::dict d;
    d["norm"] = P.norm;
    d["p"] = P.p;
    d["f"] = P.f;
    d["e"] = P.e;
    d["factor"] = P.factor_text();
    out.append(d);
  }
  return out;
}

py::dict landau(const std::string& min_poly, std::uint64_t max_norm) {
  const auto r = landau_sum(field_of(min_poly), max_norm);
  py::dict d;
  d["sum"] = r.sum;
  d["ratio"] = r.ratio;
  d["count"] = r.count;
  return d;
}

std::string construct(const std::string& spec_json) {
  return family_to_json(construct_family(family_spec_from_json(Json::parse(spec_json)))).dump();
}

py::list average_A_p(const std::string& family_json, std::uint64_t p, const std::string& method) {
  const CurveFamily fam = family_from_json(Json::parse(family_json));
  const ApMethod m = parse_method(method);
  py::list out;
  for (const auto& P : primes_above(fam.spec.field, p)) {
    const ApResult r = m == ApMethod::Direct ? average_A_p_direct(fam, P) : average_A_p_analytic(fam, P);
    py::dict d;
    d["norm"] = P.norm;
    d["factor"] = P.factor_text();
    d["sum_a_t"] = py::int_(py::str(r.sum_a_t.get_str()));
    d["A_p"] = format_rational(r.A_p);
    out.append(d);
  }
  return out;
}

py::dict rank(const std::string& family_json, std::uint64_t max_norm, int threads) {
  NagaoOptions opts;
  opts.threads = threads;
  const RankEstimate r = rank_estimate(family_from_json(Json::parse(family_json)), max_norm, opts);
  py::dict d;
  d["partial_sum"] = r.partial_sum;
  d["normalized"] = r.normalized;
  d["nearest_integer"] = r.nearest_integer;
  d["residual"] = r.residual;
  d["ideals_used"] = r.ideals_used;
  d["ideals_skipped"] = r.ideals_skipped_bad;
  d["low_confidence"] = r.low_confidence;
  return d;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact finite-field, number-field and elliptic-family computations";

  static py::exception<Error> error(m, "RankforgeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("quadratic_character", &character, py::arg("p"), py::arg("modulus"), py::arg("index"));
  m.def("quad_sum", &quad_sum, py::arg("p"), py::arg("modulus"), py::arg("a"), py::arg("b"), py::arg("c"),
        py::arg("method") = "closed");
  m.def("prime_ideals", &prime_ideals, py::arg("min_poly"), py::arg("max_norm"));
  m.def("landau_sum", &landau, py::arg("min_poly"), py::arg("max_norm"));
  m.def("construct_family", &construct, py::arg("spec_json"));
  m.def("average_A_p", &average_A_p, py::arg("family_json"), py::arg("p"), py::arg("method") = "analytic");
  m.def("rank_estimate", &rank, py::arg("family_json"), py::arg("max_norm"), py::arg("threads") = 1);
  m.def("run_cli", &run_cli, py::arg("args"));
}
