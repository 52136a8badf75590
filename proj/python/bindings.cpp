#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frobpow/config.hpp"
#include "frobpow/session.hpp"

namespace py = pybind11;
using namespace frobpow;

namespace {

// Reports cross the boundary as JSON strings; the python wrapper turns them
// into dicts so the C++ and CLI payloads stay bit-identical.
std::string dump(const json& j) { return j.dump(); }

// pybind11 holders cannot be shared_ptr<const T>; rings travel through a
// small value handle instead.
struct RingHandle {
  RingPtr ptr;
};

Ideal make_ideal(const RingHandle& ring, const std::vector<std::string>& gens) {
  std::vector<Poly> ps;
  ps.reserve(gens.size());
  for (const auto& g : gens) ps.push_back(parse_poly(g, ring.ptr));
  return Ideal(ring.ptr, std::move(ps));
}

TestElementStrategy make_strategy(const RingPtr& ring, const std::string& spec,
                                  int power) {
  if (spec == "unit") return TestElementStrategy::unit();
  if (spec == "jacobian") return TestElementStrategy::jacobian(power);
  if (spec.empty())
    return ring->is_regular_presentation() ? TestElementStrategy::unit()
                                           : TestElementStrategy::jacobian(power);
  return TestElementStrategy::explicit_elem(parse_poly(spec, ring), power);
}

std::vector<Poly> parse_sop(const RingPtr& ring, const std::vector<std::string>& z) {
  std::vector<Poly> out;
  out.reserve(z.size());
  for (const auto& s : z) out.push_back(parse_poly(s, ring));
  return out;
}

FlatExtension make_extension(const RingHandle& R, const RingHandle& T,
                             const std::vector<std::string>& z) {
  FiberPresentation fiber;
  fiber.T = T.ptr;
  fiber.z = parse_sop(T.ptr, z);
  return build_extension(R.ptr, fiber);
}

}  // namespace

PYBIND11_MODULE(_frobpow, m) {
  m.doc() = "Prime-characteristic ideal calculus: Groebner bases over F_p, "
            "Frobenius and tight closure, Hilbert-Kunz tables, flat "
            "base-change verification";

  py::register_exception<Error>(m, "FrobpowError");

  py::class_<RingHandle>(m, "Ring")
      .def(py::init([](const std::string& literal) {
             return RingHandle{parse_ring(literal)};
           }),
           py::arg("literal"))
      .def(py::init([](uint32_t p, std::vector<std::string> vars,
                       std::vector<std::string> relations, const std::string& order) {
             return RingHandle{make_ring(
                 p, std::move(vars), std::move(relations),
                 order == "lex" ? OrderKind::lex : OrderKind::grevlex)};
           }),
           py::arg("p"), py::arg("vars"),
           py::arg("relations") = std::vector<std::string>{},
           py::arg("order") = "grevlex")
      .def_property_readonly("p", [](const RingHandle& r) { return r.ptr->p(); })
      .def_property_readonly("nvars",
                             [](const RingHandle& r) { return r.ptr->nvars(); })
      .def_property_readonly(
          "regular",
          [](const RingHandle& r) { return r.ptr->is_regular_presentation(); })
      .def("dim", [](const RingHandle& r) { return krull_dim(r.ptr); })
      .def("__repr__", [](const RingHandle& r) { return to_string(*r.ptr); });

  py::class_<Ideal>(m, "Ideal")
      .def(py::init(&make_ideal), py::arg("ring"), py::arg("gens"))
      .def_property_readonly("ring", [](const Ideal& I) { return RingHandle{I.ring()}; })
      .def("groebner",
           [](const Ideal& I) {
             std::vector<std::string> out;
             for (const Poly& g : I.groebner()) out.push_back(to_string(g));
             return out;
           })
      .def("normal_form",
           [](const Ideal& I, const std::string& f) {
             return to_string(normal_form(parse_poly(f, I.ring()), I));
           })
      .def("contains",
           [](const Ideal& I, const std::string& f) {
             return contains(I, parse_poly(f, I.ring()));
           })
      .def("colon",
           [](const Ideal& I, const std::string& f) {
             return colon(I, parse_poly(f, I.ring()));
           })
      .def("intersect", [](const Ideal& I, const Ideal& J) { return intersect(I, J); })
      .def("length", [](const Ideal& I) { return length(I); })
      .def("dim", [](const Ideal& I) { return krull_dim(I); })
      .def("socle",
           [](const Ideal& I) {
             std::vector<std::string> out;
             for (const Poly& f : socle(I)) out.push_back(to_string(f));
             return out;
           })
      .def("is_parameter_ideal", [](const Ideal& I) { return is_parameter_ideal(I); })
      .def("standard_monomials",
           [](const Ideal& I, int64_t cap) {
             StandardMonomialBasis b = standard_monomials(I, cap);
             if (!b.finite) return py::object(py::none());
             std::vector<std::string> out;
             for (const Monomial& mo : b.monomials)
               out.push_back(to_string(mo, *I.ring()->amb));
             return py::object(py::cast(out));
           },
           py::arg("cap") = 0)
      .def("frobenius_power",
           [](const Ideal& I, uint64_t q) { return frobenius_power(I, q); })
      .def("__eq__", [](const Ideal& I, const Ideal& J) { return equal_ideals(I, J); })
      .def("__repr__", [](const Ideal& I) { return to_string(I); });

  m.def("multiplicity",
        [](const RingHandle& r) { return multiplicity(r.ptr); },
        "Multiplicity e(A) from the Hilbert series");
  m.def("hilbert_series_str",
        [](const Ideal& I) { return hilbert_series(I).str(); });

  m.def("frobenius_closure_test",
        [](const Ideal& I, const std::string& u, int emax) {
          return dump(to_json(frobenius_closure_test(parse_poly(u, I.ring()), I, emax)));
        },
        py::arg("ideal"), py::arg("elem"), py::arg("emax") = 3);

  m.def("tight_closure_test",
        [](const Ideal& I, const std::string& u, const std::string& test_element,
           int test_power, int emax) {
          auto strat = make_strategy(I.ring(), test_element, test_power);
          return dump(to_json(
              tight_closure_test(parse_poly(u, I.ring()), I, strat, std::nullopt, emax)));
        },
        py::arg("ideal"), py::arg("elem"), py::arg("test_element") = "",
        py::arg("test_power") = 2, py::arg("emax") = 3);

  m.def("tight_closure_candidate",
        [](const Ideal& I, const std::string& test_element, int test_power, int emax) {
          auto strat = make_strategy(I.ring(), test_element, test_power);
          return dump(to_json(tight_closure_candidate(I, strat, emax), *I.ring()->amb));
        },
        py::arg("ideal"), py::arg("test_element") = "", py::arg("test_power") = 2,
        py::arg("emax") = 3);

  m.def("hilbert_kunz",
        [](const Ideal& I, int emax) { return dump(to_json(hilbert_kunz(I, emax))); },
        py::arg("ideal"), py::arg("emax") = 3);

  m.def("hilbert_kunz_csv",
        [](const Ideal& I, int emax) { return hilbert_kunz(I, emax).csv(); },
        py::arg("ideal"), py::arg("emax") = 3);

  m.def("tau_truncated",
        [](const RingHandle& r, const std::vector<std::string>& z, int tmax,
           const std::string& test_element, int test_power, int emax) {
          auto strat = make_strategy(r.ptr, test_element, test_power);
          return dump(to_json(tau_truncated(r.ptr, parse_sop(r.ptr, z), tmax, strat, emax)));
        },
        py::arg("ring"), py::arg("sop"), py::arg("tmax") = 3,
        py::arg("test_element") = "", py::arg("test_power") = 2, py::arg("emax") = 3);

  m.def("f_injectivity_check",
        [](const RingHandle& r, const std::vector<std::string>& z, int emax) {
          return dump(to_json(f_injectivity_check(r.ptr, parse_sop(r.ptr, z), emax)));
        },
        py::arg("ring"), py::arg("sop"), py::arg("emax") = 3);

  m.def("f_rationality_check",
        [](const RingHandle& r, const std::vector<std::string>& z,
           const std::string& test_element, int test_power, int emax) {
          auto strat = make_strategy(r.ptr, test_element, test_power);
          return dump(to_json(
              f_rationality_check(r.ptr, parse_sop(r.ptr, z), strat, emax)));
        },
        py::arg("ring"), py::arg("sop"), py::arg("test_element") = "",
        py::arg("test_power") = 2, py::arg("emax") = 3);

  m.def("test_exponent_search",
        [](const Ideal& I, const std::string& c, const std::string& test_element,
           int test_power, int emax) {
          auto strat = make_strategy(I.ring(), test_element, test_power);
          return dump(to_json(
              test_exponent_search(parse_poly(c, I.ring()), I, strat, emax)));
        },
        py::arg("ideal"), py::arg("c"), py::arg("test_element") = "",
        py::arg("test_power") = 2, py::arg("emax") = 3);

  py::class_<FlatExtension>(m, "FlatExtension")
      .def(py::init(&make_extension), py::arg("base"), py::arg("fiber"), py::arg("z"))
      .def_property_readonly("S", [](const FlatExtension& X) { return RingHandle{X.S}; })
      .def("extend_ideal",
           [](const FlatExtension& X, const Ideal& I, int64_t t, bool bracket) {
             return extend_ideal(X, I, t, bracket);
           },
           py::arg("ideal"), py::arg("t") = 1, py::arg("bracket") = false)
      .def("check_length_identity",
           [](const FlatExtension& X, const Ideal& I, int e_min, int e_max) {
             return dump(to_json(check_length_identity(X, I, e_min, e_max)));
           },
           py::arg("ideal"), py::arg("e_min") = 1, py::arg("e_max") = 3)
      .def("check_hk_multiplicativity",
           [](const FlatExtension& X, const Ideal& I, int e_min, int e_max) {
             return dump(to_json(check_hk_multiplicativity(X, I, e_min, e_max)));
           },
           py::arg("ideal"), py::arg("e_min") = 1, py::arg("e_max") = 3)
      .def("check_kunz_inequality",
           [](const FlatExtension& X, int e_min, int e_max) {
             return dump(to_json(check_kunz_inequality(X, e_min, e_max)));
           },
           py::arg("e_min") = 1, py::arg("e_max") = 3)
      .def("check_tightly_closed_extension",
           [](const FlatExtension& X, const Ideal& I, int64_t t,
              const std::string& test_element, int test_power, int emax) {
             auto strat = make_strategy(X.R, test_element, test_power);
             return dump(to_json(check_tightly_closed_extension(X, I, t, strat, emax)));
           },
           py::arg("ideal"), py::arg("t") = 1, py::arg("test_element") = "",
           py::arg("test_power") = 2, py::arg("emax") = 3)
      .def("check_test_exponent_transfer",
           [](const FlatExtension& X, const std::string& c, const Ideal& I,
              const std::string& test_element, int test_power, int emax) {
             auto strat = make_strategy(X.R, test_element, test_power);
             return dump(to_json(
                 check_test_exponent_transfer(X, parse_poly(c, X.R), I, strat, emax)));
           },
           py::arg("c"), py::arg("ideal"), py::arg("test_element") = "",
           py::arg("test_power") = 2, py::arg("emax") = 3)
      .def("check_tau_extension",
           [](const FlatExtension& X, const std::vector<std::string>& z_base, int tmax,
              const std::string& test_element, int test_power, int emax) {
             auto strat = make_strategy(X.R, test_element, test_power);
             return dump(to_json(
                 check_tau_extension(X, parse_sop(X.R, z_base), tmax, strat, emax)));
           },
           py::arg("z_base"), py::arg("tmax") = 2, py::arg("test_element") = "",
           py::arg("test_power") = 2, py::arg("emax") = 3);

  m.def("run_session_file",
        [](const std::string& path, bool with_timing) {
          SessionFile s = SessionFile::load(path);
          RunOptions opts;
          opts.with_timing = with_timing;
          RunResult rr = run_session(s, opts);
          return py::make_tuple(rr.exit_code, rr.envelopes.dump(2));
        },
        py::arg("path"), py::arg("with_timing") = false);

  m.def("set_degree_cap", [](int64_t cap) { config().gb_degree_cap = cap; });

  m.attr("__version__") = kToolVersion;
}
