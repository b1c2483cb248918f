#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ncg/audit.hpp"
#include "ncg/deviations.hpp"
#include "ncg/game.hpp"
#include "ncg/profile_io.hpp"
#include "ncg/search.hpp"

namespace py = pybind11;

// Rationals cross the boundary as exact "p/q" strings; callers that want
// arithmetic can feed them to fractions.Fraction.

PYBIND11_MODULE(_ncg, m) {
  m.doc() = "exact sum-distance network creation game core";

  py::class_<ncg::StrategyVector>(m, "Profile")
      .def(py::init([](int n, const std::string& alpha,
                       std::vector<std::vector<int>> strategies) {
             return ncg::StrategyVector::create(n, ncg::parse_rational(alpha),
                                                std::move(strategies));
           }),
           py::arg("n"), py::arg("alpha"), py::arg("strategies"))
      .def_readonly("n", &ncg::StrategyVector::n)
      .def_property_readonly(
          "alpha",
          [](const ncg::StrategyVector& s) { return ncg::to_string(s.alpha); })
      .def_readonly("strategies", &ncg::StrategyVector::strategies)
      .def("__repr__", [](const ncg::StrategyVector& s) {
        std::ostringstream out;
        out << "Profile(n=" << s.n << ", alpha=" << ncg::to_string(s.alpha)
            << ")";
        return out.str();
      });

  m.def("parse_profile", [](const std::string& text) {
    std::istringstream in(text);
    return ncg::read_profile(in);
  });
  m.def("write_profile", &ncg::write_profile);

  m.def("social_cost", [](const ncg::StrategyVector& s) {
    return ncg::social_cost(s).str();
  });
  m.def("player_cost", [](const ncg::StrategyVector& s, int u) {
    return ncg::player_cost(s, u).total.str();
  });
  m.def("optimum_cost", [](int n, const std::string& alpha) {
    return ncg::optimum_cost(n, ncg::parse_rational(alpha)).cost.str();
  });

  m.def(
      "is_nash",
      [](const ncg::StrategyVector& s, const std::string& mode) {
        auto v = ncg::is_nash(s, mode == "family"
                                     ? ncg::VerifyMode::FamilyRestricted
                                     : ncg::VerifyMode::Exact);
        py::object witness = py::none();
        if (v.witness)
          witness = py::str(ncg::describe(*v.witness, s, v.witness_delta));
        return py::make_tuple(v.is_equilibrium, witness);
      },
      py::arg("profile"), py::arg("mode") = "exact");

  m.def("best_response", [](const ncg::StrategyVector& s, int u) {
    auto br = ncg::best_response(s, u);
    return py::make_tuple(br.cost.str(), br.strategy);
  });

  m.def(
      "enumerate_ne",
      [](int n, const std::string& alpha, bool include_disconnected,
         int node_limit) {
        ncg::SearchSpec sp;
        sp.n = n;
        sp.alpha = ncg::parse_rational(alpha);
        sp.include_disconnected = include_disconnected;
        sp.node_limit = node_limit;
        return ncg::enumerate_ne(sp);
      },
      py::arg("n"), py::arg("alpha"), py::arg("include_disconnected") = false,
      py::arg("node_limit") = 6);

  m.def(
      "run_audit",
      [](const ncg::StrategyVector& s, std::vector<std::string> checks) {
        ncg::AuditOptions opt;
        opt.checks = std::move(checks);
        auto rep = ncg::run_audit(s, opt);
        py::list out;
        for (const auto& ck : rep.checks) {
          py::dict d;
          d["name"] = ck.name;
          d["verdict"] = ncg::to_string(ck.verdict);
          d["witness"] = ck.witness;
          d["preconditions"] = ck.preconditions;
          d["notes"] = ck.notes;
          out.append(d);
        }
        return out;
      },
      py::arg("profile"), py::arg("checks") = std::vector<std::string>{});

  m.def(
      "best_response_dynamics",
      [](const ncg::StrategyVector& s0, int rounds) {
        auto r = ncg::best_response_dynamics(s0, rounds);
        const char* status = "round-cap";
        if (r.status == ncg::DynamicsStatus::ConvergedNe) status = "converged";
        if (r.status == ncg::DynamicsStatus::Cycle) status = "cycle";
        py::dict d;
        d["status"] = status;
        d["rounds"] = r.rounds;
        d["trajectory"] = r.trajectory;
        return d;
      },
      py::arg("profile"), py::arg("rounds") = 100);
}
