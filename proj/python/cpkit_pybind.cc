// Copyright 2026 The cpkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cpkit/channels.hpp"
#include "cpkit/cli.hpp"
#include "cpkit/dsl.hpp"

namespace py = pybind11;
using namespace cpkit;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;
using BArray = py::array_t<bool, py::array::c_style | py::array::forcecast>;

Object to_object(const std::vector<std::size_t> &dims) { return Object(dims); }

CMor to_cmor(const CArray &a, const Object &dom, const Object &cod) {
  if (a.ndim() != 2) {
    throw InvalidArgument("expected a 2-d array");
  }
  if (std::size_t(a.shape(0)) != cod.total() || std::size_t(a.shape(1)) != dom.total()) {
    throw ShapeMismatch("array shape does not match " + dom.str() + " -> " + cod.str());
  }
  return CMor(dom, cod, std::vector<Complex>(a.data(), a.data() + a.size()));
}

RMor to_rmor(const BArray &a, const Object &dom, const Object &cod) {
  if (a.ndim() != 2) {
    throw InvalidArgument("expected a 2-d array");
  }
  if (std::size_t(a.shape(0)) != cod.total() || std::size_t(a.shape(1)) != dom.total()) {
    throw ShapeMismatch("array shape does not match " + dom.str() + " -> " + cod.str());
  }
  std::vector<Bool> e;
  e.reserve(a.size());
  for (py::ssize_t i = 0; i < a.size(); ++i) {
    e.emplace_back(a.data()[i]);
  }
  return RMor(dom, cod, std::move(e));
}

CArray to_array(const CMor &m) {
  CArray out({py::ssize_t(m.rows()), py::ssize_t(m.cols())});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

BArray to_array(const RMor &m) {
  BArray out({py::ssize_t(m.rows()), py::ssize_t(m.cols())});
  std::transform(m.entries().begin(), m.entries().end(), out.mutable_data(), [](Bool b) { return b.value; });
  return out;
}

// A morphism as a dict with dom and cod factor lists and the matrix.
template <Scalar S>
py::dict to_dict(const Mor<S> &m) {
  py::dict d;
  d["dom"] = m.dom().factors();
  d["cod"] = m.cod().factors();
  d["matrix"] = to_array(m);
  return d;
}

template <Scalar S>
py::dict eval_expr(const std::string &text, const py::dict &bindings) {
  dsl::Env<S> env;
  for (const auto &[key, value] : bindings) {
    const auto binding = value.template cast<py::tuple>();
    if (binding.size() != 3) {
      throw InvalidArgument("a binding is a (dom, cod, matrix) tuple");
    }
    const Object dom = to_object(binding[0].template cast<std::vector<std::size_t>>());
    const Object cod = to_object(binding[1].template cast<std::vector<std::size_t>>());
    if constexpr (std::is_same_v<S, Complex>) {
      env.emplace(key.template cast<std::string>(), to_cmor(binding[2].template cast<CArray>(), dom, cod));
    } else {
      env.emplace(key.template cast<std::string>(), to_rmor(binding[2].template cast<BArray>(), dom, cod));
    }
  }
  return to_dict(dsl::eval<S>(*dsl::parse_expr(text), env));
}

CKraus make_kraus(const CArray &a, const std::vector<std::size_t> &in, const std::vector<std::size_t> &out,
                  const std::vector<std::size_t> &ancilla) {
  const Object i = to_object(in), o = to_object(out), c = to_object(ancilla);
  return CKraus(to_cmor(a, i, o * c), i, o, c);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Completely positive maps over dagger compact categories";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (const Error &e) {
      py::set_error(error, (std::string(e.kind()) + ": " + e.what()).c_str());
    }
  });

  py::class_<CKraus>(m, "Kraus", "Kraus morphism g : in -> out (x) ancilla")
      .def(py::init(&make_kraus), py::arg("matrix"), py::arg("in_dims"), py::arg("out_dims"),
           py::arg("ancilla_dims"))
      .def_property_readonly("in_dims", [](const CKraus &k) { return k.in().factors(); })
      .def_property_readonly("out_dims", [](const CKraus &k) { return k.out().factors(); })
      .def_property_readonly("ancilla_dims", [](const CKraus &k) { return k.ancilla().factors(); })
      .def_property_readonly("matrix", [](const CKraus &k) { return to_array(k.kraus()); });

  m.def("normalize", [](const std::string &text) { return dsl::print(*dsl::parse_expr(text)); },
        "Parse an expression and print it back in canonical form", py::arg("expr"));
  m.def(
      "eval",
      [](const std::string &text, const py::dict &bindings, const std::string &semiring) {
        if (semiring == "complex") {
          return eval_expr<Complex>(text, bindings);
        }
        if (semiring == "bool") {
          return eval_expr<Bool>(text, bindings);
        }
        throw InvalidArgument("unknown semiring '" + semiring + "'");
      },
      "Evaluate an expression; bindings map names to (dom, cod, matrix)", py::arg("expr"),
      py::arg("bindings") = py::dict(), py::arg("semiring") = "complex");

  m.def("cp_equal", &cp_equal<Complex>, py::arg("f"), py::arg("g"), py::arg("tol") = 1e-9);
  m.def("cp_compose", &cp_compose<Complex>, "g after f", py::arg("g"), py::arg("f"));
  m.def("choi", [](const CKraus &k) { return to_array(choi_of_kraus(k).matrix); }, py::arg("kraus"));
  m.def(
      "check_cp",
      [](const CArray &choi, double tol) {
        const auto n = std::size_t(choi.ndim() == 2 ? choi.shape(0) : 0);
        const CpCheck r = check_cp(to_cmor(choi, Object{n}, Object{n}), tol);
        return py::make_tuple(r.completely_positive, r.min_eigenvalue);
      },
      "Returns (completely_positive, min_eigenvalue)", py::arg("choi"), py::arg("tol") = 1e-9);
  m.def(
      "kraus_from_choi",
      [](const CArray &choi, std::size_t in_dim, std::size_t out_dim, double tol) {
        const std::size_t n = in_dim * out_dim;
        const DilationResult r = kraus_from_choi(ChoiMatrix{in_dim, out_dim, to_cmor(choi, Object{n}, Object{n})}, tol);
        py::list ops;
        for (const CMor &k : r.kraus_ops) {
          ops.append(to_array(k));
        }
        py::dict d;
        d["dilation"] = r.dilation;
        d["kraus_ops"] = ops;
        d["ancilla_dim"] = r.ancilla_dim;
        d["reconstruction_error"] = r.reconstruction_error;
        return d;
      },
      py::arg("choi"), py::arg("in_dim"), py::arg("out_dim"), py::arg("tol") = kDefaultKrausTol);
  m.def(
      "run_cli",
      [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Run the command-line tool in process; returns (exit_code, stdout, stderr)", py::arg("args"));
}
