/*
   Copyright 2026 The ramcount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "ramcount/cli.hpp"
#include "ramcount/counting.hpp"
#include "ramcount/pencil.hpp"
#include "ramcount/report.hpp"
#include "ramcount/schubert.hpp"

namespace py = pybind11;
using namespace ramcount;

namespace {

Characteristic characteristic(const py::object& p) {
    if (py::isinstance<py::str>(p)) return parse_characteristic(p.cast<std::string>());
    return Characteristic::prime(p.cast<int>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Counting rational maps with prescribed ramification";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    m.def(
        "count_json",
        [](std::vector<int> orders, const py::object& p) { return count_json(count(std::move(orders), characteristic(p))).dump(); },
        py::arg("orders"), py::arg("p"));
    m.def(
        "n_three",
        [](int e1, int e2, int e3, const py::object& p) { return n_three(e1, e2, e3, characteristic(p)); },
        py::arg("e1"), py::arg("e2"), py::arg("e3"), py::arg("p"));
    m.def(
        "intersection_number", [](int d, const std::vector<int>& orders) { return intersection_number(d, orders); },
        py::arg("d"), py::arg("orders"));
    m.def("pencil_count", &pencil_count, py::arg("d"), py::arg("q"));
    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = run(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run one command line; returns (exit_code, stdout, stderr).");
}
