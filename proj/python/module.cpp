#include <pybind11/pybind11.h>
PYBIND11_MODULE(_gehman, m) { m.doc() = "placeholder"; }
