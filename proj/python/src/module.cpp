// Python bindings. Arrays cross the boundary in natural (C, row-major)
// order and are repacked to the library's internal layout on entry.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "pafft/convolution.hpp"
#include "pafft/bench.hpp"
#include "pafft/permutation.hpp"
#include "pafft/transform.hpp"

namespace py = pybind11;
using pafft::ComplexBuffer;
using pafft::Plan;
using pafft::PreparedFilter;
using pafft::TensorShape;

namespace {

using CArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

TensorShape shape_of(const CArray& a) {
    std::vector<std::size_t> dims(static_cast<std::size_t>(a.ndim()));
    for (py::ssize_t q = 0; q < a.ndim(); ++q)
        dims[static_cast<std::size_t>(q)] = static_cast<std::size_t>(a.shape(q));
    return TensorShape(dims);
}

std::string shape_text(const std::vector<std::size_t>& dims) {
    std::string s = "(";
    for (std::size_t q = 0; q < dims.size(); ++q) {
        if (q) s += ", ";
        s += std::to_string(dims[q]);
    }
    return s + ")";
}

ComplexBuffer buffer_for_plan(const CArray& a, const Plan& plan) {
    const TensorShape shape = shape_of(a);
    if (!(shape == plan.shape()))
        throw pafft::Error("array shape " + shape_text(shape.dims()) +
                           " does not match plan shape " + shape_text(plan.shape().dims()));
    return pafft::buffer_from_tensor(std::span(a.data(), shape.total()), shape);
}

CArray array_from_buffer(const ComplexBuffer& x, const TensorShape& shape) {
    const std::vector<std::complex<double>> values = pafft::tensor_from_buffer(x, shape);
    std::vector<py::ssize_t> np_shape(shape.rank());
    for (std::size_t q = 0; q < shape.rank(); ++q)
        np_shape[q] = static_cast<py::ssize_t>(shape.dim(q));
    CArray out(np_shape);
    std::copy(values.begin(), values.end(), out.mutable_data());
    return out;
}

template <void (*Transform)(ComplexBuffer&, const Plan&)>
CArray apply_transform(const CArray& a, const Plan& plan) {
    ComplexBuffer x = buffer_for_plan(a, plan);
    Transform(x, plan);
    return array_from_buffer(x, plan.shape());
}

}  // namespace

PYBIND11_MODULE(_pafft, m) {
    m.doc() = "general-radix FFT and permutation-avoiding circular convolution";

    py::class_<Plan>(m, "Plan",
                     "Precomputed transform machinery for one (radix, shape) pair")
        .def(py::init([](unsigned radix, const std::vector<std::size_t>& dims) {
                 return pafft::plan_create(pafft::radix_from_value(radix), TensorShape(dims));
             }),
             py::arg("radix"), py::arg("dims"))
        .def_property_readonly("radix",
                               [](const Plan& p) { return pafft::radix_value(p.radix()); })
        .def_property_readonly("dims", [](const Plan& p) { return p.shape().dims(); })
        .def_property_readonly("total", &Plan::total);

    py::class_<PreparedFilter>(m, "PreparedFilter",
                               "Filter spectrum reordered once for reuse without "
                               "per-call reordering");

    m.def("fft_forward", &apply_transform<pafft::fft_forward>, py::arg("a"), py::arg("plan"),
          "Forward DFT in natural order");
    m.def("fft_backward", &apply_transform<pafft::fft_backward>, py::arg("a"), py::arg("plan"),
          "Inverse DFT in natural order (normalized by 1/n)");
    m.def("fft_forward_unordered", &apply_transform<pafft::fft_forward_unordered>, py::arg("a"),
          py::arg("plan"), "Forward stage ladders only; expects digit-reversed input");
    m.def("fft_backward_unordered", &apply_transform<pafft::fft_backward_unordered>,
          py::arg("a"), py::arg("plan"),
          "Conjugate stage ladders plus 1/n; expects digit-reversed input");

    m.def(
        "prepare_filter",
        [](const CArray& g, const Plan& plan) {
            return pafft::prepare_filter(buffer_for_plan(g, plan), plan);
        },
        py::arg("g"), py::arg("plan"),
        "Digit-reverse a natural-order filter spectrum once, offline");
    m.def(
        "filter_from_impulse",
        [](const CArray& h, const Plan& plan) {
            return array_from_buffer(pafft::filter_from_impulse(buffer_for_plan(h, plan), plan),
                                     plan.shape());
        },
        py::arg("h"), py::arg("plan"), "Spectrum of an impulse response");
    m.def(
        "convolve_standard",
        [](const CArray& x, const CArray& g, const Plan& plan) {
            ComplexBuffer buf = buffer_for_plan(x, plan);
            pafft::convolve_standard(buf, buffer_for_plan(g, plan), plan);
            return array_from_buffer(buf, plan.shape());
        },
        py::arg("x"), py::arg("g"), py::arg("plan"),
        "Circular convolution: transform, pointwise multiply, inverse transform");
    m.def(
        "convolve_permfree",
        [](const CArray& x, const PreparedFilter& filter, const Plan& plan) {
            ComplexBuffer buf = buffer_for_plan(x, plan);
            pafft::convolve_permfree(buf, filter, plan);
            return array_from_buffer(buf, plan.shape());
        },
        py::arg("x"), py::arg("filter"), py::arg("plan"),
        "Circular convolution with zero reordering passes");

    m.def("digit_reverse", &pafft::digit_reverse, py::arg("j"), py::arg("radix"),
          py::arg("digits"), "Reverse j's base-radix digit string of the given width");
    m.def(
        "estimate_flop",
        [](std::size_t n, unsigned radix) {
            return pafft::estimate_flop(n, pafft::radix_from_value(radix));
        },
        py::arg("n"), py::arg("radix"), "Butterfly FLOP model for one transform");
    m.def(
        "estimate_ai",
        [](std::size_t n, unsigned radix, bool permutation_free) {
            return pafft::estimate_ai(n, pafft::radix_from_value(radix), permutation_free);
        },
        py::arg("n"), py::arg("radix"), py::arg("permutation_free"),
        "Arithmetic-intensity model (FLOP per byte)");
}
