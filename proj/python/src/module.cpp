#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fsrec/combinatorics.hpp"
#include "fsrec/errors.hpp"
#include "fsrec/exactness.hpp"
#include "fsrec/index_sets.hpp"
#include "fsrec/json_io.hpp"
#include "fsrec/lemmas.hpp"
#include "fsrec/recurrence.hpp"

namespace py = pybind11;

namespace {

// {weight tuple: [c_0, ..., c_M]}
py::dict to_table(const fsrec::Character& ch) {
    py::dict out;
    for (const auto& [n, poly] : ch.table()) {
        py::tuple key = py::cast(std::vector<int>(n.components().begin(), n.components().end()));
        out[key] = std::vector<std::int64_t>(poly.coefficients().begin(), poly.coefficients().end());
    }
    return out;
}

std::vector<int> to_vector(std::span<const int> s) { return {s.begin(), s.end()}; }

fsrec::LevelComposition composition(const std::vector<int>& parts) { return fsrec::LevelComposition(parts); }

} // namespace

PYBIND11_MODULE(_fsrec, m) {
    m.doc() = "characters and exact sequences of Feigin-Stoyanovsky type subspaces";

    auto base = py::register_exception<fsrec::Error>(m, "FsrecError", PyExc_ValueError);
    py::register_exception<fsrec::ResourceLimitError>(m, "ResourceLimitError", base);

    m.def("degree", [](const std::vector<int>& entries, int ell) {
        return fsrec::degree(fsrec::Configuration(entries), ell);
    }, py::arg("entries"), py::arg("ell"));

    m.def("weight", [](const std::vector<int>& entries, int ell) {
        return to_vector(fsrec::weight(fsrec::Configuration(entries), ell).components());
    }, py::arg("entries"), py::arg("ell"));

    m.def("is_admissible", [](const std::vector<int>& entries, const std::vector<int>& K) {
        return fsrec::is_admissible(fsrec::Configuration(entries), composition(K));
    }, py::arg("entries"), py::arg("K"));

    m.def("enumerate_admissible", [](const std::vector<int>& K, int max_degree, std::size_t cap) {
        std::vector<std::vector<int>> out;
        for (const auto& c : fsrec::enumerate_admissible(composition(K), max_degree, {cap}))
            out.push_back(to_vector(c.entries()));
        return out;
    }, py::arg("K"), py::arg("max_degree"), py::arg("cap") = fsrec::EnumerationLimits{}.max_outputs);

    m.def("apply_index_set", [](const std::vector<int>& K, const std::vector<int>& I) {
        return to_vector(fsrec::apply_index_set(composition(K), fsrec::IndexSet(I)).parts());
    }, py::arg("K"), py::arg("I"));

    m.def("cyclic_shift", [](const std::vector<int>& K) {
        return to_vector(fsrec::cyclic_shift(composition(K)).parts());
    }, py::arg("K"));

    m.def("d_family", [](const std::vector<int>& K) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& level : fsrec::d_family(composition(K)).by_size) {
            auto& row = out.emplace_back();
            for (const auto& I : level) row.push_back(to_vector(I.elements()));
        }
        return out;
    }, py::arg("K"));

    m.def("position_sign", [](const std::vector<int>& I, int i) {
        return fsrec::position_sign(fsrec::IndexSet(I), i);
    }, py::arg("I"), py::arg("i"));

    m.def("omega_image", [](const std::vector<int>& entries, const std::vector<int>& K) {
        return to_vector(fsrec::omega_image(fsrec::Configuration(entries), composition(K)).entries());
    }, py::arg("entries"), py::arg("K"));

    m.def("compute_character", [](const std::vector<int>& K, int M) {
        return to_table(fsrec::compute_character(composition(K), M));
    }, py::arg("K"), py::arg("M"));

    m.def("solve_character", [](const std::vector<int>& K, int M) {
        return to_table(fsrec::solve_character(composition(K), M));
    }, py::arg("K"), py::arg("M"));

    m.def("solve_coefficient", [](const std::vector<int>& K, const std::vector<int>& n, int M) {
        const auto p = fsrec::solve_coefficient(composition(K), fsrec::WeightVector(n), M);
        return std::vector<std::int64_t>(p.coefficients().begin(), p.coefficients().end());
    }, py::arg("K"), py::arg("n"), py::arg("M"));

    m.def("character_json", [](const std::vector<int>& K, int M, const std::string& method) {
        const auto Kc = composition(K);
        if (method == "enum") return fsrec::canonical_dump(fsrec::json(fsrec::compute_character(Kc, M)));
        if (method == "solve") return fsrec::canonical_dump(fsrec::json(fsrec::solve_character(Kc, M)));
        throw fsrec::InvalidArgumentError("method must be 'enum' or 'solve'");
    }, py::arg("K"), py::arg("M"), py::arg("method") = "enum");

    m.def("verify_recurrence_json", [](int ell, int k, int M) {
        return fsrec::canonical_dump(fsrec::json(fsrec::verify_recurrence(ell, k, M)));
    }, py::arg("ell"), py::arg("k"), py::arg("M"));

    m.def("verify_exactness_json", [](const std::vector<int>& K, int max_degree) {
        return fsrec::canonical_dump(fsrec::json(fsrec::verify_exactness(composition(K), max_degree)));
    }, py::arg("K"), py::arg("max_degree"));

    m.def("check_lemmas_json", [](int ell, int k, int max_degree) {
        return fsrec::canonical_dump(fsrec::json(fsrec::check_lemmas(ell, k, max_degree)));
    }, py::arg("ell"), py::arg("k"), py::arg("max_degree"));

    m.def("verify_equality_identity", [](const std::vector<int>& K, const std::vector<int>& n, int M) {
        return fsrec::verify_equality_identity(composition(K), fsrec::WeightVector(n), M);
    }, py::arg("K"), py::arg("n"), py::arg("M"));
}
