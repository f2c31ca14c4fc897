#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordelab/catalog.hpp"
#include "ordelab/chains.hpp"
#include "ordelab/embedding.hpp"
#include "ordelab/error.hpp"
#include "ordelab/ideals.hpp"
#include "ordelab/oracle.hpp"
#include "ordelab/poset_io.hpp"
#include "ordelab/verify.hpp"

namespace py = pybind11;

namespace {

ord::CatalogEntry entry(const std::string& spec) {
    return ord::make(ord::parse_family_spec(spec));
}

std::vector<std::pair<int, int>> strict_pairs(const ord::FinitePoset& p) {
    std::vector<std::pair<int, int>> v;
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
            if (i != j && p.leq(i, j)) v.push_back({i, j});
    return v;
}

ord::JoinSemilattice semi(const std::string& spec) {
    ord::CatalogEntry e = entry(spec);
    if (!e.semi)
        throw ord::Error(ord::Errc::NoLub, e.canonical_spec + " is not a join-semilattice");
    return *std::move(e.semi);
}

} // namespace

PYBIND11_MODULE(_ordelab, m) {
    m.doc() = "Posets, join-semilattices, ideal chains and their embeddings.";

    py::register_exception<ord::Error>(m, "OrderError");

    m.def(
        "make",
        [](const std::string& spec) {
            ord::CatalogEntry e = entry(spec);
            py::dict d;
            d["n"] = e.poset.size();
            d["leq"] = strict_pairs(e.poset);
            d["canonical"] = e.canonical_spec;
            d["semilattice"] = bool(e.semi);
            return d;
        },
        py::arg("spec"), "Build a catalog poset; returns n, strict leq pairs and flags.");

    m.def(
        "poset_json", [](const std::string& spec) { return ord::poset_to_json(entry(spec).poset); },
        py::arg("spec"));
    m.def(
        "hasse_dot", [](const std::string& spec) { return ord::hasse_dot(entry(spec).poset); },
        py::arg("spec"));

    m.def("verify_ids", &ord::verify_ids);
    m.def(
        "verify",
        [](const std::string& id, int max_size, std::uint64_t seed, int k) {
            ord::VerifyReport r = ord::verify_theorem(id, max_size, seed, k);
            py::dict d;
            d["id"] = r.id;
            d["ok"] = r.ok;
            d["cases"] = r.cases;
            d["detail"] = r.detail;
            return d;
        },
        py::arg("id"), py::arg("max_size") = 6, py::arg("seed") = 1729, py::arg("k") = -1);

    m.def(
        "embed",
        [](const std::string& mode, const std::string& a, const std::string& b,
           std::uint64_t budget) {
            ord::EmbedResult res;
            if (mode == "order") {
                res = ord::order_embed(entry(a).poset, entry(b).poset, budget);
            } else if (mode == "join") {
                res = ord::join_embed(semi(a), semi(b), budget);
            } else if (mode == "sublattice") {
                res = ord::sublattice_embed(semi(a), semi(b), budget);
            } else {
                throw ord::Error(ord::Errc::BadSpec, "unknown mode '" + mode + "'");
            }
            py::dict d;
            d["found"] = bool(res.map);
            d["nodes"] = res.nodes;
            if (res.map) d["map"] = *res.map;
            return d;
        },
        py::arg("mode"), py::arg("a"), py::arg("b"), py::arg("budget") = ord::default_embed_budget);

    m.def(
        "min_ground",
        [](const std::string& spec, std::uint64_t budget) {
            ord::MinGroundResult r = ord::min_ground(semi(spec), budget);
            return py::make_tuple(r.m, r.map);
        },
        py::arg("spec"), py::arg("budget") = ord::default_embed_budget);

    m.def(
        "lemma31_extract",
        [](const std::string& family, int k, int depth) {
            auto o = ord::oracle(ord::parse_family_spec(family));
            ord::ExtractResult r = ord::lemma_3_1_extract(*o, k, depth);
            py::dict d;
            py::list xs;
            for (auto e : r.xs) xs.append(o->describe(e));
            d["xs"] = xs;
            d["chain_indices"] = r.chain_indices;
            d["independent"] = r.independent;
            return d;
        },
        py::arg("family"), py::arg("k"), py::arg("depth") = 20);

    m.def(
        "lemma32_extract",
        [](const std::string& family, int k, int depth) {
            auto o = ord::oracle(ord::parse_family_spec(family));
            ord::Lemma32Result r = ord::lemma_3_2_extract(*o, k, depth);
            py::dict d;
            d["status"] = ord::status_name(r.status);
            d["case"] = r.case_one ? "I" : "II";
            py::list xs, ys;
            for (auto e : r.xs) xs.append(o->describe(e));
            for (auto e : r.ys) ys.append(o->describe(e));
            d["xs"] = xs;
            d["ys"] = ys;
            d["chain_indices"] = r.chain_indices;
            d["conditions_ok"] = r.conditions_ok;
            d["f_injective"] = r.f_injective;
            d["f_join_preserving"] = r.f_join_preserving;
            return d;
        },
        py::arg("family"), py::arg("k"), py::arg("depth") = 20);

    m.def(
        "descent",
        [](int m, int depth) {
            ord::DescentFixture fix = ord::remark414_descent_fixture(m, depth);
            ord::DescentResult r = ord::prop_1_2_descent(fix.q, fix.chain, fix.xs, m);
            py::dict d;
            py::list ys;
            for (const auto& y : r.ys) ys.append(y.to_vector());
            d["ys"] = ys;
            d["i_omega"] = r.i_omega.to_vector();
            d["q_prime"] = r.q_prime.to_vector();
            d["drop_witness"] = r.drop_witness;
            d["labels"] = fix.labels;
            return d;
        },
        py::arg("m") = 4, py::arg("depth") = 8);

    m.def(
        "ramsey414",
        [](int m) {
            auto fam = ord::family_oracle(ord::parse_family_spec("remark414"));
            ord::RamseyResult r = ord::ramsey_extract(*fam, m);
            py::dict d;
            d["stable"] = r.stable;
            py::list drops;
            for (const auto& [pos, witness] : r.drops)
                drops.append(py::make_tuple(pos, fam->ground().describe(witness)));
            d["drops"] = drops;
            return d;
        },
        py::arg("m") = 12);

    m.def(
        "diagnose",
        [](const std::string& family, int depth, std::uint64_t budget) {
            auto o = ord::oracle(ord::parse_family_spec(family));
            py::list out;
            for (const ord::DiagnoseRow& r : ord::diagnose(*o, depth, budget)) {
                py::dict d;
                d["depth"] = r.depth;
                d["boolK"] = r.boolK;
                d["omegaK"] = r.omegaK;
                d["width"] = r.width;
                d["chainSteps"] = r.chainSteps;
                out.append(d);
            }
            return out;
        },
        py::arg("family"), py::arg("depth") = 5, py::arg("budget") = ord::default_embed_budget);
}
