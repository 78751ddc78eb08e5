#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wh/json_io.hpp"
#include "wh/reports.hpp"
#include "wh/sequence.hpp"
#include "wh/verify.hpp"

namespace py = pybind11;
using namespace wh;

namespace {

LetterSet set_from_ints(const std::vector<int>& ints) {
  LetterSet s;
  for (int v : ints) {
    if (v == 0) fail(ErrorKind::Parse, "0 is not a letter");
    s.insert(Letter(v));
  }
  return s;
}

std::vector<int> set_to_ints(LetterSet s) {
  std::vector<int> out;
  for (Letter l : s.letters()) out.push_back(l.signed_index());
  return out;
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Whitehead moves and minimal-word orbit counting in free groups";

  py::register_exception<Error>(m, "WhError");

  py::class_<CyclicWord>(m, "CyclicWord")
      .def(py::init([](const std::string& text, int rank) {
             return CyclicWord::parse(text, rank);
           }),
           py::arg("text"), py::arg("rank"))
      .def_static("from_ints", &CyclicWord::from_ints, py::arg("ints"), py::arg("rank"))
      .def_property_readonly("rank", &CyclicWord::rank)
      .def("__len__", &CyclicWord::size)
      .def("text", &CyclicWord::text)
      .def("ints", &CyclicWord::ints)
      .def("occurrence_count", &CyclicWord::occurrence_count, py::arg("gen"))
      .def("__eq__", [](const CyclicWord& a, const CyclicWord& b) { return a == b; })
      .def("__lt__", [](const CyclicWord& a, const CyclicWord& b) { return a < b; })
      .def("__hash__", &CyclicWord::hash)
      .def("__repr__",
           [](const CyclicWord& w) {
             return "CyclicWord('" + (w.empty() ? "" : w.text()) + "', rank=" +
                    std::to_string(w.rank()) + ")";
           });

  m.def("parse_word", &parse_word, py::arg("text"), py::arg("rank"));

  py::class_<WhiteheadW2>(m, "WhiteheadW2")
      .def(py::init([](int rank, const std::vector<int>& a_set, int mult) {
             return WhiteheadW2(rank, set_from_ints(a_set), Letter(mult));
           }),
           py::arg("rank"), py::arg("a_set"), py::arg("multiplier"))
      .def_property_readonly("rank", &WhiteheadW2::rank)
      .def_property_readonly("a_set", [](const WhiteheadW2& m2) { return set_to_ints(m2.set()); })
      .def_property_readonly("multiplier",
                             [](const WhiteheadW2& m2) { return m2.multiplier().signed_index(); })
      .def("degree", &WhiteheadW2::degree)
      .def("complement", &WhiteheadW2::complement)
      .def("__eq__", [](const WhiteheadW2& a, const WhiteheadW2& b) { return a == b; })
      .def("__repr__", [](const WhiteheadW2& m2) { return "WhiteheadW2" + m2.text(); });

  py::class_<WhiteheadW1>(m, "WhiteheadW1")
      .def(py::init([](int rank, const std::vector<int>& images) {
             std::vector<Letter> ls;
             for (int v : images) ls.push_back(Letter(v));
             return WhiteheadW1(rank, std::move(ls));
           }),
           py::arg("rank"), py::arg("images"))
      .def_property_readonly("images",
                             [](const WhiteheadW1& m1) {
                               std::vector<int> out;
                               for (Letter l : m1.images()) out.push_back(l.signed_index());
                               return out;
                             })
      .def("__eq__", [](const WhiteheadW1& a, const WhiteheadW1& b) { return a == b; })
      .def("__repr__", [](const WhiteheadW1& m1) { return "WhiteheadW1" + m1.text(); });

  m.def("apply_w2", [](const WhiteheadW2& m2, const CyclicWord& w) { return apply(m2, w); });
  m.def("apply_w1", [](const WhiteheadW1& m1, const CyclicWord& w) { return apply(m1, w); });
  m.def("length_delta",
        [](const WhiteheadW2& m2, const CyclicWord& w) { return length_delta(m2, w); });
  m.def("enumerate_w2", &enumerate_w2, py::arg("rank"), py::arg("override_guard") = false);
  m.def("enumerate_w2_degree0", &enumerate_w2_degree0, py::arg("rank"),
        py::arg("override_guard") = false);
  m.def("enumerate_w1", &enumerate_w1, py::arg("rank"), py::arg("override_guard") = false);

  m.def("is_minimal", &is_minimal);
  m.def("minimize", [](const CyclicWord& w) {
    auto [out, chain] = minimize(w);
    py::list steps;
    for (const Move& mv : chain.steps) steps.append(json_to_py(move_to_json(mv)));
    return py::make_tuple(out, steps);
  });
  m.def("level_set", [](const CyclicWord& u) { return level_set(u).members; });
  m.def("level_set_w2", [](const CyclicWord& u) { return level_set_w2(u).members; });
  m.def("degree_restricted_orbit",
        [](const CyclicWord& u, int k) { return degree_restricted_orbit(u, k).members; });
  m.def("derive_length_preserving_moves", &derive_length_preserving_moves);
  m.def("reorder_pair", [](const WhiteheadW2& s1, const WhiteheadW2& s2, const CyclicWord& u) {
    MoveChain chain = reorder_pair(s1, s2, u);
    std::vector<WhiteheadW2> out;
    for (const Move& mv : chain.steps) out.push_back(*mv.w2());
    return out;
  });
  m.def("ascending_chain_search",
        [](const CyclicWord& u, const CyclicWord& v, int r) -> py::object {
          auto chain = ascending_chain_search(u, v, r);
          if (!chain) return py::none();
          std::vector<WhiteheadW2> out;
          for (const Move& mv : chain->steps) out.push_back(*mv.w2());
          return py::cast(out);
        });
  m.def("product_bound_check",
        [](const CyclicWord& u) { return json_to_py(product_report_to_json(product_bound_check(u))); });

  py::class_<DependenceGraph>(m, "DependenceGraph")
      .def_property_readonly("rank", [](const DependenceGraph& g) { return g.rank; })
      .def("component_of", [](const DependenceGraph& g, int letter) {
        return g.component_of(Letter(letter));
      })
      .def("component_count", &DependenceGraph::component_count)
      .def("components",
           [](const DependenceGraph& g) {
             std::vector<std::vector<int>> out;
             for (const auto& comp : g.components()) {
               std::vector<int> one;
               for (Letter l : comp) one.push_back(l.signed_index());
               out.push_back(std::move(one));
             }
             return out;
           })
      .def("edge", [](const DependenceGraph& g, int x, int y) {
        return g.edge(Letter(x), Letter(y));
      })
      .def("vacuous_edge", [](const DependenceGraph& g, int x, int y) {
        return g.vacuous_edge(Letter(x), Letter(y));
      })
      .def("to_dot", &DependenceGraph::to_dot);

  m.def("dependence_graph",
        [](const CyclicWord& u) { return dependence_graph(u); });
  m.def("syllable_lengths", [](const CyclicWord& w, const DependenceGraph& g) {
    return syllable_decompose(w, g).syllable_lengths;
  });
  m.def("check_hypotheses",
        [](const CyclicWord& u) { return json_to_py(hypothesis_report_to_json(check_hypotheses(u))); });
  m.def("census", [](const CyclicWord& u) {
    return json_to_py(census_to_json(run_census(u, std::nullopt)));
  });

  py::class_<MarkedSequence>(m, "MarkedSequence")
      .def_property_readonly("n", [](const MarkedSequence& V) { return V.n; })
      .def_property_readonly("k", [](const MarkedSequence& V) { return V.k; })
      .def_property_readonly("words", [](const MarkedSequence& V) { return V.seq.words; })
      .def_property_readonly("total_length", &MarkedSequence::total_length)
      .def("__repr__", [](const MarkedSequence& V) {
        return "MarkedSequence(n=" + std::to_string(V.n) + ", k=" + std::to_string(V.k) +
               ", entries=" + std::to_string(V.seq.words.size()) + ")";
      });

  m.def("build_marked_sequence", &build_marked_sequence, py::arg("u"), py::arg("k"));
  m.def("lift_degree_k",
        [](const WhiteheadW2& sigma, const MarkedSequence& V) { return lift_degree_k(sigma, V); });
  m.def("lift_general", [](const WhiteheadW2& tau, int n) { return lift_general(tau, n).move; });
  m.def("project_restricted",
        [](const WhiteheadW2& alpha, int n) { return project_restricted(alpha, n); });
  m.def("apply_to_sequence", &apply_to_sequence);
  m.def("sequence_degree0_orbit_size", [](const MarkedSequence& V) {
    return sequence_degree_orbit(V.seq, 0).size();
  });

  m.def("run_verify", [](const std::string& name, std::uint64_t seed, bool quick) {
    VerifyOptions opt;
    opt.seed = seed;
    if (quick) {
      opt.formula_words_per_rank = 40;
      opt.dominance_words = 24;
      opt.derived_words = 8;
      opt.reorder_words = 3;
      opt.reorder_random_words = 10;
      opt.ascending_words = 4;
      opt.ascending_include_rank4 = false;
      opt.lift_words = 4;
      opt.lift_sequence_words = 2;
      opt.product_words = 3;
      opt.product_include_rank4 = false;
      opt.khan_per_length = 1;
    }
    py::list out;
    for (const VerifyResult& r : run_verify(name, opt)) {
      py::dict d;
      d["suite"] = r.suite;
      d["checks"] = r.checks;
      d["passed"] = r.passed();
      d["failures"] = r.failures;
      d["findings"] = r.findings;
      out.append(d);
    }
    return out;
  }, py::arg("name"), py::arg("seed") = 0x5eedf00d, py::arg("quick") = true);
}
