#include "wh/json_io.hpp"

namespace wh {

using nlohmann::json;

json word_to_json(const CyclicWord& w) {
  return json{{"text", w.text()}, {"ints", w.ints()}};
}

CyclicWord word_from_json(const json& j, int rank) {
  if (j.is_string()) return CyclicWord::parse(j.get<std::string>(), rank);
  if (j.is_array()) return CyclicWord::from_ints(j.get<std::vector<int>>(), rank);
  if (j.is_object() && j.contains("ints"))
    return CyclicWord::from_ints(j.at("ints").get<std::vector<int>>(), rank);
  fail(ErrorKind::Parse, "expected a word as text, integer array, or {\"ints\": ...}");
}

json w2_to_json(const WhiteheadW2& m) {
  std::vector<int> a_set;
  for (Letter l : m.set().letters()) a_set.push_back(l.signed_index());
  return json{{"A", a_set}, {"a", m.multiplier().signed_index()}};
}

WhiteheadW2 w2_from_json(const json& j, int rank) {
  LetterSet A;
  for (int v : j.at("A").get<std::vector<int>>()) {
    if (v == 0) fail(ErrorKind::Parse, "0 is not a letter");
    A.insert(Letter(v));
  }
  int a = j.at("a").get<int>();
  if (a == 0) fail(ErrorKind::Parse, "0 is not a letter");
  return WhiteheadW2(rank, A, Letter(a));
}

json w1_to_json(const WhiteheadW1& m) {
  std::vector<int> images;
  for (Letter l : m.images()) images.push_back(l.signed_index());
  return json{{"images", images}};
}

WhiteheadW1 w1_from_json(const json& j, int rank) {
  std::vector<Letter> images;
  for (int v : j.at("images").get<std::vector<int>>()) {
    if (v == 0) fail(ErrorKind::Parse, "0 is not a letter");
    images.push_back(Letter(v));
  }
  return WhiteheadW1(rank, std::move(images));
}

json move_to_json(const Move& m) {
  if (const WhiteheadW2* w2 = m.w2()) {
    json j = w2_to_json(*w2);
    j["type"] = "w2";
    return j;
  }
  json j = w1_to_json(*m.w1());
  j["type"] = "w1";
  return j;
}

json chain_to_json(const MoveChain& c) {
  json steps = json::array();
  for (const Move& m : c.steps) steps.push_back(move_to_json(m));
  return json{{"steps", steps}, {"ascending", c.ascending}};
}

json marked_sequence_to_json(const MarkedSequence& V) {
  json words = json::array();
  for (const CyclicWord& w : V.seq.words) words.push_back(w.ints());
  return json{{"n", V.n}, {"k", V.k}, {"words", words}};
}

json hypothesis_report_to_json(const HypothesisReport& rep) {
  json j = json::object();
  auto put = [&](const char* key, const std::optional<bool>& v) {
    j[key] = v.has_value() ? json(*v) : json(nullptr);
  };
  put("minimal", rep.minimal);
  put("graded_occurrences", rep.graded_occurrences);
  put("top_syllable_minimal", rep.top_syllable_minimal);
  put("lower_syllable_minimal", rep.lower_syllable_minimal);
  json witnesses = json::object();
  if (rep.reducing_move) witnesses["reducing_move"] = w2_to_json(*rep.reducing_move);
  if (rep.grading_witness)
    witnesses["occurrence_pair"] = json{{"i", rep.grading_witness->first},
                                        {"j", rep.grading_witness->second}};
  if (rep.top_witness) witnesses["top_syllable_member"] = word_to_json(*rep.top_witness);
  if (rep.lower_witness)
    witnesses["lower_syllable"] = json{{"j", rep.lower_witness->first},
                                       {"member", word_to_json(rep.lower_witness->second)}};
  j["witnesses"] = witnesses;
  return j;
}

json product_report_to_json(const ProductBoundReport& rep) {
  return json{{"schema", kSchemaVersion}, {"n", rep.rank},       {"u", word_to_json(rep.u)},
              {"N", rep.N},               {"N_k", rep.Nk},       {"C", rep.C},
              {"bound_ok", rep.bound_ok}};
}

}  // namespace wh
