#pragma once

#include <json.hpp>

#include "wh/dependence.hpp"
#include "wh/marker.hpp"
#include "wh/orbit.hpp"

namespace wh {

inline constexpr int kSchemaVersion = 1;

// Words carry both the letter text and the signed-integer form.
nlohmann::json word_to_json(const CyclicWord& w);
CyclicWord word_from_json(const nlohmann::json& j, int rank);

nlohmann::json w2_to_json(const WhiteheadW2& m);   // {"A": [...], "a": int}
WhiteheadW2 w2_from_json(const nlohmann::json& j, int rank);

nlohmann::json w1_to_json(const WhiteheadW1& m);   // {"images": [...]}
WhiteheadW1 w1_from_json(const nlohmann::json& j, int rank);

nlohmann::json move_to_json(const Move& m);        // tagged with "type"
nlohmann::json chain_to_json(const MoveChain& c);

nlohmann::json marked_sequence_to_json(const MarkedSequence& V);  // {n, k, words}

nlohmann::json hypothesis_report_to_json(const HypothesisReport& rep);

// {schema, n, u, N, N_k, C, bound_ok}
nlohmann::json product_report_to_json(const ProductBoundReport& rep);

}  // namespace wh
