#pragma once
// JSON views of the library's result types. Keys are emitted in fixed
// order (ordered_json) so identical runs give identical bytes.

#include <json.hpp>

#include "turan/enumeration.hpp"
#include "turan/frontier.hpp"
#include "turan/partition.hpp"
#include "turan/reduction.hpp"
#include "turan/solver.hpp"
#include "turan/verifier.hpp"

namespace turan {

using Json = nlohmann::ordered_json;

Json to_json(const PentagonalSpec& spec);
Json to_json(const Partition& p);
Json to_json(const DrResult& res);
Json to_json(const DominationResult& dom);
Json to_json(const VerificationReport& rep);
Json to_json(const FrontierRecord& rec);
Json to_json(const PtgOptimum& opt);
Json to_json(const DenseReduceResult& res);
Json to_json(const GeneralReduceResult& res);
Json to_json(const IngestStats& stats);

const char* to_string(DenseStatus s);
const char* to_string(GeneralStatus s);

}  // namespace turan
