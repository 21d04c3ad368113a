#pragma once

#include <json.hpp>

#include "oppk/classify.hpp"
#include "oppk/order.hpp"
#include "oppk/repunit.hpp"
#include "oppk/search.hpp"
#include "oppk/wieferich.hpp"

// JSON renderings for scripted consumers. Field names are stable across
// releases. Naturals are serialized as decimal strings so arbitrary-precision
// values survive any JSON parser untouched.

namespace oppk {

nlohmann::json to_json(const Factorization& f);
nlohmann::json to_json(const ClassificationReport& report);
nlohmann::json to_json(const OrderProfile& profile);
nlohmann::json to_json(const CosetPartition& partition);
nlohmann::json to_json(const WieferichRecord& record);
nlohmann::json to_json(const Repunit& repunit);
nlohmann::json to_json(const StepwiseResult& result);
nlohmann::json to_json(const SearchResult& result);
nlohmann::json to_json(const ComposeEntry& entry);
nlohmann::json to_json(const ProgressionEntry& entry);

/// Inverse of to_json(ClassificationReport): the reparsed report compares
/// equal to the in-process value.
ClassificationReport report_from_json(const nlohmann::json& j);

}  // namespace oppk
