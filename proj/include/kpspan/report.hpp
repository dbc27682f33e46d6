#pragma once

#include <nlohmann/json.hpp>

#include "kpspan/spanner.hpp"
#include "kpspan/verify.hpp"

namespace kpspan {

// ordered_json keeps keys in insertion order.
using Json = nlohmann::ordered_json;

Json to_json(const SpannerParams& params);
/// Build report: sizes, parameters, certification, edge counts per family.
Json to_json(const SpannerResult& result, const ColoredPointSet& points);
/// Infinite stretch is written as null alongside "connected": false.
Json to_json(const StretchReport& report);
Json to_json(const LemmaReport& report);
Json to_json(const CoverageResult& result);

}  // namespace kpspan
