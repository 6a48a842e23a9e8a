#pragma once

#include <string>

#include "f2j/code_model.hpp"
#include "f2j/metrics.hpp"
#include "f2j/oo_model.hpp"
#include "f2j/platform.hpp"
#include "f2j/primitives.hpp"

namespace f2j {

// Deterministic JSON round-trips for every intermediate model. Serialization
// preserves insertion order (two dumps of equal models are byte-identical) and
// from-JSON rebuilds a model whose re-dump equals the input.

std::string to_json(const CodeModel& m);
CodeModel code_model_from_json(const std::string& text);

std::string to_json(const PrimitivesRoot& r);
PrimitivesRoot primitives_from_json(const std::string& text);

std::string to_json(const TargetPlatformModel& m);
TargetPlatformModel platform_from_json(const std::string& text);

std::string to_json(const OOModel& m);
OOModel oo_from_json(const std::string& text);

std::string to_json(const MetricsReport& r);

}  // namespace f2j
