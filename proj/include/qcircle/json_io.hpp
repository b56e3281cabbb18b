#pragma once

// JSON views of the report types. Non-finite numbers are written as the
// strings "inf" / "-inf" / "nan"; absent optionals as null.

#include <json.hpp>

#include "qcircle/circle_state.hpp"
#include "qcircle/examples.hpp"
#include "qcircle/mwp.hpp"
#include "qcircle/observables.hpp"
#include "qcircle/uncertainty.hpp"

namespace qcircle {

nlohmann::json json_number(double v);

nlohmann::json to_json(const ObservableReport& r);
nlohmann::json to_json(const URReport& r);
nlohmann::json to_json(const FoldSymmetry& s);
nlohmann::json to_json(const VonMisesPacket& p);
nlohmann::json to_json(const PacketVerification& v);
nlohmann::json to_json(const ExampleResult& r);
nlohmann::json state_summary(const CircleState& s);

}  // namespace qcircle
