#include "rssiprox/types.hpp"

#include <stdexcept>
#include <string>

namespace rssiprox {

Room room_of(Point p) {
    if (p.x < 0.0) {
        return Room::left;
    }
    if (p.x > 0.0) {
        return Room::right;
    }
    throw std::invalid_argument("point on the room partition (x = 0) has no room");
}

std::string_view to_string(Room room) {
    return room == Room::left ? "left" : "right";
}

const Trace* PointRecord::find(int ap_id, int trial) const {
    auto it = traces.find(TraceKey{ap_id, trial});
    return it == traces.end() ? nullptr : &it->second;
}

std::vector<int> PointRecord::complete_trials() const {
    std::map<int, int> per_trial;
    for (const auto& [key, trace] : traces) {
        if (key.ap_id >= 1 && key.ap_id <= kNumAps && !trace.values.empty()) {
            ++per_trial[key.trial];
        }
    }
    std::vector<int> out;
    for (const auto& [trial, n] : per_trial) {
        if (n == kNumAps) {
            out.push_back(trial);
        }
    }
    return out;
}

} // namespace rssiprox
