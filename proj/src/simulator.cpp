#include "rssiprox/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rssiprox/common.hpp"

namespace rssiprox {

namespace {

constexpr double kWallMarginFt = 0.5;

std::string format_points(const std::vector<Point>& pts) {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) out += ';';
        out += format_double(pts[i].x) + ':' + format_double(pts[i].y);
    }
    return out;
}

std::vector<Point> parse_points(std::string_view text) {
    std::vector<Point> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        const auto item = text.substr(start, end - start);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw ConfigError("ap_positions: expected x:y, got '" + std::string(item) + "'");
        }
        out.push_back({parse_double(item.substr(0, colon)), parse_double(item.substr(colon + 1))});
        start = end + 1;
    }
    return out;
}

double to_double(std::string_view key, std::string_view value) {
    try {
        return parse_double(value);
    } catch (const InputError&) {
        throw ConfigError(std::string(key) + ": not a number: '" + std::string(value) + "'");
    }
}

int to_int(std::string_view key, std::string_view value) {
    try {
        return static_cast<int>(parse_int(value));
    } catch (const InputError&) {
        throw ConfigError(std::string(key) + ": not an integer: '" + std::string(value) + "'");
    }
}

// Devices sit one per grid cell, jittered uniformly inside the cell and
// snapped to 0.1 ft. Cells are chosen at random when the grid has spare ones.
std::vector<Point> place_in_room(RoomSize room, int count, double x_sign, Rng& rng) {
    const double usable_w = room.width_ft - 2.0 * kWallMarginFt;
    const double usable_d = room.depth_ft - 2.0 * kWallMarginFt;
    const int cols = std::max(1, static_cast<int>(std::lround(std::sqrt(count * usable_w / usable_d))));
    const int rows = (count + cols - 1) / cols;

    std::vector<int> cells(static_cast<std::size_t>(cols * rows));
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = static_cast<int>(i);
    rng.shuffle(cells);
    cells.resize(static_cast<std::size_t>(count));
    std::sort(cells.begin(), cells.end());

    const double cell_w = usable_w / cols;
    const double cell_d = usable_d / rows;
    std::vector<Point> out;
    for (int cell : cells) {
        const int c = cell % cols;
        const int r = cell / cols;
        const double x = kWallMarginFt + cell_w * (c + rng.uniform());
        const double y = kWallMarginFt + cell_d * (r + rng.uniform());
        const double snapped_x = std::clamp(std::round(x * 10.0) / 10.0, kWallMarginFt,
                                            room.width_ft - kWallMarginFt);
        const double snapped_y = std::clamp(std::round(y * 10.0) / 10.0, kWallMarginFt,
                                            room.depth_ft - kWallMarginFt);
        out.push_back({x_sign * snapped_x, snapped_y});
    }
    return out;
}

} // namespace

void SimConfig::validate() const {
    if (ap_positions.size() != static_cast<std::size_t>(kNumAps)) {
        throw ConfigError("ap_positions: exactly " + std::to_string(kNumAps) + " access points required");
    }
    if (!(gamma > 0.0)) throw ConfigError("gamma must be > 0");
    if (!(d0_m > 0.0)) throw ConfigError("d0_m must be > 0");
    if (!(noise_sigma_db >= 0.0)) throw ConfigError("noise_sigma_db must be >= 0");
    if (!(wall_loss_db >= 0.0)) throw ConfigError("wall_loss_db must be >= 0");
    if (!(interval_s > 0.0)) throw ConfigError("interval_s must be > 0");
    for (const RoomSize& r : {room_left, room_right}) {
        if (!(r.width_ft > 2.0 * kWallMarginFt) || !(r.depth_ft > 2.0 * kWallMarginFt)) {
            throw ConfigError("room dimensions must be positive and larger than 1 ft");
        }
    }
    if (devices_per_room < 2) {
        throw ConfigError("devices_per_room must be >= 2 for pair construction");
    }
    if (trials < 1) throw ConfigError("trials must be >= 1");
    if (samples_per_trial < 1) throw ConfigError("samples_per_trial must be >= 1");
}

std::vector<std::pair<std::string, std::string>> SimConfig::to_key_values() const {
    return {
        {"ap_positions", format_points(ap_positions)},
        {"room_right_width", format_double(room_right.width_ft)},
        {"room_right_depth", format_double(room_right.depth_ft)},
        {"room_left_width", format_double(room_left.width_ft)},
        {"room_left_depth", format_double(room_left.depth_ft)},
        {"devices_per_room", std::to_string(devices_per_room)},
        {"trials", std::to_string(trials)},
        {"samples_per_trial", std::to_string(samples_per_trial)},
        {"interval_s", format_double(interval_s)},
        {"gamma", format_double(gamma)},
        {"pl0_dbm", format_double(pl0_dbm)},
        {"d0_m", format_double(d0_m)},
        {"wall_loss_db", format_double(wall_loss_db)},
        {"noise_sigma_db", format_double(noise_sigma_db)},
    };
}

bool SimConfig::set(std::string_view key, std::string_view value) {
    if (key == "ap_positions") {
        try {
            ap_positions = parse_points(value);
        } catch (const InputError& e) {
            throw ConfigError(std::string("ap_positions: ") + e.what());
        }
    } else if (key == "room_right_width") room_right.width_ft = to_double(key, value);
    else if (key == "room_right_depth") room_right.depth_ft = to_double(key, value);
    else if (key == "room_left_width") room_left.width_ft = to_double(key, value);
    else if (key == "room_left_depth") room_left.depth_ft = to_double(key, value);
    else if (key == "devices_per_room") devices_per_room = to_int(key, value);
    else if (key == "trials") trials = to_int(key, value);
    else if (key == "samples_per_trial") samples_per_trial = to_int(key, value);
    else if (key == "interval_s") interval_s = to_double(key, value);
    else if (key == "gamma") gamma = to_double(key, value);
    else if (key == "pl0_dbm") pl0_dbm = to_double(key, value);
    else if (key == "d0_m") d0_m = to_double(key, value);
    else if (key == "wall_loss_db") wall_loss_db = to_double(key, value);
    else if (key == "noise_sigma_db") noise_sigma_db = to_double(key, value);
    else return false;
    return true;
}

double path_loss_db(double d_m, double gamma, double d0_m) {
    if (!(d0_m > 0.0)) {
        throw std::invalid_argument("path_loss_db: d0 must be > 0");
    }
    const double d = std::max(d_m, d0_m);
    return 10.0 * gamma * std::log10(d / d0_m);
}

int walls_between(Point device, Point ap) {
    return (device.x < 0.0) != (ap.x < 0.0) ? 1 : 0;
}

int sample_rssi(Point device_ft, Point ap_ft, const SimConfig& cfg, Rng& rng) {
    const double dx = (device_ft.x - ap_ft.x) * kFeetToMeters;
    const double dy = (device_ft.y - ap_ft.y) * kFeetToMeters;
    const double d = std::hypot(dx, dy);
    double rssi = cfg.pl0_dbm - path_loss_db(d, cfg.gamma, cfg.d0_m) -
                  walls_between(device_ft, ap_ft) * cfg.wall_loss_db;
    if (cfg.noise_sigma_db > 0.0) {
        rssi += cfg.noise_sigma_db * rng.normal();
    }
    const long rounded = std::lround(rssi);
    return static_cast<int>(std::clamp<long>(rounded, kRssiFloorDbm, kRssiCeilingDbm));
}

std::vector<Point> place_devices(const SimConfig& cfg) {
    Rng rng(stage_seed(cfg.seed, "placement"));
    auto points = place_in_room(cfg.room_left, cfg.devices_per_room, -1.0, rng);
    const auto right = place_in_room(cfg.room_right, cfg.devices_per_room, 1.0, rng);
    points.insert(points.end(), right.begin(), right.end());
    return points;
}

std::vector<PointRecord> generate(const SimConfig& cfg) {
    cfg.validate();
    const auto points = place_devices(cfg);

    std::vector<PointRecord> records;
    records.reserve(points.size());
    for (std::size_t pi = 0; pi < points.size(); ++pi) {
        PointRecord rec;
        rec.point = points[pi];
        rec.room = room_of(points[pi]);
        for (int ap = 1; ap <= kNumAps; ++ap) {
            const Point ap_pos = cfg.ap_positions[static_cast<std::size_t>(ap - 1)];
            for (int trial = 0; trial < cfg.trials; ++trial) {
                Rng rng(mix_seed(mix_seed(mix_seed(cfg.seed, pi), static_cast<std::uint64_t>(ap)),
                                 static_cast<std::uint64_t>(trial)));
                Trace t{rec.point, ap, trial, {}};
                t.values.reserve(static_cast<std::size_t>(cfg.samples_per_trial));
                for (int s = 0; s < cfg.samples_per_trial; ++s) {
                    t.values.push_back(sample_rssi(rec.point, ap_pos, cfg, rng));
                }
                rec.traces.emplace(TraceKey{ap, trial}, std::move(t));
            }
        }
        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace rssiprox
