#include "rssiprox/trace_io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

#include "rssiprox/common.hpp"

namespace rssiprox {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

RssiReading parse_row(std::string_view line, std::size_t line_no) {
    const auto fields = split_fields(line);
    if (fields.size() != 6) {
        throw InputError(line_no, "expected 6 fields, got " + std::to_string(fields.size()));
    }
    RssiReading r;
    try {
        r.point.x = parse_double(fields[0]);
        r.point.y = parse_double(fields[1]);
        r.ap_id = static_cast<int>(parse_int(fields[2]));
        r.trial = static_cast<int>(parse_int(fields[3]));
        r.seq = static_cast<int>(parse_int(fields[4]));
        r.rssi_dbm = static_cast<int>(parse_int(fields[5]));
    } catch (const InputError& e) {
        throw InputError(line_no, e.what());
    }
    if (r.point.x == 0.0) {
        throw InputError(line_no, "point_x = 0 lies on the room partition");
    }
    if (r.ap_id < 1 || r.ap_id > kNumAps) {
        throw InputError(line_no, "ap_id must be in 1.." + std::to_string(kNumAps));
    }
    if (r.trial < 0 || r.seq < 0) {
        throw InputError(line_no, "trial and seq must be non-negative");
    }
    if (r.rssi_dbm > 0) {
        throw InputError(line_no, "rssi_dbm must be <= 0");
    }
    return r;
}

} // namespace

std::vector<PointRecord> ingest_traces(std::istream& in) {
    using SeqValues = std::vector<std::pair<int, int>>;

    std::vector<Point> order;
    std::map<Point, std::map<TraceKey, SeqValues>> grouped;
    std::set<std::tuple<Point, int, int, int>> seen;

    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.starts_with('#') || is_blank(line)) {
            continue;
        }
        if (!header_seen) {
            if (line != kTraceHeader) {
                throw InputError(line_no, "expected header '" + std::string(kTraceHeader) + "'");
            }
            header_seen = true;
            continue;
        }
        const RssiReading r = parse_row(line, line_no);
        if (!seen.emplace(r.point, r.ap_id, r.trial, r.seq).second) {
            throw InputError(line_no, "duplicate (point, ap_id, trial, seq) key");
        }
        auto [it, inserted] = grouped.try_emplace(r.point);
        if (inserted) {
            order.push_back(r.point);
        }
        it->second[TraceKey{r.ap_id, r.trial}].emplace_back(r.seq, r.rssi_dbm);
    }

    std::vector<PointRecord> records;
    records.reserve(order.size());
    for (const Point& p : order) {
        PointRecord rec;
        rec.point = p;
        rec.room = room_of(p);
        for (auto& [key, seq_values] : grouped.at(p)) {
            std::sort(seq_values.begin(), seq_values.end());
            Trace t{p, key.ap_id, key.trial, {}};
            t.values.reserve(seq_values.size());
            for (const auto& [seq, rssi] : seq_values) {
                t.values.push_back(rssi);
            }
            rec.traces.emplace(key, std::move(t));
        }
        records.push_back(std::move(rec));
    }
    return records;
}

void write_traces(std::ostream& out, std::span<const PointRecord> points,
                  std::span<const std::string> comments) {
    for (const auto& c : comments) {
        out << "# " << c << '\n';
    }
    out << kTraceHeader << '\n';
    for (const auto& rec : points) {
        const std::string x = format_double(rec.point.x);
        const std::string y = format_double(rec.point.y);
        for (const auto& [key, trace] : rec.traces) {
            for (std::size_t seq = 0; seq < trace.values.size(); ++seq) {
                out << x << ',' << y << ',' << key.ap_id << ',' << key.trial << ',' << seq << ','
                    << trace.values[seq] << '\n';
            }
        }
    }
}

} // namespace rssiprox
