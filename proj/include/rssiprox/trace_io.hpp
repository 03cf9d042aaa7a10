#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rssiprox/types.hpp"

namespace rssiprox {

inline constexpr std::string_view kTraceHeader = "point_x,point_y,ap_id,trial,seq,rssi_dbm";

/// Reads the trace CSV format into one PointRecord per distinct point.
///
/// Points appear in order of first occurrence; traces are sorted by seq.
/// Lines starting with '#' and blank lines are ignored. Throws InputError
/// carrying the 1-based line number on any malformed or invalid row.
std::vector<PointRecord> ingest_traces(std::istream& in);

/// Writes records in the trace CSV format, each comment emitted as "# <text>".
void write_traces(std::ostream& out, std::span<const PointRecord> points,
                  std::span<const std::string> comments = {});

} // namespace rssiprox
