#include "rssiprox/feature_io.hpp"

#include <istream>
#include <ostream>
#include <vector>

#include "rssiprox/common.hpp"
#include "rssiprox/features.hpp"

namespace rssiprox {

std::string feature_header() {
    std::string h = "label";
    for (auto name : feature_names()) {
        h += ',';
        h += name;
    }
    return h;
}

void write_feature_matrix(std::ostream& out, const Dataset& ds, std::span<const std::string> comments) {
    for (const auto& c : comments) {
        out << "# " << c << '\n';
    }
    out << feature_header() << '\n';
    for (const auto& s : ds.samples) {
        out << s.label;
        for (double v : s.features) {
            out << ',' << format_double(v);
        }
        out << '\n';
    }
}

FeatureTable read_feature_matrix(std::istream& in) {
    const std::string header = feature_header();
    std::vector<double> values;
    ml::Labels labels;

    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.starts_with('#') || line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        if (!header_seen) {
            if (line != header) {
                throw InputError(line_no, "expected feature header '" + header + "'");
            }
            header_seen = true;
            continue;
        }
        std::string_view rest = line;
        std::vector<std::string_view> fields;
        while (true) {
            const auto comma = rest.find(',');
            fields.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (fields.size() != kNumFeatures + 1) {
            throw InputError(line_no, "expected " + std::to_string(kNumFeatures + 1) + " fields, got " +
                                          std::to_string(fields.size()));
        }
        try {
            const long long label = parse_int(fields[0]);
            if (label != 0 && label != 1) {
                throw InputError("label must be 0 or 1");
            }
            labels.push_back(static_cast<int>(label));
            for (std::size_t i = 1; i < fields.size(); ++i) {
                values.push_back(parse_double(fields[i]));
            }
        } catch (const InputError& e) {
            throw InputError(line_no, e.what());
        }
    }
    if (!header_seen) {
        throw InputError("feature file has no header");
    }
    return FeatureTable{ml::Matrix(labels.size(), kNumFeatures, std::move(values)), std::move(labels)};
}

} // namespace rssiprox
