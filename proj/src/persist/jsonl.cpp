// SPDX-License-Identifier: Apache-2.0
#include "agenteval/persist/jsonl.hpp"

#include <algorithm>
#include <map>

#include "agenteval/errors.hpp"
#include "agenteval/persist/json_codec.hpp"

namespace agenteval {

JsonlSink::JsonlSink(const std::string& path) : path_(path) {
    out_.open(path, std::ios::out | std::ios::trunc);
    if (!out_) {
        throw Error("cannot open trace file '" + path + "' for writing");
    }
}

JsonlSink::~JsonlSink() {
    std::lock_guard<std::mutex> lock(mutex_);
    if (out_.is_open()) {
        out_.flush();
        out_.close();
    }
}

void JsonlSink::append(const Trace& trace) {
    const std::string line = trace_to_json(trace).dump();
    std::lock_guard<std::mutex> lock(mutex_);
    out_ << line << '\n';
}

void JsonlSink::flush() {
    std::lock_guard<std::mutex> lock(mutex_);
    out_.flush();
}

TraceSet load_trace_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open trace file '" + path + "'");
    }

    std::map<std::string, std::vector<Trace>> groups;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        nlohmann::ordered_json obj;
        try {
            obj = nlohmann::ordered_json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError("trace file '" + path + "' line " +
                                 std::to_string(line_no) + ": " + e.what(),
                             line_no);
        }
        try {
            Trace t = trace_from_json(obj);
            groups[t.conversation_id].push_back(std::move(t));
        } catch (const std::exception& e) {
            throw ParseError("trace file '" + path + "' line " +
                                 std::to_string(line_no) + ": " + e.what(),
                             line_no);
        }
    }

    TraceSet set;
    for (auto& [id, traces] : groups) {
        (void)id;
        std::sort(traces.begin(), traces.end(),
                  [](const Trace& a, const Trace& b) { return a.seq < b.seq; });
        set.add_conversation(std::move(traces));
    }
    return set;
}

void save_measurements(const MeasurementSet& measurements,
                       const std::string& path) {
    std::ofstream out(path, std::ios::out | std::ios::trunc);
    if (!out) {
        throw Error("cannot open measurements file '" + path +
                    "' for writing");
    }
    for (const Measurement& m : measurements.measurements()) {
        out << measurement_to_json(m).dump() << '\n';
    }
}

MeasurementSet load_measurements(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open measurements file '" + path + "'");
    }
    MeasurementSet set;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        try {
            set.add(measurement_from_json(nlohmann::ordered_json::parse(line)));
        } catch (const std::exception& e) {
            throw ParseError("measurements file '" + path + "' line " +
                                 std::to_string(line_no) + ": " + e.what(),
                             line_no);
        }
    }
    return set;
}

}  // namespace agenteval
