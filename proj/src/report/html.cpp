// SPDX-License-Identifier: Apache-2.0
#include "agenteval/report/html.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace agenteval {

namespace {

bool is_error_measurement(const Measurement& m) {
    if (m.name.size() > 6 &&
        m.name.compare(m.name.size() - 6, 6, ".error") == 0) {
        return true;
    }
    return m.additional_info.count("error") != 0;
}

std::string format_value(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

}  // namespace

std::string html_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&#39;"; break;
            default: out += c;
        }
    }
    return out;
}

std::vector<std::string> boolean_metric_names(
    const MeasurementSet& measurements) {
    std::map<std::string, bool> candidates;
    for (const Measurement& m : measurements.measurements()) {
        if (is_error_measurement(m)) {
            continue;
        }
        auto [it, inserted] = candidates.try_emplace(m.name, true);
        if (m.unit != Unit::Count || (m.value != 0.0 && m.value != 1.0)) {
            it->second = false;
        }
        (void)inserted;
    }
    std::vector<std::string> names;
    for (const auto& [name, boolean] : candidates) {
        if (boolean) {
            names.push_back(name);
        }
    }
    return names;
}

std::map<std::string, bool> conversation_badges(
    const TraceSet& traces, const MeasurementSet& measurements,
    const std::vector<std::string>& badge_metrics) {
    const std::vector<std::string> metrics =
        badge_metrics.empty() ? boolean_metric_names(measurements)
                              : badge_metrics;
    const std::set<std::string> metric_set(metrics.begin(), metrics.end());

    std::map<std::string, bool> badges;
    for (const std::string& id : traces.conversation_ids()) {
        badges[id] = true;
    }
    for (const Measurement& m : measurements.measurements()) {
        auto it = badges.find(m.conversation_id);
        if (it == badges.end()) {
            continue;
        }
        if (is_error_measurement(m)) {
            it->second = false;
        } else if (metric_set.count(m.name) != 0 && m.value == 0.0) {
            it->second = false;
        }
    }
    return badges;
}

std::string render_html_report(const TraceSet& traces,
                               const MeasurementSet& measurements,
                               const std::vector<std::string>& badge_metrics) {
    const std::map<std::string, bool> badges =
        conversation_badges(traces, measurements, badge_metrics);

    // Overview axes, in first-appearance order.
    std::vector<std::string> case_names;
    std::vector<std::string> permutations;
    for (const std::string& id : traces.conversation_ids()) {
        const Trace& head = traces.conversation(id).front();
        if (std::find(case_names.begin(), case_names.end(), head.case_name) ==
            case_names.end()) {
            case_names.push_back(head.case_name);
        }
        if (std::find(permutations.begin(), permutations.end(),
                      head.permutation_id) == permutations.end()) {
            permutations.push_back(head.permutation_id);
        }
    }

    std::map<std::string, std::vector<Measurement>> by_conversation;
    for (const Measurement& m : measurements.measurements()) {
        by_conversation[m.conversation_id].push_back(m);
    }

    std::string html;
    html += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
    html += "<title>Agent evaluation report</title>\n";
    html +=
        "<style>\n"
        "body{font-family:sans-serif;margin:1.5rem;color:#222}\n"
        "table{border-collapse:collapse;margin:1rem 0}\n"
        "th,td{border:1px solid #bbb;padding:0.3rem 0.6rem;text-align:left;"
        "vertical-align:top}\n"
        "th{background:#eee}\n"
        ".badge{display:inline-block;padding:0.1rem 0.5rem;border-radius:3px;"
        "font-weight:bold;margin:0 0.15rem}\n"
        ".pass{background:#2e7d32;color:#fff}\n"
        ".fail{background:#c62828;color:#fff}\n"
        ".role{font-weight:bold}\n"
        ".msg{margin:0.2rem 0}\n"
        "section.conversation{border-top:2px solid #888;margin-top:1.5rem;"
        "padding-top:0.5rem}\n"
        ".meta{color:#555;font-size:0.9rem}\n"
        "details{margin:0.4rem 0}\n"
        "</style>\n</head>\n<body>\n";
    html += "<h1>Agent evaluation report</h1>\n";

    // Overview: cases x permutations.
    html += "<h2>Overview</h2>\n<table>\n<tr><th>case</th>";
    for (const std::string& perm : permutations) {
        html += "<th>" + html_escape(perm.empty() ? "(none)" : perm) + "</th>";
    }
    html += "</tr>\n";
    for (const std::string& case_name : case_names) {
        html += "<tr><td>" + html_escape(case_name) + "</td>";
        for (const std::string& perm : permutations) {
            html += "<td>";
            for (const std::string& id : traces.conversation_ids()) {
                const Trace& head = traces.conversation(id).front();
                if (head.case_name != case_name || head.permutation_id != perm) {
                    continue;
                }
                const bool passed = badges.at(id);
                html += "<a href=\"#conv-" + html_escape(id) + "\">";
                html += passed ? "<span class=\"badge pass\">PASS</span>"
                               : "<span class=\"badge fail\">FAIL</span>";
                html += "</a>";
            }
            html += "</td>";
        }
        html += "</tr>\n";
    }
    html += "</table>\n";

    // Per-conversation detail sections.
    for (const std::string& id : traces.conversation_ids()) {
        const std::vector<Trace>& conversation = traces.conversation(id);
        const Trace& head = conversation.front();
        const bool passed = badges.at(id);

        html += "<section class=\"conversation\" id=\"conv-" + html_escape(id) +
                "\">\n";
        html += "<h2>" + html_escape(head.case_name) + " ";
        html += passed ? "<span class=\"badge pass\">PASS</span>"
                       : "<span class=\"badge fail\">FAIL</span>";
        html += "</h2>\n";
        html += "<p class=\"meta\">conversation " + html_escape(id) +
                " &middot; permutation " +
                html_escape(head.permutation_id.empty() ? "(none)"
                                                        : head.permutation_id) +
                " &middot; run " + std::to_string(head.run_index) + "</p>\n";

        html += "<h3>Traces</h3>\n";
        for (const Trace& t : conversation) {
            html += "<details open>\n<summary>seq " + std::to_string(t.seq) +
                    " &middot; " + to_string(t.to) + " &middot; " +
                    std::to_string(t.latency_ms) + " ms &middot; tokens " +
                    std::to_string(t.input_tokens) + " in / " +
                    std::to_string(t.output_tokens) + " out</summary>\n";
            for (const Message& m : t.user_conversation) {
                html += "<p class=\"msg\"><span class=\"role\">" +
                        std::string(to_string(m.role)) + ":</span> " +
                        html_escape(m.text) + "</p>\n";
            }
            if (!t.tool_invocations.empty()) {
                html += "<table><tr><th>tool</th><th>arguments</th>"
                        "<th>result</th><th>latency</th><th>ok</th></tr>\n";
                for (const ToolInvocation& inv : t.tool_invocations) {
                    std::string arguments;
                    for (const auto& [k, v] : inv.arguments) {
                        if (!arguments.empty()) {
                            arguments += ", ";
                        }
                        arguments += k + "=" + v;
                    }
                    html += "<tr><td>" + html_escape(inv.tool_name) + "</td><td>" +
                            html_escape(arguments) + "</td><td>" +
                            html_escape(inv.result_text) + "</td><td>" +
                            std::to_string(inv.latency_ms) + " ms</td><td>" +
                            (inv.success ? "yes" : "no") + "</td></tr>\n";
                }
                html += "</table>\n";
            }
            if (!t.extras.empty()) {
                html += "<p class=\"meta\">";
                for (const auto& [k, v] : t.extras) {
                    html += html_escape(k) + "=" + html_escape(v) + " ";
                }
                html += "</p>\n";
            }
            html += "</details>\n";
        }

        html += "<h3>Measurements</h3>\n";
        auto it = by_conversation.find(id);
        if (it == by_conversation.end() || it->second.empty()) {
            html += "<p class=\"meta\">none</p>\n";
        } else {
            html += "<table><tr><th>name</th><th>value</th><th>unit</th>"
                    "<th>info</th></tr>\n";
            for (const Measurement& m : it->second) {
                std::string info;
                for (const auto& [k, v] : m.additional_info) {
                    if (!info.empty()) {
                        info += ", ";
                    }
                    info += k + "=" + v;
                }
                html += "<tr><td>" + html_escape(m.name) + "</td><td>" +
                        format_value(m.value) + "</td><td>" +
                        to_string(m.unit) + "</td><td>" + html_escape(info) +
                        "</td></tr>\n";
            }
            html += "</table>\n";
        }
        html += "</section>\n";
    }

    // Collapse/expand all trace details.
    html +=
        "<script>\n"
        "document.addEventListener('keydown',function(e){\n"
        "  if(e.key==='c'){document.querySelectorAll('details')"
        ".forEach(function(d){d.open=false;});}\n"
        "  if(e.key==='o'){document.querySelectorAll('details')"
        ".forEach(function(d){d.open=true;});}\n"
        "});\n"
        "</script>\n";
    html += "</body>\n</html>\n";
    return html;
}

}  // namespace agenteval
