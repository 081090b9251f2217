// SPDX-License-Identifier: Apache-2.0
#include "agenteval/cases/generate.hpp"

#include "agenteval/cases/builder.hpp"
#include "agenteval/errors.hpp"

namespace agenteval {

namespace {

std::string first_line(const std::string& text) {
    std::size_t end = text.find('\n');
    std::string line = end == std::string::npos ? text : text.substr(0, end);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' ||
                             line.back() == '.')) {
        line.pop_back();
    }
    std::size_t start = line.find_first_not_of(' ');
    return start == std::string::npos ? std::string{} : line.substr(start);
}

std::string template_input(const ToolSpec& tool, const std::string& locale) {
    std::string task = first_line(tool.description);
    if (locale == "en_EN") {
        if (task.empty()) {
            task = "do what it is for";
        }
        return "Please use " + tool.name + ": " + task + ".";
    }
    if (locale == "de_DE") {
        if (task.empty()) {
            task = "tu was es tun soll";
        }
        return "Bitte benutze " + tool.name + ": " + task + ".";
    }
    std::string supported;
    for (const std::string& tag : supported_case_gen_locales()) {
        if (!supported.empty()) {
            supported += ", ";
        }
        supported += tag;
    }
    throw Error("unsupported locale '" + locale +
                "' for template case generation (supported: " + supported + ")");
}

std::string llm_input(const ToolSpec& tool, const std::string& locale,
                      const CaseGenerator& generator) {
    if (generator.provider == nullptr) {
        throw Error("llm case generation needs a provider");
    }
    std::string prompt = "Write one short user request, in locale " + locale +
                         ", that a voice assistant should resolve by calling "
                         "the tool '" +
                         tool.name + "' (" + tool.description +
                         "). Reply with the request text only.";
    std::vector<Message> messages{Message{Role::User, prompt}};
    ModelReply reply = generator.provider->converse(
        "", messages, generator.model_id, 0.0, {});
    if (reply.text.empty()) {
        throw Error("case generation model returned no text for tool '" +
                    tool.name + "'");
    }
    return reply.text;
}

}  // namespace

std::vector<std::string> supported_case_gen_locales() {
    return {"de_DE", "en_EN"};
}

std::vector<Case> cases_for_agent_tools(const std::vector<ToolSpec>& tools,
                                        const std::vector<std::string>& languages,
                                        const CaseGenerator& generator) {
    if (tools.empty()) {
        throw Error("cases_for_agent_tools needs at least one tool");
    }
    if (languages.empty()) {
        throw Error("cases_for_agent_tools needs at least one language");
    }

    std::vector<Case> cases;
    cases.reserve(tools.size() * languages.size());
    for (const ToolSpec& tool : tools) {
        for (const std::string& locale : languages) {
            std::string input =
                generator.mode == CaseGenerator::Mode::Template
                    ? template_input(tool, locale)
                    : llm_input(tool, locale, generator);

            // Case names must stay unique across the set, so the locale is
            // appended when several languages are generated; the expected
            // tool is always set explicitly.
            std::string name = std::string(kToolUseCasePrefix) + tool.name;
            if (languages.size() > 1) {
                name += " [" + locale + "]";
            }
            cases.push_back(CaseBuilder(name)
                                .add_turn(std::move(input))
                                .expected_tool(tool.name)
                                .metadata("locale", locale)
                                .metadata("generator",
                                          generator.mode ==
                                                  CaseGenerator::Mode::Template
                                              ? "template"
                                              : "llm")
                                .build());
        }
    }
    return cases;
}

}  // namespace agenteval
