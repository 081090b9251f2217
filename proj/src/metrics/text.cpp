// SPDX-License-Identifier: Apache-2.0
#include "agenteval/metrics/text.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <unordered_map>

#include "agenteval/errors.hpp"
#include "agenteval/metrics/builtin.hpp"

namespace agenteval {

double cosine_similarity(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) {
        throw Error("cosine similarity needs equal dimensions (" +
                    std::to_string(u.size()) + " vs " + std::to_string(v.size()) +
                    ")");
    }
    double dot = 0.0;
    double norm_u = 0.0;
    double norm_v = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        norm_u += u[i] * u[i];
        norm_v += v[i] * v[i];
    }
    if (norm_u == 0.0 || norm_v == 0.0) {
        throw Error("cosine similarity undefined for a zero vector");
    }
    return dot / (std::sqrt(norm_u) * std::sqrt(norm_v));
}

std::uint64_t fnv1a_64(const std::string& s) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char c : s) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::vector<double> HashedBowEmbedder::embed(const std::string& text) const {
    std::vector<double> vec(kDimension, 0.0);
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            vec[fnv1a_64(token) % kDimension] += 1.0;
            token.clear();
        }
    };
    for (unsigned char c : text) {
        if (std::isalnum(c)) {
            token += static_cast<char>(std::tolower(c));
        } else {
            flush();
        }
    }
    flush();
    return vec;
}

const std::string* assistant_reply_for_turn(const std::vector<Message>& messages,
                                            std::size_t turn_index) {
    std::size_t user_seen = 0;
    const std::string* reply = nullptr;
    for (const Message& m : messages) {
        if (m.role == Role::User) {
            if (user_seen > turn_index) {
                break;
            }
            ++user_seen;
        } else if (m.role == Role::Assistant && user_seen == turn_index + 1) {
            reply = &m.text;
        }
    }
    return reply;
}

namespace {

Measurement turn_error(const std::string& metric_name, std::size_t turn,
                       const std::string& message) {
    Measurement err;
    err.name = metric_name + ".error";
    err.value = 0.0;
    err.unit = Unit::Dimensionless;
    err.additional_info["error"] = message;
    err.additional_info["turn"] = std::to_string(turn);
    return err;
}

}  // namespace

std::vector<Measurement> ResponseSimilarityMetric::evaluate_conversation(
    const std::vector<Trace>& conversation) const {
    auto case_it = cases_.find(conversation.front().case_name);
    if (case_it == cases_.end()) {
        return {};
    }
    const Case& case_def = case_it->second;
    const Trace* llm = last_llm_trace(conversation);

    std::vector<Measurement> out;
    for (std::size_t turn = 0; turn < case_def.turns.size(); ++turn) {
        const std::vector<std::string>& acceptable =
            case_def.turns[turn].acceptable_responses;
        if (acceptable.empty()) {
            continue;
        }
        const std::string* reply =
            llm != nullptr
                ? assistant_reply_for_turn(llm->user_conversation, turn)
                : nullptr;
        if (reply == nullptr) {
            out.push_back(turn_error(name(), turn, "missing assistant reply"));
            continue;
        }

        std::vector<double> actual_vec;
        try {
            actual_vec = embedder_.embed(*reply);
        } catch (const std::exception& e) {
            out.push_back(turn_error(name(), turn, e.what()));
            continue;
        }

        double best = -std::numeric_limits<double>::infinity();
        std::size_t best_index = 0;
        bool any = false;
        for (std::size_t i = 0; i < acceptable.size(); ++i) {
            double sim;
            try {
                sim = cosine_similarity(actual_vec,
                                        embedder_.embed(acceptable[i]));
            } catch (const Error&) {
                // Zero embedding on either side: this pair has no defined
                // similarity; other acceptable responses may still match.
                continue;
            }
            if (!any || sim > best) {
                best = sim;
                best_index = i;
                any = true;
            }
        }
        if (!any) {
            out.push_back(
                turn_error(name(), turn, "similarity undefined for every "
                                         "acceptable response (zero embedding)"));
            continue;
        }

        Measurement m;
        m.name = name();
        m.unit = Unit::Score;
        m.value = best;
        m.additional_info["best_match_index"] = std::to_string(best_index);
        m.additional_info["turn"] = std::to_string(turn);
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

std::vector<std::string> bleu_tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string token;
    for (unsigned char c : text) {
        if (std::isspace(c)) {
            if (!token.empty()) {
                tokens.push_back(token);
                token.clear();
            }
        } else {
            token += static_cast<char>(std::tolower(c));
        }
    }
    if (!token.empty()) {
        tokens.push_back(token);
    }
    return tokens;
}

// n-gram -> count, n-grams joined with '\x1f' as map keys.
std::unordered_map<std::string, int> ngram_counts(
    const std::vector<std::string>& tokens, int n) {
    std::unordered_map<std::string, int> counts;
    if (static_cast<int>(tokens.size()) < n) {
        return counts;
    }
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        std::string key = tokens[i];
        for (int j = 1; j < n; ++j) {
            key += '\x1f';
            key += tokens[i + j];
        }
        counts[key] += 1;
    }
    return counts;
}

}  // namespace

double bleu_score(const std::string& candidate,
                  const std::vector<std::string>& references, int max_n) {
    if (max_n < 1) {
        throw Error("bleu max_n must be >= 1");
    }
    const std::vector<std::string> cand = bleu_tokenize(candidate);
    if (cand.empty()) {
        return 0.0;
    }
    std::vector<std::vector<std::string>> refs;
    for (const std::string& r : references) {
        std::vector<std::string> tokens = bleu_tokenize(r);
        if (!tokens.empty()) {
            refs.push_back(std::move(tokens));
        }
    }
    if (refs.empty()) {
        return 0.0;
    }

    const int effective_max_n =
        std::min<int>(max_n, static_cast<int>(cand.size()));

    double log_precision_sum = 0.0;
    for (int n = 1; n <= effective_max_n; ++n) {
        auto cand_counts = ngram_counts(cand, n);
        std::unordered_map<std::string, int> max_ref_counts;
        for (const auto& ref : refs) {
            for (const auto& [key, count] : ngram_counts(ref, n)) {
                auto it = max_ref_counts.find(key);
                if (it == max_ref_counts.end() || it->second < count) {
                    max_ref_counts[key] = count;
                }
            }
        }
        std::int64_t clipped = 0;
        std::int64_t total = 0;
        for (const auto& [key, count] : cand_counts) {
            total += count;
            auto it = max_ref_counts.find(key);
            if (it != max_ref_counts.end()) {
                clipped += std::min(count, it->second);
            }
        }
        if (clipped == 0) {
            return 0.0;
        }
        log_precision_sum += std::log(static_cast<double>(clipped) /
                                      static_cast<double>(total));
    }

    // Closest reference length; ties go to the shorter one.
    const std::int64_t c = static_cast<std::int64_t>(cand.size());
    std::int64_t r = static_cast<std::int64_t>(refs.front().size());
    for (const auto& ref : refs) {
        const std::int64_t len = static_cast<std::int64_t>(ref.size());
        const std::int64_t d_new = std::llabs(len - c);
        const std::int64_t d_old = std::llabs(r - c);
        if (d_new < d_old || (d_new == d_old && len < r)) {
            r = len;
        }
    }
    double brevity_penalty = 1.0;
    if (c < r) {
        brevity_penalty =
            std::exp(1.0 - static_cast<double>(r) / static_cast<double>(c));
    }

    return brevity_penalty *
           std::exp(log_precision_sum / static_cast<double>(effective_max_n));
}

std::vector<Measurement> BleuMetric::evaluate_conversation(
    const std::vector<Trace>& conversation) const {
    auto case_it = cases_.find(conversation.front().case_name);
    if (case_it == cases_.end()) {
        return {};
    }
    const Case& case_def = case_it->second;
    const Trace* llm = last_llm_trace(conversation);

    std::vector<Measurement> out;
    for (std::size_t turn = 0; turn < case_def.turns.size(); ++turn) {
        const std::vector<std::string>& acceptable =
            case_def.turns[turn].acceptable_responses;
        if (acceptable.empty()) {
            continue;
        }
        const std::string* reply =
            llm != nullptr
                ? assistant_reply_for_turn(llm->user_conversation, turn)
                : nullptr;
        if (reply == nullptr) {
            out.push_back(turn_error(name(), turn, "missing assistant reply"));
            continue;
        }
        Measurement m;
        m.name = name();
        m.unit = Unit::Score;
        m.value = bleu_score(*reply, acceptable, max_n_);
        m.additional_info["turn"] = std::to_string(turn);
        if (bleu_tokenize(*reply).empty()) {
            m.additional_info["degenerate"] = "empty candidate";
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace agenteval
