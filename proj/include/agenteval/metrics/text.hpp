// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "agenteval/core/types.hpp"
#include "agenteval/metrics/metric.hpp"

namespace agenteval {

// dot(u,v) / (|u||v|), in [-1,1]. Throws Error on dimension mismatch or a
// zero vector (undefined similarity).
double cosine_similarity(std::span<const double> u, std::span<const double> v);

class Embedder {
public:
    virtual ~Embedder() = default;
    virtual std::size_t dimension() const = 0;
    // Must return exactly dimension() components. Safe for concurrent calls.
    virtual std::vector<double> embed(const std::string& text) const = 0;
};

// Deterministic, platform-independent test embedder: 64-dimension hashed
// bag of words. Tokens are lowercased runs of ASCII alphanumerics; each
// token adds 1 at FNV-1a 64 hash mod 64.
class HashedBowEmbedder : public Embedder {
public:
    static constexpr std::size_t kDimension = 64;
    std::size_t dimension() const override { return kDimension; }
    std::vector<double> embed(const std::string& text) const override;
};

std::uint64_t fnv1a_64(const std::string& s);

// "AgentResponseSimilarity": for each case turn with acceptable responses,
// the max cosine similarity between the turn's actual assistant reply and
// the acceptable responses, via the configured embedder. additional_info
// records the best-matching acceptable response index and the turn.
class ResponseSimilarityMetric : public Metric {
public:
    ResponseSimilarityMetric(std::map<std::string, Case> cases,
                             const Embedder& embedder)
        : cases_(std::move(cases)), embedder_(embedder) {}

    std::string name() const override { return "AgentResponseSimilarity"; }
    std::vector<Measurement> evaluate_conversation(
        const std::vector<Trace>& conversation) const override;

private:
    std::map<std::string, Case> cases_;
    const Embedder& embedder_;
};

// Sentence BLEU with modified n-gram precision (counts clipped against the
// max per-reference count), geometric mean over n = 1..max_n capped at the
// candidate length, brevity penalty exp(1 - r/c) for c < r with r the
// closest reference length (ties to the shorter), and no smoothing: any
// zero precision gives 0. Tokenization is lowercased whitespace splitting.
double bleu_score(const std::string& candidate,
                  const std::vector<std::string>& references, int max_n = 4);

// "Bleu": per case turn with acceptable responses, BLEU of the turn's
// actual assistant reply against them.
class BleuMetric : public Metric {
public:
    explicit BleuMetric(std::map<std::string, Case> cases, int max_n = 4)
        : cases_(std::move(cases)), max_n_(max_n) {}

    std::string name() const override { return "Bleu"; }
    std::vector<Measurement> evaluate_conversation(
        const std::vector<Trace>& conversation) const override;

private:
    std::map<std::string, Case> cases_;
    int max_n_;
};

// The last assistant message between the turn_index-th user message and the
// next one, from a conversation snapshot. Null when the turn has no reply.
const std::string* assistant_reply_for_turn(const std::vector<Message>& messages,
                                            std::size_t turn_index);

}  // namespace agenteval
