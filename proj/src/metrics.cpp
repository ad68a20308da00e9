#include "ombench/metrics.hpp"

#include <algorithm>

#include "ombench/errors.hpp"
#include "ombench/rng.hpp"

namespace ombench {

namespace {

/// Round-half-up share of n at pct percent, in exact integer arithmetic.
std::size_t ratio_size(std::size_t n, std::size_t pct) {
    return (n * pct + 50) / 100;
}

}  // namespace

std::string to_string(SplitScheme scheme) {
    return scheme == SplitScheme::unsupervised ? "unsupervised" : "semi_supervised";
}

SplitScheme scheme_from_string(const std::string& name) {
    if (name == "unsupervised") {
        return SplitScheme::unsupervised;
    }
    if (name == "semi_supervised" || name == "semi-supervised") {
        return SplitScheme::semi_supervised;
    }
    throw OmError("unknown split scheme: " + name);
}

SplitBundle split_references(const MappingSet& refs, SplitScheme scheme, std::uint64_t seed) {
    if (refs.empty()) {
        throw OmError("cannot split an empty reference set");
    }
    std::vector<Mapping> order(refs.begin(), refs.end());  // canonical (src, tgt) order
    DetRng rng(seed);
    rng.shuffle(order);

    const std::size_t n = order.size();
    std::size_t train_n = scheme == SplitScheme::semi_supervised ? ratio_size(n, 20) : 0;
    std::size_t val_n = ratio_size(n, 10);
    train_n = std::min(train_n, n);
    val_n = std::min(val_n, n - train_n);

    SplitBundle bundle;
    bundle.seed = seed;
    bundle.scheme = scheme;
    bundle.train = MappingSet(refs.relation());
    bundle.val = MappingSet(refs.relation());
    bundle.test = MappingSet(refs.relation());
    for (std::size_t i = 0; i < n; ++i) {
        if (i < train_n) {
            bundle.train.add(order[i]);
        } else if (i < train_n + val_n) {
            bundle.val.add(order[i]);
        } else {
            bundle.test.add(order[i]);
        }
    }
    return bundle;
}

RankingReport local_ranking_metrics(const std::vector<CandidateRecord>& records,
                                    const std::vector<std::size_t>& ks) {
    RankingReport report;
    for (std::size_t k : ks) {
        report.hits[k] = 0.0;
    }
    double rr_sum = 0.0;
    std::map<std::size_t, std::size_t> hit_counts;
    for (const auto& record : records) {
        if (!record.scored()) {
            ++report.skipped;
            continue;
        }
        const double pos = *record.tgt_score;
        std::size_t rank = 1;
        for (double s : record.scores) {
            if (s >= pos) {
                ++rank;  // pessimistic: ties rank below the positive
            }
        }
        rr_sum += 1.0 / static_cast<double>(rank);
        for (std::size_t k : ks) {
            if (rank <= k) {
                ++hit_counts[k];
            }
        }
        ++report.n;
    }
    if (report.n > 0) {
        report.mrr = rr_sum / static_cast<double>(report.n);
        for (std::size_t k : ks) {
            report.hits[k] =
                static_cast<double>(hit_counts[k]) / static_cast<double>(report.n);
        }
    }
    return report;
}

double f_beta_score(double precision, double recall, double beta) {
    const double b2 = beta * beta;
    const double denom = b2 * precision + recall;
    if (precision * recall == 0.0 || denom == 0.0) {
        return 0.0;
    }
    return (1.0 + b2) * precision * recall / denom;
}

MatchReport global_matching_metrics(const MappingSet& m_out, const MappingSet& m_ref,
                                    const MappingSet* m_eval, double beta,
                                    bool suppress_recall) {
    MatchReport report;
    report.beta = beta;
    report.out_size = m_out.size();
    report.recall_suppressed = suppress_recall;

    const MappingSet& eval = m_eval != nullptr ? *m_eval : m_ref;
    report.ref_size = eval.size();
    report.intersection = m_out.intersect(eval).size();

    std::size_t precision_denom = m_out.size();
    if (m_eval != nullptr) {
        // Mappings correct under the full reference but outside the eval
        // subset neither help nor hurt: drop them from the denominator.
        precision_denom = m_out.subtract(m_ref.subtract(eval)).size();
    }
    if (m_out.empty()) {
        report.empty_output = true;
    } else if (precision_denom > 0) {
        report.precision =
            static_cast<double>(report.intersection) / static_cast<double>(precision_denom);
    }
    if (!eval.empty()) {
        report.recall = static_cast<double>(report.intersection) / static_cast<double>(eval.size());
    }
    report.f_beta = f_beta_score(report.precision, report.recall, beta);
    return report;
}

}  // namespace ombench
