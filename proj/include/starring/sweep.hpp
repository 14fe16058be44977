#pragma once

#include "starring/element.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace starring {

struct Counterexample {
    std::uint64_t element_index = 0;
    std::string element;      // canonical display form
    std::string condition_id; // which claim failed
    std::string details;      // human-readable diagnosis

    friend bool operator==(const Counterexample& a, const Counterexample& b) {
        return a.element_index == b.element_index && a.element == b.element &&
               a.condition_id == b.condition_id && a.details == b.details;
    }
};

/**
 * Result of sweeping one theorem over a whole finite carrier. agreement has
 * one entry per claim id, true when no element violated it; counterexamples
 * are sorted by (element index, claim id, details) and identical for every
 * worker count. elapsed_ms is the only nondeterministic field.
 */
struct VerificationReport {
    RingDescriptor ring;
    std::string theorem_id;
    unsigned n_lo = 1, n_hi = 1, m_lo = 1, m_hi = 1;
    std::uint64_t elements_scanned = 0;
    std::vector<std::pair<std::string, bool>> agreement;
    std::vector<Counterexample> counterexamples;
    std::int64_t elapsed_ms = 0;

    bool all_agree() const;
};

struct SweepOptions {
    unsigned n_lo = 1, n_hi = 1;
    unsigned m_lo = 1, m_hi = 1;
    unsigned workers = 0;            // 0: one per hardware thread
    bool oracle_cross_check = false; // also compare pipeline inverse vs oracle scan
    std::uint64_t max_counterexamples = 1000;
};

/** Theorem ids accepted by verify_theorem, in display order. */
std::vector<std::string> known_theorems();

/** The claim ids a sweep of the given theorem reports on. */
std::vector<std::string> theorem_condition_ids(const std::string& theorem_id, const SweepOptions& opt);

/**
 * Evaluates every claim of the named theorem for every element of a finite
 * carrier against ground truth (the exhaustive Penrose scan) and reports
 * agreement plus counterexamples. Work is split across workers by index
 * range; reports are identical for any worker count apart from elapsed_ms.
 *
 * Theorem ids: T3.1, T3.2, T3.3, T3.4, T3.5, C3.6, T3.8, T3.9, C3.10 and the
 * supporting sweeps L2.1, L2.2, L2.3, L2.4, L2.6, L2.7, L2.8, L2.9, L3.7.
 */
VerificationReport verify_theorem(const RingDescriptor& r, const std::string& theorem_id,
                                  const SweepOptions& opt = {});

nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

} // namespace starring
