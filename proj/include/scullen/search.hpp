#pragma once

#include "scullen/bounds.hpp"
#include "scullen/families.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace scullen {

struct SearchConfig {
    unsigned long s_min = 2;
    unsigned long s_max = 100;
    unsigned long n_min = 1;
    unsigned long n_max = 100;
    int workers = 1;
    std::string checkpoint_path;  // empty: no checkpointing
    bool require_checkpoint = false;  // resume-only: missing file is an error
    bool exclude_families = false;
    bool report_conditional_exclusions = false;
    // Test hook: stop (with a checkpoint written) once this column is done.
    unsigned long stop_after_s = 0;
};

struct HitRecord {
    CullenIndex index;
    Natural value;
    std::vector<RepunitForm> forms;  // non-empty, each re-evaluates to value
    FamilyTag family;
};

struct SearchStats {
    unsigned long long cells = 0;
    unsigned long long hits_family_a = 0;
    unsigned long long hits_family_b = 0;
    unsigned long long hits_none = 0;
    double seconds = 0;  // wall time; diagnostics only, never serialized
};

struct SearchReport {
    std::vector<HitRecord> hits;  // ascending (s, n)
    SearchStats stats;
    bool complete = true;  // false when stop_after_s cut the run short
};

struct CheckpointError : std::runtime_error {
    explicit CheckpointError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Canonical identifier of the range and iteration order; a resume against
// a different fingerprint is an error, never a silent restart.
std::string config_fingerprint(const SearchConfig& cfg);

// Exhaustive scan of the rectangle: every C_{s,n} is evaluated and run
// through repunit detection, unconditionally (the bounds module never
// prunes).  Parallel over whole s columns; the merged hit list is in
// ascending (s, n) order regardless of worker count.  Resumes from
// cfg.checkpoint_path when the file exists; checkpoints are written at
// column-block boundaries.
SearchReport run_search(const SearchConfig& cfg);

// Single-threaded reference: a naive loop over cullen_value and
// detect_repunits, no incremental powering, no checkpoints.  Kept as the
// oracle the parallel engine is tested against.
SearchReport run_search_serial(const SearchConfig& cfg);

// Informational overlay: which in-range cells escape the exact exclusion
// inequalities (i.e., could host a repunit even under abc with eps = 1/6).
struct ConditionalSummary {
    unsigned long long cells = 0;
    unsigned long long excluded_both = 0;
    unsigned long long excluded_len3_only = 0;
    unsigned long long excluded_longer_only = 0;
    unsigned long long unexcluded = 0;
    std::vector<BoundCell> eq1_members_in_range;
    std::vector<BoundCell> eq3_members_in_range;
};

ConditionalSummary conditional_exclusion_report(const SearchConfig& cfg);

// JSONL report: one record per hit, an optional conditional record, and a
// final summary record.  Byte-identical for identical configs and hit
// sets; timing never appears here.
void write_report_jsonl(std::ostream& os, const SearchConfig& cfg,
                        const SearchReport& report);

}  // namespace scullen
