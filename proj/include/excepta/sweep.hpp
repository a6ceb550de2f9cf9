#pragma once

#include "excepta/screening.hpp"

namespace excepta {

enum class RefKind { Exceptional, Unclassified, Absent };

std::string ref_kind_name(RefKind k);

enum class ReconcileStatus { MATCH, SOUND_UNDETERMINED, CONFLICT };

std::string reconcile_status_name(ReconcileStatus s);

// A condition on the prime: any, p = v, p >= v, p != v, or p in a set.
struct PrimeCondition {
    enum class Kind { Any, Eq, Ge, Ne, In } kind = Kind::Any;
    std::vector<long long> values;

    bool matches(long long p) const;
    static PrimeCondition parse(const std::string& s);
    std::string str() const;
};

struct ReferenceRow {
    std::string table_id;   // source table label
    int row = 0;            // row number within the table
    RefKind kind = RefKind::Absent;  // Exceptional or Unclassified
    Family family;
    int rank_min = 0, rank_max = 0;  // inclusive; max 0 means unbounded
    // Row condition plus the section hypothesis; all must hold (intersection).
    std::vector<PrimeCondition> p_conds;
    bool matches_p(long long p) const;
    std::vector<std::string> weight_patterns;  // e.g. "w1+w(l-1)", "2w2"
};

struct ReferenceTables {
    std::vector<ReferenceRow> rows;

    static ReferenceTables load_file(const std::string& path);
    static ReferenceTables load_json_text(const std::string& text);

    // Concrete weights of each kind for a given (type, p). Checks disjointness.
    std::map<Weight, std::pair<RefKind, std::string>> instantiate(DynkinType dtype,
                                                                  long long p) const;
    RefKind lookup(DynkinType dtype, long long p, const Weight& w) const;
};

// Parse a symbolic weight pattern ("w1+wl", "2w(l-1)", "0") at a concrete rank.
Weight instantiate_pattern(const std::string& pattern, int rank);

struct WeightReport {
    Weight lambda;
    Verdict verdict;
    RefKind reference = RefKind::Absent;
    ReconcileStatus status = ReconcileStatus::MATCH;
};

struct SweepReport {
    DynkinType dtype;
    long long p = 0;
    std::vector<WeightReport> weights;  // lexicographic in lambda
    bool truncated = false;             // budget cut the grid short
    long long conflict_count = 0;
    long long match_count = 0;
    long long sound_undetermined_count = 0;
    long long exceptional_count = 0;
    long long not_exceptional_count = 0;
    long long undetermined_count = 0;
};

struct SweepOptions {
    int jobs = 1;                   // 1 = serial reference implementation
    long long budget = 10'000'000;  // max number of restricted weights
    ScreenOptions screen;
};

SweepReport sweep_restricted(const RootSystem& rs, long long p, const MultiplicityHints& hints,
                             const SweepOptions& opts = {});

// Fill reference kinds, statuses, and summary counts.
void reconcile(SweepReport& report, const ReferenceTables& refs);

enum class EmitFormat { Json, Csv, Text };

std::string emit(const SweepReport& report, EmitFormat format);

}  // namespace excepta
