#include "excepta/sweep.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace excepta {

std::string ref_kind_name(RefKind k) {
    switch (k) {
        case RefKind::Exceptional: return "Exceptional";
        case RefKind::Unclassified: return "Unclassified";
        case RefKind::Absent: return "Absent";
    }
    return "?";
}

std::string reconcile_status_name(ReconcileStatus s) {
    switch (s) {
        case ReconcileStatus::MATCH: return "MATCH";
        case ReconcileStatus::SOUND_UNDETERMINED: return "SOUND_UNDETERMINED";
        case ReconcileStatus::CONFLICT: return "CONFLICT";
    }
    return "?";
}

bool PrimeCondition::matches(long long p) const {
    switch (kind) {
        case Kind::Any: return true;
        case Kind::Eq: return p == values[0];
        case Kind::Ge: return p >= values[0];
        case Kind::Ne: return p != values[0];
        case Kind::In: return std::find(values.begin(), values.end(), p) != values.end();
    }
    return false;
}

PrimeCondition PrimeCondition::parse(const std::string& s) {
    PrimeCondition c;
    auto num_list = [](const std::string& t) {
        std::vector<long long> v;
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ','))
            v.push_back(std::stoll(item));
        return v;
    };
    if (s == "any") {
        c.kind = Kind::Any;
    } else if (s.rfind("p>=", 0) == 0) {
        c.kind = Kind::Ge;
        c.values = {std::stoll(s.substr(3))};
    } else if (s.rfind("p!=", 0) == 0) {
        c.kind = Kind::Ne;
        c.values = {std::stoll(s.substr(3))};
    } else if (s.rfind("p in {", 0) == 0 && s.back() == '}') {
        c.kind = Kind::In;
        c.values = num_list(s.substr(6, s.size() - 7));
        if (c.values.empty()) throw std::invalid_argument("empty prime set in '" + s + "'");
    } else if (s.rfind("p=", 0) == 0) {
        c.kind = Kind::Eq;
        c.values = {std::stoll(s.substr(2))};
    } else {
        throw std::invalid_argument("cannot parse prime condition '" + s + "'");
    }
    return c;
}

std::string PrimeCondition::str() const {
    auto join = [&] {
        std::string t;
        for (size_t i = 0; i < values.size(); ++i)
            t += (i ? "," : "") + std::to_string(values[i]);
        return t;
    };
    switch (kind) {
        case Kind::Any: return "any";
        case Kind::Eq: return "p=" + join();
        case Kind::Ge: return "p>=" + join();
        case Kind::Ne: return "p!=" + join();
        case Kind::In: return "p in {" + join() + "}";
    }
    return "?";
}

bool ReferenceRow::matches_p(long long p) const {
    for (const auto& c : p_conds)
        if (!c.matches(p)) return false;
    return true;
}

Weight instantiate_pattern(const std::string& pattern, int rank) {
    Weight w(rank, 0);
    if (pattern == "0") return w;
    size_t pos = 0;
    while (pos < pattern.size()) {
        int coeff = 0;
        bool have_coeff = false;
        while (pos < pattern.size() && isdigit(pattern[pos])) {
            coeff = coeff * 10 + (pattern[pos++] - '0');
            have_coeff = true;
        }
        if (!have_coeff) coeff = 1;
        if (pos >= pattern.size() || pattern[pos] != 'w')
            throw std::invalid_argument("bad weight pattern '" + pattern + "'");
        ++pos;
        int idx;
        if (pos < pattern.size() && pattern[pos] == 'l') {
            idx = rank;
            ++pos;
        } else if (pos < pattern.size() && pattern[pos] == '(') {
            size_t close = pattern.find(')', pos);
            if (close == std::string::npos)
                throw std::invalid_argument("bad weight pattern '" + pattern + "'");
            std::string inner = pattern.substr(pos + 1, close - pos - 1);  // "l-k"
            if (inner.rfind("l-", 0) != 0)
                throw std::invalid_argument("bad weight pattern '" + pattern + "'");
            idx = rank - std::stoi(inner.substr(2));
            pos = close + 1;
        } else {
            int n = 0;
            bool have = false;
            while (pos < pattern.size() && isdigit(pattern[pos])) {
                n = n * 10 + (pattern[pos++] - '0');
                have = true;
            }
            if (!have) throw std::invalid_argument("bad weight pattern '" + pattern + "'");
            idx = n;
        }
        if (idx < 1 || idx > rank)
            throw std::invalid_argument("pattern '" + pattern + "' index out of range at rank " +
                                        std::to_string(rank));
        w[idx - 1] += coeff;
        if (pos < pattern.size()) {
            if (pattern[pos] != '+')
                throw std::invalid_argument("bad weight pattern '" + pattern + "'");
            ++pos;
        }
    }
    return w;
}

namespace {

// Spot checks that the transcription and the library agree on well-known
// Weyl-module dimensions before reference data is used in reconciliation.
void reference_integrity_check() {
    static bool done = false;
    if (done) return;
    struct Spot {
        DynkinType t;
        Weight w;
        long long dim;
    };
    std::vector<Spot> spots = {
        {{Family::E, 6}, {1, 0, 0, 0, 0, 0}, 27}, {{Family::E, 7}, {0, 0, 0, 0, 0, 0, 1}, 56},
        {{Family::E, 8}, {0, 0, 0, 0, 0, 0, 0, 1}, 248}, {{Family::F, 4}, {0, 0, 0, 1}, 26},
        {{Family::G, 2}, {1, 0}, 7},
    };
    for (int l = 2; l <= 6; ++l) {
        Weight w1(l, 0);
        w1[0] = 1;
        spots.push_back({{Family::B, l}, w1, 2 * l + 1});
        spots.push_back({{Family::C, l}, w1, 2 * l});
        if (l >= 4) spots.push_back({{Family::D, l}, w1, 2 * l});
        Weight w2(l, 0);
        w2[1] = 1;
        spots.push_back({{Family::A, l}, w2, static_cast<long long>(l + 1) * l / 2});
    }
    for (const auto& s : spots) {
        RootSystem rs = build(s.t);
        if (weyl_dimension(rs, s.w) != s.dim)
            throw IntegrityError("reference integrity: Weyl dimension mismatch for " +
                                 type_name(s.t));
    }
    done = true;
}

}  // namespace

ReferenceTables ReferenceTables::load_json_text(const std::string& text) {
    reference_integrity_check();
    ReferenceTables refs;
    auto doc = nlohmann::json::parse(text);
    for (const auto& table : doc.at("tables")) {
        std::string id = table.at("id").get<std::string>();
        Family fam = parse_family(table.at("family").get<std::string>());
        RefKind kind;
        std::string ks = table.at("kind").get<std::string>();
        if (ks == "exceptional") kind = RefKind::Exceptional;
        else if (ks == "unclassified") kind = RefKind::Unclassified;
        else throw std::invalid_argument("reference table kind must be exceptional|unclassified");
        PrimeCondition section = PrimeCondition::parse(table.value("section_p", "any"));
        for (const auto& row : table.at("rows")) {
            ReferenceRow r;
            r.table_id = id;
            r.row = row.at("row").get<int>();
            r.kind = kind;
            r.family = fam;
            r.rank_min = row.at("rank_min").get<int>();
            r.rank_max = row.value("rank_max", 0);
            r.p_conds.push_back(PrimeCondition::parse(row.value("p", "any")));
            if (section.kind != PrimeCondition::Kind::Any) r.p_conds.push_back(section);
            r.weight_patterns = row.at("weights").get<std::vector<std::string>>();
            if (r.weight_patterns.empty())
                throw std::invalid_argument("reference row without weights: " + id);
            refs.rows.push_back(std::move(r));
        }
    }
    return refs;
}

ReferenceTables ReferenceTables::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open reference tables file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_json_text(text);
}

std::map<Weight, std::pair<RefKind, std::string>> ReferenceTables::instantiate(
    DynkinType dtype, long long p) const {
    check_prime(p);
    std::map<Weight, std::pair<RefKind, std::string>> out;
    for (const auto& r : rows) {
        if (r.family != dtype.family) continue;
        if (dtype.rank < r.rank_min) continue;
        if (r.rank_max > 0 && dtype.rank > r.rank_max) continue;
        if (!r.matches_p(p)) continue;
        std::string tag = r.table_id + ":" + std::to_string(r.row);
        for (const auto& pat : r.weight_patterns) {
            Weight w = instantiate_pattern(pat, dtype.rank);
            if (!is_dominant(w)) throw IntegrityError("reference weight not dominant: " + tag);
            auto it = out.find(w);
            if (it != out.end()) {
                if (it->second.first != r.kind)
                    throw IntegrityError("reference tables overlap at " + tag + " vs " +
                                         it->second.second);
                continue;
            }
            out.emplace(std::move(w), std::make_pair(r.kind, tag));
        }
    }
    return out;
}

RefKind ReferenceTables::lookup(DynkinType dtype, long long p, const Weight& w) const {
    auto m = instantiate(dtype, p);
    auto it = m.find(w);
    return it == m.end() ? RefKind::Absent : it->second.first;
}

namespace {

Weight weight_at_index(long long idx, int rank, long long p) {
    Weight w(rank);
    for (int i = rank - 1; i >= 0; --i) {
        w[i] = static_cast<int>(idx % p);
        idx /= p;
    }
    return w;
}

}  // namespace

SweepReport sweep_restricted(const RootSystem& rs, long long p, const MultiplicityHints& hints,
                             const SweepOptions& opts) {
    check_prime(p);
    if (is_special_prime(rs.dtype, p))
        throw std::invalid_argument("sweep_restricted: special prime refused for " +
                                    type_name(rs.dtype));
    SweepReport rep;
    rep.dtype = rs.dtype;
    rep.p = p;

    BigInt grid = 1;
    for (int i = 0; i < rs.rank(); ++i) grid *= p;
    long long n;
    if (grid > opts.budget) {
        rep.truncated = true;
        n = opts.budget;
    } else {
        n = grid.convert_to<long long>();
    }
    rep.weights.resize(n);

    std::string error;
    auto work = [&](long long i) {
        WeightReport& wr = rep.weights[i];
        wr.lambda = weight_at_index(i, rs.rank(), p);
        wr.verdict = classify_weight(rs, wr.lambda, p, hints, opts.screen);
    };

    if (opts.jobs <= 1) {
        // Serial reference path: identical results, no thread pool.
        for (long long i = 0; i < n; ++i) work(i);
    } else {
#ifdef _OPENMP
#pragma omp parallel for num_threads(opts.jobs) schedule(dynamic, 64)
        for (long long i = 0; i < n; ++i) {
            if (!error.empty()) continue;
            try {
                work(i);
            } catch (const std::exception& e) {
#pragma omp critical
                if (error.empty()) error = e.what();
            }
        }
        if (!error.empty()) throw IntegrityError("sweep aborted: " + error);
#else
        for (long long i = 0; i < n; ++i) work(i);
#endif
    }

    for (const auto& wr : rep.weights) {
        switch (wr.verdict.kind) {
            case VerdictKind::Exceptional: ++rep.exceptional_count; break;
            case VerdictKind::NotExceptional: ++rep.not_exceptional_count; break;
            case VerdictKind::Undetermined: ++rep.undetermined_count; break;
        }
    }
    return rep;
}

void reconcile(SweepReport& rep, const ReferenceTables& refs) {
    auto table = refs.instantiate(rep.dtype, rep.p);
    rep.conflict_count = rep.match_count = rep.sound_undetermined_count = 0;
    for (auto& wr : rep.weights) {
        auto it = table.find(wr.lambda);
        wr.reference = it == table.end() ? RefKind::Absent : it->second.first;
        // The trivial module is exceptional but the tables list only nontrivial
        // modules; reconcile it as a match by convention.
        if (is_zero(wr.lambda)) {
            wr.status = ReconcileStatus::MATCH;
        } else
            switch (wr.verdict.kind) {
                case VerdictKind::Exceptional:
                    wr.status = wr.reference == RefKind::Absent ? ReconcileStatus::CONFLICT
                                                                : ReconcileStatus::MATCH;
                    break;
                case VerdictKind::NotExceptional:
                    wr.status = wr.reference == RefKind::Exceptional ? ReconcileStatus::CONFLICT
                                                                     : ReconcileStatus::MATCH;
                    break;
                case VerdictKind::Undetermined:
                    wr.status = wr.reference == RefKind::Unclassified
                                    ? ReconcileStatus::MATCH
                                    : ReconcileStatus::SOUND_UNDETERMINED;
                    break;
            }
        switch (wr.status) {
            case ReconcileStatus::MATCH: ++rep.match_count; break;
            case ReconcileStatus::SOUND_UNDETERMINED: ++rep.sound_undetermined_count; break;
            case ReconcileStatus::CONFLICT: ++rep.conflict_count; break;
        }
    }
}

namespace {

std::string weight_str(const Weight& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
    return s;
}

std::string reasons_str(const Verdict& v) {
    std::string s;
    for (size_t i = 0; i < v.reasons.size(); ++i)
        s += (i ? "|" : "") + reason_name(v.reasons[i]);
    return s;
}

}  // namespace

std::string emit(const SweepReport& rep, EmitFormat format) {
    using json = nlohmann::ordered_json;
    if (format == EmitFormat::Json) {
        json doc;
        doc["type"] = family_name(rep.dtype.family);
        doc["rank"] = rep.dtype.rank;
        doc["p"] = rep.p;
        doc["truncated"] = rep.truncated;
        doc["summary"] = {{"weights", rep.weights.size()},
                          {"exceptional", rep.exceptional_count},
                          {"not_exceptional", rep.not_exceptional_count},
                          {"undetermined", rep.undetermined_count},
                          {"match", rep.match_count},
                          {"sound_undetermined", rep.sound_undetermined_count},
                          {"conflict", rep.conflict_count}};
        doc["weights"] = json::array();
        for (const auto& wr : rep.weights) {
            json e;
            e["lambda"] = wr.lambda;
            e["kind"] = verdict_name(wr.verdict.kind);
            json rs = json::array();
            for (Reason r : wr.verdict.reasons) rs.push_back(reason_name(r));
            e["reasons"] = rs;
            if (wr.verdict.screening) {
                const auto& s = *wr.verdict.screening;
                e["s_value"] = s.s_value.str();
                e["r_p_num"] = s.rp_numerator.str();
                e["r_p_den"] = s.rp_denominator;
                e["limit"] = s.limit;
                e["absR"] = s.abs_R;
                e["short_circuited"] = s.short_circuited;
                e["overflowed"] = s.overflowed;
            }
            e["reference"] = ref_kind_name(wr.reference);
            e["status"] = reconcile_status_name(wr.status);
            doc["weights"].push_back(std::move(e));
        }
        return doc.dump(2) + "\n";
    }
    if (format == EmitFormat::Csv) {
        std::string out = "lambda,kind,reasons,s_value,r_p_num,r_p_den,limit,absR,status\n";
        for (const auto& wr : rep.weights) {
            const auto* s = wr.verdict.screening ? &*wr.verdict.screening : nullptr;
            out += weight_str(wr.lambda) + "," + verdict_name(wr.verdict.kind) + "," +
                   reasons_str(wr.verdict) + "," + (s ? s->s_value.str() : "") + "," +
                   (s ? s->rp_numerator.str() : "") + "," +
                   (s ? std::to_string(s->rp_denominator) : "") + "," +
                   (s ? std::to_string(s->limit) : "") + "," +
                   (s ? std::to_string(s->abs_R) : "") + "," +
                   reconcile_status_name(wr.status) + "\n";
        }
        return out;
    }
    // Text summary; conflicts first.
    std::string out = "conflicts: " + std::to_string(rep.conflict_count) + "\n";
    out += "grid: " + type_name(rep.dtype) + " p=" + std::to_string(rep.p) +
           (rep.truncated ? " (truncated)" : "") + "\n";
    out += "weights: " + std::to_string(rep.weights.size()) +
           "  exceptional: " + std::to_string(rep.exceptional_count) +
           "  not_exceptional: " + std::to_string(rep.not_exceptional_count) +
           "  undetermined: " + std::to_string(rep.undetermined_count) + "\n";
    out += "match: " + std::to_string(rep.match_count) +
           "  sound_undetermined: " + std::to_string(rep.sound_undetermined_count) + "\n";
    for (const auto& wr : rep.weights)
        if (wr.status == ReconcileStatus::CONFLICT)
            out += "CONFLICT: lambda=(" + weight_str(wr.lambda) + ") computed " +
                   verdict_name(wr.verdict.kind) + " reference " + ref_kind_name(wr.reference) +
                   "\n";
    return out;
}

}  // namespace excepta
