#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "excepta/sweep.hpp"

using namespace excepta;

namespace {

ReferenceTables shipped_refs() {
    return ReferenceTables::load_file(EXCEPTA_DATA_DIR "/reference_tables.json");
}

}  // namespace

TEST_CASE("prime condition parsing") {
    CHECK(PrimeCondition::parse("any").matches(2));
    CHECK(PrimeCondition::parse("p=5").matches(5));
    CHECK_FALSE(PrimeCondition::parse("p=5").matches(7));
    CHECK(PrimeCondition::parse("p>=3").matches(3));
    CHECK_FALSE(PrimeCondition::parse("p>=3").matches(2));
    CHECK(PrimeCondition::parse("p!=3").matches(5));
    CHECK_FALSE(PrimeCondition::parse("p!=3").matches(3));
    CHECK(PrimeCondition::parse("p in {2,5}").matches(5));
    CHECK_FALSE(PrimeCondition::parse("p in {2,5}").matches(3));
    CHECK_THROWS(PrimeCondition::parse("p<=3"));
}

TEST_CASE("weight pattern instantiation") {
    CHECK(instantiate_pattern("w1", 4) == Weight{1, 0, 0, 0});
    CHECK(instantiate_pattern("2w1", 4) == Weight{2, 0, 0, 0});
    CHECK(instantiate_pattern("wl", 4) == Weight{0, 0, 0, 1});
    CHECK(instantiate_pattern("w(l-1)", 4) == Weight{0, 0, 1, 0});
    CHECK(instantiate_pattern("w1+wl", 4) == Weight{1, 0, 0, 1});
    CHECK(instantiate_pattern("2w1+w2", 3) == Weight{2, 1, 0});
    CHECK(instantiate_pattern("0", 3) == Weight{0, 0, 0});
    CHECK_THROWS(instantiate_pattern("w9", 4));
}

TEST_CASE("reference tables instantiate and lookup") {
    ReferenceTables refs = shipped_refs();
    // E6: three exceptional rows, any p.
    auto inst = refs.instantiate({Family::E, 6}, 5);
    std::set<Weight> exc;
    for (const auto& [w, kv] : inst)
        if (kv.first == RefKind::Exceptional) exc.insert(w);
    std::set<Weight> expect = {
        {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}};
    CHECK(exc == expect);

    // A4 at p=3: row 4 of the unclassified table applies only at p in {2,3}.
    CHECK(refs.lookup({Family::A, 4}, 3, {0, 1, 1, 0}) == RefKind::Unclassified);
    CHECK(refs.lookup({Family::A, 4}, 5, {0, 1, 1, 0}) == RefKind::Absent);
    // B/C tables carry the section hypothesis p > 2.
    CHECK(refs.lookup({Family::C, 3}, 3, {0, 0, 1}) == RefKind::Exceptional);
    CHECK(refs.lookup({Family::B, 2}, 5, {1, 1}) == RefKind::Unclassified);
    CHECK(refs.lookup({Family::B, 2}, 3, {1, 1}) == RefKind::Absent);  // row has p != 3
}

TEST_CASE("sweep examples") {
    ReferenceTables refs = shipped_refs();

    RootSystem g2 = build({Family::G, 2});
    SweepReport rep = sweep_restricted(g2, 5, {});
    reconcile(rep, refs);
    REQUIRE(rep.weights.size() == 25);
    std::set<Weight> exc;
    for (const auto& w : rep.weights)
        if (w.verdict.kind == VerdictKind::Exceptional) exc.insert(w.lambda);
    CHECK(exc == std::set<Weight>{{0, 0}, {1, 0}, {0, 1}});
    CHECK(rep.conflict_count == 0);

    RootSystem a1 = build({Family::A, 1});
    SweepReport rep1 = sweep_restricted(a1, 3, {});
    reconcile(rep1, refs);
    std::set<Weight> exc1;
    for (const auto& w : rep1.weights)
        if (w.verdict.kind == VerdictKind::Exceptional) exc1.insert(w.lambda);
    CHECK(exc1 == std::set<Weight>{{0}, {1}, {2}});
    CHECK(rep1.conflict_count == 0);
}

TEST_CASE("reconcile statuses") {
    ReferenceTables refs = shipped_refs();
    RootSystem a4 = build({Family::A, 4});
    SweepReport rep = sweep_restricted(a4, 3, {});
    reconcile(rep, refs);
    CHECK(rep.conflict_count == 0);
    bool checked = false;
    for (const auto& w : rep.weights) {
        if (w.lambda == Weight{0, 1, 1, 0}) {
            CHECK(w.verdict.kind == VerdictKind::Undetermined);
            CHECK(w.reference == RefKind::Unclassified);
            CHECK(w.status == ReconcileStatus::MATCH);
            checked = true;
        }
    }
    CHECK(checked);
}

TEST_CASE("budget truncation is flagged") {
    RootSystem b4 = build({Family::B, 4});
    SweepOptions opts;
    opts.budget = 10;
    SweepReport rep = sweep_restricted(b4, 5, {}, opts);
    CHECK(rep.truncated);
    CHECK(rep.weights.size() == 10);
}

TEST_CASE("emission formats") {
    ReferenceTables refs = shipped_refs();
    RootSystem b2 = build({Family::B, 2});
    SweepReport rep = sweep_restricted(b2, 3, {});
    reconcile(rep, refs);

    std::string csv = emit(rep, EmitFormat::Csv);
    size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == rep.weights.size() + 1);
    CHECK(csv.rfind("lambda,kind,reasons,s_value,r_p_num,r_p_den,limit,absR,status", 0) == 0);

    std::string text = emit(rep, EmitFormat::Text);
    CHECK(text.rfind("conflicts:", 0) == 0);

    std::string json1 = emit(rep, EmitFormat::Json);
    std::string json2 = emit(rep, EmitFormat::Json);
    CHECK(json1 == json2);
}

TEST_CASE("determinism across worker counts") {
    ReferenceTables refs = shipped_refs();
    for (DynkinType t : {DynkinType{Family::F, 4}, DynkinType{Family::A, 3}}) {
        RootSystem rs = build(t);
        SweepOptions serial, parallel;
        serial.jobs = 1;
        parallel.jobs = 4;
        SweepReport a = sweep_restricted(rs, 5, {}, serial);
        SweepReport b = sweep_restricted(rs, 5, {}, parallel);
        reconcile(a, refs);
        reconcile(b, refs);
        CHECK(emit(a, EmitFormat::Json) == emit(b, EmitFormat::Json));
    }
}

TEST_CASE("reference table loader rejects overlapping kinds") {
    CHECK_THROWS(ReferenceTables::load_json_text(R"({
      "tables": [
        {"id": "x", "kind": "exceptional", "family": "A", "section_p": "any",
         "rows": [{"row": 1, "rank_min": 2, "rank_max": 2, "p": "any", "weights": ["w1"]}]},
        {"id": "y", "kind": "unclassified", "family": "A", "section_p": "any",
         "rows": [{"row": 1, "rank_min": 2, "rank_max": 2, "p": "any", "weights": ["w1"]}]}
      ]})")
                      .instantiate({Family::A, 2}, 5));
}
