#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "snp/verify.hpp"

using namespace snp;

namespace {

// Parse a JSONL log and drop the timing field, which is the one part of a
// run record that may legitimately differ between repeats.
std::vector<nlohmann::json> parsed_records(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        nlohmann::json rec = nlohmann::json::parse(line);
        rec.erase("wall_ms");
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace

TEST_CASE("campaign reruns produce identical run records", "[verify]") {
    CampaignOptions opt;
    opt.trials = 40;
    std::ostringstream log_a, log_b;
    opt.log = &log_a;
    const CampaignResult a = campaign_solver_oracle(opt);
    opt.log = &log_b;
    const CampaignResult b = campaign_solver_oracle(opt);
    CHECK(a.instances == b.instances);
    CHECK(a.violations == b.violations);
    CHECK(parsed_records(log_a.str()) == parsed_records(log_b.str()));
    CHECK_FALSE(parsed_records(log_a.str()).empty());
}

TEST_CASE("an explicit size pins the sweep to exactly that size", "[verify]") {
    CampaignOptions opt;
    opt.exhaustive_n = 5;
    const CampaignResult r = campaign_tournament_corollary(opt);
    CHECK(r.instances == 1024);  // 2^C(5,2), no random tail
    CHECK(r.pass());
}

TEST_CASE("failing checks are counted, stored and dumped", "[verify]") {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "snp_dump_test";
    std::filesystem::remove_all(dir);

    CampaignOptions opt;
    opt.dump_dir = dir.string();
    std::ostringstream log;
    opt.log = &log;
    detail::Runner run("probe", "synthetic failure plumbing", opt);
    const Digraph d = fixture_c3();
    const WeightAssignment w = WeightAssignment::unit(3);
    run.check(d, w, "fixture", [](std::vector<std::string>& bad) {
        bad.push_back("synthetic failure");
    });
    run.check(d, w, "fixture", [](std::vector<std::string>&) {});
    const CampaignResult r = run.finish();

    CHECK(r.instances == 2);
    CHECK(r.violations == 1);
    CHECK_FALSE(r.pass());
    REQUIRE(r.findings.size() == 1);
    CHECK(r.findings.front().failures.front() == "synthetic failure");
    CHECK(r.findings.front().instance.d == d);

    // Exactly one dumped instance file, and it loads back.
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        ++files;
        const Instance replay = load_instance_file(entry.path().string());
        CHECK(replay.d == d);
    }
    CHECK(files == 1);

    const auto records = parsed_records(log.str());
    REQUIRE(records.size() == 2);
    CHECK(records[0]["verdict"] == "fail");
    CHECK(records[1]["verdict"] == "pass");
    std::filesystem::remove_all(dir);
}

TEST_CASE("the oracle check flags digraphs with no qualifying vertex", "[verify]") {
    // A two-vertex digon: both vertices have a first neighbor and no second
    // neighborhood, so nobody meets the bound. Only non-oriented digraphs
    // can do this, which is the point of the orientedness hypothesis.
    Digraph digon(2, false);
    digon.add_arc(0, 1);
    digon.add_arc(1, 0);
    CampaignOptions opt;
    detail::Runner run("probe", "oracle plumbing", opt);
    run.check(digon, WeightAssignment::unit(2), "digon",
              [](std::vector<std::string>&) {});
    const CampaignResult r = run.finish();
    CHECK(r.oracle_empty == 1);
    CHECK(r.violations == 0);  // tracked separately from check failures
    REQUIRE(r.findings.size() == 1);
}

TEST_CASE("parallel hunts match sequential hunts verdict for verdict", "[verify]") {
    HuntOptions opt;
    opt.klass = "missing-matching";
    opt.n_min = 4;
    opt.n_max = 10;
    opt.trials = 60;
    opt.seed = 19;
    std::ostringstream log_seq, log_par;
    opt.log = &log_seq;
    opt.threads = 1;
    const CampaignResult seq = hunt(opt);
    opt.log = &log_par;
    opt.threads = 4;
    const CampaignResult par = hunt(opt);
    CHECK(seq.instances == par.instances);
    CHECK(seq.violations == par.violations);
    CHECK(seq.oracle_empty == par.oracle_empty);
    CHECK(parsed_records(log_seq.str()) == parsed_records(log_par.str()));
}

TEST_CASE("hunting each class stays clean at small sizes", "[verify]") {
    for (const char* klass : {"tournament", "oriented", "missing-matching"}) {
        HuntOptions opt;
        opt.klass = klass;
        opt.n_min = 3;
        opt.n_max = 8;
        opt.trials = 50;
        opt.seed = 23;
        opt.weight_range = 4;
        const CampaignResult r = hunt(opt);
        INFO("class " << klass);
        CHECK(r.instances == 50);
        CHECK(r.pass());
        CHECK(r.oracle_empty == 0);
    }
    HuntOptions bad;
    bad.klass = "no-such-class";
    bad.trials = 1;
    CHECK_THROWS_AS(hunt(bad), std::invalid_argument);
}
