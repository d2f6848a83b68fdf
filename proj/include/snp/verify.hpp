#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "snp/dependency.hpp"
#include "snp/digraph.hpp"
#include "snp/generators.hpp"
#include "snp/good_order.hpp"
#include "snp/io.hpp"
#include "snp/matching.hpp"
#include "snp/median_order.hpp"
#include "snp/rational.hpp"
#include "snp/reference.hpp"
#include "snp/vertexset.hpp"
#include "snp/weights.hpp"

namespace snp {

// A failed check together with the instance that triggered it.
struct Finding {
    std::string campaign;
    std::uint64_t index = 0;
    std::vector<std::string> failures;
    Instance instance;
};

struct CampaignOptions {
    std::uint64_t seed = 20260815;
    int exhaustive_n = -1;    // >= 0 restricts exhaustive sweeps to exactly this size
    std::int64_t trials = -1; // >= 0 overrides the random-trial count
    std::string dump_dir;     // failing instances are written here when non-empty
    std::ostream* log = nullptr;  // one JSONL run record per instance when set
    std::string command = "verify";
    int exact_limit = kDefaultExactLimit;
};

struct CampaignResult {
    std::string name;
    std::string description;
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;    // instances with at least one failed check
    std::uint64_t oracle_empty = 0;  // instances where no vertex met the bound
    std::vector<Finding> findings;   // first kMaxStoredFindings kept
    double seconds = 0;

    bool pass() const { return violations == 0; }
};

inline constexpr std::size_t kMaxStoredFindings = 64;

namespace detail {

inline void write_run_record(std::ostream& log, const CampaignOptions& opt,
                             const std::string& campaign, std::uint64_t index,
                             const Instance& inst, const std::vector<std::string>& failures,
                             double wall_ms) {
    nlohmann::json rec;
    rec["command"] = opt.command;
    rec["campaign"] = campaign;
    rec["seed"] = opt.seed;
    rec["index"] = index;
    rec["class"] = inst.klass;
    std::ostringstream hex;
    hex << "0x" << std::hex << instance_hash(inst);
    rec["hash"] = hex.str();
    rec["verdict"] = failures.empty() ? "pass" : "fail";
    if (!failures.empty()) rec["failures"] = failures;
    rec["wall_ms"] = wall_ms;
    log << rec.dump() << "\n";
}

// Sequential campaign executor: counts instances, funnels check failures and
// the never-expected empty-oracle events into findings, dumps failing
// instances for replay, and appends run records.
class Runner {
public:
    Runner(std::string name, std::string description, const CampaignOptions& opt)
        : opt_(opt), start_(std::chrono::steady_clock::now()) {
        result_.name = std::move(name);
        result_.description = std::move(description);
    }

    void check(const Digraph& d, const WeightAssignment& w, const std::string& klass,
               const std::function<void(std::vector<std::string>&)>& fn) {
        const std::uint64_t index = result_.instances++;
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<std::string> failures;
        try {
            fn(failures);
        } catch (const std::exception& ex) {
            failures.push_back(std::string("exception: ") + ex.what());
        }
        if (!failures.empty()) ++result_.violations;
        if (d.vertex_count() > 0 && snp_oracle(d, w) == 0) {
            ++result_.oracle_empty;
            failures.push_back("no vertex meets the second-neighborhood bound");
        }
        const double wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        if (!failures.empty()) record_failure(index, d, w, klass, failures);
        if (opt_.log) {
            Instance inst = make_instance(index, d, w, klass);
            write_run_record(*opt_.log, opt_, result_.name, index, inst, failures, wall_ms);
        }
    }

    CampaignResult finish() {
        result_.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return std::move(result_);
    }

private:
    CampaignOptions opt_;
    CampaignResult result_;
    std::chrono::steady_clock::time_point start_;

    Instance make_instance(std::uint64_t index, const Digraph& d, const WeightAssignment& w,
                           const std::string& klass) const {
        Instance inst;
        inst.d = d;
        if (!w.all_unit()) inst.weights = w;
        inst.name = result_.name + "-" + std::to_string(index);
        inst.klass = klass;
        inst.seed = opt_.seed;
        return inst;
    }

    void record_failure(std::uint64_t index, const Digraph& d, const WeightAssignment& w,
                        const std::string& klass, const std::vector<std::string>& failures) {
        Instance inst = make_instance(index, d, w, klass);
        if (!opt_.dump_dir.empty()) {
            std::filesystem::create_directories(opt_.dump_dir);
            std::ostringstream name;
            name << result_.name << "-i" << index << "-0x" << std::hex << instance_hash(inst)
                 << ".json";
            save_instance_file(inst, (std::filesystem::path(opt_.dump_dir) / name.str()).string());
        }
        if (result_.findings.size() < kMaxStoredFindings)
            result_.findings.push_back({result_.name, index, failures, std::move(inst)});
    }
};

inline std::vector<int> exhaustive_sizes(const CampaignOptions& opt, int lo, int hi) {
    if (opt.exhaustive_n >= 0) return {opt.exhaustive_n};
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

inline std::uint64_t trial_count(const CampaignOptions& opt, std::uint64_t def) {
    if (opt.trials >= 0) return static_cast<std::uint64_t>(opt.trials);
    if (opt.exhaustive_n >= 0) return 0;  // an explicit --n pins an exhaustive-only sweep
    return def;
}

// Shared derivation so every campaign that consumes the random
// missing-matching stream sees byte-identical instances.
struct MatchingDraw {
    int n = 0;
    int m = 0;
    Digraph d{0};
};

inline MatchingDraw draw_missing_matching(std::uint64_t seed, std::uint64_t index, int n_lo,
                                          int n_hi) {
    SplitMix64 rng = seeded_stream(seed, index);
    const int n = n_lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_hi - n_lo + 1)));
    const int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n / 2)));
    MatchingDraw draw{n, m, Digraph{0}};
    draw.d = random_missing_matching(n, m, rng.next());
    return draw;
}

inline Ordering identity_order(int n) {
    Ordering order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    return order;
}

}  // namespace detail

// Criterion 1 - exact solver against full permutation enumeration: on every
// tournament with at most six vertices and on seeded random weighted
// oriented digraphs with at most seven, the subset-DP optimum must equal the
// brute-force maximum and the returned ordering must achieve it.
inline CampaignResult campaign_solver_oracle(const CampaignOptions& opt) {
    detail::Runner run("solver-oracle", "exact optimum equals permutation enumeration", opt);
    auto checks = [&](const Digraph& d, const WeightAssignment& w,
                      std::vector<std::string>& bad) {
        const MedianDp dp(d, w, opt.exact_limit);
        const Rational brute = reference::max_order_weight(d, w);
        if (dp.optimum() != brute)
            bad.push_back("solver optimum " + dp.optimum().to_string() +
                          " differs from enumerated maximum " + brute.to_string());
        const Ordering order = dp.smallest_order();
        if (order_weight(d, w, order) != dp.optimum())
            bad.push_back("returned ordering does not achieve the reported optimum");
    };

    for (int n : detail::exhaustive_sizes(opt, 1, 6)) {
        const WeightAssignment w = WeightAssignment::unit(n);
        enumerate_tournaments(n, [&](const Digraph& d) {
            run.check(d, w, "tournament", [&](std::vector<std::string>& bad) { checks(d, w, bad); });
        });
    }
    const std::uint64_t trials = detail::trial_count(opt, 500);
    for (std::uint64_t i = 0; i < trials; ++i) {
        SplitMix64 rng = seeded_stream(opt.seed, i);
        const int n = opt.exhaustive_n >= 0 ? opt.exhaustive_n
                                            : 2 + static_cast<int>(rng.below(6));
        const Digraph d = random_oriented(n, rng.next());
        const WeightAssignment w = random_weights(n, rng.next());
        run.check(d, w, "oriented", [&](std::vector<std::string>& bad) { checks(d, w, bad); });
    }
    return run.finish();
}

// Criterion 2 - every ordering produced by the exact solver and by the local
// repair pass satisfies the interval exchange property, on the corpus of
// criterion 1.
inline CampaignResult campaign_feedback(const CampaignOptions& opt) {
    detail::Runner run("feedback", "solver orderings satisfy the interval exchange property",
                       opt);
    auto checks = [&](const Digraph& d, const WeightAssignment& w,
                      std::vector<std::string>& bad) {
        const Ordering exact = exact_median_order(d, w, opt.exact_limit);
        const FeedbackCheck fe = feedback_property_holds(d, w, exact);
        if (!fe.holds)
            bad.push_back("exact ordering violates the exchange property on [" +
                          std::to_string(fe.i) + ", " + std::to_string(fe.j) + "]");
        const Ordering local =
            local_median_order(d, w, detail::identity_order(d.vertex_count()));
        const FeedbackCheck fl = feedback_property_holds(d, w, local);
        if (!fl.holds)
            bad.push_back("local ordering violates the exchange property on [" +
                          std::to_string(fl.i) + ", " + std::to_string(fl.j) + "]");
    };

    for (int n : detail::exhaustive_sizes(opt, 1, 6)) {
        const WeightAssignment w = WeightAssignment::unit(n);
        enumerate_tournaments(n, [&](const Digraph& d) {
            run.check(d, w, "tournament", [&](std::vector<std::string>& bad) { checks(d, w, bad); });
        });
    }
    const std::uint64_t trials = detail::trial_count(opt, 500);
    for (std::uint64_t i = 0; i < trials; ++i) {
        SplitMix64 rng = seeded_stream(opt.seed, i);
        const int n = opt.exhaustive_n >= 0 ? opt.exhaustive_n
                                            : 2 + static_cast<int>(rng.below(6));
        const Digraph d = random_oriented(n, rng.next());
        const WeightAssignment w = random_weights(n, rng.next());
        run.check(d, w, "oriented", [&](std::vector<std::string>& bad) { checks(d, w, bad); });
    }
    return run.finish();
}

// Criterion 3 - tournament corollary: the feed of the exact median order has
// out-weight at most the weight of the good vertices, and meets the weighted
// second-neighborhood bound.
inline CampaignResult campaign_tournament_corollary(const CampaignOptions& opt) {
    detail::Runner run("tournaments", "feed out-weight bounded by the good vertices", opt);
    auto checks = [&](const Digraph& d, const WeightAssignment& w,
                      std::vector<std::string>& bad) {
        const Ordering order = exact_median_order(d, w, opt.exact_limit);
        const MainInequalityReport rep = check_main_inequality(d, w, order);
        for (const MainInequalityEntry& e : rep.entries)
            if (!e.holds)
                bad.push_back("feed inequality fails: w(N+) = " + e.lhs.to_string() +
                              " > w(good) = " + e.rhs.to_string());
        if (!rep.good_within_second)
            bad.push_back("a good vertex is not in the feed's second neighborhood");
        if (!has_snp(d, w, rep.feed))
            bad.push_back("feed vertex misses the weighted second-neighborhood bound");
    };

    for (int n : detail::exhaustive_sizes(opt, 1, 6)) {
        const WeightAssignment w = WeightAssignment::unit(n);
        enumerate_tournaments(n, [&](const Digraph& d) {
            run.check(d, w, "tournament", [&](std::vector<std::string>& bad) { checks(d, w, bad); });
        });
    }
    const std::uint64_t trials = detail::trial_count(opt, 1000);
    for (std::uint64_t i = 0; i < trials; ++i) {
        SplitMix64 rng = seeded_stream(opt.seed, i);
        const int n = opt.exhaustive_n >= 0 ? opt.exhaustive_n
                                            : 3 + static_cast<int>(rng.below(10));
        const Digraph d = random_tournament(n, rng.next());
        const WeightAssignment w = random_weights(n, rng.next());
        run.check(d, w, "weighted-tournament",
                  [&](std::vector<std::string>& bad) { checks(d, w, bad); });
    }
    return run.finish();
}

// Criterion 4 - main inequality on oriented missing-matching instances: after
// orienting the dependency paths, every vertex of the feed's block satisfies
// the outside-weight inequality on a good median order of the result.
// Gadget cycles of every supported length are included, unit and weighted.
inline CampaignResult campaign_main_inequality(const CampaignOptions& opt) {
    detail::Runner run("main-inequality", "block members bounded by outside good weight", opt);
    auto checks = [&](const Digraph& d, const WeightAssignment& w,
                      std::vector<std::string>& bad) {
        if (!delta_structure_check(d))
            bad.push_back("dependency digraph has a node of degree > 1");
        const OrientationResult orientation = orient_paths(d);
        for (const std::string& f : orientation.findings) bad.push_back(f);
        const Ordering order = good_median_order(orientation.dprime, w, opt.exact_limit);
        const MainInequalityReport rep = check_main_inequality(orientation.dprime, w, order);
        if (!rep.good_within_second)
            bad.push_back("a good vertex is not in the feed's second neighborhood");
        for (const MainInequalityEntry& e : rep.entries) {
            if (!e.holds)
                bad.push_back("member " + std::to_string(e.x) + ": w(N+ \\ J) = " +
                              e.lhs.to_string() + " > w(good \\ J) = " + e.rhs.to_string());
            if (!e.lifts)
                bad.push_back("member " + std::to_string(e.x) +
                              " meets the bound in the block but not in the digraph");
        }
    };

    if (opt.exhaustive_n < 0 || (opt.exhaustive_n >= 4 && opt.exhaustive_n <= 16 &&
                                 opt.exhaustive_n % 2 == 0)) {
        for (int k = 2; k <= 8; ++k) {
            if (opt.exhaustive_n >= 0 && 2 * k != opt.exhaustive_n) continue;
            const Digraph g = cycle_gadget(k);
            const WeightAssignment unit = WeightAssignment::unit(2 * k);
            run.check(g, unit, "gadget",
                      [&](std::vector<std::string>& bad) { checks(g, unit, bad); });
            const WeightAssignment w =
                random_weights(2 * k, seeded_stream(opt.seed ^ 0xD00DULL, static_cast<std::uint64_t>(k)).next());
            run.check(g, w, "weighted-gadget",
                      [&](std::vector<std::string>& bad) { checks(g, w, bad); });
        }
    }
    const std::uint64_t trials = detail::trial_count(opt, 1000);
    for (std::uint64_t i = 0; i < trials; ++i) {
        const detail::MatchingDraw draw =
            opt.exhaustive_n >= 0
                ? detail::draw_missing_matching(opt.seed, i, opt.exhaustive_n, opt.exhaustive_n)
                : detail::draw_missing_matching(opt.seed, i, 4, 14);
        const WeightAssignment w =
            i % 2 == 0 ? WeightAssignment::unit(draw.n)
                       : random_weights(draw.n, seeded_stream(opt.seed ^ 0x5EEDULL, i).next());
        run.check(draw.d, w, "missing-matching",
                  [&](std::vector<std::string>& bad) { checks(draw.d, w, bad); });
    }
    return run.finish();
}

// Criterion 5 - dependency structure: on every missing-matching instance the
// suites generate, the dependency digraph has in- and out-degree at most one,
// and a missing edge has a convenient orientation exactly when its node has
// in-degree zero.
inline CampaignResult campaign_delta_structure(const CampaignOptions& opt) {
    detail::Runner run("delta-structure", "dependency degrees at most one on matchings", opt);
    auto checks = [&](const Digraph& d, std::vector<std::string>& bad) {
        if (!delta_structure_check(d))
            bad.push_back("dependency digraph has a node of degree > 1");
        if (!good_edge_lemma_check(d))
            bad.push_back("convenient orientation exists but in-degree is not zero (or vice versa)");
    };

    for (int n : detail::exhaustive_sizes(opt, 2, 6)) {
        const WeightAssignment w = WeightAssignment::unit(n);
        for (int m = 1; 2 * m <= n && m <= 3; ++m)
            enumerate_missing_matchings(n, m, [&](const Digraph& d) {
                run.check(d, w, "missing-matching",
                          [&](std::vector<std::string>& bad) { checks(d, bad); });
            });
    }
    for (int k = 2; k <= 8 && opt.exhaustive_n < 0; ++k) {
        const Digraph g = cycle_gadget(k);
        run.check(g, WeightAssignment::unit(2 * k), "gadget",
                  [&](std::vector<std::string>& bad) { checks(g, bad); });
    }
    // The same random streams criteria 4 and 7 consume.
    const std::uint64_t trials = detail::trial_count(opt, 2000);
    for (std::uint64_t i = 0; i < trials; ++i) {
        const detail::MatchingDraw draw =
            opt.exhaustive_n >= 0
                ? detail::draw_missing_matching(opt.seed, i % 1000, opt.exhaustive_n,
                                                opt.exhaustive_n)
                : detail::draw_missing_matching(opt.seed, i % 1000, 4, 14);
        run.check(draw.d, WeightAssignment::unit(draw.n), "missing-matching",
                  [&](std::vector<std::string>& bad) { checks(draw.d, bad); });
    }
    return run.finish();
}

// Criterion 6 - dependency-cycle gadgets: for every supported length the
// gadget's dependency digraph is one cycle of that length and every cycle
// lemma holds, degrees included.
inline CampaignResult campaign_cycle_lemmas(const CampaignOptions& opt) {
    detail::Runner run("cycle-lemmas", "gadgets satisfy every dependency-cycle lemma", opt);
    const int k_lo = opt.exhaustive_n >= 2 ? opt.exhaustive_n : 2;
    const int k_hi = opt.exhaustive_n >= 2 ? opt.exhaustive_n : 8;
    for (int k = k_lo; k <= k_hi; ++k) {
        const Digraph g = cycle_gadget(k);  // throws on self-validation failure
        const WeightAssignment w = WeightAssignment::unit(2 * k);
        run.check(g, w, "gadget", [&](std::vector<std::string>& bad) {
            const DependencyDigraph delta = dependency_digraph(g);
            const std::vector<DeltaComponent> comps = delta_components(delta);
            if (comps.size() != 1 || comps.front().kind != ComponentKind::cycle ||
                static_cast<int>(comps.front().walk.size()) != k) {
                bad.push_back("dependency digraph is not a single cycle of length " +
                              std::to_string(k));
                return;
            }
            const ChainLabeling chain = label_component(delta, comps.front());
            if (!chain.wrap_ok) bad.push_back("closing pairing violates the parity rule");
            const CycleLemmasReport rep = cycle_lemmas_check(g, chain);
            if (!rep.wraparound) bad.push_back("wraparound arcs or exclusions fail");
            if (!rep.interval) bad.push_back("endpoint set is not an interval");
            if (!rep.neighborhoods) bad.push_back("alternating neighborhood formula fails");
            if (!rep.second_neighborhoods) bad.push_back("second-neighborhood formula fails");
            if (!rep.degrees) bad.push_back("degrees differ from k - 1");
        });
    }
    return run.finish();
}

// Criterion 7 - feed theorem: on exhaustive small missing-matching instances
// and a seeded random stream, every feed of a maximum-weight ordering of the
// path-oriented digraph meets the bound in both digraphs, with the added-arc
// reversal spot check at feeds that tail an added arc.
inline CampaignResult campaign_feed_snp(const CampaignOptions& opt) {
    detail::Runner run("feed-snp", "every oriented-digraph feed meets the bound twice", opt);
    auto checks = [&](const Digraph& d, std::vector<std::string>& bad) {
        const FeedSnpReport rep = feed_snp_theorem_check(d, opt.exact_limit, opt.exact_limit);
        for (const std::string& f : rep.findings) bad.push_back(f);
        if (!rep.swept_all_feeds) bad.push_back("feed sweep unexpectedly incomplete");
    };

    for (int n : detail::exhaustive_sizes(opt, 4, 6)) {
        const WeightAssignment w = WeightAssignment::unit(n);
        const int m_hi = std::min(3, n / 2);
        for (int m = 0; m <= m_hi; ++m)
            enumerate_missing_matchings(n, m, [&](const Digraph& d) {
                run.check(d, w, "missing-matching",
                          [&](std::vector<std::string>& bad) { checks(d, bad); });
            });
    }
    const std::uint64_t trials = detail::trial_count(opt, 1000);
    for (std::uint64_t i = 0; i < trials; ++i) {
        const detail::MatchingDraw draw =
            opt.exhaustive_n >= 0
                ? detail::draw_missing_matching(opt.seed, i, opt.exhaustive_n, opt.exhaustive_n)
                : detail::draw_missing_matching(opt.seed, i, 4, 14);
        run.check(draw.d, WeightAssignment::unit(draw.n), "missing-matching",
                  [&](std::vector<std::string>& bad) { checks(draw.d, bad); });
    }
    return run.finish();
}

// Criterion 8 - two-vertex theorem: on every sink-free instance whose
// dependency components are all cycles (tournaments included), the
// constructive search returns two distinct vertices, and both are confirmed
// against the naive reference oracle.
inline CampaignResult campaign_two_snp(const CampaignOptions& opt) {
    detail::Runner run("two-snp", "two distinct vertices meet the bound", opt);
    auto eligible = [&](const Digraph& d) {
        if (d.vertex_count() == 0 || d.has_sink()) return false;
        const MissingGraph mg = missing_graph(d);
        if (!mg.is_matching) return false;
        if (mg.edges.empty()) return true;
        for (const DeltaComponent& comp : delta_components(dependency_digraph(d)))
            if (comp.kind != ComponentKind::cycle) return false;
        return true;
    };
    auto checks = [&](const Digraph& d, std::vector<std::string>& bad) {
        const TwoSnpReport rep = two_snp_check(d, opt.exact_limit);
        for (const std::string& f : rep.findings) bad.push_back(f);
        if (!rep.pass) return;
        const VertexSet confirmed = reference::snp_set(d, WeightAssignment::unit(d.vertex_count()));
        if (!vs_contains(confirmed, rep.first))
            bad.push_back("first vertex not confirmed by the reference oracle");
        if (!vs_contains(confirmed, rep.second))
            bad.push_back("second vertex not confirmed by the reference oracle");
        if (rep.first == rep.second) bad.push_back("returned vertices coincide");
    };

    for (int n : detail::exhaustive_sizes(opt, 1, 6)) {
        const WeightAssignment w = WeightAssignment::unit(n);
        enumerate_tournaments(n, [&](const Digraph& d) {
            if (!eligible(d)) return;
            run.check(d, w, "tournament", [&](std::vector<std::string>& bad) { checks(d, bad); });
        });
        if (n > 5) continue;
        for (int m = 1; 2 * m <= n && m <= 3; ++m)
            enumerate_missing_matchings(n, m, [&](const Digraph& d) {
                if (!eligible(d)) return;
                run.check(d, w, "missing-matching",
                          [&](std::vector<std::string>& bad) { checks(d, bad); });
            });
    }
    return run.finish();
}

// Criterion 9 - sedimentation: on the corpus of criterion 3, one application
// keeps the weight and the good-median-order shape, iteration terminates
// with a stable or periodic classification, and the pinned fixtures come out
// exactly as derived (re-checked against full enumeration).
inline CampaignResult campaign_sedimentation(const CampaignOptions& opt) {
    detail::Runner run("sedimentation", "one step preserves weight; iteration terminates", opt);
    auto checks = [&](const Digraph& d, const WeightAssignment& w,
                      std::vector<std::string>& bad) {
        const Ordering order = good_median_order(d, w, opt.exact_limit);
        const Ordering settled = sed(d, w, order, opt.exact_limit);
        if (order_weight(d, w, settled) != order_weight(d, w, order))
            bad.push_back("one sedimentation step changed the weight");
        if (!feedback_property_holds(d, w, settled).holds)
            bad.push_back("sedimented ordering violates the exchange property");
        const IntervalStructure is = interval_structure(d);
        for (const ComponentGroup& g : is.groups)
            if (!detail::block_consecutive(settled, g.K))
                bad.push_back("sedimented ordering splits a component block");
        const SedOutcome outcome = sed_classify(d, w, order, opt.exact_limit);
        if (outcome.kind == SedKind::periodic && outcome.cycle.empty())
            bad.push_back("periodic classification without a cycle");
    };

    // Pinned fixtures, re-checked against full enumeration.
    {
        const Digraph c3 = fixture_c3();
        const WeightAssignment w3 = WeightAssignment::unit(3);
        run.check(c3, w3, "fixture", [&](std::vector<std::string>& bad) {
            const SedOutcome outcome = sed_classify(c3, w3, good_median_order(c3, w3));
            if (outcome.kind != SedKind::periodic || outcome.cycle.size() != 3)
                bad.push_back("directed triangle: expected a period of three orderings");
            std::vector<Ordering> cyc = outcome.cycle;
            std::sort(cyc.begin(), cyc.end());
            if (cyc != reference::all_median_orders(c3, w3))
                bad.push_back("directed triangle: period is not the full set of maximum-weight "
                              "orderings");
        });
        const Digraph tt3 = fixture_tt3();
        run.check(tt3, w3, "fixture", [&](std::vector<std::string>& bad) {
            const SedOutcome outcome = sed_classify(tt3, w3, good_median_order(tt3, w3));
            if (outcome.kind != SedKind::periodic || outcome.cycle.size() != 1)
                bad.push_back("transitive triangle: expected a period of one ordering");
            if (outcome.cycle != reference::all_median_orders(tt3, w3))
                bad.push_back("transitive triangle: period is not the unique maximum-weight "
                              "ordering");
        });
        const WeightAssignment w112({Rational{1}, Rational{1}, Rational{2}});
        run.check(c3, w112, "fixture", [&](std::vector<std::string>& bad) {
            const Ordering order = good_median_order(c3, w112);
            if (order_weight(c3, w112, order) != reference::max_order_weight(c3, w112))
                bad.push_back("weighted triangle: ordering is not maximum-weight");
            const SedOutcome outcome = sed_classify(c3, w112, order);
            if (outcome.kind != SedKind::stable || outcome.rank != 0)
                bad.push_back("weighted triangle: expected stability at rank zero");
        });
    }

    for (int n : detail::exhaustive_sizes(opt, 1, 6)) {
        const WeightAssignment w = WeightAssignment::unit(n);
        enumerate_tournaments(n, [&](const Digraph& d) {
            run.check(d, w, "tournament", [&](std::vector<std::string>& bad) { checks(d, w, bad); });
        });
    }
    const std::uint64_t trials = detail::trial_count(opt, 1000);
    for (std::uint64_t i = 0; i < trials; ++i) {
        SplitMix64 rng = seeded_stream(opt.seed, i);
        const int n = opt.exhaustive_n >= 0 ? opt.exhaustive_n
                                            : 3 + static_cast<int>(rng.below(10));
        const Digraph d = random_tournament(n, rng.next());
        const WeightAssignment w = random_weights(n, rng.next());
        run.check(d, w, "weighted-tournament",
                  [&](std::vector<std::string>& bad) { checks(d, w, bad); });
    }
    return run.finish();
}

using CampaignFn = CampaignResult (*)(const CampaignOptions&);

struct CampaignEntry {
    int criterion;
    const char* name;
    CampaignFn fn;
};

inline const std::vector<CampaignEntry>& campaign_registry() {
    static const std::vector<CampaignEntry> table = {
        {1, "solver-oracle", &campaign_solver_oracle},
        {2, "feedback", &campaign_feedback},
        {3, "tournaments", &campaign_tournament_corollary},
        {4, "main-inequality", &campaign_main_inequality},
        {5, "delta-structure", &campaign_delta_structure},
        {6, "cycle-lemmas", &campaign_cycle_lemmas},
        {7, "feed-snp", &campaign_feed_snp},
        {8, "two-snp", &campaign_two_snp},
        {9, "sedimentation", &campaign_sedimentation},
    };
    return table;
}

inline void print_campaign_line(std::ostream& out, int criterion, const CampaignResult& r) {
    out << (r.pass() ? "[PASS]" : "[FAIL]") << " criterion " << criterion << " (" << r.name
        << "): " << r.description << " - instances=" << r.instances
        << " violations=" << r.violations << " (" << std::fixed << std::setprecision(1)
        << r.seconds << "s)\n";
    out.unsetf(std::ios::fixed);
    std::size_t shown = 0;
    for (const Finding& f : r.findings) {
        if (shown++ == 5) {
            out << "    ... " << r.findings.size() - 5 << " more stored findings\n";
            break;
        }
        for (const std::string& msg : f.failures)
            out << "    instance " << f.index << ": " << msg << "\n";
    }
}

// Runs the full acceptance ladder (criteria 1-9 plus the aggregated oracle
// criterion 10), printing one verdict line per criterion. Returns true when
// everything passed.
inline bool run_acceptance(const CampaignOptions& opt, std::ostream& out) {
    bool all_pass = true;
    std::uint64_t total_instances = 0;
    std::uint64_t total_empty = 0;
    std::vector<CampaignResult> results;
    for (const CampaignEntry& entry : campaign_registry()) {
        CampaignResult r = entry.fn(opt);
        print_campaign_line(out, entry.criterion, r);
        all_pass = all_pass && r.pass();
        total_instances += r.instances;
        total_empty += r.oracle_empty;
        results.push_back(std::move(r));
    }
    const bool oracle_pass = total_empty == 0;
    out << (oracle_pass ? "[PASS]" : "[FAIL]")
        << " criterion 10 (snc-sanity): some vertex meets the bound on every instance - "
        << "instances=" << total_instances << " empty=" << total_empty << "\n";
    all_pass = all_pass && oracle_pass;
    out << "acceptance: " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass;
}

// --- Randomized counterexample hunt ----------------------------------------

struct HuntOptions {
    std::string klass = "missing-matching";  // tournament | oriented | missing-matching
    int n_min = 4;
    int n_max = 12;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 20260815;
    int weight_range = 1;  // 1 = unit weights
    int threads = 1;
    std::string dump_dir;
    std::ostream* log = nullptr;
    std::string command = "hunt";
    int exact_limit = kDefaultExactLimit;
};

namespace detail {

struct HuntItem {
    Digraph d{0};
    WeightAssignment w = WeightAssignment::unit(0);
    std::vector<std::string> failures;
    double wall_ms = 0;
};

inline HuntItem hunt_one(const HuntOptions& opt, std::uint64_t index) {
    SplitMix64 rng = seeded_stream(opt.seed, index);
    const int span = opt.n_max - opt.n_min + 1;
    const int n = opt.n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
    HuntItem item;
    if (opt.klass == "tournament")
        item.d = random_tournament(n, rng.next());
    else if (opt.klass == "oriented")
        item.d = random_oriented(n, rng.next());
    else if (opt.klass == "missing-matching") {
        const int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n / 2)));
        item.d = random_missing_matching(n, m, rng.next());
    } else {
        throw std::invalid_argument("hunt: unknown instance class \"" + opt.klass + "\"");
    }
    item.w = opt.weight_range > 1 ? random_weights(n, rng.next(), opt.weight_range)
                                  : WeightAssignment::unit(n);

    const auto t0 = std::chrono::steady_clock::now();
    auto& bad = item.failures;
    try {
        if (snp_oracle(item.d, item.w) == 0)
            bad.push_back("no vertex meets the second-neighborhood bound");
        if (missing_graph(item.d).is_matching && !delta_structure_check(item.d))
            bad.push_back("dependency digraph has a node of degree > 1");
        if (!good_edge_lemma_check(item.d))
            bad.push_back("convenient-orientation criterion disagrees with in-degree zero");
        if (n <= opt.exact_limit) {
            const Ordering order = exact_median_order(item.d, item.w, opt.exact_limit);
            if (!feedback_property_holds(item.d, item.w, order).holds)
                bad.push_back("exact ordering violates the exchange property");
            if (opt.klass == "tournament") {
                const MainInequalityReport rep = check_main_inequality(item.d, item.w, order);
                for (const MainInequalityEntry& e : rep.entries)
                    if (!e.holds) bad.push_back("feed inequality fails");
                if (!has_snp(item.d, item.w, rep.feed))
                    bad.push_back("feed vertex misses the weighted bound");
                const SedOutcome outcome = sed_classify(item.d, item.w, order, opt.exact_limit);
                (void)outcome;
            } else if (opt.klass == "missing-matching") {
                const FeedSnpReport rep =
                    feed_snp_theorem_check(item.d, opt.exact_limit, opt.exact_limit);
                for (const std::string& f : rep.findings) bad.push_back(f);
                bool cycles_only = true;
                for (const DeltaComponent& comp : delta_components(dependency_digraph(item.d)))
                    if (comp.kind != ComponentKind::cycle) cycles_only = false;
                if (cycles_only && !item.d.has_sink() && item.w.all_unit()) {
                    const TwoSnpReport two = two_snp_check(item.d, opt.exact_limit);
                    for (const std::string& f : two.findings) bad.push_back(f);
                }
            }
        } else {
            const Ordering local =
                local_median_order(item.d, item.w, identity_order(item.d.vertex_count()));
            if (!feedback_property_holds(item.d, item.w, local).holds)
                bad.push_back("local ordering violates the exchange property");
        }
    } catch (const std::exception& ex) {
        bad.push_back(std::string("exception: ") + ex.what());
    }
    item.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return item;
}

}  // namespace detail

// Sweeps seeded random instances through the oracle and every applicable
// checker. Instances are independent work items; workers share nothing and
// the merge is by index, so the verdicts match a sequential run exactly.
inline CampaignResult hunt(const HuntOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    CampaignResult result;
    result.name = "hunt-" + opt.klass;
    result.description = "random sweep through oracle and theorem checkers";

    std::vector<detail::HuntItem> items(opt.trials);
    const int threads = std::max(1, opt.threads);
    if (threads == 1) {
        for (std::uint64_t i = 0; i < opt.trials; ++i) items[i] = detail::hunt_one(opt, i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t]() {
                for (std::uint64_t i = static_cast<std::uint64_t>(t); i < opt.trials;
                     i += static_cast<std::uint64_t>(threads))
                    items[i] = detail::hunt_one(opt, i);
            });
        for (std::thread& th : pool) th.join();
    }

    CampaignOptions ropt;
    ropt.seed = opt.seed;
    ropt.dump_dir = opt.dump_dir;
    ropt.log = opt.log;
    ropt.command = opt.command;
    for (std::uint64_t i = 0; i < opt.trials; ++i) {
        detail::HuntItem& item = items[i];
        ++result.instances;
        if (!item.failures.empty()) {
            ++result.violations;
            for (const std::string& f : item.failures)
                if (f == "no vertex meets the second-neighborhood bound") ++result.oracle_empty;
            Instance inst;
            inst.d = item.d;
            if (!item.w.all_unit()) inst.weights = item.w;
            inst.name = result.name + "-" + std::to_string(i);
            inst.klass = opt.klass;
            inst.seed = opt.seed;
            if (!opt.dump_dir.empty()) {
                std::filesystem::create_directories(opt.dump_dir);
                std::ostringstream name;
                name << result.name << "-i" << i << "-0x" << std::hex << instance_hash(inst)
                     << ".json";
                save_instance_file(inst,
                                   (std::filesystem::path(opt.dump_dir) / name.str()).string());
            }
            if (result.findings.size() < kMaxStoredFindings)
                result.findings.push_back({result.name, i, item.failures, std::move(inst)});
        }
        if (opt.log) {
            Instance inst;
            inst.d = item.d;
            if (!item.w.all_unit()) inst.weights = item.w;
            inst.klass = opt.klass;
            inst.seed = opt.seed;
            detail::write_run_record(*opt.log, ropt, result.name, i, inst, item.failures,
                                     item.wall_ms);
        }
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace snp
