// Command-line front end: parses profile files, dispatches the quota method
// and its rivals, runs the guarantee checkers, and emits traces, reports and
// figure CSVs. Exit codes: 0 success, 1 domain error, 2 usage error.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "epvote/asymptotics.hpp"
#include "epvote/ep_method.hpp"
#include "epvote/errors.hpp"
#include "epvote/profile_io.hpp"
#include "epvote/proportionality.hpp"
#include "epvote/quota_explorer.hpp"
#include "epvote/rational.hpp"
#include "epvote/rival_methods.hpp"
#include "epvote/trace_json.hpp"

namespace {

using namespace epvote;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Shared method/config plumbing

struct MethodOptions {
    std::string method = "ep";
    std::string quota = "droop";
    std::string reduction = "exact";
    std::string threshold = "0";
    bool zero_empty = false;
};

std::string validate_quota_text(const std::string& text) {
    if (text == "droop" || text == "hare" || text == "updated") return {};
    if (text.rfind("fixed=", 0) == 0) {
        try {
            Rational q = parse_rational(text.substr(6));
            if (q <= 0) return "fixed quota must be positive";
            return {};
        } catch (const Error&) {
            return "fixed quota is not a valid rational: " + text.substr(6);
        }
    }
    return "expected droop, hare, updated or fixed=<q>, got: " + text;
}

std::string validate_rational_text(const std::string& text) {
    try {
        (void)parse_rational(text);
        return {};
    } catch (const Error&) {
        return "not a valid rational: " + text;
    }
}

// Registers the flags shared by allocate/check/enumerate. `rivals` controls
// whether --method accepts the rival rules.
void add_method_flags(CLI::App* cmd, MethodOptions& opt, bool rivals) {
    if (rivals) {
        cmd->add_option("--method", opt.method, "ep | seq-phragmen | thiele-add | thiele-elim")
            ->check(CLI::IsMember({"ep", "seq-phragmen", "thiele-add", "thiele-elim"}));
    }
    cmd->add_option("--quota", opt.quota, "droop | hare | updated | fixed=<q>")
        ->check(CLI::Validator(validate_quota_text, "QUOTA"));
    cmd->add_option("--reduction", opt.reduction, "exact | simple | negative")
        ->check(CLI::IsMember({"exact", "simple", "negative"}));
    cmd->add_option("--threshold", opt.threshold,
                    "stop once best support falls below <a> quotas")
        ->check(CLI::Validator(validate_rational_text, "RATIONAL"));
    cmd->add_flag("--zero-empty", opt.zero_empty,
                  "drop emptied ballots from updated-quota totals");
}

// The quota-method flags are meaningless for the rival rules; reject the
// combination as a usage error instead of silently ignoring it.
void reject_config_flags_for_rivals(const CLI::App* cmd, const MethodOptions& opt) {
    if (opt.method == "ep") return;
    for (const char* name : {"--quota", "--reduction", "--threshold", "--zero-empty"})
        if (cmd->count(name) > 0)
            throw UsageError(std::string(name) + " only applies to --method ep");
}

EpConfig build_config(const MethodOptions& opt) {
    EpConfig config;
    if (opt.quota == "droop")
        config.quota_rule = QuotaRule::droop();
    else if (opt.quota == "hare")
        config.quota_rule = QuotaRule::hare();
    else if (opt.quota == "updated")
        config.quota_rule = QuotaRule::updated_per_step();
    else
        config.quota_rule = QuotaRule::fixed(parse_rational(opt.quota.substr(6)));
    if (opt.reduction == "exact")
        config.reduction_rule = ReductionRule::Exact;
    else if (opt.reduction == "simple")
        config.reduction_rule = ReductionRule::SimpleFractions;
    else
        config.reduction_rule = ReductionRule::NegativeAllowed;
    config.threshold_alpha = parse_rational(opt.threshold);
    config.zero_empty_ballots = opt.zero_empty;
    return config;
}

// One method run reduced to what the commands print and check.
struct MethodRun {
    std::vector<int> seats;
    std::vector<int> order;    // elected per step; for elimination: removed
    bool order_is_removal = false;
    std::optional<AllocationTrace> ep_trace;
    std::optional<RivalTrace> rival_trace;
};

MethodRun run_method(const Profile& profile, int n, const std::string& method,
                     const EpConfig& config) {
    MethodRun run;
    if (method == "ep") {
        AllocationTrace t = allocate(profile, n, config);
        run.seats = t.seats;
        run.order = t.elected;
        run.ep_trace = std::move(t);
        return run;
    }
    RivalTrace t = method == "seq-phragmen"
                       ? seq_phragmen(profile, n)
                   : method == "thiele-add"
                       ? thiele_addition(profile, n, harmonic_satisfaction())
                       : thiele_elimination(profile, n, harmonic_satisfaction());
    run.seats = t.seats;
    run.order = t.sequence;
    run.order_is_removal = (method == "thiele-elim");
    run.rival_trace = std::move(t);
    return run;
}

// ---------------------------------------------------------------------------
// Output helpers

std::string join_labels(const Profile& profile, const std::vector<int>& ids) {
    std::string out;
    for (int id : ids) {
        if (!out.empty()) out += " ";
        out += profile.label(id);
    }
    return out;
}

std::string elected_set_line(const Profile& profile, const std::vector<int>& seats) {
    std::vector<int> ids;
    for (int i = 0; i < profile.candidate_count(); ++i)
        if (seats[i] > 0) ids.push_back(i);
    return join_labels(profile, ids);
}

std::string seat_map_line(const Profile& profile, const std::vector<int>& seats) {
    std::string out;
    for (int i = 0; i < profile.candidate_count(); ++i) {
        if (seats[i] <= 0) continue;
        if (!out.empty()) out += " ";
        out += profile.label(i) + "=" + std::to_string(seats[i]);
    }
    return out.empty() ? "-" : out;
}

std::string status_text(const AllocationTrace& trace) {
    switch (trace.status) {
        case AllocationStatus::Completed:
            return "completed";
        case AllocationStatus::StoppedByThreshold:
            return "stopped-by-threshold at step " + std::to_string(trace.stopped_at);
        case AllocationStatus::Underfilled:
            return "underfilled at step " + std::to_string(trace.stopped_at);
    }
    return "unknown";
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    out << text;
    if (!out.good()) throw Error("failed writing output file: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string significant(const Rational& x) { return format_significant(x, 12); }

std::string significant(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void print_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.resize(c + 1, 0);
            width[c] = std::max(width[c], row[c].size());
        }
    for (const auto& row : rows) {
        std::string line;
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += row[c];
            if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
        }
        os << line << "\n";
    }
}

// ---------------------------------------------------------------------------
// allocate

int cmd_allocate(const std::string& file, int n, const MethodOptions& opt,
                 const std::string& trace_out) {
    Profile profile = parse_profile_file(file);
    EpConfig config = build_config(opt);
    MethodRun run = run_method(profile, n, opt.method, config);

    if (run.order_is_removal) {
        std::cout << "elected: " << elected_set_line(profile, run.seats) << "\n";
        std::cout << "removed: " << join_labels(profile, run.order) << "\n";
    } else {
        std::cout << "elected: " << join_labels(profile, run.order) << "\n";
    }
    std::cout << "seats: " << seat_map_line(profile, run.seats) << "\n";
    if (run.ep_trace) {
        std::cout << "quota: " << format_human(run.ep_trace->initial_quota) << "\n";
        if (run.ep_trace->status != AllocationStatus::Completed)
            std::cout << "status: " << status_text(*run.ep_trace) << "\n";
    }
    if (!trace_out.empty()) {
        Json j = run.ep_trace ? trace_to_json(*run.ep_trace)
                              : rival_trace_to_json(*run.rival_trace);
        write_text_file(trace_out, j.dump(2) + "\n");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// compare

struct GuaranteeSummary {
    bool quota_ok = true;
    bool joint_ok = true;
    std::string quota_witness;
    std::string joint_witness;
};

GuaranteeSummary summarize_guarantees(const Profile& profile,
                                      const std::vector<TheoremReport>& violations) {
    GuaranteeSummary s;
    for (const auto& r : violations) {
        std::string witness = "{" + join_labels(profile, r.group) + "}";
        if (r.kind == GuaranteeKind::QuotaThreshold) {
            if (s.quota_ok) s.quota_witness = witness;
            s.quota_ok = false;
        } else if (r.kind == GuaranteeKind::JointThreshold) {
            if (s.joint_ok) s.joint_witness = witness;
            s.joint_ok = false;
        }
    }
    return s;
}

std::vector<TheoremReport> method_violations(const Profile& profile, int n,
                                             const MethodRun& run, int subsets_max) {
    if (run.ep_trace) return check_all_subsets(profile, *run.ep_trace, subsets_max);
    return check_all_subsets(profile, n, run.seats, subsets_max);
}

// Uninominal discrimination profile: four party lists with 7/5/4/2 votes and
// six seats. The largest-remainders set is exactly {(2,2,1,1)} while highest
// averages gives (3,2,1,0), so the seat vector names the method's family.
std::string uninominal_type(const std::string& method) {
    std::vector<Candidate> cands = {{0, "A", std::nullopt},
                                    {1, "B", std::nullopt},
                                    {2, "C", std::nullopt},
                                    {3, "D", std::nullopt}};
    Profile uni = aggregate(std::move(cands), {{{0}, Rational(7)},
                                               {{1}, Rational(5)},
                                               {{2}, Rational(4)},
                                               {{3}, Rational(2)}});
    const int n = 6;
    MethodRun run = run_method(uni, n, method, EpConfig{});
    if (run.seats == dhondt({7, 5, 4, 2}, n)) return "D'H";
    std::vector<Rational> votes = {7, 5, 4, 2};
    Rational total(18);
    for (const auto& alloc : largest_remainders(votes, n, total / (n + 1)))
        if (run.seats == alloc) return "Dr";
    return "?";
}

const std::vector<std::string>& all_methods() {
    static const std::vector<std::string> methods = {"ep", "seq-phragmen", "thiele-add",
                                                     "thiele-elim"};
    return methods;
}

int cmd_compare(const std::string& file, int n, int subsets_max) {
    Profile profile = parse_profile_file(file);
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"method", "elected", "type", "quota-threshold", "joint-threshold"});
    for (const auto& method : all_methods()) {
        MethodRun run = run_method(profile, n, method, EpConfig{});
        GuaranteeSummary s = summarize_guarantees(
            profile, method_violations(profile, n, run, subsets_max));
        rows.push_back({method, elected_set_line(profile, run.seats),
                        uninominal_type(method),
                        s.quota_ok ? "ok" : "FAIL " + s.quota_witness,
                        s.joint_ok ? "ok" : "FAIL " + s.joint_witness});
    }
    print_table(std::cout, rows);
    return 0;
}

// The fixture battery behind the property grid: each profile with its seat
// count. Guarantee columns aggregate strict violations over every entry; the
// monotonicity column applies the pinned approval-gain probe (candidate c of
// the five-candidate fixture gains 32 weight units split off the {e} ballot).
const std::vector<std::pair<std::string, int>>& battery_entries() {
    static const std::vector<std::pair<std::string, int>> entries = {
        {"nine_candidates.profile", 3},
        {"overlapping_trio.profile", 3},
        {"disjoint_trio.profile", 3},
        {"joint_block_pair.profile", 3},
        {"two_disjoint_parties.profile", 4},
        {"three_party_lists.profile", 5},
        {"capacity_bounded_joint.profile", 7},
        {"elimination_joint_gap.profile", 10},
        {"elimination_mono_drop.profile", 2},
    };
    return entries;
}

int cmd_compare_battery(const std::string& dir) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"method", "type", "quota-threshold", "joint-threshold", "mono"});

    Profile mono_profile = parse_profile_file(dir + "/elimination_mono_drop.profile");
    int probed = *mono_profile.find_candidate("c");
    int e_id = *mono_profile.find_candidate("e");
    int e_ballot = -1;
    for (size_t i = 0; i < mono_profile.ballots().size(); ++i)
        if (mono_profile.ballots()[i].approvals == CandidateSet{e_id}) e_ballot = (int)i;
    if (e_ballot < 0) throw Error("mono probe ballot missing from fixture");
    Profile mono_boosted =
        apply_approval_delta(mono_profile, probed, {{e_ballot, Rational(32)}});

    for (const auto& method : all_methods()) {
        bool quota_ok = true, joint_ok = true;
        for (const auto& [name, seats] : battery_entries()) {
            Profile profile = parse_profile_file(dir + "/" + name);
            MethodRun run = run_method(profile, seats, method, EpConfig{});
            GuaranteeSummary s = summarize_guarantees(
                profile,
                method_violations(profile, seats, run, profile.candidate_count()));
            quota_ok = quota_ok && s.quota_ok;
            joint_ok = joint_ok && s.joint_ok;
        }
        MethodRun before = run_method(mono_profile, 2, method, EpConfig{});
        MethodRun after = run_method(mono_boosted, 2, method, EpConfig{});
        bool dropped = before.seats[probed] > 0 && after.seats[probed] == 0;
        rows.push_back({method, uninominal_type(method), quota_ok ? "pass" : "fail",
                        joint_ok ? "pass" : "fail", dropped ? "no" : "ind"});
    }
    print_table(std::cout, rows);
    return 0;
}

// ---------------------------------------------------------------------------
// check

Json fuzz_monotonicity(const Profile& profile, int n, const std::string& method,
                       const EpConfig& config, const MethodRun& base, long trials,
                       unsigned long seed) {
    std::mt19937_64 rng(seed);
    Json hits = Json::array();
    std::vector<int> elected;
    for (int i = 0; i < profile.candidate_count(); ++i)
        if (base.seats[i] > 0) elected.push_back(i);
    if (elected.empty()) trials = 0;
    for (long trial = 0; trial < trials; ++trial) {
        int candidate = elected[rng() % elected.size()];
        std::vector<ApprovalDelta> deltas;
        if (rng() % 2 == 0) {
            deltas.push_back({-1, Rational(1 + (long)(rng() % 8))});
        } else {
            // Move a fraction of one ballot that does not yet approve the
            // candidate onto the same set plus the candidate.
            std::vector<int> eligible;
            for (size_t k = 0; k < profile.ballots().size(); ++k) {
                const auto& a = profile.ballots()[k].approvals;
                if (!std::binary_search(a.begin(), a.end(), candidate))
                    eligible.push_back((int)k);
            }
            if (eligible.empty()) continue;
            int ballot = eligible[rng() % eligible.size()];
            Rational share = profile.ballots()[ballot].weight *
                             Rational(1 + (long)(rng() % 3)) / 4;
            if (share == 0) continue;
            deltas.push_back({ballot, share});
        }
        bool violated = false;
        Json record;
        if (method == "ep") {
            MonotonicityReport r =
                probe_candidate_monotonicity(profile, n, config, candidate, deltas);
            violated = !r.monotone;
            if (violated) record["report"] = monotonicity_to_json(r);
        } else {
            Profile boosted = apply_approval_delta(profile, candidate, deltas);
            MethodRun after = run_method(boosted, n, method, config);
            violated = after.seats[candidate] == 0;
            if (violated) {
                record["before"] = seat_map_line(profile, base.seats);
                record["after"] = seat_map_line(boosted, after.seats);
            }
        }
        if (violated) {
            record["trial"] = trial;
            record["candidate"] = profile.label(candidate);
            Json jd = Json::array();
            for (const auto& d : deltas)
                jd.push_back({{"ballot", d.ballot_index},
                              {"weight", rational_to_json(d.weight)}});
            record["delta"] = jd;
            hits.push_back(record);
        }
    }
    return Json{{"trials", trials}, {"seed", seed}, {"hits", hits}};
}

bool profile_is_uninominal(const Profile& profile) {
    for (const auto& b : profile.ballots())
        if (b.approvals.size() != 1) return false;
    return true;
}

int cmd_check(const std::string& file, int n, const MethodOptions& opt, int subsets_max,
              long fuzz, unsigned long seed, const std::string& trace_in) {
    Profile profile = parse_profile_file(file);
    EpConfig config = build_config(opt);
    std::string method = opt.method;

    MethodRun run;
    if (!trace_in.empty()) {
        Json j = Json::parse(read_text_file(trace_in));
        if (j.contains("config")) {
            AllocationTrace t = trace_from_json(j);
            if (n != 0 && n != t.n)
                throw Error("--seats disagrees with the trace's seat count");
            n = t.n;
            config = t.config;
            method = "ep";
            run.seats = t.seats;
            run.order = t.elected;
            run.ep_trace = std::move(t);
        } else {
            RivalTrace t = rival_trace_from_json(j);
            if (t.method == "seq-phragmen")
                method = "seq-phragmen";
            else if (t.method == "thiele-addition" || t.method == "thiele-reweighting")
                method = "thiele-add";
            else
                method = "thiele-elim";
            if (n == 0) throw UsageError("--seats is required with a rival-method trace");
            run.seats = t.seats;
            run.order = t.sequence;
            run.order_is_removal = (method == "thiele-elim");
            run.rival_trace = std::move(t);
        }
    } else {
        if (n == 0) throw UsageError("--seats is required");
        run = run_method(profile, n, method, config);
    }

    Json report;
    report["file"] = file;
    report["seats"] = n;
    report["method"] = method;
    if (method == "ep") report["config"] = config_to_json(config);
    if (run.ep_trace) report["status"] = status_text(*run.ep_trace);
    report["elected"] = elected_set_line(profile, run.seats);
    report["seat_map"] = seat_map_line(profile, run.seats);

    int cap = std::min(subsets_max, profile.candidate_count());
    report["subsets_max"] = cap;
    Json violations = Json::array();
    for (const auto& r : method_violations(profile, n, run, cap)) {
        Json jr = report_to_json(r);
        jr["group_labels"] = join_labels(profile, r.group);
        violations.push_back(jr);
    }
    report["violations"] = violations;

    if (profile_is_uninominal(profile) && method == "ep") {
        try {
            report["uninominal"] = uninominal_to_json(check_uninominal_equivalence(profile, n));
        } catch (const Error&) {
            report["uninominal"] = nullptr;
        }
    } else {
        report["uninominal"] = nullptr;
    }

    if (fuzz > 0)
        report["fuzz"] = fuzz_monotonicity(profile, n, method, config, run, fuzz, seed);

    std::cout << report.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// sweep

int cmd_sweep(const std::string& file, int n, const std::string& from,
              const std::string& to, int samples, const std::string& csv_out) {
    Profile profile = parse_profile_file(file);
    Rational lo = parse_rational(from);
    Rational hi = parse_rational(to);
    std::vector<SweepSample> rows = sweep(profile, n, lo, hi, samples);
    std::ostringstream csv;
    csv << "q,w_star_penultimate,w_star_final,divisor_valid,allocation_label\n";
    for (const auto& s : rows) {
        csv << significant(s.q) << "," << significant(s.w_star_penultimate) << ","
            << significant(s.w_star_final) << "," << (s.divisor_valid ? 1 : 0) << ","
            << allocation_label(profile, s.seats) << "\n";
    }
    if (csv_out.empty())
        std::cout << csv.str();
    else
        write_text_file(csv_out, csv.str());
    return 0;
}

// ---------------------------------------------------------------------------
// two-party

int cmd_two_party_point(const std::string& va, const std::string& vb,
                        const std::string& vab, int n) {
    TwoPartyResult r =
        simulate_two_party(parse_rational(va), parse_rational(vb), parse_rational(vab), n);
    std::cout << "seats: A=" << r.seats_a << " B=" << r.seats_b << "\n";
    std::string order;
    for (int side : r.recipients) {
        if (!order.empty()) order += " ";
        order += side == 0 ? "A" : "B";
    }
    std::cout << "order: " << order << "\n";
    std::cout << "opening-run: " << r.predicted_k << "\n";
    std::cout << "limit: " << format_human(r.exact_limit) << "\n";
    std::cout << "fraction: " << format_human(r.simulated_fraction) << "\n";
    return 0;
}

int cmd_two_party_curve(const std::string& zeta_text, int samples, bool staircase,
                        int probe_n, const std::string& exact_out) {
    Rational zeta = parse_rational(zeta_text);
    auto curve = limit_curve(zeta, samples);
    if (staircase) {
        auto steps = staircase_curve(zeta, samples, probe_n);
        std::cout << "alpha,limit,staircase\n";
        for (size_t i = 0; i < curve.size(); ++i)
            std::cout << significant(curve[i].first) << ","
                      << significant(curve[i].second) << ","
                      << significant(steps[i].second) << "\n";
    } else {
        std::cout << "alpha,value\n";
        for (const auto& [alpha, value] : curve)
            std::cout << significant(alpha) << "," << significant(value) << "\n";
    }
    if (!exact_out.empty()) {
        std::ostringstream exact;
        exact << "alpha,value\n";
        for (const auto& [alpha, value] : curve)
            exact << format_exact(alpha) << "," << format_exact(value) << "\n";
        write_text_file(exact_out, exact.str());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// enumerate

int cmd_enumerate(const std::string& file, int n, const MethodOptions& opt, long cap) {
    Profile profile = parse_profile_file(file);
    EpConfig config = build_config(opt);
    std::vector<AllocationOutcome> outcomes = enumerate_allocations(profile, n, config, cap);
    std::cout << "outcomes: " << outcomes.size() << "\n";
    for (size_t i = 0; i < outcomes.size(); ++i) {
        std::vector<int> elected = outcomes[i].elected;
        std::cout << (i + 1) << ": elected " << join_labels(profile, elected)
                  << " | seats " << seat_map_line(profile, outcomes[i].seats) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sequential quota-method elections over approval ballots"};
    app.require_subcommand(1);

    // allocate
    std::string al_file, al_trace;
    int al_seats = 0;
    MethodOptions al_opt;
    CLI::App* allocate_cmd =
        app.add_subcommand("allocate", "Run one method and print the elected candidates");
    allocate_cmd->add_option("file", al_file, "profile file")->required();
    allocate_cmd->add_option("--seats", al_seats, "number of seats")->required();
    add_method_flags(allocate_cmd, al_opt, true);
    allocate_cmd->add_option("--trace", al_trace, "write the full trace as JSON");

    // compare
    std::string cp_file, cp_battery;
    int cp_seats = 0, cp_subsets = 12;
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "Run all four methods and print the property grid");
    compare_cmd->add_option("file", cp_file, "profile file");
    compare_cmd->add_option("--seats", cp_seats, "number of seats");
    compare_cmd->add_option("--subsets-max", cp_subsets,
                            "candidate cap for the exhaustive subset audit");
    compare_cmd->add_option("--battery", cp_battery,
                            "fixture directory: print the aggregated property grid");

    // check
    std::string ck_file, ck_trace_in;
    int ck_seats = 0, ck_subsets = 12;
    long ck_fuzz = 0;
    unsigned long ck_seed = 0;
    MethodOptions ck_opt;
    CLI::App* check_cmd =
        app.add_subcommand("check", "Guarantee suite + monotonicity fuzzing, JSON report");
    check_cmd->add_option("file", ck_file, "profile file")->required();
    check_cmd->add_option("--seats", ck_seats, "number of seats");
    add_method_flags(check_cmd, ck_opt, true);
    check_cmd->add_option("--subsets-max", ck_subsets,
                          "candidate cap for the exhaustive subset audit");
    check_cmd->add_option("--fuzz", ck_fuzz, "monotonicity fuzz trials");
    check_cmd->add_option("--seed", ck_seed, "fuzz RNG seed");
    check_cmd->add_option("--trace-in", ck_trace_in, "re-check a written trace JSON");

    // sweep
    std::string sw_file, sw_from, sw_to, sw_csv;
    int sw_seats = 0, sw_samples = 0;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Evaluate fixed quotas across a range, CSV output");
    sweep_cmd->add_option("file", sw_file, "profile file")->required();
    sweep_cmd->add_option("--seats", sw_seats, "number of seats")->required();
    sweep_cmd->add_option("--from", sw_from, "lower quota bound")
        ->required()
        ->check(CLI::Validator(validate_rational_text, "RATIONAL"));
    sweep_cmd->add_option("--to", sw_to, "upper quota bound")
        ->required()
        ->check(CLI::Validator(validate_rational_text, "RATIONAL"));
    sweep_cmd->add_option("--samples", sw_samples, "number of sample points")->required();
    sweep_cmd->add_option("--csv", sw_csv, "write CSV here instead of stdout");

    // two-party
    std::string tp_va, tp_vb, tp_vab, tp_zeta, tp_exact;
    int tp_seats = 0, tp_samples = 0, tp_probe = 200;
    bool tp_curve = false, tp_staircase = false;
    CLI::App* two_cmd =
        app.add_subcommand("two-party", "Two-party seat shares: single runs and curves");
    auto* opt_va = two_cmd->add_option("--va", tp_va, "votes approving only A")
                       ->check(CLI::Validator(validate_rational_text, "RATIONAL"));
    auto* opt_vb = two_cmd->add_option("--vb", tp_vb, "votes approving only B")
                       ->check(CLI::Validator(validate_rational_text, "RATIONAL"));
    auto* opt_vab = two_cmd->add_option("--vab", tp_vab, "votes approving both")
                        ->check(CLI::Validator(validate_rational_text, "RATIONAL"));
    auto* opt_seats = two_cmd->add_option("--seats", tp_seats, "number of seats");
    auto* opt_curve = two_cmd->add_flag("--curve", tp_curve, "emit the limit curve CSV");
    auto* opt_zeta = two_cmd->add_option("--zeta", tp_zeta, "shared-voter share")
                         ->check(CLI::Validator(validate_rational_text, "RATIONAL"));
    two_cmd->add_option("--samples", tp_samples, "curve sample count");
    two_cmd->add_flag("--staircase", tp_staircase, "add the load-rule staircase column");
    two_cmd->add_option("--probe-n", tp_probe, "staircase probe seat count");
    two_cmd->add_option("--exact", tp_exact, "also write exact rationals to this file");
    opt_curve->excludes(opt_va)->excludes(opt_vb)->excludes(opt_vab)->excludes(opt_seats);
    opt_zeta->needs(opt_curve);

    // enumerate
    std::string en_file;
    int en_seats = 0;
    long en_cap = 64;
    MethodOptions en_opt;
    CLI::App* enum_cmd =
        app.add_subcommand("enumerate", "List every tie-branch allocation");
    enum_cmd->add_option("file", en_file, "profile file")->required();
    enum_cmd->add_option("--seats", en_seats, "number of seats")->required();
    add_method_flags(enum_cmd, en_opt, false);
    enum_cmd->add_option("--cap", en_cap, "abort after this many branches");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(allocate_cmd)) {
            reject_config_flags_for_rivals(allocate_cmd, al_opt);
            return cmd_allocate(al_file, al_seats, al_opt, al_trace);
        }
        if (app.got_subcommand(compare_cmd)) {
            if (!cp_battery.empty()) return cmd_compare_battery(cp_battery);
            if (cp_file.empty() || compare_cmd->count("--seats") == 0)
                throw UsageError("compare needs a profile file and --seats (or --battery)");
            return cmd_compare(cp_file, cp_seats, cp_subsets);
        }
        if (app.got_subcommand(check_cmd)) {
            reject_config_flags_for_rivals(check_cmd, ck_opt);
            return cmd_check(ck_file, ck_seats, ck_opt, ck_subsets, ck_fuzz, ck_seed,
                             ck_trace_in);
        }
        if (app.got_subcommand(sweep_cmd))
            return cmd_sweep(sw_file, sw_seats, sw_from, sw_to, sw_samples, sw_csv);
        if (app.got_subcommand(two_cmd)) {
            if (tp_curve) {
                if (tp_zeta.empty() || tp_samples <= 0)
                    throw UsageError("--curve needs --zeta and a positive --samples");
                return cmd_two_party_curve(tp_zeta, tp_samples, tp_staircase, tp_probe,
                                           tp_exact);
            }
            if (tp_va.empty() || tp_vb.empty() || tp_vab.empty() ||
                two_cmd->count("--seats") == 0)
                throw UsageError("two-party needs --va, --vb, --vab and --seats "
                                 "(or --curve --zeta --samples)");
            return cmd_two_party_point(tp_va, tp_vb, tp_vab, tp_seats);
        }
        if (app.got_subcommand(enum_cmd))
            return cmd_enumerate(en_file, en_seats, en_opt, en_cap);
        throw UsageError("no subcommand selected");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
