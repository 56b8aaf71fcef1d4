#include "glnq/commands.hpp"

#include <algorithm>

#include "glnq/check.hpp"
#include "glnq/gl2.hpp"
#include "glnq/green.hpp"
#include "glnq/oracle.hpp"
#include "glnq/partitions.hpp"
#include "glnq/valuations.hpp"
#include "glnq/verify.hpp"

namespace glnq::cli {

namespace {

std::string tri_string(gl2::Tri t) {
    switch (t) {
        case gl2::Tri::yes: return "yes";
        case gl2::Tri::no: return "no";
        case gl2::Tri::unknown: return "unknown";
    }
    return "?";
}

std::string opt_bool(const std::optional<bool>& b) {
    if (!b) return "n/a";
    return *b ? "yes" : "no";
}

std::string hist_string(const std::vector<std::uint64_t>& h) {
    std::string s;
    for (std::size_t v = 0; v < h.size(); ++v) {
        if (v) s += '|';
        s += std::to_string(v) + ":" + std::to_string(h[v]);
    }
    return s;
}

void echo_common(Report& rep, const RunConfig& cfg) {
    rep.config.emplace_back("command", cfg.command);
    rep.config.emplace_back("jobs", std::to_string(cfg.jobs));
    rep.config.emplace_back("budget", std::to_string(cfg.budget));
}

gl2::OracleHints hints_for(std::uint64_t q) {
    gl2::OracleHints hints;
    if (q == 3 || q == 5 || q == 7) {
        oracle::Gl2Brute brute(static_cast<unsigned>(q));
        std::optional<bool> det_trivial;
        bool uniform = true;
        for (std::uint64_t s = 1; 2 * s < q + 1; ++s) {
            bool t = brute.cuspidal_det_trivial((q - 1) * s);
            if (!det_trivial) det_trivial = t;
            else if (*det_trivial != t) uniform = false;
        }
        if (det_trivial && uniform) hints.cuspidal_det_trivial = det_trivial;
    }
    return hints;
}

} // namespace

Report cmd_sn_stats(const RunConfig& cfg) {
    Report rep;
    rep.title = "symmetric group statistics";
    echo_common(rep, cfg);
    rep.config.emplace_back("ell", std::to_string(cfg.ell));
    rep.config.emplace_back("r", std::to_string(cfg.r));
    rep.columns = {"n",         "p_n",       "v_histogram", "below_threshold",
                   "proportion", "b_closed",  "b_brute",     "note"};
    unsigned n_hi = cfg.n_max.value_or(cfg.n);
    VThreshold thr{cfg.r, true};
    for (unsigned n = cfg.n; n <= n_hi; ++n) {
        Nat pn = partition_count(n);
        // The enumeration below walks all p(n) partitions; honor the budget
        // up front so a truncated report says so explicitly.
        if (Nat(cfg.budget) < pn) {
            rep.rows.push_back({std::to_string(n), pn.to_string(), "", "", "", "", "",
                                "TRUNCATED: p(n) exceeds budget"});
            rep.verdicts.push_back("truncated at n = " + std::to_string(n));
            break;
        }
        ValuationStat st = valuation_statistic(n, cfg.ell, thr);
        std::string b_closed, b_brute;
        if (n >= 2) {
            b_closed = chiral_count_closed_form(n).to_string();
            if (n <= 40) b_brute = chiral_count_brute(n).to_string();
        }
        rep.rows.push_back({std::to_string(n), pn.to_string(), hist_string(st.histogram),
                            std::to_string(st.count_below),
                            ratio_string(st.count_below, st.total), b_closed, b_brute,
                            ""});
    }
    return rep;
}

Report cmd_gln_stats(const RunConfig& cfg) {
    Report rep;
    rep.title = "Green label statistics";
    echo_common(rep, cfg);
    rep.config.emplace_back("k", std::to_string(cfg.k));
    rep.config.emplace_back("n0", std::to_string(cfg.n0));
    rep.config.emplace_back("r", std::to_string(cfg.r));
    rep.columns = {"q",          "n",          "labels",     "self_dual",
                   "v2_histogram", "div_below", "div_total",  "div_proportion",
                   "char_div_guaranteed", "char_div_total", "note"};
    std::uint64_t q_hi = cfg.q_max.value_or(cfg.q);
    unsigned n_hi = cfg.n_max.value_or(cfg.n);
    std::vector<std::uint64_t> qs;
    for (std::uint64_t q : gl2::prime_powers(q_hi))
        if (q >= cfg.q) qs.push_back(q);
    for (std::uint64_t q : qs) {
        FieldFq field = FieldFq::from_q(q);
        for (unsigned n = cfg.n; n <= n_hi; ++n) {
            Budget budget{cfg.budget};
            try {
                GlnStatsRow row = gln_stats(field, n, cfg.k, cfg.n0,
                                            static_cast<unsigned>(cfg.r), budget);
                rep.rows.push_back({std::to_string(q), std::to_string(n),
                                    std::to_string(row.count_labels),
                                    std::to_string(row.count_self_dual),
                                    hist_string(row.v2_histogram),
                                    std::to_string(row.div_proportion.count),
                                    std::to_string(row.div_proportion.total),
                                    ratio_string(row.div_proportion.count,
                                                 row.div_proportion.total),
                                    std::to_string(row.char_div_census.count),
                                    std::to_string(row.char_div_census.total), ""});
            } catch (const budget_error&) {
                rep.rows.push_back({std::to_string(q), std::to_string(n), "", "", "", "",
                                    "", "", "", "", "BUDGET_EXCEEDED"});
            }
        }
    }
    return rep;
}

Report cmd_gl2_table(const RunConfig& cfg) {
    Report rep;
    rep.title = "GL2 self-dual Stiefel-Whitney table";
    echo_common(rep, cfg);
    rep.columns = {"q",   "subcase", "count",  "m_pi",    "w1",      "w2",
                   "w4",  "covered", "ref_w2", "ref_w4",  "match",   "note"};
    std::uint64_t q_hi = cfg.q_max.value_or(cfg.q);
    std::vector<std::uint64_t> qs;
    for (std::uint64_t q : gl2::prime_powers(q_hi))
        if (q >= cfg.q) qs.push_back(q);
    for (std::uint64_t q : qs) {
        gl2::OracleHints hints = hints_for(q);
        for (const gl2::TableRow& row : gl2::summary_table(q, hints)) {
            std::uint64_t m = gl2::subcase_m_pi(q, row.subcase);
            std::string note;
            if (row.subcase == gl2::Subcase::ps_one_quadratic)
                note = "outside reference table";
            bool match = row.match_w2 && row.match_w4;
            rep.rows.push_back({std::to_string(q), gl2::subcase_name(row.subcase),
                                std::to_string(row.count), std::to_string(m),
                                tri_string(row.w1), row.w2 ? "yes" : "no",
                                opt_bool(row.w4), row.covered ? "yes" : "no",
                                opt_bool(row.ref_w2), opt_bool(row.ref_w4),
                                row.covered && row.count ? (match ? "yes" : "NO") : "n/a",
                                note});
            if (row.covered && row.count && !match)
                rep.verdicts.push_back("MISMATCH q=" + std::to_string(q) + " " +
                                       gl2::subcase_name(row.subcase));
        }
    }
    return rep;
}

Report cmd_gl2_density(const RunConfig& cfg) {
    Report rep;
    rep.title = "GL2 w2-vanishing density";
    echo_common(rep, cfg);
    rep.config.emplace_back("X", std::to_string(cfg.X));
    rep.columns = {"q",        "a_mod_8",   "total",        "w2_zero",
                   "w2_zero_ref", "class_ratio", "class_ratio_ref", "global_ratio",
                   "global_ratio_ref"};
    auto recs = gl2::density_records(cfg.X, cfg.jobs);
    std::uint64_t cls_zero[4] = {0, 0, 0, 0}, cls_ref[4] = {0, 0, 0, 0},
                  cls_tot[4] = {0, 0, 0, 0};
    std::uint64_t g_zero = 0, g_ref = 0, g_tot = 0;
    for (const auto& r : recs) {
        unsigned s = gl2::DensitySummary::slot(r.residue_mod_8);
        cls_zero[s] += r.count_w2_zero;
        cls_ref[s] += r.count_w2_zero_ref;
        cls_tot[s] += r.total_orthogonal;
        g_zero += r.count_w2_zero;
        g_ref += r.count_w2_zero_ref;
        g_tot += r.total_orthogonal;
        rep.rows.push_back({std::to_string(r.q), std::to_string(r.residue_mod_8),
                            std::to_string(r.total_orthogonal),
                            std::to_string(r.count_w2_zero),
                            std::to_string(r.count_w2_zero_ref),
                            ratio_string(cls_zero[s], cls_tot[s]),
                            ratio_string(cls_ref[s], cls_tot[s]),
                            ratio_string(g_zero, g_tot), ratio_string(g_ref, g_tot)});
    }
    static const char* kTargets[4] = {"1", "1/4", "1/4", "0"};
    for (unsigned s = 0; s < 4; ++s) {
        rep.verdicts.push_back(
            "class " + std::to_string(2 * s + 1) + " mod 8: computed " +
            ratio_string(cls_zero[s], cls_tot[s]) + " (" +
            fraction_string(cls_zero[s], cls_tot[s]) + "), reference " +
            ratio_string(cls_ref[s], cls_tot[s]) + ", target " + kTargets[s]);
    }
    rep.verdicts.push_back("global: computed " + ratio_string(g_zero, g_tot) + " (" +
                           fraction_string(g_zero, g_tot) + "), reference " +
                           ratio_string(g_ref, g_tot) + ", target 3/8 = 0.375");
    return rep;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
    verify::Options opt;
    opt.density_X = cfg.X >= 100 ? cfg.X : 10000;
    opt.density_tol = cfg.density_tol;
    opt.budget = cfg.budget;
    int failures = 0;
    for (const auto& res : verify::run_acceptance(opt)) {
        os << (res.pass ? "PASS" : "FAIL") << "  criterion " << res.id << ": "
           << res.name;
        if (!res.detail.empty()) os << " -- " << res.detail;
        os << '\n';
        if (!res.pass) ++failures;
    }
    return failures;
}

} // namespace glnq::cli
