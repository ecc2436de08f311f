// imago: word/polynomial image-ratio laboratory.
// Subcommands: eval, plan, verify, classes, scan.
// Exit codes: 0 success, 2 usage/parse, 3 resource cap, 4 verification mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <thread>

#include "imago/classes.hpp"
#include "imago/closed_forms.hpp"
#include "imago/errors.hpp"
#include "imago/image.hpp"
#include "imago/planner.hpp"
#include "imago/ring.hpp"

using namespace imago;
using nlohmann::json;

namespace {

json ratio_json(const BigRatio& r) {
    return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

json report_json(const ImageReport& rep) {
    json j;
    j["group"] = rep.spec;
    j["word"] = rep.word;
    if (!rep.ok) {
        j["error"] = rep.error;
        return j;
    }
    j["order"] = rep.order.get_str();
    j["image_size"] = rep.image_size.get_str();
    j["ratio"] = ratio_json(rep.ratio);
    j["ratio_float"] = ratio_to_double(rep.ratio);
    j["strategy"] = rep.strategy == Strategy::pruned ? "pruned" : "naive";
    return j;
}

struct CommonOpts {
    std::size_t enum_cap = 1'000'000;
    std::size_t work_cap = 100'000'000;
    std::size_t table_cap = 4096;
    unsigned workers = 0;  // 0 = available parallelism
    std::string format = "json";
};

ImageOptions image_opts(const CommonOpts& c, Strategy strat = Strategy::automatic) {
    ImageOptions o;
    o.strategy = strat;
    o.workers = c.workers ? c.workers : std::max(1u, std::thread::hardware_concurrency());
    o.work_cap = c.work_cap;
    o.caps.enumeration_cap = c.enum_cap;
    o.caps.table_cap = c.table_cap;
    return o;
}

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--enum-cap", c.enum_cap, "enumeration cap (elements)");
    cmd->add_option("--work-cap", c.work_cap, "evaluation cap (tuples)");
    cmd->add_option("--table-cap", c.table_cap, "multiplication-table cap");
    cmd->add_option("--workers", c.workers, "worker threads (default: hardware)");
    cmd->add_option("--format", c.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

int run_eval(const std::string& word, const std::string& poly, const std::string& group,
             const std::string& ring, const CommonOpts& c, Strategy strat) {
    if (!word.empty()) {
        auto rep = image_ratio(Word::parse(word), GroupSpec::parse(group), image_opts(c, strat));
        std::cout << report_json(rep).dump(2) << "\n";
        return 0;
    }
    auto rep = poly_image_ratio(NCPoly::parse(poly), RingSpec::parse(ring), image_opts(c));
    std::cout << report_json(rep).dump(2) << "\n";
    return 0;
}

int run_plan(const std::string& target, const std::string& epsilon, const std::string& m_str,
             bool check, const CommonOpts& c) {
    BigRatio ct = parse_ratio(target);
    BigRatio eps = parse_ratio(epsilon);
    BigInt M(m_str);
    RatioPlan plan = approximate(ct, eps);
    GroupSpec g = realize(plan, M);

    json j;
    j["target"] = ratio_json(ct);
    j["epsilon"] = ratio_json(eps);
    j["M"] = M.get_str();
    j["m"] = plan.m;
    j["field_sizes"] = plan.field_sizes;
    j["achieved"] = ratio_json(plan.achieved);
    j["achieved_float"] = ratio_to_double(plan.achieved);
    j["error"] = ratio_json(plan.error);
    j["exact"] = plan.exact;
    j["group_spec"] = g.to_string();
    j["group_order"] = g.order().get_str();

    if (check) {
        if (g.order() > static_cast<unsigned long>(c.enum_cap)) {
            j["check"] = "skipped: group order above enumeration cap";
        } else {
            auto rep = image_ratio(Word::power_word(M), g, image_opts(c));
            bool okcheck = rep.ratio == plan.achieved;
            j["check"] = okcheck ? "pass" : "MISMATCH";
            if (!okcheck) {
                std::cout << j.dump(2) << "\n";
                return 4;
            }
        }
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_classes(unsigned long q, bool ring_variant, const CommonOpts& c) {
    auto reps = gl2_class_reps(q, ring_variant);
    auto family_name = [](ClassFamily f) {
        switch (f) {
            case ClassFamily::central: return "central";
            case ClassFamily::split: return "split";
            case ClassFamily::jordan: return "jordan";
            case ClassFamily::irreducible: return "irreducible";
            default: return "none";
        }
    };
    if (c.format == "csv") {
        std::cout << "family,size,a,b,c,d\n";
        for (const auto& cls : reps) {
            auto m = cls.rep;
            std::cout << family_name(cls.family) << "," << cls.size.get_str() << ","
                      << m.a() << "," << m.b() << "," << m.c() << "," << m.d() << "\n";
        }
        return 0;
    }
    json rows = json::array();
    BigInt total = 0;
    for (const auto& cls : reps) {
        total += cls.size;
        rows.push_back({{"family", family_name(cls.family)},
                        {"size", cls.size.get_str()},
                        {"rep", {cls.rep.a(), cls.rep.b(), cls.rep.c(), cls.rep.d()}}});
    }
    json j;
    j["q"] = q;
    j["variant"] = ring_variant ? "ring" : "group";
    j["class_count"] = reps.size();
    j["size_total"] = total.get_str();
    j["classes"] = rows;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_scan(const std::vector<std::string>& words, const std::vector<std::string>& groups,
             const CommonOpts& c) {
    std::vector<Word> ws;
    std::vector<GroupSpec> gs;
    for (const auto& t : words) ws.push_back(Word::parse(t));
    for (const auto& t : groups) gs.push_back(GroupSpec::parse(t));
    auto rows = scan(ws, gs, image_opts(c));
    if (c.format == "csv") {
        std::cout << "word,group,order,image_size,ratio,ratio_float,error\n";
        for (const auto& r : rows) {
            std::cout << "\"" << r.word << "\",\"" << r.spec << "\",";
            if (r.ok)
                std::cout << r.order.get_str() << "," << r.image_size.get_str() << ","
                          << ratio_to_string(r.ratio) << "," << ratio_to_double(r.ratio) << ",";
            else
                std::cout << ",,,,\"" << r.error << "\"";
            std::cout << "\n";
        }
        return 0;
    }
    json j = json::array();
    for (const auto& r : rows) j.push_back(report_json(r));
    std::cout << j.dump(2) << "\n";
    return 0;
}

struct VerifyRow {
    std::string name;
    std::string status;  // PASS / FAIL / DISCREPANCY
    std::string detail;
};

// every closed-form-vs-oracle pair in scope
int run_verify(const std::string& suite, const CommonOpts& c) {
    std::vector<VerifyRow> rows;
    auto opts = image_opts(c);

    if (suite == "group" || suite == "all") {
        for (unsigned long n : {2ul, 5ul, 9ul}) {
            auto oracle = image_ratio(Word::engel(1), GroupSpec::cyclic(n), opts);
            bool ok = oracle.ratio == commutator_cyclic_ratio(n);
            rows.push_back({"commutator_cyclic n=" + std::to_string(n),
                            ok ? "PASS" : "FAIL", ratio_to_string(oracle.ratio)});
        }
        const std::pair<unsigned long, unsigned long> pm[] = {
            {2, 2}, {2, 4}, {4, 2}, {4, 4}, {3, 3}};
        for (auto [q, M] : pm) {
            auto oracle = image_ratio(Word::power_word(M), GroupSpec::gl2(q), opts);
            bool ok = oracle.ratio == gl2_power_ratio(q, M) &&
                      oracle.image_size == gl2_power_image_size(q, M);
            rows.push_back({"gl2_power q=" + std::to_string(q) + " M=" + std::to_string(M),
                            ok ? "PASS" : "FAIL", ratio_to_string(oracle.ratio)});
        }
        for (unsigned long q : {2ul, 3ul, 4ul, 5ul}) {
            auto reps = gl2_class_reps(q);
            Group g(GroupSpec::gl2(q), opts.caps);
            auto brute = conjugacy_classes_bruteforce(g);
            BigInt total = 0;
            for (const auto& cls : reps) total += cls.size;
            bool ok = reps.size() == q * q - 1 && brute.size() == reps.size() &&
                      total == g.order();
            rows.push_back({"gl2_classes q=" + std::to_string(q), ok ? "PASS" : "FAIL",
                            std::to_string(reps.size()) + " classes"});
        }
        for (unsigned long q : {2ul, 3ul, 4ul, 5ul}) {
            auto oracle = image_ratio(Word::engel(1), GroupSpec::sl2(q), opts);
            auto conj = engel_sl2_conjectural_ratio(1, q);
            bool agree = oracle.ratio == conj.value;
            // conjectural value carries no threshold, so disagreement is
            // informational rather than a failure
            rows.push_back({"engel_sl2 q=" + std::to_string(q),
                            agree ? "PASS" : "DISCREPANCY",
                            "oracle " + ratio_to_string(oracle.ratio) + " vs conjectural " +
                                ratio_to_string(conj.value)});
        }
    }
    if (suite == "ring" || suite == "all") {
        for (unsigned long n = 1; n <= 3; ++n) {
            RingSpec s = RingSpec::zmod(4);
            for (unsigned long i = 1; i < n; ++i) s = s.times(RingSpec::zmod(4));
            auto oracle = poly_image_ratio(NCPoly::parse("x1^2"), s, opts);
            bool ok = oracle.ratio == pow2_inv(n);
            rows.push_back({"square_z4 n=" + std::to_string(n), ok ? "PASS" : "FAIL",
                            ratio_to_string(oracle.ratio)});
        }
        for (unsigned r = 1; r <= 2; ++r) {
            auto forms = gl2ring_square_closed_forms(r);
            auto oracle =
                poly_image_ratio(NCPoly::parse("x1^2"), RingSpec::mat2ring(1ul << r), opts);
            std::string detail = "oracle " + ratio_to_string(oracle.ratio) + ", stated " +
                                 ratio_to_string(forms.stated_value) + ", class-count " +
                                 ratio_to_string(forms.classcount_value);
            if (oracle.ratio != forms.classcount_value)
                rows.push_back({"square_gl2ring r=" + std::to_string(r), "FAIL", detail});
            else if (oracle.ratio != forms.stated_value)
                // documented slip in the stated closed form
                rows.push_back({"square_gl2ring r=" + std::to_string(r), "DISCREPANCY", detail});
            else
                rows.push_back({"square_gl2ring r=" + std::to_string(r), "PASS", detail});
        }
    }
    if (rows.empty()) {
        std::cerr << "unknown suite '" << suite << "' (expected group, ring or all)\n";
        return 2;
    }

    bool any_fail = false;
    for (const auto& r : rows) {
        if (r.status == "FAIL") any_fail = true;
        if (r.status == "DISCREPANCY")
            std::cerr << "warning: " << r.name << " is a documented discrepancy\n";
    }
    if (c.format == "csv") {
        std::cout << "name,status,detail\n";
        for (const auto& r : rows)
            std::cout << r.name << "," << r.status << ",\"" << r.detail << "\"\n";
    } else {
        json j = json::array();
        for (const auto& r : rows)
            j.push_back({{"name", r.name}, {"status", r.status}, {"detail", r.detail}});
        std::cout << j.dump(2) << "\n";
    }
    return any_fail ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"imago: exact image ratios of word and polynomial maps on finite groups and rings"};
    app.require_subcommand(1);

    CommonOpts c_eval, c_plan, c_classes, c_scan, c_verify;

    std::string word, poly, group, ring, strategy = "auto";
    auto* eval = app.add_subcommand("eval", "image ratio of one word or polynomial map");
    eval->add_option("--word", word, "word, e.g. \"[x,y]\" or \"x1^2\"");
    eval->add_option("--poly", poly, "polynomial, e.g. \"x1^2\"");
    eval->add_option("--group", group, "group spec, e.g. \"C2 x GL2(4)\"");
    eval->add_option("--ring", ring, "ring spec, e.g. \"M2(2)\" or \"Z4^2\"");
    eval->add_option("--strategy", strategy, "naive, pruned or auto")
        ->check(CLI::IsMember({"naive", "pruned", "auto"}));
    add_common(eval, c_eval);

    std::string target, epsilon = "1e-6", m_str = "2";
    bool check = false;
    auto* plan = app.add_subcommand("plan", "realize a target ratio by a concrete group");
    plan->add_option("--target", target, "target in (0,1): decimal or p/q")->required();
    plan->add_option("--epsilon", epsilon, "error tolerance");
    plan->add_option("--M", m_str, "power-map exponent, must be 2^a");
    plan->add_flag("--check", check, "brute-force-verify the realized group");
    add_common(plan, c_plan);

    unsigned long q = 2;
    bool ring_variant = false;
    auto* classes = app.add_subcommand("classes", "GL2(q) conjugacy class table");
    classes->add_option("--q", q, "prime power")->required();
    classes->add_flag("--ring", ring_variant, "eigenvalues over all of F_q (matrix-ring table)");
    add_common(classes, c_classes);

    std::vector<std::string> scan_words, scan_groups;
    auto* scan_cmd = app.add_subcommand("scan", "image ratios over words x groups");
    scan_cmd->add_option("--word", scan_words, "word (repeatable)")->required()->allow_extra_args(false);
    scan_cmd->add_option("--group", scan_groups, "group spec (repeatable)")->required()->allow_extra_args(false);
    add_common(scan_cmd, c_scan);
    c_scan.format = "csv";

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "closed forms vs brute-force oracles");
    verify->add_option("--suite", suite, "group, ring or all");
    add_common(verify, c_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) {
            bool has_word = !word.empty(), has_poly = !poly.empty();
            if (has_word == has_poly) {
                std::cerr << "eval needs exactly one of --word or --poly\n";
                return 2;
            }
            if (has_word && group.empty()) {
                std::cerr << "--word requires --group\n";
                return 2;
            }
            if (has_poly && ring.empty()) {
                std::cerr << "--poly requires --ring\n";
                return 2;
            }
            Strategy strat = strategy == "naive"    ? Strategy::naive
                             : strategy == "pruned" ? Strategy::pruned
                                                    : Strategy::automatic;
            return run_eval(word, poly, group, ring, c_eval, strat);
        }
        if (plan->parsed()) return run_plan(target, epsilon, m_str, check, c_plan);
        if (classes->parsed()) return run_classes(q, ring_variant, c_classes);
        if (scan_cmd->parsed()) return run_scan(scan_words, scan_groups, c_scan);
        if (verify->parsed()) return run_verify(suite, c_verify);
    } catch (const CapExceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
