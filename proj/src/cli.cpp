#include "mstd/cli.hpp"

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mstd/constructions.hpp"
#include "mstd/io.hpp"
#include "mstd/search.hpp"

namespace mstd {

namespace {

using nlohmann::json;

json null_or(const std::optional<std::int64_t>& v) {
    return v.has_value() ? json(*v) : json(nullptr);
}

void emit(std::ostream& out, const std::string& format, const json& doc,
          const std::vector<std::pair<std::string, std::string>>& csv_rows) {
    if (format == "json") {
        out << doc.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        for (const auto& [header, row] : csv_rows) {
            out << header << "\n" << row << "\n";
        }
        return;
    }
    // text: flattened key: value lines
    const std::function<void(const std::string&, const json&)> walk =
        [&](const std::string& prefix, const json& node) {
            if (node.is_object()) {
                for (const auto& [key, value] : node.items()) {
                    walk(prefix.empty() ? key : prefix + "." + key, value);
                }
            } else {
                out << prefix << ": " << node.dump() << "\n";
            }
        };
    walk("", doc);
}

std::string csv_escape(const std::string& s) { return "\"" + s + "\""; }

struct VerifyArgs {
    std::string set_literal;
    std::vector<std::string> checks;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> q;
    std::optional<std::int64_t> n;
};

std::int64_t require(const std::optional<std::int64_t>& v, const char* flag,
                     const char* check) {
    if (!v.has_value()) {
        throw parameter_error(std::string("check '") + check + "' requires " + flag);
    }
    return *v;
}

int run_verify(const VerifyArgs& args, const std::string& format, std::ostream& out) {
    const IntSet A = parse_set(args.set_literal);
    json results = json::array();
    bool all_pass = true;
    std::vector<std::pair<std::string, std::string>> csv_rows;
    for (const std::string& check : args.checks) {
        json r{{"check", check}};
        bool pass = false;
        if (check == "mstd") {
            const auto sums = sumset(A, A).size();
            const auto diffs = sumset(A, negate(A)).size();
            pass = sums > diffs;
            r["sum_cardinality"] = sums;
            r["diff_cardinality"] = diffs;
        } else if (check == "bimstd") {
            pass = is_bi_mstd(A);
            r["complement"] = to_json(complement_in_hull(A));
        } else if (check == "kgen") {
            const std::int64_t k = require(args.k, "--k", "kgen");
            pass = is_k_generational(A, k);
            r["k"] = k;
        } else if (check == "super") {
            const std::int64_t q = require(args.q, "--q", "super");
            pass = true;
            json quads = json::array();
            for (const SdQuad& quad : quadruples(q)) {
                const auto big =
                    signed_combination(A, static_cast<std::uint64_t>(quad.s),
                                       static_cast<std::uint64_t>(quad.d))
                        .size();
                const auto small =
                    signed_combination(A, static_cast<std::uint64_t>(quad.sigma),
                                       static_cast<std::uint64_t>(quad.delta))
                        .size();
                json e = to_json(quad);
                e["pass"] = big > small;
                quads.push_back(e);
                pass = pass && big > small;
            }
            r["q"] = q;
            r["quads"] = quads;
        } else if (check == "rich" || check == "affluent") {
            const std::int64_t k = require(args.k, "--k", check.c_str());
            const std::int64_t n = require(args.n, "--n", check.c_str());
            const RichContext ctx{A, n, k};
            pass = check == "rich" ? is_rich(ctx) : is_affluent(ctx);
            r["k"] = k;
            r["n"] = n;
        } else {
            throw parameter_error("unknown check '" + check +
                                  "' (expected mstd|bimstd|kgen|super|rich|affluent)");
        }
        r["pass"] = pass;
        all_pass = all_pass && pass;
        results.push_back(r);
        csv_rows.emplace_back("check,pass", check + "," + (pass ? "true" : "false"));
    }
    json doc{{"command", "verify"},
             {"config",
              {{"set", args.set_literal},
               {"checks", args.checks},
               {"k", null_or(args.k)},
               {"q", null_or(args.q)},
               {"n", null_or(args.n)},
               {"format", format}}},
             {"set", to_json(A)},
             {"results", results},
             {"pass", all_pass}};
    emit(out, format, doc, csv_rows);
    return all_pass ? 0 : 1;
}

struct ConstructArgs {
    std::string kind;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> q;
    std::optional<std::int64_t> x;
    std::string quad_text;
};

int run_construct(const ConstructArgs& args, const std::string& format, std::ostream& out) {
    json doc{{"command", "construct"}};
    json config{{"kind", args.kind},
                {"k", null_or(args.k)},
                {"q", null_or(args.q)},
                {"x", null_or(args.x)},
                {"quad", args.quad_text.empty() ? json(nullptr) : json(args.quad_text)},
                {"format", format}};
    json checks = json::array();
    bool verified = true;
    IntSet A;
    const auto add_check = [&](const std::string& name, bool pass) {
        checks.push_back(json{{"name", name}, {"pass", pass}});
        verified = verified && pass;
    };
    if (args.kind == "kgen") {
        const std::int64_t k = require(args.k, "--k", "kgen");
        A = kgen_set(k);
        add_check("cardinality", static_cast<std::int64_t>(A.size()) == 6 * k + 5);
        add_check("rich_interval",
                  contains_interval(sumset(A, A), 6 * k + 1, 30 * k + 3));
        add_check("k_generational", is_k_generational(A, k));
    } else if (args.kind == "super") {
        const std::int64_t q = require(args.q, "--q", "super");
        A = super_kgen_set(q);
        const std::int64_t k = q * q;
        add_check("cardinality", static_cast<std::int64_t>(A.size()) == q * q + 6);
        add_check("middle_coverage", contains_interval(sumset(A, A), k + 1, 5 * k + 5));
        for (const SdQuad& quad : quadruples(q)) {
            const auto big = signed_combination(A, static_cast<std::uint64_t>(quad.s),
                                                static_cast<std::uint64_t>(quad.d))
                                 .size();
            const auto small =
                signed_combination(A, static_cast<std::uint64_t>(quad.sigma),
                                   static_cast<std::uint64_t>(quad.delta))
                    .size();
            add_check("quad " + std::to_string(quad.s) + "," + std::to_string(quad.d) + "," +
                          std::to_string(quad.sigma) + "," + std::to_string(quad.delta),
                      big > small);
        }
    } else if (args.kind == "diff") {
        if (!args.x.has_value()) {
            throw parameter_error("construct diff requires --x");
        }
        const SdQuad quad =
            args.quad_text.empty() ? SdQuad{2, 0, 1, 1} : parse_quad(args.quad_text);
        const DiffScanResult scan = find_diff_fringe(*args.x, quad);
        A = realize_affluent_set(scan.fringe);
        const std::int64_t achieved =
            static_cast<std::int64_t>(signed_combination(A, static_cast<std::uint64_t>(quad.s),
                                                         static_cast<std::uint64_t>(quad.d))
                                          .size()) -
            static_cast<std::int64_t>(
                signed_combination(A, static_cast<std::uint64_t>(quad.sigma),
                                   static_cast<std::uint64_t>(quad.delta))
                    .size());
        doc["fringe"] = to_json(scan.fringe);
        doc["k_hit"] = scan.k_hit;
        doc["achieved_difference"] = achieved;
        add_check("difference", achieved == *args.x);
    } else {
        throw parameter_error("unknown construction '" + args.kind +
                              "' (expected kgen|super|diff)");
    }
    doc["config"] = config;
    doc["set"] = to_json(A);
    doc["cardinality"] = A.size();
    doc["verification"] = json{{"verified", verified}, {"checks", checks}};
    emit(out, format, doc,
         {{"kind,cardinality,verified,set",
           args.kind + "," + std::to_string(A.size()) + "," + (verified ? "true" : "false") +
               "," + csv_escape(format_set(A))}});
    return verified ? 0 : 1;
}

struct SearchArgs {
    std::string kind;
    std::optional<std::int64_t> n;
    std::uint64_t trials = 100000;
    std::int64_t r_max = 90;
    double p = 0.27;
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
};

int run_search(const SearchArgs& args, const std::string& format, std::ostream& out,
               std::ostream& err) {
    const bool stochastic = args.kind == "logratio" || args.kind == "density";
    if (stochastic && !args.seed.has_value()) {
        throw parameter_error("search " + args.kind + " requires --seed (stochastic runs "
                              "must be reproducible)");
    }
    SearchConfig cfg;
    cfg.seed = args.seed.value_or(0);
    cfg.trials = args.trials;
    cfg.r_max = args.r_max;
    cfg.p = args.p;
    cfg.workers = args.workers;

    json doc{{"command", "search"}};
    json config{{"kind", args.kind},
                {"n", null_or(args.n)},
                {"trials", cfg.trials},
                {"r_max", cfg.r_max},
                {"p", cfg.p},
                {"seed", cfg.seed},
                {"workers", cfg.workers},
                {"format", format}};
    std::vector<std::pair<std::string, std::string>> csv_rows;
    const auto start = std::chrono::steady_clock::now();
    if (args.kind == "logratio") {
        const SearchReport report = search_log_ratio(cfg);
        doc["report"] = to_json(report);
        err << "wall_time_s=" << report.wall_time_seconds << "\n";
        csv_rows.emplace_back(
            "kind,trials,r_max,p,seed,workers,best_value,count_above_threshold,"
            "degenerate_skips",
            "logratio," + std::to_string(cfg.trials) + "," + std::to_string(cfg.r_max) + "," +
                std::to_string(cfg.p) + "," + std::to_string(cfg.seed) + "," +
                std::to_string(cfg.workers) + "," +
                (report.best_value ? std::to_string(*report.best_value) : "") + "," +
                std::to_string(report.count_above_threshold) + "," +
                std::to_string(report.degenerate_skips));
    } else if (args.kind == "density") {
        if (!args.n.has_value()) {
            throw parameter_error("search density requires --n");
        }
        const double density = mstd_density(*args.n, cfg);
        doc["report"] = json{{"density", density}};
        csv_rows.emplace_back("kind,n,trials,p,seed,workers,density",
                              "density," + std::to_string(*args.n) + "," +
                                  std::to_string(cfg.trials) + "," + std::to_string(cfg.p) +
                                  "," + std::to_string(cfg.seed) + "," +
                                  std::to_string(cfg.workers) + "," + std::to_string(density));
    } else if (args.kind == "minmstd") {
        if (!args.n.has_value()) {
            throw parameter_error("search minmstd requires --n");
        }
        const auto result = min_mstd_cardinality(*args.n);
        doc["report"] = json{{"minimum_cardinality", null_or(result)}};
        csv_rows.emplace_back("kind,n,minimum_cardinality",
                              "minmstd," + std::to_string(*args.n) + "," +
                                  (result ? std::to_string(*result) : ""));
    } else if (args.kind == "bimstd") {
        if (!args.n.has_value()) {
            throw parameter_error("search bimstd requires --n");
        }
        const auto witnesses = exhaustive_bi_mstd(*args.n);
        json arr = json::array();
        std::string csv_sets;
        for (const IntSet& w : witnesses) {
            arr.push_back(to_json(w));
            if (!csv_sets.empty()) {
                csv_sets += ";";
            }
            csv_sets += format_set(w);
        }
        doc["report"] = json{{"count", witnesses.size()}, {"witnesses", arr}};
        csv_rows.emplace_back("kind,n,count,witnesses",
                              "bimstd," + std::to_string(*args.n) + "," +
                                  std::to_string(witnesses.size()) + "," +
                                  csv_escape(csv_sets));
    } else {
        throw parameter_error("unknown search '" + args.kind +
                              "' (expected logratio|bimstd|density|minmstd)");
    }
    if (args.kind != "logratio") {
        err << "wall_time_s="
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
            << "\n";
    }
    doc["config"] = config;
    emit(out, format, doc, csv_rows);
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sumset-algebra toolkit: verify, construct, and search MSTD "
                 "(more-sums-than-differences) sets"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    VerifyArgs vargs;
    CLI::App* verify = app.add_subcommand("verify", "Run predicates against a set literal");
    verify->add_option("--set", vargs.set_literal, "Set literal, e.g. \"{0,2,3,4}\"")
        ->required();
    verify->add_option("--check", vargs.checks,
                       "Checks to run: mstd|bimstd|kgen|super|rich|affluent")
        ->required()
        ->take_all();
    std::int64_t vk = 0, vq = 0, vn = 0;
    CLI::Option* vk_opt = verify->add_option("--k", vk, "Generation count / fringe width");
    CLI::Option* vq_opt = verify->add_option("--q", vq, "Super-generation bound");
    CLI::Option* vn_opt = verify->add_option("--n", vn, "Ambient right endpoint");

    ConstructArgs cargs;
    CLI::App* construct = app.add_subcommand("construct", "Build a set from a recipe");
    construct->add_option("kind", cargs.kind, "kgen|super|diff")->required();
    std::int64_t ck = 0, cq = 0, cx = 0;
    CLI::Option* ck_opt = construct->add_option("--k", ck, "Generations (kgen)");
    CLI::Option* cq_opt = construct->add_option("--q", cq, "Fold bound (super)");
    CLI::Option* cx_opt = construct->add_option("--x", cx, "Target difference (diff)");
    construct->add_option("--quad", cargs.quad_text, "Comparison quadruple s,d,sigma,delta");

    SearchArgs sargs;
    CLI::App* search = app.add_subcommand("search", "Exhaustive or randomized searches");
    search->add_option("kind", sargs.kind, "logratio|bimstd|density|minmstd")->required();
    std::int64_t sn = 0;
    std::uint64_t sseed = 0;
    CLI::Option* sn_opt = search->add_option("--n", sn, "Ambient right endpoint");
    search->add_option("--trials", sargs.trials, "Sample count")->capture_default_str();
    search->add_option("--r-max", sargs.r_max, "Fringe sampling right endpoint")
        ->capture_default_str();
    search->add_option("--p", sargs.p, "Per-element inclusion probability")
        ->capture_default_str();
    CLI::Option* seed_opt = search->add_option("--seed", sseed, "RNG seed");
    search->add_option("--workers", sargs.workers, "Worker threads")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) {
            if (vk_opt->count() > 0) {
                vargs.k = vk;
            }
            if (vq_opt->count() > 0) {
                vargs.q = vq;
            }
            if (vn_opt->count() > 0) {
                vargs.n = vn;
            }
            return run_verify(vargs, format, out);
        }
        if (construct->parsed()) {
            if (ck_opt->count() > 0) {
                cargs.k = ck;
            }
            if (cq_opt->count() > 0) {
                cargs.q = cq;
            }
            if (cx_opt->count() > 0) {
                cargs.x = cx;
            }
            return run_construct(cargs, format, out);
        }
        if (search->parsed()) {
            if (sn_opt->count() > 0) {
                sargs.n = sn;
            }
            if (seed_opt->count() > 0) {
                sargs.seed = sseed;
            }
            return run_search(sargs, format, out, err);
        }
    } catch (const parameter_error& e) {
        err << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const span_error& e) {
        err << "span error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace mstd
