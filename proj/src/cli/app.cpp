#include "wmw/cli/app.hpp"

#include <CLI11.hpp>
#include <optional>

#include "wmw/cli/csv.hpp"
#include "wmw/error.hpp"

namespace wmw::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct DataOptions {
    std::string x_file;
    std::string y_file;
    std::string data_file;
    std::string group_col;
    std::string value_col;
    std::string x_label;
    std::string y_label;
    char delimiter = ',';
    bool no_header = false;
    bool skip_bad = false;

    void add_to(CLI::App& app) {
        app.add_option("--x", x_file, "CSV file holding the x sample");
        app.add_option("--y", y_file, "CSV file holding the y sample");
        app.add_option("--data", data_file, "single CSV file with a group column");
        app.add_option("--group-col", group_col, "group column (single-file mode)");
        app.add_option("--value-col", value_col, "value column name or 1-based number");
        app.add_option("--x-label", x_label, "group label of the x sample");
        app.add_option("--y-label", y_label, "group label of the y sample");
        app.add_option("--delimiter", delimiter, "field delimiter")->capture_default_str();
        app.add_flag("--no-header", no_header, "files have no header row");
        app.add_flag("--skip-bad", skip_bad, "skip rows whose value does not parse");
    }

    struct Loaded {
        std::vector<double> x;
        std::vector<double> y;
        Json source;
    };

    Loaded load() const {
        CsvSpec spec;
        spec.value_column = value_col;
        spec.delimiter = delimiter;
        spec.header = !no_header;
        spec.skip_bad = skip_bad;

        Loaded l;
        if (!data_file.empty()) {
            if (!x_file.empty() || !y_file.empty()) throw UsageError("--data excludes --x/--y");
            if (group_col.empty()) throw UsageError("--data needs --group-col");
            spec.mode = CsvSpec::Mode::SingleFile;
            spec.group_column = group_col;
            spec.group_x_label = x_label;
            spec.group_y_label = y_label;
            auto g = read_grouped_file(data_file, spec);
            l.x = std::move(g.x);
            l.y = std::move(g.y);
            l.source["mode"] = "single-file";
            l.source["x_label"] = g.x_label;
            l.source["y_label"] = g.y_label;
        } else {
            if (x_file.empty() || y_file.empty()) throw UsageError("give --x and --y, or --data");
            l.x = read_values_file(x_file, spec);
            l.y = read_values_file(y_file, spec);
            l.source["mode"] = "two-files";
        }
        return l;
    }
};

struct TestOptions {
    double a0 = 0.5;
    double alpha = 0.05;
    std::string method = "auto";
    std::string alternative = "two-sided";

    void add_to(CLI::App& app, bool with_a0_method) {
        if (with_a0_method) {
            app.add_option("--a0", a0, "null value of the AUC")->capture_default_str();
            app.add_option("--method", method, "auto, eu, bc or plugin-z")->capture_default_str();
            app.add_option("--alternative", alternative, "two-sided, less or greater")
                ->capture_default_str();
        }
        app.add_option("--alpha", alpha, "significance level")->capture_default_str();
    }

    TestConfig config() const {
        TestConfig cfg{.a0 = a0,
                       .alpha = alpha,
                       .method = parse_method(method),
                       .alternative = parse_alternative(alternative)};
        cfg.check();
        return cfg;
    }
};

Json header(const char* command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

Json warnings_json(const std::vector<std::string>& w) {
    Json j = Json::array();
    for (const auto& s : w) j.push_back(s);
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wilcoxon-Mann-Whitney inference for H0: AUC = A0", "wmw"};
    app.require_subcommand(1);
    bool text = false;
    bool json = false;

    auto add_format = [&](CLI::App* sub) {
        auto* t = sub->add_flag("--text", text, "plain text report");
        auto* j = sub->add_flag("--json", json, "JSON report (default)");
        t->excludes(j);
    };

    DataOptions data_opts;
    TestOptions test_opts;
    std::uint64_t ignored_seed = 0;
    std::size_t grid_k = kDefaultGridK;

    auto* test = app.add_subcommand("test", "test H0: AUC = A0");
    data_opts.add_to(*test);
    test_opts.add_to(*test, true);
    test->add_option("--seed", ignored_seed, "accepted and ignored");
    add_format(test);

    auto* pm = app.add_subcommand("pseudomedian", "pseudomedian confidence interval");
    DataOptions pm_data;
    TestOptions pm_test;
    pm_data.add_to(*pm);
    pm_test.add_to(*pm, false);
    pm->add_option("--grid-k", grid_k, "grid size before refinement")->capture_default_str();
    add_format(pm);

    auto* sim = app.add_subcommand("simulate", "Monte Carlo study");
    TestOptions sim_test;
    sim_test.add_to(*sim, true);
    std::string preset_name;
    std::optional<std::string> gen_x;
    std::optional<std::string> gen_y;
    std::optional<std::string> estimand;
    std::optional<std::size_t> n1;
    std::optional<std::size_t> n2;
    std::optional<std::size_t> reps;
    std::optional<double> true_theta;
    std::uint64_t seed = 1;
    sim->add_option("--preset", preset_name, "paper-s2, equal-normals or tied-normals");
    sim->add_option("--gen-x", gen_x, "x generator, e.g. normal:0,1");
    sim->add_option("--gen-y", gen_y, "y generator");
    sim->add_option("--estimand", estimand, "auc-mean-sd, type1-rate, ci-coverage, pseudomedian-coverage");
    sim->add_option("--n1", n1);
    sim->add_option("--n2", n2);
    sim->add_option("--reps", reps);
    sim->add_option("--seed", seed)->capture_default_str();
    sim->add_option("--true-theta", true_theta, "pseudomedian coverage target");
    sim->add_option("--grid-k", grid_k, "pseudomedian grid size")->capture_default_str();
    add_format(sim);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    Json report;
    try {
        if (test->parsed()) {
            const TestConfig cfg = test_opts.config();
            const auto loaded = data_opts.load();
            const TwoSampleData data = validate(loaded.x, loaded.y);
            const TestResult r = wmw_test(data, cfg);
            report = header("test");
            report["input"] = {{"source", loaded.source},
                               {"n1", data.n1()},
                               {"n2", data.n2()},
                               {"a0", cfg.a0},
                               {"alpha", cfg.alpha},
                               {"alternative", std::string(to_string(cfg.alternative))}};
            report["result"] = to_json(r);
            report["warnings"] = warnings_json(r.warnings);
        } else if (pm->parsed()) {
            const TestConfig cfg = pm_test.config();
            const auto loaded = pm_data.load();
            const TwoSampleData data = validate(loaded.x, loaded.y);
            const PseudomedianResult r = pseudomedian_ci(data, cfg, grid_k);
            report = header("pseudomedian");
            report["input"] = {{"source", loaded.source},
                               {"n1", data.n1()},
                               {"n2", data.n2()},
                               {"alpha", cfg.alpha}};
            report["result"] = to_json(r);
            report["warnings"] = warnings_json(r.warnings);
        } else {
            SimConfig cfg;
            if (!preset_name.empty()) {
                auto p = preset(preset_name);
                if (!p) throw UsageError("unknown preset: " + preset_name);
                cfg = *p;
            } else if (!gen_x || !gen_y) {
                throw UsageError("simulate needs --preset or both --gen-x and --gen-y");
            }
            if (gen_x) cfg.generator_x = parse_generator(*gen_x);
            if (gen_y) cfg.generator_y = parse_generator(*gen_y);
            if (estimand) cfg.estimand = parse_estimand(*estimand);
            if (n1) cfg.n1 = *n1;
            if (n2) cfg.n2 = *n2;
            if (reps) cfg.reps = *reps;
            cfg.seed = seed;
            cfg.true_theta = true_theta;
            cfg.grid_k = grid_k;
            const TestConfig tcfg = sim_test.config();
            cfg.check();

            const SimSummary s = run_simulation(cfg, tcfg);
            report = header("simulate");
            Json input;
            input["preset"] = preset_name.empty() ? Json(nullptr) : Json(preset_name);
            input["generator_x"] = to_string(cfg.generator_x);
            input["generator_y"] = to_string(cfg.generator_y);
            input["n1"] = cfg.n1;
            input["n2"] = cfg.n2;
            input["reps"] = cfg.reps;
            input["seed"] = cfg.seed;
            if (cfg.estimand != Estimand::AucMeanSd) {
                input["a0"] = tcfg.a0;
                input["alpha"] = tcfg.alpha;
                input["method"] = std::string(to_string(tcfg.method));
            }
            report["input"] = input;
            report["result"] = to_json(s);
            report["warnings"] = Json::array();
        }
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "data error: " << e.what() << '\n';
        return kData;
    }

    if (text) {
        out << render_text(report);
    } else {
        out << report.dump(2) << '\n';
    }
    return kOk;
}

}  // namespace wmw::cli
