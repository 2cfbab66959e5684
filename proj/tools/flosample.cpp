// Copyright 2026 The flo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// flosample: experiment runner. Each subcommand writes one CSV plus a
// manifest.json into --out.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "flo/amplitudes.hpp"
#include "flo/bounds.hpp"
#include "flo/cayley.hpp"
#include "flo/circuits.hpp"
#include "flo/interpolation.hpp"
#include "flo/sampling.hpp"
#include "flo/tomography.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace flo;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Run {
    std::string out_dir = ".";
    std::string config;
    std::uint64_t seed = 0;
    json params = json::object();
    json artifacts = json::array();
};

class Csv {
   public:
    Csv(Run& run, const std::string& name, const std::vector<std::string>& header) : run_(run), name_(name) {
        fs::create_directories(run.out_dir);
        file_.open(fs::path(run.out_dir) / name);
        if (!file_) throw Error("cannot open " + (fs::path(run.out_dir) / name).string());
        row(header);
        rows_ = 0;
    }
    ~Csv() { run_.artifacts.push_back({{"path", name_}, {"rows", rows_}}); }

    template <typename... T>
    void add(const T&... v) {
        std::ostringstream s;
        s.precision(17);
        bool first = true;
        ((s << (first ? "" : ",") << v, first = false), ...);
        file_ << s.str() << '\n';
        ++rows_;
    }
    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) file_ << (i ? "," : "") << cells[i];
        file_ << '\n';
        ++rows_;
    }

   private:
    Run& run_;
    std::string name_;
    std::ofstream file_;
    long rows_ = 0;
};

Group parse_sector(const std::string& s) {
    if (s == "passive") return Group::unitary;
    if (s == "active") return Group::orthogonal;
    throw ValidationError("sector must be passive or active, got " + s);
}

// Config keys are option names without dashes; command-line flags win.
void merge_config(CLI::App* sub, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read config " + path);
    const json cfg = json::parse(in);
    if (!cfg.is_object()) throw ValidationError("config must be a JSON object");
    for (const auto& [key, value] : cfg.items()) {
        if (key == "config") throw ValidationError("config may not name another config");
        CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (opt == nullptr) throw ValidationError("unknown config key '" + key + "' for " + sub->get_name());
        if (opt->count() > 0) continue;
        opt->add_result(value.is_string() ? value.get<std::string>() : value.dump());
        opt->run_callback();
    }
}

void write_manifest(const Run& run, const std::string& subcommand) {
    json m;
    m["tool"] = "flosample";
    m["version"] = kVersion;
    m["subcommand"] = subcommand;
    m["seed"] = run.seed;
    m["parameters"] = run.params;
    m["artifacts"] = run.artifacts;
    m["created"] = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::system_clock::now().time_since_epoch())
                       .count();
    std::ofstream(fs::path(run.out_dir) / "manifest.json") << m.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fermionic linear optics sampling experiments"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    Run run;

    auto common = [&](CLI::App* s) {
        s->add_option("--seed", run.seed, "master seed (required)");
        s->add_option("--out", run.out_dir, "output directory");
        s->add_option("--config", run.config, "JSON file with option values");
    };

    // anticoncentration
    int ac_n = 2, ac_layers = 16, ac_trials = 26000;
    double ac_tau = 0.4;
    std::string ac_sector = "active", ac_outcome;
    auto* ac = app.add_subcommand("anticoncentration", "ratio (E X)^2 / E X^2 against brickwall depth");
    ac->add_option("--quadruples", ac_n)->check(CLI::Range(1, 6));
    ac->add_option("--max-layers", ac_layers)->check(CLI::NonNegativeNumber);
    ac->add_option("--trials", ac_trials)->check(CLI::PositiveNumber);
    ac->add_option("--threshold", ac_tau);
    ac->add_option("--sector", ac_sector);
    ac->add_option("--outcome", ac_outcome, "bitstring; default is the first sector element");
    common(ac);

    // sample
    int sm_n = 1, sm_depth = -1;
    long sm_shots = 1000;
    std::string sm_sector = "passive";
    auto* sm = app.add_subcommand("sample", "draw outcomes from one random circuit");
    sm->add_option("--quadruples", sm_n)->check(CLI::Range(1, 6));
    sm->add_option("--shots", sm_shots)->check(CLI::NonNegativeNumber);
    sm->add_option("--sector", sm_sector);
    sm->add_option("--depth", sm_depth, "brickwall layers; omit for a Haar circuit");
    common(sm);

    // bounds-sweep
    int bs_max = 1000;
    std::string bs_sector = "passive";
    auto* bs = app.add_subcommand("bounds-sweep", "closed-form second-moment expressions against their bounds");
    bs->add_option("--sector", bs_sector);
    bs->add_option("--max-N", bs_max)->check(CLI::PositiveNumber);
    common(bs);

    // cayley-tvd
    int ct_d = 2, ct_samples = 100000;
    double ct_delta = 0.05;
    std::string ct_group = "unitary";
    auto* ct = app.add_subcommand("cayley-tvd", "total variation between Haar and deformed Haar measures");
    ct->add_option("--group", ct_group, "unitary or orthogonal");
    ct->add_option("--modes", ct_d)->check(CLI::Range(1, 16));
    ct->add_option("--delta", ct_delta)->check(CLI::Range(0.0, 1.0));
    ct->add_option("--samples", ct_samples)->check(CLI::PositiveNumber);
    common(ct);

    // reduce
    std::string rd_path = "b", rd_sector = "passive";
    int rd_n = 1, rd_nodes = 64, rd_instances = 20;
    double rd_delta = 0.2, rd_rate = 0.0;
    auto* rd = app.add_subcommand("reduce", "recover p at theta = 0 from evaluations along the Cayley path");
    rd->add_option("--path", rd_path, "a (exact, planted rational) or b (physical, float)");
    rd->add_option("--sector", rd_sector);
    rd->add_option("--quadruples", rd_n)->check(CLI::Range(1, 2));
    rd->add_option("--nodes", rd_nodes)->check(CLI::PositiveNumber);
    rd->add_option("--delta", rd_delta)->check(CLI::Range(0.0, 1.0));
    rd->add_option("--corruption-rate", rd_rate)->check(CLI::Range(0.0, 1.0));
    rd->add_option("--instances", rd_instances)->check(CLI::PositiveNumber);
    common(rd);

    // tomography
    int tm_d = 4, tm_trials = 50;
    double tm_eps = 1.0, tm_delta = 0.1;
    long tm_rounds = 0;
    auto* tm = app.add_subcommand("tomography", "simulate the Majorana-correlation tomography protocol");
    tm->add_option("--modes", tm_d)->check(CLI::Range(1, 32));
    tm->add_option("--epsilon", tm_eps);
    tm->add_option("--delta", tm_delta);
    tm->add_option("--trials", tm_trials)->check(CLI::PositiveNumber);
    tm->add_option("--rounds", tm_rounds, "override the required round count");
    common(tm);

    // compile
    int cp_d = 4;
    std::string cp_sector = "passive", cp_style = "brickwall";
    auto* cp = app.add_subcommand("compile", "compile a Haar circuit into a layout and native gates");
    cp->add_option("--sector", cp_sector);
    cp->add_option("--modes", cp_d)->check(CLI::Range(2, 64));
    cp->add_option("--style", cp_style, "brickwall or triangle");
    common(cp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    try {
        if (!run.config.empty()) merge_config(sub, run.config);
        if (sub->get_option("--seed")->count() == 0) throw ValidationError("--seed is required");
        for (const CLI::Option* o : sub->get_options()) {
            if (o->get_lnames().empty() || o->count() == 0) continue;
            const auto& lname = o->get_lnames().front();
            if (lname == "help" || lname == "config") continue;
            run.params[lname] = o->as<std::string>();
        }
        run.params["out"] = run.out_dir;

        if (sub == ac) {
            ExperimentConfig c;
            c.quadruples = ac_n;
            c.layers = ac_layers;
            c.trials = ac_trials;
            c.seed = run.seed;
            c.threshold = ac_tau;
            c.group = parse_sector(ac_sector);
            if (!ac_outcome.empty()) c.outcome = FockState::parse(ac_outcome);
            if (!(ac_tau > 0.0 && ac_tau < 1.0)) throw ValidationError("--threshold must lie in (0, 1)");
            const auto curve = depth_curve(c);
            Csv csv(run, "anticoncentration.csv",
                    {"N", "L", "trials", "mean_X", "mean_X2", "ratio", "stderr_ratio", "seed"});
            int reached = -1;
            for (std::size_t l = 0; l < curve.size(); ++l) {
                const auto& e = curve[l];
                csv.add(ac_n, l, e.trials, e.mean_x, e.mean_x2, e.ratio, e.stderr_ratio, run.seed);
                if (reached < 0 && e.ratio - e.stderr_ratio >= ac_tau) reached = static_cast<int>(l);
            }
            run.params["min_depth"] = reached;
            std::cout << "min depth for threshold " << ac_tau << ": "
                      << (reached < 0 ? std::string("not reached") : std::to_string(reached)) << '\n';
        } else if (sub == sm) {
            const Group g = parse_sector(sm_sector);
            Rng rng(run.seed);
            CircuitSpec spec;
            if (sm_depth >= 0) {
                spec = layout_spec(random_brickwall(g, 4 * sm_n, sm_depth, rng));
            } else {
                spec = g == Group::unitary ? passive_spec(haar_unitary(4 * sm_n, rng))
                                           : active_spec(haar_special_orthogonal(8 * sm_n, rng));
            }
            const auto shots = sample_outcomes(spec, sm_n, static_cast<std::size_t>(sm_shots), rng);
            Csv csv(run, "samples.csv", {"shot", "outcome", "probability"});
            for (std::size_t i = 0; i < shots.size(); ++i)
                csv.add(i, shots[i].str(), output_probability(spec, shots[i]));
        } else if (sub == bs) {
            const Group g = parse_sector(bs_sector);
            if (g == Group::orthogonal && bs_max > 7000) std::cerr << "note: active sweep beyond 7000 is slow\n";
            Csv csv(run, "bounds.csv", {"N", "value", "bound", "margin"});
            int violations = 0;
            for (int n = 1; n <= bs_max; ++n) {
                const ExactRational v =
                    g == Group::unitary ? passive_second_moment_bound(n) : active_second_moment_expression(n);
                const double bound = g == Group::unitary ? 5.7 / n : 16.2 / std::sqrt(3.14159265358979323846 * n);
                const bool ok = g == Group::unitary ? below_passive_bound(v, n) : below_active_bound(v, n);
                if (!ok) ++violations;
                csv.add(n, v.get_d(), bound, bound - v.get_d());
            }
            run.params["violations"] = violations;
            std::cout << "violations: " << violations << '\n';
        } else if (sub == ct) {
            const Group g = ct_group == "unitary"      ? Group::unitary
                            : ct_group == "orthogonal" ? Group::orthogonal
                                                       : throw ValidationError("--group must be unitary or orthogonal");
            Rng rng(run.seed);
            const TvdResult r = tvd_check(g, ct_d, ct_delta, ct_samples, rng);
            Csv csv(run, "cayley_tvd.csv", {"group", "d", "delta", "theta", "tvd_estimate", "bound"});
            csv.add(ct_group, ct_d, ct_delta, 1.0 - ct_delta, r.tvd, r.bound);
            std::cout << "tvd " << r.tvd << (r.exact ? " (integrated)" : " (binned)") << ", bound " << r.bound
                      << '\n';
        } else if (sub == rd) {
            if (rd_path != "a" && rd_path != "b") throw ValidationError("--path must be a or b");
            const Group g = parse_sector(rd_sector);
            Csv csv(run, "reduce.csv",
                    {"path", "N", "delta", "L", "corruptions", "recovered_p0", "true_p0", "abs_error"});
            for (int i = 0; i < rd_instances; ++i) {
                Rng rng = derived_stream(run.seed, static_cast<std::uint64_t>(i));
                try {
                    const auto r = reduction_demo(g, rd_n, rd_delta, rd_nodes, rd_rate, rd_path[0], rng);
                    csv.add(rd_path, rd_n, rd_delta, rd_nodes, r.corruptions, r.recovered_p0, r.true_p0, r.abs_error);
                } catch (const RecoveryFailure& e) {
                    csv.add(rd_path, rd_n, rd_delta, rd_nodes, std::lround(rd_rate * rd_nodes), "failed", "", "");
                }
            }
        } else if (sub == tm) {
            const long r = tm_rounds > 0 ? tm_rounds : required_rounds(tm_d, tm_eps, tm_delta);
            Csv csv(run, "tomography.csv", {"d", "r", "trial", "op_norm_error", "diamond_bound", "success_flag"});
            int success = 0;
            for (int t = 0; t < tm_trials; ++t) {
                Rng rng = derived_stream(run.seed, static_cast<std::uint64_t>(t));
                const RMatrix o = haar_special_orthogonal(2 * tm_d, rng);
                const auto est = estimate(simulate_rounds(o, r, rng()));
                const double err = operator_norm(est.o_hat - o);
                const double db = diamond_bound(o, est.o_hat);
                const bool ok = db <= tm_eps;
                success += ok;
                csv.add(tm_d, r, t, err, db, ok ? 1 : 0);
            }
            const double rate = static_cast<double>(success) / tm_trials;
            run.params["rounds"] = r;
            run.params["success_rate"] = rate;
            std::cout << "rounds " << r << ", success rate " << rate << '\n';
        } else if (sub == cp) {
            const Group g = parse_sector(cp_sector);
            const LayoutStyle style = cp_style == "brickwall"  ? LayoutStyle::brickwall
                                      : cp_style == "triangle" ? LayoutStyle::triangle
                                                               : throw ValidationError("--style must be brickwall or triangle");
            Rng rng(run.seed);
            const CircuitLayout layout = g == Group::unitary ? decompose_passive(haar_unitary(cp_d, rng), style)
                                                             : decompose_active(haar_special_orthogonal(2 * cp_d, rng), style);
            fs::create_directories(run.out_dir);
            std::ofstream(fs::path(run.out_dir) / "layout.json") << layout_to_json(layout) << '\n';
            run.artifacts.push_back({{"path", "layout.json"}});
            Csv csv(run, "compile.csv", {"layer", "wire", "alpha", "phi"});
            for (std::size_t l = 0; l < layout.layers.size(); ++l)
                for (const auto& gv : layout.layers[l]) csv.add(l + 1, gv.k, gv.alpha, gv.phi);
            std::cout << "depth " << layout.depth() << ", givens " << layout.givens_count() << '\n';
        }
    } catch (const flo::Error& e) {
        std::cerr << name << ": " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << name << ": " << e.what() << '\n';
        return 2;
    }
    write_manifest(run, name);
    return 0;
}
